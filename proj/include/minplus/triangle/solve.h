// Copyright 2026 The minplus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINPLUS_TRIANGLE_SOLVE_H_
#define MINPLUS_TRIANGLE_SOLVE_H_

#include <cstdint>
#include <map>
#include <string>

#include "minplus/core/brute.h"
#include "minplus/core/triangle.h"
#include "minplus/triangle/orientation.h"
#include "minplus/triangle/pipeline.h"

namespace minplus {

// Edge flags from one polynomial matrix product per matrix role. Entries
// are reduced modulo the smallest m that keeps the relevant sums and C
// entries distinct, so the degree tracks |X + X| rather than the value
// range. Throws std::domain_error when no modulus below 2^21 works.
EdgeFlags SolveUniformLowDoubling(const TriangleInstance& inst);

// Flags for an instance with a decomposition of one of its matrices.
// `counters`, when given, receives the reduction counters.
EdgeFlags SolveLowRank(const LowRankInstance& lr,
                       const TriangleKnobs& knobs = {},
                       std::map<std::string, int64_t>* counters = nullptr);

struct TriangleWitnesses {
  WitnessLists a;  // (i,k) -> j
  WitnessLists b;  // (k,j) -> i
  WitnessLists c;  // (i,j) -> k
  int64_t solver_calls = 0;
};

// Repetitions per sampling level so that every witness of an edge with at
// most t of them is isolated at least once, except with probability delta
// over all `edges` edges.
int64_t ListingRepetitions(int64_t edges, int t, double delta);

// Up to t witnesses k of every C edge (i,j), each checked by substitution.
// Witnesses are isolated by sampling the middle index at rates 1, 1/2, ...,
// and decoded from one solver call per bit; sampling stops once every
// flagged edge has t witnesses. Only A and B are restricted, so C keeps any
// structure the solver relies on.
WitnessLists ListThirdEdgeWitnesses(const TriangleInstance& inst, int t,
                                    const TriangleSolver& solver,
                                    uint64_t seed, double delta = 1e-3,
                                    int64_t* calls = nullptr);

// Up to t witnesses per edge of all three matrices.
TriangleWitnesses ListWitnessesExactTriangle(const TriangleInstance& inst,
                                             int t,
                                             const TriangleSolver& solver,
                                             uint64_t seed,
                                             double delta = 1e-3);

}  // namespace minplus

#endif  // MINPLUS_TRIANGLE_SOLVE_H_
