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

#include "minplus/triangle/orientation.h"

#include <algorithm>
#include <utility>

#include "minplus/core/checked.h"
#include "minplus/triangle/constraints.h"

namespace minplus {

namespace {

TriangleInstance Apply(const TriangleInstance& x, OrientOp op) {
  if (op == OrientOp::kRotate) {
    return TriangleInstance{x.C, x.B.Transposed().Negated(), x.A};
  }
  return TriangleInstance{x.B.Transposed(), x.A.Transposed(),
                          x.C.Transposed()};
}

std::vector<int64_t> Negate(std::vector<int64_t> x) {
  for (auto& e : x) e = CheckedNeg(e);
  return x;
}

}  // namespace

const std::vector<Orientation>& AllOrientations() {
  using O = OrientOp;
  static const std::vector<Orientation> all = {
      {}, {O::kRotate}, {O::kTranspose}, {O::kRotate, O::kTranspose},
      {O::kTranspose, O::kRotate}, {O::kRotate, O::kTranspose, O::kRotate}};
  return all;
}

TriangleInstance Orient(const TriangleInstance& inst, const Orientation& o) {
  TriangleInstance x = inst;
  for (OrientOp op : o) x = Apply(x, op);
  return x;
}

LowRankInstance Orient(const LowRankInstance& lr, const Orientation& o) {
  LowRankInstance x = lr;
  for (OrientOp op : o) {
    x.inst = Apply(x.inst, op);
    if (op == OrientOp::kRotate) {
      if (x.role == Role::kA) {
        x.role = Role::kC;
      } else if (x.role == Role::kC) {
        x.role = Role::kA;
      } else {
        x.d = NegateDecomposition(TransposeDecomposition(x.d));
      }
    } else {
      x.d = TransposeDecomposition(x.d);
      if (x.role == Role::kA) {
        x.role = Role::kB;
      } else if (x.role == Role::kB) {
        x.role = Role::kA;
      }
    }
  }
  return x;
}

Orientation ToCRole(Role role) {
  switch (role) {
    case Role::kA:
      return {OrientOp::kRotate};
    case Role::kB:
      return {OrientOp::kTranspose, OrientOp::kRotate};
    case Role::kC:
      break;
  }
  return {};
}

EdgeFlags Unorient(const EdgeFlags& f, const Orientation& o) {
  EdgeFlags x = f;
  for (auto it = o.rbegin(); it != o.rend(); ++it) {
    if (*it == OrientOp::kRotate) {
      x = EdgeFlags{x.c, x.b.Transposed(), x.a};
    } else {
      x = EdgeFlags{x.b.Transposed(), x.a.Transposed(), x.c.Transposed()};
    }
  }
  return x;
}

Triple Unorient(const Triple& t, const Orientation& o) {
  Triple x = t;
  for (auto it = o.rbegin(); it != o.rend(); ++it) {
    if (*it == OrientOp::kRotate) {
      std::swap(x[1], x[2]);
    } else {
      std::swap(x[0], x[2]);
    }
  }
  return x;
}

PotentialAdjustment Unorient(const PotentialAdjustment& adj,
                             const Orientation& o) {
  PotentialAdjustment x = adj;
  for (auto it = o.rbegin(); it != o.rend(); ++it) {
    if (*it == OrientOp::kRotate) {
      std::swap(x.v, x.w);
    } else {
      PotentialAdjustment y;
      y.u = x.w;
      y.v = Negate(x.v);
      y.w = x.u;
      y.adjusted = std::move(x.adjusted);
      x = std::move(y);
    }
    x.adjusted = Apply(x.adjusted, *it);
  }
  return x;
}

ReductionOutput Unorient(ReductionOutput out, const Orientation& o) {
  if (o.empty()) return out;
  for (ReducedInstance& ri : out.instances) {
    ri.adjustment = Unorient(ri.adjustment, o);
    // The joint entry set is not invariant under negating B.
    if (ri.tags.doubling) {
      IntegerSet joint = JointEntrySet(ri.adjustment.adjusted);
      ri.tags.doubling = DoublingConstant(joint);
      ri.tags.heuristic_exceeded =
          ri.tags.doubling_limit &&
          !ri.tags.doubling->AtMost(*ri.tags.doubling_limit);
    }
  }
  for (Triple& t : out.triples) t = Unorient(t, o);
  return out;
}

}  // namespace minplus
