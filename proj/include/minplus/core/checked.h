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

#ifndef MINPLUS_CORE_CHECKED_H_
#define MINPLUS_CORE_CHECKED_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minplus {

// Overflow in any of these throws; weights are assumed polynomially bounded,
// so hitting the limit always means a bug or a hostile input.
inline int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " + " + std::to_string(b));
  }
  return r;
}

inline int64_t CheckedSub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " - " + std::to_string(b));
  }
  return r;
}

inline int64_t CheckedMul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in " + std::to_string(a) +
                              " * " + std::to_string(b));
  }
  return r;
}

inline int64_t CheckedNeg(int64_t a) { return CheckedSub(0, a); }

// Floor division and non-negative remainder for a positive divisor.
inline int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline int64_t FloorMod(int64_t a, int64_t b) { return a - FloorDiv(a, b) * b; }

inline int64_t CeilDiv(int64_t a, int64_t b) { return -FloorDiv(-a, b); }

// Smallest L with 2^L >= x, for x >= 1.
inline int CeilLog2(int64_t x) {
  int l = 0;
  while ((int64_t{1} << l) < x) ++l;
  return l;
}

}  // namespace minplus

#endif  // MINPLUS_CORE_CHECKED_H_
