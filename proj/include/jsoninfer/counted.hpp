//  Copyright 2026 The jsoninfer Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef JSONINFER_COUNTED_HPP_
#define JSONINFER_COUNTED_HPP_

#include <cstdint>

#include "jsoninfer/typelike.hpp"

namespace jsoninfer {

// Wraps a constraint with the number of samples that produced it. Merging
// adds counts, so merge is deliberately not idempotent: a <> a != a.
template <class T>
struct Counted {
  std::uint64_t count = 0;
  T constraint{};

  friend bool operator==(const Counted&, const Counted&) = default;
};

namespace detail {
inline std::uint64_t counted_sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return ~std::uint64_t{0};
  return out;
}
}  // namespace detail

template <class T>
Counted<T> merge(const Counted<T>& a, const Counted<T>& b, const AlgebraConfig& cfg = {}) {
  return Counted<T>{detail::counted_sat_add(a.count, b.count),
                    merge(a.constraint, b.constraint, cfg)};
}

template <class T>
bool is_beyond(const Counted<T>& c) {
  return is_beyond(c.constraint);
}

template <class T>
TyCost type_cost(const Counted<T>& c) {
  return type_cost(c.constraint);
}

template <class T, class V>
bool check(const Counted<T>& c, const V& v) {
  return check(c.constraint, v);
}

template <class T, class Infer, class V>
Counted<T> counted_infer(Infer&& infer, const V& v) {
  return Counted<T>{1, infer(v)};
}

}  // namespace jsoninfer

#endif  // JSONINFER_COUNTED_HPP_
