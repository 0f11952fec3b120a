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

#ifndef JSONINFER_TYPELIKE_HPP_
#define JSONINFER_TYPELIKE_HPP_

#include <compare>
#include <cstdint>
#include <set>

#include "jsoninfer/json_value.hpp"

namespace jsoninfer {

// Knobs that parametrize the merge algebra itself.
struct AlgebraConfig {
  std::size_t enum_limit = 10;
};

// Non-negative cost with an absorbing infinity. Addition saturates.
class TyCost {
 public:
  constexpr TyCost() = default;
  constexpr explicit TyCost(std::uint64_t n) : v_(n) {}

  static constexpr TyCost infinite() { return TyCost(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::uint64_t value() const { return v_; }

  friend constexpr TyCost operator+(TyCost a, TyCost b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    std::uint64_t sum = a.v_ + b.v_;
    if (sum < a.v_ || sum == kInf) return infinite();
    return TyCost(sum);
  }
  TyCost& operator+=(TyCost o) { return *this = *this + o; }

  friend constexpr bool operator==(TyCost, TyCost) = default;
  friend constexpr auto operator<=>(TyCost, TyCost) = default;

 private:
  static constexpr std::uint64_t kInf = ~std::uint64_t{0};
  std::uint64_t v_ = 0;
};

// The reference constraint with no structure beyond the required laws:
// either the set of values seen so far, or the absorbing Full element.
struct FreeType {
  bool full = false;
  std::set<JsonValue> captured;

  static FreeType full_value() { return FreeType{true, {}}; }
  static FreeType of(std::set<JsonValue> vs) { return FreeType{false, std::move(vs)}; }

  friend bool operator==(const FreeType& a, const FreeType& b) {
    if (a.full != b.full) return false;
    return a.full || a.captured == b.captured;
  }
};

FreeType merge(const FreeType& a, const FreeType& b, const AlgebraConfig& = {});
bool is_beyond(const FreeType& t);
TyCost type_cost(const FreeType& t);
FreeType free_infer(const JsonValue& v);
bool check(const FreeType& t, const JsonValue& v);

// Merge of all inferred constraints, starting from the neutral element.
// Commutativity and associativity of merge make the result independent of
// sample order and grouping.
template <class T, class Range, class Infer>
T fold_infer(const Range& samples, Infer&& infer, const AlgebraConfig& cfg = {}) {
  T acc{};
  for (const auto& s : samples) acc = merge(acc, infer(s), cfg);
  return acc;
}

}  // namespace jsoninfer

#endif  // JSONINFER_TYPELIKE_HPP_
