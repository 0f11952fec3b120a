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

#ifndef JSONINFER_SCALAR_CONSTRAINTS_HPP_
#define JSONINFER_SCALAR_CONSTRAINTS_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "jsoninfer/typelike.hpp"

namespace jsoninfer {

// Two-point constraint for booleans and null: any observation flips Absent
// (the neutral element) to Present (the sole beyond element).
enum class PresenceConstraint : std::uint8_t { Absent, Present };

PresenceConstraint merge(PresenceConstraint a, PresenceConstraint b, const AlgebraConfig& = {});
bool is_beyond(PresenceConstraint c);
TyCost type_cost(PresenceConstraint c);
PresenceConstraint presence_infer(bool);
PresenceConstraint presence_infer(std::nullptr_t);
bool check(PresenceConstraint c, bool);
bool check(PresenceConstraint c, std::nullptr_t);

// Never is neutral, Float is beyond and absorbs Int.
enum class NumberConstraint : std::uint8_t { Never, Int, Float };

NumberConstraint merge(NumberConstraint a, NumberConstraint b, const AlgebraConfig& = {});
bool is_beyond(NumberConstraint c);
TyCost type_cost(NumberConstraint c);
NumberConstraint number_infer(const JsonNumber& n);
bool check(NumberConstraint c, const JsonNumber& n);

struct StringConstraint {
  enum class Kind : std::uint8_t { Never, Date, Email, Enum, Any };

  Kind kind = Kind::Never;
  std::set<std::string> values;  // non-empty iff kind == Enum

  static StringConstraint never() { return {}; }
  static StringConstraint date() { return {Kind::Date, {}}; }
  static StringConstraint email() { return {Kind::Email, {}}; }
  static StringConstraint any() { return {Kind::Any, {}}; }
  static StringConstraint enumeration(std::set<std::string> vs) {
    return {Kind::Enum, std::move(vs)};
  }

  friend bool operator==(const StringConstraint&, const StringConstraint&) = default;
};

StringConstraint merge(const StringConstraint& a, const StringConstraint& b,
                       const AlgebraConfig& cfg = {});
bool is_beyond(const StringConstraint& c);
TyCost type_cost(const StringConstraint& c);
StringConstraint string_infer(std::string_view s);
bool check(const StringConstraint& c, std::string_view s);

// Pinned validators: strict YYYY-MM-DD with a real calendar-day check, and a
// syntactic local@domain email check (no spaces, dot-separated labels).
bool is_valid_date(std::string_view s);
bool is_valid_email(std::string_view s);

}  // namespace jsoninfer

#endif  // JSONINFER_SCALAR_CONSTRAINTS_HPP_
