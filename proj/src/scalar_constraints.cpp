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

#include "jsoninfer/scalar_constraints.hpp"

#include <algorithm>
#include <cctype>

namespace jsoninfer {

PresenceConstraint merge(PresenceConstraint a, PresenceConstraint b, const AlgebraConfig&) {
  return (a == PresenceConstraint::Present || b == PresenceConstraint::Present)
             ? PresenceConstraint::Present
             : PresenceConstraint::Absent;
}

bool is_beyond(PresenceConstraint c) { return c == PresenceConstraint::Present; }

TyCost type_cost(PresenceConstraint c) {
  return c == PresenceConstraint::Absent ? TyCost(0) : TyCost(1);
}

PresenceConstraint presence_infer(bool) { return PresenceConstraint::Present; }
PresenceConstraint presence_infer(std::nullptr_t) { return PresenceConstraint::Present; }

bool check(PresenceConstraint c, bool) { return c == PresenceConstraint::Present; }
bool check(PresenceConstraint c, std::nullptr_t) { return c == PresenceConstraint::Present; }

NumberConstraint merge(NumberConstraint a, NumberConstraint b, const AlgebraConfig&) {
  return std::max(a, b);
}

bool is_beyond(NumberConstraint c) { return c == NumberConstraint::Float; }

TyCost type_cost(NumberConstraint c) {
  return c == NumberConstraint::Never ? TyCost(0) : TyCost(1);
}

NumberConstraint number_infer(const JsonNumber& n) {
  return n.integral ? NumberConstraint::Int : NumberConstraint::Float;
}

bool check(NumberConstraint c, const JsonNumber& n) {
  switch (c) {
    case NumberConstraint::Never: return false;
    case NumberConstraint::Int: return n.integral;
    case NumberConstraint::Float: return true;
  }
  return false;
}

StringConstraint merge(const StringConstraint& a, const StringConstraint& b,
                       const AlgebraConfig& cfg) {
  using Kind = StringConstraint::Kind;
  if (a.kind == Kind::Never) return b;
  if (b.kind == Kind::Never) return a;
  if (a.kind == Kind::Any || b.kind == Kind::Any) return StringConstraint::any();
  if (a.kind == Kind::Date && b.kind == Kind::Date) return StringConstraint::date();
  if (a.kind == Kind::Email && b.kind == Kind::Email) return StringConstraint::email();
  if (a.kind == Kind::Enum && b.kind == Kind::Enum) {
    std::set<std::string> vs = a.values;
    vs.insert(b.values.begin(), b.values.end());
    if (vs.size() <= cfg.enum_limit) return StringConstraint::enumeration(std::move(vs));
  }
  return StringConstraint::any();
}

bool is_beyond(const StringConstraint& c) { return c.kind == StringConstraint::Kind::Any; }

TyCost type_cost(const StringConstraint& c) {
  return c.kind == StringConstraint::Kind::Never ? TyCost(0) : TyCost(1);
}

StringConstraint string_infer(std::string_view s) {
  if (is_valid_date(s)) return StringConstraint::date();
  if (is_valid_email(s)) return StringConstraint::email();
  return StringConstraint::enumeration({std::string(s)});
}

bool check(const StringConstraint& c, std::string_view s) {
  using Kind = StringConstraint::Kind;
  switch (c.kind) {
    case Kind::Never: return false;
    case Kind::Any: return true;
    case Kind::Date: return is_valid_date(s);
    case Kind::Email: return is_valid_email(s);
    case Kind::Enum: return c.values.count(std::string(s)) > 0;
  }
  return false;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap_year(y)) return 29;
  return kDays[m - 1];
}

bool is_local_char(unsigned char c) {
  if (std::isalnum(c)) return true;
  static constexpr std::string_view kAllowed = "!#$%&'*+-/=?^_`{|}~";
  return kAllowed.find(static_cast<char>(c)) != std::string_view::npos;
}

bool valid_local_part(std::string_view local) {
  if (local.empty() || local.size() > 64) return false;
  if (local.front() == '.' || local.back() == '.') return false;
  bool prev_dot = false;
  for (unsigned char c : local) {
    if (c == '.') {
      if (prev_dot) return false;
      prev_dot = true;
      continue;
    }
    prev_dot = false;
    if (!is_local_char(c)) return false;
  }
  return true;
}

bool valid_domain(std::string_view domain) {
  if (domain.empty() || domain.size() > 255) return false;
  std::size_t start = 0;
  while (start <= domain.size()) {
    auto dot = domain.find('.', start);
    std::string_view label =
        dot == std::string_view::npos ? domain.substr(start) : domain.substr(start, dot - start);
    if (label.empty() || label.size() > 63) return false;
    if (label.front() == '-' || label.back() == '-') return false;
    for (unsigned char c : label) {
      if (!std::isalnum(c) && c != '-') return false;
    }
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return true;
}

}  // namespace

bool is_valid_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  std::string_view ys = s.substr(0, 4), ms = s.substr(5, 2), ds = s.substr(8, 2);
  if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds)) return false;
  int y = std::stoi(std::string(ys));
  int m = std::stoi(std::string(ms));
  int d = std::stoi(std::string(ds));
  if (m < 1 || m > 12) return false;
  return d >= 1 && d <= days_in_month(y, m);
}

bool is_valid_email(std::string_view s) {
  auto at = s.find('@');
  if (at == std::string_view::npos || s.find('@', at + 1) != std::string_view::npos) return false;
  return valid_local_part(s.substr(0, at)) && valid_domain(s.substr(at + 1));
}

}  // namespace jsoninfer
