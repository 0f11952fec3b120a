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

#include "jsoninfer/typelike.hpp"

namespace jsoninfer {

FreeType merge(const FreeType& a, const FreeType& b, const AlgebraConfig&) {
  if (a.full || b.full) return FreeType::full_value();
  FreeType out = a;
  out.captured.insert(b.captured.begin(), b.captured.end());
  return out;
}

bool is_beyond(const FreeType& t) { return t.full; }

TyCost type_cost(const FreeType& t) {
  if (t.full) return TyCost::infinite();
  return TyCost(t.captured.size());
}

FreeType free_infer(const JsonValue& v) { return FreeType::of({v}); }

bool check(const FreeType& t, const JsonValue& v) {
  if (t.full) return true;
  return t.captured.count(v) > 0;
}

}  // namespace jsoninfer
