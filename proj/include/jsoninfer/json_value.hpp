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

#ifndef JSONINFER_JSON_VALUE_HPP_
#define JSONINFER_JSON_VALUE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jsoninfer {

struct JsonValue;
using JsonArray = std::vector<JsonValue>;
using JsonObject = std::map<std::string, JsonValue>;

// Numbers carry a lexical "integral" flag: a token without '.' or an exponent
// is integral, so "2.0" is not even though its value is a whole number.
struct JsonNumber {
  double value = 0.0;
  bool integral = false;

  friend bool operator==(const JsonNumber&, const JsonNumber&) = default;
  friend auto operator<=>(const JsonNumber&, const JsonNumber&) = default;
};

struct JsonValue {
  using Node =
      std::variant<std::nullptr_t, bool, JsonNumber, std::string, JsonArray, JsonObject>;
  Node node;

  JsonValue() : node(nullptr) {}
  JsonValue(std::nullptr_t) : node(nullptr) {}
  JsonValue(bool b) : node(b) {}
  JsonValue(JsonNumber n) : node(n) {}
  JsonValue(std::string s) : node(std::move(s)) {}
  JsonValue(const char* s) : node(std::string(s)) {}
  JsonValue(JsonArray a) : node(std::move(a)) {}
  JsonValue(JsonObject o) : node(std::move(o)) {}

  static JsonValue integer(long long v) { return JsonValue(JsonNumber{double(v), true}); }
  static JsonValue real(double v) { return JsonValue(JsonNumber{v, false}); }

  bool is_null() const { return std::holds_alternative<std::nullptr_t>(node); }
  bool is_bool() const { return std::holds_alternative<bool>(node); }
  bool is_number() const { return std::holds_alternative<JsonNumber>(node); }
  bool is_string() const { return std::holds_alternative<std::string>(node); }
  bool is_array() const { return std::holds_alternative<JsonArray>(node); }
  bool is_object() const { return std::holds_alternative<JsonObject>(node); }

  bool as_bool() const { return std::get<bool>(node); }
  const JsonNumber& as_number() const { return std::get<JsonNumber>(node); }
  const std::string& as_string() const { return std::get<std::string>(node); }
  const JsonArray& as_array() const { return std::get<JsonArray>(node); }
  const JsonObject& as_object() const { return std::get<JsonObject>(node); }

  friend bool operator==(const JsonValue& a, const JsonValue& b);
  // Total order so values can live in std::set (variant index, then content).
  friend bool operator<(const JsonValue& a, const JsonValue& b);
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;  // without the file:line:column prefix

  ParseError(std::string file, std::size_t line, std::size_t column, std::string msg);
};

struct LoadError : Error {
  using Error::Error;
};

using WarnSink = std::function<void(const std::string&)>;

// Parses one RFC 8259 document. Duplicate object keys keep the last
// occurrence and report through `warn`.
JsonValue parse_document(std::string_view text, std::string_view origin = "<input>",
                         const WarnSink& warn = nullptr);

// Canonical debug serialization: keys sorted, numbers round-trip exactly and
// keep the integral flag observable ("2.0" stays fractional-looking).
std::string serialize(const JsonValue& v);

// Drops every line whose first two bytes are "//"; order preserved.
std::vector<std::string> strip_comments(const std::vector<std::string>& lines);

enum class SampleMode { WholeFile, JsonLines, ArrayElements };

std::vector<JsonValue> load_samples(const std::vector<std::string>& paths, SampleMode mode,
                                    const WarnSink& warn = nullptr);

// Same ingestion, starting from in-memory file content (used by tests).
std::vector<JsonValue> samples_from_text(std::string_view text, SampleMode mode,
                                         std::string_view origin = "<input>",
                                         const WarnSink& warn = nullptr);

}  // namespace jsoninfer

#endif  // JSONINFER_JSON_VALUE_HPP_
