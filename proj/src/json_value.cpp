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

#include "jsoninfer/json_value.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jsoninfer {

bool operator==(const JsonValue& a, const JsonValue& b) { return a.node == b.node; }

namespace {

int type_rank(const JsonValue& v) { return static_cast<int>(v.node.index()); }

}  // namespace

bool operator<(const JsonValue& a, const JsonValue& b) {
  if (type_rank(a) != type_rank(b)) return type_rank(a) < type_rank(b);
  switch (a.node.index()) {
    case 0:
      return false;  // null == null
    case 1:
      return std::get<bool>(a.node) < std::get<bool>(b.node);
    case 2:
      return std::get<JsonNumber>(a.node) < std::get<JsonNumber>(b.node);
    case 3:
      return std::get<std::string>(a.node) < std::get<std::string>(b.node);
    case 4: {
      const auto& x = std::get<JsonArray>(a.node);
      const auto& y = std::get<JsonArray>(b.node);
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
    default: {
      const auto& x = std::get<JsonObject>(a.node);
      const auto& y = std::get<JsonObject>(b.node);
      return std::lexicographical_compare(
          x.begin(), x.end(), y.begin(), y.end(), [](const auto& p, const auto& q) {
            if (p.first != q.first) return p.first < q.first;
            return p.second < q.second;
          });
    }
  }
}

ParseError::ParseError(std::string file_, std::size_t line_, std::size_t column_,
                       std::string msg)
    : Error(file_ + ":" + std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
      file(std::move(file_)),
      line(line_),
      column(column_),
      message(std::move(msg)) {}

namespace {

using njson = nlohmann::json;

std::pair<std::size_t, std::size_t> offset_to_line_col(std::string_view text,
                                                       std::size_t offset) {
  std::size_t line = 1, col = 1;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

bool lexically_integral(const std::string& token) {
  return token.find_first_of(".eE") == std::string::npos;
}

// SAX builder producing JsonValue directly; keeps the raw number token so the
// integral flag stays lexical.
class ValueBuilder : public nlohmann::json_sax<njson> {
 public:
  ValueBuilder(std::string_view text, std::string_view origin, const WarnSink& warn)
      : text_(text), origin_(origin), warn_(warn) {}

  JsonValue take() { return std::move(root_); }

  bool null() override { return emit(JsonValue(nullptr)); }
  bool boolean(bool val) override { return emit(JsonValue(val)); }
  bool number_integer(number_integer_t val) override {
    return emit(JsonValue(JsonNumber{static_cast<double>(val), true}));
  }
  bool number_unsigned(number_unsigned_t val) override {
    return emit(JsonValue(JsonNumber{static_cast<double>(val), true}));
  }
  bool number_float(number_float_t val, const string_t& raw) override {
    return emit(JsonValue(JsonNumber{val, lexically_integral(raw)}));
  }
  bool string(string_t& val) override { return emit(JsonValue(std::string(val))); }
  bool binary(binary_t&) override { return fail("binary values are not valid JSON"); }

  bool start_object(std::size_t) override {
    frames_.emplace_back();
    frames_.back().is_object = true;
    return true;
  }
  bool key(string_t& val) override {
    frames_.back().key = val;
    return true;
  }
  bool end_object() override {
    JsonValue done(std::move(frames_.back().obj));
    frames_.pop_back();
    return emit(std::move(done));
  }
  bool start_array(std::size_t) override {
    frames_.emplace_back();
    return true;
  }
  bool end_array() override {
    JsonValue done(std::move(frames_.back().arr));
    frames_.pop_back();
    return emit(std::move(done));
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    auto [line, col] = offset_to_line_col(text_, position > 0 ? position - 1 : 0);
    throw ParseError(std::string(origin_), line, col, trim_message(ex.what()));
  }

 private:
  struct Frame {
    bool is_object = false;
    JsonObject obj;
    JsonArray arr;
    std::string key;
  };

  static std::string trim_message(std::string msg) {
    // nlohmann prefixes messages with "[json.exception...] "; drop it.
    auto pos = msg.find("] ");
    if (!msg.empty() && msg.front() == '[' && pos != std::string::npos) {
      msg = msg.substr(pos + 2);
    }
    return msg;
  }

  bool fail(const std::string& msg) {
    throw ParseError(std::string(origin_), 1, 1, msg);
  }

  bool emit(JsonValue v) {
    if (frames_.empty()) {
      root_ = std::move(v);
      return true;
    }
    Frame& top = frames_.back();
    if (top.is_object) {
      auto [it, inserted] = top.obj.insert_or_assign(top.key, std::move(v));
      (void)it;
      if (!inserted && warn_) {
        warn_(std::string(origin_) + ": duplicate key \"" + top.key +
              "\", keeping the last occurrence");
      }
    } else {
      top.arr.push_back(std::move(v));
    }
    return true;
  }

  std::string_view text_;
  std::string_view origin_;
  const WarnSink& warn_;
  std::vector<Frame> frames_;
  JsonValue root_;
};

void write_escaped(std::string& out, const std::string& s) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void write_number(std::string& out, const JsonNumber& n) {
  if (n.integral) {
    constexpr double kExactLimit = 9007199254740992.0;  // 2^53
    if (std::abs(n.value) <= kExactLimit) {
      out += std::to_string(static_cast<long long>(n.value));
    } else {
      char buf[512];
      std::snprintf(buf, sizeof buf, "%.0f", n.value);
      out += buf;
    }
    return;
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, n.value);
  std::string tok(buf, res.ptr);
  if (tok.find_first_of(".eE") == std::string::npos) tok += ".0";
  out += tok;
}

void write_value(std::string& out, const JsonValue& v) {
  switch (v.node.index()) {
    case 0: out += "null"; break;
    case 1: out += v.as_bool() ? "true" : "false"; break;
    case 2: write_number(out, v.as_number()); break;
    case 3: write_escaped(out, v.as_string()); break;
    case 4: {
      out.push_back('[');
      bool first = true;
      for (const auto& e : v.as_array()) {
        if (!first) out.push_back(',');
        first = false;
        write_value(out, e);
      }
      out.push_back(']');
      break;
    }
    default: {
      out.push_back('{');
      bool first = true;
      for (const auto& [k, e] : v.as_object()) {
        if (!first) out.push_back(',');
        first = false;
        write_escaped(out, k);
        out.push_back(':');
        write_value(out, e);
      }
      out.push_back('}');
    }
  }
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_comment(const std::string& line) {
  return line.size() >= 2 && line[0] == '/' && line[1] == '/';
}

}  // namespace

JsonValue parse_document(std::string_view text, std::string_view origin, const WarnSink& warn) {
  ValueBuilder builder(text, origin, warn);
  njson::sax_parse(text, &builder);
  return builder.take();
}

std::string serialize(const JsonValue& v) {
  std::string out;
  write_value(out, v);
  return out;
}

std::vector<std::string> strip_comments(const std::vector<std::string>& lines) {
  std::vector<std::string> kept;
  kept.reserve(lines.size());
  for (const auto& line : lines) {
    if (!is_comment(line)) kept.push_back(line);
  }
  return kept;
}

std::vector<JsonValue> samples_from_text(std::string_view text, SampleMode mode,
                                         std::string_view origin, const WarnSink& warn) {
  std::vector<std::string> lines = split_lines(text);
  std::vector<JsonValue> out;

  if (mode == SampleMode::JsonLines) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::string& line = lines[i];
      if (is_comment(line) || is_blank(line)) continue;
      try {
        out.push_back(parse_document(line, origin, warn));
      } catch (const ParseError& e) {
        throw ParseError(e.file, i + 1, e.column, e.message);
      }
    }
    return out;
  }

  // Whole-file modes: drop comment lines, keep a map back to original lines
  // so parse errors still point into the file as written.
  std::string joined;
  std::vector<std::size_t> line_of_offset_start;  // original line per kept line
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_comment(lines[i])) continue;
    line_of_offset_start.push_back(i + 1);
    joined += lines[i];
    joined.push_back('\n');
  }

  JsonValue doc;
  try {
    doc = parse_document(joined, origin, warn);
  } catch (const ParseError& e) {
    // e.line counts lines of the stripped text; map back.
    std::size_t original = e.line > 0 && e.line <= line_of_offset_start.size()
                               ? line_of_offset_start[e.line - 1]
                               : e.line;
    throw ParseError(e.file, original, e.column, e.message);
  }

  if (mode == SampleMode::ArrayElements) {
    if (!doc.is_array()) {
      throw LoadError(std::string(origin) + ": expected a top-level array in array-elements mode");
    }
    for (auto& e : doc.as_array()) out.push_back(e);
    return out;
  }
  out.push_back(std::move(doc));
  return out;
}

std::vector<JsonValue> load_samples(const std::vector<std::string>& paths, SampleMode mode,
                                    const WarnSink& warn) {
  std::vector<JsonValue> all;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto samples = samples_from_text(buf.str(), mode, path, warn);
    for (auto& s : samples) all.push_back(std::move(s));
  }
  return all;
}

}  // namespace jsoninfer
