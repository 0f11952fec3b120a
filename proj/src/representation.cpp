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

#include "jsoninfer/representation.hpp"

#include <algorithm>
#include <cctype>

namespace jsoninfer {

TypeRepr TypeRepr::ref(std::string n) {
  TypeRepr r;
  r.kind = Kind::Ref;
  r.name = std::move(n);
  return r;
}

TypeRepr TypeRepr::app(std::string head, std::vector<TypeRepr> arguments) {
  TypeRepr r;
  r.kind = Kind::App;
  r.name = std::move(head);
  r.args = std::move(arguments);
  return r;
}

TypeRepr TypeRepr::adt(std::vector<ConsRepr> cons) {
  TypeRepr r;
  r.kind = Kind::Adt;
  r.constructors = std::move(cons);
  return r;
}

bool operator==(const TypeRepr& a, const TypeRepr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TypeRepr::Kind::Ref: return a.name == b.name;
    case TypeRepr::Kind::App: return a.name == b.name && a.args == b.args;
    case TypeRepr::Kind::Adt: return a.constructors == b.constructors;
  }
  return false;
}

bool operator==(const ConsRepr& a, const ConsRepr& b) {
  return a.name == b.name && a.args == b.args;
}

const std::set<std::string>& predefined_type_names() {
  static const std::set<std::string> names = {"AnyValue", "Unit", "Double", "String",
                                              "Int",      "Date", "Email",  "Bool",
                                              "Maybe",    "Map",  "Alt",    "List"};
  return names;
}

std::string sanitize_field_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (unsigned char c : raw) {
    out.push_back(std::isalnum(c) || c == '_' ? static_cast<char>(c) : '_');
  }
  if (out.empty() || !std::isalpha(static_cast<unsigned char>(out.front()))) {
    out.insert(0, "f_");
  }
  return out;
}

std::string sanitize_type_name(std::string_view raw) {
  std::string out = sanitize_field_name(raw);
  out.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.front())));
  return out;
}

TypeRepr join_alts(std::vector<TypeRepr> alts) {
  if (alts.empty()) return TypeRepr::ref(std::string(kAnyValue));
  TypeRepr out = std::move(alts.back());
  for (std::size_t i = alts.size() - 1; i-- > 0;) {
    out = TypeRepr::app("Alt", {std::move(alts[i]), std::move(out)});
  }
  return out;
}

std::vector<TypeRepr> scalar_to_reprs(PresenceConstraint bool_case) {
  if (bool_case == PresenceConstraint::Absent) return {};
  return {TypeRepr::ref("Bool")};
}

std::vector<TypeRepr> scalar_to_reprs(NumberConstraint c) {
  switch (c) {
    case NumberConstraint::Never: return {};
    case NumberConstraint::Int: return {TypeRepr::ref("Int")};
    case NumberConstraint::Float: return {TypeRepr::ref("Double")};
  }
  return {};
}

namespace {

// Adds `base` to `taken`, suffixing with 2, 3, ... on collision.
std::string dedup_name(std::set<std::string>& taken, const std::string& base) {
  std::string candidate = base;
  for (std::size_t i = 2; taken.count(candidate) > 0; ++i) {
    candidate = base + std::to_string(i);
  }
  taken.insert(candidate);
  return candidate;
}

}  // namespace

std::vector<TypeRepr> scalar_to_reprs(const StringConstraint& c) {
  using Kind = StringConstraint::Kind;
  switch (c.kind) {
    case Kind::Never: return {};
    case Kind::Any: return {TypeRepr::ref("String")};
    case Kind::Email: return {TypeRepr::ref("Email")};
    case Kind::Date: return {TypeRepr::ref("Date")};
    case Kind::Enum: break;
  }
  std::vector<ConsRepr> cons;
  std::set<std::string> taken;
  for (const auto& value : c.values) {
    cons.push_back(ConsRepr{dedup_name(taken, sanitize_field_name(value)), {}});
  }
  return {TypeRepr::adt(std::move(cons))};
}

namespace {

bool is_maybe(const TypeRepr& r) { return r.kind == TypeRepr::Kind::App && r.name == "Maybe"; }

TypeRepr wrap_maybe(TypeRepr r) {
  if (is_maybe(r)) return r;
  return TypeRepr::app("Maybe", {std::move(r)});
}

// A field is wrapped optional in the single-constructor candidate when some
// observed key set lacks it.
bool absent_somewhere(const RecordConstraint& r, const std::string& key) {
  for (const auto& [keys, count] : r.evidence) {
    (void)count;
    if (!std::binary_search(keys.begin(), keys.end(), key)) return true;
  }
  return false;
}

// Candidate costs: one per optional field in the single-constructor form,
// versus one for having multiple constructors at all.
std::uint64_t single_record_cost(const RecordConstraint& r) {
  std::uint64_t n = 0;
  for (const auto& [key, u] : r.fields) {
    (void)u;
    if (absent_somewhere(r, key)) ++n;
  }
  return n;
}

bool use_variant_candidate(const RecordConstraint& r, const ReprConfig& cfg) {
  if (!cfg.variant_split) return false;
  std::size_t groups = r.evidence.size();
  if (groups < 2 || groups > cfg.max_variants) return false;
  return 1 < single_record_cost(r);
}

}  // namespace

TypeRepr variant_split(const RecordConstraint& r, const ReprConfig& cfg) {
  if (r.kind == RecordConstraint::Kind::Top) return TypeRepr::ref(std::string(kAnyValue));
  if (r.kind == RecordConstraint::Kind::Bottom) return TypeRepr::ref(std::string(kAnyValue));

  TypeRepr out;
  if (use_variant_candidate(r, cfg)) {
    std::vector<ConsRepr> cons;
    for (const auto& [keys, count] : r.evidence) {
      (void)count;
      ConsRepr c;
      std::set<std::string> taken;
      for (const auto& key : keys) {
        const UnionType* u = r.find_field(key);
        if (u == nullptr) continue;
        c.args.emplace_back(dedup_name(taken, sanitize_field_name(key)), to_repr(*u, cfg));
      }
      cons.push_back(std::move(c));
    }
    out = TypeRepr::adt(std::move(cons));
  } else {
    ConsRepr c;
    std::set<std::string> taken;
    for (const auto& [key, u] : r.fields) {
      TypeRepr field = to_repr(u, cfg);
      if (absent_somewhere(r, key)) field = wrap_maybe(std::move(field));
      c.args.emplace_back(dedup_name(taken, sanitize_field_name(key)), std::move(field));
    }
    out = TypeRepr::adt({std::move(c)});
  }
  out.record_source = std::make_shared<RecordConstraint>(r);
  return out;
}

std::vector<TypeRepr> object_to_reprs(const ObjectConstraint& c, const ReprConfig& cfg) {
  if (!c.observed) return {};
  if (type_cost(c.record_case) <= type_cost(c.mapping_case)) {
    return {variant_split(c.record_case, cfg)};
  }
  std::vector<TypeRepr> key = scalar_to_reprs(c.mapping_case.key_constraint);
  return {TypeRepr::app(
      "Map", {join_alts(std::move(key)), to_repr(*c.mapping_case.value_constraint, cfg)})};
}

std::vector<TypeRepr> array_to_reprs(const ArrayConstraint& c, const ReprConfig& cfg) {
  if (!c.observed) return {};
  if (type_cost(*c.element_case) <= type_cost(c.row_case)) {
    return {TypeRepr::app("List", {to_repr(*c.element_case, cfg)})};
  }
  if (c.row_case.kind != RowConstraint::Kind::Columns) {
    return {TypeRepr::ref(std::string(kAnyValue))};
  }
  ConsRepr row;
  for (const auto& col : c.row_case.columns) {
    row.args.emplace_back(std::string(), to_repr(col, cfg));
  }
  return {TypeRepr::adt({std::move(row)})};
}

TypeRepr to_repr(const UnionType& u, const ReprConfig& cfg) {
  std::vector<TypeRepr> opts;
  for (auto& r : scalar_to_reprs(u.bool_case)) opts.push_back(std::move(r));
  for (auto& r : scalar_to_reprs(u.number_case)) opts.push_back(std::move(r));
  for (auto& r : scalar_to_reprs(u.string_case)) opts.push_back(std::move(r));
  for (auto& r : array_to_reprs(u.array_case, cfg)) opts.push_back(std::move(r));
  for (auto& r : object_to_reprs(u.object_case, cfg)) opts.push_back(std::move(r));
  TypeRepr joined = join_alts(std::move(opts));
  if (u.null_case == PresenceConstraint::Present) return wrap_maybe(std::move(joined));
  return joined;
}

namespace {

// Hoists sums into the environment and fills pending names. The base string
// tracks the container field path.
class Namer {
 public:
  Namer(ReprEnv& env, std::map<std::string, RecordConstraint>* sources)
      : env_(env), sources_(sources) {
    used_ = predefined_type_names();
    for (const auto& [name, repr] : env_.env) {
      (void)repr;
      used_.insert(name);
    }
  }

  std::string fresh(const std::string& base) { return dedup_name(used_, base); }

  void reserve(const std::string& name) { used_.insert(name); }

  TypeRepr walk(TypeRepr node, const std::string& base) {
    switch (node.kind) {
      case TypeRepr::Kind::Ref:
        return node;
      case TypeRepr::Kind::App: {
        if (node.name == "Map" && node.args.size() == 2) {
          node.args[0] = walk(std::move(node.args[0]), base + "Key");
          node.args[1] = walk(std::move(node.args[1]), base + "Elt");
        } else {
          for (auto& a : node.args) a = walk(std::move(a), base);
        }
        return node;
      }
      case TypeRepr::Kind::Adt:
        break;
    }
    std::string name = fresh(base);
    install(std::move(node), name);
    return TypeRepr::ref(name);
  }

  void install(TypeRepr adt, const std::string& name) {
    if (sources_ != nullptr && adt.record_source != nullptr) {
      (*sources_)[name] = *adt.record_source;
    }
    adt.record_source = nullptr;
    for (auto& cons : adt.constructors) {
      std::set<std::string> fields_taken;
      std::size_t index = 0;
      for (auto& [field, repr] : cons.args) {
        ++index;
        if (field.empty()) field = "col" + std::to_string(index);
        field = dedup_name(fields_taken, field);
        repr = walk(std::move(repr), sanitize_type_name(field));
      }
    }
    std::set<std::string> cons_taken;
    for (std::size_t i = 0; i < adt.constructors.size(); ++i) {
      ConsRepr& cons = adt.constructors[i];
      if (cons.name.empty()) {
        if (adt.constructors.size() == 1) {
          cons.name = name;
        } else if (!cons.args.empty()) {
          cons.name = sanitize_type_name(cons.args.front().first);
        } else {
          cons.name = name + std::to_string(i + 1);
        }
      }
      cons.name = dedup_name(cons_taken, cons.name);
    }
    env_.env[name] = std::move(adt);
  }

 private:
  ReprEnv& env_;
  std::map<std::string, RecordConstraint>* sources_;
  std::set<std::string> used_;
};

ReprEnv assign_names_impl(const TypeRepr& tree, const std::string& root_name,
                          std::map<std::string, RecordConstraint>* sources) {
  ReprEnv env;
  Namer namer(env, sources);
  std::string root = sanitize_type_name(root_name);
  TypeRepr top = namer.walk(tree, root);
  if (top.kind == TypeRepr::Kind::Ref && env.env.count(top.name) > 0) {
    env.toplevel = top.name;
    return env;
  }
  std::string name = namer.fresh(root);
  ConsRepr wrapper{name, {{"value", std::move(top)}}};
  env.env[name] = TypeRepr::adt({std::move(wrapper)});
  env.toplevel = name;
  return env;
}

void collect_refs(const TypeRepr& r, std::set<std::string>& out) {
  switch (r.kind) {
    case TypeRepr::Kind::Ref:
      out.insert(r.name);
      return;
    case TypeRepr::Kind::App:
      for (const auto& a : r.args) collect_refs(a, out);
      return;
    case TypeRepr::Kind::Adt:
      for (const auto& c : r.constructors) {
        for (const auto& [f, t] : c.args) {
          (void)f;
          collect_refs(t, out);
        }
      }
  }
}

void check_names_filled(const TypeRepr& r, const std::string& where) {
  if (r.kind == TypeRepr::Kind::Adt) {
    for (const auto& c : r.constructors) {
      if (c.name.empty()) {
        throw ValidationError("unnamed constructor in type " + where);
      }
      for (const auto& [f, t] : c.args) {
        if (f.empty()) throw ValidationError("unnamed field in type " + where);
        check_names_filled(t, where);
      }
    }
  }
  for (const auto& a : r.args) check_names_filled(a, where);
}

}  // namespace

ReprEnv assign_names(const TypeRepr& tree, const std::string& root_name) {
  return assign_names_impl(tree, root_name, nullptr);
}

ReprEnv promote_empty(ReprEnv env) {
  if (env.env.count(env.toplevel) == 0) {
    throw ValidationError("unresolved type reference: " + env.toplevel);
  }
  for (const auto& [name, repr] : env.env) {
    check_names_filled(repr, name);
    std::set<std::string> refs;
    collect_refs(repr, refs);
    for (const auto& ref : refs) {
      if (env.env.count(ref) == 0 && predefined_type_names().count(ref) == 0) {
        throw ValidationError("unresolved type reference: " + ref);
      }
    }
  }
  return env;
}

BuiltEnv build_repr_env(const UnionType& root, const std::string& root_name,
                        const ReprConfig& cfg) {
  BuiltEnv out;
  TypeRepr tree = to_repr(root, cfg);
  out.env = assign_names_impl(tree, root_name, &out.record_sources);
  return out;
}

namespace {

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::set<std::string> label_set(const RecordConstraint& r) {
  std::set<std::string> out;
  for (const auto& [key, u] : r.fields) {
    (void)u;
    out.insert(key);
  }
  return out;
}

void rewrite_refs(TypeRepr& r, const std::map<std::string, std::string>& renames) {
  switch (r.kind) {
    case TypeRepr::Kind::Ref: {
      auto it = renames.find(r.name);
      if (it != renames.end()) r.name = it->second;
      return;
    }
    case TypeRepr::Kind::App:
      for (auto& a : r.args) rewrite_refs(a, renames);
      return;
    case TypeRepr::Kind::Adt:
      for (auto& c : r.constructors) {
        for (auto& [f, t] : c.args) {
          (void)f;
          rewrite_refs(t, renames);
        }
      }
  }
}

void prune_unreachable(BuiltEnv& built) {
  std::set<std::string> alive;
  std::vector<std::string> queue = {built.env.toplevel};
  while (!queue.empty()) {
    std::string name = std::move(queue.back());
    queue.pop_back();
    if (!alive.insert(name).second) continue;
    auto it = built.env.env.find(name);
    if (it == built.env.env.end()) continue;
    std::set<std::string> refs;
    collect_refs(it->second, refs);
    for (const auto& ref : refs) {
      if (built.env.env.count(ref) > 0 && alive.count(ref) == 0) queue.push_back(ref);
    }
  }
  for (auto it = built.env.env.begin(); it != built.env.env.end();) {
    if (alive.count(it->first) == 0) {
      built.record_sources.erase(it->first);
      it = built.env.env.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

std::vector<UnifyLogEntry> unify_similar_records(BuiltEnv& built, double threshold,
                                                 const ReprConfig& cfg) {
  std::vector<UnifyLogEntry> log;
  for (bool changed = true; changed;) {
    changed = false;
    prune_unreachable(built);

    std::vector<std::string> names;
    for (const auto& [name, rec] : built.record_sources) {
      (void)rec;
      if (built.env.env.count(name) > 0) names.push_back(name);
    }

    // Union-find over the similarity graph.
    std::map<std::string, std::string> parent;
    for (const auto& n : names) parent[n] = n;
    auto find = [&](std::string x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto li = label_set(built.record_sources.at(names[i]));
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        auto lj = label_set(built.record_sources.at(names[j]));
        if (jaccard(li, lj) > threshold) {
          auto ri = find(names[i]), rj = find(names[j]);
          if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        }
      }
    }

    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& n : names) groups[find(n)].push_back(n);

    std::map<std::string, std::string> renames;
    for (const auto& [leader, members] : groups) {
      if (members.size() < 2) continue;
      changed = true;
      RecordConstraint merged;
      for (const auto& m : members) {
        merged = merge(merged, built.record_sources.at(m), cfg.algebra);
        if (m != leader) {
          renames[m] = leader;
          log.push_back(UnifyLogEntry{m, leader});
          built.env.env.erase(m);
          built.record_sources.erase(m);
        }
      }
      built.env.env.erase(leader);
      built.record_sources.erase(leader);

      Namer namer(built.env, &built.record_sources);
      namer.reserve(leader);  // children must not take the leader's name
      TypeRepr adt = variant_split(merged, cfg);
      namer.install(std::move(adt), leader);
      built.record_sources[leader] = merged;
    }
    for (auto& [name, repr] : built.env.env) {
      (void)name;
      rewrite_refs(repr, renames);
    }
    if (renames.count(built.env.toplevel) > 0) {
      built.env.toplevel = renames.at(built.env.toplevel);
    }
  }
  prune_unreachable(built);
  return log;
}

}  // namespace jsoninfer
