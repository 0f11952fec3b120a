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

#include "jsoninfer/codegen.hpp"

#include <cctype>

#include "json.hpp"

namespace jsoninfer {

namespace {

using ojson = nlohmann::ordered_json;

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (unsigned char c : s) {
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

void require_identifier(const std::string& s) {
  if (!valid_identifier(s)) throw ValidationError("invalid identifier: \"" + s + "\"");
}

// Arguments that "Maybe" can take by juxtaposition; everything else goes
// through the angle-bracket application form.
bool atomic_for_maybe(const TypeRepr& r) {
  switch (r.kind) {
    case TypeRepr::Kind::Ref: return true;
    case TypeRepr::Kind::App:
      if (r.name == "List" || r.name == "Map") return true;
      if (r.name == "Maybe") return atomic_for_maybe(r.args.front());
      return false;
    case TypeRepr::Kind::Adt: return false;
  }
  return false;
}

std::string render_type(const TypeRepr& r) {
  switch (r.kind) {
    case TypeRepr::Kind::Ref:
      require_identifier(r.name);
      return r.name;
    case TypeRepr::Kind::App: {
      if (r.name == "List" && r.args.size() == 1) {
        return "[" + render_type(r.args[0]) + "]";
      }
      if (r.name == "Map" && r.args.size() == 2) {
        return "Map<" + render_type(r.args[0]) + ", " + render_type(r.args[1]) + ">";
      }
      if (r.name == "Maybe" && r.args.size() == 1) {
        std::string inner = render_type(r.args[0]);
        if (atomic_for_maybe(r.args[0])) return "Maybe " + inner;
        return "Maybe<" + inner + ">";
      }
      if (r.name == "Alt" && r.args.size() == 2) {
        return render_type(r.args[0]) + " :|: " + render_type(r.args[1]);
      }
      require_identifier(r.name);
      std::string out = r.name + "<" + render_type(r.args.front());
      for (std::size_t i = 1; i < r.args.size(); ++i) out += ", " + render_type(r.args[i]);
      return out + ">";
    }
    case TypeRepr::Kind::Adt:
      throw ValidationError("anonymous type in rendering position");
  }
  return {};
}

std::string render_cons(const ConsRepr& c) {
  require_identifier(c.name);
  std::string out = c.name;
  if (c.args.empty()) return out;
  out += " { ";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i > 0) out += ", ";
    require_identifier(c.args[i].first);
    out += c.args[i].first + ": " + render_type(c.args[i].second);
  }
  out += " }";
  return out;
}

std::string render_decl(const std::string& name, const TypeRepr& r) {
  require_identifier(name);
  std::string out = "type " + name + " = ";
  if (r.kind != TypeRepr::Kind::Adt) {
    throw ValidationError("type " + name + " is not a declaration");
  }
  for (std::size_t i = 0; i < r.constructors.size(); ++i) {
    if (i > 0) out += " | ";
    out += render_cons(r.constructors[i]);
  }
  return out;
}

// References of a representation in the order they appear.
void refs_in_order(const TypeRepr& r, std::vector<std::string>& out) {
  switch (r.kind) {
    case TypeRepr::Kind::Ref:
      out.push_back(r.name);
      return;
    case TypeRepr::Kind::App:
      for (const auto& a : r.args) refs_in_order(a, out);
      return;
    case TypeRepr::Kind::Adt:
      for (const auto& c : r.constructors) {
        for (const auto& [f, t] : c.args) {
          (void)f;
          refs_in_order(t, out);
        }
      }
  }
}

// Depth-first from the toplevel in appearance order; each declaration is
// emitted on first visit.
void visit_decl(const ReprEnv& env, const std::string& name, std::set<std::string>& seen,
                std::vector<std::string>& order) {
  if (!seen.insert(name).second) return;
  auto it = env.env.find(name);
  if (it == env.env.end()) {
    if (predefined_type_names().count(name) > 0) return;
    throw ValidationError("unresolved type reference: " + name);
  }
  order.push_back(name);
  std::vector<std::string> refs;
  refs_in_order(it->second, refs);
  for (const auto& ref : refs) visit_decl(env, ref, seen, order);
}

std::vector<std::string> topo_order(const ReprEnv& env) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  visit_decl(env, env.toplevel, seen, order);
  return order;
}

ojson repr_to_json(const TypeRepr& r) {
  switch (r.kind) {
    case TypeRepr::Kind::Ref:
      return ojson{{"ref", r.name}};
    case TypeRepr::Kind::App: {
      ojson args = ojson::array();
      for (const auto& a : r.args) args.push_back(repr_to_json(a));
      return ojson{{"app", r.name}, {"args", std::move(args)}};
    }
    case TypeRepr::Kind::Adt: {
      ojson cons = ojson::array();
      for (const auto& c : r.constructors) {
        ojson fields = ojson::array();
        for (const auto& [f, t] : c.args) {
          fields.push_back(ojson{{"name", f}, {"type", repr_to_json(t)}});
        }
        cons.push_back(ojson{{"name", c.name}, {"fields", std::move(fields)}});
      }
      return ojson{{"adt", std::move(cons)}};
    }
  }
  return {};
}

ojson union_component_json(const UnionType& u);

ojson string_constraint_json(const StringConstraint& c) {
  using Kind = StringConstraint::Kind;
  switch (c.kind) {
    case Kind::Never: return "SCNever";
    case Kind::Any: return "SCAny";
    case Kind::Date: return "SCDate";
    case Kind::Email: return "SCEmail";
    case Kind::Enum: break;
  }
  ojson values = ojson::array();
  for (const auto& v : c.values) values.push_back(v);
  return ojson{{"SCEnum", std::move(values)}};
}

ojson row_json(const RowConstraint& c) {
  using Kind = RowConstraint::Kind;
  if (c.kind == Kind::Never) return "RowNever";
  if (c.kind == Kind::Top) return "RowTop";
  ojson cols = ojson::array();
  for (const auto& col : c.columns) cols.push_back(union_component_json(col));
  return ojson{{"columns", std::move(cols)}};
}

ojson record_json(const RecordConstraint& c) {
  using Kind = RecordConstraint::Kind;
  if (c.kind == Kind::Bottom) return "RCBottom";
  if (c.kind == Kind::Top) return "RCTop";
  ojson fields = ojson::object();
  for (const auto& [k, u] : c.fields) fields[k] = union_component_json(u);
  ojson evidence = ojson::array();
  for (const auto& [keys, count] : c.evidence) {
    ojson ks = ojson::array();
    for (const auto& k : keys) ks.push_back(k);
    evidence.push_back(ojson{{"keys", std::move(ks)}, {"count", count}});
  }
  return ojson{{"fields", std::move(fields)}, {"keysetEvidence", std::move(evidence)}};
}

ojson union_component_json(const UnionType& u) {
  ojson out = ojson::object();
  out["unionNull"] = u.null_case == PresenceConstraint::Present ? "Present" : "Absent";
  out["unionBool"] = u.bool_case == PresenceConstraint::Present ? "Present" : "Absent";
  switch (u.number_case) {
    case NumberConstraint::Never: out["unionNum"] = "NCNever"; break;
    case NumberConstraint::Int: out["unionNum"] = "NCInt"; break;
    case NumberConstraint::Float: out["unionNum"] = "NCFloat"; break;
  }
  out["unionStr"] = string_constraint_json(u.string_case);
  if (!u.array_case.observed) {
    out["unionArr"] = "ArrayNever";
  } else {
    out["unionArr"] = ojson{{"rowCase", row_json(u.array_case.row_case)},
                            {"arrayCase", union_component_json(*u.array_case.element_case)}};
  }
  if (!u.object_case.observed) {
    out["unionObj"] = "ObjectNever";
  } else {
    ojson mapping;
    if (!u.object_case.mapping_case.observed) {
      mapping = "MappingNever";
    } else {
      mapping = ojson{
          {"keyConstraint", string_constraint_json(u.object_case.mapping_case.key_constraint)},
          {"valueConstraint",
           union_component_json(*u.object_case.mapping_case.value_constraint)}};
    }
    out["unionObj"] = ojson{{"mappingCase", std::move(mapping)},
                            {"recordCase", record_json(u.object_case.record_case)}};
  }
  return out;
}

}  // namespace

std::string render(const ReprEnv& env, Dialect dialect) {
  if (dialect == Dialect::DebugJson) {
    ojson out;
    out["toplevel"] = env.toplevel;
    ojson decls = ojson::object();
    for (const auto& [name, repr] : env.env) decls[name] = repr_to_json(repr);
    out["env"] = std::move(decls);
    return out.dump(2) + "\n";
  }
  std::string out;
  for (const auto& name : topo_order(env)) {
    out += render_decl(name, env.env.at(name));
    out += '\n';
  }
  return out;
}

std::string union_to_json(const UnionType& u) { return union_component_json(u).dump(2) + "\n"; }

}  // namespace jsoninfer
