#include "fixlat/instance_io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace fixlat {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("document is not valid JSON");
  return j;
}

void expect_keys(const json& j, const std::string& path, const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  for (const auto& [key, _] : j.items())
    if (!required.count(key) && !optional.count(key))
      throw SchemaError(path + ": unknown key \"" + key + "\"");
  for (const auto& key : required)
    if (!j.contains(key)) throw SchemaError(path + ": missing key \"" + key + "\"");
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

std::vector<Elem> parse_map_object(const json& j, const std::string& path, const FinitePoset& p) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object of element pairs");
  std::vector<Elem> m(p.size(), -1);
  for (const auto& [from, to] : j.items()) {
    Elem a, b;
    try {
      a = p.index_of(from);
      b = p.index_of(get_string(to, path + "." + from));
    } catch (const DomainError& e) {
      throw SchemaError(path + ": " + e.what());
    }
    if (m[a] != -1) throw SchemaError(path + ": element \"" + from + "\" mapped twice");
    m[a] = b;
  }
  for (Elem x = 0; x < p.size(); ++x)
    if (m[x] == -1) throw SchemaError(path + ": no image for \"" + p.name(x) + "\"");
  return m;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j = parse_json(json_text);
  expect_keys(j, "$", {"elements", "relation_kind", "le", "function", "a0"}, {"g"});

  if (!j["elements"].is_array()) throw SchemaError("$.elements: expected an array");
  std::vector<std::string> names;
  for (size_t i = 0; i < j["elements"].size(); ++i)
    names.push_back(get_string(j["elements"][i], "$.elements[" + std::to_string(i) + "]"));

  std::string kind_str = get_string(j["relation_kind"], "$.relation_kind");
  RelationKind kind;
  if (kind_str == "hasse")
    kind = RelationKind::Hasse;
  else if (kind_str == "full")
    kind = RelationKind::Full;
  else
    throw SchemaError("$.relation_kind: expected \"hasse\" or \"full\"");

  if (!j["le"].is_array()) throw SchemaError("$.le: expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i < j["le"].size(); ++i) {
    const auto& e = j["le"][i];
    std::string path = "$.le[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) throw SchemaError(path + ": expected a pair");
    pairs.emplace_back(get_string(e[0], path + "[0]"), get_string(e[1], path + "[1]"));
  }

  FinitePoset p = [&] {
    try {
      return FinitePoset::build(names, pairs, kind);
    } catch (const DomainError& e) {
      throw SchemaError(std::string("$: ") + e.what());
    }
  }();

  Instance inst{p, parse_map_object(j["function"], "$.function", p), 0, std::nullopt};
  try {
    inst.a0 = p.index_of(get_string(j["a0"], "$.a0"));
  } catch (const DomainError& e) {
    throw SchemaError(std::string("$.a0: ") + e.what());
  }
  if (j.contains("g")) inst.g_map = parse_map_object(j["g"], "$.g", p);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const FinitePoset& p = inst.poset;
  json j;
  j["elements"] = json::array();
  for (Elem x = 0; x < p.size(); ++x) j["elements"].push_back(p.name(x));
  j["relation_kind"] = "hasse";
  j["le"] = json::array();
  for (auto [a, b] : p.cover_pairs()) j["le"].push_back(json::array({p.name(a), p.name(b)}));
  json f = json::object();
  for (Elem x = 0; x < p.size(); ++x) f[p.name(x)] = p.name(inst.f_map[x]);
  j["function"] = std::move(f);
  j["a0"] = p.name(inst.a0);
  if (inst.g_map) {
    json g = json::object();
    for (Elem x = 0; x < p.size(); ++x) g[p.name(x)] = p.name((*inst.g_map)[x]);
    j["g"] = std::move(g);
  }
  return j.dump();
}

Program parse_program(const std::string& json_text) {
  json j = parse_json(json_text);
  expect_keys(j, "$", {"vars", "entry", "nodes", "edges"});
  Program prog;
  if (!j["vars"].is_array()) throw SchemaError("$.vars: expected an array");
  for (size_t i = 0; i < j["vars"].size(); ++i)
    prog.vars.push_back(get_string(j["vars"][i], "$.vars[" + std::to_string(i) + "]"));

  if (!j["nodes"].is_array()) throw SchemaError("$.nodes: expected an array");
  for (size_t i = 0; i < j["nodes"].size(); ++i) {
    const auto& nj = j["nodes"][i];
    std::string path = "$.nodes[" + std::to_string(i) + "]";
    expect_keys(nj, path, {"id", "instr"});
    prog.node_ids.push_back(get_string(nj["id"], path + ".id"));
    const auto& ij = nj["instr"];
    std::string ipath = path + ".instr";
    std::string kind = get_string(ij.contains("kind") ? ij["kind"] : json(), ipath + ".kind");
    Instr ins;
    auto var_of = [&](const json& v, const std::string& vp) {
      try {
        return prog.var_index(get_string(v, vp));
      } catch (const DomainError& e) {
        throw SchemaError(vp + ": " + e.what());
      }
    };
    if (kind == "assign_const") {
      expect_keys(ij, ipath, {"kind", "var", "value"});
      if (!ij["value"].is_number_integer()) throw SchemaError(ipath + ".value: expected an integer");
      ins = {Instr::Kind::AssignConst, var_of(ij["var"], ipath + ".var"),
             ij["value"].get<long>(), -1, -1};
    } else if (kind == "assign_var") {
      expect_keys(ij, ipath, {"kind", "var", "src"});
      ins = {Instr::Kind::AssignVar, var_of(ij["var"], ipath + ".var"), 0,
             var_of(ij["src"], ipath + ".src"), -1};
    } else if (kind == "assign_add" || kind == "assign_mul") {
      expect_keys(ij, ipath, {"kind", "var", "lhs", "rhs"});
      ins = {kind == "assign_add" ? Instr::Kind::AssignAdd : Instr::Kind::AssignMul,
             var_of(ij["var"], ipath + ".var"), 0, var_of(ij["lhs"], ipath + ".lhs"),
             var_of(ij["rhs"], ipath + ".rhs")};
    } else if (kind == "skip") {
      expect_keys(ij, ipath, {"kind"});
      ins = {};
    } else {
      throw SchemaError(ipath + ".kind: unknown instruction \"" + kind + "\"");
    }
    prog.instrs.push_back(ins);
  }

  if (!j["edges"].is_array()) throw SchemaError("$.edges: expected an array");
  for (size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    std::string path = "$.edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) throw SchemaError(path + ": expected a pair");
    try {
      prog.edges.emplace_back(prog.node_index(get_string(e[0], path + "[0]")),
                              prog.node_index(get_string(e[1], path + "[1]")));
    } catch (const DomainError& err) {
      throw SchemaError(path + ": " + err.what());
    }
  }
  try {
    prog.entry = prog.node_index(get_string(j["entry"], "$.entry"));
    prog.validate();
  } catch (const DomainError& err) {
    throw SchemaError(std::string("$: ") + err.what());
  }
  return prog;
}

namespace {

const char* b(bool v) { return v ? "true" : "false"; }

void kv(std::ostringstream& os, Format fmt, const std::string& key, const std::string& value) {
  if (fmt == Format::Machine)
    os << key << "=" << value << "\n";
  else
    os << "  " << key << ": " << value << "\n";
}

}  // namespace

std::string render_classification(const Instance& inst, Format fmt) {
  const FinitePoset& p = inst.poset;
  auto pc = classify_poset(p);
  Endomap f = inst.f();
  auto mc = classify_map(f, inst.a0);
  auto fs = fixpoint_sets(f);
  std::ostringstream os;
  if (fmt == Format::Text) os << "poset (" << p.size() << " elements)\n";
  kv(os, fmt, "poset.is_lattice", b(pc.is_lattice));
  kv(os, fmt, "poset.is_complete_lattice", b(pc.is_complete_lattice));
  kv(os, fmt, "poset.is_complete_semilattice", b(pc.is_complete_semilattice));
  kv(os, fmt, "poset.is_chain_complete", b(pc.is_chain_complete));
  kv(os, fmt, "poset.is_strictly_inductive", b(pc.is_strictly_inductive));
  kv(os, fmt, "poset.is_well_ordered", b(pc.is_well_ordered));
  kv(os, fmt, "poset.has_bottom", b(pc.has_bottom));
  kv(os, fmt, "poset.has_top", b(pc.has_top));
  kv(os, fmt, "poset.decided_exhaustively", b(pc.decided_exhaustively));
  if (fmt == Format::Text) os << "map\n";
  kv(os, fmt, "map.monotone", b(mc.monotone));
  kv(os, fmt, "map.strictly_monotone", b(mc.strictly_monotone));
  kv(os, fmt, "map.extensive", b(mc.extensive));
  kv(os, fmt, "map.strictly_extensive", b(mc.strictly_extensive));
  kv(os, fmt, "map.p2", b(mc.p2));
  kv(os, fmt, "map.p2_prime", b(mc.p2_prime));
  kv(os, fmt, "map.p1_at_a0", b(mc.p1_at.value_or(false)));
  kv(os, fmt, "map.pre", render_set(p, fs.pre));
  kv(os, fmt, "map.post", render_set(p, fs.post));
  kv(os, fmt, "map.fix", render_set(p, fs.fix));
  return os.str();
}

std::string render_iteration(const Instance& inst, const IterationResult& r, Format fmt) {
  const FinitePoset& p = inst.poset;
  if (fmt == Format::Text) return render_trace(p, r);
  std::ostringstream os;
  for (const auto& e : r.trace.entries)
    os << "trace." << e.index.str() << "=" << p.name(e.value) << "\n";
  const auto& o = r.outcome;
  os << "outcome=" << to_string(o.kind) << "\n";
  switch (o.kind) {
    case OutcomeKind::Converged:
      os << "at=" << o.at.str() << "\nvalue=" << p.name(o.value) << "\n";
      break;
    case OutcomeKind::UndefinedAtLimit:
      os << "at=" << o.at.str() << "\nprefix_set=" << render_set(p, o.prefix_set) << "\n";
      break;
    case OutcomeKind::DivergentPeriodic:
      os << "first_limit=" << o.at.str() << "\nlimit_value=" << p.name(o.value)
         << "\nperiod_blocks=" << o.period_blocks << "\n";
      break;
    case OutcomeKind::BudgetExhausted:
      os << "budget=" << o.budget << "\n";
      break;
  }
  return os.str();
}

std::string render_sets(const Instance& inst, const CanonicalSets& s, const NClosure& n,
                        Format fmt) {
  const FinitePoset& p = inst.poset;
  std::ostringstream os;
  kv(os, fmt, "A", s.A ? render_set(p, *s.A) : "NOT_APPLICABLE");
  kv(os, fmt, "N", render_set(p, s.N));
  kv(os, fmt, "W", render_set(p, s.W));
  kv(os, fmt, "outcome", to_string(s.outcome.kind));
  kv(os, fmt, "w_sub_n", b(s.w_sub_n));
  kv(os, fmt, "n_sub_w", b(s.n_sub_w));
  kv(os, fmt, "a_sub_n", to_string(s.a_sub_n));
  kv(os, fmt, "n_sub_a", to_string(s.n_sub_a));
  kv(os, fmt, "all_equal", to_string(s.all_equal));
  kv(os, fmt, "n_strict_lub_clause", b(n.strict_lub_clause));
  kv(os, fmt, "n_strict_decided_exhaustively", b(n.strict_decided_exhaustively));
  return os.str();
}

std::string render_verdict(const Verdict& v, Format fmt) {
  std::ostringstream os;
  kv(os, fmt, "theorem", to_string(v.theorem));
  kv(os, fmt, "hypotheses_hold", b(v.hypotheses_hold));
  kv(os, fmt, "conclusion_holds", b(v.conclusion_holds));
  kv(os, fmt, "status", to_string(v.status));
  if (!v.witness.empty()) kv(os, fmt, "witness", v.witness);
  return os.str();
}

}  // namespace fixlat
