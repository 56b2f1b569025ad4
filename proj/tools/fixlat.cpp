#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fixlat/instance_io.hpp"
#include "fixlat/sweep.hpp"

using namespace fixlat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

long budget_for(const Instance& inst, long cli_budget) {
  if (cli_budget > 0) return cli_budget;
  if (const char* env = std::getenv("FIXLAT_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return default_budget(inst.poset.size());
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "machine") return Format::Machine;
  throw SchemaError("--format must be text or machine");
}

TheoremId parse_theorem(const std::string& s) {
  auto id = theorem_from_string(s);
  if (!id) throw SchemaError("unknown theorem id '" + s + "'");
  return *id;
}

void print_witnesses(const FinitePoset*, const std::vector<WitnessRecord>& ws, Format fmt,
                     TheoremId id, const std::set<std::string>& dropped) {
  for (size_t i = 0; i < ws.size(); ++i) {
    const auto& w = ws[i];
    std::ostringstream prov;
    prov << "theorem=" << to_string(id) << " mode="
         << (dropped.empty() ? std::string("FULL") : "DROP") << " seed=" << w.seed
         << " size=" << w.size << " shape=" << to_string(w.shape)
         << " exhaustive=" << (w.exhaustive ? "true" : "false");
    if (fmt == Format::Machine) {
      std::cout << "witness." << i << ".provenance=" << prov.str() << "\n";
      std::cout << "witness." << i << ".clause=" << w.witness << "\n";
      std::cout << "witness." << i << ".instance=" << serialize_instance(w.inst) << "\n";
    } else {
      std::cout << "witness " << i << " [" << prov.str() << "]\n";
      std::cout << "  clause: " << w.witness << "\n";
      std::cout << "  instance: " << serialize_instance(w.inst) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-poset fixpoint laboratory"};
  app.require_subcommand(1);
  std::string format_str = "text";
  app.add_option("--format", format_str, "text|machine")->capture_default_str();

  std::string instance_path, program_path, theorem_str;
  long cli_budget = 0;
  std::vector<std::string> drop, entry_overrides;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int count = 100, size = 4, witnesses = 5;
  std::string shape_str = "RANDOM_ORDER";
  bool with_g = false;

  auto* classify = app.add_subcommand("classify", "poset and map classification");
  classify->add_option("instance", instance_path)->required();

  auto* iterate_cmd = app.add_subcommand("iterate", "transfinite iterate trace");
  iterate_cmd->add_option("instance", instance_path)->required();
  iterate_cmd->add_option("--budget", cli_budget);

  auto* sets = app.add_subcommand("sets", "A / N / W and inclusion flags");
  sets->add_option("instance", instance_path)->required();
  sets->add_option("--budget", cli_budget);

  auto* verify_cmd = app.add_subcommand("verify", "replay one theorem");
  verify_cmd->add_option("theorem", theorem_str)->required();
  verify_cmd->add_option("instance", instance_path)->required();
  verify_cmd->add_option("--budget", cli_budget);

  auto* verify_all = app.add_subcommand("verify-all", "replay every applicable theorem");
  verify_all->add_option("instance", instance_path)->required();
  verify_all->add_option("--budget", cli_budget);

  auto* search_cmd = app.add_subcommand("search", "hypothesis-drop counterexample search");
  search_cmd->add_option("theorem", theorem_str)->required();
  search_cmd->add_option("--drop", drop, "hypothesis name to drop (repeatable)");
  search_cmd->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
  search_cmd->add_option("--count", count)->capture_default_str();
  search_cmd->add_option("--size", size)->capture_default_str();
  search_cmd->add_option("--witnesses", witnesses)->capture_default_str();
  search_cmd->add_option("--shape", shape_str)->capture_default_str();

  auto* dataflow_cmd = app.add_subcommand("dataflow", "forward sign analysis");
  dataflow_cmd->add_option("program", program_path)->required();
  dataflow_cmd->add_option("--entry", entry_overrides, "var=SIGN entry override (repeatable)");
  dataflow_cmd->add_option("--budget", cli_budget);

  auto* gen = app.add_subcommand("gen", "emit a generated instance file");
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--size", size)->capture_default_str();
  gen->add_option("--shape", shape_str)->capture_default_str();
  gen->add_flag("--with-g", with_g);

  CLI11_PARSE(app, argc, argv);

  try {
    Format fmt = parse_format(format_str);

    if (classify->parsed()) {
      Instance inst = parse_instance(slurp(instance_path));
      std::cout << render_classification(inst, fmt);
      return 0;
    }
    if (iterate_cmd->parsed()) {
      Instance inst = parse_instance(slurp(instance_path));
      auto r = iterate(inst.poset, inst.f(), inst.a0, budget_for(inst, cli_budget));
      std::cout << render_iteration(inst, r, fmt);
      return 0;
    }
    if (sets->parsed()) {
      Instance inst = parse_instance(slurp(instance_path));
      Endomap f = inst.f();
      auto cmp = compare_ANW(inst.poset, f, inst.a0, budget_for(inst, cli_budget));
      auto n = compute_N(inst.poset, f, inst.a0);
      std::cout << render_sets(inst, cmp, n, fmt);
      return 0;
    }
    if (verify_cmd->parsed()) {
      Instance inst = parse_instance(slurp(instance_path));
      Verdict v = verify(parse_theorem(theorem_str), inst, budget_for(inst, cli_budget));
      std::cout << render_verdict(v, fmt);
      return v.status == VerdictStatus::Refuted ? 1 : 0;
    }
    if (verify_all->parsed()) {
      Instance inst = parse_instance(slurp(instance_path));
      bool refuted = false;
      for (TheoremId id : all_theorems()) {
        if (requires_g(id) && !inst.g_map) {
          if (fmt == Format::Machine)
            std::cout << to_string(id) << ".status=SKIPPED\n";
          else
            std::cout << to_string(id) << ": SKIPPED (no g in instance)\n";
          continue;
        }
        Verdict v = verify(id, inst, budget_for(inst, cli_budget));
        if (fmt == Format::Machine) {
          std::cout << to_string(id) << ".status=" << to_string(v.status) << "\n";
          if (!v.witness.empty()) std::cout << to_string(id) << ".witness=" << v.witness << "\n";
        } else {
          std::cout << to_string(id) << ": " << to_string(v.status);
          if (!v.witness.empty()) std::cout << " (" << v.witness << ")";
          std::cout << "\n";
        }
        refuted = refuted || v.status == VerdictStatus::Refuted;
      }
      return refuted ? 1 : 0;
    }
    if (search_cmd->parsed()) {
      TheoremId id = parse_theorem(theorem_str);
      std::set<std::string> dropped(drop.begin(), drop.end());
      SearchReport rep;
      if (seed_given) {
        auto shape = shape_from_string(shape_str);
        if (!shape) throw SchemaError("unknown shape '" + shape_str + "'");
        rep = search_random(id, dropped, seed, count, size, *shape, witnesses);
      } else {
        rep = search_exhaustive(id, dropped, size, witnesses);
      }
      if (fmt == Format::Machine) {
        std::cout << "examined=" << rep.examined << "\n";
        std::cout << "witness_count=" << rep.witnesses.size() << "\n";
      } else if (rep.witnesses.empty()) {
        std::cout << "none found (examined " << rep.examined << " instances)\n";
      }
      print_witnesses(nullptr, rep.witnesses, fmt, id, dropped);
      return rep.witnesses.empty() ? 0 : 1;
    }
    if (dataflow_cmd->parsed()) {
      Program prog = parse_program(slurp(program_path));
      std::vector<Sign> entry(prog.vars.size(), Sign::Top);
      for (const auto& ov : entry_overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos) throw SchemaError("--entry expects var=SIGN");
        auto s = sign_from_string(ov.substr(eq + 1));
        if (!s) throw SchemaError("unknown sign '" + ov.substr(eq + 1) + "'");
        try {
          entry[prog.var_index(ov.substr(0, eq))] = *s;
        } catch (const DomainError& e) {
          throw SchemaError(e.what());
        }
      }
      long budget = cli_budget > 0 ? cli_budget
                                   : static_cast<long>(prog.node_ids.size() * prog.vars.size()) * 2 + 2;
      if (const char* env = std::getenv("FIXLAT_BUDGET"); env && cli_budget == 0) {
        long v = std::atol(env);
        if (v > 0) budget = v;
      }
      auto r = solve(prog, entry, budget);
      if (fmt == Format::Machine) {
        const int nv = static_cast<int>(prog.vars.size());
        for (size_t n = 0; n < prog.node_ids.size(); ++n)
          for (int v = 0; v < nv; ++v)
            std::cout << prog.node_ids[n] << "." << prog.vars[v] << "="
                      << to_string(r.out[n * nv + v]) << "\n";
        std::cout << "iterations=" << r.iterations << "\n";
      } else {
        std::cout << render_solution(prog, r);
      }
      return 0;
    }
    if (gen->parsed()) {
      auto shape = shape_from_string(shape_str);
      if (!shape) throw SchemaError("unknown shape '" + shape_str + "'");
      Instance inst = generate_instance(seed, size, *shape, with_g);
      std::cout << serialize_instance(inst) << "\n";
      return 0;
    }
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
