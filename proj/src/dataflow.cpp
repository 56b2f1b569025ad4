#include "fixlat/dataflow.hpp"

#include <algorithm>
#include <sstream>

namespace fixlat {

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Bot: return "BOT";
    case Sign::Neg: return "NEG";
    case Sign::Zero: return "ZERO";
    case Sign::Pos: return "POS";
    case Sign::Top: return "TOP";
  }
  return "?";
}

std::optional<Sign> sign_from_string(const std::string& s) {
  if (s == "BOT") return Sign::Bot;
  if (s == "NEG") return Sign::Neg;
  if (s == "ZERO") return Sign::Zero;
  if (s == "POS") return Sign::Pos;
  if (s == "TOP") return Sign::Top;
  return std::nullopt;
}

bool sign_leq(Sign a, Sign b) {
  return a == b || a == Sign::Bot || b == Sign::Top;
}

Sign sign_join(Sign a, Sign b) {
  if (a == b || b == Sign::Bot) return a;
  if (a == Sign::Bot) return b;
  return Sign::Top;
}

Sign sign_of(long v) { return v < 0 ? Sign::Neg : v > 0 ? Sign::Pos : Sign::Zero; }

Sign abstract_add(Sign a, Sign b) {
  if (a == Sign::Bot || b == Sign::Bot) return Sign::Bot;
  if (a == Sign::Zero) return b;
  if (b == Sign::Zero) return a;
  if (a == b && (a == Sign::Neg || a == Sign::Pos)) return a;
  return Sign::Top;  // NEG+POS, or TOP with anything non-bottom
}

Sign abstract_mul(Sign a, Sign b) {
  if (a == Sign::Bot || b == Sign::Bot) return Sign::Bot;
  if (a == Sign::Zero || b == Sign::Zero) return Sign::Zero;
  if (a == Sign::Top || b == Sign::Top) return Sign::Top;
  return a == b ? Sign::Pos : Sign::Neg;
}

int Program::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw malformed_program("undeclared variable '" + name + "'");
  return static_cast<int>(it - vars.begin());
}

int Program::node_index(const std::string& id) const {
  auto it = std::find(node_ids.begin(), node_ids.end(), id);
  if (it == node_ids.end()) throw malformed_program("unknown node '" + id + "'");
  return static_cast<int>(it - node_ids.begin());
}

void Program::validate() const {
  if (vars.empty()) throw malformed_program("no variables declared");
  if (node_ids.empty()) throw malformed_program("no nodes");
  if (node_ids.size() != instrs.size()) throw malformed_program("node/instruction mismatch");
  if (entry < 0 || entry >= static_cast<int>(node_ids.size()))
    throw malformed_program("entry node out of range");
  const int nv = static_cast<int>(vars.size());
  const int nn = static_cast<int>(node_ids.size());
  for (auto [a, b] : edges)
    if (a < 0 || a >= nn || b < 0 || b >= nn) throw malformed_program("edge endpoint out of range");
  for (const auto& ins : instrs) {
    auto chk = [&](int v) {
      if (v < 0 || v >= nv) throw malformed_program("instruction variable out of range");
    };
    switch (ins.kind) {
      case Instr::Kind::AssignConst: chk(ins.var); break;
      case Instr::Kind::AssignVar: chk(ins.var); chk(ins.lhs); break;
      case Instr::Kind::AssignAdd:
      case Instr::Kind::AssignMul: chk(ins.var); chk(ins.lhs); chk(ins.rhs); break;
      case Instr::Kind::Skip: break;
    }
  }
}

bool state_leq(const SignState& a, const SignState& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!sign_leq(a[i], b[i])) return false;
  return true;
}

SignState state_join(const SignState& a, const SignState& b) {
  SignState r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sign_join(a[i], b[i]);
  return r;
}

SignState global_transfer(const Program& prog, const std::vector<Sign>& entry_state,
                          const SignState& state) {
  const int nv = static_cast<int>(prog.vars.size());
  const int nn = static_cast<int>(prog.node_ids.size());
  SignState out(static_cast<size_t>(nn) * nv, Sign::Bot);
  for (int n = 0; n < nn; ++n) {
    std::vector<Sign> in(nv, Sign::Bot);
    if (n == prog.entry)
      for (int v = 0; v < nv; ++v) in[v] = entry_state[v];
    for (auto [a, b] : prog.edges)
      if (b == n)
        for (int v = 0; v < nv; ++v) in[v] = sign_join(in[v], state[a * nv + v]);
    const Instr& ins = prog.instrs[n];
    std::vector<Sign> o = in;
    switch (ins.kind) {
      case Instr::Kind::AssignConst: o[ins.var] = sign_of(ins.value); break;
      case Instr::Kind::AssignVar: o[ins.var] = in[ins.lhs]; break;
      case Instr::Kind::AssignAdd: o[ins.var] = abstract_add(in[ins.lhs], in[ins.rhs]); break;
      case Instr::Kind::AssignMul: o[ins.var] = abstract_mul(in[ins.lhs], in[ins.rhs]); break;
      case Instr::Kind::Skip: break;
    }
    for (int v = 0; v < nv; ++v) out[n * nv + v] = o[v];
  }
  return out;
}

SolveResult solve(const Program& prog, const std::vector<Sign>& entry_state, long budget) {
  prog.validate();
  if (entry_state.size() != prog.vars.size())
    throw malformed_program("entry state must cover every variable");
  const size_t cells = prog.node_ids.size() * prog.vars.size();
  ImplicitLattice<SignState> lat{
      state_leq,
      state_join,
      [](const SignState& a, const SignState& b) { return a == b; },
      SignState(cells, Sign::Bot),
      SignState(cells, Sign::Top),
      static_cast<long>(cells) * 2 + 1,
  };
  auto res = iterate_ascending<SignState>(
      lat, [&](const SignState& s) { return global_transfer(prog, entry_state, s); },
      lat.bottom, budget);
  if (!res.converged)
    throw DomainError("BudgetExhausted",
                      "transfer did not stabilize; monotonicity bug in the client");
  return {std::move(res.value), res.iterations};
}

std::string render_solution(const Program& prog, const SolveResult& r) {
  std::ostringstream os;
  const int nv = static_cast<int>(prog.vars.size());
  for (size_t n = 0; n < prog.node_ids.size(); ++n) {
    os << prog.node_ids[n] << ":";
    for (int v = 0; v < nv; ++v) os << " " << prog.vars[v] << "=" << to_string(r.out[n * nv + v]);
    os << "\n";
  }
  os << "iterations=" << r.iterations << "\n";
  return os.str();
}

}  // namespace fixlat
