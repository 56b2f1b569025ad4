#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixlat/engine.hpp"

namespace fixlat {

enum class Sign : std::uint8_t { Bot, Neg, Zero, Pos, Top };

std::string to_string(Sign s);
std::optional<Sign> sign_from_string(const std::string& s);

bool sign_leq(Sign a, Sign b);
Sign sign_join(Sign a, Sign b);
Sign sign_of(long v);

Sign abstract_add(Sign a, Sign b);
Sign abstract_mul(Sign a, Sign b);

struct Instr {
  enum class Kind { AssignConst, AssignVar, AssignAdd, AssignMul, Skip };
  Kind kind = Kind::Skip;
  int var = -1;   // destination
  long value = 0;  // AssignConst
  int lhs = -1, rhs = -1;  // AssignVar uses lhs; Add/Mul use both
};

struct Program {
  std::vector<std::string> vars;
  std::vector<std::string> node_ids;
  std::vector<Instr> instrs;  // one per node
  std::vector<std::pair<int, int>> edges;
  int entry = 0;

  int var_index(const std::string& name) const;
  int node_index(const std::string& id) const;
  void validate() const;  // throws MalformedProgram
};

// Per-node out-states, nodes*vars row-major.
using SignState = std::vector<Sign>;

bool state_leq(const SignState& a, const SignState& b);
SignState state_join(const SignState& a, const SignState& b);

// One application of the global transfer F: in(n) joins the
// predecessors' out-states (the entry node also joins entry_state),
// out(n) is the instruction transfer on in(n).
SignState global_transfer(const Program& prog, const std::vector<Sign>& entry_state,
                          const SignState& state);

struct SolveResult {
  SignState out;
  long iterations = 0;
};

// Kleene iteration of F from all-bottom over the product lattice,
// presented to the engine as an implicit lattice.
SolveResult solve(const Program& prog, const std::vector<Sign>& entry_state, long budget);

std::string render_solution(const Program& prog, const SolveResult& r);

}  // namespace fixlat
