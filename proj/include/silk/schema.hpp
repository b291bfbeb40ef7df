#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "silk/kernel.hpp"

namespace silk {

// (psi, pi, nu(k)) with the end-sequent pattern S(n, xbar).
struct SchemaComponent {
  std::string name;
  Sequent pattern;
  std::vector<std::string> vars;
  Expr step_param;          // k; null for a component without step case
  Proof base;
  std::optional<Proof> step;
};

struct ProofSchema {
  std::vector<SchemaComponent> components;

  const SchemaComponent* find(const std::string& name) const;
  int index_of(const std::string& name) const;
};

LinkEnv link_env(const ProofSchema& s);

// Thrown when a numeral cannot be matched against a step parameter.
class MatchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// c when k normalizes to s^c(n) with c >= 1.
std::optional<std::uint64_t> step_offset(const Expr& k);

struct SchemaOptions {
  std::size_t fuel = 0;
  bool lenient_erule = false;
  // Self-links must decrease for every n in 0..decrease_horizon.
  std::uint64_t decrease_horizon = 16;
};

CheckReport check_schema(const ProofSchema& s, const EquationalTheory& th,
                         const SchemaOptions& opt = {});

struct LinkExpansion {
  std::string target;
  std::uint64_t value;
  std::vector<Expr> terms;
};

struct UnrollTrace {
  std::vector<LinkExpansion> expansions;
  std::size_t rewrite_steps = 0;
  // Links replaced, defined symbols kept, E bridges where an expanded
  // conclusion differs from the link it replaces.
  Proof unrolled;
  // Every sequent normalized; E inferences that became identities dropped.
  Proof proof;
};

// Phi[n\alpha] evaluated from the first component.
UnrollTrace evaluate(const ProofSchema& s, std::uint64_t alpha, const EquationalTheory& th,
                     std::size_t fuel = 0);

struct EvalCheck {
  CheckReport report;
  RuleCounts unrolled_counts;
  std::size_t rewrite_steps = 0;
};

// check_schema, evaluate, then check the normalized proof in LK and compare
// its end-sequent with the normalized instance of the pattern.
EvalCheck evaluate_and_check(const ProofSchema& s, std::uint64_t alpha, const EquationalTheory& th,
                             const SchemaOptions& opt = {});

}  // namespace silk
