#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "silk/expr.hpp"
#include "silk/sequent.hpp"
#include "silk/signature.hpp"

namespace silk {

inline constexpr std::size_t kDefaultFuel = 100000;
inline constexpr const char* kStrategy = "leftmost-innermost";

// fhat(tbar) == E. Variables of the lhs are the rule's pattern variables.
struct RewriteRule {
  Expr lhs;
  Expr rhs;
};

struct EquationalTheory {
  Signature sig;
  std::vector<RewriteRule> rules;
  std::size_t fuel_default = kDefaultFuel;
};

// One problem with one rule (index into rules, or -1 for the theory).
struct TheoryIssue {
  int rule = -1;
  std::string message;
};

// Empty result means the theory is admissible. Convergence is not checked.
std::vector<TheoryIssue> validate_theory(const EquationalTheory& th);

class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(std::size_t steps)
      : std::runtime_error("no normal form within " + std::to_string(steps) + " rewrite steps"),
        steps_(steps) {}
  std::size_t steps() const { return steps_; }

 private:
  std::size_t steps_;
};

// A ground defined application that no rule reduces.
class StuckTerm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormalizationResult {
  Expr value;
  std::size_t steps_used = 0;
};

// Built-in numeric addition. Both argument orientations are oriented so that
// n + 1 reduces to s(n) as well as 1 + n to s(n):
//   0 + b -> b,  s(a) + b -> s(a + b),  a + 0 -> a,  a + s(b) -> s(a + b)
std::optional<Expr> builtin_step(const Expr& e);

// Leftmost-innermost normalizer. Results are memoized for the lifetime of
// the object, so one instance can be reused across a whole proof; fuel is
// counted per top-level call.
class Normalizer {
 public:
  explicit Normalizer(const EquationalTheory& th, std::size_t fuel = 0);

  NormalizationResult normalize(const Expr& e);
  Sequent normalize(const Sequent& s);
  std::size_t total_steps() const { return total_steps_; }
  std::size_t fuel() const { return fuel_; }

 private:
  Expr norm(const Expr& e);
  std::optional<Expr> step_at_root(const Expr& e);

  const EquationalTheory& th_;
  std::size_t fuel_;
  std::size_t used_ = 0;
  std::size_t total_steps_ = 0;
  // Keyed by structure, so equal terms built separately share one entry.
  std::unordered_map<Expr, Expr, ExprHash, ExprEq> memo_;
  std::map<std::string, std::vector<std::size_t>> by_head_;
};

NormalizationResult normalize(const Expr& e, const EquationalTheory& th, std::size_t fuel = 0);

// Joinability under the theory. Throws FuelExhausted.
bool equivalent(const Expr& a, const Expr& b, const EquationalTheory& th, std::size_t fuel = 0);

// Numeral value of a ground numeric expression. Throws FuelExhausted or
// StuckTerm.
std::uint64_t eval_numeric(const Expr& e, const EquationalTheory& th, std::size_t fuel = 0);

// Syntactic first-order matching of a rule pattern against a closed-world
// term; pattern variables are the Var nodes of the pattern.
bool match(const Expr& pattern, const Expr& target, std::map<std::pair<std::string, Sort>, Expr>& binding);

// Normalize only the built-in arithmetic (used for rule left-hand sides and
// step parameters).
Expr normalize_arith(const Expr& e);

}  // namespace silk
