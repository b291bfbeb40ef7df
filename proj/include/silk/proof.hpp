#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "silk/expr.hpp"
#include "silk/sequent.hpp"

namespace silk {

enum class Rule : std::uint8_t {
  Ax,
  Cut,
  AndL,
  AndR,
  OrL,
  OrR,
  NegL,
  NegR,
  ImpL,
  ImpR,
  ContrL,
  ContrR,
  WeakL,
  WeakR,
  ForallL,
  ForallR,
  ExistsL,
  ExistsR,
  ERule,
  Link,
};

inline constexpr int kRuleCount = 20;

const char* rule_name(Rule r);   // "ImpL"
const char* rule_label(Rule r);  // "->:l"
// Accepts the canonical name, the label and a few spellings ("w:l", "E").
std::optional<Rule> parse_rule(const std::string& s);
int rule_arity(Rule r);

// (target, k, tbar)
struct LinkData {
  std::string target;
  Expr param;
  std::vector<Expr> terms;
};

struct RuleData {
  std::optional<Expr> term;                      // ForallL, ExistsR
  std::optional<std::string> eigen;              // ForallR, ExistsL
  std::optional<std::vector<std::size_t>> at;    // ERule: position inside the rewritten formula
  std::optional<LinkData> link;                  // Link
};

struct Proof {
  Sequent conclusion;
  Rule rule = Rule::Ax;
  std::vector<Proof> premises;
  RuleData data;

  Proof() = default;
  Proof(const Proof&) = default;
  Proof(Proof&&) noexcept = default;
  Proof& operator=(const Proof&) = default;
  Proof& operator=(Proof&&) noexcept = default;
  // Unrolled proofs get deep; tear them down without recursion.
  ~Proof();
};

Proof make_ax(const Expr& a);
Proof make_link(Sequent conclusion, LinkData link);
Proof make_unary(Rule r, Sequent conclusion, Proof premise, RuleData data = {});
Proof make_binary(Rule r, Sequent conclusion, Proof left, Proof right);

using RuleCounts = std::map<Rule, std::size_t>;

// Inferences by rule; Ax and Link leaves are not counted.
RuleCounts count_inferences(const Proof& p);
std::size_t total_inferences(const RuleCounts& c);
std::size_t proof_size(const Proof& p);

bool proof_eq(const Proof& a, const Proof& b);

// Apply a substitution to every sequent and to the rule data.
Proof subst_proof(const Proof& p, const Substitution& s);
// Rename a free individual variable everywhere, eigenvariable data included.
Proof rename_ind(const Proof& p, const std::string& from, const std::string& to);
// Eigenvariable names used in p.
std::set<std::string> eigenvariables(const Proof& p);

// Visit every node in pre-order without recursion.
template <class F>
void for_each_node(const Proof& p, F&& f) {
  std::vector<const Proof*> stack{&p};
  while (!stack.empty()) {
    const Proof* cur = stack.back();
    stack.pop_back();
    f(*cur);
    for (auto it = cur->premises.rbegin(); it != cur->premises.rend(); ++it) stack.push_back(&*it);
  }
}

}  // namespace silk
