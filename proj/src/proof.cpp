#include "silk/proof.hpp"

#include <algorithm>
#include <cctype>

namespace silk {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
  const char* label;
  int arity;
};

constexpr RuleInfo kRules[] = {
    {Rule::Ax, "Ax", "ax", 0},
    {Rule::Cut, "Cut", "cut", 2},
    {Rule::AndL, "AndL", "/\\:l", 1},
    {Rule::AndR, "AndR", "/\\:r", 2},
    {Rule::OrL, "OrL", "\\/:l", 2},
    {Rule::OrR, "OrR", "\\/:r", 1},
    {Rule::NegL, "NegL", "~:l", 1},
    {Rule::NegR, "NegR", "~:r", 1},
    {Rule::ImpL, "ImpL", "->:l", 2},
    {Rule::ImpR, "ImpR", "->:r", 1},
    {Rule::ContrL, "ContrL", "c:l", 1},
    {Rule::ContrR, "ContrR", "c:r", 1},
    {Rule::WeakL, "WeakL", "w:l", 1},
    {Rule::WeakR, "WeakR", "w:r", 1},
    {Rule::ForallL, "ForallL", "forall:l", 1},
    {Rule::ForallR, "ForallR", "forall:r", 1},
    {Rule::ExistsL, "ExistsL", "exists:l", 1},
    {Rule::ExistsR, "ExistsR", "exists:r", 1},
    {Rule::ERule, "ERule", "E", 1},
    {Rule::Link, "Link", "link", 0},
};

const RuleInfo& info(Rule r) { return kRules[static_cast<int>(r)]; }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

const char* rule_name(Rule r) { return info(r).name; }
const char* rule_label(Rule r) { return info(r).label; }
int rule_arity(Rule r) { return info(r).arity; }

std::optional<Rule> parse_rule(const std::string& s) {
  const std::string l = lower(s);
  for (const auto& ri : kRules) {
    if (l == lower(ri.name) || l == lower(ri.label)) return ri.rule;
  }
  if (l == "and:l" || l == "&:l") return Rule::AndL;
  if (l == "and:r" || l == "&:r") return Rule::AndR;
  if (l == "or:l") return Rule::OrL;
  if (l == "or:r") return Rule::OrR;
  if (l == "neg:l" || l == "not:l") return Rule::NegL;
  if (l == "neg:r" || l == "not:r") return Rule::NegR;
  if (l == "imp:l") return Rule::ImpL;
  if (l == "imp:r") return Rule::ImpR;
  if (l == "all:l") return Rule::ForallL;
  if (l == "all:r") return Rule::ForallR;
  if (l == "ex:l") return Rule::ExistsL;
  if (l == "ex:r") return Rule::ExistsR;
  if (l == "eq" || l == "e-rule") return Rule::ERule;
  return std::nullopt;
}

Proof::~Proof() {
  if (premises.empty()) return;
  std::vector<Proof> pending = std::move(premises);
  premises.clear();
  while (!pending.empty()) {
    Proof cur = std::move(pending.back());
    pending.pop_back();
    for (auto& q : cur.premises) pending.push_back(std::move(q));
    cur.premises.clear();
  }
}

Proof make_ax(const Expr& a) {
  Proof p;
  p.conclusion = {{a}, {a}};
  p.rule = Rule::Ax;
  return p;
}

Proof make_link(Sequent conclusion, LinkData link) {
  Proof p;
  p.conclusion = std::move(conclusion);
  p.rule = Rule::Link;
  p.data.link = std::move(link);
  return p;
}

Proof make_unary(Rule r, Sequent conclusion, Proof premise, RuleData data) {
  Proof p;
  p.conclusion = std::move(conclusion);
  p.rule = r;
  p.premises.push_back(std::move(premise));
  p.data = std::move(data);
  return p;
}

Proof make_binary(Rule r, Sequent conclusion, Proof left, Proof right) {
  Proof p;
  p.conclusion = std::move(conclusion);
  p.rule = r;
  p.premises.push_back(std::move(left));
  p.premises.push_back(std::move(right));
  return p;
}

RuleCounts count_inferences(const Proof& p) {
  RuleCounts out;
  for_each_node(p, [&](const Proof& n) {
    if (n.rule != Rule::Ax && n.rule != Rule::Link) ++out[n.rule];
  });
  return out;
}

std::size_t total_inferences(const RuleCounts& c) {
  std::size_t t = 0;
  for (const auto& [r, k] : c) t += k;
  return t;
}

std::size_t proof_size(const Proof& p) {
  std::size_t n = 0;
  for_each_node(p, [&](const Proof&) { ++n; });
  return n;
}

namespace {

bool opt_expr_eq(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || equal(*a, *b);
}

bool data_eq(const RuleData& a, const RuleData& b) {
  if (!opt_expr_eq(a.term, b.term) || a.eigen != b.eigen || a.at != b.at) return false;
  if (a.link.has_value() != b.link.has_value()) return false;
  if (!a.link) return true;
  const LinkData& x = *a.link;
  const LinkData& y = *b.link;
  if (x.target != y.target || !equal(x.param, y.param) || x.terms.size() != y.terms.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    if (!equal(x.terms[i], y.terms[i])) return false;
  }
  return true;
}

bool formulas_eq_ordered(const Formulas& a, const Formulas& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

// Node-for-node equality, sequents compared in stored order.
bool proof_eq(const Proof& a, const Proof& b) {
  std::vector<std::pair<const Proof*, const Proof*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->rule != y->rule || x->premises.size() != y->premises.size()) return false;
    if (!formulas_eq_ordered(x->conclusion.ante, y->conclusion.ante) ||
        !formulas_eq_ordered(x->conclusion.succ, y->conclusion.succ)) {
      return false;
    }
    if (!data_eq(x->data, y->data)) return false;
    for (std::size_t i = 0; i < x->premises.size(); ++i) {
      stack.push_back({&x->premises[i], &y->premises[i]});
    }
  }
  return true;
}

namespace {

RuleData subst_data(const RuleData& d, const Substitution& s) {
  RuleData out = d;
  if (out.term) out.term = s.apply(*out.term);
  if (out.link) {
    out.link->param = s.apply(out.link->param);
    for (auto& t : out.link->terms) t = s.apply(t);
  }
  return out;
}

}  // namespace

Proof subst_proof(const Proof& p, const Substitution& s) {
  Proof out;
  out.conclusion = s.apply(p.conclusion);
  out.rule = p.rule;
  out.data = subst_data(p.data, s);
  out.premises.reserve(p.premises.size());
  for (const auto& q : p.premises) out.premises.push_back(subst_proof(q, s));
  return out;
}

Proof rename_ind(const Proof& p, const std::string& from, const std::string& to) {
  Substitution s;
  s.bind_ind(from, ind_var(to));
  Proof out = subst_proof(p, s);
  std::vector<Proof*> stack{&out};
  while (!stack.empty()) {
    Proof* cur = stack.back();
    stack.pop_back();
    if (cur->data.eigen == from) cur->data.eigen = to;
    for (auto& q : cur->premises) stack.push_back(&q);
  }
  return out;
}

std::set<std::string> eigenvariables(const Proof& p) {
  std::set<std::string> out;
  for_each_node(p, [&](const Proof& n) {
    if (n.data.eigen) out.insert(*n.data.eigen);
  });
  return out;
}

}  // namespace silk
