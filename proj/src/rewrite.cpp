#include "silk/rewrite.hpp"

#include "silk/print.hpp"

namespace silk {

namespace {

void collect_rule_vars(const Expr& e, std::set<std::pair<std::string, Sort>>& out) {
  if (!e->has_vars()) return;
  if (e->kind() == Kind::Var) {
    out.insert({e->name(), e->sort()});
    return;
  }
  if (e->kind() == Kind::SchemVar) out.insert({e->name() + "[]", Sort::Ind});
  for (const auto& a : e->args()) collect_rule_vars(a, out);
}

Expr instantiate_rule(const Expr& e, const std::map<std::pair<std::string, Sort>, Expr>& b) {
  if (!e->has_vars()) return e;
  if (e->kind() == Kind::Var) {
    auto it = b.find({e->name(), e->sort()});
    return it == b.end() ? e : it->second;
  }
  std::vector<Expr> args;
  args.reserve(e->args().size());
  for (const auto& a : e->args()) args.push_back(instantiate_rule(a, b));
  return with_args(e, std::move(args));
}

const EquationalTheory& empty_theory() {
  static const EquationalTheory th;
  return th;
}

}  // namespace

std::vector<TheoryIssue> validate_theory(const EquationalTheory& th) {
  std::vector<TheoryIssue> issues;
  for (std::size_t i = 0; i < th.rules.size(); ++i) {
    const RewriteRule& r = th.rules[i];
    const int idx = static_cast<int>(i);
    const std::string shown = to_string(r.lhs) + " == " + to_string(r.rhs);
    if (r.lhs->kind() != Kind::App || !th.sig.is_defined(r.lhs->name())) {
      issues.push_back({idx, "left-hand side of '" + shown + "' is not headed by a defined symbol"});
    } else {
      for (const auto& a : r.lhs->args()) {
        if (has_defined_symbol(a, th.sig)) {
          issues.push_back({idx, "argument '" + to_string(a) + "' of '" + shown +
                                     "' contains a defined symbol"});
        }
      }
    }
    if (r.lhs->sort() != r.rhs->sort()) {
      issues.push_back({idx, "sides of '" + shown + "' have different sorts"});
    }
    std::set<std::pair<std::string, Sort>> lv, rv;
    collect_rule_vars(r.lhs, lv);
    collect_rule_vars(r.rhs, rv);
    for (const auto& v : rv) {
      if (!lv.count(v)) {
        issues.push_back({idx, "variable '" + v.first + "' of the right-hand side of '" + shown +
                                   "' does not occur on the left"});
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (equal(th.rules[j].lhs, r.lhs)) {
        issues.push_back({idx, "duplicate left-hand side '" + to_string(r.lhs) + "'"});
      }
    }
  }
  return issues;
}

bool match(const Expr& pattern, const Expr& target,
           std::map<std::pair<std::string, Sort>, Expr>& binding) {
  if (pattern->kind() == Kind::Var) {
    if (pattern->sort() != target->sort()) return false;
    auto key = std::make_pair(pattern->name(), pattern->sort());
    auto it = binding.find(key);
    if (it != binding.end()) return equal(it->second, target);
    binding.emplace(key, target);
    return true;
  }
  if (!pattern->has_vars()) return equal(pattern, target);
  if (pattern->kind() != target->kind() || pattern->sort() != target->sort() ||
      pattern->args().size() != target->args().size() || pattern->name() != target->name() ||
      pattern->index() != target->index()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern->args().size(); ++i) {
    if (!match(pattern->arg(i), target->arg(i), binding)) return false;
  }
  return true;
}

std::optional<Expr> builtin_step(const Expr& e) {
  if (e->kind() != Kind::Add) return std::nullopt;
  const Expr& a = e->arg(0);
  const Expr& b = e->arg(1);
  if (a->kind() == Kind::Zero) return b;
  if (a->kind() == Kind::Succ) return succ(add(a->arg(0), b));
  if (b->kind() == Kind::Zero) return a;
  if (b->kind() == Kind::Succ) return succ(add(a, b->arg(0)));
  return std::nullopt;
}

Normalizer::Normalizer(const EquationalTheory& th, std::size_t fuel)
    : th_(th), fuel_(fuel == 0 ? th.fuel_default : fuel) {
  for (std::size_t i = 0; i < th_.rules.size(); ++i) {
    const Expr& l = th_.rules[i].lhs;
    if (l->kind() == Kind::App) by_head_[l->name()].push_back(i);
  }
}

std::optional<Expr> Normalizer::step_at_root(const Expr& e) {
  if (e->kind() == Kind::Add) return builtin_step(e);
  if (e->kind() != Kind::App) return std::nullopt;
  auto it = by_head_.find(e->name());
  if (it == by_head_.end()) return std::nullopt;
  for (std::size_t i : it->second) {
    const RewriteRule& r = th_.rules[i];
    std::map<std::pair<std::string, Sort>, Expr> binding;
    if (match(r.lhs, e, binding)) return instantiate_rule(r.rhs, binding);
  }
  return std::nullopt;
}

Expr Normalizer::norm(const Expr& e) {
  if (e->args().empty() && e->kind() != Kind::App) return e;
  auto hit = memo_.find(e);
  if (hit != memo_.end()) return hit->second;

  std::vector<Expr> args;
  args.reserve(e->args().size());
  for (const auto& a : e->args()) args.push_back(norm(a));
  Expr cur = with_args(e, std::move(args));

  Expr result = cur;
  if (auto next = step_at_root(cur)) {
    if (++used_ > fuel_) throw FuelExhausted(fuel_);
    ++total_steps_;
    result = norm(*next);
  }
  memo_.emplace(e, result);
  if (result.get() != e.get()) memo_.emplace(result, result);
  return result;
}

NormalizationResult Normalizer::normalize(const Expr& e) {
  used_ = 0;
  Expr v = norm(e);
  return {v, used_};
}

Sequent Normalizer::normalize(const Sequent& s) {
  Sequent out;
  for (const auto& f : s.ante) out.ante.push_back(normalize(f).value);
  for (const auto& f : s.succ) out.succ.push_back(normalize(f).value);
  return out;
}

NormalizationResult normalize(const Expr& e, const EquationalTheory& th, std::size_t fuel) {
  Normalizer nz(th, fuel);
  return nz.normalize(e);
}

bool equivalent(const Expr& a, const Expr& b, const EquationalTheory& th, std::size_t fuel) {
  if (equal(a, b)) return true;
  if (a->sort() != b->sort()) return false;
  Normalizer nz(th, fuel);
  Expr na = nz.normalize(a).value;
  Expr nb = nz.normalize(b).value;
  return equal(na, nb);
}

std::uint64_t eval_numeric(const Expr& e, const EquationalTheory& th, std::size_t fuel) {
  if (e->sort() != Sort::Nat) throw SortMismatch("eval_numeric expects a numeric expression");
  if (!free_params(e).empty()) {
    throw std::invalid_argument("'" + to_string(e) + "' is not ground");
  }
  Expr v = normalize(e, th, fuel).value;
  if (auto k = numeral_value(v)) return *k;
  throw StuckTerm("'" + to_string(e) + "' normalizes to '" + to_string(v) +
                  "', which is not a numeral");
}

Expr normalize_arith(const Expr& e) { return normalize(e, empty_theory()).value; }

}  // namespace silk
