#include "silk/sequent.hpp"

#include <algorithm>

namespace silk {

bool multiset_eq(const Formulas& a, const Formulas& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& f : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && equal(f, b[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool sequent_eq(const Sequent& a, const Sequent& b) {
  return multiset_eq(a.ante, b.ante) && multiset_eq(a.succ, b.succ);
}

Formulas multiset_minus(const Formulas& a, const Formulas& b) {
  std::vector<bool> used(b.size(), false);
  Formulas out;
  for (const auto& f : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && equal(f, b[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) out.push_back(f);
  }
  return out;
}

Formulas multiset_union(const Formulas& a, const Formulas& b) {
  Formulas out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool multiset_contains(const Formulas& a, const Expr& f) {
  return std::any_of(a.begin(), a.end(), [&](const Expr& g) { return equal(f, g); });
}

bool multiset_remove(Formulas& a, const Expr& f) {
  auto it = std::find_if(a.begin(), a.end(), [&](const Expr& g) { return equal(f, g); });
  if (it == a.end()) return false;
  a.erase(it);
  return true;
}

std::set<std::string> free_vars(const Sequent& s, Sort sort) {
  std::set<std::string> out;
  for (const auto* side : {&s.ante, &s.succ}) {
    for (const auto& f : *side) {
      auto v = free_vars(f, sort);
      out.insert(v.begin(), v.end());
    }
  }
  return out;
}

std::set<std::string> free_params(const Sequent& s) { return free_vars(s, Sort::Nat); }

Substitution& Substitution::bind_nat(const std::string& var, Expr e) {
  if (e->sort() != Sort::Nat) {
    throw SortMismatch("cannot substitute a " + std::string(sort_name(e->sort())) +
                       " expression for numeric variable " + var);
  }
  if (e->loose_bound() != 0) throw std::logic_error("substitution range must be closed");
  nat_[var] = std::move(e);
  return *this;
}

Substitution& Substitution::bind_ind(const std::string& var, Expr t) {
  if (t->sort() != Sort::Ind) {
    throw SortMismatch("cannot substitute a " + std::string(sort_name(t->sort())) +
                       " expression for individual variable " + var);
  }
  if (t->loose_bound() != 0) throw std::logic_error("substitution range must be closed");
  ind_[var] = std::move(t);
  return *this;
}

Substitution& Substitution::rename_schematic(const std::string& from, const std::string& to) {
  schem_[from] = to;
  return *this;
}

Expr Substitution::apply(const Expr& e) const {
  if (!e->has_vars()) return e;
  switch (e->kind()) {
    case Kind::Var: {
      const auto& m = e->sort() == Sort::Nat ? nat_ : ind_;
      auto it = m.find(e->name());
      return it == m.end() ? e : it->second;
    }
    case Kind::SchemVar: {
      Expr idx = apply(e->arg(0));
      auto it = schem_.find(e->name());
      return schem_var(it == schem_.end() ? e->name() : it->second, idx);
    }
    default: break;
  }
  std::vector<Expr> args;
  args.reserve(e->args().size());
  for (const auto& a : e->args()) args.push_back(apply(a));
  return with_args(e, std::move(args));
}

Formulas Substitution::apply(const Formulas& fs) const {
  Formulas out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(apply(f));
  return out;
}

Sequent Substitution::apply(const Sequent& s) const { return {apply(s.ante), apply(s.succ)}; }

Expr subst_param(const Expr& x, const Expr& e) { return Substitution().bind_param(e).apply(x); }

Sequent subst_param(const Sequent& s, const Expr& e) { return Substitution().bind_param(e).apply(s); }

}  // namespace silk
