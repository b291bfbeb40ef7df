#include "silk/kernel.hpp"

#include "silk/print.hpp"

namespace silk {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::LK: return "LK";
    case Mode::LKE: return "LKE";
    case Mode::LKS: return "LKS";
  }
  return "?";
}

Sequent link_instance(const LinkTarget& t, const Expr& k, const std::vector<Expr>& terms) {
  Substitution s;
  s.bind_param(k);
  for (std::size_t i = 0; i < t.vars.size() && i < terms.size(); ++i) s.bind_ind(t.vars[i], terms[i]);
  return s.apply(t.pattern);
}

namespace {

std::string show(const Formulas& fs) { return fs.empty() ? "nothing" : to_string(fs); }

// Differences between a conclusion and one premise, per side.
struct Delta {
  Formulas added_ante, removed_ante, added_succ, removed_succ;
};

Delta delta(const Sequent& concl, const Sequent& prem) {
  return {multiset_minus(concl.ante, prem.ante), multiset_minus(prem.ante, concl.ante),
          multiset_minus(concl.succ, prem.succ), multiset_minus(prem.succ, concl.succ)};
}

Sequent merge(const Sequent& a, const Sequent& b) {
  return {multiset_union(a.ante, b.ante), multiset_union(a.succ, b.succ)};
}

// One new formula on the named side, nothing else changes except the
// auxiliary formulas listed in `aux_ante` / `aux_succ`.
std::string expect_shape(const Delta& d, bool left, Kind principal_kind, const char* what) {
  const Formulas& added = left ? d.added_ante : d.added_succ;
  const Formulas& other_added = left ? d.added_succ : d.added_ante;
  if (added.size() != 1 || !other_added.empty()) {
    return std::string("expected exactly one new ") + what + " on the " +
           (left ? "left" : "right") + ", found " + show(added) +
           (other_added.empty() ? "" : " and " + show(other_added) + " on the other side");
  }
  if (added[0]->kind() != principal_kind) {
    return "principal formula '" + to_string(added[0]) + "' is not " + what;
  }
  return {};
}

std::string want_removed(const Formulas& removed, const Formulas& want, const char* side) {
  if (!multiset_eq(removed, want)) {
    return std::string("premise ") + side + " should contribute " + show(want) + ", found " +
           show(removed);
  }
  return {};
}

std::string check_quant_inst(const Proof& p, bool left, Kind k) {
  const Delta d = delta(p.conclusion, p.premises[0].conclusion);
  const char* what = k == Kind::Forall ? "universal formula" : "existential formula";
  if (auto e = expect_shape(d, left, k, what); !e.empty()) return e;
  if (!p.data.term) return "missing 'data term' for the instantiated term";
  const Expr& q = left ? d.added_ante[0] : d.added_succ[0];
  const Expr& t = *p.data.term;
  if (t->sort() != q->binder_sort()) {
    return "term '" + to_string(t) + "' has sort " + sort_name(t->sort()) + ", binder expects " +
           sort_name(q->binder_sort());
  }
  if (t->loose_bound() != 0) return "term '" + to_string(t) + "' is not closed";
  Expr inst = instantiate(q->arg(0), t);
  if (left) {
    if (!d.removed_succ.empty()) return "succedent changed: " + show(d.removed_succ);
    return want_removed(d.removed_ante, {inst}, "antecedent");
  }
  if (!d.removed_ante.empty()) return "antecedent changed: " + show(d.removed_ante);
  return want_removed(d.removed_succ, {inst}, "succedent");
}

std::string check_eigen(const Proof& p, bool left, Kind k) {
  const Delta d = delta(p.conclusion, p.premises[0].conclusion);
  const char* what = k == Kind::Forall ? "universal formula" : "existential formula";
  if (auto e = expect_shape(d, left, k, what); !e.empty()) return e;
  if (!p.data.eigen) return "missing 'data eigen' for the eigenvariable";
  const std::string& a = *p.data.eigen;
  const Expr& q = left ? d.added_ante[0] : d.added_succ[0];
  if (q->binder_sort() != Sort::Ind) return "eigenvariable rules need an individual binder";
  if (free_vars(p.conclusion, Sort::Ind).count(a)) {
    return "eigenvariable '" + a + "' occurs in the conclusion " + to_string(p.conclusion);
  }
  Expr inst = instantiate(q->arg(0), ind_var(a));
  if (left) {
    if (!d.removed_succ.empty()) return "succedent changed: " + show(d.removed_succ);
    return want_removed(d.removed_ante, {inst}, "antecedent");
  }
  if (!d.removed_ante.empty()) return "antecedent changed: " + show(d.removed_ante);
  return want_removed(d.removed_succ, {inst}, "succedent");
}

// Shared check for AndR, OrL, ImpL: the conclusion is the union of the
// premises with the two auxiliary formulas replaced by the principal one.
std::string check_binary(const Proof& p) {
  const Sequent& l = p.premises[0].conclusion;
  const Sequent& r = p.premises[1].conclusion;
  const Sequent u = merge(l, r);
  const Delta d = delta(p.conclusion, u);
  Kind k;
  bool left;
  switch (p.rule) {
    case Rule::AndR: k = Kind::And; left = false; break;
    case Rule::OrL: k = Kind::Or; left = true; break;
    default: k = Kind::Imp; left = true; break;
  }
  const char* what = k == Kind::And ? "conjunction" : k == Kind::Or ? "disjunction" : "implication";
  if (auto e = expect_shape(d, left, k, what); !e.empty()) return e;
  const Expr& x = left ? d.added_ante[0] : d.added_succ[0];
  const Expr& a = x->arg(0);
  const Expr& b = x->arg(1);
  Sequent expect;
  if (p.rule == Rule::AndR) {
    if (!multiset_contains(l.succ, a)) return "left premise lacks '" + to_string(a) + "' on the right";
    if (!multiset_contains(r.succ, b)) return "right premise lacks '" + to_string(b) + "' on the right";
    Formulas ls = l.succ, rs = r.succ;
    multiset_remove(ls, a);
    multiset_remove(rs, b);
    expect = {u.ante, multiset_union(multiset_union(ls, rs), {x})};
  } else if (p.rule == Rule::OrL) {
    if (!multiset_contains(l.ante, a)) return "left premise lacks '" + to_string(a) + "' on the left";
    if (!multiset_contains(r.ante, b)) return "right premise lacks '" + to_string(b) + "' on the left";
    Formulas la = l.ante, ra = r.ante;
    multiset_remove(la, a);
    multiset_remove(ra, b);
    expect = {multiset_union(multiset_union(la, ra), {x}), u.succ};
  } else {
    if (!multiset_contains(l.succ, a)) return "left premise lacks '" + to_string(a) + "' on the right";
    if (!multiset_contains(r.ante, b)) return "right premise lacks '" + to_string(b) + "' on the left";
    Formulas ls = l.succ, ra = r.ante;
    multiset_remove(ls, a);
    multiset_remove(ra, b);
    expect = {multiset_union(multiset_union(l.ante, ra), {x}), multiset_union(ls, r.succ)};
  }
  if (!sequent_eq(expect, p.conclusion)) {
    return "conclusion should be " + to_string(expect);
  }
  return {};
}

std::string check_cut(const Proof& p) {
  const Sequent& l = p.premises[0].conclusion;
  const Sequent& r = p.premises[1].conclusion;
  const Sequent u = merge(l, r);
  const Delta d = delta(p.conclusion, u);
  if (!d.added_ante.empty() || !d.added_succ.empty()) {
    return "conclusion contains formulas absent from the premises: " +
           show(multiset_union(d.added_ante, d.added_succ));
  }
  if (d.removed_succ.size() != 1 || d.removed_ante.size() != 1 ||
      !equal(d.removed_succ[0], d.removed_ante[0])) {
    return "premises should differ from the conclusion by one cut formula on each side";
  }
  const Expr& a = d.removed_succ[0];
  if (!multiset_contains(l.succ, a) || !multiset_contains(r.ante, a)) {
    return "cut formula '" + to_string(a) + "' must be right of the left premise and left of the right one";
  }
  return {};
}

std::string check_erule(const Proof& p, const EquationalTheory& th, const CheckOptions& opt,
                        Normalizer& nz) {
  const Sequent& prem = p.premises[0].conclusion;
  const Delta d = delta(p.conclusion, prem);
  if (d.added_ante.empty() && d.added_succ.empty() && d.removed_ante.empty() &&
      d.removed_succ.empty()) {
    return {};
  }
  if (opt.lenient_erule && !p.data.at) {
    Sequent a = nz.normalize(p.conclusion);
    Sequent b = nz.normalize(prem);
    if (sequent_eq(a, b)) return {};
    return "sequents have different normal forms: " + to_string(a) + " vs " + to_string(b);
  }
  Expr from, to;
  if (d.added_ante.size() == 1 && d.removed_ante.size() == 1 && d.added_succ.empty() &&
      d.removed_succ.empty()) {
    from = d.removed_ante[0];
    to = d.added_ante[0];
  } else if (d.added_succ.size() == 1 && d.removed_succ.size() == 1 && d.added_ante.empty() &&
             d.removed_ante.empty()) {
    from = d.removed_succ[0];
    to = d.added_succ[0];
  } else {
    return "an E inference rewrites exactly one formula; premise " + to_string(prem) +
           " and conclusion " + to_string(p.conclusion) + " differ elsewhere";
  }
  std::vector<std::size_t> path;
  if (p.data.at) {
    path = *p.data.at;
    auto s1 = subexpr_at(from, path);
    auto s2 = subexpr_at(to, path);
    if (!s1 || !s2) return "position witness is not a position of both formulas";
    if (!equal(replace_at(from, path, *s2), to)) {
      return "formulas differ outside the witnessed position";
    }
  } else {
    // Deepest common position first, then its ancestors: the rewritten
    // occurrence may be larger than the place where the two differ.
    path = *difference_path(from, to);
    std::string first_error;
    for (;;) {
      Expr t1 = *subexpr_at(from, path);
      Expr t2 = *subexpr_at(to, path);
      if (t1->loose_bound() == 0 && t2->loose_bound() == 0) {
        Expr n1 = nz.normalize(t1).value;
        Expr n2 = nz.normalize(t2).value;
        if (equal(n1, n2)) return {};
        if (first_error.empty()) {
          first_error = "'" + to_string(t1) + "' and '" + to_string(t2) +
                        "' are not E-equivalent (normal forms '" + to_string(n1) + "' and '" +
                        to_string(n2) + "')";
        }
      }
      if (path.empty()) break;
      path.pop_back();
    }
    return first_error.empty() ? "no closed subterm of the rewritten formula is E-equivalent" : first_error;
  }
  Expr t1 = *subexpr_at(from, path);
  Expr t2 = *subexpr_at(to, path);
  if (t1->sort() != t2->sort()) return "rewritten subterms have different sorts";
  Expr n1 = nz.normalize(t1).value;
  Expr n2 = nz.normalize(t2).value;
  if (!equal(n1, n2)) {
    return "'" + to_string(t1) + "' and '" + to_string(t2) + "' are not E-equivalent (normal forms '" +
           to_string(n1) + "' and '" + to_string(n2) + "')";
  }
  (void)th;
  return {};
}

std::string check_link(const Proof& p, const LinkEnv& env, const CheckOptions& opt) {
  if (!p.data.link) return "missing 'data link'";
  const LinkData& l = *p.data.link;
  auto it = env.find(l.target);
  if (it == env.end()) return "link to unknown proof symbol '" + l.target + "'";
  const LinkTarget& t = it->second;
  if (l.param->sort() != Sort::Nat) return "link parameter must be numeric";
  for (const auto& v : free_params(l.param)) {
    if (!opt.allowed_link_params.count(v)) {
      return "link parameter '" + to_string(l.param) + "' uses '" + v + "', which is not allowed here";
    }
  }
  if (l.terms.size() != t.vars.size()) {
    return "link to '" + l.target + "' expects " + std::to_string(t.vars.size()) + " terms, got " +
           std::to_string(l.terms.size());
  }
  for (const auto& term : l.terms) {
    if (term->sort() != Sort::Ind) return "link term '" + to_string(term) + "' is not an individual";
  }
  Sequent want = link_instance(t, l.param, l.terms);
  if (!sequent_eq(want, p.conclusion)) {
    return "link conclusion should be " + to_string(want);
  }
  return {};
}

}  // namespace

std::string check_node(const Proof& p, const EquationalTheory& th, const LinkEnv& env,
                       const CheckOptions& opt, Normalizer& nz) {
  const int arity = rule_arity(p.rule);
  if (static_cast<int>(p.premises.size()) != arity) {
    return std::string(rule_name(p.rule)) + " takes " + std::to_string(arity) + " premises, found " +
           std::to_string(p.premises.size());
  }
  if (p.rule == Rule::ERule && opt.mode == Mode::LK) return "E inferences are not part of LK";
  if (p.rule == Rule::Link && opt.mode != Mode::LKS) {
    return std::string("links are not allowed in ") + mode_name(opt.mode);
  }

  switch (p.rule) {
    case Rule::Ax: {
      const Sequent& s = p.conclusion;
      if (s.ante.size() != 1 || s.succ.size() != 1 || !equal(s.ante[0], s.succ[0])) {
        return "axiom must have the form A |- A";
      }
      return {};
    }
    case Rule::Link: return check_link(p, env, opt);
    case Rule::ERule: return check_erule(p, th, opt, nz);
    case Rule::Cut: return check_cut(p);
    case Rule::AndR:
    case Rule::OrL:
    case Rule::ImpL: return check_binary(p);
    case Rule::ForallL: return check_quant_inst(p, true, Kind::Forall);
    case Rule::ExistsR: return check_quant_inst(p, false, Kind::Exists);
    case Rule::ForallR: return check_eigen(p, false, Kind::Forall);
    case Rule::ExistsL: return check_eigen(p, true, Kind::Exists);
    default: break;
  }

  const Delta d = delta(p.conclusion, p.premises[0].conclusion);
  switch (p.rule) {
    case Rule::WeakL:
    case Rule::WeakR: {
      const bool left = p.rule == Rule::WeakL;
      const Formulas& added = left ? d.added_ante : d.added_succ;
      if (added.size() != 1 || !(left ? d.added_succ : d.added_ante).empty() ||
          !d.removed_ante.empty() || !d.removed_succ.empty()) {
        return std::string("weakening adds exactly one formula on the ") + (left ? "left" : "right");
      }
      return {};
    }
    case Rule::ContrL:
    case Rule::ContrR: {
      const bool left = p.rule == Rule::ContrL;
      const Formulas& removed = left ? d.removed_ante : d.removed_succ;
      const Formulas& kept = left ? p.conclusion.ante : p.conclusion.succ;
      if (removed.size() != 1 || !(left ? d.removed_succ : d.removed_ante).empty() ||
          !d.added_ante.empty() || !d.added_succ.empty()) {
        return std::string("contraction removes exactly one duplicate on the ") + (left ? "left" : "right");
      }
      if (!multiset_contains(kept, removed[0])) {
        return "contracted formula '" + to_string(removed[0]) + "' does not remain in the conclusion";
      }
      return {};
    }
    case Rule::AndL:
    case Rule::OrR: {
      const bool left = p.rule == Rule::AndL;
      const Kind k = left ? Kind::And : Kind::Or;
      if (auto e = expect_shape(d, left, k, left ? "conjunction" : "disjunction"); !e.empty()) return e;
      const Expr& x = left ? d.added_ante[0] : d.added_succ[0];
      if (!(left ? d.removed_succ : d.removed_ante).empty()) return "the other side changed";
      return want_removed(left ? d.removed_ante : d.removed_succ, {x->arg(0), x->arg(1)},
                          left ? "antecedent" : "succedent");
    }
    case Rule::NegL: {
      // Gamma |- Delta, A  /  ~A, Gamma |- Delta
      if (auto e = expect_shape(d, true, Kind::Not, "negation"); !e.empty()) return e;
      if (!d.removed_ante.empty()) return "antecedent changed: " + show(d.removed_ante);
      return want_removed(d.removed_succ, {d.added_ante[0]->arg(0)}, "succedent");
    }
    case Rule::NegR: {
      if (auto e = expect_shape(d, false, Kind::Not, "negation"); !e.empty()) return e;
      if (!d.removed_succ.empty()) return "succedent changed: " + show(d.removed_succ);
      return want_removed(d.removed_ante, {d.added_succ[0]->arg(0)}, "antecedent");
    }
    case Rule::ImpR: {
      if (auto e = expect_shape(d, false, Kind::Imp, "implication"); !e.empty()) return e;
      const Expr& x = d.added_succ[0];
      if (auto e = want_removed(d.removed_ante, {x->arg(0)}, "antecedent"); !e.empty()) return e;
      return want_removed(d.removed_succ, {x->arg(1)}, "succedent");
    }
    default: break;
  }
  return "unhandled rule";
}

CheckReport check_proof(const Proof& p, const EquationalTheory& th, const LinkEnv& env,
                        const CheckOptions& opt) {
  CheckReport rep;
  Normalizer nz(th, opt.fuel);
  // Pre-order walk with parent links; paths are rebuilt only for failures.
  struct Entry {
    const Proof* node;
    std::size_t parent;
    std::size_t child;
  };
  std::vector<Entry> seen;
  std::vector<Entry> stack{{&p, SIZE_MAX, 0}};
  auto path_of = [&](std::size_t idx) {
    std::vector<std::size_t> rev;
    while (seen[idx].parent != SIZE_MAX) {
      rev.push_back(seen[idx].child);
      idx = seen[idx].parent;
    }
    std::string out;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) out += "/" + std::to_string(*it);
    return out.empty() ? std::string("/") : out;
  };
  while (!stack.empty()) {
    Entry e = stack.back();
    stack.pop_back();
    seen.push_back(e);
    const std::size_t idx = seen.size() - 1;
    const Proof& n = *e.node;
    if (n.rule != Rule::Ax && n.rule != Rule::Link) ++rep.counts[n.rule];
    std::string msg;
    try {
      msg = check_node(n, th, env, opt, nz);
    } catch (const std::exception& ex) {
      msg = ex.what();
    }
    if (!msg.empty()) rep.failures.push_back({path_of(idx), rule_name(n.rule), msg});
    for (std::size_t i = n.premises.size(); i-- > 0;) stack.push_back({&n.premises[i], idx, i});
  }
  rep.rewrite_steps = nz.total_steps();
  return rep;
}

}  // namespace silk
