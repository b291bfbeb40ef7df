#include "silk/schema.hpp"

#include <functional>
#include <set>

#include "silk/print.hpp"
#include "silk/stack.hpp"

namespace silk {

const SchemaComponent* ProofSchema::find(const std::string& name) const {
  int i = index_of(name);
  return i < 0 ? nullptr : &components[static_cast<std::size_t>(i)];
}

int ProofSchema::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

LinkEnv link_env(const ProofSchema& s) {
  LinkEnv env;
  for (const auto& c : s.components) env.emplace(c.name, LinkTarget{c.pattern, c.vars});
  return env;
}

std::optional<std::uint64_t> step_offset(const Expr& k) {
  if (!k || k->sort() != Sort::Nat) return std::nullopt;
  Expr e = normalize_arith(k);
  std::uint64_t c = 0;
  while (e->kind() == Kind::Succ) {
    ++c;
    e = e->arg(0);
  }
  if (c == 0 || e->kind() != Kind::Var || e->name() != kParam) return std::nullopt;
  return c;
}

namespace {

std::string join_path(const std::string& prefix, const std::string& path) {
  return path == "/" ? prefix : prefix + path;
}

void absorb(CheckReport& into, const CheckReport& from, const std::string& prefix) {
  for (const auto& f : from.failures) into.failures.push_back({join_path(prefix, f.path), f.rule, f.message});
  for (const auto& [r, k] : from.counts) into.counts[r] += k;
  into.rewrite_steps += from.rewrite_steps;
}

// Link leaves with their paths.
void collect_links(const Proof& p, const std::string& path,
                   std::vector<std::pair<std::string, const Proof*>>& out) {
  if (p.rule == Rule::Link) out.push_back({path.empty() ? "/" : path, &p});
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    collect_links(p.premises[i], path + "/" + std::to_string(i), out);
  }
}

std::uint64_t ground_value(const Expr& e, Normalizer& nz) {
  if (!free_params(e).empty()) throw MatchFailure("'" + to_string(e) + "' is not ground");
  Expr v = nz.normalize(e).value;
  if (auto k = numeral_value(v)) return *k;
  throw StuckTerm("'" + to_string(e) + "' normalizes to '" + to_string(v) + "', which is not a numeral");
}

}  // namespace

CheckReport check_schema(const ProofSchema& s, const EquationalTheory& th, const SchemaOptions& opt) {
  CheckReport rep;
  if (s.components.empty()) {
    rep.failures.push_back({"/", "schema", "a proof schema needs at least one component"});
    return rep;
  }
  std::set<std::string> names;
  for (const auto& c : s.components) {
    if (!names.insert(c.name).second) {
      rep.failures.push_back({c.name, "schema", "duplicate component name '" + c.name + "'"});
    }
  }
  const LinkEnv env = link_env(s);
  Normalizer nz(th, opt.fuel);

  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const SchemaComponent& c = s.components[i];
    std::set<std::string> seen_vars;
    for (const auto& v : c.vars) {
      if (!seen_vars.insert(v).second) {
        rep.failures.push_back({c.name, "schema", "variable '" + v + "' declared twice"});
      }
    }
    if (!free_params(c.pattern).empty() && free_params(c.pattern) != std::set<std::string>{kParam}) {
      rep.failures.push_back({c.name, "schema", "pattern may only use the parameter n"});
    }

    const std::string bp = c.name + "/base";
    Sequent want0 = subst_param(c.pattern, zero());
    if (!sequent_eq(c.base.conclusion, want0)) {
      rep.failures.push_back({bp, rule_name(c.base.rule),
                              "base case concludes " + to_string(c.base.conclusion) +
                                  " but the pattern at 0 is " + to_string(want0)});
    }
    CheckOptions bo;
    bo.mode = Mode::LKS;
    bo.allowed_link_params = {};
    bo.fuel = opt.fuel;
    bo.lenient_erule = opt.lenient_erule;
    absorb(rep, check_proof(c.base, th, env, bo), bp);
    std::vector<std::pair<std::string, const Proof*>> links;
    collect_links(c.base, "", links);
    for (const auto& [path, node] : links) {
      int j = s.index_of(node->data.link ? node->data.link->target : "");
      if (j >= 0 && j <= static_cast<int>(i)) {
        const std::string& t = node->data.link->target;
        rep.failures.push_back({join_path(bp, path), "Link",
                                j == static_cast<int>(i)
                                    ? "base case links to its own component '" + t + "'"
                                    : "link to earlier component '" + t +
                                          "'; base cases may only link to later components"});
      }
    }

    if (!c.step) continue;
    const std::string sp = c.name + "/step";
    auto off = step_offset(c.step_param);
    if (!off) {
      rep.failures.push_back({sp, "schema",
                              "step parameter '" + (c.step_param ? to_string(c.step_param) : std::string("?")) +
                                  "' must have the shape n + c with c >= 1"});
      continue;
    }
    Sequent wantk = subst_param(c.pattern, c.step_param);
    if (!sequent_eq(c.step->conclusion, wantk)) {
      rep.failures.push_back({sp, rule_name(c.step->rule),
                              "step case concludes " + to_string(c.step->conclusion) +
                                  " but the pattern at " + to_string(c.step_param) + " is " +
                                  to_string(wantk)});
    }
    CheckOptions so = bo;
    so.allowed_link_params = {kParam};
    absorb(rep, check_proof(*c.step, th, env, so), sp);

    links.clear();
    collect_links(*c.step, "", links);
    for (const auto& [path, node] : links) {
      if (!node->data.link) continue;
      const LinkData& l = *node->data.link;
      const int j = s.index_of(l.target);
      if (j < 0) continue;  // reported by the kernel
      const std::string where = join_path(sp, path);
      if (j < static_cast<int>(i)) {
        rep.failures.push_back({where, "Link",
                                "link to earlier component '" + l.target +
                                    "'; links must go to the component itself or to a later one"});
        continue;
      }
      if (j > static_cast<int>(i)) {
        if (!s.components[static_cast<std::size_t>(j)].step) {
          // Only the zero instance exists for a component without step case.
          rep.failures.push_back({where, "Link", "'" + l.target + "' has no step case to link to"});
        }
        continue;
      }
      if (!is_subterm(l.param, c.step_param)) {
        rep.failures.push_back({where, "Link",
                                "self-link parameter '" + to_string(l.param) + "' is not a subterm of '" +
                                    to_string(c.step_param) + "'"});
        continue;
      }
      try {
        for (std::uint64_t v = 0; v <= opt.decrease_horizon; ++v) {
          const Expr nv = numeral(v);
          std::uint64_t kv = ground_value(subst_param(c.step_param, nv), nz);
          std::uint64_t pv = ground_value(subst_param(l.param, nv), nz);
          if (pv >= kv) {
            rep.failures.push_back({where, "Link",
                                    "self-link parameter '" + to_string(l.param) + "' does not decrease at n = " +
                                        std::to_string(v)});
            break;
          }
        }
      } catch (const std::exception& ex) {
        rep.failures.push_back({where, "Link", ex.what()});
      }
    }
  }
  rep.rewrite_steps += nz.total_steps();
  return rep;
}

namespace {

class Evaluator {
 public:
  Evaluator(const ProofSchema& s, const EquationalTheory& th, std::size_t fuel, UnrollTrace& tr)
      : s_(s), nz_(th, fuel), tr_(tr) {}

  Expr num(std::uint64_t v) {
    if (nums_.empty()) nums_.push_back(zero());
    while (nums_.size() <= v) nums_.push_back(succ(nums_.back()));
    return nums_[v];
  }

  // Instance of component i's pattern that its proof for `value` concludes.
  Sequent natural_instance(std::size_t i, std::uint64_t value, const std::vector<Expr>& terms) {
    const SchemaComponent& c = s_.components[i];
    Expr k = value == 0 || !c.step ? zero() : subst_param(c.step_param, num(value - *step_offset(c.step_param)));
    return link_instance({c.pattern, c.vars}, k, terms);
  }

  Proof expand(std::size_t i, std::uint64_t value, const std::vector<Expr>& terms) {
    const SchemaComponent& c = s_.components[i];
    tr_.expansions.push_back({c.name, value, terms});
    if (terms.size() != c.vars.size()) {
      throw MatchFailure("'" + c.name + "' expects " + std::to_string(c.vars.size()) + " terms");
    }
    Substitution sig;
    Proof src;
    if (value == 0 || !c.step) {
      // Without a step case the base proof stands for every value.
      src = c.base;
    } else {
      auto off = step_offset(c.step_param);
      if (!off) throw MatchFailure("step parameter of '" + c.name + "' is not of the form n + c");
      if (value < *off) {
        throw MatchFailure(std::to_string(value) + " does not match the step parameter '" +
                           to_string(c.step_param) + "' of '" + c.name + "'");
      }
      src = *c.step;
      sig.bind_param(num(value - *off));
    }
    std::set<std::string> used;
    for (const auto& t : terms) {
      auto fv = free_vars(t, Sort::Ind);
      used.insert(fv.begin(), fv.end());
    }
    for (const auto& a : eigenvariables(src)) {
      if (!used.count(a)) continue;
      std::set<std::string> taken = used;
      for_each_node(src, [&](const Proof& n) {
        auto fv = free_vars(n.conclusion, Sort::Ind);
        taken.insert(fv.begin(), fv.end());
        if (n.data.eigen) taken.insert(*n.data.eigen);
      });
      std::string fresh = a;
      while (taken.count(fresh)) fresh += "'";
      src = rename_ind(src, a, fresh);
    }
    for (std::size_t k = 0; k < c.vars.size(); ++k) sig.bind_ind(c.vars[k], terms[k]);
    Proof inst = sig.empty() ? std::move(src) : subst_proof(src, sig);
    resolve(inst);
    return inst;
  }

  void resolve(Proof& p) {
    if (p.rule != Rule::Link) {
      for (auto& q : p.premises) resolve(q);
      return;
    }
    const LinkData l = *p.data.link;
    const int j = s_.index_of(l.target);
    if (j < 0) throw MatchFailure("link to unknown component '" + l.target + "'");
    std::uint64_t v = ground_value(l.param, nz_);
    Proof sub = expand(static_cast<std::size_t>(j), v, l.terms);
    Sequent from = natural_instance(static_cast<std::size_t>(j), v, l.terms);
    Sequent to = link_instance({s_.components[static_cast<std::size_t>(j)].pattern,
                                s_.components[static_cast<std::size_t>(j)].vars},
                               l.param, l.terms);
    p = bridge(std::move(sub), from, to);
  }

  // E inferences from `from` down to `to`, one per differing formula.
  static Proof bridge(Proof sub, const Sequent& from, const Sequent& to) {
    Sequent cur = from;
    for (int side = 0; side < 2; ++side) {
      Formulas& cs = side == 0 ? cur.ante : cur.succ;
      const Formulas& ts = side == 0 ? to.ante : to.succ;
      for (std::size_t i = 0; i < cs.size() && i < ts.size(); ++i) {
        if (equal(cs[i], ts[i])) continue;
        cs[i] = ts[i];
        sub = make_unary(Rule::ERule, cur, std::move(sub));
      }
    }
    return sub;
  }

  Proof normalized(const Proof& p) {
    Proof out;
    out.rule = p.rule;
    out.data = p.data;
    if (out.data.term) out.data.term = nz_.normalize(*out.data.term).value;
    out.conclusion = nz_.normalize(p.conclusion);
    out.premises.reserve(p.premises.size());
    for (const auto& q : p.premises) out.premises.push_back(normalized(q));
    if (out.rule == Rule::ERule && out.premises.size() == 1 &&
        sequent_eq(out.premises[0].conclusion, out.conclusion)) {
      Proof inner = std::move(out.premises[0]);
      return inner;
    }
    return out;
  }

  Normalizer& nz() { return nz_; }

 private:
  const ProofSchema& s_;
  Normalizer nz_;
  UnrollTrace& tr_;
  std::vector<Expr> nums_;
};

UnrollTrace evaluate_impl(const ProofSchema& s, std::uint64_t alpha, const EquationalTheory& th,
                          std::size_t fuel) {
  if (s.components.empty()) throw MatchFailure("empty proof schema");
  UnrollTrace tr;
  Evaluator ev(s, th, fuel, tr);
  const SchemaComponent& c0 = s.components[0];
  std::vector<Expr> terms;
  for (const auto& v : c0.vars) terms.push_back(ind_var(v));
  Proof top = ev.expand(0, alpha, terms);
  Sequent from = ev.natural_instance(0, alpha, terms);
  Sequent to = link_instance({c0.pattern, c0.vars}, ev.num(alpha), terms);
  tr.unrolled = Evaluator::bridge(std::move(top), from, to);
  tr.proof = ev.normalized(tr.unrolled);
  tr.rewrite_steps = ev.nz().total_steps();
  return tr;
}

}  // namespace

UnrollTrace evaluate(const ProofSchema& s, std::uint64_t alpha, const EquationalTheory& th,
                     std::size_t fuel) {
  return with_large_stack([&] { return evaluate_impl(s, alpha, th, fuel); });
}

EvalCheck evaluate_and_check(const ProofSchema& s, std::uint64_t alpha, const EquationalTheory& th,
                             const SchemaOptions& opt) {
  EvalCheck out;
  out.report = check_schema(s, th, opt);
  if (!out.report.accepted()) return out;
  out.report = {};
  with_large_stack([&] {
    UnrollTrace tr;
    try {
      tr = evaluate_impl(s, alpha, th, opt.fuel);
    } catch (const std::exception& ex) {
      out.report.failures.push_back({"/", "evaluate", ex.what()});
      return;
    }
    out.unrolled_counts = count_inferences(tr.unrolled);
    out.rewrite_steps = tr.rewrite_steps;
    CheckOptions lk;
    lk.mode = Mode::LK;
    lk.allowed_link_params = {};
    lk.fuel = opt.fuel;
    out.report = check_proof(tr.proof, th, {}, lk);
    std::size_t links = 0;
    for_each_node(tr.proof, [&](const Proof& n) { links += n.rule == Rule::Link; });
    if (links) out.report.failures.push_back({"/", "Link", "evaluated proof still contains links"});
    const SchemaComponent& c0 = s.components[0];
    std::vector<Expr> terms;
    for (const auto& v : c0.vars) terms.push_back(ind_var(v));
    Normalizer nz(th, opt.fuel);
    Sequent want = nz.normalize(link_instance({c0.pattern, c0.vars}, numeral(alpha), terms));
    if (!sequent_eq(want, tr.proof.conclusion)) {
      out.report.failures.push_back({"/", rule_name(tr.proof.rule),
                                     "end-sequent " + to_string(tr.proof.conclusion) +
                                         " differs from the normalized instance " + to_string(want)});
    }
  });
  return out;
}

}  // namespace silk
