#include "silk/translate.hpp"

#include <algorithm>
#include <set>

namespace silk {

namespace {

ScriptResult must_prove(const SilkScript& s, const SilkOptions& opt) {
  ScriptResult r = check_script(s, opt);
  if (r.verdict == Verdict::Rejected) {
    const Failure& f = r.report.failures.front();
    throw NotAProof(f.path + ": " + f.message);
  }
  if (r.verdict != Verdict::Proof) throw NotAProof("the script ends with an open group");
  return r;
}

std::vector<const ComponentGroup*> by_closure(const ComponentCollection& c) {
  std::vector<const ComponentGroup*> gs;
  for (const auto& g : c.groups) gs.push_back(&g);
  std::sort(gs.begin(), gs.end(),
            [](const ComponentGroup* a, const ComponentGroup* b) { return a->closure_index < b->closure_index; });
  return gs;
}

}  // namespace

SilkScript to_ppsnf(const SilkScript& s, const SilkOptions& opt) {
  ScriptResult r = must_prove(s, opt);
  SilkScript out;
  out.lang = s.lang;
  for (const ComponentGroup* g : by_closure(r.collection)) {
    for (std::size_t i : g->history) out.steps.push_back(r.resolved[i]);
  }
  return out;
}

ProofSchema collection_to_schema(const ComponentCollection& c) {
  const ComponentGroup& lead = leading_group(c);
  ProofSchema out;
  if (lead.pairs.front().step.kind == StepKind::EmptyClosed) {
    SchemaComponent comp;
    comp.name = lead.id;
    comp.pattern = lead.pairs.front().base.seq;
    comp.vars = lead.pattern ? lead.pattern->vars : std::vector<std::string>{};
    comp.base = lead.pairs.front().base_proof;
    out.components.push_back(std::move(comp));
    return out;
  }
  auto gs = by_closure(c);
  std::reverse(gs.begin(), gs.end());
  for (const ComponentGroup* g : gs) {
    const ComponentPair& p = g->pairs.front();
    if (p.step.kind != StepKind::ClosedSeq) continue;
    SchemaComponent comp;
    comp.name = g->id;
    comp.pattern = g->pattern->seq;
    comp.vars = g->pattern->vars;
    comp.step_param = succ(param());
    comp.base = p.base_proof;
    comp.step = *p.step_proof;
    out.components.push_back(std::move(comp));
  }
  return out;
}

ProofSchema silk_to_schema(const SilkScript& s, const SilkOptions& opt) {
  SilkScript normal = to_ppsnf(s, opt);
  return collection_to_schema(must_prove(normal, opt).collection);
}

Expr sequent_formula(const Sequent& s) {
  auto fold = [](const Formulas& fs, bool conj_fold) {
    Expr acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conj_fold ? conj(acc, fs[i]) : disj(acc, fs[i]);
    return acc;
  };
  Expr rhs = s.succ.empty() ? bottom() : fold(s.succ, false);
  if (s.ante.empty()) return rhs;
  return imp(fold(s.ante, true), rhs);
}

namespace {

const char* const kBound = "x";

// forall x. I(B[n\x]), with the body given as a function of x.
template <class Body>
Expr forall_nat(Body body) {
  Expr x = nat_var(kBound);
  return forall(kBound, Sort::Nat, body(x));
}

// forall x.(A -> B) with x not free in A becomes A -> forall x.B.
Expr miniscope(const Expr& e) {
  if (e->kind() != Kind::Forall) return e;
  const Expr& body = e->arg(0);
  if (body->kind() != Kind::Imp || body->arg(0)->loose_bound() > 0) return e;
  Expr inner = quant(Kind::Forall, e->name(), e->binder_sort(), body->arg(1));
  return imp(body->arg(0), miniscope(inner));
}

}  // namespace

Expr interpret(const ComponentCollection& c) {
  const ComponentGroup& lead = leading_group(c);
  if (lead.pairs.front().step.kind == StepKind::EmptyClosed) {
    Expr f = sequent_formula(lead.pairs.front().base.seq);
    for (const auto& v : free_vars(lead.pairs.front().base.seq, Sort::Ind)) f = forall(v, Sort::Ind, f);
    return f;
  }
  std::vector<const ComponentGroup*> gs{&lead};
  for (const ComponentGroup* g : by_closure(c)) {
    if (g != &lead && g->pairs.front().step.kind == StepKind::ClosedSeq) gs.push_back(g);
  }
  Expr bases, steps;
  std::set<std::string> free;
  for (const ComponentGroup* g : gs) {
    const Sequent& b = g->pattern->seq;
    for (const auto& v : free_vars(b, Sort::Ind)) free.insert(v);
    Expr base = sequent_formula(subst_param(b, zero()));
    bases = bases ? conj(bases, base) : base;
    Expr x = nat_var(kBound);
    Expr step = imp(sequent_formula(subst_param(b, x)), sequent_formula(subst_param(b, add(x, numeral(1)))));
    steps = steps ? conj(steps, step) : step;
  }
  const Sequent& b0 = lead.pattern->seq;
  Expr hyp = conj(bases, forall_nat([&](const Expr&) { return steps; }));
  Expr goal = miniscope(forall_nat([&](const Expr& x) { return sequent_formula(subst_param(b0, x)); }));
  Expr f = imp(hyp, goal);
  for (auto it = free.rbegin(); it != free.rend(); ++it) f = forall(*it, Sort::Ind, f);
  return f;
}

}  // namespace silk
