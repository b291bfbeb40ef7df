#include "silk/silk.hpp"

#include <algorithm>

#include "silk/print.hpp"

namespace silk {

const ComponentPair* ComponentGroup::find(const std::string& pair) const {
  for (const auto& p : pairs) {
    if (p.id == pair) return &p;
  }
  return nullptr;
}

const ComponentGroup* ComponentCollection::find(const std::string& group) const {
  for (const auto& g : groups) {
    if (g.id == group) return &g;
  }
  return nullptr;
}

bool ComponentCollection::all_closed() const {
  return std::all_of(groups.begin(), groups.end(), [](const ComponentGroup& g) { return g.closed; });
}

namespace {

struct RuleNames {
  SilkRule rule;
  const char* name;
  const char* keyword;
};

const RuleNames kSilkRules[] = {
    {SilkRule::Ax1R, "Ax1:r", "ax1r"},     {SilkRule::Ax2R, "Ax2:r", "ax2r"},
    {SilkRule::AxL, "Ax:l", "axl"},        {SilkRule::CcR, "c_c:r", "ccr"},
    {SilkRule::CcL, "c_c:l", "ccl"},       {SilkRule::Br, "br", "br"},
    {SilkRule::ClBc, "cl_bc", "clbc"},     {SilkRule::ClLKE, "cl_LKE", "cllke"},
    {SilkRule::ClSc, "cl_sc", "clsc"},     {SilkRule::Rho1Sc, "rho1^sc", "rho"},
    {SilkRule::Rho2Sc, "rho2^sc", "rho"},  {SilkRule::Rho1Bc, "rho1^bc", "rho"},
    {SilkRule::Rho2Bc, "rho2^bc", "rho"},  {SilkRule::Cycle, "cycle", "cycle"},
    {SilkRule::Call, "call", "call"},
};

}  // namespace

const char* silk_rule_name(SilkRule r) {
  for (const auto& x : kSilkRules) {
    if (x.rule == r) return x.name;
  }
  return "?";
}

const char* silk_rule_keyword(SilkRule r) {
  for (const auto& x : kSilkRules) {
    if (x.rule == r) return x.keyword;
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proof: return "proof";
    case Verdict::Derivation: return "derivation";
    case Verdict::Rejected: return "rejected";
  }
  return "?";
}

namespace {

[[noreturn]] void err(const std::string& code, const std::string& msg) { throw SilkError(code, msg); }

std::string fresh_pair_id(const ComponentGroup& g) {
  for (std::size_t i = 0;; ++i) {
    std::string id;
    if (i < 26) {
      id = std::string(1, static_cast<char>('a' + i));
    } else {
      id = "p" + std::to_string(i + 1);
    }
    if (!g.find(id)) return id;
  }
}

std::string fresh_group_id(const ComponentCollection& c) {
  for (std::size_t i = c.groups.size() + 1;; ++i) {
    std::string id = std::to_string(i);
    if (!c.find(id)) return id;
  }
}

bool is_axiom_seq(const Sequent& s) {
  return s.ante.size() == 1 && s.succ.size() == 1 && equal(s.ante[0], s.succ[0]);
}

// E inferences turning a proof of `from` into one of `to`. Formulas that
// differ are paired by normal form; each pair is one E step on the whole
// formula.
Proof bridge(Proof sub, const Sequent& from, const Sequent& to, Normalizer& nz) {
  if (sequent_eq(from, to)) return sub;
  Sequent cur = from;
  for (int side = 0; side < 2; ++side) {
    Formulas& cs = side == 0 ? cur.ante : cur.succ;
    const Formulas removed = multiset_minus(side == 0 ? from.ante : from.succ, side == 0 ? to.ante : to.succ);
    Formulas added = multiset_minus(side == 0 ? to.ante : to.succ, side == 0 ? from.ante : from.succ);
    for (const auto& r : removed) {
      const Expr nr = nz.normalize(r).value;
      auto it = std::find_if(added.begin(), added.end(),
                             [&](const Expr& a) { return equal(nz.normalize(a).value, nr); });
      if (it == added.end()) err("PatternMismatch", "no E-equivalent counterpart for '" + to_string(r) + "'");
      for (auto& f : cs) {
        if (equal(f, r)) {
          f = *it;
          break;
        }
      }
      RuleData d;
      d.at = std::vector<std::size_t>{};
      sub = make_unary(Rule::ERule, cur, std::move(sub), d);
      added.erase(it);
    }
  }
  return sub;
}

struct Ctx {
  ComponentCollection& st;
  SilkStep& step;
  std::size_t index;
  const EquationalTheory& th;
  const SilkOptions& opt;
  Normalizer nz;

  Ctx(ComponentCollection& s, SilkStep& stp, std::size_t i, const EquationalTheory& t, const SilkOptions& o)
      : st(s), step(stp), index(i), th(t), opt(o), nz(t, o.fuel) {}

  ComponentGroup& group_by_name(const std::string& id) {
    for (auto& g : st.groups) {
      if (g.id == id) return g;
    }
    err("UnknownGroup", "no group named '" + id + "'");
  }

  // The named group, or the only open one.
  ComponentGroup& open_group() {
    if (!step.group.empty()) {
      ComponentGroup& g = group_by_name(step.group);
      if (g.closed) err("ClosedGroupTouched", "group " + g.id + " is closed");
      return g;
    }
    ComponentGroup* only = nullptr;
    for (auto& g : st.groups) {
      if (g.closed) continue;
      if (only) err("UnknownGroup", "several open groups; name one with group=");
      only = &g;
    }
    if (!only) err(st.groups.empty() ? "UnknownGroup" : "ClosedGroupTouched", "no open group");
    step.group = only->id;
    return *only;
  }

  std::size_t pair_index(ComponentGroup& g, const std::string& id) {
    for (std::size_t i = 0; i < g.pairs.size(); ++i) {
      if (g.pairs[i].id == id) return i;
    }
    err("UnknownPair", "group " + g.id + " has no pair '" + id + "'");
  }

  // Resolve `name` (possibly empty) to a pair satisfying `fits`. Unnamed
  // pairs are taken in collection order, skipping `skip`.
  template <class Fits>
  std::size_t pick(ComponentGroup& g, std::string& name, Fits fits, const char* what, int skip = -1) {
    if (!name.empty()) {
      std::size_t i = pair_index(g, name);
      if (static_cast<int>(i) == skip) err("UnknownPair", "pair " + name + " is used twice");
      if (auto why = fits(g.pairs[i]); !why.empty()) err(why_code(why), "pair " + name + ": " + why_msg(why));
      return i;
    }
    std::string last_why;
    for (std::size_t i = 0; i < g.pairs.size(); ++i) {
      if (static_cast<int>(i) == skip) continue;
      auto why = fits(g.pairs[i]);
      if (why.empty()) {
        name = g.pairs[i].id;
        return i;
      }
      last_why = why;
    }
    if (last_why.empty()) err("UnknownPair", std::string("no pair for ") + what);
    err(why_code(last_why), std::string("no pair for ") + what + ": " + why_msg(last_why));
  }

  // Fit failures are "Code|message".
  static std::string why_code(const std::string& w) { return w.substr(0, w.find('|')); }
  static std::string why_msg(const std::string& w) { return w.substr(w.find('|') + 1); }

  void record(ComponentGroup& g) { g.history.push_back(index); }

  void close(ComponentGroup& g) {
    g.closed = true;
    g.closure_index = ++st.closures;
  }

  std::string check_inference(const Proof& node) {
    CheckOptions co;
    co.mode = Mode::LKE;
    co.allowed_link_params = {};
    co.fuel = opt.fuel;
    co.lenient_erule = opt.lenient_erule;
    try {
      return check_node(node, th, {}, co, nz);
    } catch (const std::exception& e) {
      return e.what();
    }
  }

  Sequent nf(const Sequent& s) { return nz.normalize(s); }
};

std::string top_open_base(const ComponentPair& p) {
  if (p.step.kind != StepKind::Top) return "InvalidPremise|stepcase is not T";
  if (p.base.closed) return "InvalidPremise|basecase is already closed";
  return {};
}

std::string top_closed_base(const ComponentPair& p) {
  if (!p.base.closed) return "BasecaseOpen|basecase is not closed yet (apply cl_bc first)";
  if (p.step.kind != StepKind::Top) return "InvalidPremise|stepcase is not T";
  return {};
}

std::string open_step(const ComponentPair& p) {
  if (!p.base.closed) return "BasecaseOpen|basecase is not closed yet (apply cl_bc first)";
  if (p.step.kind != StepKind::Open) return "InvalidPremise|stepcase is not an open sequent";
  return {};
}

std::string closed_base(const ComponentPair& p) {
  if (!p.base.closed) return "BasecaseOpen|basecase is not closed yet (apply cl_bc first)";
  return {};
}

void apply_ax(Ctx& c, bool new_group) {
  const Sequent& s = *c.step.seq;
  if (!is_axiom_seq(s)) err("InvalidInference", "an axiom has the form A |- A, got " + to_string(s));
  ComponentPair p;
  p.base.seq = s;
  p.base_proof = make_ax(s.ante[0]);
  if (new_group) {
    ComponentGroup g;
    g.id = c.step.group.empty() ? fresh_group_id(c.st) : c.step.group;
    if (c.st.find(g.id)) err("InvalidPremise", "group " + g.id + " already exists");
    c.step.group = g.id;
    p.id = c.step.pair.empty() ? "a" : c.step.pair;
    c.step.pair = p.id;
    g.pairs.push_back(std::move(p));
    c.record(g);
    c.st.groups.insert(c.st.groups.begin(), std::move(g));
    return;
  }
  ComponentGroup& g = c.open_group();
  p.id = c.step.pair.empty() ? fresh_pair_id(g) : c.step.pair;
  if (g.find(p.id)) err("InvalidPremise", "group " + g.id + " already has a pair " + p.id);
  c.step.pair = p.id;
  g.pairs.insert(g.pairs.begin(), std::move(p));
  c.record(g);
}

void apply_axl(Ctx& c) {
  ComponentGroup& g = c.open_group();
  const std::size_t i = c.pick(g, c.step.pair, top_closed_base, "ax:l");
  const Sequent& s = *c.step.seq;
  if (!is_axiom_seq(s)) err("InvalidInference", "an axiom has the form A |- A, got " + to_string(s));
  if (!free_params(c.step.ann).empty() && free_params(c.step.ann) != std::set<std::string>{kParam}) {
    err("InvalidInference", "annotation may only mention n");
  }
  ComponentPair& p = g.pairs[i];
  p.step.kind = StepKind::Open;
  p.step.seq = s;
  p.step.ann = c.step.ann;
  p.step_proof = make_ax(s.ante[0]);
  c.record(g);
}

bool same_stepcase(const Stepcase& a, const Stepcase& b, Ctx& c) {
  if (a.kind != b.kind) return false;
  if (a.kind == StepKind::Top) return true;
  return sequent_eq(a.seq, b.seq) && equivalent(a.ann, b.ann, c.th, c.opt.fuel);
}

void apply_cc(Ctx& c, bool right) {
  ComponentGroup& g = c.open_group();
  auto fits = right ? top_open_base : closed_base;
  const std::size_t i = c.pick(g, c.step.pair, fits, right ? "c_c:r" : "c_c:l");
  // Second pair: identical to the first.
  const ComponentPair& first = g.pairs[i];
  auto same = [&](const ComponentPair& q) -> std::string {
    if (auto w = fits(q); !w.empty()) return w;
    if (!sequent_eq(q.base.seq, first.base.seq)) return "InvalidPremise|basecases differ";
    if (!same_stepcase(q.step, first.step, c)) return "InvalidPremise|stepcases differ";
    return {};
  };
  const std::size_t j = c.pick(g, c.step.pair2, same, "contraction partner", static_cast<int>(i));
  g.pairs.erase(g.pairs.begin() + static_cast<long>(j));
  c.record(g);
}

void apply_br(Ctx& c) {
  ComponentGroup& g = c.open_group();
  const std::size_t i = c.pick(g, c.step.pair, closed_base, "br");
  ComponentPair copy;
  copy.id = c.step.fresh.empty() ? fresh_pair_id(g) : c.step.fresh;
  if (g.find(copy.id)) err("InvalidPremise", "group " + g.id + " already has a pair " + copy.id);
  c.step.fresh = copy.id;
  copy.base = g.pairs[i].base;
  copy.base_proof = g.pairs[i].base_proof;
  g.pairs.insert(g.pairs.begin(), std::move(copy));
  c.record(g);
}

void apply_clbc(Ctx& c) {
  ComponentGroup& g = c.open_group();
  const std::size_t i = c.pick(g, c.step.pair, top_open_base, "cl_bc");
  ComponentPair& p = g.pairs[i];
  Sequent b = c.step.pattern ? *c.step.pattern : p.base.seq;
  for (const auto& v : free_params(b)) {
    if (v != kParam) err("PatternMismatch", "pattern may only use the parameter n, found " + v);
  }
  const auto fv = free_vars(b, Sort::Ind);
  std::vector<std::string> vars = c.step.vars ? *c.step.vars : std::vector<std::string>(fv.begin(), fv.end());
  if (std::set<std::string>(vars.begin(), vars.end()) != fv || vars.size() != fv.size()) {
    err("ArityMismatch", "vars must list the free variables of the pattern exactly once");
  }
  const Sequent b0 = subst_param(b, zero());
  if (!sequent_eq(c.nf(b0), c.nf(p.base.seq))) {
    err("PatternMismatch", "pattern at n=0 is " + to_string(b0) + ", basecase is " + to_string(p.base.seq));
  }
  if (g.pattern && (!sequent_eq(g.pattern->seq, b) || g.pattern->vars != vars)) {
    err("PatternMismatch", "group " + g.id + " already has pattern " + to_string(g.pattern->seq));
  }
  p.base_proof = bridge(std::move(p.base_proof), p.base.seq, b0, c.nz);
  p.base.seq = b0;
  p.base.closed = true;
  g.pattern = GroupPattern{b, vars};
  c.step.pattern = b;
  c.step.vars = vars;
  c.record(g);
}

void apply_cllke(Ctx& c) {
  ComponentGroup& g = c.open_group();
  if (g.pairs.size() != 1) err("InvalidPremise", "cl_LKE needs a group with a single pair");
  c.pick(g, c.step.pair, top_closed_base, "cl_LKE");
  g.pairs[0].step.kind = StepKind::EmptyClosed;
  c.close(g);
  c.record(g);
}

void apply_clsc(Ctx& c) {
  ComponentGroup& g = c.open_group();
  if (g.pairs.size() != 1) err("InvalidPremise", "cl_sc needs a group with a single pair");
  c.pick(g, c.step.pair, open_step, "cl_sc");
  ComponentPair& p = g.pairs[0];
  const Sequent target = subst_param(g.pattern->seq, succ(param()));
  if (!sequent_eq(c.nf(target), c.nf(p.step.seq))) {
    err("PatternMismatch", "stepcase " + to_string(p.step.seq) + " is not the pattern at s(n), " + to_string(target));
  }
  if (c.step.ann && !equivalent(c.step.ann, p.step.ann, c.th, c.opt.fuel)) {
    err("AnnotationMismatch", "annotation " + to_string(c.step.ann) + " differs from the stepcase's " +
                                  to_string(p.step.ann));
  }
  p.step_proof = bridge(std::move(*p.step_proof), p.step.seq, target, c.nz);
  p.step.seq = target;
  p.step.kind = StepKind::ClosedSeq;
  c.close(g);
  c.record(g);
}

void apply_rho(Ctx& c) {
  const bool bc = c.step.rule == SilkRule::Rho1Bc || c.step.rule == SilkRule::Rho2Bc;
  const bool two = c.step.rule == SilkRule::Rho2Bc || c.step.rule == SilkRule::Rho2Sc;
  const Rule r = *c.step.lk_rule;
  if (rule_arity(r) != (two ? 2 : 1)) {
    err("ArityMismatch", std::string(rule_label(r)) + " has " + std::to_string(rule_arity(r)) + " premises");
  }
  ComponentGroup& g = c.open_group();
  auto fits = bc ? top_open_base : open_step;
  const char* what = silk_rule_name(c.step.rule);
  const std::size_t i = c.pick(g, c.step.pair, fits, what);
  const Sequent& concl = *c.step.seq;
  auto proof_of = [&](ComponentPair& p) -> Proof& { return bc ? p.base_proof : *p.step_proof; };
  if (!two) {
    ComponentPair& p = g.pairs[i];
    Proof node = make_unary(r, concl, proof_of(p), c.step.data);
    if (auto why = c.check_inference(node); !why.empty()) err("InvalidInference", why);
    proof_of(p) = std::move(node);
    (bc ? p.base.seq : p.step.seq) = concl;
    c.record(g);
    return;
  }
  const ComponentPair& first = g.pairs[i];
  auto partner = [&](const ComponentPair& q) -> std::string {
    if (auto w = fits(q); !w.empty()) return w;
    if (!bc) {
      if (!sequent_eq(q.base.seq, first.base.seq)) return "InvalidPremise|premise pairs have different basecases";
      if (!equivalent(q.step.ann, first.step.ann, c.th, c.opt.fuel)) {
        return "AnnotationMismatch|annotations " + to_string(first.step.ann) + " and " + to_string(q.step.ann) +
               " differ";
      }
    }
    return {};
  };
  const std::size_t j = c.pick(g, c.step.pair2, partner, "second premise", static_cast<int>(i));
  Proof node;
  node.rule = r;
  node.conclusion = concl;
  node.data = c.step.data;
  node.premises.push_back(proof_of(g.pairs[i]));
  node.premises.push_back(proof_of(g.pairs[j]));
  if (auto why = c.check_inference(node); !why.empty()) err("InvalidInference", why);
  ComponentPair& p = g.pairs[i];
  proof_of(p) = std::move(node);
  (bc ? p.base.seq : p.step.seq) = concl;
  g.pairs.erase(g.pairs.begin() + static_cast<long>(j));
  c.record(g);
}

void apply_cycle(Ctx& c) {
  ComponentGroup& g = c.open_group();
  const std::size_t i = c.pick(g, c.step.pair, top_closed_base, "cycle");
  const GroupPattern& pat = *g.pattern;
  if (c.step.terms.size() != pat.vars.size()) {
    err("ArityMismatch", "cycle needs " + std::to_string(pat.vars.size()) + " terms, got " +
                             std::to_string(c.step.terms.size()));
  }
  ComponentPair& p = g.pairs[i];
  const Sequent s = link_instance({pat.seq, pat.vars}, param(), c.step.terms);
  p.step.kind = StepKind::Open;
  p.step.seq = s;
  p.step.ann = succ(param());
  p.step_proof = make_link(s, {g.id, param(), c.step.terms});
  c.record(g);
}

void apply_call(Ctx& c) {
  ComponentGroup& g = c.open_group();
  const std::size_t i = c.pick(g, c.step.pair, top_closed_base, "call");
  const ComponentGroup& t = c.group_by_name(c.step.target);
  if (t.id == g.id) err("InvalidPremise", "a group cannot call itself; use cycle");
  if (!t.closed) err("InvalidPremise", "call target " + t.id + " is not closed");
  if (t.pairs.size() != 1 || t.pairs[0].step.kind != StepKind::ClosedSeq || !t.pattern) {
    err("InvalidPremise", "call target " + t.id + " has no closed stepcase");
  }
  for (const auto& v : free_params(c.step.g)) {
    if (v != kParam) err("InvalidInference", "g may only mention n");
  }
  if (c.step.terms.size() != t.pattern->vars.size()) {
    err("ArityMismatch", "call needs " + std::to_string(t.pattern->vars.size()) + " terms, got " +
                             std::to_string(c.step.terms.size()));
  }
  if (!c.step.f) c.step.f = c.step.g;
  ComponentPair& p = g.pairs[i];
  const Sequent s = link_instance({t.pattern->seq, t.pattern->vars}, c.step.g, c.step.terms);
  p.step.kind = StepKind::Open;
  p.step.seq = s;
  p.step.ann = c.step.f;
  p.step_proof = make_link(s, {t.id, c.step.g, c.step.terms});
  c.record(g);
}

}  // namespace

ComponentCollection apply_step(const ComponentCollection& state, SilkStep& step, std::size_t index,
                               const EquationalTheory& th, const SilkOptions& opt) {
  ComponentCollection out = state;
  Ctx c(out, step, index, th, opt);
  switch (step.rule) {
    case SilkRule::Ax1R: apply_ax(c, true); break;
    case SilkRule::Ax2R: apply_ax(c, false); break;
    case SilkRule::AxL: apply_axl(c); break;
    case SilkRule::CcR: apply_cc(c, true); break;
    case SilkRule::CcL: apply_cc(c, false); break;
    case SilkRule::Br: apply_br(c); break;
    case SilkRule::ClBc: apply_clbc(c); break;
    case SilkRule::ClLKE: apply_cllke(c); break;
    case SilkRule::ClSc: apply_clsc(c); break;
    case SilkRule::Rho1Sc:
    case SilkRule::Rho2Sc:
    case SilkRule::Rho1Bc:
    case SilkRule::Rho2Bc: apply_rho(c); break;
    case SilkRule::Cycle: apply_cycle(c); break;
    case SilkRule::Call: apply_call(c); break;
  }
  return out;
}

ScriptResult check_script(const SilkScript& s, const SilkOptions& opt) {
  ScriptResult r;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    SilkStep st = s.steps[i];
    std::string code, msg;
    try {
      r.collection = apply_step(r.collection, st, i, s.lang.theory, opt);
    } catch (const SilkError& e) {
      code = e.code();
      msg = e.what();
    } catch (const std::exception& e) {
      code = "InvalidInference";
      msg = e.what();
    }
    if (!code.empty()) {
      std::string where = "step " + std::to_string(i + 1);
      if (st.line) where += " (line " + std::to_string(st.line) + ")";
      r.report.failures.push_back({where, silk_rule_name(st.rule), code + ": " + msg});
      r.verdict = Verdict::Rejected;
      return r;
    }
    r.resolved.push_back(std::move(st));
  }
  for (const auto& g : r.collection.groups) {
    for (const auto& p : g.pairs) {
      for (const auto& [rule, n] : count_inferences(p.base_proof)) r.report.counts[rule] += n;
      if (p.step_proof) {
        for (const auto& [rule, n] : count_inferences(*p.step_proof)) r.report.counts[rule] += n;
      }
    }
  }
  r.verdict = !r.collection.groups.empty() && r.collection.all_closed() ? Verdict::Proof : Verdict::Derivation;
  return r;
}

const ComponentGroup& leading_group(const ComponentCollection& c) {
  if (c.groups.empty()) throw NotAProof("the collection is empty");
  const ComponentGroup* best = nullptr;
  for (const auto& g : c.groups) {
    if (!g.closed) throw NotAProof("group " + g.id + " is open");
    if (!best || g.closure_index > best->closure_index) best = &g;
  }
  return *best;
}

LinkEnv collection_env(const ComponentCollection& c) {
  LinkEnv env;
  for (const auto& g : c.groups) {
    if (g.pattern) env[g.id] = {g.pattern->seq, g.pattern->vars};
  }
  return env;
}

namespace {

bool pair_eq(const ComponentPair& a, const ComponentPair& b) {
  if (a.id != b.id || a.step.kind != b.step.kind || a.base.closed != b.base.closed) return false;
  if (!sequent_eq(a.base.seq, b.base.seq) || !proof_eq(a.base_proof, b.base_proof)) return false;
  if (a.step.kind == StepKind::Open || a.step.kind == StepKind::ClosedSeq) {
    if (!sequent_eq(a.step.seq, b.step.seq) || !equal(a.step.ann, b.step.ann)) return false;
  }
  if (a.step_proof.has_value() != b.step_proof.has_value()) return false;
  return !a.step_proof || proof_eq(*a.step_proof, *b.step_proof);
}

bool group_eq(const ComponentGroup& a, const ComponentGroup& b) {
  if (a.id != b.id || a.closed != b.closed || a.closure_index != b.closure_index) return false;
  if (a.pattern.has_value() != b.pattern.has_value()) return false;
  if (a.pattern && (!sequent_eq(a.pattern->seq, b.pattern->seq) || a.pattern->vars != b.pattern->vars)) return false;
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    if (!pair_eq(a.pairs[i], b.pairs[i])) return false;
  }
  return true;
}

std::vector<const ComponentGroup*> ordered(const ComponentCollection& c) {
  std::vector<const ComponentGroup*> closed, open;
  for (const auto& g : c.groups) (g.closed ? closed : open).push_back(&g);
  std::sort(closed.begin(), closed.end(),
            [](const ComponentGroup* x, const ComponentGroup* y) { return x->closure_index < y->closure_index; });
  closed.insert(closed.end(), open.begin(), open.end());
  return closed;
}

}  // namespace

bool collection_eq(const ComponentCollection& a, const ComponentCollection& b) {
  if (a.groups.size() != b.groups.size() || a.closures != b.closures) return false;
  auto x = ordered(a);
  auto y = ordered(b);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!group_eq(*x[i], *y[i])) return false;
  }
  return true;
}

CheckReport check_coherence(const ComponentCollection& c, const EquationalTheory& th, const SilkOptions& opt) {
  CheckReport out;
  const LinkEnv env = collection_env(c);
  auto run = [&](const Proof& p, const Sequent& want, const std::string& where, std::set<std::string> allowed) {
    if (!sequent_eq(p.conclusion, want)) {
      out.failures.push_back({where, rule_name(p.rule), "proof concludes " + to_string(p.conclusion) +
                                                            ", recorded sequent is " + to_string(want)});
      return;
    }
    CheckOptions co;
    co.mode = Mode::LKS;
    co.allowed_link_params = std::move(allowed);
    co.fuel = opt.fuel;
    co.lenient_erule = opt.lenient_erule;
    CheckReport r = check_proof(p, th, env, co);
    for (auto& f : r.failures) {
      f.path = where + f.path;
      out.failures.push_back(std::move(f));
    }
  };
  for (const auto& g : c.groups) {
    for (const auto& p : g.pairs) {
      const std::string where = g.id + "/" + p.id;
      run(p.base_proof, p.base.seq, where + "/base", {});
      if (p.step.kind == StepKind::Open || p.step.kind == StepKind::ClosedSeq) {
        if (!p.step_proof) {
          out.failures.push_back({where + "/step", "", "stepcase without proof"});
        } else {
          run(*p.step_proof, p.step.seq, where + "/step", {kParam});
        }
      }
    }
  }
  return out;
}

}  // namespace silk
