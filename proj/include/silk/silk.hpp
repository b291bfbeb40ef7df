#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "silk/kernel.hpp"
#include "silk/language.hpp"

namespace silk {

enum class StepKind : std::uint8_t { Top, Open, ClosedSeq, EmptyClosed };

struct Stepcase {
  StepKind kind = StepKind::Top;
  Sequent seq;     // Open and ClosedSeq
  Expr ann;        // Open and ClosedSeq: the instance annotation
};

struct Basecase {
  Sequent seq;
  bool closed = false;
};

struct ComponentPair {
  std::string id;
  Stepcase step;
  Basecase base;
  Proof base_proof;
  std::optional<Proof> step_proof;
};

// B(n, xbar), fixed by cl_bc.
struct GroupPattern {
  Sequent seq;
  std::vector<std::string> vars;
};

struct ComponentGroup {
  std::string id;
  std::vector<ComponentPair> pairs;
  bool closed = false;
  std::optional<GroupPattern> pattern;
  int closure_index = -1;
  // Script steps identified with this group (the auxiliary group of a call
  // does not record the call).
  std::vector<std::size_t> history;

  const ComponentPair* find(const std::string& pair) const;
};

struct ComponentCollection {
  // Newest group first.
  std::vector<ComponentGroup> groups;
  int closures = 0;

  const ComponentGroup* find(const std::string& group) const;
  bool all_closed() const;
};

enum class SilkRule : std::uint8_t {
  Ax1R, Ax2R, AxL, CcR, CcL, Br, ClBc, ClLKE, ClSc, Rho1Sc, Rho2Sc, Rho1Bc, Rho2Bc, Cycle, Call,
};

const char* silk_rule_name(SilkRule r);  // display spelling, "cl_bc"
const char* silk_rule_keyword(SilkRule r);  // script keyword, "clbc"

struct SilkStep {
  SilkRule rule = SilkRule::Ax1R;
  std::size_t line = 0;
  std::string group;   // empty: the only open group (or a fresh name for ax1r)
  std::string pair;    // empty: the only pair that fits
  std::string pair2;   // second premise of binary rules
  std::string fresh;   // name of the copy made by br
  std::string target;  // auxiliary group of a call
  std::optional<Sequent> seq;          // axiom or rho conclusion
  std::optional<Rule> lk_rule;         // rho
  RuleData data;                       // rho: term, eigen, at
  std::optional<Sequent> pattern;      // cl_bc
  std::optional<std::vector<std::string>> vars;  // cl_bc
  Expr ann;                            // ax:l, cl_sc
  Expr g, f;                           // call
  std::vector<Expr> terms;             // cycle, call
};

struct SilkScript {
  Language lang;
  std::vector<SilkStep> steps;
};

// Error codes follow the step failure categories.
class SilkError : public std::runtime_error {
 public:
  SilkError(std::string code, const std::string& msg) : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct SilkOptions {
  std::size_t fuel = 0;
  bool lenient_erule = false;
};

// Applies one step. `step` is completed in place with the group and pair
// names it resolved to.
ComponentCollection apply_step(const ComponentCollection& state, SilkStep& step, std::size_t index,
                               const EquationalTheory& th, const SilkOptions& opt = {});

enum class Verdict : std::uint8_t { Proof, Derivation, Rejected };
const char* verdict_name(Verdict v);

struct ScriptResult {
  ComponentCollection collection;
  Verdict verdict = Verdict::Derivation;
  CheckReport report;       // failures name the step ("step 7")
  std::vector<SilkStep> resolved;  // steps with all names filled in
};

ScriptResult check_script(const SilkScript& s, const SilkOptions& opt = {});

class NotAProof : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The last group closed. Throws NotAProof.
const ComponentGroup& leading_group(const ComponentCollection& c);

// Link targets for proofs embedded in the collection.
LinkEnv collection_env(const ComponentCollection& c);

// Structural equality with groups matched by closure index.
bool collection_eq(const ComponentCollection& a, const ComponentCollection& b);

// Every pair's proofs conclude its recorded sequents and check in LKS.
CheckReport check_coherence(const ComponentCollection& c, const EquationalTheory& th,
                            const SilkOptions& opt = {});

}  // namespace silk
