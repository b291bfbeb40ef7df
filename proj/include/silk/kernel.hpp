#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "silk/proof.hpp"
#include "silk/rewrite.hpp"

namespace silk {

enum class Mode : std::uint8_t { LK, LKE, LKS };

const char* mode_name(Mode m);

// End-sequent pattern S(n, xbar) of a proof symbol.
struct LinkTarget {
  Sequent pattern;
  std::vector<std::string> vars;
};

using LinkEnv = std::map<std::string, LinkTarget>;

struct Failure {
  std::string path;  // "/" for the root, "/0/1" for the second premise of the first premise
  std::string rule;
  std::string message;
};

struct CheckReport {
  bool accepted() const { return failures.empty(); }
  std::vector<Failure> failures;
  RuleCounts counts;
  std::size_t rewrite_steps = 0;
};

struct CheckOptions {
  Mode mode = Mode::LKS;
  std::set<std::string> allowed_link_params{kParam};
  std::size_t fuel = 0;
  // Accept an ERule node when both sequents have the same normal form.
  bool lenient_erule = false;
};

CheckReport check_proof(const Proof& p, const EquationalTheory& th, const LinkEnv& env,
                        const CheckOptions& opt);

// Check a single inference against its immediate premises. Empty string on
// success.
std::string check_node(const Proof& p, const EquationalTheory& th, const LinkEnv& env,
                       const CheckOptions& opt, Normalizer& nz);

// The instance S(k, tbar) of a link target.
Sequent link_instance(const LinkTarget& t, const Expr& k, const std::vector<Expr>& terms);

}  // namespace silk
