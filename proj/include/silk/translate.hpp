#pragma once

#include "silk/schema.hpp"
#include "silk/silk.hpp"

namespace silk {

// Reorders a proof script so that groups are built one at a time in the
// order they were closed. Group and pair names are written out. Throws
// NotAProof unless the script checks as a proof.
SilkScript to_ppsnf(const SilkScript& s, const SilkOptions& opt = {});

// One component per group, last closed first. Groups closed by cl_LKE are
// dropped; when the leading group is one of them the result is a single
// component without step case.
ProofSchema collection_to_schema(const ComponentCollection& c);
ProofSchema silk_to_schema(const SilkScript& s, const SilkOptions& opt = {});

// /\ ante -> \/ succ, folded to the left. No antecedent: just the
// succedent; no succedent: false.
Expr sequent_formula(const Sequent& s);

// The induction statement of a closed collection.
Expr interpret(const ComponentCollection& c);

}  // namespace silk
