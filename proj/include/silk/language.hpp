#pragma once

#include <string>
#include <vector>

#include "silk/rewrite.hpp"
#include "silk/sequent.hpp"

namespace silk {

struct LetDef {
  std::string name;
  Formulas formulas;
  bool from_theory = true;
};

// Signature, rewrite rules and formula abbreviations in scope for a file.
struct Language {
  EquationalTheory theory;
  std::vector<LetDef> lets;
  // How the theory was given, kept for printing: a path as written, or
  // inline when empty and `inline_theory` is set.
  std::string theory_path;
  bool inline_theory = false;

  const LetDef* let(const std::string& name) const {
    for (const auto& l : lets) {
      if (l.name == name) return &l;
    }
    return nullptr;
  }
};

}  // namespace silk
