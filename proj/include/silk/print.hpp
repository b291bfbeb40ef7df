#pragma once

#include <string>

#include "silk/expr.hpp"
#include "silk/sequent.hpp"

namespace silk {

// Concrete syntax shared by every file format. Numerals print in decimal,
// bound variables are renamed where their hint would capture a free name.
std::string to_string(const Expr& e);
std::string to_string(const Formulas& fs);
std::string to_string(const Sequent& s);
std::string to_string(const AnnotatedSequent& s);

}  // namespace silk
