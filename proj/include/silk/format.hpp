#pragma once

#include <set>
#include <string>

#include "silk/kernel.hpp"
#include "silk/language.hpp"
#include "silk/schema.hpp"
#include "silk/silk.hpp"

namespace silk {

// Throws std::runtime_error when the file cannot be read.
std::string read_file(const std::string& path);
std::string dir_of(const std::string& path);

// A single proof with its link targets (.lkp).
struct LkFile {
  Language lang;
  Mode mode = Mode::LKS;
  LinkEnv targets;
  std::vector<std::string> target_order;
  std::set<std::string> allowed{kParam};
  Proof proof;
};

struct SchemaFile {
  Language lang;
  ProofSchema schema;
};

// `base_dir` resolves `theory "path"` references. Errors are ParseError.
LkFile parse_lk_file(const std::string& text, const std::string& base_dir = ".");
SchemaFile parse_schema_file(const std::string& text, const std::string& base_dir = ".");
SilkScript parse_silk_script(const std::string& text, const std::string& base_dir = ".");

std::string print_lk_file(const LkFile& f);
std::string print_schema_file(const SchemaFile& f);
std::string print_silk_script(const SilkScript& s);
std::string print_silk_step(const SilkStep& s);

// Structural equality of parsed files (proofs, patterns, names).
bool schema_eq(const ProofSchema& a, const ProofSchema& b);
bool step_eq(const SilkStep& a, const SilkStep& b);

}  // namespace silk
