#include <cstdio>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace silk;

#ifndef SILK_CLI
#define SILK_CLI "silk"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SILK_CLI) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = ::pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string c(const std::string& name) { return testing::corpus(name); }

}  // namespace

TEST_CASE("proof file round trip") {
  for (const char* name : {"pi_shat.lkp", "nu_shat.lkp", "swap.lkp", "bigor.lkp"}) {
    INFO(name);
    LkFile f = testing::load_lk(name);
    const std::string text = print_lk_file(f);
    LkFile g = parse_lk_file(text, SILK_CORPUS_DIR);
    CHECK(proof_eq(f.proof, g.proof));
    CHECK(g.mode == f.mode);
    CHECK(g.target_order == f.target_order);
    CHECK(print_lk_file(g) == text);
  }
}

TEST_CASE("theory round trip") {
  for (const char* name : {"fhat.thy", "shat.thy", "exp.thy", "bigor.thy"}) {
    INFO(name);
    Language a = testing::load_theory(name);
    const std::string text = print_theory(a);
    Language b = parse_theory(text);
    REQUIRE(a.theory.rules.size() == b.theory.rules.size());
    for (std::size_t i = 0; i < a.theory.rules.size(); ++i) {
      CHECK(equal(a.theory.rules[i].lhs, b.theory.rules[i].lhs));
      CHECK(equal(a.theory.rules[i].rhs, b.theory.rules[i].rhs));
    }
    CHECK(print_theory(b) == text);
  }
}

TEST_CASE("file-level errors") {
  CHECK_THROWS_AS(parse_lk_file("mode LK;\n", "."), ParseError);
  CHECK_THROWS_AS(parse_lk_file("mode XK; proof { rule ax { conclusion A |- A; } }", "."), ParseError);
  CHECK_THROWS_AS(parse_schema_file("theory \"missing.thy\";", SILK_CORPUS_DIR), ParseError);
  CHECK_THROWS_AS(parse_schema_file("component c pattern A |- A { base { rule ax { conclusion A |- A; } } step { rule ax { conclusion A |- A; } } }", "."),
                  ParseError);
}

TEST_CASE("cli: exit codes") {
  CHECK(cli("check-silk " + c("silk_fhat.slk")).code == 0);
  CHECK(cli("check-schema " + c("schema_shat.sch")).code == 0);
  CHECK(cli("check-lk " + c("swap.lkp")).code == 0);
  CHECK(cli("check-lk --mode LK " + c("pi_shat.lkp")).code == 1);
  CHECK(cli("unroll " + c("schema_shat.sch") + " --alpha 1").code == 0);
  CHECK(cli("interpret " + c("silk_fhat.slk")).code == 0);
  CHECK(cli("ppsnf " + c("silk_interleaved.slk")).code == 0);
  CHECK(cli("translate " + c("silk_exp.slk")).code == 0);
  CHECK(cli("stats " + c("schema_exp.sch") + " --alpha-range 0..4").code == 0);
  // Usage and parse errors.
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("unroll " + c("schema_shat.sch")).code == 2);
  CHECK(cli("stats " + c("schema_exp.sch") + " --alpha-range 4").code == 2);
  CHECK(cli("check-silk " + c("fhat.thy")).code == 2);
  CHECK(cli("check-silk /nonexistent.slk").code == 2);
}

TEST_CASE("cli: unrolled S example") {
  Run r = cli("unroll " + c("schema_shat.sch") + " --alpha 1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("P(alpha + S(0 + 1))") != std::string::npos);
  CHECK(r.out.find("ERule=4") != std::string::npos);
  Run n = cli("unroll --normalized " + c("schema_shat.sch") + " --alpha 1");
  CHECK(n.out.find("ERule") == std::string::npos);
}

TEST_CASE("cli: json reports") {
  Run r = cli("--json check-silk " + c("silk_exp.slk"));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["format_version"] == 1);
  CHECK(j["status"] == "proof");
  CHECK(j["verdict"] == "proof");
  CHECK(j["failures"].empty());
  CHECK(j["strategy"] == "leftmost-innermost");
  CHECK(j["fuel"] == 100000);
  CHECK(j["steps"] == 19);

  Run s = cli("stats --json " + c("schema_exp.sch") + " --alpha-range 0..6");
  auto js = nlohmann::json::parse(s.out);
  REQUIRE(js["rows"].size() == 7);
  for (std::size_t i = 1; i < 7; ++i) CHECK(js["rows"][i]["inferences"] > js["rows"][i - 1]["inferences"]);

  Run f = cli("--json --fuel 5 stats " + c("schema_exp.sch") + " --alpha-range 3..3");
  auto jf = nlohmann::json::parse(f.out);
  CHECK(jf["fuel"] == 5);
  CHECK(jf["status"] == "rejected");
  CHECK(f.code == 1);
}

TEST_CASE("cli: failures name steps and nodes") {
  const std::string tmp = "/tmp/silk_frontend_bad.slk";
  {
    std::string text = silk::read_file(c("silk_fhat.slk"));
    text.replace(text.find("clsc ann \"s(n)\""), 15, "clsc ann \"n\"");
    text.replace(text.find("theory \"fhat.thy\""), 17, "theory \"" + c("fhat.thy") + "\"");
    FILE* out = std::fopen(tmp.c_str(), "w");
    REQUIRE(out != nullptr);
    std::fwrite(text.data(), 1, text.size(), out);
    std::fclose(out);
  }
  Run r = cli("--json check-silk " + tmp);
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "rejected");
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0]["path"].get<std::string>().rfind("step 11", 0) == 0);
  CHECK(j["failures"][0]["message"].get<std::string>().rfind("AnnotationMismatch", 0) == 0);
  std::remove(tmp.c_str());
}

TEST_CASE("cli: identical invocations give identical json") {
  for (const std::string args : {"--json check-silk " + c("silk_interleaved.slk"),
                                 "--json unroll " + c("schema_exp.sch") + " --alpha 3",
                                 "--json translate " + c("silk_exp.slk"),
                                 "--json interpret " + c("silk_exp.slk")}) {
    INFO(args);
    Run a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: SILK_FUEL") {
  Run r = cli("--json check-schema " + c("schema_shat.sch"));
  CHECK(nlohmann::json::parse(r.out)["fuel"] == 100000);
  const std::string cmd = "env SILK_FUEL=777 " + std::string(SILK_CLI) + " --json check-schema " + c("schema_shat.sch");
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  ::pclose(p);
  CHECK(nlohmann::json::parse(out)["fuel"] == 777);
}
