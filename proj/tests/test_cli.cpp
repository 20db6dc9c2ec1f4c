/*
   Copyright 2026 The fxgroup Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace fxg;
using namespace fxg::test;

namespace {

Session session(std::string_view ring = "zt") { return Session(Alphabet::parse("a,b"), make_ring(ring)); }

CommandResult run(std::string_view line) {
  Session s = session();
  return s.run(line);
}

struct Proc {
  int status;
  std::string out;
  std::string err;
};

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / ("fxg_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the fxg binary with shell-quoted arguments.
Proc fxg_cli(const std::string& args, const std::string& stdin_text = "") {
  auto dir = scratch();
  auto in = dir / "stdin", out = dir / "stdout", err = dir / "stderr";
  std::ofstream(in, std::ios::binary) << stdin_text;
  std::string cmd = std::string("'") + FXG_CLI_PATH + "' " + args + " <'" + in.string() + "' >'" +
                    out.string() + "' 2>'" + err.string() + "'";
  int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  RawExpr e = parse_expression("a*b^-1", ctx());
  REQUIRE(e.kind() == RawExpr::Kind::Product);
  REQUIRE(e.children().size() == 2);
  CHECK(e.children()[0].kind() == RawExpr::Kind::Gen);
  CHECK(e.children()[0].generator() == 0);
  CHECK(e.children()[1].kind() == RawExpr::Kind::Inverse);
  CHECK(e.children()[1].child().kind() == RawExpr::Kind::Gen);
  CHECK(e.children()[1].child().generator() == 1);

  RawExpr p = parse_expression("a^(3*t^2+1)", ctx());
  const RawExpr& pw = p.kind() == RawExpr::Kind::Product ? p.children().front() : p;
  REQUIRE(pw.kind() == RawExpr::Kind::Power);
  CHECK(pw.exponent() == P("3t^2+1"));
  CHECK(pw.child().kind() == RawExpr::Kind::Gen);

  CHECK(normalize(parse_expression("1", ctx())).is_identity());
  CHECK(normalize(parse_expression(" ( a * b ) ^ 2 * 1 ", ctx())) == E("a*b*a*b"));
  CHECK(normalize(parse_expression("a^-3", ctx())) == E("a^-1*a^-1*a^-1"));
  CHECK(normalize(parse_expression("a^+2", ctx())) == E("a^2"));
}

TEST_CASE("parse errors carry 1-based columns") {
  try {
    parse_expression("a^(q)", ctx());
    FAIL("expected an unknown symbol");
  } catch (const UnknownSymbolError& e) {
    CHECK(e.column() == 4);
    CHECK(e.name() == "q");
  }
  try {
    parse_expression("a*c", ctx());
    FAIL("expected an unknown symbol");
  } catch (const UnknownSymbolError& e) {
    CHECK(e.column() == 3);
  }
  auto column_of = [](std::string_view text) -> std::size_t {
    try {
      parse_expression(text, ctx());
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("a*") == 3);
  CHECK(column_of("(a*b") == 5);
  CHECK(column_of("a^") == 3);
  CHECK(column_of("a b") == 3);
  CHECK(column_of("2") == 1);
  CHECK(column_of("a^(t+)") == 6);
  CHECK(column_of("") == 1);
  CHECK_THROWS_AS(parse_expression("a^(t)", Context{Alphabet::parse("a"), make_ring("z")}),
                  UnknownSymbolError);
}

TEST_CASE("command examples") {
  CommandResult eq = run("eq a^(t)*b ; a^(t+1)*a^-1*b");
  CHECK(eq.status == kTrue);
  CHECK(eq.output == "true");

  CommandResult conj = run("conj a^(t)*b ; b*a^(t)");
  CHECK(conj.status == kTrue);
  Element c = E(conj.output);
  CHECK(equals(conjugate(E("a^(t)*b"), c), E("b*a^(t)")));

  CommandResult level = run("level a^(t)");
  CHECK(level.status == kTrue);
  CHECK(level.output == "1");
}

TEST_CASE("every command") {
  Session s = session();
  auto check = [&](std::string_view line, int status, std::string_view output) {
    CommandResult r = s.run(line);
    INFO(line, " -> ", r.output);
    CHECK(r.status == status);
    CHECK(r.output == output);
  };
  check("norm a^(t)*a^(t)", kTrue, "a^(2*t)");
  check("norm b*a^(t+1)*a^-1", kTrue, "b*a^(t)");
  check("eq a^(t) ; b^(t)", kFalse, "false");
  check("comm a^(t) ; a^(3*t^2+1)", kTrue, "true");
  check("comm a^(t) ; b", kFalse, "false");
  check("conj a ; b", kFalse, "none");
  check("conj a ; a", kTrue, "1");
  check("root a^4", kTrue, "1 ; a ; 4");
  check("root b^-1*a^(t)*b", kTrue, "b ; a ; t");
  check("root a^(t)*b*a^(t)*b", kTrue, "1 ; a^(t)*b ; 2");
  check("cent b^-1*a*b", kTrue, "b ; a");
  check("cent a^(t)*b", kTrue, "1 ; a^(t)*b");
  check("level (a^(t)*b)^(t)", kTrue, "2");
  check("len a^(t)*b*a^(t)*b", kTrue, "2");
  check("len b", kTrue, "1");
  check("pow a^2 ; t", kTrue, "a^(2*t)");
  check("eval a^(t^2)*b*a^(-t) ; 2", kTrue, "a^4*b*a^-2");
  check("eval (a^(t)*b)^(t+1) ; 3", kTrue, "a^3*b*a^3*b*a^3*b*a^3*b");
  check("eval a^(t)",  kTrue, "t=-2: a^-2\nt=-1: a^-1\nt=0: 1\nt=1: a\nt=2: a^2\nt=3: a^3");
  check("let x = a^(t)*b", kTrue, "x = a^(t)*b");
  check("pow x ; t", kTrue, "(a^(t)*b)^(t)");
  check("let y = x*x", kTrue, "y = a^(t)*b*a^(t)*b");
  check("root y", kTrue, "1 ; a^(t)*b ; 2");
  check("selftest", kTrue, "selftest passed (150 checks)");
}

TEST_CASE("command errors") {
  Session s = session();
  auto status = [&](std::string_view line) { return s.run(line).status; };
  CHECK(status("norm a^(q)") == kError);
  CHECK(s.run("norm a^(q)").output == "unknown symbol 'q' at column 9");
  CHECK(status("frobnicate a") == kError);
  CHECK(status("") == kError);
  CHECK(status("eq a") == kError);
  CHECK(status("eq a ; b ; a") == kError);
  CHECK(status("pow a ; q") == kError);
  CHECK(status("eval a ; x") == kError);
  CHECK(status("let t = a") == kError);
  CHECK(status("let a = b") == kError);
  CHECK(status("let 1x = b") == kError);
  CHECK(status("root 1") == kError);
  CHECK(status("selftest now") == kError);
  // The session survives errors.
  CHECK(s.run("norm a*a").output == "a^2");

  Session z = session("z");
  CHECK(z.run("norm a^(t)").status == kError);
  CHECK(z.run("norm a^(3)*a^-3").output == "1");
}

TEST_CASE("round trip through text") {
  Rng rng(71);
  for (int i = 0; i < 1000; ++i) {
    Element g = random_upto(rng, 2);
    Session s = session();
    CommandResult r = s.run("norm " + F(g));
    REQUIRE(r.status == kTrue);
    CHECK(r.output == F(g));
    CHECK(E(r.output) == g);
  }
}

TEST_CASE("batch output is deterministic") {
  std::string script =
      "# sample\n"
      "\n"
      "norm a^(t)*a^(t)\n"
      "eq a^(t) ; b^(t)\n"
      "conj a^(t)*b ; b*a^(t)\n"
      "norm a^(q)\n"
      "eval a^(t)\n"
      "let x = (a*b)^(t)\n"
      "root x*x\n";
  std::string first;
  for (int i = 0; i < 3; ++i) {
    Session s = session();
    std::istringstream in(script);
    std::ostringstream out;
    int code = run_batch(s, in, out);
    CHECK(code == kError);
    if (i == 0) first = out.str();
    CHECK(out.str() == first);
  }
  CHECK(first.rfind("ok: a^(2*t)\nno: false\nok: ", 0) == 0);
  CHECK(first.find("err: unknown symbol 'q' at column 9\n") != std::string::npos);
  CHECK(first.find("ok: t=0: 1\n") != std::string::npos);
  CHECK(first.find("ok: 1 ; a*b ; 2*t\n") != std::string::npos);
}

TEST_CASE("fxg binary exit codes and output") {
  Proc eq = fxg_cli("--gens a,b eq 'a^(t)*b ; a^(t+1)*a^-1*b'");
  CHECK(eq.status == 0);
  CHECK(eq.out == "true\n");

  Proc ne = fxg_cli("--gens a,b eq 'a^(t) ; b^(t)'");
  CHECK(ne.status == 1);
  CHECK(ne.out == "false\n");

  Proc level = fxg_cli("--gens a,b level 'a^(t)'");
  CHECK(level.status == 0);
  CHECK(level.out == "1\n");

  Proc bad = fxg_cli("--gens a,b norm 'a^(q)'");
  CHECK(bad.status == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err == "error: unknown symbol 'q' at column 9\n");

  CHECK(fxg_cli("norm a").status == 2);
  CHECK(fxg_cli("--gens a,t norm a").status == 2);
  CHECK(fxg_cli("--gens a,b --ring q norm a").status == 2);
  CHECK(fxg_cli("--gens a,b --ring z norm 'a^(t)'").status == 2);

  Proc pts = fxg_cli("--gens a,b --points 0,5 eval 'a^(t)*b'");
  CHECK(pts.status == 0);
  CHECK(pts.out == "t=0: b\nt=5: a^5*b\n");

  std::string script = "norm a*a\neq a ; b\nconj a^(t)*b ; b*a^(t)\nnorm 1*\n";
  Proc piped = fxg_cli("--gens a,b", script);
  CHECK(piped.status == 2);
  auto file = scratch() / "batch.txt";
  std::ofstream(file) << script;
  Proc batch1 = fxg_cli("--gens a,b --seed 4 --batch '" + file.string() + "'");
  Proc batch2 = fxg_cli("--gens a,b --seed 4 --batch '" + file.string() + "'");
  CHECK(batch1.status == 2);
  CHECK(batch1.out == batch2.out);
  CHECK(batch1.out == piped.out);
  CHECK(batch1.out.rfind("ok: a^2\nno: false\nok: ", 0) == 0);

  Proc clean = fxg_cli("--gens a,b", "norm a\n# done\n");
  CHECK(clean.status == 0);
  CHECK(clean.out == "ok: a\n");
  CHECK(fxg_cli("--gens a,b --batch /nonexistent/file").status == 2);
}
