#include <doctest.h>

#include "gext/engine.hpp"

using namespace gext;

static const char* kDual = R"(
field Q
algebra A {
  dim 2
  unit 1 0
  mult 0 0 -> 1 0
  mult 0 1 -> 0 1
  mult 1 0 -> 0 1
  mult 1 1 -> 0 0
}
bialgebroid U {
  enveloping A
}
coefficients std {
  unit U
}
task {
  ext --max-degree 2
}
)";

TEST_CASE("spec text parses, loads, and validates") {
    auto ast = parse_spec_text(kDual, "inline");
    CHECK(ast.field == "Q");
    CHECK(ast.blocks.size() == 4);
    auto spec = load_spec<Rat>(ast);
    CHECK(spec.algebras.count("A") == 1);
    CHECK(spec.bialgebroids.count("U") == 1);
    CHECK(spec.coefficients.count("std") == 1);
    REQUIRE(spec.tasks.size() == 1);
    CHECK(spec.tasks[0] == std::vector<std::string>{"ext", "--max-degree", "2"});
    CHECK(check_bialgebroid(*spec.bialgebroids.at("U")).ok());
}

TEST_CASE("parse errors carry file, line, and block context") {
    CHECK_THROWS_WITH_AS(parse_spec_text("field\n", "f.spec"),
                         doctest::Contains("f.spec:1"), SpecError);
    CHECK_THROWS_WITH_AS(parse_spec_text("algebra A {\n", "f.spec"),
                         doctest::Contains("unterminated"), SpecError);
    // wrong structure-constant count names the block
    std::string bad = "field Q\nalgebra A {\n dim 2\n unit 1 0\n mult 0 0 -> 1\n}\n";
    CHECK_THROWS_WITH_AS(load_spec<Rat>(parse_spec_text(bad, "f.spec")),
                         doctest::Contains("'A'"), SpecError);
    // unresolved reference
    std::string unres = "field Q\nbialgebroid U {\n enveloping NoSuch\n}\n";
    CHECK_THROWS_WITH_AS(load_spec<Rat>(parse_spec_text(unres, "f.spec")),
                         doctest::Contains("unresolved"), SpecError);
}

TEST_CASE("rational literals a/b are accepted") {
    std::string s = R"(
field Q
algebra A {
  dim 1
  unit 2/2
  mult 0 0 -> 3/3
}
)";
    auto spec = load_spec<Rat>(parse_spec_text(s, "inline"));
    CHECK(check_algebra(spec.algebras.at("A")).ok());
}

TEST_CASE("explicit coefficient blocks load and validate through the engine") {
    std::string s = R"(
field Q
algebra k {
  dim 1
  unit 1
  mult 0 0 -> 1
}
bialgebroid U {
  enveloping k
}
coefficients expl {
  bialgebroid U
  z_dim 1
  z_act 0 -> 1
  z_coact 0 -> 1
  z_mul 0 0 -> 1
  z_one 1
  x_dim 1
  x_act 0 -> 1
  x_coact 0 -> 1
  x_comul 0 -> 1
  x_counit 0 -> 1
}
)";
    auto spec = load_spec<Rat>(parse_spec_text(s, "inline"));
    RunConfig cfg;
    Report rep;
    int code = run_command(spec, "check-axioms", cfg, rep);
    CHECK(code == 0);
}

TEST_CASE("run_command produces the frozen dims and a deterministic report") {
    auto spec = load_spec<Rat>(parse_spec_text(kDual, "inline"));
    RunConfig cfg;
    cfg.max_degree = 3;
    Report r1, r2;
    CHECK(run_command(spec, "ext", cfg, r1) == 0);
    CHECK(run_command(spec, "ext", cfg, r2) == 0);
    CHECK(r1.text.str() == r2.text.str());
    CHECK(r1.json == r2.json);
    CHECK(r1.json["ext_dims"] == nlohmann::json({2, 1, 1, 1}));
}

TEST_CASE("engine rejects invalid explicit coefficients with a witness") {
    std::string s = R"(
field Q
algebra k {
  dim 1
  unit 1
  mult 0 0 -> 1
}
bialgebroid U {
  enveloping k
}
coefficients bad {
  bialgebroid U
  z_dim 1
  z_act 0 -> 2
  z_coact 0 -> 1
  x_dim 1
  x_act 0 -> 1
  x_coact 0 -> 1
}
)";
    auto spec = load_spec<Rat>(parse_spec_text(s, "inline"));
    RunConfig cfg;
    Report rep;
    // check-axioms reports the failure rather than throwing
    int code = run_command(spec, "check-axioms", cfg, rep);
    CHECK(code == 1);
    // computation commands refuse to run on unvalidated data
    Report rep2;
    CHECK_THROWS_AS(run_command(spec, "ext", cfg, rep2), SpecError);
}
