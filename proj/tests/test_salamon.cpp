#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skt/salamon.hpp"

using namespace skt;
using namespace skt::test;

TEST_CASE("heisenberg tuple") {
  LieAlgebra h3 = parse_salamon("(0,0,21)");
  CHECK(h3.dim() == 3);
  // de^3 = e^2 ^ e^1 means [e2,e1] = -e3
  CHECK(h3.bracket_basis(1, 0)(2) == doctest::Approx(-1.0));
  CHECK(jacobi_residual(h3) == 0.0);
  LieAlgebra viaCatalog = catalog("h", {{"k", 1}});
  CHECK((viaCatalog.raw() - h3.raw()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("r3 prime with lambda zero") {
  LieAlgebra l = parse_salamon("(0,lambda.21+31,-21+lambda.31)", {{"lambda", 0.0}});
  Fingerprint fp = series(l);
  CHECK(fp.derived_dims == std::vector<int>({3, 2, 0}));
}

TEST_CASE("six dimensional nilpotent tuple") {
  LieAlgebra l = parse_salamon("(0,0,0,0,12,14+23)");
  Fingerprint fp = series(l);
  CHECK(fp.derived_dims == std::vector<int>({6, 2, 0}));
  CHECK(is_nilpotent(l));
}

TEST_CASE("parser error reporting") {
  CHECK_THROWS_WITH_AS(parse_salamon("(0,0,2"), doctest::Contains("position"), InputError);
  CHECK_THROWS_WITH_AS(parse_salamon("(0,0,xy.21)"), doctest::Contains("unbound parameter"),
                       InputError);
  CHECK_THROWS_AS(parse_salamon("(0,0,21,99)"), InputError);          // index out of range
  CHECK_THROWS_AS(parse_salamon("(0,0,21) junk"), InputError);        // trailing characters
  CHECK_THROWS_AS(parse_salamon("(-34,0,-12,0)"), PreconditionError); // Jacobi violation
}

TEST_CASE("numeric coefficients incl. decimals") {
  LieAlgebra l = parse_salamon("(0,0.5.21,-21+2.31)");
  CHECK(l.bracket_basis(1, 0)(1) == doctest::Approx(-0.5));
  CHECK(l.bracket_basis(1, 0)(2) == doctest::Approx(1.0));
  CHECK(l.bracket_basis(2, 0)(2) == doctest::Approx(-2.0));
}

TEST_CASE("catalog entries: examples") {
  Fingerprint g514 = series(catalog("g5_14", {{"alpha", 0.0}}));
  CHECK(g514.derived_dims == std::vector<int>({5, 3, 0}));

  CHECK_THROWS_WITH_AS(catalog("r4", {{"mu", 2.0}, {"lambda", 0.5}}),
                       doctest::Contains("out of range"), InputError);
  CHECK_THROWS_AS(catalog("r3p", {{"lambda", -1.0}}), InputError);
  CHECK_THROWS_AS(catalog("nope"), InputError);
  CHECK_THROWS_WITH_AS(catalog("r3p"), doctest::Contains("missing parameter"), InputError);
}

namespace {
ParamMap random_params(std::mt19937_64& g, const std::string& name) {
  auto mag = [&](double lo, double hi) {
    double v = unif(g, lo, hi);
    return unif(g) > 0 ? v : -v;
  };
  if (name == "r3p") return {{"lambda", unif(g, 0, 2)}};
  if (name == "r4") {
    double mu = mag(0.4, 1.0);
    return {{"mu", mu}, {"lambda", mag(0.1, std::abs(mu))}};
  }
  if (name == "r4p") return {{"mu", unif(g, 0.1, 2)}, {"lambda", unif(g)}};
  if (name == "g5_14") return {{"alpha", unif(g, 0, 2)}};
  if (name == "g5_17") return {{"alpha", unif(g, 0, 2)}, {"beta", unif(g)}, {"gamma", mag(0.2, 1)}};
  if (name == "g6_1") {
    double a = mag(0.8, 1.0), b = mag(0.6, std::abs(a)), c = mag(0.4, std::abs(b)),
           d = mag(0.1, std::abs(c));
    return {{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", d}};
  }
  if (name == "g6_8") {
    double a = mag(0.8, 1.5), b = mag(0.5, std::abs(a)), c = mag(0.2, std::abs(b));
    return {{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", unif(g)}};
  }
  if (name == "g6_11")
    return {{"alpha", mag(0.3, 1.5)}, {"beta", unif(g)}, {"gamma", unif(g)}, {"delta", mag(0.3, 1.5)}};
  if (name == "h") return {{"k", 2}};
  if (name == "abelian") return {{"n", 4}};
  return {};
}
}  // namespace

TEST_CASE("catalog validity and round trip over random parameters") {
  auto g = rng(97);
  const std::vector<std::string> names = {"aff",  "h",    "r3p",  "r4",   "r4p",  "g5_14",
                                          "g5_17", "g6_1", "g6_8", "g6_11", "n37D", "abelian"};
  for (const auto& name : names) {
    for (int rep = 0; rep < 5; ++rep) {
      ParamMap p = random_params(g, name);
      LieAlgebra l = catalog(name, p);
      CHECK(jacobi_residual(l) < 1e-12);
      if (name == "n37D")
        CHECK(is_nilpotent(l));
      else
        CHECK(is_two_step_solvable(l));
      LieAlgebra back = parse_salamon(print_salamon(l));
      CHECK((back.raw() - l.raw()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}
