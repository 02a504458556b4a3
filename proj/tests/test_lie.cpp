#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skt/io.hpp"
#include "skt/lie.hpp"
#include "skt/salamon.hpp"

using namespace skt;
using namespace skt::test;

TEST_CASE("jacobi residual") {
  CHECK(jacobi_residual(LieAlgebra::abelian(6)) == 0.0);
  CHECK(jacobi_residual(catalog("h3")) == 0.0);

  // [e1,e2]=e3 together with [e1,e3]=e1 breaks Jacobi on (e1,e2,e3).
  LieAlgebra bad(3);
  bad.set_bracket(0, 1, Vec::Unit(3, 2));
  bad.set_bracket(0, 2, Vec::Unit(3, 0));
  CHECK(jacobi_residual(bad) > 0.5);
}

TEST_CASE("series dimensions on small models") {
  LieAlgebra h3r3 = direct_sum(catalog("h3"), LieAlgebra::abelian(3));
  Fingerprint fp = series(h3r3);
  CHECK(fp.derived_dims == std::vector<int>({6, 1, 0}));
  CHECK(fp.center_dim == 4);
  CHECK(fp.abelianization_dim == 5);

  Fingerprint aff = series(catalog("aff"));
  CHECK(aff.derived_dims == std::vector<int>({2, 1, 0}));
  CHECK(is_two_step_solvable(catalog("aff")));

  Fingerprint rn = series(LieAlgebra::abelian(5));
  CHECK(rn.derived_dims == std::vector<int>({5, 0}));
}

TEST_CASE("two-step solvability") {
  CHECK(is_two_step_solvable(catalog("h3")));
  CHECK(is_two_step_solvable(LieAlgebra::abelian(6)));
  CHECK(is_abelian(LieAlgebra::abelian(6)));

  LieAlgebra so3(3);  // perfect: g'' = g' != 0
  so3.set_bracket(0, 1, Vec::Unit(3, 2) * 0.5);
  so3.set_bracket(1, 2, Vec::Unit(3, 0) * 0.5);
  so3.set_bracket(2, 0, Vec::Unit(3, 1) * 0.5);
  CHECK(jacobi_residual(so3) < 1e-15);
  CHECK(!is_two_step_solvable(so3));
}

TEST_CASE("direct sums") {
  Fingerprint rab = series(direct_sum(LieAlgebra::abelian(2), LieAlgebra::abelian(3)));
  CHECK(rab.derived_dims == std::vector<int>({5, 0}));

  Fingerprint aa = series(direct_sum(catalog("aff"), catalog("aff")));
  CHECK(aa.derived_dims == std::vector<int>({4, 2, 0}));

  Fingerprint h3r = series(direct_sum(catalog("h3"), LieAlgebra::abelian(1)));
  CHECK(h3r.dim == 4);
  CHECK(h3r.center_dim == 2);
}

TEST_CASE("jacobi residual of a direct sum is bounded by the parts") {
  auto g = rng(41);
  for (int rep = 0; rep < 10; ++rep) {
    LieAlgebra a(3), b(4);
    a.raw() = random_mat(g, a.raw().rows(), 3);
    b.raw() = random_mat(g, b.raw().rows(), 4);
    CHECK(jacobi_residual(direct_sum(a, b)) <= jacobi_residual(a) + jacobi_residual(b) + 1e-12);
  }
}

TEST_CASE("fingerprint is stable under orthogonal change of basis") {
  auto g = rng(43);
  std::vector<LieAlgebra> models = {catalog("h3"),
                                    direct_sum(catalog("aff"), catalog("h3")),
                                    catalog("g5_14", {{"alpha", 0.7}}),
                                    catalog("g6_8", {{"alpha", 1.0}, {"beta", -0.5}, {"gamma", 0.5}, {"delta", 0.3}})};
  for (const auto& l : models) {
    Fingerprint base = series(l);
    for (int rep = 0; rep < 3; ++rep) {
      Mat q = random_orthogonal(g, l.dim());
      CHECK(series(l.change_basis(q)) == base);
    }
  }
}

TEST_CASE("fingerprint matching") {
  LieAlgebra l = direct_sum(catalog("h3"), LieAlgebra::abelian(3));
  CHECK(fingerprint_match(l, "h3 + R^3"));
  // lcs separates the nilpotent h3+R^3 from aff+R^4
  CHECK(!fingerprint_match(l, "aff + R^4"));
  LieAlgebra aa = direct_sum(catalog("aff"), catalog("aff"));
  CHECK(!fingerprint_match(aa, "h5"));
  CHECK(fingerprint_match(aa, "2aff"));
  CHECK(fingerprint_match(direct_sum(aa, LieAlgebra::abelian(2)), "2aff + R^2"));
}

TEST_CASE("algebra json round trip and error paths") {
  LieAlgebra l = catalog("g5_14", {{"alpha", 0.25}});
  AlgebraFile f;
  f.algebra = l;
  std::string text = write_algebra_json(f);
  AlgebraFile back = read_algebra_json(text);
  CHECK((back.algebra.raw() - l.raw()).cwiseAbs().maxCoeff() < 1e-15);

  AlgebraFile withJ;
  withJ.algebra = LieAlgebra::abelian(4);
  withJ.metric = Mat::Identity(4, 4);
  withJ.j = standard_j(2);
  AlgebraFile back2 = read_algebra_json(write_algebra_json(withJ, 2));
  CHECK(back2.metric.has_value());
  CHECK(back2.j.has_value());
  CHECK((back2.hermitian().j - standard_j(2)).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(read_algebra_json("{\"dim\": 3, "), InputError);
  CHECK_THROWS_AS(read_algebra_json("{\"dim\": 2, \"structure\": [{\"i\":2,\"j\":1,\"k\":1,\"c\":1.0}]}"),
                  InputError);
  CHECK_THROWS_AS(read_algebra_json("{\"dim\": 2, \"structure\": [{\"i\":1,\"j\":5,\"k\":1,\"c\":1.0}]}"),
                  InputError);
}
