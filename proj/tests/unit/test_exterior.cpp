#include <doctest.h>

#include "support.hpp"

using namespace folichar;

namespace {

// Sylvester-free oracle: for f = a0 * prod (u - r_i), disc = a0^(2k-2) prod_{i<j} (r_i - r_j)^2.
Rational disc_from_roots(const Rational& a0, const std::vector<Rational>& roots) {
  int k = static_cast<int>(roots.size());
  Rational d = 1;
  for (int e = 0; e < 2 * k - 2; ++e) d *= a0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) d *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  return d;
}

std::vector<Rational> expand_roots(const Rational& a0, const std::vector<Rational>& roots) {
  std::vector<Rational> c{a0};  // high degree first
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = next;
  }
  return c;
}

}  // namespace

TEST_CASE("basic operations") {
  fct::Ctx c("x1 x2 x3");
  CHECK(exterior_derivative(c.form("x1*dx2")) == c.form("dx1^dx2"));
  CHECK(wedge(c.form("dx1"), c.form("dx1")).is_zero());
  CHECK(contract(c.form("dx1^dx2"), IndexTuple{0}) == c.form("dx2"));
  CHECK(lie_derivative(c.xi("x1*d1"), c.form("dx1")) == c.form("dx1"));
  CHECK(lie_derivative(c.xi("d1"), c.form("x1*dx2")) == c.form("dx2"));
  PolyForm zero(c.s.space(), 3, 1);
  CHECK(lie_derivative(c.xi("x2*d1"), zero).is_zero());
  CHECK(wedge(c.form("dx2"), c.form("dx1")) == -c.form("dx1^dx2"));
}

TEST_CASE("distribution and integrability tests") {
  fct::Ctx c("x1 x2 x3 x4");
  CHECK(is_distribution(c.form("x2*dx1 + x3^2*dx4")));
  CHECK(!is_distribution(c.form("dx1^dx2 + dx3^dx4")));
  CHECK(is_distribution(c.form("dx1^dx2")));
  CHECK(is_integrable(c.form("x1*dx1 + x2*dx2")));
  CHECK(!is_integrable(c.form("dx3 - x2*dx1")));
  CHECK(is_integrable(c.form("dx1 + x1*dx2")));
  CHECK_THROWS_AS(is_integrable(c.form("dx1^dx2 + dx3^dx4")), Error);
}

TEST_CASE("proportionality, automorphisms, torus invariance") {
  fct::Ctx c("x1 x2 x3");
  PolyForm w = c.form("dx3 - x2*dx1");
  CHECK(proportional_forms(c.p("x1") * w, w));
  CHECK(!proportional_forms(c.form("dx1"), c.form("dx2")));
  CHECK(proportional_forms(c.form("x2*dx1 + x1*dx2"), c.form("x1*x2*dx1 + x1^2*dx2")));
  CHECK(is_infinitesimal_automorphism(c.xi("d1"), c.form("dx2")));
  CHECK(is_infinitesimal_automorphism(c.xi("x1*d1"), c.form("x2*dx1")));
  CHECK(!is_infinitesimal_automorphism(c.xi("x1*d1 + x2*d2 + x3*d3"), w));
  CHECK(is_torus_invariant_form(c.form("x2*dx1 + x1*dx2")));
  CHECK(!is_torus_invariant_form(c.form("dx1 + dx2")));
  CHECK(is_torus_invariant_form(c.form("dx1")));
}

TEST_CASE("logarithmic normal form") {
  fct::Ctx c("x1 x2 x3");
  LogNormalForm a = logarithmic_normal_form(c.form("2*x2*dx1 + 3*x1*dx2"));
  CHECK(a.h == c.p("x1*x2"));
  CHECK(a.lambdas.at({0}) == Scalar(2));
  CHECK(a.lambdas.at({1}) == Scalar(3));
  LogNormalForm b = logarithmic_normal_form(c.form("x2*dx1"));
  CHECK(b.h == c.p("x1*x2"));
  CHECK(b.lambdas.at({1}).is_zero());
  LogNormalForm v = logarithmic_normal_form(c.form("x2*x3*dx1 + x1*x3*dx2"));
  CHECK(v.lambdas.at({0}) == Scalar(1));
  CHECK(v.lambdas.at({1}) == Scalar(1));
  CHECK(v.lambdas.at({2}).is_zero());
  CHECK(v.support == std::vector<int>{0, 1});
  CHECK(v.k == 2);
  REQUIRE(v.singular_subspace);
  CHECK(*v.singular_subspace == std::vector<int>{0, 1});
  CHECK(v.singular_subspace_dimension == 1);
  CHECK(v.singular_subspace_verified);
  CHECK_THROWS_AS(logarithmic_normal_form(c.form("dx1 + dx2")), Error);
}

TEST_CASE("binary discriminant") {
  fct::Ctx c("x1 x2 x3");
  CHECK(binary_discriminant({c.p("x1"), c.p("x2"), c.p("x3")}) == c.p("x2^2 - 4*x1*x3"));
  CHECK(binary_discriminant({c.p("1"), c.p("0"), c.p("-x1^2")}) == c.p("4*x1^2"));
  CHECK(binary_discriminant({c.p("1"), c.p("0"), c.p("x1"), c.p("x2")}) == c.p("-4*x1^3 - 27*x2^2"));
  PolyForm z(c.s.space(), 3, 1);
  CHECK_THROWS_AS(binary_discriminant({c.p("0"), c.p("0"), c.p("0")}), Error);
}

TEST_CASE("discriminant agrees with the root-product oracle") {
  fct::Rng r(fct::seed() + 30);
  SpacePtr s = VarSpace::doubled(1);
  for (int t = 0; t < 40; ++t) {
    int k = r.uniform(2, 5);
    Rational a0 = r.nonzero_rational(4, 2);
    std::vector<Rational> roots;
    for (int i = 0; i < k; ++i) roots.push_back(r.rational(4, 2));
    std::vector<MultiPoly> coeffs;
    for (const auto& q : expand_roots(a0, roots)) coeffs.push_back(MultiPoly(s, Scalar(q)));
    MultiPoly d = binary_discriminant(coeffs);
    CHECK(d == MultiPoly(s, Scalar(disc_from_roots(a0, roots))));
  }
}

TEST_CASE("exterior calculus identities on random forms") {
  fct::Rng r(fct::seed() + 31);
  for (int t = 0; t < 40; ++t) {
    int n = r.uniform(2, 4);
    PolyVectorField xi = fct::random_field(n, 2, r);
    const SpacePtr& s = xi.space;
    PolyForm a = fct::random_form(s, n, r.uniform(0, n - 1), 2, r);
    PolyForm b = fct::random_form(s, n, r.uniform(0, 1), 2, r);
    CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
    CHECK(lie_derivative(xi, wedge(a, b)) ==
          wedge(lie_derivative(xi, a), b) + wedge(a, lie_derivative(xi, b)));
    PolyForm w = fct::random_form(s, n, 1, 2, r);
    if (w.is_zero() || !is_torus_invariant_form(w)) continue;
    Exponent e(s->size(), 0);
    e[r.uniform(0, n - 1)] = r.uniform(1, 2);
    CHECK(is_torus_invariant_form(MultiPoly::monomial(s, e) * w));
  }
}

TEST_CASE("logarithmic forms are integrable") {
  fct::Rng r(fct::seed() + 32);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    int n = r.uniform(3, 4);
    int q = r.uniform(1, n - 2);
    SpacePtr s = VarSpace::doubled(n);
    Exponent e(s->size(), 0);
    for (int i = 0; i < n; ++i) e[i] = 1 + r.uniform(0, 1);
    MultiPoly h = MultiPoly::monomial(s, e);
    PolyForm w(s, n, q);
    for (const auto& idx : index_tuples(n, q)) {
      if (!r.coin(0.7)) continue;
      Exponent f = e;
      for (int i : idx) --f[i];
      w.add_term(idx, MultiPoly::monomial(s, f, Scalar(r.nonzero_rational())));
    }
    if (w.is_zero() || !is_distribution(w)) continue;
    LogNormalForm l = logarithmic_normal_form(w);
    CHECK(l.k >= q);
    CHECK(is_integrable(w));
    ++checked;
  }
  CHECK(checked > 10);
}
