#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace folichar;
using fct::Rng;

namespace {

qpoly::Poly P(std::initializer_list<long> low_first) {
  qpoly::Poly p;
  for (long c : low_first) p.push_back(Rational(c));
  return p;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

Scalar random_element(const FieldPtr& k, Rng& r) {
  std::vector<Rational> c;
  for (int i = 0; i < k->degree(); ++i) c.push_back(r.rational());
  return Scalar::from_coords(k, c);
}

}  // namespace

TEST_CASE("number field screen") {
  FieldPtr k = make_number_field("a", P({-2, 0, 1}));
  CHECK(k->degree() == 2);
  CHECK(kind_of([] { make_number_field("a", P({-1, 0, 1})); }) == ErrorKind::RationalRootFound);
  CHECK(kind_of([] { make_number_field("a", P({1, 2, 1})); }) == ErrorKind::NotSquarefree);
  CHECK(kind_of([] { make_number_field("a", P({-2, 0, 0, 0, 0, 1})); }) ==
        ErrorKind::IrreducibilityUnverified);
  CHECK(make_number_field("a", P({-2, 0, 0, 0, 0, 1}), true)->degree() == 5);
  CHECK(make_number_field("a", P({-2, 0, 0, 1}))->degree() == 3);
}

TEST_CASE("t^4 + 4 is reducible; factors checked by quadratic-pair oracle") {
  // (t^2 + b t + c)(t^2 + d t + e) = t^4 + 4 over Z: b + d = 0, c + e + bd = 0, be + cd = 0, ce = 4
  std::vector<std::pair<qpoly::Poly, qpoly::Poly>> found;
  for (long c : {-4, -2, -1, 1, 2, 4})
    for (long b = -4; b <= 4; ++b) {
      long e = 4 / c, d = -b;
      if (c + e + b * d == 0 && b * e + c * d == 0) found.push_back({P({c, b, 1}), P({e, d, 1})});
    }
  REQUIRE(!found.empty());
  CHECK(qpoly::mul(found[0].first, found[0].second) == P({4, 0, 0, 0, 1}));
  try {
    make_number_field("a", P({4, 0, 0, 0, 1}));
    FAIL("accepted a reducible polynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleDetected);
    std::string msg = e.what();
    CHECK(msg.find("t^2 + 2*t + 2") != std::string::npos);
    CHECK(msg.find("t^2 - 2*t + 2") != std::string::npos);
  }
  CHECK_NOTHROW(make_number_field("a", P({1, 0, 0, 0, 1})));  // t^4 + 1
  CHECK_NOTHROW(make_number_field("a", P({2, 0, 0, 0, 1})));  // t^4 + 2, Eisenstein
}

TEST_CASE("arithmetic in Q(sqrt 2)") {
  FieldPtr k = make_number_field("a", P({-2, 0, 1}));
  Scalar a = Scalar::generator(k);
  CHECK(a * a == Scalar(2));
  CHECK((a * a).is_rational());
  Scalar inv = (Scalar(1) + a).inverse();
  CHECK(inv == a - Scalar(1));
  CHECK(inv.to_string() == "a - 1");
  CHECK(Scalar(1) + Scalar(0) == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("zrank") {
  FieldPtr k = make_number_field("a", P({-2, 0, 1}));
  Scalar a = Scalar::generator(k);
  std::vector<Scalar> s12{Scalar(1), Scalar(2)};
  CHECK(zrank(s12) == 1);
  std::vector<Scalar> s1a{Scalar(1), a};
  CHECK(zrank(s1a) == 2);
  std::vector<Scalar> sa2a{a, Scalar(2) * a};
  CHECK(zrank(sa2a) == 1);
  CHECK(zrank(std::vector<Scalar>{}) == 0);
}

TEST_CASE("field axioms on random elements") {
  Rng r(fct::seed());
  for (const auto& mp : {P({-2, 0, 1}), P({-2, 0, 0, 1}), P({1, 0, 0, 0, 1}), P({1, 1, 1})}) {
    FieldPtr k = make_number_field("a", mp);
    for (int t = 0; t < 40; ++t) {
      Scalar x = random_element(k, r), y = random_element(k, r), z = random_element(k, r);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    }
  }
}

TEST_CASE("zrank invariances") {
  Rng r(fct::seed() + 1);
  FieldPtr k = make_number_field("a", P({-2, 0, 0, 1}));
  for (int t = 0; t < 30; ++t) {
    std::vector<Scalar> s;
    int m = r.uniform(0, 4);
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> c{Rational(r.uniform(-2, 2)), Rational(r.uniform(-1, 1)), Rational(0)};
      s.push_back(Scalar::from_coords(k, c));
    }
    int base = zrank(s);
    auto perm = s;
    std::shuffle(perm.begin(), perm.end(), r.engine());
    CHECK(zrank(perm) == base);
    Scalar q(r.nonzero_rational());
    auto scaled = s;
    for (auto& v : scaled) v = v * q;
    CHECK(zrank(scaled) == base);
    auto with0 = s;
    with0.push_back(Scalar(0));
    CHECK(zrank(with0) == base);
  }
}
