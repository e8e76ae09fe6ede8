#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folichar/foliation.hpp"

namespace folichar {

// Normally ordered element of the Weyl algebra A_n: a sum of
// c * x^a d^b with all x's to the left.
class WeylOperator {
 public:
  using Key = std::pair<Exponent, Exponent>;  // (x-exponent, d-exponent)

  WeylOperator() = default;
  explicit WeylOperator(int n) : n_(n) {}

  static WeylOperator constant(int n, const Scalar& c);
  static WeylOperator x(int n, int i);
  static WeylOperator d(int n, int i);
  // xi + f, i.e. sum a_i d_i + f for polynomials on the x-block of their space.
  static WeylOperator from_field(const VectorField& xi, const MultiPoly& f);

  int n() const { return n_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& xe, const Exponent& de, const Scalar& c);

  WeylOperator operator-() const;
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend WeylOperator operator*(const Scalar& s, const WeylOperator& a);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Terms in descending Bernstein degree, e.g. "x1*d1^2 + 2*d1".
  std::string to_string(const std::vector<std::string>& x_names = {}) const;

 private:
  int n_ = 0;
  std::map<Key, Scalar> terms_;
};

// Normally ordered product; raises SizeMismatch for different n.
WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b);

struct Symbol {
  int degree = 0;
  MultiPoly symbol;  // in the doubled space, d_i -> y_i
};

// Top Bernstein-degree part. Raises ZeroOperator.
Symbol bernstein_symbol(const WeylOperator& d, const SpacePtr& doubled = nullptr);
// Top order part. Raises ZeroOperator.
Symbol principal_symbol(const WeylOperator& d, const SpacePtr& doubled = nullptr);

struct PrincipalCharVariety {
  Ideal ideal;  // (principal symbol)
  int order = 0;
  // For an order-one operator xi + f: the vector field xi and whether the
  // ideal equals (characteristic_polynomial(xi)).
  bool first_order = false;
  std::optional<PolyVectorField> field;
  bool matches_foliation = false;
  std::string statement;
};

PrincipalCharVariety charvariety_of_principal_ideal(const WeylOperator& d,
                                                    const SpacePtr& doubled = nullptr);

}  // namespace folichar
