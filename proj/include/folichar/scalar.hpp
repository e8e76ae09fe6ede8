#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "folichar/qpoly.hpp"

namespace folichar {

// A simple extension Q(a) = Q[t]/(m(t)) with m monic and screened for
// irreducibility (see make_number_field).
class NumberField {
 public:
  const std::string& name() const { return name_; }
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  // Monic minimal polynomial, low degree first.
  const qpoly::Poly& min_poly() const { return min_poly_; }
  // Coordinates of a^k in the power basis, for 0 <= k <= 2d - 2.
  const std::vector<Rational>& power(int k) const { return powers_[k]; }

  bool same_as(const NumberField& other) const {
    return name_ == other.name_ && min_poly_ == other.min_poly_;
  }

 private:
  friend std::shared_ptr<const NumberField> make_number_field(
      std::string, qpoly::Poly, bool);
  NumberField(std::string name, qpoly::Poly min_poly);

  std::string name_;
  qpoly::Poly min_poly_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Validates and builds Q(a). Raises NotSquarefree, RationalRootFound,
// ReducibleDetected (exhaustive monic factor search up to degree 4) or
// IrreducibilityUnverified (degree >= 5 without attestation). A degree-one
// minimal polynomial yields a field of degree 1, whose elements are rationals.
FieldPtr make_number_field(std::string name, qpoly::Poly min_poly,
                           bool assume_irreducible = false);

// Exact element of Q or of a number field. Rational values never carry a
// field, so arithmetic between Q and Q(a) needs no explicit promotion; two
// irrational values from different fields raise FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  static Scalar generator(const FieldPtr& field);
  static Scalar from_coords(const FieldPtr& field, std::span<const Rational> coords);

  bool is_zero() const { return field_ == nullptr && q_ == 0; }
  bool is_one() const { return field_ == nullptr && q_ == 1; }
  bool is_rational() const { return field_ == nullptr; }
  const Rational& rational() const { return q_; }
  const FieldPtr& field() const { return field_; }
  // Power-basis coordinates padded to the given degree.
  std::vector<Rational> coords(int degree) const;
  int nonzero_coords() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Total order used only for deterministic output.
  friend bool operator<(const Scalar& a, const Scalar& b);

  // "3", "-1/2", "a", "2*a - 1", "a^2 + 1/3".
  std::string to_string() const;
  // True when to_string() needs parentheses as a coefficient.
  bool needs_parens() const;

 private:
  void normalize();

  Rational q_;
  FieldPtr field_;
  std::vector<Rational> ext_;  // coordinates of a, a^2, ..., a^{d-1}
};

// Common field of a collection (nullptr when everything is rational).
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

// Rank of the Z-module generated by the elements: the Q-rank of their
// power-basis coordinate vectors.
int zrank(std::span<const Scalar> elements);

}  // namespace folichar
