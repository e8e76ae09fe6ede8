#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folichar/scalar.hpp"

namespace folichar {

// Ordered variable names: the x-block, the (possibly empty) y-block of fiber
// coordinates and auxiliary variables such as Rabinowitsch or scaling
// parameters.
class VarSpace {
 public:
  VarSpace(std::vector<std::string> x_vars, std::vector<std::string> y_vars = {},
           std::vector<std::string> aux_vars = {});

  // x1..xn, y1..yn.
  static std::shared_ptr<const VarSpace> doubled(int n);
  static std::shared_ptr<const VarSpace> plain(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  int x_count() const { return static_cast<int>(x_.size()); }
  int y_count() const { return static_cast<int>(y_.size()); }
  int aux_count() const { return static_cast<int>(aux_.size()); }
  int x_index(int i) const { return i; }
  int y_index(int i) const { return x_count() + i; }
  int aux_index(int i) const { return x_count() + y_count() + i; }

  const std::vector<std::string>& x_vars() const { return x_; }
  const std::vector<std::string>& y_vars() const { return y_; }
  const std::vector<std::string>& aux_vars() const { return aux_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  std::optional<int> index_of(const std::string& name) const;

  // Same x/y blocks plus extra auxiliary variables (names made unique).
  std::shared_ptr<const VarSpace> with_aux(const std::vector<std::string>& extra) const;
  // The x-block alone.
  std::shared_ptr<const VarSpace> x_only() const;

  bool operator==(const VarSpace& o) const { return names_ == o.names_ && x_ == o.x_ && y_ == o.y_; }

 private:
  std::vector<std::string> x_, y_, aux_, names_;
};

using SpacePtr = std::shared_ptr<const VarSpace>;

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b);

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);

// Graded reverse lexicographic comparison (x1 > x2 > ...): -1, 0, 1.
int grevlex_compare(const Exponent& a, const Exponent& b);

struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

// Sparse polynomial over Scalar. Terms are kept in descending grevlex order
// with no zero coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrevlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(SpacePtr space) : space_(std::move(space)) {}
  MultiPoly(SpacePtr space, const Scalar& c);

  static MultiPoly variable(SpacePtr space, int index);
  static MultiPoly monomial(SpacePtr space, Exponent e, const Scalar& c = Scalar(1));

  const SpacePtr& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponent& e) const;
  // Leading term in grevlex.
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  // Degree in the given subset of variables.
  int degree_in(std::span<const int> vars) const;
  bool uses_variable(int var) const;
  // Indices of variables with a nonzero exponent somewhere.
  std::vector<int> support() const;

  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;
  MultiPoly partial(int var) const;
  // Multiply by a monomial.
  MultiPoly shift(const Exponent& e, const Scalar& c) const;

  // Homogeneous component of total degree d (optionally in a variable subset).
  MultiPoly homogeneous_part(int d) const;
  MultiPoly homogeneous_part(int d, std::span<const int> vars) const;

  // Substitute variable i by images[i] (all in one target space).
  MultiPoly compose(std::span<const MultiPoly> images) const;
  // Substitute a single variable by a polynomial of the same space.
  MultiPoly substitute(int var, const MultiPoly& value) const;
  // Move into another space, matching variables by name.
  MultiPoly rebase(const SpacePtr& target) const;

  // Scale so the grevlex-leading coefficient is one.
  MultiPoly monic() const;

  std::string to_string() const;

 private:
  SpacePtr space_;
  TermMap terms_;
};

// Exact quotient; raises InexactDivision when g does not divide f.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

// Common field of all coefficients.
FieldPtr coefficient_field(std::span<const MultiPoly> polys);

}  // namespace folichar
