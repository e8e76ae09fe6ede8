#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folichar/poly.hpp"

namespace folichar {

using IndexTuple = std::vector<int>;  // strictly increasing, 0-based

// Polynomial vector field acting on the first components.size() variables of
// its space (x-block for foliations, x- and y-blocks for prolongations).
struct VectorField {
  SpacePtr space;
  std::vector<MultiPoly> components;

  int dim() const { return static_cast<int>(components.size()); }
  // The derivation sum a_i d/dz_i applied to f.
  MultiPoly apply(const MultiPoly& f) const;
  bool is_zero() const;
  std::string to_string(const std::string& prefix = "d") const;
  bool operator==(const VectorField& o) const;
};

// Polynomial q-form in the differentials dz_1..dz_m of the first m variables
// of its space. Coefficients may involve any variable of the space.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(SpacePtr space, int m, int degree) : space_(std::move(space)), m_(m), q_(degree) {}

  // dz_i
  static PolyForm differential(SpacePtr space, int m, int i);
  static PolyForm function(const MultiPoly& f, int m);  // 0-form
  // Exterior derivative of a 0-form.
  static PolyForm exact(const MultiPoly& f, int m);

  const SpacePtr& space() const { return space_; }
  int dim() const { return m_; }
  int degree() const { return q_; }
  const std::map<IndexTuple, MultiPoly>& coeffs() const { return coeffs_; }
  MultiPoly coefficient(const IndexTuple& idx) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const IndexTuple& idx, const MultiPoly& c);

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const MultiPoly& f, const PolyForm& w);
  friend bool operator==(const PolyForm& a, const PolyForm& b);

  std::string to_string() const;

 private:
  SpacePtr space_;
  int m_ = 0;
  int q_ = 0;
  std::map<IndexTuple, MultiPoly> coeffs_;
};

// Wedge; a result of degree beyond dim() is the zero form.
PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& w);
// i_{d_{j1} ^ ... ^ d_{jr}} w, contracting j1 first. Raises DegreeOverflow
// when r exceeds the form degree.
PolyForm contract(const PolyForm& w, const IndexTuple& multivector);
PolyForm contract(const PolyForm& w, const VectorField& v);
// Cartan: L_v = d i_v + i_v d.
PolyForm lie_derivative(const VectorField& v, const PolyForm& w);

// All strictly increasing tuples of length k from {0..n-1}.
std::vector<IndexTuple> index_tuples(int n, int k);

bool is_distribution(const PolyForm& w);
bool is_integrable(const PolyForm& w);
// All 2x2 coefficient minors vanish (a = g b for a rational function g).
bool proportional_forms(const PolyForm& a, const PolyForm& b);
bool is_infinitesimal_automorphism(const VectorField& v, const PolyForm& w);
// Pullback by z_i -> t_i z_i, proportional to w over the extended space.
bool is_torus_invariant_form(const PolyForm& w);

struct LogNormalForm {
  MultiPoly h;                              // common factor c_I * z_I / lambda_I
  std::map<IndexTuple, Scalar> lambdas;     // every increasing tuple of size q
  std::vector<int> support;                 // union of tuples with lambda != 0
  int k = 0;                                // support size
  std::vector<int> invariant_hyperplanes;   // {z_i = 0 : i in support}
  // Present when k > q and q <= dim - 2: q + 1 support indices whose
  // coordinate hyperplanes meet in a positive-dimensional singular subspace.
  std::optional<std::vector<int>> singular_subspace;
  int singular_subspace_dimension = 0;
  bool singular_subspace_verified = false;  // every coefficient vanishes on it
};

// w = h * sum_I lambda_I dz_I / z_I with h = c_I z_I / lambda_I polynomial.
// Raises NotTorusInvariant or NotLogarithmic.
LogNormalForm logarithmic_normal_form(const PolyForm& w);

// Discriminant of the binary form sum_j a_j u^{k-j} v^j: the sign-normalized
// resultant (-1)^{k(k-1)/2} Res(f, df/du) / a_0, computed for generic symbolic
// coefficients and then specialized.
MultiPoly binary_discriminant(const std::vector<MultiPoly>& coeffs);

}  // namespace folichar
