#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folichar/exterior.hpp"
#include "folichar/groebner.hpp"

namespace folichar {

// A vector field sum a_i d/dx_i whose coefficients depend on the x-block only.
// It lives in a doubled space (x, y) so that it can be compared with its
// characteristic polynomial and prolongation.
using PolyVectorField = VectorField;

// Validates a foliation representative: n components in the x-block, not all
// zero, coefficients free of y and auxiliary variables. Returns the field
// moved into a doubled space (y-block created when missing).
PolyVectorField make_foliation_field(const VectorField& field);

struct CharVariety {
  MultiPoly polynomial;  // sum a_i y_i
  PolyVectorField source;
};

// The prolongation: x-components a_i, y-components linear in y.
struct ProlongedField {
  SpacePtr space;
  std::vector<MultiPoly> x_components;
  std::vector<MultiPoly> y_components;

  VectorField as_field() const;
  bool operator==(const ProlongedField& o) const;
};

CharVariety characteristic_polynomial(const PolyVectorField& xi);
// xi_F = sum dF/dy_i d/dx_i - sum dF/dx_i d/dy_i, so dF = Omega(xi_F, .) for
// Omega = sum dx_i ^ dy_i. Raises ConstantFunction.
ProlongedField hamiltonian(const MultiPoly& f);
// xi_hat = sum a_i d/dx_i - sum_{i,j} (d a_i / d x_j) y_i d/dy_j.
ProlongedField prolong(const PolyVectorField& xi);
// Omega = sum dx_i ^ dy_i on the doubled space.
PolyForm symplectic_form(const SpacePtr& doubled);

// One re-checkable membership claim.
struct CertificateEntry {
  enum class Method { NormalForm, Radical };
  std::string claim;
  MultiPoly poly;
  Ideal ideal;
  Method method = Method::NormalForm;
  MultiPoly remainder;  // NormalForm only
  bool holds = false;
};

using Certificate = std::vector<CertificateEntry>;

CertificateEntry normal_form_entry(std::string claim, const MultiPoly& f, const Ideal& ideal,
                                   Budget* budget = nullptr);
CertificateEntry radical_entry(std::string claim, const MultiPoly& f, const Ideal& ideal,
                               Budget* budget = nullptr);
// Recomputes every entry from scratch.
bool reverify(const Certificate& certificate, Budget* budget = nullptr);

struct SingularScheme {
  Ideal ideal;  // (a_1, ..., a_n) in the x-only space
  bool isolated = false;
  bool reduced = false;
  std::optional<long> vecdim;           // length of the scheme when isolated
  std::optional<long> distinct_points;  // number of points over C when isolated
  MultiPoly divisorial_part;            // gcd of the components (monic)
  bool has_divisorial_part = false;
  std::vector<std::vector<Scalar>> points;  // points over the working field
};

SingularScheme singular_scheme(const PolyVectorField& xi, const FieldPtr& field = nullptr,
                               Budget* budget = nullptr);

struct ChSingularLocus {
  Ideal jacobian;  // (P, dP/dx_i, dP/dy_i)
  bool smooth_away_from_zero_section = false;
  // The sufficient criterion: singular scheme reduced and zero-dimensional.
  bool reduced_isolated_criterion = false;
  Certificate certificate;  // y_i in rad(jacobian) claims
};

ChSingularLocus ch_singular_locus(const PolyVectorField& xi, Budget* budget = nullptr);

struct InvarianceResult {
  bool invariant = false;
  Certificate certificate;  // derivation(g) mod J for each basis element g
};

// Derivation-stability of J. Raises EmptyVariety for the unit ideal.
InvarianceResult is_invariant(const VectorField& field, const Ideal& ideal, Budget* budget = nullptr);

enum class SubvarietyTag {
  ZeroSection,
  FiberOverSingularPoint,
  WholeCharVariety,
  EmptyVariety,
  NotContained,
  NotInvariant,
  NotYHomogeneous,
  QuasiMinimalityViolation,
};

std::string to_string(SubvarietyTag tag);

struct SubvarietyClassification {
  SubvarietyTag tag = SubvarietyTag::EmptyVariety;
  std::optional<std::vector<Scalar>> point;  // FiberOverSingularPoint
  Certificate certificate;
  std::vector<std::string> notes;
};

SubvarietyClassification classify_ch_subvariety(const PolyVectorField& xi, const Ideal& ideal,
                                                const FieldPtr& field = nullptr,
                                                Budget* budget = nullptr);

struct DarbouxPolynomial {
  MultiPoly g;         // monic in its lex-leading monomial
  MultiPoly cofactor;  // field(g) = cofactor * g
};

// Darboux polynomials of degree <= max_deg_g with cofactor degree
// <= min(max_deg_cofactor, deg field - 1). For each cofactor the result is the
// reduced echelon basis (lex) of its eigenspace modulo constants.
std::vector<DarbouxPolynomial> darboux_search(const VectorField& field, int max_deg_g,
                                              int max_deg_cofactor, const FieldPtr& extra_field = nullptr,
                                              Budget* budget = nullptr);

struct HyperplaneAtInfinity {
  bool invariant = false;
  int affine_degree = 0;
  int projective_degree = 0;
  std::optional<MultiPoly> radial_factor;  // g with top part = g * radial field
};

HyperplaneAtInfinity hyperplane_at_infinity(const PolyVectorField& xi);

}  // namespace folichar
