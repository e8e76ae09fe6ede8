#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folichar/foliation.hpp"
#include "folichar/linalg.hpp"

namespace folichar {

// Value of f at a point given for the first pt.size() variables of its space.
Scalar evaluate(const MultiPoly& f, const std::vector<Scalar>& pt);

struct EigenData {
  std::vector<Scalar> point;
  ScalarMatrix jacobian;          // D xi(p), row i = gradient of a_i
  std::vector<Scalar> char_poly;  // det(t I - D xi(p)), low degree first
  FieldPtr field;                 // working field of the computation
  // Roots in the working field, repeated by multiplicity. Diagonal linear
  // parts keep the diagonal order; otherwise roots are sorted descending.
  std::vector<Scalar> eigenvalues;
  // Eigenspace bases, one entry per distinct eigenvalue (first occurrence order).
  std::vector<std::pair<Scalar, std::vector<std::vector<Scalar>>>> eigenvectors;
  // Factor of char_poly without roots in the working field (constant 1 when resolved).
  std::vector<Scalar> residual_factor;
  bool resolved = true;
  bool invertible = false;
};

// Raises NotASingularPoint when some component does not vanish at p.
EigenData jacobian_eigendata(const PolyVectorField& xi, const std::vector<Scalar>& p,
                             const FieldPtr& field = nullptr, Budget* budget = nullptr);

struct NonresonanceReport {
  bool nonresonant = false;
  bool invertible = false;
  int zrank = 0;
  int n = 0;
};

// Raises UnresolvedFactor.
NonresonanceReport is_nonresonant(const EigenData& data);

struct HolonomyEigenvalue {
  int index = 0;       // j (0-based)
  Scalar ratio;        // lambda_j / lambda_i
  std::string symbolic;  // exp(2*pi*I*(ratio))
  bool root_of_unity = false;
  std::optional<Integer> order;  // denominator of a rational ratio
};

struct HolonomySpectrum {
  int separatrix = 0;  // i (0-based)
  std::vector<HolonomyEigenvalue> eigenvalues;
  bool maximal_torus = false;
};

// Raises ZeroEigenvalue or UnresolvedFactor.
HolonomySpectrum holonomy_spectrum(const EigenData& data, int separatrix);

using PolyMatrix = Matrix<MultiPoly>;

// A_{ij} = d xi_j / d x_i restricted to the axis leaf {x_l = 0, l != axis},
// for i, j != axis in increasing order. Raises LeafNotInvariant.
PolyMatrix bott_connection(const PolyVectorField& xi, int axis = 0);

struct DualityCheck {
  PolyMatrix a;  // Bott connection
  PolyMatrix b;  // y-linear part of the prolongation on the leaf
  bool holds = false;  // b == -a^T
};

DualityCheck verify_prolongation_duality(const PolyVectorField& xi, int axis = 0);

// The field M^{-1} xi(M u + b) in the same variables.
PolyVectorField affine_change(const PolyVectorField& xi, const ScalarMatrix& m,
                              const std::vector<Scalar>& b);

struct CoordinateSubspaces {
  bool torus_invariant = false;
  std::vector<int> vars;                   // variables the torus acts on
  std::vector<MultiPoly> monomial_generators;
  std::vector<std::vector<int>> components;  // {z_v = 0 : v in S} for each minimal cover S
  std::vector<int> dimensions;
  bool equal_dimension = false;
  Certificate certificate;
};

CoordinateSubspaces coordinate_subspace_decomposition(const Ideal& ideal, Budget* budget = nullptr);

}  // namespace folichar
