#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "folichar/poly.hpp"

namespace folichar {

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  // Variables flagged true form the first block and dominate; each block is
  // compared by grevlex.
  static MonomialOrder block(std::vector<bool> first_block) {
    return MonomialOrder(Kind::Block, std::move(first_block));
  }

  Kind kind() const { return kind_; }
  const std::vector<bool>& first_block() const { return first_; }
  int compare(const Exponent& a, const Exponent& b) const;
  std::string name() const;

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && first_ == o.first_; }

 private:
  MonomialOrder(Kind k, std::vector<bool> first) : kind_(k), first_(std::move(first)) {}
  Kind kind_;
  std::vector<bool> first_;
};

// Reduction-step budget for Buchberger and normal forms. The default is read
// from FOLICHAR_BUDGET when set, else one million steps.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = default_limit()) : limit_(limit) {}
  static std::uint64_t default_limit();
  static void set_default_limit(std::uint64_t limit);

  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(SpacePtr space, std::vector<MultiPoly> generators);

  const SpacePtr& space() const { return space_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  bool has_basis() const { return basis_.has_value(); }
  // Reduced Groebner basis; only valid when has_basis().
  const std::vector<MultiPoly>& basis() const { return *basis_; }
  const MonomialOrder& order() const { return *order_; }

  // True when the cached basis is {1}.
  bool is_unit() const;

 private:
  friend Ideal groebner(const Ideal&, const MonomialOrder&, Budget*);
  SpacePtr space_;
  std::vector<MultiPoly> generators_;
  std::optional<std::vector<MultiPoly>> basis_;
  std::optional<MonomialOrder> order_;
};

// Reduced Groebner basis by Buchberger's algorithm with Gebauer-Moeller pair
// pruning. Basis elements are monic and sorted by ascending leading monomial.
Ideal groebner(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
               Budget* budget = nullptr);

// Leading exponent of f under the order.
Exponent leading_exponent(const MultiPoly& f, const MonomialOrder& order);

// Remainder of f by the cached basis (computed with grevlex when absent).
MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal, Budget* budget = nullptr);
// Remainder of multivariate division by an arbitrary list of divisors.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> divisors,
                 const MonomialOrder& order, Budget* budget = nullptr);
bool contains(const Ideal& ideal, const MultiPoly& f, Budget* budget = nullptr);

// f vanishes on V(I): 1 in I + (1 - w f) with a fresh variable w.
bool radical_membership(const MultiPoly& f, const Ideal& ideal, Budget* budget = nullptr);

// I intersected with the subring of the kept variables (indices into the
// ideal's space). The result stays in the same space.
Ideal eliminate(const Ideal& ideal, std::span<const int> keep, Budget* budget = nullptr);

struct DimZeroResult {
  bool is_dim_zero = false;
  std::optional<long> vecdim;  // number of standard monomials
};
DimZeroResult krull_dim_zero_check(const Ideal& ideal, std::span<const int> vars = {},
                                   Budget* budget = nullptr);
// Standard monomials of a zero-dimensional basis (in the given variables).
std::vector<Exponent> standard_monomials(const Ideal& with_basis, std::span<const int> vars);

// Monomial summands of f.
std::vector<MultiPoly> multigrade_decompose(const MultiPoly& f);

// Polynomial gcd via the principal intersection (f) cap (g).
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g, Budget* budget = nullptr);

// Points with coordinates in the coefficient field of a zero-dimensional
// system in the listed variables (other variables must not occur). When the
// ideal is not zero-dimensional, raises NotZeroDimensional.
std::vector<std::vector<Scalar>> field_points(const Ideal& ideal, std::span<const int> vars,
                                              const FieldPtr& field, Budget* budget = nullptr);

}  // namespace folichar
