#include <algorithm>
#include <map>
#include <numeric>

#include "folichar/error.hpp"
#include "folichar/foliation.hpp"
#include "folichar/linalg.hpp"

namespace folichar {

namespace {

// Exponents in n variables of total degree <= d, lex-descending (x1 > x2 > ...).
std::vector<Exponent> monomials_upto(int n, int d, int total_size) {
  std::vector<Exponent> out;
  Exponent e(total_size, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n) {
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// Split a polynomial in (x, unknowns) by its x-exponent.
std::map<Exponent, MultiPoly> by_x_monomial(const MultiPoly& f, int n, const SpacePtr& unknowns) {
  std::map<Exponent, MultiPoly> out;
  int m = unknowns->size();
  for (const auto& [e, c] : f.terms()) {
    Exponent xe(e.begin(), e.begin() + n);
    Exponent ue(e.begin() + n, e.begin() + n + m);
    auto it = out.try_emplace(xe, MultiPoly(unknowns)).first;
    it->second.add_term(ue, c);
  }
  return out;
}

}  // namespace

std::vector<DarbouxPolynomial> darboux_search(const VectorField& field, int max_deg_g,
                                              int max_deg_cofactor, const FieldPtr& extra_field,
                                              Budget* budget) {
  if (max_deg_g < 1) return {};
  PolyVectorField xi = make_foliation_field(field);
  const SpacePtr& s = xi.space;
  int n = xi.dim();
  int deg_xi = 0;
  for (const auto& c : xi.components) deg_xi = std::max(deg_xi, c.total_degree());
  int deg_c = std::max(0, std::min(max_deg_cofactor, deg_xi - 1));
  FieldPtr working = common_field(extra_field, coefficient_field(xi.components));

  std::vector<Exponent> gmons = monomials_upto(n, max_deg_g, n);  // lex-descending
  std::vector<Exponent> cmons = monomials_upto(n, deg_c, n);

  // Cofactors: for each choice of lex-leading monomial m of g, normalize
  // u_m = 1, drop lex-higher monomials and eliminate the remaining u's.
  std::vector<std::vector<Scalar>> cofactors;
  std::vector<std::string> cnames;
  for (size_t k = 0; k < cmons.size(); ++k) cnames.push_back("c_" + std::to_string(k));
  for (size_t lead = 0; lead < gmons.size(); ++lead) {
    if (total_degree(gmons[lead]) == 0) continue;
    std::vector<std::string> names;
    for (size_t j = lead + 1; j < gmons.size(); ++j) names.push_back("u_" + std::to_string(j));
    names.insert(names.end(), cnames.begin(), cnames.end());
    SpacePtr unknowns = VarSpace::plain(names);
    SpacePtr big = std::make_shared<VarSpace>(s->x_vars(), std::vector<std::string>{}, names);
    int nu = static_cast<int>(gmons.size() - lead - 1);

    MultiPoly g = MultiPoly::monomial(big, [&] {
      Exponent e(big->size(), 0);
      std::copy(gmons[lead].begin(), gmons[lead].end(), e.begin());
      return e;
    }());
    for (int j = 0; j < nu; ++j) {
      Exponent e(big->size(), 0);
      std::copy(gmons[lead + 1 + j].begin(), gmons[lead + 1 + j].end(), e.begin());
      e[n + j] = 1;
      g.add_term(e, Scalar(1));
    }
    MultiPoly c(big);
    for (size_t k = 0; k < cmons.size(); ++k) {
      Exponent e(big->size(), 0);
      std::copy(cmons[k].begin(), cmons[k].end(), e.begin());
      e[n + nu + static_cast<int>(k)] = 1;
      c.add_term(e, Scalar(1));
    }
    VectorField d{big, {}};
    for (const auto& a : xi.components) d.components.push_back(a.rebase(big));
    MultiPoly eq = d.apply(g) - c * g;
    std::vector<MultiPoly> eqs;
    for (auto& [xe, p] : by_x_monomial(eq, n, unknowns))
      if (!p.is_zero()) eqs.push_back(p);
    if (eqs.empty()) continue;
    Ideal system(unknowns, eqs);
    Ideal gb = groebner(system, MonomialOrder::grevlex(), budget);
    if (gb.is_unit()) continue;
    std::vector<int> cvars(cmons.size());
    std::iota(cvars.begin(), cvars.end(), nu);
    Ideal elim = eliminate(gb, cvars, budget);
    if (elim.generators().empty())
      raise(ErrorKind::NotZeroDimensional, "cofactor set is not finite at this degree bound");
    for (auto& pt : field_points(elim, cvars, working, budget))
      if (std::find(cofactors.begin(), cofactors.end(), pt) == cofactors.end())
        cofactors.push_back(std::move(pt));
  }

  // Eigenspace of each cofactor by exact linear algebra.
  std::vector<DarbouxPolynomial> out;
  for (const auto& cv : cofactors) {
    MultiPoly c(s);
    for (size_t k = 0; k < cmons.size(); ++k) {
      Exponent e(s->size(), 0);
      std::copy(cmons[k].begin(), cmons[k].end(), e.begin());
      c.add_term(e, cv[k]);
    }
    std::vector<MultiPoly> images;
    std::map<Exponent, int> rows;
    for (const auto& m : gmons) {
      Exponent e(s->size(), 0);
      std::copy(m.begin(), m.end(), e.begin());
      MultiPoly mono = MultiPoly::monomial(s, e);
      images.push_back(xi.apply(mono) - c * mono);
      for (const auto& [te, tc] : images.back().terms()) rows.try_emplace(te, 0);
    }
    int r = 0;
    for (auto& [e, idx] : rows) idx = r++;
    ScalarMatrix m(std::max(r, 1), static_cast<int>(gmons.size()), Scalar());
    for (size_t j = 0; j < images.size(); ++j)
      for (const auto& [te, tc] : images[j].terms()) m(rows[te], static_cast<int>(j)) = tc;
    auto basis = kernel(m);
    // modulo constants
    int constant_col = static_cast<int>(gmons.size()) - 1;
    std::vector<std::vector<Scalar>> vecs;
    for (auto& v : basis) {
      v[constant_col] = Scalar();
      if (std::any_of(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); }))
        vecs.push_back(std::move(v));
    }
    if (vecs.empty()) continue;
    ScalarMatrix ech(static_cast<int>(vecs.size()), static_cast<int>(gmons.size()), Scalar());
    for (size_t i = 0; i < vecs.size(); ++i)
      for (size_t j = 0; j < gmons.size(); ++j) ech(static_cast<int>(i), static_cast<int>(j)) = vecs[i][j];
    auto piv = rref(ech);
    for (size_t i = 0; i < piv.size(); ++i) {
      MultiPoly g(s);
      for (size_t j = 0; j < gmons.size(); ++j) {
        Exponent e(s->size(), 0);
        std::copy(gmons[j].begin(), gmons[j].end(), e.begin());
        g.add_term(e, ech(static_cast<int>(i), static_cast<int>(j)));
      }
      if (g.is_constant()) continue;
      out.push_back({g, c});
    }
  }
  auto lex_lead = [&](const MultiPoly& p) {
    Exponent best;
    for (const auto& [e, c] : p.terms())
      if (best.empty() || e > best) best = e;
    return best;
  };
  std::sort(out.begin(), out.end(), [&](const DarbouxPolynomial& a, const DarbouxPolynomial& b) {
    Exponent la = lex_lead(a.g), lb = lex_lead(b.g);
    if (la != lb) return la > lb;
    return a.cofactor.to_string() < b.cofactor.to_string();
  });
  return out;
}

}  // namespace folichar
