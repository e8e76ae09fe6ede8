#include "folichar/weyl.hpp"

#include "folichar/error.hpp"

namespace folichar {

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Exponent unit(int n, int i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}

SpacePtr symbol_space(int n, const SpacePtr& doubled) {
  if (!doubled) return VarSpace::doubled(n);
  if (doubled->x_count() != n || doubled->y_count() != n)
    raise(ErrorKind::SpaceMismatch, "symbol space must be doubled with n = " + std::to_string(n));
  return doubled;
}

MultiPoly symbol_term(const SpacePtr& s, const Exponent& xe, const Exponent& de, const Scalar& c) {
  Exponent e(s->size(), 0);
  int n = static_cast<int>(xe.size());
  for (int i = 0; i < n; ++i) {
    e[s->x_index(i)] = xe[i];
    e[s->y_index(i)] = de[i];
  }
  return MultiPoly::monomial(s, e, c);
}

}  // namespace

WeylOperator WeylOperator::constant(int n, const Scalar& c) {
  WeylOperator w(n);
  w.add_term(Exponent(n, 0), Exponent(n, 0), c);
  return w;
}

WeylOperator WeylOperator::x(int n, int i) {
  WeylOperator w(n);
  w.add_term(unit(n, i), Exponent(n, 0), Scalar(1));
  return w;
}

WeylOperator WeylOperator::d(int n, int i) {
  WeylOperator w(n);
  w.add_term(Exponent(n, 0), unit(n, i), Scalar(1));
  return w;
}

WeylOperator WeylOperator::from_field(const VectorField& xi, const MultiPoly& f) {
  int n = xi.dim();
  WeylOperator w(n);
  auto x_part = [&](const Exponent& e) {
    for (size_t v = n; v < e.size(); ++v)
      if (e[v] != 0) raise(ErrorKind::NotAVectorField, "coefficients must depend on the x-block only");
    return Exponent(e.begin(), e.begin() + n);
  };
  for (int i = 0; i < n; ++i)
    for (const auto& [e, c] : xi.components[i].terms()) w.add_term(x_part(e), unit(n, i), c);
  for (const auto& [e, c] : f.terms()) w.add_term(x_part(e), Exponent(n, 0), c);
  return w;
}

void WeylOperator::add_term(const Exponent& xe, const Exponent& de, const Scalar& c) {
  if (static_cast<int>(xe.size()) != n_ || static_cast<int>(de.size()) != n_)
    raise(ErrorKind::SizeMismatch, "exponent length differs from n");
  if (c.is_zero()) return;
  Key k{xe, de};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  if (o.n_ != n_) raise(ErrorKind::SizeMismatch, "Weyl operators with different n");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) { return *this += -o; }

WeylOperator operator*(const Scalar& s, const WeylOperator& a) {
  WeylOperator r(a.n());
  for (const auto& [k, c] : a.terms()) r.add_term(k.first, k.second, s * c);
  return r;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return weyl_mul(a, b); }

WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b) {
  if (a.n() != b.n()) raise(ErrorKind::SizeMismatch, "Weyl operators with different n");
  int n = a.n();
  WeylOperator out(n);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const Exponent& s = ka.second;  // d-exponent on the left
      const Exponent& r = kb.first;   // x-exponent on the right
      // d^s x^r = prod_i sum_k C(s_i,k) C(r_i,k) k! x_i^{r_i-k} d_i^{s_i-k}
      Exponent k(n, 0);
      auto rec = [&](auto&& self, int i, Rational coeff) -> void {
        if (i == n) {
          Exponent xe(n), de(n);
          for (int j = 0; j < n; ++j) {
            xe[j] = ka.first[j] + r[j] - k[j];
            de[j] = s[j] - k[j] + kb.second[j];
          }
          out.add_term(xe, de, ca * cb * Scalar(coeff));
          return;
        }
        int top = std::min(s[i], r[i]);
        for (int m = 0; m <= top; ++m) {
          k[i] = m;
          Integer f = binomial(s[i], m) * binomial(r[i], m) * factorial(m);
          self(self, i + 1, coeff * Rational(f));
        }
        k[i] = 0;
      };
      rec(rec, 0, Rational(1));
    }
  return out;
}

std::string WeylOperator::to_string(const std::vector<std::string>& x_names) const {
  std::vector<std::string> names;
  for (int i = 0; i < n_; ++i)
    names.push_back(i < static_cast<int>(x_names.size()) ? x_names[i] : "x" + std::to_string(i + 1));
  for (int i = 0; i < n_; ++i) {
    const std::string& x = names[i];
    names.push_back(!x.empty() && x[0] == 'x' ? "d" + x.substr(1) : "d_" + x);
  }
  SpacePtr s = VarSpace::plain(names);
  MultiPoly p(s);
  for (const auto& [k, c] : terms_) {
    Exponent e(k.first);
    e.insert(e.end(), k.second.begin(), k.second.end());
    p.add_term(e, c);
  }
  return p.to_string();
}

Symbol bernstein_symbol(const WeylOperator& d, const SpacePtr& doubled) {
  if (d.is_zero()) raise(ErrorKind::ZeroOperator, "symbol of the zero operator");
  SpacePtr s = symbol_space(d.n(), doubled);
  Symbol out;
  for (const auto& [k, c] : d.terms())
    out.degree = std::max(out.degree, total_degree(k.first) + total_degree(k.second));
  out.symbol = MultiPoly(s);
  for (const auto& [k, c] : d.terms())
    if (total_degree(k.first) + total_degree(k.second) == out.degree)
      out.symbol += symbol_term(s, k.first, k.second, c);
  return out;
}

Symbol principal_symbol(const WeylOperator& d, const SpacePtr& doubled) {
  if (d.is_zero()) raise(ErrorKind::ZeroOperator, "symbol of the zero operator");
  SpacePtr s = symbol_space(d.n(), doubled);
  Symbol out;
  for (const auto& [k, c] : d.terms()) out.degree = std::max(out.degree, total_degree(k.second));
  out.symbol = MultiPoly(s);
  for (const auto& [k, c] : d.terms())
    if (total_degree(k.second) == out.degree) out.symbol += symbol_term(s, k.first, k.second, c);
  return out;
}

PrincipalCharVariety charvariety_of_principal_ideal(const WeylOperator& d, const SpacePtr& doubled) {
  Symbol sym = principal_symbol(d, doubled);
  const SpacePtr& s = sym.symbol.space();
  PrincipalCharVariety out;
  out.ideal = Ideal(s, {sym.symbol});
  out.order = sym.degree;
  out.statement = "ch is the hypersurface {" + sym.symbol.to_string() + " = 0}";
  if (sym.degree != 1) return out;
  out.first_order = true;
  int n = d.n();
  PolyVectorField xi{s, std::vector<MultiPoly>(n, MultiPoly(s))};
  for (const auto& [k, c] : d.terms()) {
    if (total_degree(k.second) != 1) continue;
    int i = 0;
    while (k.second[i] == 0) ++i;
    xi.components[i] += symbol_term(s, k.first, Exponent(n, 0), c);
  }
  out.matches_foliation = characteristic_polynomial(xi).polynomial.rebase(s) == sym.symbol;
  out.field = xi;
  return out;
}

}  // namespace folichar
