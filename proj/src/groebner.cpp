#include "folichar/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>

#include "folichar/error.hpp"

namespace folichar {

// ---------------------------------------------------------------------------
// Monomial orders and budget

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Block: {
      for (int pass = 0; pass < 2; ++pass) {
        bool want = pass == 0;
        int da = 0, db = 0;
        for (size_t i = 0; i < a.size(); ++i)
          if (first_[i] == want) {
            da += a[i];
            db += b[i];
          }
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = a.size(); i-- > 0;)
          if (first_[i] == want && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: return "block";
  }
  return "?";
}

namespace {
std::atomic<std::uint64_t> g_default_budget{0};
}

std::uint64_t Budget::default_limit() {
  std::uint64_t v = g_default_budget.load();
  if (v != 0) return v;
  if (const char* env = std::getenv("FOLICHAR_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && parsed > 0) return parsed;
  }
  return 1000000;
}

void Budget::set_default_limit(std::uint64_t limit) { g_default_budget.store(limit); }

void Budget::charge(std::uint64_t steps) {
  used_ += steps;
  if (used_ > limit_)
    raise(ErrorKind::BudgetExceeded,
          "reduction budget of " + std::to_string(limit_) + " steps exceeded");
}

// ---------------------------------------------------------------------------
// Ordered working polynomials

namespace {

struct Term {
  Exponent mon;
  Scalar coeff;
};

using OPoly = std::vector<Term>;  // strictly descending in the active order

OPoly to_opoly(const MultiPoly& f, const MonomialOrder& order) {
  OPoly out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) out.push_back({e, c});
  if (order.kind() != MonomialOrder::Kind::Grevlex)
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mon, b.mon) > 0; });
  return out;
}

MultiPoly to_multipoly(const OPoly& f, const SpacePtr& space) {
  MultiPoly r(space);
  for (const auto& t : f) r.add_term(t.mon, t.coeff);
  return r;
}

// a - c * x^shift * b, both sorted; a is read from index start.
OPoly sub_shifted(const OPoly& a, size_t start, const OPoly& b, const Exponent& shift,
                  const Scalar& c, const MonomialOrder& order) {
  OPoly out;
  out.reserve(a.size() - start + b.size());
  size_t i = start, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Exponent bm = b[j].mon + shift;
    if (i == a.size()) {
      out.push_back({std::move(bm), -(c * b[j].coeff)});
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].mon, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), -(c * b[j].coeff)});
      ++j;
    } else {
      Scalar v = a[i].coeff - c * b[j].coeff;
      if (!v.is_zero()) out.push_back({std::move(bm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(OPoly& f) {
  if (f.empty() || f[0].coeff.is_one()) return;
  Scalar inv = f[0].coeff.inverse();
  for (auto& t : f) t.coeff *= inv;
}

// Full reduction of f modulo the divisors (those with active[i] set).
OPoly reduce_full(OPoly f, const std::vector<OPoly>& divisors, const std::vector<bool>* active,
                  const MonomialOrder& order, Budget& budget) {
  OPoly rem;
  size_t pos = 0;
  while (pos < f.size()) {
    const Term& lead = f[pos];
    const OPoly* hit = nullptr;
    for (size_t k = 0; k < divisors.size(); ++k) {
      if (active && !(*active)[k]) continue;
      const OPoly& g = divisors[k];
      if (!g.empty() && divides(g[0].mon, lead.mon)) {
        hit = &g;
        break;
      }
    }
    if (!hit) {
      rem.push_back(lead);
      ++pos;
      continue;
    }
    budget.charge();
    Scalar c = lead.coeff / (*hit)[0].coeff;
    Exponent shift = lead.mon - (*hit)[0].mon;
    f = sub_shifted(f, pos, *hit, shift, c, order);
    pos = 0;
  }
  return rem;
}

OPoly spoly(const OPoly& f, const OPoly& g, const MonomialOrder& order) {
  Exponent l = lcm(f[0].mon, g[0].mon);
  OPoly a;
  a.reserve(f.size());
  Exponent sf = l - f[0].mon;
  Scalar cf = f[0].coeff.inverse();
  for (const auto& t : f) a.push_back({t.mon + sf, t.coeff * cf});
  return sub_shifted(a, 0, g, l - g[0].mon, g[0].coeff.inverse(), order);
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Pair {
  size_t i, j;
  Exponent lcm;
};

// Gebauer-Moeller installation of a new basis element h = polys.back().
void update_pairs(std::vector<OPoly>& polys, std::vector<bool>& active, std::vector<Pair>& pairs) {
  size_t h = polys.size() - 1;
  const Exponent& lh = polys[h][0].mon;
  std::vector<Pair> candidates;
  for (size_t g = 0; g < h; ++g)
    if (active[g]) candidates.push_back({g, h, lcm(polys[g][0].mon, lh)});

  // criterion M: drop pairs whose lcm is a proper multiple of another new lcm
  std::vector<Pair> kept;
  for (const auto& p : candidates) {
    bool redundant = false;
    for (const auto& q : candidates)
      if (q.lcm != p.lcm && divides(q.lcm, p.lcm)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(p);
  }
  // criterion F plus the product criterion: one pair per lcm, none at all when
  // some pair with that lcm has coprime leading monomials
  std::vector<Pair> fresh;
  for (size_t a = 0; a < kept.size(); ++a) {
    bool seen = false, any_coprime = false;
    for (size_t b = 0; b < kept.size(); ++b) {
      if (kept[b].lcm != kept[a].lcm) continue;
      if (b < a) seen = true;
      if (coprime(polys[kept[b].i][0].mon, lh)) any_coprime = true;
    }
    if (!seen && !any_coprime) fresh.push_back(kept[a]);
  }

  // prune old pairs whose lcm is strictly caught by h
  std::vector<Pair> old;
  old.reserve(pairs.size());
  for (auto& p : pairs) {
    bool drop = divides(lh, p.lcm) && lcm(polys[p.i][0].mon, lh) != p.lcm &&
                lcm(polys[p.j][0].mon, lh) != p.lcm;
    if (!drop) old.push_back(std::move(p));
  }
  pairs = std::move(old);
  for (auto& p : fresh) pairs.push_back(std::move(p));

  for (size_t g = 0; g < h; ++g)
    if (active[g] && divides(lh, polys[g][0].mon)) active[g] = false;
  active.push_back(true);
}

}  // namespace

Exponent leading_exponent(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) raise(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || order.compare(e, *best) > 0) best = &e;
  return *best;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(SpacePtr space, std::vector<MultiPoly> generators)
    : space_(std::move(space)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_space(space_, g.space());
    generators_.push_back(std::move(g));
  }
}

bool Ideal::is_unit() const {
  if (!basis_) return false;
  return basis_->size() == 1 && basis_->front().is_constant();
}

Ideal groebner(const Ideal& ideal, const MonomialOrder& order, Budget* budget) {
  Budget local;
  Budget& bud = budget ? *budget : local;
  if (ideal.has_basis() && ideal.order() == order) return ideal;

  Ideal out = ideal;
  const SpacePtr& space = ideal.space();
  std::vector<OPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  bool unit = false;

  auto install = [&](OPoly h) {
    make_monic(h);
    if (h.size() == 1 && total_degree(h[0].mon) == 0) unit = true;
    polys.push_back(std::move(h));
    update_pairs(polys, active, pairs);
  };

  for (const auto& g : ideal.generators()) {
    if (unit) break;
    OPoly h = reduce_full(to_opoly(g, order), polys, &active, order, bud);
    if (!h.empty()) install(std::move(h));
  }

  while (!pairs.empty() && !unit) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = *best;
    *best = std::move(pairs.back());
    pairs.pop_back();
    OPoly s = spoly(polys[p.i], polys[p.j], order);
    OPoly h = reduce_full(std::move(s), polys, &active, order, bud);
    if (!h.empty()) install(std::move(h));
  }

  std::vector<MultiPoly> basis;
  if (unit) {
    basis.emplace_back(space, Scalar(1));
  } else {
    // minimal basis, then tail-reduce each element by the others
    std::vector<OPoly> minimal;
    for (size_t k = 0; k < polys.size(); ++k)
      if (active[k]) minimal.push_back(polys[k]);
    std::vector<OPoly> reduced;
    for (size_t k = 0; k < minimal.size(); ++k) {
      std::vector<OPoly> others;
      for (size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(minimal[m]);
      OPoly tail(minimal[k].begin() + 1, minimal[k].end());
      OPoly r = reduce_full(std::move(tail), others, nullptr, order, bud);
      r.insert(r.begin(), minimal[k][0]);
      make_monic(r);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const OPoly& a, const OPoly& b) {
      return order.compare(a[0].mon, b[0].mon) < 0;
    });
    for (const auto& r : reduced) basis.push_back(to_multipoly(r, space));
  }
  out.basis_ = std::move(basis);
  out.order_ = order;
  return out;
}

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> divisors,
                 const MonomialOrder& order, Budget* budget) {
  Budget local;
  Budget& bud = budget ? *budget : local;
  std::vector<OPoly> ds;
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    require_same_space(f.space() ? f.space() : d.space(), d.space());
    ds.push_back(to_opoly(d, order));
  }
  return to_multipoly(reduce_full(to_opoly(f, order), ds, nullptr, order, bud),
                      f.space() ? f.space() : (divisors.empty() ? nullptr : divisors[0].space()));
}

MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal, Budget* budget) {
  if (f.is_zero()) return MultiPoly(ideal.space());
  require_same_space(f.space(), ideal.space());
  if (!ideal.has_basis()) {
    Ideal g = groebner(ideal, MonomialOrder::grevlex(), budget);
    return reduce(f, g.basis(), g.order(), budget);
  }
  return reduce(f, ideal.basis(), ideal.order(), budget);
}

bool contains(const Ideal& ideal, const MultiPoly& f, Budget* budget) {
  return normal_form(f, ideal, budget).is_zero();
}

bool radical_membership(const MultiPoly& f, const Ideal& ideal, Budget* budget) {
  if (f.is_zero()) return true;
  if (ideal.generators().empty()) return false;
  if (ideal.has_basis() && contains(ideal, f, budget)) return true;
  SpacePtr ext = ideal.space()->with_aux({"w"});
  int w = ext->size() - 1;
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebase(ext));
  MultiPoly one(ext, Scalar(1));
  gens.push_back(one - MultiPoly::variable(ext, w) * f.rebase(ext));
  return groebner(Ideal(ext, std::move(gens)), MonomialOrder::grevlex(), budget).is_unit();
}

Ideal eliminate(const Ideal& ideal, std::span<const int> keep, Budget* budget) {
  const SpacePtr& space = ideal.space();
  std::vector<bool> first(space->size(), true);
  for (int k : keep) first[k] = false;
  Ideal g = groebner(ideal, MonomialOrder::block(first), budget);
  std::vector<MultiPoly> kept;
  for (const auto& b : g.basis()) {
    bool ok = true;
    for (int v = 0; v < space->size() && ok; ++v)
      if (first[v] && b.uses_variable(v)) ok = false;
    if (ok) kept.push_back(b);
  }
  return Ideal(space, std::move(kept));
}

std::vector<Exponent> standard_monomials(const Ideal& with_basis, std::span<const int> vars_in) {
  const SpacePtr& space = with_basis.space();
  std::vector<int> vars(vars_in.begin(), vars_in.end());
  if (vars.empty()) {
    vars.resize(space->size());
    std::iota(vars.begin(), vars.end(), 0);
  }
  std::vector<Exponent> leads;
  for (const auto& b : with_basis.basis()) leads.push_back(leading_exponent(b, with_basis.order()));
  for (const auto& l : leads)
    if (total_degree(l) == 0) return {};
  // pure power bounds
  std::vector<int> bound(space->size(), 0);
  for (int v : vars) {
    int best = -1;
    for (const auto& l : leads) {
      bool pure = l[v] > 0;
      for (int u = 0; u < space->size() && pure; ++u)
        if (u != v && l[u] != 0) pure = false;
      if (pure && (best < 0 || l[v] < best)) best = l[v];
    }
    if (best < 0) raise(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
    bound[v] = best;
  }
  std::vector<Exponent> out;
  Exponent e(space->size(), 0);
  while (true) {
    bool standard = true;
    for (const auto& l : leads)
      if (divides(l, e)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(e);
    size_t k = 0;
    for (; k < vars.size(); ++k) {
      int v = vars[k];
      if (++e[v] < bound[v]) break;
      e[v] = 0;
    }
    if (k == vars.size()) break;
  }
  return out;
}

DimZeroResult krull_dim_zero_check(const Ideal& ideal, std::span<const int> vars_in, Budget* budget) {
  std::vector<int> vars(vars_in.begin(), vars_in.end());
  if (vars.empty()) {
    vars.resize(ideal.space()->size());
    std::iota(vars.begin(), vars.end(), 0);
  }
  Ideal g = ideal.has_basis() ? ideal : groebner(ideal, MonomialOrder::grevlex(), budget);
  if (ideal.generators().empty()) return {false, std::nullopt};
  if (g.is_unit()) return {true, 0};
  for (int v : vars) {
    bool found = false;
    for (const auto& b : g.basis()) {
      Exponent l = leading_exponent(b, g.order());
      bool pure = l[v] > 0;
      for (size_t u = 0; u < l.size() && pure; ++u)
        if (static_cast<int>(u) != v && l[u] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return {false, std::nullopt};
  }
  return {true, static_cast<long>(standard_monomials(g, vars).size())};
}

std::vector<MultiPoly> multigrade_decompose(const MultiPoly& f) {
  std::vector<MultiPoly> out;
  for (const auto& [e, c] : f.terms()) out.push_back(MultiPoly::monomial(f.space(), e, c));
  return out;
}

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g, Budget* budget) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  SpacePtr space = f.space();
  require_same_space(space, g.space());
  if (f.is_constant() || g.is_constant()) return MultiPoly(space, Scalar(1));
  SpacePtr ext = space->with_aux({"t"});
  int t = ext->size() - 1;
  MultiPoly tv = MultiPoly::variable(ext, t);
  MultiPoly one(ext, Scalar(1));
  Ideal both(ext, {tv * f.rebase(ext), (one - tv) * g.rebase(ext)});
  std::vector<int> keep;
  for (int i = 0; i < space->size(); ++i) keep.push_back(i);
  Ideal inter = eliminate(both, keep, budget);
  Ideal red = groebner(inter, MonomialOrder::grevlex(), budget);
  if (red.basis().size() != 1)
    raise(ErrorKind::InvalidArgument, "intersection of principal ideals is not principal");
  MultiPoly l = red.basis().front().rebase(space);
  return divide_exact(f * g, l).monic();
}

// ---------------------------------------------------------------------------
// Points over the coefficient field

namespace {

std::vector<std::vector<Rational>> rational_points(const Ideal& ideal, std::vector<int> vars,
                                                   Budget& budget) {
  const SpacePtr& space = ideal.space();
  Ideal lexed = groebner(ideal, MonomialOrder::lex(), &budget);
  if (lexed.is_unit()) return {};
  if (vars.empty()) {
    if (!lexed.basis().empty())
      raise(ErrorKind::InvalidArgument, "equations involve variables outside the solve set");
    return {{}};
  }
  auto dim = krull_dim_zero_check(lexed, vars, &budget);
  if (!dim.is_dim_zero) raise(ErrorKind::NotZeroDimensional, "system has infinitely many solutions");
  int last = vars.back();
  const MultiPoly* uni = nullptr;
  for (const auto& b : lexed.basis()) {
    auto sup = b.support();
    if (sup.size() == 1 && sup[0] == last) {
      uni = &b;
      break;
    }
  }
  if (!uni) raise(ErrorKind::NotZeroDimensional, "no eliminant in the last variable");
  qpoly::Poly q(uni->degree_in(last) + 1);
  for (const auto& [e, c] : uni->terms()) {
    if (!c.is_rational()) raise(ErrorKind::FieldMismatch, "irrational coefficient in rational solve");
    q[e[last]] = c.rational();
  }
  std::vector<std::vector<Rational>> out;
  vars.pop_back();
  for (const auto& r : qpoly::rational_roots(q)) {
    MultiPoly value(space, Scalar(r));
    std::vector<MultiPoly> gens;
    for (const auto& b : lexed.basis()) gens.push_back(b.substitute(last, value));
    for (auto& partial : rational_points(Ideal(space, std::move(gens)), vars, budget)) {
      partial.push_back(r);
      out.push_back(std::move(partial));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Scalar>> field_points(const Ideal& ideal, std::span<const int> vars_in,
                                              const FieldPtr& field_in, Budget* budget) {
  Budget local;
  Budget& bud = budget ? *budget : local;
  std::vector<int> vars(vars_in.begin(), vars_in.end());
  FieldPtr field = common_field(field_in, coefficient_field(ideal.generators()));
  std::vector<std::vector<Scalar>> out;
  if (!field || field->degree() == 1) {
    // lex eliminants exist for the variable of highest index
    std::vector<int> sorted(vars);
    std::sort(sorted.begin(), sorted.end());
    for (auto& pt : rational_points(ideal, sorted, bud)) {
      std::vector<Scalar> row;
      for (int v : vars) {
        size_t k = std::find(sorted.begin(), sorted.end(), v) - sorted.begin();
        row.emplace_back(pt[k]);
      }
      out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  // unknown u = sum_k c_{u,k} a^k with rational c; expand and split by a-degree
  int d = field->degree();
  const SpacePtr& space = ideal.space();
  std::vector<std::string> names;
  for (int v : vars)
    for (int k = 0; k < d; ++k) names.push_back(space->name(v) + "_c" + std::to_string(k));
  names.push_back("alpha__");
  SpacePtr big = VarSpace::plain(names);
  int alpha = big->size() - 1;
  MultiPoly a = MultiPoly::variable(big, alpha);
  std::vector<MultiPoly> images(space->size(), MultiPoly(big));
  for (size_t i = 0; i < vars.size(); ++i) {
    MultiPoly u(big);
    MultiPoly apow(big, Scalar(1));
    for (int k = 0; k < d; ++k) {
      u += MultiPoly::variable(big, static_cast<int>(i) * d + k) * apow;
      apow *= a;
    }
    images[vars[i]] = u;
  }
  MultiPoly minpoly(big);
  for (int k = 0; k <= d; ++k)
    minpoly += MultiPoly::monomial(big, [&] {
      Exponent e(big->size(), 0);
      e[alpha] = k;
      return e;
    }(), Scalar(field->min_poly()[k]));
  auto scalar_in_alpha = [&](const Scalar& s) {
    MultiPoly p(big);
    auto cs = s.coords(d);
    MultiPoly apow(big, Scalar(1));
    for (int k = 0; k < d; ++k) {
      p += apow * Scalar(cs[k]);
      apow *= a;
    }
    return p;
  };
  std::vector<MultiPoly> gens;
  SpacePtr coords_space = VarSpace::plain(std::vector<std::string>(names.begin(), names.end() - 1));
  for (const auto& g : ideal.generators()) {
    for (int v = 0; v < space->size(); ++v)
      if (g.uses_variable(v) && std::find(vars.begin(), vars.end(), v) == vars.end())
        raise(ErrorKind::InvalidArgument, "equations involve variables outside the solve set");
    MultiPoly expanded(big);
    for (const auto& [e, c] : g.terms()) {
      MultiPoly t = scalar_in_alpha(c);
      for (size_t v = 0; v < e.size(); ++v)
        if (e[v] > 0) t *= images[v].pow(e[v]);
      expanded += t;
    }
    std::vector<MultiPoly> div{minpoly};
    MultiPoly r = reduce(expanded, div, MonomialOrder::lex(), &bud);
    std::vector<MultiPoly> parts(d, MultiPoly(big));
    for (const auto& [e, c] : r.terms()) {
      Exponent f(e);
      f[alpha] = 0;
      parts[e[alpha]].add_term(f, c);
    }
    for (auto& p : parts)
      if (!p.is_zero()) gens.push_back(p.rebase(coords_space));
  }
  std::vector<int> cvars(coords_space->size());
  std::iota(cvars.begin(), cvars.end(), 0);
  for (auto& pt : rational_points(Ideal(coords_space, std::move(gens)), cvars, bud)) {
    std::vector<Scalar> row;
    for (size_t i = 0; i < vars.size(); ++i)
      row.push_back(Scalar::from_coords(
          field, std::span<const Rational>(pt.data() + i * d, static_cast<size_t>(d))));
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace folichar
