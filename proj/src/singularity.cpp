#include "folichar/singularity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "folichar/error.hpp"

namespace folichar {

Scalar evaluate(const MultiPoly& f, const std::vector<Scalar>& pt) {
  Scalar out;
  for (const auto& [e, c] : f.terms()) {
    Scalar t = c;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (v >= pt.size()) raise(ErrorKind::InvalidArgument, "point has too few coordinates");
      t *= pt[v].pow(static_cast<unsigned>(e[v]));
    }
    out += t;
  }
  return out;
}

namespace {

MultiPoly univariate(const SpacePtr& s, const std::vector<Scalar>& coeffs) {
  MultiPoly p(s);
  for (size_t k = 0; k < coeffs.size(); ++k) p.add_term(Exponent{static_cast<int>(k)}, coeffs[k]);
  return p;
}

std::vector<Scalar> coefficients(const MultiPoly& p) {
  int d = std::max(p.total_degree(), 0);
  std::vector<Scalar> out(d + 1);
  for (const auto& [e, c] : p.terms()) out[e[0]] = c;
  return out;
}

}  // namespace

EigenData jacobian_eigendata(const PolyVectorField& field, const std::vector<Scalar>& p,
                             const FieldPtr& declared, Budget* budget) {
  PolyVectorField xi = make_foliation_field(field);
  int n = xi.dim();
  if (static_cast<int>(p.size()) != n)
    raise(ErrorKind::SizeMismatch, "point needs " + std::to_string(n) + " coordinates");
  for (int i = 0; i < n; ++i)
    if (!evaluate(xi.components[i], p).is_zero())
      raise(ErrorKind::NotASingularPoint,
            "component " + std::to_string(i + 1) + " does not vanish at the point");
  EigenData out;
  out.point = p;
  FieldPtr f = common_field(declared, coefficient_field(xi.components));
  for (const auto& c : p) f = common_field(f, c.field());
  out.field = f;
  out.jacobian = ScalarMatrix(n, n, Scalar());
  bool diagonal = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.jacobian(i, j) = evaluate(xi.components[i].partial(j), p);
      if (i != j && !out.jacobian(i, j).is_zero()) diagonal = false;
    }
  out.char_poly = berkowitz_charpoly(out.jacobian, Scalar(), Scalar(1));
  out.invertible = !out.char_poly[0].is_zero();

  SpacePtr t = VarSpace::plain({"t"});
  MultiPoly cp = univariate(t, out.char_poly);
  std::vector<int> var{0};
  auto roots = field_points(Ideal(t, {cp}), var, f, budget);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return b[0] < a[0]; });
  MultiPoly rest = cp;
  std::vector<Scalar> found;
  for (const auto& r : roots) {
    MultiPoly lin = MultiPoly::variable(t, 0) - MultiPoly(t, r[0]);
    while (true) {
      MultiPoly q;
      try {
        q = divide_exact(rest, lin);
      } catch (const Error&) {
        break;
      }
      rest = q;
      found.push_back(r[0]);
    }
  }
  out.residual_factor = coefficients(rest.monic());
  out.resolved = rest.is_constant();
  if (diagonal) {
    out.eigenvalues.clear();
    for (int i = 0; i < n; ++i) out.eigenvalues.push_back(out.jacobian(i, i));
  } else {
    out.eigenvalues = found;
  }
  for (const auto& lambda : out.eigenvalues) {
    bool seen = std::any_of(out.eigenvectors.begin(), out.eigenvectors.end(),
                            [&](const auto& e) { return e.first == lambda; });
    if (seen) continue;
    ScalarMatrix shifted = out.jacobian;
    for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
    out.eigenvectors.emplace_back(lambda, kernel(shifted));
  }
  return out;
}

NonresonanceReport is_nonresonant(const EigenData& data) {
  if (!data.resolved)
    raise(ErrorKind::UnresolvedFactor,
          "characteristic polynomial has a factor without roots in the working field");
  NonresonanceReport r;
  r.n = data.jacobian.rows;
  r.invertible = data.invertible;
  r.zrank = zrank(data.eigenvalues);
  r.nonresonant = r.invertible && r.zrank == r.n;
  return r;
}

HolonomySpectrum holonomy_spectrum(const EigenData& data, int i) {
  NonresonanceReport nr = is_nonresonant(data);
  int n = static_cast<int>(data.eigenvalues.size());
  if (i < 0 || i >= n) raise(ErrorKind::InvalidArgument, "separatrix index out of range");
  const Scalar& li = data.eigenvalues[i];
  if (li.is_zero()) raise(ErrorKind::ZeroEigenvalue, "eigenvalue along the separatrix is zero");
  HolonomySpectrum out;
  out.separatrix = i;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    HolonomyEigenvalue h;
    h.index = j;
    h.ratio = data.eigenvalues[j] / li;
    h.symbolic = "exp(2*pi*I*(" + h.ratio.to_string() + "))";
    if (h.ratio.is_rational()) {
      h.root_of_unity = true;
      h.order = Integer(h.ratio.rational().get_den());
    }
    out.eigenvalues.push_back(std::move(h));
  }
  out.maximal_torus = nr.nonresonant;
  return out;
}

namespace {

std::vector<int> others(int n, int axis) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (i != axis) v.push_back(i);
  return v;
}

MultiPoly on_leaf(MultiPoly f, const std::vector<int>& zeroed) {
  MultiPoly zero(f.space());
  for (int v : zeroed) f = f.substitute(v, zero);
  return f;
}

PolyVectorField check_leaf(const PolyVectorField& field, int axis) {
  PolyVectorField xi = make_foliation_field(field);
  int n = xi.dim();
  if (axis < 0 || axis >= n) raise(ErrorKind::InvalidArgument, "leaf axis out of range");
  auto rest = others(n, axis);
  for (int j : rest)
    if (!on_leaf(xi.components[j], rest).is_zero())
      raise(ErrorKind::LeafNotInvariant, "component " + std::to_string(j + 1) +
                                             " does not vanish on the leaf");
  return xi;
}

}  // namespace

PolyMatrix bott_connection(const PolyVectorField& field, int axis) {
  PolyVectorField xi = check_leaf(field, axis);
  auto rest = others(xi.dim(), axis);
  int m = static_cast<int>(rest.size());
  PolyMatrix a(m, m, MultiPoly(xi.space));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = on_leaf(xi.components[rest[j]].partial(rest[i]), rest);
  return a;
}

DualityCheck verify_prolongation_duality(const PolyVectorField& field, int axis) {
  PolyVectorField xi = check_leaf(field, axis);
  DualityCheck out;
  out.a = bott_connection(xi, axis);
  ProlongedField h = prolong(xi);
  const SpacePtr& s = h.space;
  auto rest = others(xi.dim(), axis);
  std::vector<int> zeroed = rest;
  zeroed.push_back(s->y_index(axis));
  int m = static_cast<int>(rest.size());
  out.b = PolyMatrix(m, m, MultiPoly(s));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      MultiPoly yc = h.y_components[rest[j]];
      // coefficient of y_i: the component is y-linear
      MultiPoly coeff = yc.partial(s->y_index(rest[i]));
      out.b(i, j) = on_leaf(coeff, zeroed);
    }
  out.holds = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!(out.b(i, j) == -out.a(j, i))) out.holds = false;
  return out;
}

PolyVectorField affine_change(const PolyVectorField& field, const ScalarMatrix& m,
                              const std::vector<Scalar>& b) {
  PolyVectorField xi = make_foliation_field(field);
  const SpacePtr& s = xi.space;
  int n = xi.dim();
  if (m.rows != n || m.cols != n || static_cast<int>(b.size()) != n)
    raise(ErrorKind::SizeMismatch, "affine change needs an n x n matrix and n offsets");
  ScalarMatrix inv = inverse(m);
  std::vector<MultiPoly> images;
  for (int v = 0; v < s->size(); ++v) images.push_back(MultiPoly::variable(s, v));
  for (int i = 0; i < n; ++i) {
    MultiPoly img(s, b[i]);
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) img += MultiPoly::variable(s, j) * m(i, j);
    images[i] = img;
  }
  std::vector<MultiPoly> pulled;
  for (const auto& c : xi.components) pulled.push_back(c.compose(images));
  PolyVectorField out{s, std::vector<MultiPoly>(n, MultiPoly(s))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!inv(i, j).is_zero()) out.components[i] += pulled[j] * inv(i, j);
  return out;
}

CoordinateSubspaces coordinate_subspace_decomposition(const Ideal& ideal, Budget* budget) {
  const SpacePtr& s = ideal.space();
  CoordinateSubspaces out;
  bool y_only = s->y_count() > 0;
  for (const auto& g : ideal.generators())
    for (int v : g.support())
      if (v < s->x_count() || v >= s->x_count() + s->y_count()) y_only = false;
  if (y_only) {
    for (int i = 0; i < s->y_count(); ++i) out.vars.push_back(s->y_index(i));
  } else {
    out.vars.resize(s->size());
    std::iota(out.vars.begin(), out.vars.end(), 0);
  }
  if (out.vars.size() > 20) raise(ErrorKind::InvalidArgument, "too many variables for subset enumeration");

  Ideal gb = groebner(Ideal(s, ideal.generators()), MonomialOrder::grevlex(), budget);
  out.torus_invariant = true;
  std::vector<MultiPoly> monos;
  for (const auto& g : ideal.generators())
    for (const auto& piece : multigrade_decompose(g)) {
      MultiPoly mono = MultiPoly::monomial(s, piece.leading_exponent());
      if (std::find(monos.begin(), monos.end(), mono) != monos.end()) continue;
      monos.push_back(mono);
      MultiPoly r = normal_form(mono, gb, budget);
      CertificateEntry e;
      e.claim = mono.to_string() + " in I";
      e.poly = mono;
      e.ideal = Ideal(s, ideal.generators());
      e.remainder = r;
      e.holds = r.is_zero();
      out.certificate.push_back(e);
      if (!e.holds) {
        out.torus_invariant = false;
        return out;
      }
    }
  out.monomial_generators = monos;

  int k = static_cast<int>(out.vars.size());
  std::vector<unsigned> supports;
  for (const auto& m : monos) {
    unsigned mask = 0;
    const Exponent& e = m.leading_exponent();
    for (int i = 0; i < k; ++i)
      if (e[out.vars[i]] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  if (std::any_of(supports.begin(), supports.end(), [](unsigned m) { return m == 0; })) {
    out.equal_dimension = true;  // V(I) is empty
    return out;
  }
  std::vector<unsigned> covers;
  for (unsigned s_mask = 0; s_mask < (1u << k); ++s_mask) {
    bool cover = std::all_of(supports.begin(), supports.end(),
                             [&](unsigned m) { return (m & s_mask) != 0; });
    if (cover) covers.push_back(s_mask);
  }
  std::vector<unsigned> minimal;
  for (unsigned c : covers) {
    bool is_min = std::none_of(covers.begin(), covers.end(),
                               [&](unsigned o) { return o != c && (o & c) == o; });
    if (is_min) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [&](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on the variable lists
    for (int i = 0; i < k; ++i) {
      bool ia = a >> i & 1u, ib = b >> i & 1u;
      if (ia != ib) return ia;
    }
    return false;
  });
  for (unsigned c : minimal) {
    std::vector<int> comp;
    for (int i = 0; i < k; ++i)
      if (c >> i & 1u) comp.push_back(out.vars[i]);
    out.dimensions.push_back(k - static_cast<int>(comp.size()));
    out.components.push_back(std::move(comp));
  }
  out.equal_dimension = std::adjacent_find(out.dimensions.begin(), out.dimensions.end(),
                                           std::not_equal_to<>()) == out.dimensions.end();
  return out;
}

}  // namespace folichar
