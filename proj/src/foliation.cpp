#include "folichar/foliation.hpp"

#include <algorithm>
#include <numeric>

#include "folichar/error.hpp"

namespace folichar {

namespace {

std::vector<int> x_block(const SpacePtr& s) {
  std::vector<int> v(s->x_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> y_block(const SpacePtr& s) {
  std::vector<int> v(s->y_count());
  std::iota(v.begin(), v.end(), s->x_count());
  return v;
}

SpacePtr doubled_of(const SpacePtr& space) {
  if (space->y_count() == space->x_count() && space->aux_count() == 0 && space->x_count() > 0)
    return space;
  const auto& xs = space->x_vars();
  std::vector<std::string> ys;
  for (const auto& x : xs) {
    std::string base = (!x.empty() && x[0] == 'x') ? "y" + x.substr(1) : "y_" + x;
    while (std::find(xs.begin(), xs.end(), base) != xs.end() ||
           std::find(ys.begin(), ys.end(), base) != ys.end())
      base += "_";
    ys.push_back(base);
  }
  return std::make_shared<VarSpace>(xs, ys);
}

void require_doubled(const SpacePtr& space) {
  if (!space || space->y_count() == 0 || space->y_count() != space->x_count())
    raise(ErrorKind::SpaceMismatch, "expected a doubled (x, y) space");
}

Ideal move_ideal(const Ideal& ideal, const SpacePtr& target) {
  if (same_space(ideal.space(), target)) return ideal;
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebase(target));
  return Ideal(target, std::move(gens));
}

// Monic squarefree part of a univariate polynomial.
MultiPoly squarefree(const MultiPoly& f, int var, Budget* budget) {
  if (f.is_constant()) return f;
  MultiPoly g = poly_gcd(f, f.partial(var), budget);
  return divide_exact(f, g).monic();
}

CertificateEntry entry_with_basis(std::string claim, const MultiPoly& f, const Ideal& ideal,
                                  const Ideal& with_basis, Budget* budget) {
  CertificateEntry e;
  e.claim = std::move(claim);
  e.poly = f;
  e.ideal = Ideal(ideal.space(), ideal.generators());
  e.method = CertificateEntry::Method::NormalForm;
  e.remainder = normal_form(f, with_basis, budget);
  e.holds = e.remainder.is_zero();
  return e;
}

}  // namespace

PolyVectorField make_foliation_field(const VectorField& field) {
  if (!field.space) raise(ErrorKind::NotAVectorField, "vector field has no variable space");
  int n = field.space->x_count();
  if (field.dim() != n)
    raise(ErrorKind::NotAVectorField, "vector field needs one component per x-variable");
  if (field.is_zero()) raise(ErrorKind::NotAVectorField, "zero vector field");
  for (const auto& c : field.components)
    for (int v : c.support())
      if (v >= n)
        raise(ErrorKind::NotAVectorField,
              "component depends on " + field.space->name(v) + ", outside the x-block");
  SpacePtr target = doubled_of(field.space);
  PolyVectorField out{target, {}};
  for (const auto& c : field.components) out.components.push_back(c.rebase(target));
  return out;
}

VectorField ProlongedField::as_field() const {
  VectorField v{space, x_components};
  v.components.insert(v.components.end(), y_components.begin(), y_components.end());
  return v;
}

bool ProlongedField::operator==(const ProlongedField& o) const {
  return same_space(space, o.space) && x_components == o.x_components &&
         y_components == o.y_components;
}

CharVariety characteristic_polynomial(const PolyVectorField& field) {
  PolyVectorField xi = make_foliation_field(field);
  MultiPoly p(xi.space);
  for (int i = 0; i < xi.dim(); ++i)
    p += xi.components[i] * MultiPoly::variable(xi.space, xi.space->y_index(i));
  return {p, xi};
}

ProlongedField hamiltonian(const MultiPoly& f) {
  require_doubled(f.space());
  if (f.is_constant()) raise(ErrorKind::ConstantFunction, "hamiltonian of a constant function");
  const SpacePtr& s = f.space();
  ProlongedField h{s, {}, {}};
  for (int i = 0; i < s->x_count(); ++i) {
    h.x_components.push_back(f.partial(s->y_index(i)));
    h.y_components.push_back(-f.partial(s->x_index(i)));
  }
  return h;
}

ProlongedField prolong(const PolyVectorField& field) {
  PolyVectorField xi = make_foliation_field(field);
  const SpacePtr& s = xi.space;
  int n = xi.dim();
  ProlongedField h{s, xi.components, std::vector<MultiPoly>(n, MultiPoly(s))};
  for (int i = 0; i < n; ++i) {
    MultiPoly yi = MultiPoly::variable(s, s->y_index(i));
    for (int j = 0; j < n; ++j) {
      MultiPoly d = xi.components[i].partial(j);
      if (!d.is_zero()) h.y_components[j] -= d * yi;
    }
  }
  return h;
}

PolyForm symplectic_form(const SpacePtr& doubled) {
  require_doubled(doubled);
  int n = doubled->x_count();
  PolyForm w(doubled, 2 * n, 2);
  for (int i = 0; i < n; ++i) w.add_term({i, n + i}, MultiPoly(doubled, Scalar(1)));
  return w;
}

CertificateEntry normal_form_entry(std::string claim, const MultiPoly& f, const Ideal& ideal,
                                   Budget* budget) {
  Ideal g = groebner(Ideal(ideal.space(), ideal.generators()), MonomialOrder::grevlex(), budget);
  return entry_with_basis(std::move(claim), f, ideal, g, budget);
}

CertificateEntry radical_entry(std::string claim, const MultiPoly& f, const Ideal& ideal,
                               Budget* budget) {
  CertificateEntry e;
  e.claim = std::move(claim);
  e.poly = f;
  e.ideal = Ideal(ideal.space(), ideal.generators());
  e.method = CertificateEntry::Method::Radical;
  e.remainder = MultiPoly(ideal.space());
  e.holds = radical_membership(f, e.ideal, budget);
  return e;
}

bool reverify(const Certificate& certificate, Budget* budget) {
  for (const auto& e : certificate) {
    Ideal fresh(e.ideal.space(), e.ideal.generators());
    if (e.method == CertificateEntry::Method::NormalForm) {
      Ideal g = groebner(fresh, MonomialOrder::grevlex(), budget);
      MultiPoly r = normal_form(e.poly, g, budget);
      if (!(r == e.remainder) || r.is_zero() != e.holds) return false;
    } else {
      if (radical_membership(e.poly, fresh, budget) != e.holds) return false;
    }
  }
  return true;
}

SingularScheme singular_scheme(const PolyVectorField& field, const FieldPtr& working, Budget* budget) {
  PolyVectorField xi = make_foliation_field(field);
  SpacePtr xs = xi.space->x_only();
  SingularScheme out;
  std::vector<MultiPoly> comps;
  for (const auto& c : xi.components) comps.push_back(c.rebase(xs));
  out.ideal = Ideal(xs, comps);

  MultiPoly g(xs);
  for (const auto& c : comps) g = poly_gcd(g, c, budget);
  out.divisorial_part = g.monic();
  out.has_divisorial_part = !g.is_constant();

  Ideal gb = groebner(out.ideal, MonomialOrder::grevlex(), budget);
  if (gb.is_unit()) {
    out.isolated = true;
    out.reduced = true;
    out.vecdim = 0;
    out.distinct_points = 0;
    return out;
  }
  auto dz = krull_dim_zero_check(gb, {}, budget);
  if (!dz.is_dim_zero) return out;
  out.isolated = true;
  out.vecdim = dz.vecdim;

  // Seidenberg: adding squarefree univariate eliminants yields the radical.
  std::vector<MultiPoly> rad = comps;
  for (int v = 0; v < xs->size(); ++v) {
    std::vector<int> keep{v};
    Ideal e = eliminate(gb, keep, budget);
    for (const auto& u : e.generators()) rad.push_back(squarefree(u, v, budget));
  }
  auto rdz = krull_dim_zero_check(Ideal(xs, rad), {}, budget);
  out.distinct_points = rdz.vecdim;
  out.reduced = rdz.vecdim == dz.vecdim;

  FieldPtr f = common_field(working, coefficient_field(comps));
  std::vector<int> all(xs->size());
  std::iota(all.begin(), all.end(), 0);
  out.points = field_points(Ideal(xs, rad), all, f, budget);
  return out;
}

ChSingularLocus ch_singular_locus(const PolyVectorField& field, Budget* budget) {
  CharVariety ch = characteristic_polynomial(field);
  const SpacePtr& s = ch.source.space;
  std::vector<MultiPoly> gens{ch.polynomial};
  for (int v = 0; v < s->size(); ++v) gens.push_back(ch.polynomial.partial(v));
  ChSingularLocus out;
  out.jacobian = Ideal(s, gens);
  out.smooth_away_from_zero_section = true;
  for (int v : y_block(s)) {
    auto e = radical_entry(s->name(v) + " vanishes on sing(ch)", MultiPoly::variable(s, v),
                           out.jacobian, budget);
    out.smooth_away_from_zero_section = out.smooth_away_from_zero_section && e.holds;
    out.certificate.push_back(std::move(e));
  }
  SingularScheme sing = singular_scheme(ch.source, nullptr, budget);
  out.reduced_isolated_criterion = sing.isolated && sing.reduced;
  return out;
}

InvarianceResult is_invariant(const VectorField& field, const Ideal& ideal_in, Budget* budget) {
  const SpacePtr& s = ideal_in.space();
  VectorField d{s, {}};
  for (const auto& c : field.components) d.components.push_back(c.rebase(s));
  if (!same_space(field.space, s))
    for (int i = 0; i < d.dim(); ++i)
      if (s->name(i) != field.space->name(i))
        raise(ErrorKind::SpaceMismatch, "vector field and ideal use different variables");
  Ideal ideal(s, ideal_in.generators());
  Ideal gb = groebner(ideal, MonomialOrder::grevlex(), budget);
  if (gb.is_unit()) raise(ErrorKind::EmptyVariety, "the unit ideal defines the empty variety");
  InvarianceResult out;
  out.invariant = true;
  for (const auto& g : gb.basis()) {
    auto e = entry_with_basis("derivation(" + g.to_string() + ") in J", d.apply(g), ideal, gb, budget);
    out.invariant = out.invariant && e.holds;
    out.certificate.push_back(std::move(e));
  }
  return out;
}

std::string to_string(SubvarietyTag tag) {
  switch (tag) {
    case SubvarietyTag::ZeroSection: return "ZeroSection";
    case SubvarietyTag::FiberOverSingularPoint: return "FiberOverSingularPoint";
    case SubvarietyTag::WholeCharVariety: return "WholeCharVariety";
    case SubvarietyTag::EmptyVariety: return "EmptyVariety";
    case SubvarietyTag::NotContained: return "NotContained";
    case SubvarietyTag::NotInvariant: return "NotInvariant";
    case SubvarietyTag::NotYHomogeneous: return "NotYHomogeneous";
    case SubvarietyTag::QuasiMinimalityViolation: return "QuasiMinimalityViolation";
  }
  return "?";
}

SubvarietyClassification classify_ch_subvariety(const PolyVectorField& field, const Ideal& ideal_in,
                                                const FieldPtr& working, Budget* budget) {
  CharVariety ch = characteristic_polynomial(field);
  const PolyVectorField& xi = ch.source;
  const SpacePtr& s = xi.space;
  Ideal J = move_ideal(ideal_in, s);
  J = Ideal(s, J.generators());
  SubvarietyClassification out;

  Ideal gb = groebner(J, MonomialOrder::grevlex(), budget);
  if (gb.is_unit()) {
    out.tag = SubvarietyTag::EmptyVariety;
    out.notes.push_back("the ideal is the unit ideal");
    return out;
  }

  // containment
  auto contained = radical_entry("P vanishes on V(J)", ch.polynomial, J, budget);
  out.certificate.push_back(contained);
  if (!contained.holds) {
    out.tag = SubvarietyTag::NotContained;
    return out;
  }

  // y-homogeneity
  std::vector<int> ys = y_block(s);
  bool homogeneous = true;
  for (const auto& g : J.generators()) {
    int top = g.degree_in(std::span<const int>(ys));
    std::vector<MultiPoly> parts;
    for (int d = 0; d <= top; ++d) {
      MultiPoly p = g.homogeneous_part(d, ys);
      if (!p.is_zero()) parts.push_back(p);
    }
    if (parts.size() < 2) continue;
    for (const auto& p : parts) {
      auto e = entry_with_basis("y-homogeneous part " + p.to_string() + " in J", p, J, gb, budget);
      homogeneous = homogeneous && e.holds;
      out.certificate.push_back(std::move(e));
    }
  }
  if (!homogeneous) {
    out.tag = SubvarietyTag::NotYHomogeneous;
    return out;
  }

  // invariance under the prolongation
  auto inv = is_invariant(prolong(xi).as_field(), J, budget);
  out.certificate.insert(out.certificate.end(), inv.certificate.begin(), inv.certificate.end());
  if (!inv.invariant) {
    out.tag = SubvarietyTag::NotInvariant;
    return out;
  }

  // zero section
  {
    Certificate zs;
    bool ok = true;
    for (int v : ys) {
      zs.push_back(radical_entry(s->name(v) + " vanishes on V(J)", MultiPoly::variable(s, v), J, budget));
      ok = ok && zs.back().holds;
      if (!ok) break;
    }
    if (ok) {
      std::vector<MultiPoly> ygens;
      for (int v : ys) ygens.push_back(MultiPoly::variable(s, v));
      Ideal zero(s, ygens);
      Ideal zgb = groebner(zero, MonomialOrder::grevlex(), budget);
      for (const auto& g : J.generators()) {
        zs.push_back(entry_with_basis(g.to_string() + " vanishes on the zero section", g, zero, zgb, budget));
        ok = ok && zs.back().holds;
      }
    }
    if (ok) {
      out.tag = SubvarietyTag::ZeroSection;
      out.certificate.insert(out.certificate.end(), zs.begin(), zs.end());
      return out;
    }
  }

  // fiber over the singular set
  std::vector<int> xs = x_block(s);
  Ideal Jx = eliminate(gb, xs, budget);
  if (!Jx.generators().empty()) {
    auto dz = krull_dim_zero_check(Jx, xs, budget);
    if (dz.is_dim_zero) {
      Certificate fc;
      bool singular = true;
      for (const auto& a : xi.components) {
        fc.push_back(radical_entry(a.to_string() + " vanishes on pi(V(J))", a, Jx, budget));
        singular = singular && fc.back().holds;
        if (!singular) break;
      }
      if (singular) {
        FieldPtr f = common_field(working, coefficient_field(xi.components));
        std::vector<std::vector<Scalar>> pts;
        try {
          pts = field_points(Jx, xs, f, budget);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::BudgetExceeded) throw;
        }
        bool single = false;
        if (pts.size() == 1) {
          single = true;
          Certificate pc;
          for (size_t i = 0; i < xs.size() && single; ++i) {
            MultiPoly lin = MultiPoly::variable(s, xs[i]) - MultiPoly(s, pts[0][i]);
            pc.push_back(radical_entry(lin.to_string() + " vanishes on V(J)", lin, J, budget));
            single = pc.back().holds;
          }
          if (single) {
            fc.insert(fc.end(), pc.begin(), pc.end());
            out.point = pts[0];
          }
        }
        if (!single) {
          std::string res;
          for (const auto& g : Jx.generators()) res += (res.empty() ? "" : ", ") + g.to_string();
          out.notes.push_back("V(J) lies over the finite singular set cut out by (" + res +
                              "), not a single point of the working field");
        }
        out.tag = SubvarietyTag::FiberOverSingularPoint;
        out.certificate.insert(out.certificate.end(), fc.begin(), fc.end());
        return out;
      }
    }
  }

  // whole characteristic variety
  {
    Ideal principal(s, {ch.polynomial});
    Certificate wc;
    bool ok = true;
    for (const auto& g : J.generators()) {
      wc.push_back(radical_entry(g.to_string() + " vanishes on ch", g, principal, budget));
      ok = ok && wc.back().holds;
      if (!ok) break;
    }
    if (ok) {
      out.tag = SubvarietyTag::WholeCharVariety;
      out.certificate.insert(out.certificate.end(), wc.begin(), wc.end());
      return out;
    }
  }

  out.tag = SubvarietyTag::QuasiMinimalityViolation;
  out.notes.push_back(
      "irreducibility of V(J) is not certified; a reducible J may split into benign components");
  return out;
}

HyperplaneAtInfinity hyperplane_at_infinity(const PolyVectorField& field) {
  PolyVectorField xi = make_foliation_field(field);
  const SpacePtr& s = xi.space;
  int n = xi.dim();
  HyperplaneAtInfinity out;
  int d = 0;
  for (const auto& c : xi.components) d = std::max(d, c.total_degree());
  out.affine_degree = d;
  std::vector<MultiPoly> top;
  for (const auto& c : xi.components) top.push_back(c.homogeneous_part(d));
  bool radial = true;
  for (int i = 0; i < n && radial; ++i)
    for (int j = i + 1; j < n && radial; ++j) {
      MultiPoly m = MultiPoly::variable(s, j) * top[i] - MultiPoly::variable(s, i) * top[j];
      radial = m.is_zero();
    }
  if (radial) {
    for (int i = 0; i < n; ++i)
      if (!top[i].is_zero()) {
        try {
          out.radial_factor = divide_exact(top[i], MultiPoly::variable(s, i));
        } catch (const Error&) {
          radial = false;
        }
        break;
      }
  }
  out.invariant = !radial;
  out.projective_degree = radial ? d - 1 : d;
  return out;
}

}  // namespace folichar
