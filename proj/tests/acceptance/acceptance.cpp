#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "support.hpp"

using namespace folichar;
using fct::Ctx;
using fct::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first mismatch and keeps a count of checks.
struct Checker {
  Outcome out;
  int checks = 0;
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = "mismatch: " + what;
    }
  }
  Outcome done(const std::string& summary) {
    if (out.pass) out.detail = summary;
    return out;
  }
};

std::uint64_t g_seed = fct::kDefaultSeed;

Outcome tangency() {
  Checker c;
  Rng r(g_seed + 1);
  for (int t = 0; t < 200; ++t) {
    PolyVectorField xi = fct::random_field(r.uniform(2, 4), 3, r);
    MultiPoly p = characteristic_polynomial(xi).polynomial;
    ProlongedField h = prolong(xi);
    c.require(h.as_field().apply(p).is_zero(), "prolong(xi)(P) != 0 at case " + std::to_string(t));
    c.require(h == hamiltonian(p), "prolong != hamiltonian(P) at case " + std::to_string(t));
  }
  return c.done("200 fields, " + std::to_string(c.checks) + " exact identities");
}

Outcome symplectic() {
  Checker c;
  Rng r(g_seed + 2);
  int leibniz = 0;
  for (int t = 0; t < 100; ++t) {
    PolyVectorField xi = fct::random_field(r.uniform(2, 4), 3, r);
    const SpacePtr& s = xi.space;
    c.require(lie_derivative(prolong(xi).as_field(), symplectic_form(s)).is_zero(),
              "L(Omega) != 0 at case " + std::to_string(t));
    auto vars = fct::all_vars(s);
    MultiPoly u(s), f(s);
    while (u.is_constant()) u = fct::random_poly(s, vars, 2, 3, r);
    while (f.is_constant()) f = fct::random_poly(s, vars, 2, 3, r);
    VectorField lhs = hamiltonian(u * f).as_field(), hu = hamiltonian(u).as_field(),
                hf = hamiltonian(f).as_field();
    for (int i = 0; i < lhs.dim(); ++i)
      c.require(lhs.components[i] == u * hf.components[i] + f * hu.components[i],
                "Leibniz rule at case " + std::to_string(t));
    ++leibniz;
  }
  return c.done("100 symplectic + " + std::to_string(leibniz) + " Leibniz instances");
}

Outcome duality() {
  Checker c;
  Rng r(g_seed + 3);
  Ctx w("x1 x2");
  DualityCheck ex = verify_prolongation_duality(w.xi("x1*d1 + (2*x2 + x1*x2)*d2"));
  c.require(ex.holds && ex.a(0, 0) == w.p("x1 + 2") && ex.b(0, 0) == w.p("-x1 - 2"), "worked example A = [2 + x1]");
  for (int t = 0; t < 50; ++t) {
    int n = r.uniform(2, 4);
    SpacePtr s = VarSpace::doubled(n);
    std::vector<int> xs = fct::x_block(s);
    VectorField f{s, {}};
    f.components.push_back(fct::random_poly(s, xs, 2, 3, r));
    for (int j = 1; j < n; ++j) {
      MultiPoly comp(s);
      for (int k = 1; k < n; ++k)
        comp += MultiPoly::variable(s, k) * fct::random_poly(s, xs, 1, 2, r);
      f.components.push_back(comp);
    }
    if (f.is_zero()) f.components[0] = MultiPoly(s, Scalar(1));
    DualityCheck d = verify_prolongation_duality(make_foliation_field(f));
    c.require(d.holds, "B != -A^T at case " + std::to_string(t));
  }
  return c.done("worked example + 50 fields with invariant x1-axis");
}

Outcome classifier() {
  Checker c;
  Ctx w("x1 x2");
  auto xi = w.xi("x1*d1 + 2*x2*d2");
  struct Case {
    const char* ideal;
    SubvarietyTag tag;
  } cases[] = {{"(y1, y2)", SubvarietyTag::ZeroSection},
               {"(x1, x2)", SubvarietyTag::FiberOverSingularPoint},
               {"(x1*y1 + 2*x2*y2)", SubvarietyTag::WholeCharVariety},
               {"(x2, y1)", SubvarietyTag::QuasiMinimalityViolation}};
  for (const auto& k : cases) {
    SubvarietyClassification r = classify_ch_subvariety(xi, w.ideal(k.ideal));
    c.require(r.tag == k.tag, std::string(k.ideal) + " -> " + to_string(r.tag));
    c.require(reverify(r.certificate), std::string("certificate of ") + k.ideal);
    if (k.tag == SubvarietyTag::FiberOverSingularPoint)
      c.require(r.point && *r.point == std::vector<Scalar>{Scalar(0), Scalar(0)}, "fiber point (0,0)");
  }
  return c.done("4 ideals classified, certificates re-verified");
}

Outcome projection() {
  Checker c;
  Rng r(g_seed + 5);
  int invariant = 0, total = 0;
  for (const auto& k : fct::projection_corpus(r, 20)) {
    ++total;
    if (groebner(k.j).is_unit()) continue;
    if (!is_invariant(prolong(k.xi).as_field(), k.j).invariant) continue;
    ++invariant;
    std::vector<int> xs = fct::x_block(k.j.space());
    Ideal e = eliminate(k.j, xs);
    if (e.generators().empty()) continue;
    c.require(is_invariant(k.xi, e).invariant, "projection not invariant: " + k.label);
  }
  c.require(invariant >= 50, "too few invariant ideals in the corpus");
  return c.done(std::to_string(invariant) + " invariant ideals out of " + std::to_string(total));
}

Outcome resonance() {
  Checker c;
  Ctx q("x1 x2"), s2("x1 x2", "field: a where a^2 = 2\n"), gi("x1 x2", "field: i where i^2 = -1\n");
  auto origin = q.point("[0, 0]");
  NonresonanceReport r12 = is_nonresonant(jacobian_eigendata(q.xi("x1*d1 + 2*x2*d2"), origin));
  c.require(!r12.nonresonant && r12.zrank == 1, "{1,2}");
  EigenData e = jacobian_eigendata(s2.xi("x1*d1 + a*x2*d2"), origin, s2.s.field());
  NonresonanceReport r1a = is_nonresonant(e);
  c.require(r1a.nonresonant && r1a.zrank == 2, "{1,sqrt2}");
  NonresonanceReport rii = is_nonresonant(jacobian_eigendata(gi.xi("x2*d1 - x1*d2"), origin, gi.s.field()));
  c.require(!rii.nonresonant && rii.zrank == 1, "{i,-i}");
  HolonomySpectrum h = holonomy_spectrum(e, 0);
  c.require(h.eigenvalues.size() == 1 && h.eigenvalues[0].symbolic == "exp(2*pi*I*(a))", "exp(2 pi i sqrt2)");
  c.require(h.eigenvalues.size() == 1 && !h.eigenvalues[0].root_of_unity, "not a root of unity");
  c.require(h.maximal_torus, "maximal torus");
  return c.done("zranks 1, 2, 1; holonomy exp(2*pi*I*(a)), maximal torus");
}

Outcome integrability() {
  Checker c;
  Rng r(g_seed + 7);
  Ctx w("x1 x2 x3");
  c.require(!is_integrable(w.form("dx3 - x2*dx1")), "contact form accepted");
  int closed = 0;
  while (closed < 30) {
    int n = r.uniform(2, 4);
    SpacePtr s = VarSpace::doubled(n);
    std::vector<int> xs = fct::x_block(s);
    PolyForm form = PolyForm::exact(fct::random_poly(s, xs, 3, 3, r), n);
    if (n >= 3 && closed % 2 == 1)
      form = wedge(form, PolyForm::exact(fct::random_poly(s, xs, 2, 3, r), n));
    if (form.is_zero()) continue;
    c.require(exterior_derivative(form).is_zero(), "corpus form not closed");
    c.require(is_distribution(form) && is_integrable(form), "closed form rejected: " + form.to_string());
    ++closed;
  }
  int lognf = 0;
  for (int t = 0; t < 200 && lognf < 40; ++t) {
    int n = r.uniform(3, 5);
    int q = r.uniform(1, n - 2);
    SpacePtr s = VarSpace::doubled(n);
    Exponent e(s->size(), 0);
    for (int i = 0; i < n; ++i) e[i] = 1 + r.uniform(0, 1);
    PolyForm form(s, n, q);
    for (const auto& idx : index_tuples(n, q)) {
      if (!r.coin(0.6)) continue;
      Exponent f = e;
      for (int i : idx) --f[i];
      form.add_term(idx, MultiPoly::monomial(s, f, Scalar(r.nonzero_rational())));
    }
    if (form.is_zero() || !is_distribution(form)) continue;
    LogNormalForm l = logarithmic_normal_form(form);
    c.require(l.k >= q, "support smaller than q");
    c.require(is_integrable(form), "lognf-accepted form not integrable: " + form.to_string());
    ++lognf;
  }
  c.require(lognf >= 20, "too few logarithmic distributions generated");
  LogNormalForm ex = logarithmic_normal_form(w.form("x2*x3*dx1 + x1*x3*dx2"));
  c.require(ex.singular_subspace && *ex.singular_subspace == std::vector<int>{0, 1} &&
                ex.singular_subspace_dimension == 1 && ex.singular_subspace_verified,
            "singular subspace {x1 = x2 = 0} of dimension 1");
  return c.done("contact rejected, 30 closed accepted, " + std::to_string(lognf) +
                " logarithmic distributions integrable, singular subspace dim 1");
}

Outcome torus() {
  Checker c;
  Ctx w("x1 x2 x3");
  CoordinateSubspaces t = coordinate_subspace_decomposition(w.ideal("(y1*y2, y1*y3, y2*y3)"));
  const SpacePtr& s = w.s.space();
  std::vector<std::vector<int>> axes = {{s->y_index(0), s->y_index(1)},
                                        {s->y_index(0), s->y_index(2)},
                                        {s->y_index(1), s->y_index(2)}};
  auto comps = t.components;
  for (auto& v : comps) std::sort(v.begin(), v.end());
  std::sort(comps.begin(), comps.end());
  c.require(t.torus_invariant && comps == axes, "three coordinate axes");
  c.require(!coordinate_subspace_decomposition(w.ideal("(y1 + y2)")).torus_invariant, "y1 + y2 rejected");
  return c.done("three axes; y1 + y2 rejected");
}

Outcome weyl() {
  Checker c;
  Rng r(g_seed + 9);
  for (int t = 0; t < 100; ++t) {
    PolyVectorField xi = fct::random_field(r.uniform(1, 4), 3, r);
    MultiPoly f = fct::random_poly(xi.space, fct::x_block(xi.space), 3, 3, r);
    Symbol s = principal_symbol(WeylOperator::from_field(xi, f), xi.space);
    c.require(s.symbol == characteristic_polynomial(xi).polynomial, "principal symbol at case " + std::to_string(t));
  }
  Ctx w("x1 x2");
  c.require(w.op("d1") * w.op("x1") == w.op("x1*d1 + 1"), "d1*x1 = x1*d1 + 1");
  struct Row {
    const char* op;
    int k;
    const char* sigma;
  } rows[] = {{"x1*d1 + 1", 2, "x1*y1"}, {"d1^2 + x1^3", 3, "x1^3"}, {"d1 + x1", 1, "x1 + y1"}};
  for (const auto& row : rows) {
    Symbol b = bernstein_symbol(w.op(row.op), w.s.space());
    c.require(b.degree == row.k && b.symbol == w.p(row.sigma), std::string("Bernstein symbol of ") + row.op);
  }
  return c.done("100 symbol identities, commutation, 3 Bernstein rows");
}

Outcome degrees() {
  Checker c;
  Ctx w("x1 x2");
  auto a = hyperplane_at_infinity(w.xi("x1*d1 + x2*d2"));
  c.require(!a.invariant && a.projective_degree == 0, "radial");
  auto b = hyperplane_at_infinity(w.xi("x2*d1 - x1*d2"));
  c.require(b.invariant && b.projective_degree == 1, "rotation");
  auto g = hyperplane_at_infinity(w.xi("(1 + x1^2)*d1 + x1*x2*d2"));
  c.require(!g.invariant && g.projective_degree == 1 && g.radial_factor && *g.radial_factor == w.p("x1"), "g = x1");
  return c.done("(false,0) (true,1) (false,1)");
}

Outcome groebner_oracle() {
  Checker c;
  Ctx w("x1 x2 x3");
  std::vector<MultiPoly> pool;
  for (const char* g : {"x1", "x2 - x3", "x1^2", "x1*x2", "x2^2 - x1*x3", "x3^2 - 1", "x1*x3 + x2", "x2*x3"})
    pool.push_back(w.p(g));
  std::vector<MultiPoly> tests;
  for (const char* f : {"x1", "x2", "x3", "1", "x1*x2*x3", "x2^3 - x3", "x1^2*x3", "x2^2 - x1*x3 + x1^2",
                        "x2*x3^2 - x2", "x1*x2 + x2^3", "x1 + x2*x3", "x2 - x3 + x1^2*x2"})
    tests.push_back(w.p(f));
  std::vector<int> xs{0, 1, 2};
  int cases = 0, members = 0;
  int m = static_cast<int>(pool.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
    std::vector<MultiPoly> gens;
    for (int k = 0; k < m; ++k)
      if (mask & (1 << k)) gens.push_back(pool[k]);
    Ideal i(w.s.space(), gens);
    Ideal gb = groebner(i);
    for (const auto& f : tests) {
      bool a = normal_form(f, gb).is_zero();
      bool b = fct::oracle_member(f, gens, xs, f.total_degree() + 2);
      c.require(a == b, "membership of " + f.to_string() + " in " + std::to_string(mask));
      members += a;
      ++cases;
    }
  }
  c.require(cases >= 500, "corpus too small");
  return c.done(std::to_string(cases) + " cases agree (" + std::to_string(members) + " members)");
}

Outcome darboux() {
  Checker c;
  Ctx w("x1 x2");
  auto lin = darboux_search(w.xi("x1*d1 + 2*x2*d2"), 1, 1);
  c.require(lin.size() == 2 && lin[0].g == w.p("x1") && lin[0].cofactor == w.p("1") && lin[1].g == w.p("x2") &&
                lin[1].cofactor == w.p("2"),
            "x1*d1 + 2*x2*d2, bound 1");
  auto rot = darboux_search(w.xi("x2*d1 - x1*d2"), 2, 1);
  c.require(rot.size() == 1 && rot[0].g == w.p("x1^2 + x2^2") && rot[0].cofactor.is_zero(), "rotation, bound 2");
  Rng r(g_seed + 12);
  SpacePtr s = VarSpace::doubled(2);
  VectorField f{s, {}};
  for (int i = 0; i < 2; ++i) {
    MultiPoly comp(s);
    for (const auto& e : fct::monomials_up_to(s->size(), {0, 1}, 2))
      comp.add_term(e, Scalar(Rational(r.uniform(-3, 3))));
    if (comp.total_degree() < 2) comp += MultiPoly::monomial(s, Exponent{2, 0, 0, 0});
    f.components.push_back(comp);
  }
  PolyVectorField xi = make_foliation_field(f);
  auto res = darboux_search(xi, 3, 1);
  c.require(res.empty(), "seeded quadratic field has a Darboux polynomial: " + xi.to_string());
  return c.done("listed results reproduced; seeded quadratic field " + xi.to_string() + " has none up to degree 3");
}

}  // namespace

int main(int argc, char** argv) {
  g_seed = fct::parse_seed(argc, argv);
  std::printf("seed: %llu\n", static_cast<unsigned long long>(g_seed));
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  } criteria[] = {
      {1, "tangency", 5, tangency},
      {2, "symplectic", 5, symplectic},
      {3, "duality", 5, duality},
      {4, "quasi-minimality classifier", 5, classifier},
      {5, "projection lemma", 5, projection},
      {6, "resonance", 5, resonance},
      {7, "integrability", 5, integrability},
      {8, "torus fiber", 5, torus},
      {9, "weyl bridge", 5, weyl},
      {10, "degree bookkeeping", 5, degrees},
      {11, "groebner oracle", 60, groebner_oracle},
      {12, "darboux", 120, darboux},
  };
  int failed = 0;
  for (const auto& k : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = k.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > k.limit_s) o = {false, "runtime " + std::to_string(secs) + " s over the limit"};
    failed += !o.pass;
    std::printf("criterion %2d %-28s %s  %.2fs  %s\n", k.id, k.name, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
