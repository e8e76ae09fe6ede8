#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <cstring>
#include <fstream>
#include <sstream>

namespace fct {

namespace {
std::uint64_t g_seed = kDefaultSeed;
}

std::uint64_t parse_seed(int& argc, char** argv) {
  std::uint64_t s = kDefaultSeed;
  if (const char* env = std::getenv("FOLICHAR_SEED"); env && *env) s = std::strtoull(env, nullptr, 10);
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      s = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      s = std::strtoull(argv[i] + 7, nullptr, 10);
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
  g_seed = s;
  return s;
}

std::uint64_t seed() { return g_seed; }
void set_seed(std::uint64_t s) { g_seed = s; }

Rational Rng::rational(int num, int den) {
  Rational q(uniform(-num, num), uniform(1, den));
  q.canonicalize();
  return q;
}

Rational Rng::nonzero_rational(int num, int den) {
  for (;;) {
    Rational q = rational(num, den);
    if (q != 0) return q;
  }
}

MultiPoly random_poly(const SpacePtr& s, const std::vector<int>& vars, int max_deg, int terms, Rng& r) {
  MultiPoly p(s);
  for (int t = 0; t < terms; ++t) {
    Exponent e(s->size(), 0);
    int d = r.uniform(0, max_deg);
    for (int k = 0; k < d && !vars.empty(); ++k) ++e[vars[r.uniform(0, static_cast<int>(vars.size()) - 1)]];
    p.add_term(e, Scalar(r.nonzero_rational()));
  }
  return p;
}

PolyVectorField random_field(int n, int max_deg, Rng& r, int terms) {
  SpacePtr s = VarSpace::doubled(n);
  std::vector<int> xs = x_block(s);
  for (;;) {
    VectorField f{s, {}};
    for (int i = 0; i < n; ++i) f.components.push_back(random_poly(s, xs, max_deg, r.uniform(0, terms), r));
    if (!f.is_zero()) return make_foliation_field(f);
  }
}

PolyForm random_form(const SpacePtr& s, int m, int q, int max_deg, Rng& r) {
  PolyForm w(s, m, q);
  std::vector<int> vars;
  for (int i = 0; i < m; ++i) vars.push_back(i);
  for (const auto& idx : index_tuples(m, q))
    if (r.coin(0.6)) w.add_term(idx, random_poly(s, vars, max_deg, r.uniform(1, 2), r));
  return w;
}

WeylOperator random_operator(int n, int max_deg, Rng& r, int terms) {
  WeylOperator w(n);
  for (int t = 0; t < terms; ++t) {
    Exponent xe(n, 0), de(n, 0);
    int d = r.uniform(0, max_deg);
    for (int k = 0; k < d; ++k) {
      int v = r.uniform(0, 2 * n - 1);
      if (v < n) ++xe[v]; else ++de[v - n];
    }
    w.add_term(xe, de, Scalar(r.nonzero_rational()));
  }
  return w;
}

std::vector<int> x_block(const SpacePtr& s) {
  std::vector<int> v;
  for (int i = 0; i < s->x_count(); ++i) v.push_back(s->x_index(i));
  return v;
}

std::vector<int> all_vars(const SpacePtr& s) {
  std::vector<int> v;
  for (int i = 0; i < s->size(); ++i) v.push_back(i);
  return v;
}

Ctx::Ctx(const std::string& vars, const std::string& extra)
    : s(Session::parse("vars: " + vars + "\n" + extra)) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fct

namespace fct {

std::vector<Exponent> monomials_up_to(int nvars_total, const std::vector<int>& vars, int deg) {
  std::vector<Exponent> out;
  Exponent e(nvars_total, 0);
  auto rec = [&](auto&& self, size_t i, int left) -> void {
    if (i == vars.size()) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[vars[i]] = k;
      self(self, i + 1, left - k);
    }
    e[vars[i]] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

bool oracle_member(const MultiPoly& f, const std::vector<MultiPoly>& gens, const std::vector<int>& vars,
                   int cof_deg) {
  if (f.is_zero()) return true;
  const SpacePtr& s = f.space();
  std::map<Exponent, int> row_of;
  auto row = [&](const Exponent& e) {
    auto it = row_of.find(e);
    if (it != row_of.end()) return it->second;
    int k = static_cast<int>(row_of.size());
    row_of.emplace(e, k);
    return k;
  };
  std::vector<std::map<int, Rational>> cols;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& m : monomials_up_to(s->size(), vars, cof_deg)) {
      std::map<int, Rational> col;
      for (const auto& [e, c] : g.terms()) {
        col[row(e + m)] = c.rational();
      }
      cols.push_back(std::move(col));
    }
  }
  std::map<int, Rational> rhs;
  for (const auto& [e, c] : f.terms()) rhs[row(e)] = c.rational();
  int rows = static_cast<int>(row_of.size());
  int ncols = static_cast<int>(cols.size());
  // Augmented matrix [A | f], row-major.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols + 1));
  for (int j = 0; j < ncols; ++j)
    for (const auto& [i, c] : cols[j]) a[i][j] = c;
  for (const auto& [i, c] : rhs) a[i][ncols] = c;
  int r = 0;
  for (int j = 0; j < ncols && r < rows; ++j) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      Rational m = a[i][j] / a[r][j];
      for (int k = j; k <= ncols; ++k)
        if (a[r][k] != 0) a[i][k] -= m * a[r][k];
    }
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (a[i][ncols] != 0) return false;
  return true;
}

std::vector<std::string> sorted_strings(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> v;
  for (const auto& p : ps) v.push_back(p.to_string());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace fct

namespace fct {

std::vector<InvariantCase> projection_corpus(Rng& r, int random_cases) {
  std::vector<InvariantCase> out;
  auto add_coordinate_ideals = [&](const PolyVectorField& xi, const std::string& label) {
    const SpacePtr& s = xi.space;
    int n = xi.dim();
    MultiPoly p = characteristic_polynomial(xi).polynomial;
    for (int mask = 1; mask < (1 << (2 * n)); ++mask) {
      std::vector<MultiPoly> gens;
      for (int v = 0; v < 2 * n; ++v)
        if (mask & (1 << v)) gens.push_back(MultiPoly::variable(s, v));
      out.push_back({xi, Ideal(s, gens), label});
      gens.push_back(p);
      out.push_back({xi, Ideal(s, gens), label + "+P"});
    }
  };
  Ctx c2("x1 x2"), c3("x1 x2 x3");
  add_coordinate_ideals(c2.xi("x1*d1 + 2*x2*d2"), "diag(1,2)");
  add_coordinate_ideals(c2.xi("x1^2*d1 + x2*d2"), "x1^2,x2");
  for (int t = 0; t < 4; ++t) {
    int l1 = r.uniform(1, 3) * (r.coin() ? 1 : -1), l2 = r.uniform(1, 3), l3 = r.uniform(-3, 3);
    auto xi = c3.xi(std::to_string(l1) + "*x1*d1 + " + std::to_string(l2) + "*x2*d2 + " +
                    std::to_string(l3) + "*x3*d3 + x1*x2*d3");
    add_coordinate_ideals(xi, "lin3");
  }
  auto rot = c2.xi("x2*d1 - x1*d2");
  for (const char* j : {"(x1^2 + x2^2, x2*y1 - x1*y2)", "(x1, x2)", "(y1, y2)", "(x2*y1 - x1*y2)",
                        "(x1^2 + x2^2 - 1, x2*y1 - x1*y2)", "(x1^2 + x2^2 - 1, y1, y2)", "(x1, y1)"})
    out.push_back({rot, c2.ideal(j), std::string("rot ") + j});
  for (int t = 0; t < random_cases; ++t) {
    PolyVectorField xi = random_field(r.uniform(2, 3), 2, r);
    const SpacePtr& s = xi.space;
    MultiPoly p = characteristic_polynomial(xi).polynomial;
    std::vector<MultiPoly> ys;
    for (int i = 0; i < xi.dim(); ++i) ys.push_back(MultiPoly::variable(s, s->y_index(i)));
    out.push_back({xi, Ideal(s, {p}), "random P"});
    out.push_back({xi, Ideal(s, ys), "random zero section"});
    std::vector<MultiPoly> sing = xi.components;
    sing.insert(sing.end(), ys.begin(), ys.end());
    out.push_back({xi, Ideal(s, sing), "random sing x zero"});
  }
  return out;
}

}  // namespace fct
