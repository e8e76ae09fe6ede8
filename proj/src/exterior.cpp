#include "folichar/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "folichar/error.hpp"
#include "folichar/linalg.hpp"

namespace folichar {

// ---------------------------------------------------------------------------
// Vector fields

MultiPoly VectorField::apply(const MultiPoly& f) const {
  MultiPoly out(space);
  for (int i = 0; i < dim(); ++i) {
    if (components[i].is_zero()) continue;
    MultiPoly df = f.partial(i);
    if (!df.is_zero()) out += components[i] * df;
  }
  return out;
}

bool VectorField::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const MultiPoly& c) { return c.is_zero(); });
}

std::string VectorField::to_string(const std::string& prefix) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    const MultiPoly& c = components[i];
    if (c.is_zero()) continue;
    std::string name = space->name(i);
    std::string suffix = name.size() > 1 && name[0] == 'x' ? name.substr(1) : name;
    std::string atom = prefix + suffix;
    std::string cs = c.to_string();
    bool negative = c.size() == 1 && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (c.size() > 1)
      os << "(" << cs << ")*";
    else if (cs != "1")
      os << cs << "*";
    os << atom;
  }
  if (first) return "0";
  return os.str();
}

bool VectorField::operator==(const VectorField& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (!(components[i] == o.components[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Forms

namespace {

// Sign of sorting the concatenation I ++ J, or 0 when they overlap.
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
  out.clear();
  int inversions = 0;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

void require_compatible(const PolyForm& a, const PolyForm& b) {
  require_same_space(a.space(), b.space());
  if (a.dim() != b.dim()) raise(ErrorKind::SpaceMismatch, "forms on different differential blocks");
}

}  // namespace

PolyForm PolyForm::differential(SpacePtr space, int m, int i) {
  PolyForm w(space, m, 1);
  w.add_term({i}, MultiPoly(space, Scalar(1)));
  return w;
}

PolyForm PolyForm::function(const MultiPoly& f, int m) {
  PolyForm w(f.space(), m, 0);
  w.add_term({}, f);
  return w;
}

PolyForm PolyForm::exact(const MultiPoly& f, int m) {
  return exterior_derivative(function(f, m));
}

MultiPoly PolyForm::coefficient(const IndexTuple& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? MultiPoly(space_) : it->second;
}

void PolyForm::add_term(const IndexTuple& idx, const MultiPoly& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(idx.size()) != q_)
    raise(ErrorKind::InvalidArgument, "index tuple length differs from the form degree");
  auto [it, inserted] = coeffs_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PolyForm PolyForm::operator-() const {
  PolyForm r(*this);
  for (auto& [idx, c] : r.coeffs_) c = -c;
  return r;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && q_ != o.q_) {
    *this = o;
    return *this;
  }
  require_compatible(*this, o);
  if (q_ != o.q_) raise(ErrorKind::InvalidArgument, "sum of forms of different degrees");
  for (const auto& [idx, c] : o.coeffs_) add_term(idx, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) { return *this += -o; }

PolyForm operator*(const MultiPoly& f, const PolyForm& w) {
  PolyForm r(w.space_, w.m_, w.q_);
  if (f.is_zero()) return r;
  for (const auto& [idx, c] : w.coeffs_) r.add_term(idx, f * c);
  return r;
}

bool operator==(const PolyForm& a, const PolyForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.q_ == b.q_ && a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
}

std::string PolyForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : coeffs_) {
    std::string cs = c.to_string();
    bool negative = c.size() == 1 && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string atoms;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (k) atoms += "^";
      atoms += "d" + space_->name(idx[k]);
    }
    if (idx.empty()) {
      os << (c.size() > 1 ? "(" + cs + ")" : cs);
      continue;
    }
    if (c.size() > 1)
      os << "(" << cs << ")*";
    else if (cs != "1")
      os << cs << "*";
    os << atoms;
  }
  return os.str();
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  require_compatible(a, b);
  PolyForm r(a.space(), a.dim(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return PolyForm(a.space(), a.dim(), a.dim());
  IndexTuple merged;
  for (const auto& [ia, ca] : a.coeffs())
    for (const auto& [ib, cb] : b.coeffs()) {
      int s = merge_sign(ia, ib, merged);
      if (s == 0) continue;
      MultiPoly c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(merged, c);
    }
  return r;
}

PolyForm exterior_derivative(const PolyForm& w) {
  PolyForm r(w.space(), w.dim(), w.degree() + 1);
  if (w.degree() + 1 > w.dim()) return PolyForm(w.space(), w.dim(), w.dim());
  IndexTuple merged;
  for (const auto& [idx, c] : w.coeffs())
    for (int k = 0; k < w.dim(); ++k) {
      MultiPoly dc = c.partial(k);
      if (dc.is_zero()) continue;
      int s = merge_sign({k}, idx, merged);
      if (s == 0) continue;
      r.add_term(merged, s > 0 ? dc : -dc);
    }
  return r;
}

namespace {

PolyForm contract_one(const PolyForm& w, int j) {
  if (w.degree() == 0) raise(ErrorKind::DegreeOverflow, "cannot contract a 0-form");
  PolyForm r(w.space(), w.dim(), w.degree() - 1);
  for (const auto& [idx, c] : w.coeffs()) {
    auto it = std::find(idx.begin(), idx.end(), j);
    if (it == idx.end()) continue;
    long pos = it - idx.begin();
    IndexTuple rest(idx);
    rest.erase(rest.begin() + pos);
    r.add_term(rest, pos % 2 == 0 ? c : -c);
  }
  return r;
}

}  // namespace

PolyForm contract(const PolyForm& w, const IndexTuple& multivector) {
  if (static_cast<int>(multivector.size()) > w.degree())
    raise(ErrorKind::DegreeOverflow, "multivector degree exceeds the form degree");
  PolyForm r = w;
  for (int j : multivector) r = contract_one(r, j);
  return r;
}

PolyForm contract(const PolyForm& w, const VectorField& v) {
  PolyForm r(w.space(), w.dim(), std::max(0, w.degree() - 1));
  if (w.degree() == 0) return r;
  for (int j = 0; j < std::min(v.dim(), w.dim()); ++j) {
    if (v.components[j].is_zero()) continue;
    r += v.components[j] * contract_one(w, j);
  }
  return r;
}

PolyForm lie_derivative(const VectorField& v, const PolyForm& w) {
  require_same_space(v.space, w.space());
  PolyForm r(w.space(), w.dim(), w.degree());
  if (w.is_zero()) return r;
  if (w.degree() > 0) r += exterior_derivative(contract(w, v));
  if (w.degree() < w.dim()) r += contract(exterior_derivative(w), v);
  return r;
}

std::vector<IndexTuple> index_tuples(int n, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) return out;
  IndexTuple t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distributions and integrability

bool is_distribution(const PolyForm& w) {
  if (w.is_zero()) raise(ErrorKind::ZeroForm, "the zero form defines no distribution");
  if (w.degree() < 1) raise(ErrorKind::InvalidArgument, "distribution test needs degree >= 1");
  for (const auto& j : index_tuples(w.dim(), w.degree() - 1))
    if (!wedge(contract(w, j), w).is_zero()) return false;
  return true;
}

bool is_integrable(const PolyForm& w) {
  if (!is_distribution(w)) raise(ErrorKind::NotADistribution, "form does not define a distribution");
  PolyForm dw = exterior_derivative(w);
  if (dw.is_zero()) return true;
  for (const auto& j : index_tuples(w.dim(), w.degree() - 1))
    if (!wedge(contract(w, j), dw).is_zero()) return false;
  return true;
}

bool proportional_forms(const PolyForm& a, const PolyForm& b) {
  if (b.is_zero()) raise(ErrorKind::ZeroForm, "proportionality against the zero form");
  if (a.is_zero()) return true;
  require_compatible(a, b);
  if (a.degree() != b.degree()) return false;
  std::vector<IndexTuple> keys;
  for (const auto& [idx, c] : a.coeffs()) keys.push_back(idx);
  for (const auto& [idx, c] : b.coeffs())
    if (!a.coeffs().count(idx)) keys.push_back(idx);
  for (size_t i = 0; i < keys.size(); ++i)
    for (size_t j = i + 1; j < keys.size(); ++j) {
      MultiPoly minor = a.coefficient(keys[i]) * b.coefficient(keys[j]) -
                        a.coefficient(keys[j]) * b.coefficient(keys[i]);
      if (!minor.is_zero()) return false;
    }
  return true;
}

bool is_infinitesimal_automorphism(const VectorField& v, const PolyForm& w) {
  if (w.is_zero()) raise(ErrorKind::ZeroForm, "the zero form has no automorphisms to test");
  PolyForm l = lie_derivative(v, w);
  if (l.is_zero()) return true;
  return proportional_forms(l, w);
}

bool is_torus_invariant_form(const PolyForm& w) {
  if (w.is_zero()) raise(ErrorKind::ZeroForm, "torus invariance of the zero form");
  const SpacePtr& space = w.space();
  std::vector<std::string> ts;
  for (int i = 0; i < w.dim(); ++i) ts.push_back("t" + std::to_string(i + 1));
  SpacePtr ext = space->with_aux(ts);
  int t0 = space->size();
  std::vector<MultiPoly> images;
  for (int i = 0; i < space->size(); ++i) {
    MultiPoly zi = MultiPoly::variable(ext, i);
    images.push_back(i < w.dim() ? MultiPoly::variable(ext, t0 + i) * zi : zi);
  }
  PolyForm pulled(ext, w.dim(), w.degree()), base(ext, w.dim(), w.degree());
  for (const auto& [idx, c] : w.coeffs()) {
    MultiPoly factor(ext, Scalar(1));
    for (int i : idx) factor *= MultiPoly::variable(ext, t0 + i);
    pulled.add_term(idx, c.compose(images) * factor);
    base.add_term(idx, c.rebase(ext));
  }
  return proportional_forms(pulled, base);
}

LogNormalForm logarithmic_normal_form(const PolyForm& w) {
  if (!is_torus_invariant_form(w))
    raise(ErrorKind::NotTorusInvariant, "form is not invariant under the diagonal torus");
  const SpacePtr& space = w.space();
  LogNormalForm out;
  std::map<IndexTuple, MultiPoly> products;
  for (const auto& [idx, c] : w.coeffs()) {
    MultiPoly p = c;
    for (int i : idx) p *= MultiPoly::variable(space, i);
    products.emplace(idx, std::move(p));
  }
  out.h = products.begin()->second.monic();
  for (const auto& idx : index_tuples(w.dim(), w.degree())) out.lambdas[idx] = Scalar();
  std::vector<bool> in_support(w.dim(), false);
  for (const auto& [idx, p] : products) {
    Scalar lambda = p.leading_coefficient() / out.h.leading_coefficient();
    if (!(p == out.h * lambda))
      raise(ErrorKind::NotLogarithmic,
            "coefficient products c_I*x_I are not scalar multiples of one polynomial");
    out.lambdas[idx] = lambda;
    for (int i : idx) in_support[i] = true;
  }
  for (int i = 0; i < w.dim(); ++i)
    if (in_support[i]) out.support.push_back(i);
  out.k = static_cast<int>(out.support.size());
  out.invariant_hyperplanes = out.support;
  int q = w.degree(), n = w.dim();
  if (out.k > q && q <= n - 2) {
    std::vector<int> sub(out.support.begin(), out.support.begin() + q + 1);
    out.singular_subspace = sub;
    out.singular_subspace_dimension = n - (q + 1);
    std::vector<MultiPoly> images;
    for (int i = 0; i < space->size(); ++i)
      images.push_back(std::find(sub.begin(), sub.end(), i) != sub.end()
                           ? MultiPoly(space)
                           : MultiPoly::variable(space, i));
    out.singular_subspace_verified = true;
    for (const auto& [idx, c] : w.coeffs())
      if (!c.compose(images).is_zero()) out.singular_subspace_verified = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binary forms

MultiPoly binary_discriminant(const std::vector<MultiPoly>& coeffs) {
  int k = static_cast<int>(coeffs.size()) - 1;
  if (k < 2) raise(ErrorKind::InvalidArgument, "binary discriminant needs degree k >= 2");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const MultiPoly& a) { return a.is_zero(); }))
    raise(ErrorKind::DegeneratePencil, "the binary form is identically zero");

  std::vector<std::string> names;
  for (int j = 0; j <= k; ++j) names.push_back("A" + std::to_string(j));
  SpacePtr sym = VarSpace::plain(names);
  std::vector<MultiPoly> a;
  for (int j = 0; j <= k; ++j) a.push_back(MultiPoly::variable(sym, j));
  // f = sum A_j u^{k-j}, f' = sum (k-j) A_j u^{k-j-1}; Sylvester matrix of
  // (f, f') has k-1 rows of f and k rows of f'.
  int size = 2 * k - 1;
  MultiPoly zero(sym), one(sym, Scalar(1));
  Matrix<MultiPoly> syl(size, size, zero);
  for (int r = 0; r < k - 1; ++r)
    for (int j = 0; j <= k; ++j) syl(r, r + j) = a[j];
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < k; ++j) syl(k - 1 + r, r + j) = a[j] * Scalar(static_cast<long>(k - j));
  MultiPoly res = determinant(syl, zero, one);
  MultiPoly disc = divide_exact(res, a[0]);
  if ((k * (k - 1) / 2) % 2 == 1) disc = -disc;
  return disc.compose(coeffs);
}

}  // namespace folichar
