#include "folichar/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "folichar/error.hpp"

namespace folichar {

VarSpace::VarSpace(std::vector<std::string> x_vars, std::vector<std::string> y_vars,
                   std::vector<std::string> aux_vars)
    : x_(std::move(x_vars)), y_(std::move(y_vars)), aux_(std::move(aux_vars)) {
  if (!y_.empty() && y_.size() != x_.size())
    raise(ErrorKind::InvalidArgument, "y-block must be empty or as long as the x-block");
  names_ = x_;
  names_.insert(names_.end(), y_.begin(), y_.end());
  names_.insert(names_.end(), aux_.begin(), aux_.end());
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    raise(ErrorKind::InvalidArgument, "variable names must be distinct");
}

SpacePtr VarSpace::doubled(int n) {
  std::vector<std::string> xs, ys;
  for (int i = 1; i <= n; ++i) {
    xs.push_back("x" + std::to_string(i));
    ys.push_back("y" + std::to_string(i));
  }
  return std::make_shared<VarSpace>(xs, ys);
}

SpacePtr VarSpace::plain(std::vector<std::string> names) {
  return std::make_shared<VarSpace>(std::move(names));
}

std::optional<int> VarSpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

SpacePtr VarSpace::with_aux(const std::vector<std::string>& extra) const {
  auto aux = aux_;
  for (const auto& base : extra) {
    std::string name = base;
    int k = 0;
    while (std::find(names_.begin(), names_.end(), name) != names_.end() ||
           std::find(aux.begin(), aux.end(), name) != aux.end())
      name = base + "_" + std::to_string(++k);
    aux.push_back(name);
  }
  return std::make_shared<VarSpace>(x_, y_, aux);
}

SpacePtr VarSpace::x_only() const { return std::make_shared<VarSpace>(x_); }

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) raise(ErrorKind::SpaceMismatch, "polynomials live in different variable spaces");
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int grevlex_compare(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

MultiPoly::MultiPoly(SpacePtr space, const Scalar& c) : space_(std::move(space)) {
  if (!c.is_zero()) terms_.emplace(Exponent(space_->size(), 0), c);
}

MultiPoly MultiPoly::variable(SpacePtr space, int index) {
  Exponent e(space->size(), 0);
  e[index] = 1;
  return monomial(std::move(space), std::move(e));
}

MultiPoly MultiPoly::monomial(SpacePtr space, Exponent e, const Scalar& c) {
  MultiPoly p(std::move(space));
  if (static_cast<int>(e.size()) != p.space_->size())
    raise(ErrorKind::SizeMismatch, "exponent length does not match the variable space");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && folichar::total_degree(terms_.begin()->first) == 0);
}

Scalar MultiPoly::constant_term() const {
  if (terms_.empty()) return Scalar();
  auto it = terms_.rbegin();
  return folichar::total_degree(it->first) == 0 ? it->second : Scalar();
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return folichar::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::degree_in(std::span<const int> vars) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : vars) s += e[v];
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::uses_variable(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

std::vector<int> MultiPoly::support() const {
  std::vector<int> out;
  if (!space_) return out;
  for (int i = 0; i < space_->size(); ++i)
    if (uses_variable(i)) out.push_back(i);
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) {
    if (!space_) space_ = o.space_;
    return *this;
  }
  if (!space_) space_ = o.space_;
  require_same_space(space_, o.space_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (!space_) space_ = o.space_;
  if (o.terms_.empty()) return *this;
  require_same_space(space_, o.space_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  SpacePtr s = a.space_ ? a.space_ : b.space_;
  if (a.space_ && b.space_) require_same_space(a.space_, b.space_);
  MultiPoly r(s);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(space_, Scalar(1)), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::partial(int var) const {
  MultiPoly r(space_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f(e);
    f[var] -= 1;
    r.terms_.emplace(std::move(f), c * Scalar(static_cast<long>(e[var])));
  }
  return r;
}

MultiPoly MultiPoly::shift(const Exponent& e, const Scalar& c) const {
  MultiPoly r(space_);
  if (c.is_zero()) return r;
  for (const auto& [f, d] : terms_) r.terms_.emplace(f + e, d * c);
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(space_);
  for (const auto& [e, c] : terms_)
    if (folichar::total_degree(e) == d) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int d, std::span<const int> vars) const {
  MultiPoly r(space_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : vars) s += e[v];
    if (s == d) r.terms_.emplace(e, c);
  }
  return r;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (static_cast<int>(images.size()) != space_->size())
    raise(ErrorKind::SizeMismatch, "compose needs one image per variable");
  SpacePtr target;
  for (const auto& im : images)
    if (im.space()) {
      target = im.space();
      break;
    }
  if (!target) target = space_;
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Scalar(1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= power_of(i, e[i]);
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  std::vector<MultiPoly> images;
  images.reserve(space_->size());
  for (int i = 0; i < space_->size(); ++i)
    images.push_back(i == var ? value : variable(space_, i));
  return compose(images);
}

MultiPoly MultiPoly::rebase(const SpacePtr& target) const {
  if (same_space(space_, target)) {
    MultiPoly r(*this);
    r.space_ = target;
    return r;
  }
  std::vector<int> map(space_ ? space_->size() : 0, -1);
  for (int i = 0; i < static_cast<int>(map.size()); ++i) {
    auto j = target->index_of(space_->name(i));
    if (j) map[i] = *j;
  }
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponent f(target->size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0)
        raise(ErrorKind::SpaceMismatch, "variable " + space_->name(i) + " is absent from the target space");
      f[map[i]] = e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = folichar::total_degree(e) == 0;
    std::string cs = c.to_string();
    bool negative = !c.needs_parens() && !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (is_const) {
      os << (c.needs_parens() ? "(" + cs + ")" : cs);
      continue;
    }
    bool unit = cs == "1";
    if (!unit) os << (c.needs_parens() ? "(" + cs + ")" : cs) << "*";
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << space_->name(static_cast<int>(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero polynomial");
  MultiPoly q(f.space()), r(f);
  const Exponent& lg = g.leading_exponent();
  Scalar inv = g.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    if (!divides(lg, lr))
      raise(ErrorKind::InexactDivision, g.to_string() + " does not divide " + f.to_string());
    Exponent m = lr - lg;
    Scalar c = r.leading_coefficient() * inv;
    q.add_term(m, c);
    r -= g.shift(m, c);
  }
  return q;
}

FieldPtr coefficient_field(std::span<const MultiPoly> polys) {
  FieldPtr f;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) f = common_field(f, c.field());
  return f;
}

}  // namespace folichar
