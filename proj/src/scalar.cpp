#include "folichar/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "folichar/error.hpp"

namespace folichar {

NumberField::NumberField(std::string name, qpoly::Poly min_poly)
    : name_(std::move(name)), min_poly_(std::move(min_poly)) {
  int d = degree();
  powers_.reserve(std::max(1, 2 * d - 1));
  for (int k = 0; k < std::max(1, 2 * d - 1); ++k) {
    std::vector<Rational> v(d);
    if (k < d) {
      v[k] = 1;
    } else {
      // a^k = a * a^{k-1}, reducing the a^d coordinate by the minimal polynomial
      const auto& prev = powers_[k - 1];
      Rational top = prev[d - 1];
      for (int i = d - 1; i >= 1; --i) v[i] = prev[i - 1];
      v[0] = 0;
      for (int i = 0; i < d; ++i) v[i] -= top * min_poly_[i];
    }
    powers_.push_back(std::move(v));
  }
}

namespace {

// Integer monic transform L^d f(t/L) of a monic rational polynomial.
std::vector<Integer> integral_monic(const qpoly::Poly& f) {
  int d = qpoly::degree(f);
  Integer l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(d + 1);
  Integer power = 1;
  for (int i = d; i >= 0; --i) {
    Rational v = f[i] * Rational(power);
    v.canonicalize();
    out[i] = v.get_num();  // exact: the denominators divide l^{d-i}
    power *= l;
  }
  return out;
}

std::vector<Integer> signed_divisors(const Integer& n) {
  Integer a = abs(n);
  std::vector<Integer> ds;
  for (Integer k = 1; k * k <= a; ++k) {
    if (a % k == 0) {
      ds.push_back(k);
      if (k * k != a) ds.push_back(a / k);
    }
  }
  std::vector<Integer> out;
  for (const auto& k : ds) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

// Monic integer quartic t^4 + a3 t^3 + a2 t^2 + a1 t + a0 as a product of two
// monic integer quadratics (t^2 + b t + c)(t^2 + b' t + c').
bool quadratic_pair(const std::vector<Integer>& g, qpoly::Poly& f1, qpoly::Poly& f2) {
  const Integer &a0 = g[0], &a1 = g[1], &a2 = g[2], &a3 = g[3];
  for (const auto& c : signed_divisors(a0)) {
    Integer c2 = a0 / c;
    // b + b' = a3, b b' = a2 - c - c'
    Integer prod = a2 - c - c2;
    Integer disc = a3 * a3 - 4 * prod;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
    Integer root = sqrt(disc);
    for (int s : {1, -1}) {
      Integer twice_b = a3 + s * root;
      if (twice_b % 2 != 0) continue;
      Integer b = twice_b / 2;
      Integer b2 = a3 - b;
      if (b * c2 + b2 * c == a1) {
        f1 = {Rational(c), Rational(b), 1};
        f2 = {Rational(c2), Rational(b2), 1};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

FieldPtr make_number_field(std::string name, qpoly::Poly min_poly,
                           bool assume_irreducible) {
  qpoly::trim(min_poly);
  int d = qpoly::degree(min_poly);
  if (d < 1) raise(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 1");
  if (min_poly[d] != 1)
    raise(ErrorKind::InvalidArgument, "minimal polynomial must be monic");
  const std::string shown = qpoly::to_string(min_poly, "t");
  if (qpoly::degree(qpoly::gcd(min_poly, qpoly::derivative(min_poly))) > 0)
    raise(ErrorKind::NotSquarefree, shown + " is not squarefree");
  if (d >= 2) {
    auto roots = qpoly::rational_roots(min_poly);
    if (!roots.empty()) {
      std::string list;
      for (const auto& r : roots) list += (list.empty() ? "" : ", ") + r.get_str();
      raise(ErrorKind::RationalRootFound, shown + " has rational roots " + list);
    }
  }
  if (d == 4) {
    auto g = integral_monic(min_poly);
    if (abs(g[0]) > Integer("100000000000000") && !assume_irreducible)
      raise(ErrorKind::IrreducibilityUnverified,
            "constant term too large for the quadratic-factor screen of " + shown);
    qpoly::Poly f1, f2;
    if (quadratic_pair(g, f1, f2)) {
      raise(ErrorKind::ReducibleDetected,
            shown + " is reducible (integral transform factors as (" +
                qpoly::to_string(f1, "t") + ")*(" + qpoly::to_string(f2, "t") + "))");
    }
  }
  if (d >= 5 && !assume_irreducible)
    raise(ErrorKind::IrreducibilityUnverified,
          "irreducibility of degree " + std::to_string(d) +
              " minimal polynomials is not screened; pass --assume-irreducible");
  return FieldPtr(new NumberField(std::move(name), std::move(min_poly)));
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->same_as(*b)) return a;
  raise(ErrorKind::FieldMismatch,
        "elements of Q(" + a->name() + ") and Q(" + b->name() + ") cannot be combined");
}

Scalar Scalar::generator(const FieldPtr& field) {
  if (field->degree() == 1) return Scalar(-field->min_poly()[0]);
  std::vector<Rational> c(field->degree());
  c[1] = 1;
  return from_coords(field, c);
}

Scalar Scalar::from_coords(const FieldPtr& field, std::span<const Rational> coords) {
  Scalar s;
  if (coords.empty()) return s;
  s.q_ = coords[0];
  if (field && field->degree() > 1) {
    if (static_cast<int>(coords.size()) > field->degree())
      raise(ErrorKind::SizeMismatch, "too many coordinates for Q(" + field->name() + ")");
    s.field_ = field;
    s.ext_.assign(field->degree() - 1, Rational(0));
    for (size_t i = 1; i < coords.size(); ++i) s.ext_[i - 1] = coords[i];
    s.normalize();
  }
  return s;
}

void Scalar::normalize() {
  if (field_ && std::all_of(ext_.begin(), ext_.end(), [](const Rational& r) { return r == 0; })) {
    field_.reset();
    ext_.clear();
  }
}

std::vector<Rational> Scalar::coords(int degree) const {
  std::vector<Rational> v(std::max(degree, 1));
  v[0] = q_;
  for (size_t i = 0; i < ext_.size(); ++i) v[i + 1] = ext_[i];
  return v;
}

int Scalar::nonzero_coords() const {
  int n = q_ != 0 ? 1 : 0;
  for (const auto& r : ext_)
    if (r != 0) ++n;
  return n;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.q_ = -r.q_;
  for (auto& c : r.ext_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!o.field_) {
    q_ += o.q_;
    return *this;
  }
  FieldPtr f = common_field(field_, o.field_);
  if (!field_) {
    field_ = f;
    ext_.assign(f->degree() - 1, Rational(0));
  }
  q_ += o.q_;
  for (size_t i = 0; i < ext_.size(); ++i) ext_[i] += o.ext_[i];
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!o.field_) {
    if (o.q_ == 0) {
      *this = Scalar();
      return *this;
    }
    q_ *= o.q_;
    for (auto& c : ext_) c *= o.q_;
    return *this;
  }
  if (!field_) {
    Rational k = q_;
    *this = o;
    return *this *= Scalar(k);
  }
  FieldPtr f = common_field(field_, o.field_);
  int d = f->degree();
  auto a = coords(d), b = o.coords(d);
  std::vector<Rational> conv(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) conv[i + j] += a[i] * b[j];
  }
  std::vector<Rational> out(d);
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (conv[k] == 0) continue;
    const auto& pk = f->power(k);
    for (int i = 0; i < d; ++i)
      if (pk[i] != 0) out[i] += conv[k] * pk[i];
  }
  *this = from_coords(f, out);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  if (!field_) return Scalar(1 / q_);
  int d = field_->degree();
  qpoly::Poly a = coords(d);
  qpoly::trim(a);
  auto bz = qpoly::xgcd(a, field_->min_poly());
  // gcd is 1 because the minimal polynomial is irreducible (screened)
  if (qpoly::degree(bz.g) != 0)
    raise(ErrorKind::DivisionByZero,
          "element is a zero divisor; the minimal polynomial of Q(" + field_->name() +
              ") is reducible");
  qpoly::Poly s = qpoly::divmod(bz.s, field_->min_poly()).second;
  s.resize(d);
  return from_coords(field_, s);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.q_ != b.q_) return false;
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  return a.field_->same_as(*b.field_) && a.ext_ == b.ext_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  size_t n = std::max(a.ext_.size(), b.ext_.size());
  for (size_t i = n; i-- > 0;) {
    Rational x = i < a.ext_.size() ? a.ext_[i] : Rational(0);
    Rational y = i < b.ext_.size() ? b.ext_[i] : Rational(0);
    if (x != y) return x < y;
  }
  return a.q_ < b.q_;
}

std::string Scalar::to_string() const {
  if (!field_) return q_.get_str();
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, int k) {
    if (c == 0) return;
    Rational m = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << m.get_str();
      return;
    }
    if (m != 1) os << m.get_str() << "*";
    os << field_->name();
    if (k > 1) os << "^" << k;
  };
  for (size_t i = ext_.size(); i-- > 0;) emit(ext_[i], static_cast<int>(i) + 1);
  emit(q_, 0);
  return os.str();
}

bool Scalar::needs_parens() const {
  if (!field_) return false;
  return nonzero_coords() > 1;
}

int zrank(std::span<const Scalar> elements) {
  FieldPtr f;
  for (const auto& e : elements) f = common_field(f, e.field());
  int d = f ? f->degree() : 1;
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : elements) rows.push_back(e.coords(d));
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      Rational k = rows[r][col] / rows[rank][col];
      for (int c = col; c < d; ++c) rows[r][c] -= k * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::RationalRootFound: return "RationalRootFound";
    case ErrorKind::ReducibleDetected: return "ReducibleDetected";
    case ErrorKind::IrreducibilityUnverified: return "IrreducibilityUnverified";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::NotADistribution: return "NotADistribution";
    case ErrorKind::NotTorusInvariant: return "NotTorusInvariant";
    case ErrorKind::NotLogarithmic: return "NotLogarithmic";
    case ErrorKind::DegeneratePencil: return "DegeneratePencil";
    case ErrorKind::ConstantFunction: return "ConstantFunction";
    case ErrorKind::EmptyVariety: return "EmptyVariety";
    case ErrorKind::NotAVectorField: return "NotAVectorField";
    case ErrorKind::NotASingularPoint: return "NotASingularPoint";
    case ErrorKind::UnresolvedFactor: return "UnresolvedFactor";
    case ErrorKind::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorKind::LeafNotInvariant: return "LeafNotInvariant";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::MixedContext: return "MixedContext";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace folichar
