#include "folichar/qpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "folichar/error.hpp"

namespace folichar::qpoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rational& s) {
  if (s == 0) return {};
  Poly r(a);
  for (auto& c : r) c *= s;
  return r;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  int db = degree(b);
  if (db < 0) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly r(a);
  trim(r);
  int dr = degree(r);
  if (dr < db) return {{}, r};
  Poly q(dr - db + 1);
  const Rational& lb = b[db];
  while (dr >= db) {
    Rational c = r[dr] / lb;
    q[dr - db] = c;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
    trim(r);
    dr = degree(r);
  }
  trim(q);
  return {q, r};
}

Poly monic(const Poly& p) {
  int d = degree(p);
  if (d < 0) return {};
  return scale(p, 1 / p[d]);
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x(a), y(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Bezout xgcd(const Poly& a, const Poly& b) {
  Poly r0(a), r1(b), s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  int d = degree(r0);
  if (d < 0) return {{}, {}, {}};
  Rational inv = 1 / r0[d];
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

Poly squarefree_part(const Poly& p) {
  if (degree(p) <= 0) return monic(p);
  Poly g = gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<Integer> primitive_integer(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.size());
  Integer g = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

namespace {

using IPoly = std::vector<Integer>;

int sign_at(const Poly& p, const Rational& x) { return sgn(evaluate(p, x)); }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (degree(chain.back()) > 0) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(scale(r, -1));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a squarefree polynomial with integer coefficients inside
// [lo, hi]; the chain counts roots in (a, b].
void integer_roots_in(const Poly& p, const std::vector<Poly>& chain,
                      const Integer& lo, const Integer& hi,
                      std::vector<Integer>& out) {
  if (hi - lo <= 1) {
    for (Integer v = lo; v <= hi; ++v)
      if (evaluate(p, Rational(v)) == 0 &&
          std::find(out.begin(), out.end(), v) == out.end())
        out.push_back(v);
    return;
  }
  int count = sign_changes(chain, Rational(lo)) - sign_changes(chain, Rational(hi));
  if (count <= 0 && evaluate(p, Rational(lo)) != 0) return;
  Integer mid = lo + (hi - lo) / 2;
  integer_roots_in(p, chain, lo, mid, out);
  integer_roots_in(p, chain, mid, hi, out);
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& input) {
  Poly p(input);
  trim(p);
  std::vector<Rational> roots;
  if (degree(p) <= 0) return roots;
  // strip the root 0
  size_t shift = 0;
  while (shift < p.size() && p[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(shift));
  }
  p = squarefree_part(p);
  if (degree(p) >= 1) {
    // a_n t^n + ... + a_0 with integer a_i; s = a_n t is a root of the monic
    // integral polynomial s^n + a_{n-1} s^{n-1} + a_{n-2} a_n s^{n-2} + ...
    IPoly a = primitive_integer(p);
    int n = static_cast<int>(a.size()) - 1;
    Integer lead = a[n];
    Poly monic_int(n + 1);
    Integer power = 1;
    for (int i = n - 1; i >= 0; --i) {
      monic_int[i] = Rational(a[i] * power);
      power *= lead;
    }
    monic_int[n] = 1;
    Integer bound = 0;
    for (int i = 0; i < n; ++i) {
      Integer v = abs(monic_int[i].get_num());
      if (v > bound) bound = v;
    }
    bound += 1;
    auto chain = sturm_chain(monic_int);
    std::vector<Integer> ints;
    integer_roots_in(monic_int, chain, -bound, bound, ints);
    for (const auto& s : ints) {
      Rational r(s, lead);
      r.canonicalize();
      roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string to_string(const Poly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    const Rational& c = p[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace folichar::qpoly
