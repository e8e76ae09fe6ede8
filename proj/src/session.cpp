#include "folichar/session.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace folichar {

// ---------------------------------------------------------------------------
// Value

Value Value::of(MultiPoly p) {
  Value v;
  v.kind = Kind::Poly;
  v.poly = std::move(p);
  return v;
}

Value Value::of(PolyForm f) {
  Value v;
  v.kind = Kind::Form;
  v.form = std::move(f);
  return v;
}

Value Value::of(WeylOperator o) {
  Value v;
  v.kind = Kind::Operator;
  v.op = std::move(o);
  return v;
}

std::string Value::kind_name() const {
  switch (kind) {
    case Kind::Poly: return "polynomial";
    case Kind::Form: return "form";
    case Kind::Operator: return "operator";
    case Kind::Ideal: return "ideal";
    case Kind::List: return "list";
  }
  return "?";
}

bool Value::operator==(const Value& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Poly: return poly == o.poly;
    case Kind::Form: return form == o.form;
    case Kind::Operator: return op == o.op;
    default: return items == o.items;
  }
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of line";
  return "'" + t.text + "'";
}

std::vector<Token> lex(const std::string& line, int line_no, int offset) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = offset + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Number, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Equals; break;
      default:
        throw ParseError(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", line_no,
                         col, "expression");
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", offset + static_cast<int>(line.size())});
  return out;
}

std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  return p == std::string::npos ? line : line.substr(0, p);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(const Session& s, std::vector<Token> toks, int line) : s_(s), toks_(std::move(toks)), line_(line) {}

  // Univariate mode: only the given generator name is a variable.
  void set_univariate(SpacePtr space) { uni_ = std::move(space); }

  Value parse_all() {
    Value v = expr();
    if (peek().kind != Tok::End) fail(peek(), "operator or end of line");
    return v;
  }

  Value expr() {
    Value v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = next();
      Value r = term();
      v = op.kind == Tok::Plus ? add(v, r, op) : add(v, negate(r, op), op);
    }
    return v;
  }

  [[noreturn]] void fail(const Token& t, const std::string& expected) {
    throw ParseError(ErrorKind::SyntaxError, "expected " + expected + ", found " + describe(t), line_,
                     t.column, expected);
  }

  const Token& peek() const { return toks_[pos_]; }

 private:
  Token next() { return toks_[pos_++]; }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), what);
    ++pos_;
  }

  [[noreturn]] void mixed(const Token& t, const std::string& msg) {
    throw ParseError(ErrorKind::MixedContext, msg, line_, t.column);
  }

  SpacePtr space() const { return uni_ ? uni_ : s_.space_; }

  Value term() {
    Value v = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = next();
      Value r = unary();
      v = op.kind == Tok::Star ? mul(v, r, op) : div(v, r, op);
    }
    return v;
  }

  Value unary() {
    if (peek().kind == Tok::Minus) {
      Token op = next();
      return negate(unary(), op);
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (peek().kind != Tok::Caret) return base;
    Token op = next();
    Token at = peek();
    Value ex = unary();
    if (base.kind == Value::Kind::Form && ex.kind == Value::Kind::Form)
      return Value::of(wedge(base.form, ex.form));
    if (base.kind == Value::Kind::Operator && ex.kind == Value::Kind::Form)
      mixed(op, "wedge applied to an operator");
    if (base.kind == Value::Kind::Form || ex.kind == Value::Kind::Form)
      mixed(op, "'^' between a form and a non-form");
    if (ex.kind != Value::Kind::Poly || !ex.poly.is_constant() || !ex.poly.constant_term().is_rational())
      fail(at, "nonnegative integer exponent");
    Rational q = ex.poly.constant_term().rational();
    if (q.get_den() != 1 || q < 0 || q > 10000) fail(at, "nonnegative integer exponent");
    unsigned e = static_cast<unsigned>(q.get_num().get_ui());
    if (base.kind == Value::Kind::Poly) return Value::of(base.poly.pow(e));
    if (base.kind == Value::Kind::Operator) {
      WeylOperator r = WeylOperator::constant(base.op.n(), Scalar(1));
      for (unsigned k = 0; k < e; ++k) r = weyl_mul(r, base.op);
      return Value::of(r);
    }
    mixed(op, "power of a " + base.kind_name());
  }

  Value atom() {
    Token t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        return Value::of(MultiPoly(space(), Scalar(Rational(Integer(t.text)))));
      }
      case Tok::LParen: {
        next();
        Value v = expr();
        if (peek().kind == Tok::Comma) {
          Value tuple;
          tuple.kind = Value::Kind::Ideal;
          tuple.items.push_back(v);
          while (peek().kind == Tok::Comma) {
            next();
            tuple.items.push_back(expr());
          }
          expect(Tok::RParen, "')'");
          return tuple;
        }
        expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::LBracket: {
        next();
        Value list;
        list.kind = Value::Kind::List;
        if (peek().kind != Tok::RBracket) {
          list.items.push_back(expr());
          while (peek().kind == Tok::Comma) {
            next();
            list.items.push_back(expr());
          }
        }
        expect(Tok::RBracket, "']'");
        return list;
      }
      case Tok::Ident: return identifier();
      default: fail(t, "expression");
    }
  }

  Value identifier() {
    Token t = next();
    const std::string& id = t.text;
    if (uni_) {
      if (id == uni_->name(0)) return Value::of(MultiPoly::variable(uni_, 0));
      throw ParseError(ErrorKind::UnknownVariable, "unknown variable " + id, line_, t.column);
    }
    const SpacePtr& sp = s_.space_;
    if (peek().kind == Tok::LParen && (id == "ideal" || id == "charpoly")) {
      next();
      std::vector<Value> args;
      if (peek().kind != Tok::RParen) {
        args.push_back(expr());
        while (peek().kind == Tok::Comma) {
          next();
          args.push_back(expr());
        }
      }
      expect(Tok::RParen, "')'");
      if (id == "ideal") {
        Value v;
        v.kind = Value::Kind::Ideal;
        for (auto& a : args) {
          if (a.kind == Value::Kind::Operator && a.op.is_zero()) a = Value::of(MultiPoly(sp));
          if (a.kind != Value::Kind::Poly) mixed(t, "ideal generators must be polynomials");
          v.items.push_back(a);
        }
        return v;
      }
      if (args.size() != 1) fail(t, "one argument to charpoly");
      try {
        return Value::of(characteristic_polynomial(s_.as_field(args[0])).polynomial.rebase(sp));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.kind(), e.what(), line_, t.column);
      }
    }
    if (s_.field_ && id == s_.field_->name())
      return Value::of(MultiPoly(sp, Scalar::generator(s_.field_)));
    if (auto v = sp->index_of(id)) return Value::of(MultiPoly::variable(sp, *v));
    for (int i = 0; i < s_.n(); ++i) {
      if (id == s_.d_name(i)) return Value::of(WeylOperator::d(s_.n(), i));
      if (id == s_.dx_name(i)) return Value::of(PolyForm::differential(sp, s_.n(), i));
    }
    auto it = s_.objects_.find(id);
    if (it != s_.objects_.end()) return it->second;
    static const std::regex var_like("(x|y|d|dx|dy)[0-9]+");
    if (std::regex_match(id, var_like))
      throw ParseError(ErrorKind::UnknownVariable, "unknown variable " + id, line_, t.column);
    throw ParseError(ErrorKind::UnknownName, "unknown name " + id, line_, t.column);
  }

  // --- arithmetic on values

  WeylOperator to_operator(const Value& v, const Token& at) {
    if (v.kind == Value::Kind::Operator) return v.op;
    int n = s_.n();
    WeylOperator w(n);
    for (const auto& [e, c] : v.poly.terms()) {
      for (size_t k = n; k < e.size(); ++k)
        if (e[k] != 0) mixed(at, "y-variables cannot appear in an operator");
      w.add_term(Exponent(e.begin(), e.begin() + n), Exponent(n, 0), c);
    }
    return w;
  }

  PolyForm to_form(const Value& v, int degree, const Token& at) {
    if (v.kind == Value::Kind::Form) return v.form;
    if (degree != 0) mixed(at, "cannot add a function to a form of positive degree");
    return PolyForm::function(v.poly, s_.n());
  }

  void no_collections(const Value& a, const Value& b, const Token& at) {
    if (a.kind == Value::Kind::Ideal || a.kind == Value::Kind::List || b.kind == Value::Kind::Ideal ||
        b.kind == Value::Kind::List)
      mixed(at, "arithmetic on an ideal or list");
  }

  Value negate(const Value& v, const Token& at) {
    switch (v.kind) {
      case Value::Kind::Poly: return Value::of(-v.poly);
      case Value::Kind::Form: return Value::of(-v.form);
      case Value::Kind::Operator: return Value::of(-v.op);
      default: mixed(at, "negation of an ideal or list");
    }
  }

  Value add(const Value& a, const Value& b, const Token& at) {
    no_collections(a, b, at);
    using K = Value::Kind;
    if (a.kind == K::Poly && b.kind == K::Poly) return Value::of(a.poly + b.poly);
    if (a.kind == K::Form || b.kind == K::Form) {
      if (a.kind == K::Operator || b.kind == K::Operator) mixed(at, "sum of a form and an operator");
      int deg = a.kind == K::Form ? a.form.degree() : b.form.degree();
      PolyForm fa = to_form(a, deg, at), fb = to_form(b, deg, at);
      if (fa.degree() != fb.degree()) mixed(at, "sum of forms of different degrees");
      return Value::of(fa + fb);
    }
    return Value::of(to_operator(a, at) + to_operator(b, at));
  }

  Value mul(const Value& a, const Value& b, const Token& at) {
    no_collections(a, b, at);
    using K = Value::Kind;
    if (a.kind == K::Poly && b.kind == K::Poly) return Value::of(a.poly * b.poly);
    if (a.kind == K::Form && b.kind == K::Form) mixed(at, "use '^' for the wedge product of forms");
    if (a.kind == K::Form || b.kind == K::Form) {
      if (a.kind == K::Operator || b.kind == K::Operator) mixed(at, "product of a form and an operator");
      return a.kind == K::Form ? Value::of(b.poly * a.form) : Value::of(a.poly * b.form);
    }
    return Value::of(weyl_mul(to_operator(a, at), to_operator(b, at)));
  }

  Value div(const Value& a, const Value& b, const Token& at) {
    no_collections(a, b, at);
    if (b.kind != Value::Kind::Poly || !b.poly.is_constant() || b.poly.is_zero()) {
      if (b.kind == Value::Kind::Poly && b.poly.is_zero())
        throw ParseError(ErrorKind::DivisionByZero, "division by zero", line_, at.column);
      throw ParseError(ErrorKind::InvalidArgument, "division only by nonzero constants", line_, at.column);
    }
    Scalar inv = b.poly.constant_term().inverse();
    switch (a.kind) {
      case Value::Kind::Poly: return Value::of(a.poly * inv);
      case Value::Kind::Form: return Value::of(MultiPoly(s_.space_, inv) * a.form);
      default: return Value::of(inv * a.op);
    }
  }

  const Session& s_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  int line_;
  SpacePtr uni_;
};

// ---------------------------------------------------------------------------
// Session

std::string Session::d_name(int i) const {
  const std::string& x = space_->x_vars()[i];
  return !x.empty() && x[0] == 'x' ? "d" + x.substr(1) : "d_" + x;
}

std::string Session::dx_name(int v) const { return "d" + space_->name(v); }

const Value& Session::get(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) raise(ErrorKind::UnknownName, "unknown name " + name);
  return it->second;
}

Session Session::parse(const std::string& text, bool assume_irreducible) {
  Session s;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_vars = false;
  std::vector<std::string> reserved;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (trim(line).empty()) continue;
    auto colon = line.find(':');
    size_t first = line.find_first_not_of(" \t");
    if (colon == std::string::npos)
      throw ParseError(ErrorKind::SyntaxError, "expected 'name: expression'", line_no,
                       static_cast<int>(line.size()), "':'");
    std::string key = trim(line.substr(0, colon));
    std::string body = line.substr(colon + 1);
    int body_offset = static_cast<int>(colon + 1);
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    if (!std::regex_match(key, ident))
      throw ParseError(ErrorKind::SyntaxError, "expected a name before ':'", line_no, static_cast<int>(first),
                       "name");

    if (!have_vars) {
      if (key != "vars")
        throw ParseError(ErrorKind::SyntaxError, "session must start with 'vars:'", line_no,
                         static_cast<int>(first), "'vars:'");
      auto toks = lex(body, line_no, body_offset);
      std::vector<std::string> xs;
      for (const auto& t : toks) {
        if (t.kind == Tok::End) break;
        if (t.kind != Tok::Ident)
          throw ParseError(ErrorKind::SyntaxError, "expected a variable name", line_no, t.column, "identifier");
        xs.push_back(t.text);
      }
      if (xs.empty())
        throw ParseError(ErrorKind::SyntaxError, "expected at least one variable", line_no, toks[0].column,
                         "identifier");
      std::vector<std::string> ys;
      for (const auto& x : xs) ys.push_back(!x.empty() && x[0] == 'x' ? "y" + x.substr(1) : "y_" + x);
      try {
        s.space_ = std::make_shared<VarSpace>(xs, ys);
      } catch (const Error& e) {
        throw ParseError(ErrorKind::DuplicateName, e.what(), line_no, body_offset);
      }
      reserved = s.space_->names();
      for (int i = 0; i < s.n(); ++i) {
        reserved.push_back(s.d_name(i));
        reserved.push_back(s.dx_name(i));
      }
      have_vars = true;
      continue;
    }

    if (key == "field" && !s.field_ && s.objects_.empty()) {
      auto toks = lex(body, line_no, body_offset);
      if (toks.size() < 3 || toks[0].kind != Tok::Ident || toks[1].kind != Tok::Ident || toks[1].text != "where")
        throw ParseError(ErrorKind::SyntaxError, "expected 'field: a where <poly> = 0'", line_no,
                         toks[0].column, "'<name> where'");
      std::string gen = toks[0].text;
      if (std::find(reserved.begin(), reserved.end(), gen) != reserved.end())
        throw ParseError(ErrorKind::DuplicateName, "generator name clashes with a variable", line_no,
                         toks[0].column);
      std::vector<Token> lhs, rhs;
      bool seen_eq = false;
      for (size_t k = 2; k < toks.size(); ++k) {
        if (toks[k].kind == Tok::Equals && !seen_eq) {
          seen_eq = true;
          continue;
        }
        if (toks[k].kind == Tok::End) break;
        (seen_eq ? rhs : lhs).push_back(toks[k]);
      }
      if (!seen_eq)
        throw ParseError(ErrorKind::SyntaxError, "expected '='", line_no, toks.back().column, "'='");
      auto parse_side = [&](std::vector<Token> side, int end_col) {
        side.push_back({Tok::End, "", end_col});
        Parser p(s, side, line_no);
        p.set_univariate(VarSpace::plain({gen}));
        return p.parse_all().poly;
      };
      MultiPoly m = parse_side(lhs, toks.back().column) - parse_side(rhs, toks.back().column);
      int d = m.total_degree();
      if (d < 1)
        throw ParseError(ErrorKind::InvalidArgument, "minimal polynomial must have positive degree", line_no,
                         toks[0].column);
      qpoly::Poly mp(d + 1, Rational(0));
      for (const auto& [e, c] : m.terms()) {
        if (!c.is_rational())
          throw ParseError(ErrorKind::InvalidArgument, "minimal polynomial must have rational coefficients",
                           line_no, toks[0].column);
        mp[e[0]] = c.rational();
      }
      mp = qpoly::monic(mp);
      try {
        s.field_ = make_number_field(gen, mp, assume_irreducible);
      } catch (const Error& e) {
        throw ParseError(e.kind(), e.what(), line_no, toks[0].column);
      }
      reserved.push_back(gen);
      continue;
    }

    if (std::find(reserved.begin(), reserved.end(), key) != reserved.end() || key == "vars" ||
        key == "field" || key == "ideal" || key == "charpoly" || s.objects_.count(key))
      throw ParseError(ErrorKind::DuplicateName, "name '" + key + "' is already in use", line_no,
                       static_cast<int>(first));
    auto toks = lex(body, line_no, body_offset);
    Parser p(s, toks, line_no);
    Value v;
    try {
      v = p.parse_all();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.kind(), e.what(), line_no, toks[0].column);
    }
    s.objects_.emplace(key, std::move(v));
    s.order_.push_back(key);
  }
  if (!have_vars) throw ParseError(ErrorKind::SyntaxError, "missing 'vars:' header", line_no + 1, 0, "'vars:'");
  return s;
}

Value Session::evaluate(const std::string& expr) const {
  auto toks = lex(expr, 1, 0);
  Parser p(*this, toks, 1);
  try {
    return p.parse_all();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.kind(), e.what(), 1, 0);
  }
}

std::string Session::print(const Value& v) const {
  switch (v.kind) {
    case Value::Kind::Poly: return v.poly.to_string();
    case Value::Kind::Form: return v.form.to_string();
    case Value::Kind::Operator: return v.op.to_string(space_->x_vars());
    case Value::Kind::Ideal:
    case Value::Kind::List: {
      std::string out = v.kind == Value::Kind::Ideal ? "ideal(" : "[";
      for (size_t i = 0; i < v.items.size(); ++i) out += (i ? ", " : "") + print(v.items[i]);
      return out + (v.kind == Value::Kind::Ideal ? ")" : "]");
    }
  }
  return "";
}

std::string Session::print() const {
  std::string out = "vars:";
  for (const auto& x : space_->x_vars()) out += " " + x;
  out += "\n";
  if (field_) {
    qpoly::Poly mp = field_->min_poly();
    out += "field: " + field_->name() + " where " + qpoly::to_string(mp, field_->name()) + " = 0\n";
  }
  for (const auto& name : order_) out += name + ": " + print(objects_.at(name)) + "\n";
  return out;
}

VectorField Session::as_field(const Value& v) const {
  int n = this->n();
  VectorField f{space_, std::vector<MultiPoly>(n, MultiPoly(space_))};
  if (v.kind == Value::Kind::List) {
    if (static_cast<int>(v.items.size()) != n)
      raise(ErrorKind::NotAVectorField, "vector field needs " + std::to_string(n) + " components");
    for (int i = 0; i < n; ++i) f.components[i] = as_poly(v.items[i]);
    return f;
  }
  if (v.kind != Value::Kind::Operator)
    raise(ErrorKind::NotAVectorField, "expected a vector field, got a " + v.kind_name());
  for (const auto& [k, c] : v.op.terms()) {
    if (total_degree(k.second) != 1)
      raise(ErrorKind::NotAVectorField, "vector fields are first-order operators without a constant part");
    int i = 0;
    while (k.second[i] == 0) ++i;
    Exponent e(space_->size(), 0);
    std::copy(k.first.begin(), k.first.end(), e.begin());
    f.components[i].add_term(e, c);
  }
  return f;
}

MultiPoly Session::as_poly(const Value& v) const {
  if (v.kind == Value::Kind::Poly) return v.poly;
  if (v.kind == Value::Kind::Operator) {
    MultiPoly p(space_);
    for (const auto& [k, c] : v.op.terms()) {
      if (total_degree(k.second) != 0) raise(ErrorKind::InvalidArgument, "expected a polynomial, got an operator");
      Exponent e(space_->size(), 0);
      std::copy(k.first.begin(), k.first.end(), e.begin());
      p.add_term(e, c);
    }
    return p;
  }
  raise(ErrorKind::InvalidArgument, "expected a polynomial, got a " + v.kind_name());
}

Ideal Session::as_ideal(const Value& v) const {
  std::vector<MultiPoly> gens;
  if (v.kind == Value::Kind::Ideal || v.kind == Value::Kind::List) {
    for (const auto& it : v.items) gens.push_back(as_poly(it));
  } else {
    gens.push_back(as_poly(v));
  }
  return Ideal(space_, gens);
}

PolyForm Session::as_form(const Value& v) const {
  if (v.kind == Value::Kind::Form) return v.form;
  raise(ErrorKind::InvalidArgument, "expected a differential form, got a " + v.kind_name());
}

WeylOperator Session::as_operator(const Value& v) const {
  if (v.kind == Value::Kind::Operator) return v.op;
  if (v.kind == Value::Kind::Poly) {
    WeylOperator w(n());
    for (const auto& [e, c] : v.poly.terms()) {
      for (size_t k = n(); k < e.size(); ++k)
        if (e[k] != 0) raise(ErrorKind::MixedContext, "y-variables cannot appear in an operator");
      w.add_term(Exponent(e.begin(), e.begin() + n()), Exponent(n(), 0), c);
    }
    return w;
  }
  raise(ErrorKind::InvalidArgument, "expected an operator, got a " + v.kind_name());
}

std::vector<Scalar> Session::as_point(const Value& v) const {
  if (v.kind != Value::Kind::List && v.kind != Value::Kind::Ideal)
    raise(ErrorKind::InvalidArgument, "expected a point [c1, ..., cn]");
  std::vector<Scalar> out;
  for (const auto& it : v.items) {
    MultiPoly p = as_poly(it);
    if (!p.is_constant()) raise(ErrorKind::InvalidArgument, "point coordinates must be constants");
    out.push_back(p.constant_term());
  }
  return out;
}

std::vector<MultiPoly> Session::as_poly_list(const Value& v) const {
  if (v.kind != Value::Kind::List && v.kind != Value::Kind::Ideal)
    raise(ErrorKind::InvalidArgument, "expected a list [p0, ..., pk]");
  std::vector<MultiPoly> out;
  for (const auto& it : v.items) out.push_back(as_poly(it));
  return out;
}

std::string Session::default_field_name(const std::string& requested) const {
  if (!requested.empty()) {
    get(requested);
    return requested;
  }
  if (has("xi")) return "xi";
  for (const auto& name : order_) {
    const Value& v = objects_.at(name);
    if (v.kind != Value::Kind::Operator || v.op.is_zero()) continue;
    bool field = std::all_of(v.op.terms().begin(), v.op.terms().end(),
                             [](const auto& t) { return total_degree(t.first.second) == 1; });
    if (field) return name;
  }
  raise(ErrorKind::UnknownName, "no vector field declared (use --xi NAME)");
}

}  // namespace folichar
