#pragma once

#include <map>
#include <string>
#include <vector>

#include "folichar/error.hpp"
#include "folichar/exterior.hpp"
#include "folichar/groebner.hpp"
#include "folichar/weyl.hpp"

namespace folichar {

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& msg, int line, int column, std::string expected = {})
      : Error(kind, msg), line_(line), column_(column), expected_(std::move(expected)) {}
  int line() const { return line_; }      // 1-based
  int column() const { return column_; }  // 0-based
  const std::string& expected() const { return expected_; }

 private:
  int line_, column_;
  std::string expected_;
};

// A parsed expression value.
struct Value {
  enum class Kind { Poly, Form, Operator, Ideal, List };
  Kind kind = Kind::Poly;
  MultiPoly poly;
  PolyForm form;
  WeylOperator op;
  std::vector<Value> items;  // Ideal / List

  static Value of(MultiPoly p);
  static Value of(PolyForm f);
  static Value of(WeylOperator o);

  std::string kind_name() const;
  bool operator==(const Value& o) const;
};

class Session {
 public:
  // Parses a whole session file. Raises ParseError (SyntaxError,
  // UnknownVariable, UnknownName, MixedContext, DuplicateName).
  static Session parse(const std::string& text, bool assume_irreducible = false);

  const SpacePtr& space() const { return space_; }  // doubled (x, y)
  const FieldPtr& field() const { return field_; }
  int n() const { return space_->x_count(); }
  const std::vector<std::string>& names() const { return order_; }
  bool has(const std::string& name) const { return objects_.count(name) != 0; }
  const Value& get(const std::string& name) const;

  // Parses one expression against this session (names resolve to declarations).
  Value evaluate(const std::string& expr) const;

  // Canonical text that parses back to an equal value.
  std::string print(const Value& v) const;
  // The whole session in canonical form.
  std::string print() const;

  // Conversions used by commands; raise InvalidArgument / NotAVectorField.
  VectorField as_field(const Value& v) const;
  MultiPoly as_poly(const Value& v) const;
  Ideal as_ideal(const Value& v) const;
  PolyForm as_form(const Value& v) const;
  WeylOperator as_operator(const Value& v) const;
  std::vector<Scalar> as_point(const Value& v) const;
  std::vector<MultiPoly> as_poly_list(const Value& v) const;

  // The declaration to use as xi: the named one, else "xi", else the first
  // declared vector field.
  std::string default_field_name(const std::string& requested = {}) const;

  // Strings for variables: x-names, y-names, operator and differential names.
  std::string d_name(int i) const;
  std::string dx_name(int v) const;

 private:
  friend class Parser;
  SpacePtr space_;
  FieldPtr field_;
  std::string field_decl_;  // canonical "a where ... = 0"
  std::vector<std::string> order_;
  std::map<std::string, Value> objects_;
};

}  // namespace folichar
