#include "elias/expr.hpp"

#include <algorithm>
#include <cctype>

namespace elias {

namespace {

// shared cursor over whitespace-insensitive text
struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw ParseError("expected an identifier", pos);
    return s.substr(start, pos - start);
  }
  Z integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos) throw ParseError("expected an integer", start);
    return std::stoll(s.substr(start, pos - start));
  }
  bool at_integer() {
    skip_ws();
    std::size_t p = pos;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
  }
};

IdealExpr parse_expr(Cursor& c);

IdealExpr parse_call(Cursor& c, IdealExpr::Node node, int arity) {
  IdealExpr e;
  e.node = node;
  c.expect('(');
  for (int i = 0; i < arity; ++i) {
    if (i) c.expect(',');
    e.children.push_back(parse_expr(c));
  }
  c.expect(')');
  return e;
}

IdealExpr parse_expr(Cursor& c) {
  std::size_t at = c.pos;
  std::string name = c.ident();
  IdealExpr e;
  if (name == "R") {
    e.node = IdealExpr::Node::Unit;
  } else if (name == "m") {
    e.node = IdealExpr::Node::Maximal;
  } else if (name == "mpow") {
    c.expect(':');
    e.node = IdealExpr::Node::MPow;
    e.power = c.integer();
    if (e.power < 0) throw ParseError("mpow needs a non-negative power", at);
  } else if (name == "gens") {
    c.expect(':');
    e.node = IdealExpr::Node::Gens;
    e.values.push_back(c.integer());
    while (true) {
      std::size_t save = c.pos;
      if (!c.accept(',')) break;
      if (!c.at_integer()) {  // the comma belongs to an enclosing call
        c.pos = save;
        break;
      }
      e.values.push_back(c.integer());
    }
  } else if (name == "canonical") {
    e.node = IdealExpr::Node::Canonical;
  } else if (name == "conductor") {
    e.node = IdealExpr::Node::Conductor;
  } else if (name == "trace") {
    e = parse_call(c, IdealExpr::Node::Trace, 1);
  } else if (name == "inverse") {
    e = parse_call(c, IdealExpr::Node::Inverse, 1);
  } else if (name == "closure") {
    e = parse_call(c, IdealExpr::Node::Closure, 1);
  } else if (name == "colon") {
    e = parse_call(c, IdealExpr::Node::Colon, 2);
  } else if (name == "product") {
    e = parse_call(c, IdealExpr::Node::Product, 2);
  } else if (name == "sum") {
    e = parse_call(c, IdealExpr::Node::Sum, 2);
  } else {
    throw ParseError("unknown ideal expression '" + name + "'", at);
  }
  return e;
}

}  // namespace

IdealExpr parse_ideal_expr(const std::string& text) {
  Cursor c{text};
  IdealExpr e = parse_expr(c);
  if (!c.done()) throw ParseError("trailing input after ideal expression", c.pos);
  return e;
}

ValueIdeal eval_ideal_expr(const IdealExpr& e, const SemigroupPtr& H) {
  using Node = IdealExpr::Node;
  switch (e.node) {
    case Node::Unit:
      return ValueIdeal::unit(H);
    case Node::Maximal:
      return ValueIdeal::maximal(H);
    case Node::MPow:
      return ValueIdeal::power_of_maximal(H, e.power);
    case Node::Gens:
      return ValueIdeal::from_generators(H, e.values);
    case Node::Canonical:
      return ValueIdeal::canonical(H);
    case Node::Conductor:
      return ValueIdeal::conductor(H);
    case Node::Trace:
      return trace_ideal(eval_ideal_expr(e.children[0], H));
    case Node::Inverse:
      return inverse(eval_ideal_expr(e.children[0], H));
    case Node::Closure:
      return integral_closure(eval_ideal_expr(e.children[0], H));
    case Node::Colon:
      return colon(eval_ideal_expr(e.children[0], H), eval_ideal_expr(e.children[1], H));
    case Node::Product:
      return product(eval_ideal_expr(e.children[0], H), eval_ideal_expr(e.children[1], H));
    case Node::Sum:
      return sum(eval_ideal_expr(e.children[0], H), eval_ideal_expr(e.children[1], H));
  }
  throw ParseError("unreachable ideal expression node", 0);
}

ValueIdeal eval_ideal_expr(const std::string& text, const SemigroupPtr& H) {
  return eval_ideal_expr(parse_ideal_expr(text), H);
}

namespace {

Rational parse_rational(Cursor& c) {
  Z num = c.integer();
  if (c.accept('/')) {
    Z den = c.integer();
    if (den == 0) throw ParseError("zero denominator", c.pos);
    return linalg::make_rational(num, den);
  }
  return Rational(num);
}

// one term: [coeff '*']? var ['^' exp]  or a bare coefficient
void parse_term(Cursor& c, const BranchedRingModel& model, SeriesElement& out, bool negate) {
  Rational coeff = 1;
  bool have_coeff = false;
  if (c.at_integer()) {
    coeff = parse_rational(c);
    have_coeff = true;
    if (!c.accept('*')) {
      // bare constant term
      if (negate) coeff = -coeff;
      if (model.kind() == BranchedRingModel::Kind::Semigroup) {
        out.set(0, 0, out.get(0, 0) + coeff);
      } else {
        for (int b = 0; b < model.branches(); ++b) out.set(b, 0, out.get(b, 0) + coeff);
      }
      return;
    }
  }
  std::size_t at = c.pos;
  std::string var = c.ident();
  int branch = 0;
  if (model.kind() == BranchedRingModel::Kind::Semigroup) {
    if (var != "t") throw ParseError("semigroup series use the variable 't'", at);
  } else {
    if (var.size() != 1 || var[0] < 'a' || var[0] >= 'a' + model.branches())
      throw ParseError("unknown branch variable '" + var + "'", at);
    branch = var[0] - 'a';
  }
  Z exp = 1;
  if (c.accept('^')) exp = c.integer();
  if (exp < 0) throw ParseError("negative exponents are not ring elements", at);
  if (exp >= model.truncation()) throw ParseError("exponent exceeds the truncation order", at);
  if (negate) coeff = -coeff;
  (void)have_coeff;
  out.set(branch, exp, out.get(branch, exp) + coeff);
}

SeriesElement parse_series_at(Cursor& c, const BranchedRingModel& model) {
  SeriesElement f(model.branches());
  bool neg = c.accept('-');
  if (!neg) c.accept('+');
  parse_term(c, model, f, neg);
  while (true) {
    if (c.accept('+')) {
      parse_term(c, model, f, false);
    } else if (c.accept('-')) {
      parse_term(c, model, f, true);
    } else {
      break;
    }
  }
  return f;
}

}  // namespace

SeriesElement parse_series(const std::string& text, const BranchedRingModel& model) {
  Cursor c{text};
  SeriesElement f = parse_series_at(c, model);
  if (!c.done()) throw ParseError("trailing input after series", c.pos);
  return f;
}

std::vector<SeriesElement> parse_series_list(const std::string& text,
                                             const BranchedRingModel& model) {
  Cursor c{text};
  std::vector<SeriesElement> out;
  out.push_back(parse_series_at(c, model));
  while (c.accept(',')) out.push_back(parse_series_at(c, model));
  if (!c.done()) throw ParseError("trailing input after series list", c.pos);
  return out;
}

RingSpec parse_ring_spec(const std::string& text) {
  RingSpec spec;
  Cursor c{text};
  if (c.peek() == 'a') {
    std::size_t at = c.pos;
    std::string name = c.ident();
    if (name != "axis") throw ParseError("unknown ring spec '" + name + "'", at);
    c.expect(':');
    Z n = c.integer();
    if (n < 2 || n > 26) throw ParseError("axis ring needs 2..26 branches", at);
    if (!c.done()) throw ParseError("trailing input after ring spec", c.pos);
    spec.axis = true;
    spec.branches = static_cast<int>(n);
    return spec;
  }
  spec.gens.push_back(c.integer());
  while (c.accept(',')) spec.gens.push_back(c.integer());
  if (!c.done()) throw ParseError("trailing input after ring spec", c.pos);
  return spec;
}

std::vector<SeriesElement> parse_axis_ideal(const std::string& text,
                                            const BranchedRingModel& model) {
  Cursor c{text};
  std::size_t at = c.pos;
  std::string name = c.ident();
  if (name != "gens") throw ParseError("axis ideals use the restricted grammar 'gens: ...'", at);
  c.expect(':');
  std::vector<SeriesElement> out;
  out.push_back(parse_series_at(c, model));
  while (c.accept(',')) out.push_back(parse_series_at(c, model));
  if (!c.done()) throw ParseError("trailing input after axis ideal", c.pos);
  return out;
}

}  // namespace elias
