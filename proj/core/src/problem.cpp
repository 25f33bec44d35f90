#include "igsys/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace igsys {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Number, Interval, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool intervalChar(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/' || c == '.' || c == ' ' ||
         c == '\t' || c == 'i' || c == 'n' || c == 'f' || c == 'o';
}

bool looksLikeEndpoints(std::string_view body) {
  std::size_t start = 0;
  for (;;) {
    const auto comma = body.find(',', start);
    auto part = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const bool digit = std::any_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!digit && part.find("inf") == std::string_view::npos && part.find("oo") == std::string_view::npos) return false;
    if (comma == std::string_view::npos) return true;
    start = comma + 1;
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (c == '[' || c == '(') {
      // An interval literal is a bracket, two endpoints and a closing bracket
      // with nothing else inside.
      std::size_t j = i + 1, commas = 0;
      while (j < text.size() && (intervalChar(text[j]) || text[j] == ',')) commas += text[j++] == ',';
      const bool closes = j < text.size() && (text[j] == ']' || text[j] == ')');
      if (commas >= 1 && closes && looksLikeEndpoints(text.substr(i + 1, j - i - 1))) {
        out.push_back({Tok::Interval, std::string(text.substr(i, j + 1 - i)), line, col});
        advance(j + 1 - i);
      } else if (c == '[') {
        throw ParseError("malformed interval", line, col);
      } else {
        out.push_back({Tok::Symbol, "(", line, col});
        advance(1);
      }
    } else if (std::string_view("+-*/^),;<>").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

Interval intervalFromToken(const Token& t) {
  try {
    return parseInterval(t.text);
  } catch (const MathError& e) {
    throw ParseError(e.what(), t.line, t.column);
  }
}

Rational numberFromToken(const Token& t) {
  try {
    return parseRational(t.text);
  } catch (const MathError& e) {
    throw ParseError(e.what(), t.line, t.column);
  }
}

// ---------------------------------------------------------------------------
// Expressions

// Exact part plus terms carrying an interval coefficient.
struct Value {
  Polynomial exact;
  std::vector<IntervalTerm> intervals;
};

class ExprParser {
 public:
  ExprParser(std::span<const Token> toks, RingPtr ring) : toks_(toks), ring_(std::move(ring)) {}

  Value parseAll() {
    Value v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool isSymbol(const char* s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
  [[noreturn]] static void failAt(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

  Value constant(const Rational& c) const { return {Polynomial::constant(ring_, c), {}}; }

  Value expr() {
    bool negative = false;
    if (isSymbol("-") || isSymbol("+")) negative = take().text == "-";
    Value acc = term();
    if (negative) acc = scaled(acc, Rational(-1));
    while (isSymbol("+") || isSymbol("-")) {
      const bool minus = take().text == "-";
      Value rhs = term();
      if (minus) rhs = scaled(rhs, Rational(-1));
      acc.exact += rhs.exact;
      for (auto& t : rhs.intervals) acc.intervals.push_back(std::move(t));
    }
    return acc;
  }

  Value term() {
    Value acc = power();
    while (isSymbol("*") || isSymbol("/")) {
      const Token op = take();
      const Token at = peek();
      Value rhs = power();
      if (op.text == "/") {
        if (!rhs.intervals.empty() || !rhs.exact.isConstant() || rhs.exact.isZero())
          failAt(at, "division is only by a nonzero rational constant");
        acc = scaled(acc, 1 / rhs.exact.leadingCoefficient());
      } else {
        acc = multiply(acc, rhs, at);
      }
    }
    return acc;
  }

  Value power() {
    const Token start = peek();
    Value base = atom();
    if (!isSymbol("^")) return base;
    take();
    if (peek().kind != Tok::Number || peek().text.find('.') != std::string::npos) fail("exponent must be an integer");
    const unsigned long e = std::stoul(take().text);
    if (!base.intervals.empty() && e != 1) failAt(start, "interval coefficients cannot be raised to a power");
    Value out = constant(Rational(1));
    for (unsigned long k = 0; k < e; ++k) out.exact = out.exact * base.exact;
    if (e == 1) return base;
    return out;
  }

  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        take();
        return constant(numberFromToken(t));
      case Tok::Interval: {
        take();
        const Interval iv = intervalFromToken(t);
        if (iv.isDegenerate()) return constant(iv.lo().value());
        return {Polynomial(ring_), {{iv, Monomial(ring_->numVars())}}};
      }
      case Tok::Ident: {
        take();
        const auto idx = ring_->indexOf(t.text);
        if (!idx) failAt(t, "unknown identifier '" + t.text + "'");
        return {Polynomial::variable(ring_, *idx), {}};
      }
      case Tok::Symbol:
        if (t.text == "(") {
          take();
          Value v = expr();
          if (!isSymbol(")")) fail("expected ')'");
          take();
          return v;
        }
        if (t.text == "-") {
          take();
          return scaled(power(), Rational(-1));
        }
        break;
      case Tok::End:
        fail("unexpected end of expression");
    }
    fail("unexpected '" + t.text + "'");
  }

  static Value scaled(Value v, const Rational& c) {
    v.exact *= c;
    for (auto& t : v.intervals) t.coef = scale(t.coef, c);
    return v;
  }

  Value multiply(const Value& a, const Value& b, const Token& at) const {
    if (!a.intervals.empty() && !b.intervals.empty()) failAt(at, "product of two interval coefficients");
    if (b.intervals.empty() && a.intervals.empty()) return {a.exact * b.exact, {}};
    const Value& iv = a.intervals.empty() ? b : a;
    const Value& ex = a.intervals.empty() ? a : b;
    Value out{a.exact * b.exact, {}};
    if (ex.exact.isZero()) return out;
    if (ex.exact.size() != 1) failAt(at, "an interval coefficient may only multiply a single term");
    const auto& t = ex.exact.terms()[0];
    for (const auto& it : iv.intervals) out.intervals.push_back({scale(it.coef, t.coef), it.monomial * t.monomial});
    return out;
  }

  std::span<const Token> toks_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

IntervalPolynomial toIntervalPolynomial(const Value& v, const RingPtr& ring) {
  std::vector<std::pair<Monomial, Interval>> acc;
  auto addTo = [&](const Monomial& m, const Interval& c) {
    for (auto& [mm, cc] : acc)
      if (mm == m) {
        cc = add(cc, c);
        return;
      }
    acc.emplace_back(m, c);
  };
  for (const auto& t : v.exact.terms()) addTo(t.monomial, Interval(t.coef));
  for (const auto& t : v.intervals) addTo(t.monomial, t.coef);
  std::vector<IntervalTerm> terms;
  for (auto& [m, c] : acc) terms.push_back({c, m});
  return IntervalPolynomial(ring, std::move(terms));
}

Value parseValue(std::span<const Token> toks, const RingPtr& ring) {
  std::vector<Token> withEnd(toks.begin(), toks.end());
  const Token last = toks.empty() ? Token{Tok::End, "", 1, 1} : toks.back();
  withEnd.push_back({Tok::End, "", last.line, last.column + last.text.size()});
  ExprParser p(withEnd, ring);
  return p.parseAll();
}

Polynomial exactFrom(std::span<const Token> toks, const RingPtr& ring) {
  Value v = parseValue(toks, ring);
  if (!v.intervals.empty()) {
    const auto& t = toks.front();
    throw ParseError("interval coefficient not allowed here", t.line, t.column);
  }
  return v.exact;
}

// ---------------------------------------------------------------------------
// Orders

OrderSpec orderFrom(std::span<const Token> toks, const Token& where) {
  if (toks.empty() || toks[0].kind != Tok::Ident) throw ParseError("expected lex or grevlex", where.line, where.column);
  OrderSpec spec;
  if (toks[0].text == "lex") {
    spec.kind = OrderKind::Lex;
  } else if (toks[0].text == "grevlex") {
    spec.kind = OrderKind::Grevlex;
  } else {
    throw ParseError("unknown order '" + toks[0].text + "'", toks[0].line, toks[0].column);
  }
  if (toks.size() == 1) return spec;
  if (toks[1].text != "(" || toks.back().text != ")") throw ParseError("expected '(' names ')'", toks[1].line, toks[1].column);
  char sep = 0;
  for (std::size_t k = 2; k + 1 < toks.size(); ++k) {
    const auto& t = toks[k];
    if ((k % 2) == 0) {
      if (t.kind != Tok::Ident) throw ParseError("expected a name", t.line, t.column);
      spec.names.push_back(t.text);
    } else {
      if (t.text != ">" && t.text != "<" && t.text != ",") throw ParseError("expected '>' or '<'", t.line, t.column);
      const char s = t.text[0] == ',' ? '>' : t.text[0];
      if (sep && s != sep) throw ParseError("mixed '<' and '>' in order", t.line, t.column);
      sep = s;
    }
  }
  if (toks.size() % 2 == 1) throw ParseError("dangling separator in order", toks.back().line, toks.back().column);
  if (sep == '<') std::reverse(spec.names.begin(), spec.names.end());
  return spec;
}

MonomialOrder makeOrder(OrderKind kind, std::size_t n) {
  return kind == OrderKind::Lex ? MonomialOrder::lex(n) : MonomialOrder::grevlex(n);
}

// Reorders declared names by the order spec; a spec without names keeps the
// declaration order.
std::vector<std::string> applyOrder(const std::vector<std::string>& declared, OrderSpec& spec, const Token& where) {
  if (spec.names.empty()) {
    spec.names = declared;
    return declared;
  }
  std::vector<std::string> a = declared, b = spec.names;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw ParseError("order must list exactly the declared names", where.line, where.column);
  return spec.names;
}

}  // namespace

MonomialOrder OrderSpec::order() const { return makeOrder(kind, names.size()); }

std::string OrderSpec::toString() const {
  std::string s = kind == OrderKind::Lex ? "lex" : "grevlex";
  if (names.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += " > ";
    s += names[i];
  }
  return s + ")";
}

OrderSpec parseOrderSpec(std::string_view text) {
  auto toks = lex(text);
  toks.pop_back();
  const Token where{Tok::End, "", 1, 1};
  return orderFrom(toks, where);
}

// ---------------------------------------------------------------------------
// Problem files

namespace {

struct Statement {
  Token head;
  std::vector<Token> body;
};

std::vector<std::string> nameList(const Statement& s) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.body.size(); ++k) {
    const auto& t = s.body[k];
    if (k % 2 == 0) {
      if (t.kind != Tok::Ident) throw ParseError("expected a name", t.line, t.column);
      out.push_back(t.text);
    } else if (t.text != ",") {
      throw ParseError("expected ','", t.line, t.column);
    }
  }
  if (out.empty()) throw ParseError("empty name list", s.head.line, s.head.column);
  if (s.body.size() % 2 == 0) throw ParseError("dangling ','", s.body.back().line, s.body.back().column);
  return out;
}

NamedRange rangeFrom(const Statement& s) {
  const auto& b = s.body;
  if (b.size() != 3 || b[0].kind != Tok::Ident || b[1].text != "in" || b[2].kind != Tok::Interval)
    throw ParseError("expected 'NAME in INTERVAL'", s.head.line, s.head.column);
  return {b[0].text, intervalFromToken(b[2])};
}

void checkUnique(const std::vector<std::string>& names, const Statement& s, std::set<std::string>& seen) {
  for (const auto& n : names)
    if (!seen.insert(n).second) throw ParseError("duplicate name '" + n + "'", s.head.line, s.head.column);
}

}  // namespace

ProblemFile parseProblem(std::string_view text) {
  const auto toks = lex(text);
  std::vector<Statement> statements;
  for (std::size_t i = 0; toks[i].kind != Tok::End;) {
    if (toks[i].kind != Tok::Ident) throw ParseError("expected a keyword", toks[i].line, toks[i].column);
    Statement s{toks[i], {}};
    ++i;
    while (toks[i].kind != Tok::End && !(toks[i].kind == Tok::Symbol && toks[i].text == ";")) s.body.push_back(toks[i++]);
    if (toks[i].kind == Tok::End) throw ParseError("missing ';'", toks[i].line, toks[i].column);
    ++i;
    statements.push_back(std::move(s));
  }

  ProblemFile p;
  std::set<std::string> seen;
  const Statement* orderStmt = nullptr;
  const Statement* porderStmt = nullptr;
  const Statement* divisorStmt = nullptr;
  std::vector<const Statement*> polyStmts;
  std::vector<Token> boxHeads, signHeads;
  bool haveVars = false;
  for (const auto& s : statements) {
    const auto& kw = s.head.text;
    if (kw == "vars") {
      if (haveVars) throw ParseError("variables declared twice", s.head.line, s.head.column);
      haveVars = true;
      p.variables = nameList(s);
      checkUnique(p.variables, s, seen);
    } else if (kw == "params") {
      if (!p.parameters.empty()) throw ParseError("parameters declared twice", s.head.line, s.head.column);
      p.parameters = nameList(s);
      checkUnique(p.parameters, s, seen);
    } else if (kw == "order") {
      if (orderStmt) throw ParseError("order given twice", s.head.line, s.head.column);
      orderStmt = &s;
    } else if (kw == "porder") {
      if (porderStmt) throw ParseError("porder given twice", s.head.line, s.head.column);
      porderStmt = &s;
    } else if (kw == "poly") {
      if (s.body.empty()) throw ParseError("empty polynomial", s.head.line, s.head.column);
      polyStmts.push_back(&s);
    } else if (kw == "divisor") {
      if (divisorStmt) throw ParseError("divisor given twice", s.head.line, s.head.column);
      if (s.body.empty()) throw ParseError("empty polynomial", s.head.line, s.head.column);
      divisorStmt = &s;
    } else if (kw == "schedule") {
      for (std::size_t k = 0; k < s.body.size(); ++k) {
        const auto& t = s.body[k];
        if (k % 2 == 1) {
          if (t.text != ",") throw ParseError("expected ','", t.line, t.column);
          continue;
        }
        if (t.kind != Tok::Number) throw ParseError("expected a number", t.line, t.column);
        Rational v = numberFromToken(t);
        if (k + 2 < s.body.size() && s.body[k + 1].text == "/") {
          const auto& d = s.body[k + 2];
          if (d.kind != Tok::Number) throw ParseError("expected a denominator", d.line, d.column);
          v /= numberFromToken(d);
          k += 2;
        }
        p.schedule.push_back(v);
      }
    } else if (kw == "box") {
      p.boxes.push_back(rangeFrom(s));
      boxHeads.push_back(s.head);
    } else if (kw == "sign") {
      p.signs.push_back(rangeFrom(s));
      signHeads.push_back(s.head);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", s.head.line, s.head.column);
    }
  }
  if (!haveVars) throw ParseError("missing 'vars' declaration", 1, 1);

  if (orderStmt) p.order = orderFrom(orderStmt->body, orderStmt->head);
  p.variables = applyOrder(p.variables, p.order, orderStmt ? orderStmt->head : Token{Tok::End, "", 1, 1});
  p.ring = makeRing(p.variables, p.order.order());
  if (porderStmt) {
    if (p.parameters.empty()) throw ParseError("porder without params", porderStmt->head.line, porderStmt->head.column);
    p.parameterOrder = orderFrom(porderStmt->body, porderStmt->head);
  }
  if (!p.parameters.empty()) {
    p.parameters =
        applyOrder(p.parameters, p.parameterOrder, porderStmt ? porderStmt->head : Token{Tok::End, "", 1, 1});
    p.parametric.emplace(p.variables, p.order.order(), p.parameters, p.parameterOrder.order());
  }

  for (const auto* s : polyStmts) {
    if (p.parametric) {
      p.parametricPolys.push_back(exactFrom(s->body, p.parametric->combined()));
    } else {
      try {
        p.polys.push_back(toIntervalPolynomial(parseValue(s->body, p.ring), p.ring));
      } catch (const MathError& e) {
        throw ParseError(e.what(), s->head.line, s->head.column);
      }
    }
  }
  if (divisorStmt) p.divisor = exactFrom(divisorStmt->body, p.ring);

  for (std::size_t k = 0; k < p.boxes.size(); ++k)
    if (std::find(p.parameters.begin(), p.parameters.end(), p.boxes[k].name) == p.parameters.end())
      throw ParseError("box for undeclared parameter '" + p.boxes[k].name + "'", boxHeads[k].line, boxHeads[k].column);
  for (std::size_t k = 0; k < p.signs.size(); ++k)
    if (!p.ring->indexOf(p.signs[k].name))
      throw ParseError("sign constraint on undeclared variable '" + p.signs[k].name + "'", signHeads[k].line,
                       signHeads[k].column);
  return p;
}

ProblemFile loadProblem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseProblem(ss.str());
}

std::vector<Polynomial> ProblemFile::exactPolys() const {
  if (isParametric()) return parametricPolys;
  std::vector<Polynomial> out;
  for (const auto& f : polys) {
    if (!f.isExact()) throw MathError("polynomial " + f.toString() + " has interval coefficients");
    std::vector<Rational> choice;
    for (const auto& t : f.terms()) choice.push_back(t.coef.lo().value());
    out.push_back(f.familyMember(choice));
  }
  return out;
}

ProblemFile ProblemFile::withOrder(const OrderSpec& spec) const {
  ProblemFile q = *this;
  q.order = spec;
  if (q.order.names.empty()) q.order.names = variables;
  return parseProblem(renderProblem(q));
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.variables == b.variables && a.order == b.order && a.parameters == b.parameters &&
         (a.parameters.empty() || a.parameterOrder == b.parameterOrder) && a.polys == b.polys &&
         a.parametricPolys == b.parametricPolys && a.divisor == b.divisor && a.schedule == b.schedule &&
         a.boxes == b.boxes && a.signs == b.signs;
}

std::string renderProblem(const ProblemFile& p) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::string out = "vars " + join(p.variables) + ";\n";
  out += "order " + p.order.toString() + ";\n";
  if (!p.parameters.empty()) {
    out += "params " + join(p.parameters) + ";\n";
    out += "porder " + p.parameterOrder.toString() + ";\n";
  }
  for (const auto& f : p.polys) out += "poly " + f.toString() + ";\n";
  for (const auto& f : p.parametricPolys) out += "poly " + f.toString() + ";\n";
  if (p.divisor) out += "divisor " + p.divisor->toString() + ";\n";
  if (!p.schedule.empty()) {
    std::vector<std::string> v;
    for (const auto& e : p.schedule) v.push_back(toString(e));
    out += "schedule " + join(v) + ";\n";
  }
  for (const auto& b : p.boxes) out += "box " + b.name + " in " + toString(b.range) + ";\n";
  for (const auto& s : p.signs) out += "sign " + s.name + " in " + toString(s.range) + ";\n";
  return out;
}

Polynomial parsePolynomial(std::string_view text, const RingPtr& ring) {
  auto toks = lex(text);
  toks.pop_back();
  if (toks.empty()) throw ParseError("empty polynomial", 1, 1);
  return exactFrom(toks, ring);
}

IntervalPolynomial parseIntervalPolynomial(std::string_view text, const RingPtr& ring) {
  auto toks = lex(text);
  toks.pop_back();
  if (toks.empty()) throw ParseError("empty polynomial", 1, 1);
  try {
    return toIntervalPolynomial(parseValue(toks, ring), ring);
  } catch (const MathError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace igsys
