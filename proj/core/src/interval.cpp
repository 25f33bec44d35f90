#include "igsys/interval.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace igsys {

// ---------------------------------------------------------------------------
// ExtRational

const Rational& ExtRational::value() const {
  if (!isFinite()) throw MathError("value() of an infinite extended rational");
  return value_;
}

int ExtRational::sign() const {
  switch (kind_) {
    case Kind::NegInf: return -1;
    case Kind::PosInf: return 1;
    case Kind::Finite: return sgn(value_);
  }
  return 0;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.isFinite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.isFinite()) return std::strong_ordering::equal;
  return compareRational(a.value_, b.value_);
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return posInf();
    case Kind::PosInf: return negInf();
    case Kind::Finite: return ExtRational(Rational(-value_));
  }
  return *this;
}

std::optional<ExtRational> extAdd(const ExtRational& a, const ExtRational& b) {
  if (a.isFinite() && b.isFinite()) return ExtRational(Rational(a.value() + b.value()));
  if (a.isFinite()) return b;
  if (b.isFinite()) return a;
  if (a.kind() != b.kind()) return std::nullopt;
  return a;
}

std::optional<ExtRational> extMul(const ExtRational& a, const ExtRational& b) {
  if (a.isFinite() && b.isFinite()) return ExtRational(Rational(a.value() * b.value()));
  const int s = a.sign() * b.sign();
  if (s == 0) return std::nullopt;
  return s > 0 ? ExtRational::posInf() : ExtRational::negInf();
}

ExtRational extRecip(const ExtRational& a) {
  if (!a.isFinite()) return ExtRational(Rational(0));
  if (sgn(a.value()) == 0) throw MathError("reciprocal of zero");
  return ExtRational(Rational(1 / a.value()));
}

ExtRational extPow(const ExtRational& a, unsigned n) {
  if (n == 0) return ExtRational(Rational(1));
  if (a.isFinite()) return ExtRational(ratPow(a.value(), n));
  if (a.isPosInf() || n % 2 == 0) return ExtRational::posInf();
  return ExtRational::negInf();
}

std::string toString(const ExtRational& v) {
  if (v.isNegInf()) return "-inf";
  if (v.isPosInf()) return "inf";
  return toString(v.value());
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(ExtRational lo, ExtRational hi, bool loClosed, bool hiClosed)
    : lo_(std::move(lo)), hi_(std::move(hi)), loClosed_(loClosed), hiClosed_(hiClosed) {
  if (lo_ > hi_) throw MathError("interval with lo > hi: " + toString(lo_) + " > " + toString(hi_));
  if ((!lo_.isFinite() && loClosed_) || (!hi_.isFinite() && hiClosed_))
    throw MathError("closed infinite endpoint");
  if (lo_.isPosInf() || hi_.isNegInf()) throw MathError("empty interval at infinity");
  if (lo_ == hi_ && !(loClosed_ && hiClosed_))
    throw MathError("degenerate interval must be closed on both sides");
}

Interval::Interval(const Rational& v) : lo_(v), hi_(v) {}

bool Interval::contains(const ExtRational& q) const {
  if (!q.isFinite()) return false;
  const auto lc = lo_ <=> q;
  const auto hc = q <=> hi_;
  const bool aboveLo = lc < 0 || (lc == 0 && loClosed_);
  const bool belowHi = hc < 0 || (hc == 0 && hiClosed_);
  return aboveLo && belowHi;
}

bool Interval::contains(const Rational& q) const { return contains(ExtRational(q)); }

bool Interval::isSubsetOf(const Interval& other) const {
  const auto lc = lo_ <=> other.lo_;
  const auto hc = hi_ <=> other.hi_;
  const bool loOk = lc > 0 || (lc == 0 && (!loClosed_ || other.loClosed_));
  const bool hiOk = hc < 0 || (hc == 0 && (!hiClosed_ || other.hiClosed_));
  return loOk && hiOk;
}

std::optional<Rational> Interval::width() const {
  if (!isBounded()) return std::nullopt;
  return Rational(hi_.value() - lo_.value());
}

Rational Interval::interiorPoint() const {
  if (isBounded()) return Rational((lo_.value() + hi_.value()) / 2);
  if (lo_.isFinite()) return Rational(lo_.value() + 1);
  if (hi_.isFinite()) return Rational(hi_.value() - 1);
  return Rational(0);
}

// ---------------------------------------------------------------------------
// IntervalUnion

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    const auto c = a.lo() <=> b.lo();
    if (c != 0) return c < 0;
    return a.loClosed() && !b.loClosed();
  });
  for (auto& p : parts) {
    if (parts_.empty()) {
      parts_.push_back(std::move(p));
      continue;
    }
    Interval& last = parts_.back();
    const auto c = p.lo() <=> last.hi();
    const bool touches = c < 0 || (c == 0 && (p.loClosed() || last.hiClosed()));
    if (touches) {
      last = hull(last, p);
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

bool IntervalUnion::contains(const Rational& q) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(q); });
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

Interval makeEndpoints(const std::optional<ExtRational>& lo, const std::optional<ExtRational>& hi,
                       bool loClosed, bool hiClosed) {
  if (!lo || !hi) return Interval::whole();
  return Interval(*lo, *hi, loClosed && lo->isFinite(), hiClosed && hi->isFinite());
}

}  // namespace

Interval add(const Interval& a, const Interval& b) {
  return makeEndpoints(extAdd(a.lo(), b.lo()), extAdd(a.hi(), b.hi()),
                       a.loClosed() && b.loClosed(), a.hiClosed() && b.hiClosed());
}

Interval neg(const Interval& a) { return Interval(-a.hi(), -a.lo(), a.hiClosed(), a.loClosed()); }

Interval sub(const Interval& a, const Interval& b) { return add(a, neg(b)); }

Interval mul(const Interval& a, const Interval& b) {
  struct Corner {
    ExtRational value;
    bool closed;
  };
  const std::array<std::pair<const ExtRational*, bool>, 2> ea{{{&a.lo(), a.loClosed()}, {&a.hi(), a.hiClosed()}}};
  const std::array<std::pair<const ExtRational*, bool>, 2> eb{{{&b.lo(), b.loClosed()}, {&b.hi(), b.hiClosed()}}};
  std::vector<Corner> corners;
  corners.reserve(4);
  for (const auto& [x, xc] : ea) {
    for (const auto& [y, yc] : eb) {
      auto p = extMul(*x, *y);
      if (!p) return Interval::whole();
      corners.push_back({std::move(*p), xc && yc});
    }
  }
  // A bilinear extreme attained off the corners must be 0, reached by 0 * anything.
  const bool zeroReachable = a.containsZero() || b.containsZero();
  auto closedAt = [&](const ExtRational& v) {
    if (!v.isFinite()) return false;
    if (v.sign() == 0 && zeroReachable) return true;
    return std::any_of(corners.begin(), corners.end(),
                       [&](const Corner& c) { return c.closed && c.value == v; });
  };
  ExtRational lo = corners[0].value;
  ExtRational hi = corners[0].value;
  for (const auto& c : corners) {
    if (c.value < lo) lo = c.value;
    if (c.value > hi) hi = c.value;
  }
  const bool loClosed = closedAt(lo);
  const bool hiClosed = closedAt(hi);
  return Interval(lo, hi, loClosed, hiClosed);
}

Interval div(const Interval& a, const Interval& b) {
  const bool positive = b.lo().sign() > 0 || (b.lo().sign() == 0 && !b.loClosed());
  const bool negative = b.hi().sign() < 0 || (b.hi().sign() == 0 && !b.hiClosed());
  if (!positive && !negative)
    throw MathError("division by an interval containing zero; use recip() for " + toString(b));
  auto inv = [&](const ExtRational& e) {
    if (e.isFinite() && e.sign() == 0) return positive ? ExtRational::posInf() : ExtRational::negInf();
    return extRecip(e);
  };
  const ExtRational lo = inv(b.hi());
  const ExtRational hi = inv(b.lo());
  return mul(a, Interval(lo, hi, b.hiClosed() && lo.isFinite(), b.loClosed() && hi.isFinite()));
}

Interval arith(ArithOp op, const Interval& a, const Interval& b) {
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Div: return div(a, b);
  }
  throw MathError("unknown arithmetic operation");
}

Interval scale(const Interval& a, const Rational& c) { return mul(Interval(c), a); }

IntervalUnion recip(const Interval& a) {
  if (a.isZero()) throw MathError("reciprocal of zero");
  const int ls = a.lo().sign();
  const int hs = a.hi().sign();
  auto inv = [](const ExtRational& e, bool positiveSide) {
    if (e.isFinite() && e.sign() == 0) return positiveSide ? ExtRational::posInf() : ExtRational::negInf();
    return extRecip(e);
  };
  if (!a.containsZero()) {
    const bool positive = ls >= 0;
    const ExtRational lo = inv(a.hi(), positive);
    const ExtRational hi = inv(a.lo(), positive);
    return IntervalUnion({Interval(lo, hi, a.hiClosed() && lo.isFinite(), a.loClosed() && hi.isFinite())});
  }
  if (ls == 0) {
    const ExtRational lo = extRecip(a.hi());
    return IntervalUnion({Interval(lo, ExtRational::posInf(), a.hiClosed() && lo.isFinite(), false)});
  }
  if (hs == 0) {
    const ExtRational hi = extRecip(a.lo());
    return IntervalUnion({Interval(ExtRational::negInf(), hi, false, a.loClosed() && hi.isFinite())});
  }
  const ExtRational negHi = extRecip(a.lo());
  const ExtRational posLo = extRecip(a.hi());
  return IntervalUnion({Interval(ExtRational::negInf(), negHi, false, a.loClosed() && negHi.isFinite()),
                        Interval(posLo, ExtRational::posInf(), a.hiClosed() && posLo.isFinite(), false)});
}

Interval pow(const Interval& a, unsigned n) {
  if (n == 0) return Interval(Rational(1));
  if (n == 1) return a;
  const ExtRational lo = extPow(a.lo(), n);
  const ExtRational hi = extPow(a.hi(), n);
  // Odd powers are monotone.
  if (n % 2 == 1 || a.lo().sign() >= 0) return Interval(lo, hi, a.loClosed(), a.hiClosed());
  if (a.hi().sign() <= 0) return Interval(hi, lo, a.hiClosed(), a.loClosed());
  const auto c = hi <=> lo;
  if (c < 0) return Interval(Rational(0), lo, true, a.loClosed());
  if (c > 0) return Interval(Rational(0), hi, true, a.hiClosed());
  return Interval(Rational(0), hi, true, (a.loClosed() || a.hiClosed()) && hi.isFinite());
}

Interval hull(const Interval& a, const Interval& b) {
  const auto lc = a.lo() <=> b.lo();
  const auto hc = a.hi() <=> b.hi();
  const ExtRational& lo = lc <= 0 ? a.lo() : b.lo();
  const bool loClosed = lc < 0 ? a.loClosed() : (lc > 0 ? b.loClosed() : a.loClosed() || b.loClosed());
  const ExtRational& hi = hc >= 0 ? a.hi() : b.hi();
  const bool hiClosed = hc > 0 ? a.hiClosed() : (hc < 0 ? b.hiClosed() : a.hiClosed() || b.hiClosed());
  return Interval(lo, hi, loClosed, hiClosed);
}

// ---------------------------------------------------------------------------
// Text form

std::string toString(const Interval& x) {
  std::string s;
  s += x.loClosed() ? '[' : '(';
  s += toString(x.lo());
  s += ',';
  s += toString(x.hi());
  s += x.hiClosed() ? ']' : ')';
  return s;
}

std::string toString(const IntervalUnion& u) {
  if (u.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < u.parts().size(); ++i) {
    if (i) s += " U ";
    s += toString(u.parts()[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << toString(x); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

ExtRational parseEndpoint(std::string_view text) {
  text = trim(text);
  if (text == "-inf" || text == "-oo") return ExtRational::negInf();
  if (text == "inf" || text == "+inf" || text == "oo") return ExtRational::posInf();
  return ExtRational(parseRational(text));
}

}  // namespace

Interval parseInterval(std::string_view text) {
  text = trim(text);
  if (text.size() < 5) throw MathError("malformed interval '" + std::string(text) + "'");
  const char open = text.front();
  const char close = text.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    throw MathError("malformed interval '" + std::string(text) + "'");
  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
    throw MathError("interval needs exactly two endpoints: '" + std::string(text) + "'");
  return Interval(parseEndpoint(body.substr(0, comma)), parseEndpoint(body.substr(comma + 1)), open == '[',
                  close == ']');
}

}  // namespace igsys
