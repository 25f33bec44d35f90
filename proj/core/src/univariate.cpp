#include "igsys/univariate.hpp"

#include <algorithm>
#include <cmath>

namespace igsys {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::fromPolynomial(const Polynomial& f, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.monomial.numVars(); ++i)
      if (i != var && t.monomial[i])
        throw MathError("polynomial is not univariate in " + f.ring()->names()[var] + ": " + f.toString());
    const auto e = t.monomial[var];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += t.coef;
  }
  return UPoly(std::move(c));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int UPoly::signAtInfinity(bool positive) const {
  if (c_.empty()) return 0;
  const int s = sgn(c_.back());
  return (positive || degree() % 2 == 0) ? s : -s;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r = *this;
  const Rational inv = 1 / c_.back();
  for (auto& v : r.c_) v *= inv;
  return r;
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return *this;
  Integer den = 1;
  for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  Integer g = 0;
  for (const auto& v : c_) {
    Integer s = v.get_num() * (den / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
  }
  Rational f(den, g);
  f.canonicalize();
  if (sgn(c_.back()) < 0) f = -f;
  UPoly r = *this;
  for (auto& v : r.c_) v *= f;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::string UPoly::toString(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    const bool negative = sgn(c_[i]) < 0;
    Rational mag = abs(c_[i]);
    s += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) s += igsys::toString(mag);
    if (i > 0) {
      if (mag != 1) s += '*';
      s += var;
      if (i > 1) s += '^' + std::to_string(i);
    }
  }
  return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.isZero()) throw MathError("univariate division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = 1 / b.leadingCoefficient();
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.isZero()) {
    UPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefreePart(const UPoly& p) {
  if (p.degree() <= 0) return p;
  const UPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.primitive();
  return divmod(p, g).first.primitive();
}

std::vector<UPoly> sturmSequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.isZero()) return seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  while (!d.isZero()) {
    seq.push_back(d);
    const UPoly& a = seq[seq.size() - 2];
    UPoly r = divmod(a, d).second;
    // Positive rescaling keeps the sign pattern of the canonical sequence;
    // primitive() also normalises the sign, so undo that first.
    if (r.isZero()) break;
    d = sgn(r.leadingCoefficient()) < 0 ? r.primitive() : UPoly() - r.primitive();
  }
  return seq;
}

namespace {

std::size_t variations(const std::vector<UPoly>& seq, const ExtRational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s;
    if (x.isFinite()) {
      s = p.signAt(x.value());
    } else {
      s = p.signAtInfinity(x.isPosInf());
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t countRoots(const std::vector<UPoly>& sturm, const ExtRational& a, const ExtRational& b) {
  if (sturm.empty()) return 0;
  const auto va = variations(sturm, a);
  const auto vb = variations(sturm, b);
  return va > vb ? va - vb : 0;
}

Rational rootBound(const UPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  const Rational lc = abs(p.leadingCoefficient());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i))) / lc));
  return m + 1;
}

// ---------------------------------------------------------------------------

RealRoot::RealRoot(UPoly poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw MathError("RealRoot: lo > hi");
  if (lo_ != hi_) sturm_ = sturmSequence(poly_);
}

RealRoot RealRoot::exact(const Rational& value) {
  return RealRoot(UPoly({Rational(-value), Rational(1)}), value, value);
}

std::optional<Rational> RealRoot::exactValue() const {
  if (isExact()) return lo_;
  return std::nullopt;
}

void RealRoot::refine(const Rational& width) {
  while (!isExact() && hi_ - lo_ >= width) {
    const Rational mid = (lo_ + hi_) / 2;
    if (poly_.signAt(mid) == 0) {
      lo_ = hi_ = mid;
      return;
    }
    if (countRoots(sturm_, ExtRational(lo_), ExtRational(mid)) == 1) {
      hi_ = mid;
    } else {
      lo_ = mid;
    }
  }
}

double RealRoot::approx() const {
  if (isExact()) return lo_.get_d();
  RealRoot copy = *this;
  copy.refine(Rational(1, 1L << 40));
  return Rational((copy.lo_ + copy.hi_) / 2).get_d();
}

std::string RealRoot::toString() const {
  if (isExact()) return igsys::toString(lo_);
  return "root of " + poly_.toString() + " in (" + igsys::toString(lo_) + ", " + igsys::toString(hi_) + "]";
}

std::vector<RealRoot> isolateRealRoots(const UPoly& p) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  const UPoly q = squarefreePart(p).primitive();
  const auto sturm = sturmSequence(q);
  const Rational bound = rootBound(q);
  const Integer lc = q.leadingCoefficient().get_num();

  struct Pending {
    Rational lo, hi;
  };
  std::vector<Pending> stack{{Rational(-bound), bound}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const auto n = countRoots(sturm, ExtRational(cur.lo), ExtRational(cur.hi));
    if (n == 0) continue;
    if (n == 1) {
      if (q.signAt(cur.hi) == 0) {
        out.push_back(RealRoot::exact(cur.hi));
        continue;
      }
      RealRoot r(q, cur.lo, cur.hi);
      // Any rational root k/m in lowest terms has m | lc, so lc * root is an integer.
      r.refine(Rational(Integer(1), abs(lc) * 2));
      if (!r.isExact()) {
        const Integer k = floorRational(Rational(r.hi() * lc));
        const Rational candidate(k, lc);
        Rational c = candidate;
        c.canonicalize();
        if (c > r.lo() && c <= r.hi() && q.signAt(c) == 0) r = RealRoot::exact(c);
      }
      out.push_back(std::move(r));
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / 2;
    stack.push_back({mid, cur.hi});
    stack.push_back({cur.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.hi() < b.hi(); });
  return out;
}

std::vector<Rational> rationalRootsIn(const UPoly& p, const Interval& range) {
  std::vector<Rational> out;
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    if (range.contains(r)) out.push_back(r);
    return out;
  }
  for (const auto& r : isolateRealRoots(p))
    if (auto v = r.exactValue(); v && range.contains(*v)) out.push_back(*v);
  return out;
}

int signAt(const UPoly& p, RealRoot r) {
  if (auto v = r.exactValue()) return p.signAt(*v);
  const UPoly g = gcd(p, r.poly());
  if (g.degree() >= 1) {
    const auto sg = sturmSequence(squarefreePart(g));
    if (countRoots(sg, ExtRational(r.lo()), ExtRational(r.hi())) > 0) return 0;
  }
  const UPoly sp = squarefreePart(p);
  const auto sturm = sturmSequence(sp);
  Rational width = r.hi() - r.lo();
  while (!r.isExact() && countRoots(sturm, ExtRational(r.lo()), ExtRational(r.hi())) > 0) {
    width /= 2;
    r.refine(width);
  }
  if (auto v = r.exactValue()) return p.signAt(*v);
  return p.signAt(r.hi());
}

int compare(RealRoot a, RealRoot b) {
  if (a.isExact() && b.isExact()) return cmp(a.lo(), b.lo()) < 0 ? -1 : (cmp(a.lo(), b.lo()) > 0 ? 1 : 0);
  if (b.isExact()) return -compare(b, a);
  if (a.isExact()) {
    const Rational& v = a.lo();
    if (v <= b.lo()) return -1;
    if (v > b.hi()) return 1;
    if (b.poly().signAt(v) == 0) return 0;
    const auto sturm = sturmSequence(b.poly());
    return countRoots(sturm, ExtRational(b.lo()), ExtRational(v)) == 1 ? 1 : -1;
  }
  const UPoly g = gcd(a.poly(), b.poly());
  const auto sg = g.degree() >= 1 ? sturmSequence(squarefreePart(g)) : std::vector<UPoly>{};
  for (;;) {
    if (a.isExact() || b.isExact()) return compare(a, b);
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    if (!sg.empty()) {
      const Rational lo = std::max(a.lo(), b.lo());
      const Rational hi = std::min(a.hi(), b.hi());
      if (lo < hi && countRoots(sg, ExtRational(lo), ExtRational(hi)) > 0) return 0;
    }
    a.refine((a.hi() - a.lo()) / 2);
    b.refine((b.hi() - b.lo()) / 2);
  }
}

}  // namespace igsys
