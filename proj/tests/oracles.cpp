#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

using igsys::ExtRational;

int uniformInt(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational smallRational(Rng& rng, int maxNum, int maxDen) {
  Rational q(uniformInt(rng, -maxNum, maxNum), uniformInt(rng, 1, maxDen));
  q.canonicalize();
  return q;
}

Interval randomBoundedInterval(Rng& rng) {
  Rational a = smallRational(rng, 12, 4);
  Rational b = smallRational(rng, 12, 4);
  while (a == b) b = smallRational(rng, 12, 4);
  if (b < a) std::swap(a, b);
  return Interval(a, b, uniformInt(rng, 0, 1) == 1, uniformInt(rng, 0, 1) == 1);
}

Interval randomInterval(Rng& rng) {
  const int kind = uniformInt(rng, 0, 19);
  if (kind < 14) return randomBoundedInterval(rng);
  if (kind < 16) return Interval(smallRational(rng, 12, 4));
  const Rational a = smallRational(rng, 12, 4);
  const bool closed = uniformInt(rng, 0, 1) == 1;
  if (kind < 18) return Interval(a, ExtRational::posInf(), closed, false);
  if (kind < 19) return Interval(ExtRational::negInf(), a, false, closed);
  return Interval::whole();
}

bool member(const Interval& x, const Rational& q) {
  if (x.lo().isFinite()) {
    const Rational& lo = x.lo().value();
    if (q < lo || (q == lo && !x.loClosed())) return false;
  }
  if (x.hi().isFinite()) {
    const Rational& hi = x.hi().value();
    if (q > hi || (q == hi && !x.hiClosed())) return false;
  }
  return true;
}

std::optional<Rational> sampleFrom(const Interval& x, Rng& rng) {
  if (x.lo().isFinite() && x.hi().isFinite() && x.lo() == x.hi()) return x.lo().value();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational q;
    const int pick = uniformInt(rng, 0, 9);
    if (pick == 0 && x.lo().isFinite()) {
      q = x.lo().value();
    } else if (pick == 1 && x.hi().isFinite()) {
      q = x.hi().value();
    } else if (x.lo().isFinite() && x.hi().isFinite()) {
      const Rational w = x.hi().value() - x.lo().value();
      q = x.lo().value() + w * Rational(uniformInt(rng, 0, 97), 97);
    } else if (x.lo().isFinite()) {
      q = x.lo().value() + Rational(uniformInt(rng, 0, 80), uniformInt(rng, 1, 4));
    } else if (x.hi().isFinite()) {
      q = x.hi().value() - Rational(uniformInt(rng, 0, 80), uniformInt(rng, 1, 4));
    } else {
      q = smallRational(rng, 40, 4);
    }
    q.canonicalize();
    if (member(x, q)) return q;
  }
  return std::nullopt;
}

bool grevlexGreater(std::span<const unsigned> a, std::span<const unsigned> b) {
  long da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    const long d = static_cast<long>(a[i]) - static_cast<long>(b[i]);
    if (d != 0) return d < 0;
  }
  return false;
}

bool lexGreater(std::span<const unsigned> a, std::span<const unsigned> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

Rational binomial(unsigned n, unsigned k) {
  Rational r(1);
  for (unsigned i = 1; i <= k; ++i) {
    r *= Rational(n - k + i);
    r /= Rational(i);
  }
  return r;
}

Rational power(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::map<unsigned, Rational> substituteLinear(unsigned i, unsigned j, const Rational& k, const Rational& m) {
  std::map<unsigned, Rational> inY;
  for (unsigned t = 0; t <= i; ++t) inY[j + t] += binomial(i, t) * power(k, t) * power(m, i - t);
  return inY;
}

bool divisibleByLinear(const Bivariate& p, const Rational& k, const Rational& m) {
  std::map<unsigned, Rational> inY;
  for (const auto& [exps, c] : p) {
    for (const auto& [deg, v] : substituteLinear(exps.first, exps.second, k, m)) inY[deg] += c * v;
  }
  for (const auto& [deg, c] : inY) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> gridAxes(std::span<const Interval> ranges, unsigned denominator) {
  std::vector<std::vector<Rational>> axes;
  for (const Interval& r : ranges) {
    if (!r.lo().isFinite() || !r.hi().isFinite()) throw std::invalid_argument("grid needs bounded ranges");
    std::vector<Rational> axis;
    const igsys::Integer start = igsys::floorRational(r.lo().value() * denominator);
    const igsys::Integer stop = igsys::ceilRational(r.hi().value() * denominator);
    for (igsys::Integer k = start; k <= stop; ++k) {
      Rational q(k, denominator);
      q.canonicalize();
      if (member(r, q)) axis.push_back(q);
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

GridScanner::GridScanner(std::span<const Interval> ranges, unsigned denominator) : denominator_(denominator) {
  for (const auto& axis : gridAxes(ranges, denominator)) {
    std::vector<long> scaled;
    for (const Rational& q : axis) {
      const Rational s = q * denominator;
      scaled.push_back(s.get_num().get_si());
    }
    axes_.push_back(std::move(scaled));
  }
}

std::size_t GridScanner::points() const {
  std::size_t n = 1;
  for (const auto& a : axes_) n *= a.size();
  return n;
}

GridScanner::ScaledPoly GridScanner::scale(const Polynomial& p) const {
  const unsigned long D = p.totalDegree();
  if (D > 16) throw std::invalid_argument("grid evaluation limited to degree 16");
  igsys::Integer den(1);
  for (const auto& t : p.terms()) den = igsys::Integer(lcm(den, t.coef.get_den()));
  ScaledPoly out;
  for (const auto& t : p.terms()) {
    igsys::Integer c = t.coef.get_num() * (den / t.coef.get_den());
    for (unsigned long i = t.monomial.degree(); i < D; ++i) c *= denominator_;
    if (!c.fits_slong_p()) throw std::invalid_argument("grid coefficient too large");
    std::vector<unsigned> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    out.terms.emplace_back(std::move(exps), static_cast<__int128>(c.get_si()));
  }
  return out;
}

__int128 GridScanner::evaluate(const ScaledPoly& p, std::span<const long> point) {
  __int128 sum = 0;
  for (const auto& [exps, c] : p.terms) {
    __int128 v = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (unsigned e = 0; e < exps[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::optional<std::vector<Rational>> GridScanner::findPoint(std::span<const Polynomial> E,
                                                            std::span<const Polynomial> N) const {
  std::vector<ScaledPoly> es, ns;
  for (const auto& e : E) es.push_back(scale(e));
  for (const auto& n : N) ns.push_back(scale(n));
  const std::size_t dim = axes_.size();
  for (const auto& a : axes_) {
    if (a.empty()) return std::nullopt;
  }
  std::vector<std::size_t> idx(dim, 0);
  std::vector<long> point(dim);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) point[i] = axes_[i][idx[i]];
    bool hit = true;
    for (const auto& e : es) {
      if (evaluate(e, point) != 0) {
        hit = false;
        break;
      }
    }
    if (hit) {
      bool nonzero = false;
      for (const auto& n : ns) {
        if (evaluate(n, point) != 0) {
          nonzero = true;
          break;
        }
      }
      if (nonzero) {
        std::vector<Rational> out;
        for (long v : point) {
          Rational q(v, denominator_);
          q.canonicalize();
          out.push_back(q);
        }
        return out;
      }
    }
    std::size_t i = 0;
    while (i < dim && ++idx[i] == axes_[i].size()) idx[i++] = 0;
    if (i == dim) break;
  }
  return std::nullopt;
}

}  // namespace oracle
