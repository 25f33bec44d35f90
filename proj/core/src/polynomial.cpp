#include "igsys/polynomial.hpp"

#include <algorithm>
#include <map>

namespace igsys {

Ring::Ring(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(std::move(order)) {
  if (order_.numVars() != names_.size())
    throw MathError("monomial order covers " + std::to_string(order_.numVars()) + " variables, ring has " +
                    std::to_string(names_.size()));
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw MathError("duplicate variable '" + names_[i] + "'");
}

std::optional<std::size_t> Ring::indexOf(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr makeRing(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(order));
}

RingPtr withOrder(const RingPtr& ring, MonomialOrder order) { return makeRing(ring->names(), std::move(order)); }

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({Monomial(p.ring_->numVars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->numVars());
  m.setExponent(index, 1);
  return term(std::move(ring), std::move(m), Rational(1));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const auto idx = ring->indexOf(name);
  if (!idx) throw MathError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  if (m.numVars() != ring->numVars()) throw MathError("monomial does not match ring");
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::fromTerms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.sortTerms();
  return p;
}

void Polynomial::sortTerms() {
  const auto& order = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coef += t.coef;
    } else {
      if (!merged.empty() && sgn(merged.back().coef) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().coef) == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool Polynomial::isOne() const { return isConstant() && !isZero() && terms_[0].coef == 1; }

const Term& Polynomial::leadingTerm() const {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficientOf(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coef;
  return Rational(0);
}

unsigned long Polynomial::totalDegree() const {
  unsigned long d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Monomial::Exponent Polynomial::degreeIn(std::size_t var) const {
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

void Polynomial::checkRing(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (!ring_ || !other.ring_ || !ring_->sameAs(*other.ring_))
    throw MathError("arithmetic between polynomials of different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  subtractMultiple(Rational(-1), Monomial(ring_->numVars()), other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  subtractMultiple(Rational(1), Monomial(ring_->numVars()), other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.checkRing(b);
  if (a.isZero() || b.isZero()) return Polynomial(a.ring_);
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (const auto& t : small.terms_) acc.subtractMultiple(Rational(-t.coef), t.monomial, big);
  return acc;
}

Polynomial Polynomial::mulTerm(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coef * c});
  return r;
}

void Polynomial::subtractMultiple(const Rational& c, const Monomial& m, const Polynomial& g) {
  checkRing(g);
  if (sgn(c) == 0 || g.isZero()) return;
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool haveShifted = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !haveShifted) {
      shifted = g.terms_[j].monomial * m;
      haveShifted = true;
    }
    if (j >= g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    if (i >= terms_.size()) {
      out.push_back({std::move(shifted), Rational(-c * g.terms_[j].coef)});
      ++j;
      haveShifted = false;
      continue;
    }
    const auto cmpv = order.compare(terms_[i].monomial, shifted);
    if (cmpv > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmpv < 0) {
      out.push_back({std::move(shifted), Rational(-c * g.terms_[j].coef)});
      ++j;
      haveShifted = false;
    } else {
      Rational coef = terms_[i].coef - c * g.terms_[j].coef;
      if (sgn(coef) != 0) out.push_back({std::move(terms_[i].monomial), std::move(coef)});
      ++i;
      ++j;
      haveShifted = false;
    }
  }
  terms_ = std::move(out);
}

Term Polynomial::takeLeadingTerm() {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  Polynomial r = *this;
  const Rational inv = 1 / terms_.front().coef;
  for (auto& t : r.terms_) t.coef *= inv;
  return r;
}

Polynomial Polynomial::primitive() const {
  if (isZero()) return *this;
  Integer denLcm = 1;
  for (const auto& t : terms_) mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), t.coef.get_den_mpz_t());
  Integer numGcd = 0;
  for (const auto& t : terms_) {
    Integer scaled = t.coef.get_num() * (denLcm / t.coef.get_den());
    mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(denLcm, numGcd);
  factor.canonicalize();
  if (sgn(terms_.front().coef) < 0) factor = -factor;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= factor;
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->numVars()) throw MathError("evaluation point has the wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.monomial[i]) v *= ratPow(point[i], t.monomial[i]);
    sum += v;
  }
  return sum;
}

Interval Polynomial::evaluate(std::span<const Interval> box) const {
  if (box.size() != ring_->numVars()) throw MathError("evaluation box has the wrong dimension");
  Interval sum(Rational(0));
  for (const auto& t : terms_) {
    Interval v(t.coef);
    for (std::size_t i = 0; i < box.size(); ++i)
      if (t.monomial[i]) v = mul(v, pow(box[i], t.monomial[i]));
    sum = add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.monomial[var] == 0) {
      out.push_back(t);
      continue;
    }
    Monomial m = t.monomial;
    const auto e = m[var];
    m.setExponent(var, 0);
    out.push_back({std::move(m), Rational(t.coef * ratPow(value, e))});
  }
  return fromTerms(ring_, std::move(out));
}

Polynomial Polynomial::mapToRing(const RingPtr& target) const {
  std::vector<std::optional<std::size_t>> where(ring_->numVars());
  for (std::size_t i = 0; i < ring_->numVars(); ++i) where[i] = target->indexOf(ring_->names()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->numVars());
    for (std::size_t i = 0; i < ring_->numVars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!where[i]) throw MathError("variable '" + ring_->names()[i] + "' is not in the target ring");
      m.setExponent(*where[i], m[*where[i]] + t.monomial[i]);
    }
    out.push_back({std::move(m), t.coef});
  }
  return fromTerms(target, std::move(out));
}

Polynomial Polynomial::withRing(const RingPtr& target) const {
  if (target->numVars() != ring_->numVars()) throw MathError("withRing: variable count mismatch");
  return fromTerms(target, terms_);
}

std::string monomialToString(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.numVars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    const bool negative = sgn(t.coef) < 0;
    Rational mag = abs(t.coef);
    if (k == 0) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (t.monomial.isOne()) {
      s += igsys::toString(mag);
    } else {
      if (mag != 1) s += igsys::toString(mag) + '*';
      s += monomialToString(t.monomial, ring_->names());
    }
  }
  return s;
}

std::string toString(const Polynomial& f) { return f.toString(); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && a.ring_ && b.ring_ && !a.ring_->sameAs(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::optional<Polynomial> exactQuotient(const Polynomial& f, const Polynomial& g) {
  if (g.isZero()) throw MathError("division by the zero polynomial");
  Polynomial rest = f;
  Polynomial quotient(f.ring());
  const auto& lm = g.leadingMonomial();
  const auto& lc = g.leadingCoefficient();
  std::vector<Term> q;
  while (!rest.isZero()) {
    const auto& lt = rest.leadingTerm();
    if (!lm.divides(lt.monomial)) return std::nullopt;
    Monomial m = lm.quotientOf(lt.monomial);
    Rational c = lt.coef / lc;
    q.push_back({m, c});
    rest.subtractMultiple(c, m, g);
  }
  return Polynomial::fromTerms(f.ring(), std::move(q));
}

}  // namespace igsys
