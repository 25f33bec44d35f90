#include "igsys/interval_polynomial.hpp"

#include <algorithm>

namespace igsys {

IntervalPolynomial::IntervalPolynomial(RingPtr ring, std::vector<IntervalTerm> terms) : ring_(std::move(ring)) {
  for (auto& t : terms) {
    if (t.monomial.numVars() != ring_->numVars()) throw MathError("interval term does not match ring");
    if (t.coef.isZero()) continue;
    terms_.push_back(std::move(t));
  }
  const auto& order = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const IntervalTerm& a, const IntervalTerm& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].monomial == terms_[i - 1].monomial)
      throw MathError("repeated monomial " + monomialToString(terms_[i].monomial, ring_->names()) +
                      " in interval polynomial");
}

IntervalPolynomial IntervalPolynomial::fromPolynomial(const Polynomial& f) {
  std::vector<IntervalTerm> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({Interval(t.coef), t.monomial});
  return IntervalPolynomial(f.ring(), std::move(terms));
}

bool IntervalPolynomial::isExact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const IntervalTerm& t) { return t.coef.isDegenerate(); });
}

std::size_t IntervalPolynomial::numIntervalCoefficients() const {
  return static_cast<std::size_t>(
      std::count_if(terms_.begin(), terms_.end(), [](const IntervalTerm& t) { return !t.coef.isDegenerate(); }));
}

Polynomial IntervalPolynomial::familyMember(std::span<const Rational> choice) const {
  if (choice.size() != terms_.size())
    throw MathError("family member needs one coefficient per term (" + std::to_string(terms_.size()) + ")");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!terms_[i].coef.contains(choice[i]))
      throw MathError("coefficient " + igsys::toString(choice[i]) + " lies outside " + igsys::toString(terms_[i].coef));
    out.push_back({terms_[i].monomial, choice[i]});
  }
  return Polynomial::fromTerms(ring_, std::move(out));
}

Polynomial IntervalPolynomial::midpointMember() const {
  std::vector<Rational> choice;
  choice.reserve(terms_.size());
  for (const auto& t : terms_) choice.push_back(t.coef.interiorPoint());
  return familyMember(choice);
}

std::string IntervalPolynomial::toString() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string coef;
    bool negative = false;
    if (t.coef.isDegenerate()) {
      const Rational& v = t.coef.lo().value();
      negative = sgn(v) < 0;
      const Rational mag = abs(v);
      if (t.monomial.isOne() || mag != 1) coef = igsys::toString(mag);
    } else {
      coef = igsys::toString(t.coef);
    }
    if (k == 0) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    s += coef;
    if (!t.monomial.isOne()) {
      if (!coef.empty()) s += '*';
      s += monomialToString(t.monomial, ring_->names());
    }
  }
  return s;
}

bool operator==(const IntervalPolynomial& a, const IntervalPolynomial& b) {
  if (a.ring_ != b.ring_ && a.ring_ && b.ring_ && !a.ring_->sameAs(*b.ring_)) return false;
  return a.terms_ == b.terms_;
}

}  // namespace igsys
