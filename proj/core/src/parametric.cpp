#include "igsys/parametric.hpp"

#include <algorithm>

namespace igsys {

ParametricRing::ParametricRing(std::vector<std::string> variables, MonomialOrder variableOrder,
                               std::vector<std::string> parameters, MonomialOrder parameterOrder) {
  for (const auto& v : variables)
    if (std::find(parameters.begin(), parameters.end(), v) != parameters.end())
      throw MathError("'" + v + "' is both a variable and a parameter");
  std::vector<std::string> all = variables;
  all.insert(all.end(), parameters.begin(), parameters.end());
  combined_ = makeRing(std::move(all), MonomialOrder::block(variableOrder, parameterOrder));
  variables_ = makeRing(std::move(variables), std::move(variableOrder));
  parameters_ = makeRing(std::move(parameters), std::move(parameterOrder));
}

bool ParametricRing::isParameterOnly(const Polynomial& f) const {
  const std::size_t nx = numVariables();
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < nx; ++i)
      if (t.monomial[i]) return false;
  return true;
}

std::pair<Monomial, Polynomial> ParametricRing::leadingX(const Polynomial& f) const {
  const std::size_t nx = numVariables();
  const auto& lm = f.leadingMonomial();
  std::vector<Monomial::Exponent> xe(lm.exponents().begin(), lm.exponents().begin() + static_cast<long>(nx));
  Monomial xPart(std::move(xe));
  std::vector<Term> coef;
  for (const auto& t : f.terms()) {
    bool same = true;
    for (std::size_t i = 0; i < nx && same; ++i) same = t.monomial[i] == xPart[i];
    if (!same) continue;
    std::vector<Monomial::Exponent> ae(t.monomial.exponents().begin() + static_cast<long>(nx),
                                       t.monomial.exponents().end());
    coef.push_back({Monomial(std::move(ae)), t.coef});
  }
  return {std::move(xPart), Polynomial::fromTerms(parameters_, std::move(coef))};
}

Polynomial ParametricRing::specialize(const Polynomial& f, std::span<const Rational> point) const {
  const std::size_t nx = numVariables();
  if (point.size() != numParameters()) throw MathError("specialization point has the wrong dimension");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational c = t.coef;
    for (std::size_t j = 0; j < point.size(); ++j)
      if (t.monomial[nx + j]) c *= ratPow(point[j], t.monomial[nx + j]);
    if (sgn(c) == 0) continue;
    std::vector<Monomial::Exponent> xe(t.monomial.exponents().begin(), t.monomial.exponents().begin() + static_cast<long>(nx));
    out.push_back({Monomial(std::move(xe)), std::move(c)});
  }
  return Polynomial::fromTerms(variables_, std::move(out));
}

Polynomial ParametricRing::toParameters(const Polynomial& f) const {
  if (!isParameterOnly(f)) throw MathError("polynomial involves main variables: " + f.toString());
  const std::size_t nx = numVariables();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms())
    out.push_back({Monomial(std::vector<Monomial::Exponent>(t.monomial.exponents().begin() + static_cast<long>(nx),
                                                           t.monomial.exponents().end())),
                   t.coef});
  return Polynomial::fromTerms(parameters_, std::move(out));
}

Polynomial ParametricRing::fromParameters(const Polynomial& f) const {
  const std::size_t nx = numVariables();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e(nx, 0);
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    out.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial::fromTerms(combined_, std::move(out));
}

Polynomial ParametricRing::fromVariables(const Polynomial& f) const {
  const std::size_t na = numParameters();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
    e.resize(e.size() + na, 0);
    out.push_back({Monomial(std::move(e)), t.coef});
  }
  return Polynomial::fromTerms(combined_, std::move(out));
}

std::vector<Polynomial> productSet(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  std::vector<Polynomial> out;
  for (const auto& p : a) {
    for (const auto& q : b) {
      Polynomial r = (p * q).primitive();
      if (r.isZero()) continue;
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace igsys
