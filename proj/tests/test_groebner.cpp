#include "doctest.h"

#include "igsys/groebner.hpp"
#include "igsys/problem.hpp"
#include "properties.hpp"

using namespace igsys;

namespace {

std::vector<Polynomial> parseAll(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parsePolynomial(t, ring));
  return out;
}

std::vector<std::string> texts(const GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.generators()) out.push_back(toString(g));
  return out;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("normal form") {
    const RingPtr ring = makeRing({"x", "y"}, MonomialOrder::lex(2));
    const auto G = parseAll(ring, {"x^2 - 1"});
    CHECK(normalForm(parsePolynomial("x^2*y", ring), G) == parsePolynomial("y", ring));
    CHECK(normalForm(G[0], G).isZero());
  }

  TEST_CASE("S-polynomials") {
    const RingPtr ring = makeRing({"x", "y"}, MonomialOrder::lex(2));
    const auto f = parsePolynomial("x*y - 1", ring);
    const auto g = parsePolynomial("y^2 - 1", ring);
    CHECK(sPolynomial(f, g) == parsePolynomial("x - y", ring));
    CHECK(sPolynomial(f, f).isZero());
    const auto a = parsePolynomial("x - 1", ring);
    const auto b = parsePolynomial("y - 1", ring);
    CHECK(normalForm(sPolynomial(a, b), std::vector<Polynomial>{a, b}).isZero());
  }

  TEST_CASE("triangular lex basis") {
    const auto p = props::loadData("triangular.poly");
    const auto G = reducedGB(p.exactPolys());
    CHECK(texts(G) ==
          std::vector<std::string>{
              "x - 2*z^14 + 9*z^13 - 11*z^12 - 2*z^11 + 7*z^10 + 3*z^9 - 2*z^8 + z^7 - 4*z^6 - 7*z^5 + 10*z^4 + "
              "6*z^3 - 11*z^2 - 2*z + 4",
              "y - z^13 + 3*z^12 - z^11 - 2*z^10 - z^9 + z^8 + 2*z^6 - 2*z^4 + z^3 + 3*z^2 - 1",
              "z^15 - 3*z^14 + 5*z^12 - 3*z^10 - z^9 - z^8 + 4*z^6 - 6*z^4 + 4*z^2 - 1"});
    for (const auto& f : p.exactPolys()) CHECK(normalForm(f, G.generators()).isZero());
  }

  TEST_CASE("small bases") {
    const RingPtr ring = makeRing({"x", "y"}, MonomialOrder::lex(2));
    const auto unit = reducedGB(parseAll(ring, {"x", "x + 1"}));
    CHECK(unit.isUnit());
    CHECK(texts(unit) == std::vector<std::string>{"1"});
    CHECK(texts(reducedGB(parseAll(ring, {"x^2 - y", "y"}))) == std::vector<std::string>{"x^2", "y"});
    CHECK(reducedGB(ring, std::vector<Polynomial>{}).isZeroIdeal());
  }

  TEST_CASE("elimination") {
    const RingPtr ring = makeRing({"x", "a", "b"}, MonomialOrder::block(MonomialOrder::lex(1),
                                                                         MonomialOrder::grevlex(2)));
    const std::vector<std::string> params{"a", "b"};
    const auto lin = eliminate(reducedGB(parseAll(ring, {"x - a", "x - b"})), params);
    REQUIRE(lin.size() == 1);
    CHECK(toString(lin[0]) == "a - b");
    const auto unit = eliminate(reducedGB(parseAll(ring, {"a*x - 1", "a"})), params);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].isOne());
    CHECK(eliminate(reducedGB(parseAll(ring, {"x^2 - a"})), params).empty());
  }

  TEST_CASE("radical membership") {
    const RingPtr ring = makeRing({"x", "y"}, MonomialOrder::grevlex(2));
    CHECK(radicalMember(parsePolynomial("x", ring), parseAll(ring, {"x^2"})));
    CHECK_FALSE(radicalMember(parsePolynomial("x", ring), parseAll(ring, {"y"})));
    CHECK_FALSE(idealMember(parsePolynomial("x", ring), parseAll(ring, {"x^2"})));
    const RingPtr abc = makeRing({"a", "b", "c"}, MonomialOrder::grevlex(3));
    const auto E = parseAll(abc, {"a - b", "c - b"});
    const auto target = parsePolynomial("a - c", abc);
    CHECK(radicalMember(target, E));
    CHECK(normalForm(target - (E[0] - E[1]), E).isZero());
  }

  TEST_CASE("lcm and gcd") {
    const RingPtr ring = makeRing({"x", "y"}, MonomialOrder::grevlex(2));
    const auto f = parsePolynomial("x^2 - y^2", ring);
    const auto g = parsePolynomial("x^2 + 2*x*y + y^2", ring);
    CHECK(polynomialGcd(f, g) == parsePolynomial("x + y", ring));
    CHECK(polynomialLcm(f, g) == parsePolynomial("x^3 + x^2*y - x*y^2 - y^3", ring));
  }

  TEST_CASE("Buchberger criterion and ideal equality on random systems") {
    const auto r = props::groebnerCorpus(42, 50);
    INFO(r.summary());
    CHECK(r.ok());
  }

  TEST_CASE("reduced basis is independent of input order") {
    const auto r = props::groebnerShuffle(42, 50);
    INFO(r.summary());
    CHECK(r.ok());
  }
}
