#include "doctest.h"

#include "igsys/cgs.hpp"
#include "igsys/groebner.hpp"
#include "igsys/problem.hpp"
#include "igsys/verify.hpp"
#include "properties.hpp"

using namespace igsys;

namespace {

std::vector<Polynomial> parseAll(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parsePolynomial(t, ring));
  return out;
}

bool sameUpToScalars(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].monic() != b[i].monic()) return false;
  }
  return true;
}

ParametricRing singleParameter() {
  return ParametricRing({"x"}, MonomialOrder::lex(1), {"a"}, MonomialOrder::grevlex(1));
}

}  // namespace

TEST_SUITE("cgs") {
  TEST_CASE("consistency by radical membership") {
    const RingPtr ring = makeRing({"a", "b"}, MonomialOrder::grevlex(2));
    const auto one = parseAll(ring, {"1"});
    CHECK(isConsistent({}, one));
    CHECK_FALSE(isConsistent(parseAll(ring, {"a"}), parseAll(ring, {"a"})));
    CHECK(isConsistent(parseAll(ring, {"a*b"}), parseAll(ring, {"a"})));
    CHECK_FALSE(isConsistent(parseAll(ring, {"a^3"}), parseAll(ring, {"a*b"})));
  }

  TEST_CASE("minimal Dickson basis") {
    const ParametricRing ring({"x", "y"}, MonomialOrder::lex(2), {"a"}, MonomialOrder::grevlex(1));
    const auto P = parseAll(ring.combined(), {"a*x^2", "x*y", "x^2*y"});
    const auto G = mdBasis(ring, P);
    CHECK(G == std::vector<Polynomial>{P[0], P[1]});
    CHECK(mdBasis(ring, std::span(P).first(1)) == std::vector<Polynomial>{P[0]});
    const auto incomparable = parseAll(ring.combined(), {"a*x^2 + 1", "y^3 - a"});
    CHECK(mdBasis(ring, incomparable) == incomparable);
    CHECK_THROWS_AS(mdBasis(ring, parseAll(ring.combined(), {"a", "x"})), MathError);
  }

  TEST_CASE("minimal Dickson basis is minimal") {
    const auto p = props::loadData("parametric.ppoly");
    const auto& ring = *p.parametric;
    const auto G = reducedGB(ring.combined(), p.parametricPolys);
    std::vector<Polynomial> xPart;
    for (const auto& g : G.generators()) {
      if (!ring.isParameterOnly(g)) xPart.push_back(g);
    }
    const auto md = mdBasis(ring, xPart);
    auto covers = [&](std::span<const Polynomial> basis) {
      for (const auto& q : xPart) {
        bool hit = false;
        for (const auto& g : basis) hit = hit || ring.leadingX(g).first.divides(ring.leadingX(q).first);
        if (!hit) return false;
      }
      return true;
    };
    CHECK(covers(md));
    for (std::size_t i = 0; i < md.size(); ++i) {
      auto reduced = md;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(covers(reduced));
    }
  }

  TEST_CASE("four branches of the parametric example") {
    const auto p = props::loadData("parametric.ppoly");
    const auto& ring = *p.parametric;
    const auto res = pgb(ring, p.parametricPolys);
    REQUIRE(res.branches.size() == 4);
    const RingPtr A = ring.parameters();
    const RingPtr X = ring.combined();
    const auto big = parseAll(A, {"a^6 - b^6", "a^3*c - b^3", "b^3*c - a^3", "a*c^2 - a", "b*c^2 - b"});
    const auto& b = res.branches;
    CHECK(b[0].E.empty());
    CHECK(sameUpToScalars(b[0].N, big));
    CHECK(b[0].isUnit());
    CHECK(sameUpToScalars(b[1].E, big));
    CHECK(sameUpToScalars(b[1].N, parseAll(A, {"b"})));
    CHECK(sameUpToScalars(b[1].G, parseAll(X, {"b*x - a*c*y", "b*y - a"})));
    CHECK(sameUpToScalars(b[2].E, parseAll(A, {"a", "b"})));
    CHECK(sameUpToScalars(b[2].N, parseAll(A, {"c"})));
    CHECK(sameUpToScalars(b[2].G, parseAll(X, {"c*x^2 - y", "c*y^2 - x"})));
    CHECK(sameUpToScalars(b[3].E, parseAll(A, {"a", "b", "c"})));
    CHECK(sameUpToScalars(b[3].N, parseAll(A, {"1"})));
    CHECK(sameUpToScalars(b[3].G, parseAll(X, {"x", "y"})));
  }

  TEST_CASE("specialization at (1,1,1)") {
    const auto p = props::loadData("parametric.ppoly");
    const auto& ring = *p.parametric;
    const auto res = pgb(ring, p.parametricPolys);
    const std::vector<Rational> pt{1, 1, 1};
    REQUIRE(branchCovers(res.branches[1], pt));
    const auto G = specializeBasis(ring, res.branches[1].G, pt);
    std::vector<std::string> text;
    for (const auto& g : G) text.push_back(toString(g));
    CHECK(text == std::vector<std::string>{"x - y", "y - 1"});
    const auto direct = reducedGB(ring.variables(), std::vector<Polynomial>{
                                                        ring.specialize(p.parametricPolys[0], pt),
                                                        ring.specialize(p.parametricPolys[1], pt),
                                                        ring.specialize(p.parametricPolys[2], pt),
                                                        ring.specialize(p.parametricPolys[3], pt)});
    // The specialized basis need not be reduced; it spans the same ideal.
    CHECK(reducedGB(ring.variables(), G).generators() == direct.generators());
    CHECK(specializesToBasis(ring, p.parametricPolys, res.branches[1].G, pt));
  }

  TEST_CASE("one parameter, one generator") {
    const auto ring = singleParameter();
    const auto res = pgb(ring, parseAll(ring.combined(), {"a*x - 1"}));
    REQUIRE(res.branches.size() == 2);
    CHECK(res.branches[0].E.empty());
    CHECK(sameUpToScalars(res.branches[0].N, parseAll(ring.parameters(), {"a"})));
    CHECK(sameUpToScalars(res.branches[0].G, parseAll(ring.combined(), {"a*x - 1"})));
    CHECK(sameUpToScalars(res.branches[1].E, parseAll(ring.parameters(), {"a"})));
    CHECK(res.branches[1].isUnit());
  }

  TEST_CASE("no parameters gives one branch") {
    const ParametricRing ring({"x"}, MonomialOrder::lex(1), {}, MonomialOrder::grevlex(0));
    const auto P = parseAll(ring.combined(), {"x^2 + 1"});
    const auto res = pgb(ring, P);
    REQUIRE(res.branches.size() == 1);
    CHECK(res.branches[0].E.empty());
    CHECK(sameUpToScalars(res.branches[0].G, P));
  }

  TEST_CASE("every branch is consistent") {
    const auto p = props::loadData("parametric.ppoly");
    for (const auto& b : pgb(*p.parametric, p.parametricPolys).branches) CHECK(isConsistent(b.E, b.N));
  }

  TEST_CASE("cover and specialization sampling") {
    const auto r = props::cgsCover(99, 120);
    INFO(r.summary());
    CHECK(r.ok());
  }
}
