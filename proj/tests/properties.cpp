#include "properties.hpp"

#include <algorithm>
#include <sstream>

#include "igsys/apps.hpp"
#include "igsys/cgs.hpp"
#include "igsys/igs.hpp"
#include "igsys/verify.hpp"
#include "oracles.hpp"

#ifndef IGSYS_TEST_DATA
#error "IGSYS_TEST_DATA must point at tests/data"
#endif

namespace props {

using namespace igsys;
using oracle::Rng;

void SuiteResult::fail(std::string what) {
  ++violations;
  if (violations <= 5) notes.push_back("violation: " + std::move(what));
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << name << ": " << checks << " checks, " << violations << " violations";
  for (const auto& n : notes) os << "; " << n;
  return os.str();
}

std::string dataPath(const std::string& name) { return std::string(IGSYS_TEST_DATA) + "/" + name; }

ProblemFile loadData(const std::string& name) { return loadProblem(dataPath(name)); }

namespace {

std::string pointText(std::span<const Rational> point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ", ";
    s += igsys::toString(point[i]);
  }
  return s + ")";
}

bool attained(const Interval& a, const Interval& b, ArithOp op, const Rational& target, Rng& rng) {
  auto candidates = [&](const Interval& x) {
    std::vector<Rational> out;
    if (x.lo().isFinite() && x.loClosed()) out.push_back(x.lo().value());
    if (x.hi().isFinite() && x.hiClosed()) out.push_back(x.hi().value());
    if (oracle::member(x, Rational(0))) out.push_back(Rational(0));
    if (auto s = oracle::sampleFrom(x, rng)) out.push_back(*s);
    return out;
  };
  for (const Rational& p : candidates(a)) {
    for (const Rational& q : candidates(b)) {
      Rational v;
      switch (op) {
        case ArithOp::Add: v = p + q; break;
        case ArithOp::Sub: v = p - q; break;
        case ArithOp::Mul: v = p * q; break;
        case ArithOp::Div:
          if (q == 0) continue;
          v = p / q;
          break;
      }
      if (v == target) return true;
    }
  }
  return false;
}

const char* opName(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "add";
    case ArithOp::Sub: return "sub";
    case ArithOp::Mul: return "mul";
    case ArithOp::Div: return "div";
  }
  return "?";
}

}  // namespace

SuiteResult intervalSoundness(std::uint64_t seed, std::size_t samplesPerOp) {
  SuiteResult r;
  r.name = "interval soundness";
  Rng rng(seed);
  for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div}) {
    std::size_t done = 0;
    while (done < samplesPerOp) {
      const Interval a = oracle::randomInterval(rng);
      Interval b = oracle::randomInterval(rng);
      while (op == ArithOp::Div && oracle::member(b, Rational(0))) b = oracle::randomInterval(rng);
      const Interval c = arith(op, a, b);
      for (int k = 0; k < 10 && done < samplesPerOp; ++k, ++done) {
        const auto p = oracle::sampleFrom(a, rng);
        const auto q = oracle::sampleFrom(b, rng);
        if (!p || !q) continue;
        Rational v;
        switch (op) {
          case ArithOp::Add: v = *p + *q; break;
          case ArithOp::Sub: v = *p - *q; break;
          case ArithOp::Mul: v = *p * *q; break;
          case ArithOp::Div: v = *p / *q; break;
        }
        ++r.checks;
        if (!oracle::member(c, v)) {
          r.fail(std::string(opName(op)) + " " + toString(a) + ", " + toString(b) + " -> " + toString(c) +
                 " misses " + igsys::toString(v));
        }
      }
      for (const auto* end : {&c.lo(), &c.hi()}) {
        const bool closed = end == &c.lo() ? c.loClosed() : c.hiClosed();
        if (!end->isFinite() || !closed) continue;
        ++r.checks;
        if (!attained(a, b, op, end->value(), rng)) {
          r.fail(std::string(opName(op)) + " " + toString(a) + ", " + toString(b) + " -> " + toString(c) +
                 " closed endpoint not attained");
        }
      }
    }
  }
  std::size_t done = 0;
  while (done < samplesPerOp) {
    const Interval a = oracle::randomInterval(rng);
    const unsigned n = static_cast<unsigned>(oracle::uniformInt(rng, 1, 5));
    const Interval p = pow(a, n);
    const IntervalUnion inv = recip(a);
    for (int k = 0; k < 10 && done < samplesPerOp; ++k, ++done) {
      const auto x = oracle::sampleFrom(a, rng);
      if (!x) continue;
      r.checks += 2;
      if (!oracle::member(p, ratPow(*x, n))) r.fail("pow " + toString(a) + "^" + std::to_string(n));
      if (*x != 0 && !inv.contains(1 / *x)) r.fail("recip " + toString(a) + " misses 1/" + igsys::toString(*x));
    }
  }
  return r;
}

SuiteResult intervalAlgebra(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "interval algebra";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Interval x = oracle::randomInterval(rng);
    const Interval y = oracle::randomInterval(rng);
    const Interval z = oracle::randomInterval(rng);
    ++r.checks;
    if (!mul(x, add(y, z)).isSubsetOf(add(mul(x, y), mul(x, z)))) {
      r.fail("subdistributivity " + toString(x) + ", " + toString(y) + ", " + toString(z));
    }
    ++r.checks;
    if (!add(x, neg(x)).containsZero()) r.fail("0 not in X-X for " + toString(x));
    if (!x.containsZero()) {
      ++r.checks;
      bool one = false;
      for (const Interval& part : recip(x).parts()) one = one || mul(x, part).contains(Rational(1));
      if (!one) r.fail("1 not in X*(1/X) for " + toString(x));
    }
    for (unsigned n = 2; n <= 4; ++n) {
      Interval repeated = x;
      for (unsigned k = 1; k < n; ++k) repeated = mul(repeated, x);
      ++r.checks;
      if (!pow(x, n).isSubsetOf(repeated)) r.fail("pow not inside repeated product for " + toString(x));
    }
  }
  return r;
}

std::vector<std::vector<Polynomial>> randomCorpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const RingPtr ring = makeRing({"x", "y", "z"}, MonomialOrder::grevlex(3));
  std::vector<std::vector<Polynomial>> corpus;
  while (corpus.size() < count) {
    std::vector<Polynomial> F;
    const int n = oracle::uniformInt(rng, 2, 3);
    for (int k = 0; k < n; ++k) {
      std::vector<Term> terms;
      const int t = oracle::uniformInt(rng, 2, 4);
      for (int j = 0; j < t; ++j) {
        const int d = oracle::uniformInt(rng, 0, 3);
        Monomial m(3);
        for (int e = 0; e < d; ++e) {
          const std::size_t v = static_cast<std::size_t>(oracle::uniformInt(rng, 0, 2));
          m.setExponent(v, m[v] + 1);
        }
        int c = oracle::uniformInt(rng, -3, 3);
        if (c == 0) c = 1;
        terms.push_back({m, Rational(c)});
      }
      Polynomial f = Polynomial::fromTerms(ring, std::move(terms));
      if (!f.isZero() && !f.isConstant()) F.push_back(std::move(f));
    }
    if (F.size() >= 2) corpus.push_back(std::move(F));
  }
  return corpus;
}

SuiteResult groebnerCorpus(std::uint64_t seed, std::size_t systems) {
  SuiteResult r;
  r.name = "groebner corpus";
  for (const auto& F : randomCorpus(seed, systems)) {
    const GroebnerBasis G = reducedGB(F);
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        ++r.checks;
        if (!normalForm(sPolynomial(gens[i], gens[j]), gens).isZero()) r.fail("S-polynomial does not reduce");
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& g = gens[i];
      ++r.checks;
      if (g.leadingCoefficient() != 1) r.fail("basis element not monic");
      std::vector<unsigned> lead(g.leadingMonomial().exponents().begin(), g.leadingMonomial().exponents().end());
      for (std::size_t t = 1; t < g.terms().size(); ++t) {
        const auto ex = g.terms()[t].monomial.exponents();
        std::vector<unsigned> other(ex.begin(), ex.end());
        ++r.checks;
        if (!oracle::grevlexGreater(lead, other)) r.fail("leading term is not grevlex-greatest");
      }
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : g.terms()) {
          ++r.checks;
          if (gens[j].leadingMonomial().divides(t.monomial)) r.fail("basis not reduced");
        }
      }
    }
    for (const auto& f : F) {
      ++r.checks;
      if (!G.contains(f)) r.fail("input generator outside the basis ideal");
    }
    for (const auto& g : gens) {
      std::vector<Polynomial> extended = F;
      extended.push_back(g);
      ++r.checks;
      if (reducedGB(extended).generators() != gens) r.fail("basis element outside the input ideal");
    }
  }
  return r;
}

SuiteResult groebnerShuffle(std::uint64_t seed, std::size_t systems) {
  SuiteResult r;
  r.name = "groebner shuffle";
  Rng rng(seed ^ 0x5bd1e995u);
  for (const auto& F : randomCorpus(seed, systems)) {
    const auto base = reducedGB(F).generators();
    for (int round = 0; round < 2; ++round) {
      std::vector<Polynomial> shuffled;
      for (const auto& f : F) {
        Rational c(oracle::uniformInt(rng, 1, 5) * (oracle::uniformInt(rng, 0, 1) ? 1 : -1),
                   oracle::uniformInt(rng, 1, 3));
        c.canonicalize();
        shuffled.push_back(f * c);
      }
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      ++r.checks;
      if (reducedGB(shuffled).generators() != base) r.fail("basis depends on input order or scaling");
    }
  }
  return r;
}

namespace {

std::vector<Branch> branchesOf(const IGSResult& res) {
  std::vector<Branch> out;
  for (const auto& bv : res.branches) out.push_back(bv.branch);
  return out;
}

void recordSamples(SuiteResult& r, const std::string& label, const ParametricRing& ring,
                   std::span<const Polynomial> P, std::span<const Branch> branches,
                   const std::vector<std::vector<Rational>>& points) {
  for (const auto& pt : points) {
    ++r.checks;
    const Branch* cover = nullptr;
    for (const auto& b : branches) {
      if (branchCovers(b, pt)) {
        cover = &b;
        break;
      }
    }
    if (!cover) {
      r.fail(label + " uncovered point " + pointText(pt));
      continue;
    }
    if (!specializesToBasis(ring, P, cover->G, pt)) r.fail(label + " specialization fails at " + pointText(pt));
  }
  r.notes.push_back(label + ": " + std::to_string(points.size()) + " points");
}

// Points of the parametric system's parameter space, half generic, half on the
// strata where the branches change.
std::vector<std::vector<Rational>> parametricPoints(Rng& rng, std::size_t count) {
  std::vector<std::vector<Rational>> pts;
  while (pts.size() < count) {
    const Rational a = oracle::smallRational(rng, 6, 3);
    const Rational b = oracle::smallRational(rng, 6, 3);
    const Rational c = oracle::smallRational(rng, 6, 3);
    switch (pts.size() % 8) {
      case 0: pts.push_back({0, 0, c}); break;
      case 1: pts.push_back({0, 0, 0}); break;
      case 2: pts.push_back({a, a, 1}); break;
      case 3: pts.push_back({a, -a, -1}); break;
      case 4: pts.push_back({0, b, c}); break;
      case 5: pts.push_back({a, 0, c}); break;
      default: pts.push_back({a, b, c}); break;
    }
  }
  return pts;
}

std::vector<std::vector<Rational>> boxPoints(const Box& box, Rng& rng, std::size_t count) {
  std::vector<std::vector<Rational>> pts;
  while (pts.size() < count) {
    std::vector<Rational> pt;
    for (const auto& range : box.ranges()) {
      if (oracle::uniformInt(rng, 0, 3) == 0 && oracle::member(range, Rational(0))) {
        pt.push_back(0);
      } else {
        pt.push_back(oracle::sampleFrom(range, rng).value());
      }
    }
    pts.push_back(std::move(pt));
  }
  return pts;
}

}  // namespace

SuiteResult cgsCover(std::uint64_t seed, std::size_t points) {
  SuiteResult r;
  r.name = "cgs cover";
  Rng rng(seed);
  {
    const ProblemFile p = loadData("parametric.ppoly");
    const CGSResult res = pgb(*p.parametric, p.parametricPolys);
    recordSamples(r, "parametric system", res.ring, p.parametricPolys, res.branches, parametricPoints(rng, points));
  }
  {
    const ParametricRing ring({"x", "y"}, MonomialOrder::lex(2), {"a", "b"}, MonomialOrder::grevlex(2));
    const std::vector<Polynomial> P{parsePolynomial("a*x^2 - b*y", ring.combined()),
                                    parsePolynomial("b*x*y - a", ring.combined()),
                                    parsePolynomial("a*y^2 + x - b", ring.combined())};
    const CGSResult res = pgb(ring, P);
    std::vector<std::vector<Rational>> pts;
    while (pts.size() < points / 2) {
      const Rational a = oracle::smallRational(rng, 5, 2);
      const Rational b = oracle::smallRational(rng, 5, 2);
      switch (pts.size() % 4) {
        case 0: pts.push_back({0, b}); break;
        case 1: pts.push_back({a, 0}); break;
        case 2: pts.push_back({a, a}); break;
        default: pts.push_back({a, b}); break;
      }
    }
    recordSamples(r, "three-generator system", res.ring, P, res.branches, pts);
  }
  return r;
}

SuiteResult igsCover(std::uint64_t seed, std::size_t points) {
  SuiteResult r;
  r.name = "igs cover";
  Rng rng(seed);
  {
    const ProblemFile p = loadData("bivariate.ipoly");
    const IGSResult res = igs(IntervalSystem{p.ring, p.polys}, p.ring->order());
    auto pts = boxPoints(res.box, rng, points);
    // h3*h4 = h1*h5 stratum.
    for (std::size_t i = 0; i < points / 5; ++i) {
      auto pt = pts[i];
      if (pt[0] == 0) pt[0] = 1;
      const Rational h5 = pt[2] * pt[3] / pt[0];
      if (res.box.range(4).contains(h5)) {
        pt[4] = h5;
        pts.push_back(pt);
      }
    }
    recordSamples(r, "bivariate system", res.ring, res.system, branchesOf(res), pts);
  }
  {
    const ProblemFile p = loadData("linear.ipoly");
    const IGSResult res = igs(IntervalSystem{p.ring, p.polys}, p.ring->order());
    auto pts = boxPoints(res.box, rng, points / 2);
    for (const Rational& v : {Rational(3), Rational(7, 2), Rational(4)}) pts.push_back({Rational(1), v, v});
    recordSamples(r, "linear system", res.ring, res.system, branchesOf(res), pts);
  }
  return r;
}

SuiteResult igsPruning() {
  SuiteResult r;
  r.name = "igs pruning";
  for (const std::string name : {"bivariate.ipoly", "linear.ipoly"}) {
    const ProblemFile p = loadData(name);
    const IGSResult res = igs(IntervalSystem{p.ring, p.polys}, p.ring->order());
    const auto ranges = res.box.ranges();
    const oracle::GridScanner grid(ranges, 8);
    for (const auto& bv : res.rejected) {
      ++r.checks;
      if (bv.verdict.status != Consistency::Inconsistent) r.fail(name + ": rejected branch without certificate");
      if (auto pt = grid.findPoint(bv.branch.E, bv.branch.N)) {
        r.fail(name + ": rejected branch has grid point " + pointText(*pt));
      }
    }
    r.notes.push_back(name + ": " + std::to_string(res.rejected.size()) + " rejected, " +
                      std::to_string(grid.points()) + " grid points");
  }
  return r;
}

SuiteResult iDividesAgreement(std::uint64_t seed, std::size_t instances) {
  SuiteResult r;
  r.name = "idivides grid";
  Rng rng(seed);
  const RingPtr ring = makeRing({"x", "y"}, MonomialOrder::lex(2));
  const std::vector<std::pair<unsigned, unsigned>> shapes{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
  std::size_t agreePositive = 0, agreeNegative = 0, gridMissed = 0, undecided = 0;
  for (std::size_t inst = 0; inst < instances; ++inst) {
    std::vector<std::size_t> pick{0, 1, 2, 3, 4, 5};
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(3);
    if (inst % 3 == 0) pick = {0, 1, 2};
    std::vector<IntervalTerm> terms;
    for (std::size_t s : pick) {
      const Rational lo = oracle::ratio(oracle::uniformInt(rng, -4, 2), 2);
      const Rational w = oracle::ratio(oracle::uniformInt(rng, 1, 4), 2);
      const bool closed = oracle::uniformInt(rng, 0, 3) != 0;
      terms.push_back({Interval(lo, Rational(lo + w), true, closed), Monomial{shapes[s].first, shapes[s].second}});
    }
    const IntervalPolynomial f(ring, terms);
    const Rational k(oracle::uniformInt(rng, -2, 2));
    const Rational m = oracle::uniformInt(rng, 0, 1) ? Rational(0) : Rational(oracle::uniformInt(rng, -1, 1));
    const Polynomial g = Polynomial::variable(ring, 0) - k * Polynomial::variable(ring, 1) - Polynomial::constant(ring, m);

    // The condition is linear in the coefficients; expand each monomial once.
    std::vector<std::map<unsigned, Rational>> images;
    std::vector<Interval> ranges;
    for (const auto& t : f.terms()) {
      images.push_back(oracle::substituteLinear(t.monomial[0], t.monomial[1], k, m));
      ranges.push_back(t.coef);
    }
    const auto axes = oracle::gridAxes(ranges, 16);
    bool gridPositive = false;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (!gridPositive) {
      bool allZero = true;
      std::map<unsigned, Rational> sum;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        const Rational& c = axes[i][idx[i]];
        if (c != 0) allZero = false;
        for (const auto& [d, v] : images[i]) sum[d] += c * v;
      }
      gridPositive = !allZero && std::all_of(sum.begin(), sum.end(), [](const auto& e) { return e.second == 0; });
      std::size_t i = 0;
      while (i < axes.size() && ++idx[i] == axes[i].size()) idx[i++] = 0;
      if (i == axes.size()) break;
    }

    const DivisibilityReport rep = iDivides(g, f);
    const std::string label = toString(g) + " | " + f.toString();
    ++r.checks;
    if (rep.undecided) {
      ++undecided;
      continue;
    }
    if (!rep.verdict) {
      if (gridPositive) r.fail("negative verdict but grid member exists: " + label);
      else ++agreeNegative;
      continue;
    }
    gridPositive ? ++agreePositive : ++gridMissed;
    ++r.checks;
    if (!rep.witnessPolynomial || rep.witnessPolynomial->isZero()) {
      r.fail("positive verdict without a nonzero witness: " + label);
      continue;
    }
    oracle::Bivariate w;
    for (const auto& t : rep.witnessPolynomial->terms()) w[{t.monomial[0], t.monomial[1]}] = t.coef;
    bool inFamily = true;
    for (const auto& t : f.terms()) {
      const auto it = w.find({t.monomial[0], t.monomial[1]});
      inFamily = inFamily && oracle::member(t.coef, it == w.end() ? Rational(0) : it->second);
      if (it != w.end()) w.erase(it);
    }
    inFamily = inFamily && w.empty();
    oracle::Bivariate full;
    for (const auto& t : rep.witnessPolynomial->terms()) full[{t.monomial[0], t.monomial[1]}] = t.coef;
    if (!inFamily || !oracle::divisibleByLinear(full, k, m)) r.fail("witness fails the oracle: " + label);
  }
  r.notes.push_back("agree positive " + std::to_string(agreePositive) + ", agree negative " +
                    std::to_string(agreeNegative) + ", positive off-grid " + std::to_string(gridMissed) +
                    ", undecided " + std::to_string(undecided));
  return r;
}

namespace {

Interval randomShape(Rng& rng) {
  const Rational a = oracle::ratio(oracle::uniformInt(rng, -6, 6), 2);
  const Rational b = a + oracle::ratio(oracle::uniformInt(rng, 1, 6), 2);
  switch (oracle::uniformInt(rng, 0, 9)) {
    case 0:
    case 1: return Interval(a, b, true, false);
    case 2: return Interval(a, b, false, true);
    case 3:
    case 4: return Interval::closed(a, b);
    case 5: return Interval(a, ExtRational::posInf(), true, false);
    case 6: return Interval(ExtRational::negInf(), b, false, true);
    case 7: return Interval::whole();
    case 8: return Interval(a);
    default: return Interval(a, b, true, false);
  }
}

std::string randomCondition(Rng& rng) {
  const auto n = [&](int lo, int hi) { return std::to_string(oracle::uniformInt(rng, lo, hi)); };
  switch (oracle::uniformInt(rng, 0, 5)) {
    case 0: return "a^2 + b^2 - " + n(0, 9) + "/4";
    case 1: return "a*b - " + n(-4, 4) + "/2";
    case 2: return "a - " + n(-2, 2) + "*b - " + n(-3, 3) + "/2";
    case 3: return "a^2 - " + n(-1, 4);
    case 4: return "(a - " + n(-3, 3) + "/2)*(b - " + n(-3, 3) + "/2)";
    default: return "a^2 - b^3 + " + n(-2, 2);
  }
}

std::optional<Rational> evaluateAugmented(const AugmentedSystem& A, const Polynomial& f,
                                          const std::vector<Rational>& values, const std::vector<bool>& squared) {
  Rational sum(0);
  for (const auto& t : f.terms()) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < A.ring->numVars(); ++i) {
      const unsigned e = t.monomial[i];
      if (squared[i]) {
        if (e % 2) return std::nullopt;
        v *= ratPow(values[i], e / 2);
      } else {
        v *= ratPow(values[i], e);
      }
    }
    sum += v;
  }
  return sum;
}

}  // namespace

SuiteResult augmentedRoundTrip(std::uint64_t seed, std::size_t pairs) {
  SuiteResult r;
  r.name = "real-root reformulation";
  Rng rng(seed);
  const RingPtr ring = makeRing({"a", "b"}, MonomialOrder::grevlex(2));
  const SearchOptions options{16, 4000, 2000};
  std::size_t certified = 0, consistent = 0, inconsistent = 0, directUnknown = 0, augmentedUnknown = 0, draws = 0;
  while (certified < pairs && draws < 20 * pairs) {
    ++draws;
    std::vector<Polynomial> E{parsePolynomial(randomCondition(rng), ring)};
    if (oracle::uniformInt(rng, 0, 3) == 0) E.push_back(parsePolynomial(randomCondition(rng), ring));
    const Box box({{"a", randomShape(rng), {}, {}}, {"b", randomShape(rng), {}, {}}});
    const std::vector<Polynomial> N{Polynomial::constant(ring, 1)};
    std::string label = "E = {";
    for (const auto& e : E) label += toString(e) + "; ";
    label += "} box " + toString(box.range(0)) + " x " + toString(box.range(1));

    const ConsistencyVerdict direct = realRootInBox(E, N, box, options);
    if (direct.status == Consistency::Unknown) {
      ++directUnknown;
      continue;
    }
    ++certified;
    const AugmentedSystem A = augment(E, N, box);
    std::vector<BoxCoordinate> wholeCoords;
    for (const auto& name : A.ring->names()) wholeCoords.push_back({name, Interval::whole(), {}, {}});
    const std::vector<Polynomial> one{Polynomial::constant(A.ring, 1)};
    const ConsistencyVerdict augmented = realRootInBox(A.polys, one, Box(wholeCoords), options);
    if (augmented.status == Consistency::Unknown) ++augmentedUnknown;

    ++r.checks;
    if (direct.status == Consistency::Consistent) {
      ++consistent;
      if (augmented.status == Consistency::Inconsistent) r.fail("augmented system refuted a box point: " + label);
      const auto& w = direct.witness.value();
      ++r.checks;
      bool ok = box.contains(w);
      for (const auto& e : E) ok = ok && e.evaluate(w) == 0;
      if (!ok) {
        r.fail("witness fails membership or vanishing: " + label);
        continue;
      }
      // Lift the witness: parameters, then η² for each auxiliary, then 1/N.
      std::vector<Rational> values(A.ring->numVars(), Rational(1));
      std::vector<bool> squared(A.ring->numVars(), false);
      for (std::size_t i = 0; i < 2; ++i) values[i] = w[i];
      for (std::size_t i = 0; i < 2; ++i) {
        if (!A.auxiliary[i]) continue;
        const std::size_t bi = *A.auxiliary[i];
        values[bi] = auxiliaryFromCoordinate(box.range(i), w[i]);
        squared[bi] = true;
        ++r.checks;
        const Interval& x = box.range(i);
        // A closed bounded range maps through a quadratic; the lifted
        // evaluation below covers it.
        const bool invertible = !(x.isBounded() && x.loClosed() && x.hiClosed());
        if (sgn(values[bi]) < 0 || (invertible && coordinateFromAuxiliary(x, values[bi]) != w[i])) {
          r.fail("auxiliary round trip fails: " + label);
        }
      }
      ++r.checks;
      for (const auto& f : A.polys) {
        const auto v = evaluateAugmented(A, f, values, squared);
        if (!v || *v != 0) {
          r.fail("lifted witness does not solve the augmented system: " + label);
          break;
        }
      }
    } else {
      ++inconsistent;
      if (augmented.status == Consistency::Consistent) r.fail("augmented system solvable, box empty: " + label);
      const auto ranges = box.ranges();
      if (std::all_of(ranges.begin(), ranges.end(), [](const Interval& x) { return x.isBounded(); })) {
        ++r.checks;
        if (auto pt = oracle::GridScanner(ranges, 8).findPoint(E, N)) {
          r.fail("grid point in a box certified empty: " + label + " at " + pointText(*pt));
        }
      }
    }
  }
  if (certified < pairs) r.fail("only " + std::to_string(certified) + " certified pairs");
  r.notes.push_back(std::to_string(certified) + " certified pairs (" + std::to_string(consistent) + " consistent, " +
                    std::to_string(inconsistent) + " inconsistent); direct unknown " + std::to_string(directUnknown) +
                    ", augmented unknown " + std::to_string(augmentedUnknown));
  return r;
}

}  // namespace props
