#include "igsys/apps.hpp"

#include <algorithm>
#include <cstdio>

#include "igsys/groebner.hpp"

namespace igsys {

// ---------------------------------------------------------------------------
// Univariate root sets

namespace {

std::string approxString(const RealRoot& r) {
  if (auto v = r.exactValue()) return toString(*v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", r.approx());
  return buf;
}

// a < b strictly; returns a rational strictly between them.
Rational separate(RealRoot a, RealRoot b) {
  for (;;) {
    if (a.hi() < b.lo()) return (a.hi() + b.lo()) / 2;
    if (!a.isExact() && a.hi() == b.lo()) return a.hi();
    if (!a.isExact()) a.refine((a.hi() - a.lo()) / 2);
    if (!b.isExact()) b.refine((b.hi() - b.lo()) / 2);
  }
}

struct Region {
  UPoly fMin, fMax;
  bool lowerClosed = true;
  bool upperClosed = true;
};

Region buildRegion(const IntervalPolynomial& f, std::size_t var, int side) {
  std::vector<Rational> lo, hi;
  Region r;
  for (const auto& t : f.terms()) {
    const auto e = t.monomial[var];
    const bool nonNegative = side > 0 || e % 2 == 0;
    const Interval& c = t.coef;
    if (lo.size() <= e) {
      lo.resize(e + 1);
      hi.resize(e + 1);
    }
    lo[e] = nonNegative ? c.lo().value() : c.hi().value();
    hi[e] = nonNegative ? c.hi().value() : c.lo().value();
    r.lowerClosed = r.lowerClosed && (nonNegative ? c.loClosed() : c.hiClosed());
    r.upperClosed = r.upperClosed && (nonNegative ? c.hiClosed() : c.loClosed());
  }
  r.fMin = UPoly(std::move(lo));
  r.fMax = UPoly(std::move(hi));
  return r;
}

bool memberAt(const Region& r, const RealRoot& c) {
  const int smin = signAt(r.fMin, c);
  const int smax = signAt(r.fMax, c);
  return (smin < 0 || (smin == 0 && r.lowerClosed)) && (smax > 0 || (smax == 0 && r.upperClosed));
}

bool lessThan(const RealRoot& a, const RealRoot& b) { return compare(a, b) < 0; }

}  // namespace

Interval valueSet(const IntervalPolynomial& f, const Rational& x) {
  Interval acc(Rational(0));
  for (const auto& t : f.terms()) {
    Rational m(1);
    for (std::size_t i = 0; i < t.monomial.numVars(); ++i)
      if (t.monomial[i]) m *= ratPow(x, t.monomial[i]);
    acc = add(acc, scale(t.coef, m));
  }
  return acc;
}

bool RootComponent::contains(const Rational& x) const {
  const RealRoot p = RealRoot::exact(x);
  if (lo.value) {
    const int c = compare(p, *lo.value);
    if (c < 0 || (c == 0 && !lo.closed)) return false;
  }
  if (hi.value) {
    const int c = compare(p, *hi.value);
    if (c > 0 || (c == 0 && !hi.closed)) return false;
  }
  return true;
}

Interval RootComponent::enclosure(const Rational& width) const {
  ExtRational l = ExtRational::negInf(), h = ExtRational::posInf();
  bool lc = false, hc = false;
  if (lo.value) {
    RealRoot r = *lo.value;
    r.refine(width);
    l = ExtRational(r.lo());
    lc = r.isExact() ? lo.closed : true;
  }
  if (hi.value) {
    RealRoot r = *hi.value;
    r.refine(width);
    h = ExtRational(r.hi());
    hc = r.isExact() ? hi.closed : true;
  }
  if (l == h) lc = hc = true;
  return Interval(l, h, lc, hc);
}

std::string RootComponent::toString() const {
  std::string s = lo.value ? std::string(lo.closed ? "[" : "(") + approxString(*lo.value) : "(-inf";
  s += ", ";
  s += hi.value ? approxString(*hi.value) + (hi.closed ? "]" : ")") : "inf)";
  return s;
}

bool RootSet::contains(const Rational& x) const {
  return std::any_of(components.begin(), components.end(), [&](const RootComponent& c) { return c.contains(x); });
}

IntervalUnion RootSet::enclosure(const Rational& width) const {
  std::vector<Interval> parts;
  for (const auto& c : components) parts.push_back(c.enclosure(width));
  return IntervalUnion(std::move(parts));
}

std::string RootSet::toString() const {
  if (components.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += " U ";
    s += components[i].toString();
  }
  return s;
}

RootSet solveUnivariate(const IntervalPolynomial& f) {
  const auto& ring = f.ring();
  std::optional<std::size_t> var;
  for (const auto& t : f.terms()) {
    if (!t.coef.isBounded()) throw MathError("solveUnivariate: coefficient " + toString(t.coef) + " is unbounded");
    for (std::size_t i = 0; i < t.monomial.numVars(); ++i) {
      if (!t.monomial[i]) continue;
      if (var && *var != i) throw MathError("solveUnivariate: polynomial is not univariate");
      var = i;
    }
  }
  if (!var) {
    if (ring->numVars() != 1) throw MathError("solveUnivariate: cannot tell which variable to solve for");
    var = 0;
  }

  RootSet out;
  const Region pos = buildRegion(f, *var, +1);
  const Region neg = buildRegion(f, *var, -1);
  out.fMinPositive = pos.fMin;
  out.fMaxPositive = pos.fMax;
  out.fMinNegative = neg.fMin;
  out.fMaxNegative = neg.fMax;

  const RealRoot zero = RealRoot::exact(Rational(0));
  std::vector<RealRoot> crit{zero};
  auto collect = [&](const UPoly& p, int side) {
    for (auto& r : isolateRealRoots(p))
      if (compare(r, zero) * side > 0) crit.push_back(std::move(r));
  };
  collect(neg.fMin, -1);
  collect(neg.fMax, -1);
  collect(pos.fMin, +1);
  collect(pos.fMax, +1);
  std::sort(crit.begin(), crit.end(), lessThan);
  std::vector<RealRoot> pts;
  for (auto& c : crit)
    if (pts.empty() || compare(pts.back(), c) != 0) pts.push_back(std::move(c));

  // Membership of gap k (left of pts[k]; gap pts.size() is the right tail)
  // and of each critical point.
  auto rationalMember = [&](const Rational& x) { return valueSet(f, x).containsZero(); };
  std::vector<bool> gapIn(pts.size() + 1), ptIn(pts.size());
  gapIn[0] = rationalMember(pts.front().lo() - 1);
  for (std::size_t k = 1; k < pts.size(); ++k) gapIn[k] = rationalMember(separate(pts[k - 1], pts[k]));
  gapIn[pts.size()] = rationalMember(pts.back().hi() + 1);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (auto v = pts[k].exactValue()) {
      ptIn[k] = rationalMember(*v);
    } else {
      ptIn[k] = memberAt(compare(pts[k], zero) > 0 ? pos : neg, pts[k]);
    }
  }

  // Pieces alternate gap0, pt0, gap1, pt1, ..., gapM.
  const std::size_t pieces = 2 * pts.size() + 1;
  auto inPiece = [&](std::size_t i) { return i % 2 == 0 ? gapIn[i / 2] : ptIn[i / 2]; };
  std::size_t i = 0;
  while (i < pieces) {
    if (!inPiece(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < pieces && inPiece(j + 1)) ++j;
    RootComponent comp;
    if (i % 2 == 1) {
      comp.lo = {pts[i / 2], true};
    } else if (i > 0) {
      comp.lo = {pts[i / 2 - 1], false};
    }
    if (j % 2 == 1) {
      comp.hi = {pts[j / 2], true};
    } else if (j / 2 < pts.size()) {
      comp.hi = {pts[j / 2], false};
    }
    out.components.push_back(std::move(comp));
    i = j + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Divisibility

DivisibilityReport iDivides(const Polynomial& g, const IntervalPolynomial& f, const SearchOptions& options) {
  if (g.isZero()) throw MathError("iDivides: divisor is zero");
  const RingPtr& ring = f.ring();
  const Polynomial gg = g.mapToRing(ring);
  IntervalSystem S{ring, {f, IntervalPolynomial::fromPolynomial(gg)}};
  const auto ps = parameterize(S, ring->order());

  DivisibilityReport report;
  report.igs = igsParametric(ps.ring, ps.polys, ps.box, options);
  const auto& pr = ps.ring;

  // [f] specialises to zero only when every coefficient is an interval
  // containing 0; then some coefficient parameter must stay nonzero.
  bool alwaysNonzero = false;
  std::vector<Polynomial> coefParams;
  for (const auto& t : f.terms())
    if (t.coef.isDegenerate()) alwaysNonzero = true;
  for (std::size_t i = 0; i < ps.box.size(); ++i)
    if (ps.box.coords()[i].poly == 0u) coefParams.push_back(Polynomial::variable(pr.parameters(), i));

  const Polynomial targetX = gg.mapToRing(pr.variables()).monic();
  for (const auto& bv : report.igs.branches) {
    const Branch& b = bv.branch;
    if (b.G.size() != 1 || b.G[0].isConstant()) continue;
    const auto N = alwaysNonzero ? b.N : productSet(b.N, coefParams);
    const auto v = realRootInBox(b.E, N, ps.box, options);
    if (v.status == Consistency::Unknown) report.undecided = true;
    if (v.status != Consistency::Consistent) continue;
    const auto& w = *v.witness;
    if (pr.specialize(b.G[0], w).monic() != targetX) continue;

    std::vector<Rational> choice;
    std::size_t next = 0;
    for (const auto& t : f.terms()) choice.push_back(t.coef.isDegenerate() ? t.coef.lo().value() : w[next++]);
    Polynomial p = f.familyMember(choice);
    if (p.isZero() || !exactQuotient(p, gg)) continue;
    report.verdict = true;
    report.undecided = false;
    report.condition = b.E;
    report.witnessPoint = w;
    report.witnessPolynomial = std::move(p);
    return report;
  }
  return report;
}

EpsilonReport epsilonDivides(const Polynomial& f, const Polynomial& g, std::span<const Rational> schedule,
                             const SearchOptions& options) {
  EpsilonReport out;
  for (const auto& eps : schedule) {
    if (sgn(eps) < 0) throw MathError("epsilonDivides: negative ε in schedule");
    std::vector<IntervalTerm> terms;
    for (const auto& t : f.terms()) terms.push_back({Interval::closed(t.coef - eps, t.coef + eps), t.monomial});
    IntervalPolynomial widened(f.ring(), std::move(terms));
    out.report = iDivides(g, widened, options);
    out.trace.emplace_back(eps, out.report.verdict);
    if (out.report.verdict) {
      out.epsilon = eps;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Real solutions by back substitution

std::string toString(RealStatus s) {
  switch (s) {
    case RealStatus::Exists: return "exists";
    case RealStatus::None: return "none";
    case RealStatus::Unknown: return "unknown";
  }
  return "?";
}

namespace {

bool rootInRange(const RealRoot& r, const Interval& range) {
  if (auto v = r.exactValue()) return range.contains(*v);
  if (range.lo().isFinite()) {
    const int c = compare(r, RealRoot::exact(range.lo().value()));
    if (c < 0 || (c == 0 && !range.loClosed())) return false;
  }
  if (range.hi().isFinite()) {
    const int c = compare(r, RealRoot::exact(range.hi().value()));
    if (c > 0 || (c == 0 && !range.hiClosed())) return false;
  }
  return true;
}

class BackSubstitution {
 public:
  BackSubstitution(std::vector<Polynomial> basis, std::span<const Interval> ranges)
      : basis_(std::move(basis)), ranges_(ranges.begin(), ranges.end()), values_(ranges.size(), RealRoot::exact(0)) {}

  RealStatus solve(std::size_t level, const std::vector<Polynomial>& polys) {
    for (const auto& p : polys)
      if (p.isConstant() && !p.isZero()) return RealStatus::None;
    const std::size_t var = level;
    UPoly u;
    bool any = false;
    for (const auto& p : polys) {
      if (p.isZero()) continue;
      bool onlyVar = true;
      for (std::size_t i = 0; i < var && onlyVar; ++i) onlyVar = !p.usesVariable(i);
      if (!onlyVar) continue;
      const UPoly q = UPoly::fromPolynomial(p, var);
      u = any ? gcd(u, q) : q;
      any = true;
    }
    if (!any) return RealStatus::Unknown;
    if (u.degree() == 0) return RealStatus::None;
    RealStatus status = RealStatus::None;
    for (const auto& r : isolateRealRoots(u)) {
      if (!rootInRange(r, ranges_[var])) continue;
      values_[var] = r;
      if (var == 0) return RealStatus::Exists;
      auto v = r.exactValue();
      if (!v) {
        status = RealStatus::Unknown;
        continue;
      }
      std::vector<Polynomial> next;
      for (const auto& p : polys) next.push_back(p.usesVariable(var) ? p.substitute(var, *v) : p);
      const auto s = solve(level - 1, next);
      if (s == RealStatus::Exists) return s;
      if (s == RealStatus::Unknown) status = RealStatus::Unknown;
    }
    return status;
  }

  const std::vector<RealRoot>& values() const { return values_; }

 private:
  std::vector<Polynomial> basis_;
  std::vector<Interval> ranges_;
  std::vector<RealRoot> values_;
};

}  // namespace

RealSolveReport realSolutions(std::span<const Polynomial> F, std::span<const Interval> ranges) {
  RealSolveReport out;
  std::vector<Polynomial> nonzero;
  for (const auto& f : F)
    if (!f.isZero()) nonzero.push_back(f);
  if (nonzero.empty()) return out;
  const auto& base = nonzero.front().ring();
  if (ranges.size() != base->numVars()) throw MathError("realSolutions: one range per variable required");
  const RingPtr lexRing = makeRing(base->names(), MonomialOrder::lex(base->numVars()));
  std::vector<Polynomial> mapped;
  for (const auto& f : nonzero) mapped.push_back(f.mapToRing(lexRing));
  const auto G = reducedGB(lexRing, mapped);
  if (G.isUnit()) {
    out.status = RealStatus::None;
    return out;
  }
  BackSubstitution solver(G.generators(), ranges);
  out.status = solver.solve(base->numVars() - 1, G.generators());
  if (out.status == RealStatus::Exists) out.solution = solver.values();
  return out;
}

// ---------------------------------------------------------------------------
// Fuzzy systems

FuzzyReport fuzzySolve(const ParametricRing& ring, std::span<const Polynomial> polys, const Interval& hRange,
                       const std::map<std::string, Interval>& signs, SignMode mode, const SearchOptions& options) {
  if (ring.numParameters() != 1) throw MathError("fuzzySolve: exactly one fuzzy parameter is required");
  if (hRange.isDegenerate()) throw MathError("fuzzySolve: parameter range is a single point");
  for (const auto& [name, range] : signs)
    if (!ring.variables()->indexOf(name)) throw MathError("fuzzySolve: sign constraint on unknown variable '" + name + "'");

  FuzzyReport out;
  const bool closedEnd = hRange.hi().isFinite() && hRange.hiClosed();
  out.searched = closedEnd ? Interval(hRange.lo(), hRange.hi(), hRange.loClosed(), false) : hRange;
  const Box box({{ring.parameters()->names()[0], out.searched, std::nullopt, std::nullopt}});
  out.igs = igsParametric(ring, polys, box, options);

  if (closedEnd) {
    const Rational h = hRange.hi().value();
    out.endpoint = h;
    std::vector<Polynomial> special;
    const std::vector<Rational> point{h};
    for (const auto& p : polys) special.push_back(ring.specialize(p, point));
    std::vector<Interval> ranges;
    for (const auto& name : ring.variables()->names()) {
      auto it = signs.find(name);
      ranges.push_back(mode == SignMode::Enforce && it != signs.end() ? it->second : Interval::whole());
    }
    out.endpointResult = realSolutions(special, ranges);
  }
  return out;
}

}  // namespace igsys
