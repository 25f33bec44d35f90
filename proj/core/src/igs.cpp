#include "igsys/igs.hpp"

#include <algorithm>
#include <map>

#include "igsys/groebner.hpp"
#include "igsys/univariate.hpp"

namespace igsys {

std::vector<Interval> Box::ranges() const {
  std::vector<Interval> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.range);
  return out;
}

bool Box::contains(std::span<const Rational> point) const {
  if (point.size() != coords_.size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (!coords_[i].range.contains(point[i])) return false;
  return true;
}

std::string toString(Consistency c) {
  switch (c) {
    case Consistency::Consistent: return "consistent";
    case Consistency::Inconsistent: return "inconsistent";
    case Consistency::Unknown: return "unknown";
  }
  return "?";
}

std::string toString(Certificate c) {
  switch (c) {
    case Certificate::None: return "none";
    case Certificate::ComplexEmpty: return "complex-empty";
    case Certificate::BoxPruned: return "box-pruned";
    case Certificate::WitnessFound: return "witness-found";
    case Certificate::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

ParametricSystem parameterize(const IntervalSystem& system, const MonomialOrder& variableOrder,
                              const std::string& prefix) {
  if (!system.ring) throw MathError("parameterize: system has no ring");
  std::vector<std::string> names;
  std::vector<BoxCoordinate> coords;
  for (std::size_t p = 0; p < system.polys.size(); ++p) {
    const auto& terms = system.polys[p].terms();
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (terms[k].coef.isDegenerate()) continue;
      std::string name = prefix + std::to_string(coords.size() + 1);
      if (system.ring->indexOf(name)) throw MathError("parameter name '" + name + "' clashes with a variable");
      names.push_back(name);
      coords.push_back({name, terms[k].coef, p, k});
    }
  }
  ParametricRing ring(system.ring->names(), variableOrder, names, MonomialOrder::grevlex(names.size()));
  const auto& C = ring.combined();
  const std::size_t nx = ring.numVariables();
  std::vector<Polynomial> polys;
  std::size_t next = 0;
  for (const auto& f : system.polys) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      std::vector<Monomial::Exponent> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
      e.resize(C->numVars(), 0);
      Rational c(1);
      if (t.coef.isDegenerate()) {
        c = t.coef.lo().value();
      } else {
        e[nx + next++] = 1;
      }
      terms.push_back({Monomial(std::move(e)), c});
    }
    polys.push_back(Polynomial::fromTerms(C, std::move(terms)));
  }
  return {std::move(ring), std::move(polys), Box(std::move(coords))};
}

// ---------------------------------------------------------------------------
// Augmentation

namespace {

enum class Shape { Point, Whole, ClosedOpen, OpenClosed, Closed, LowerRay, UpperRay, Unsupported };

Shape shapeOf(const Interval& r) {
  if (r.isDegenerate()) return Shape::Point;
  const bool lf = r.lo().isFinite(), hf = r.hi().isFinite();
  if (!lf && !hf) return Shape::Whole;
  if (lf && hf) {
    if (r.loClosed() && !r.hiClosed()) return Shape::ClosedOpen;
    if (!r.loClosed() && r.hiClosed()) return Shape::OpenClosed;
    if (r.loClosed() && r.hiClosed()) return Shape::Closed;
    return Shape::Unsupported;
  }
  if (lf) return r.loClosed() ? Shape::LowerRay : Shape::Unsupported;
  return r.hiClosed() ? Shape::UpperRay : Shape::Unsupported;
}

std::string uniqueName(const std::vector<std::string>& taken, const std::string& base) {
  std::string s = base;
  for (int k = 0; std::find(taken.begin(), taken.end(), s) != taken.end(); ++k) s = base + "_" + std::to_string(k);
  return s;
}

const RingPtr& ringOf(std::span<const Polynomial> E, std::span<const Polynomial> N) {
  if (!E.empty()) return E.front().ring();
  if (!N.empty()) return N.front().ring();
  throw MathError("condition sets are both empty; no ring to work in");
}

}  // namespace

AugmentedSystem augment(std::span<const Polynomial> E, std::span<const Polynomial> N, const Box& box) {
  const RingPtr& base = ringOf(E, N);
  if (base->numVars() != box.size()) throw MathError("augment: box dimension differs from the parameter count");
  std::vector<std::string> names = base->names();
  std::vector<std::optional<std::size_t>> aux(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    const Shape s = shapeOf(box.range(i));
    if (s == Shape::Unsupported)
      throw MathError("augment: coordinate " + base->names()[i] + " in " + toString(box.range(i)) +
                      " has no auxiliary form; use realRootInBox directly");
    if (s == Shape::Point || s == Shape::Whole) continue;
    aux[i] = names.size();
    names.push_back(uniqueName(names, "b_" + base->names()[i]));
  }
  const std::size_t firstC = names.size();
  for (std::size_t j = 0; j < N.size(); ++j) names.push_back(uniqueName(names, "c_" + std::to_string(j + 1)));

  const RingPtr ring = makeRing(names, MonomialOrder::grevlex(names.size()));
  std::vector<Polynomial> F;
  for (const auto& e : E) F.push_back(e.mapToRing(ring));
  const Polynomial one = Polynomial::constant(ring, Rational(1));
  for (std::size_t i = 0; i < box.size(); ++i) {
    const Interval& r = box.range(i);
    const Polynomial a = Polynomial::variable(ring, i);
    const Shape s = shapeOf(r);
    if (s == Shape::Whole) continue;
    if (s == Shape::Point) {
      F.push_back(a - Polynomial::constant(ring, r.lo().value()));
      continue;
    }
    const Polynomial b = Polynomial::variable(ring, *aux[i]);
    const Polynomial b2 = b * b;
    switch (s) {
      case Shape::ClosedOpen: {
        const Rational& al = r.lo().value();
        const Rational& be = r.hi().value();
        F.push_back(a + (a - be * one) * b2 - al * one);
        break;
      }
      case Shape::OpenClosed: {
        const Rational& al = r.lo().value();
        const Rational& be = r.hi().value();
        F.push_back(a + (a - al * one) * b2 - be * one);
        break;
      }
      case Shape::Closed:
        F.push_back((a - r.lo().value() * one) * (r.hi().value() * one - a) - b2);
        break;
      case Shape::LowerRay:
        F.push_back(a - r.lo().value() * one - b2);
        break;
      case Shape::UpperRay:
        F.push_back(a - r.hi().value() * one + b2);
        break;
      default:
        break;
    }
  }
  Polynomial prod = one;
  for (std::size_t j = 0; j < N.size(); ++j)
    prod = prod * (Polynomial::variable(ring, firstC + j) * N[j].mapToRing(ring) - one);
  F.push_back(prod);
  return {ring, std::move(F), std::move(aux)};
}

Rational coordinateFromAuxiliary(const Interval& range, const Rational& s) {
  if (sgn(s) < 0) throw MathError("auxiliary square must be non-negative");
  switch (shapeOf(range)) {
    case Shape::Point: return range.lo().value();
    case Shape::ClosedOpen: return (range.lo().value() + range.hi().value() * s) / (1 + s);
    case Shape::OpenClosed: return (range.hi().value() + range.lo().value() * s) / (1 + s);
    case Shape::LowerRay: return range.lo().value() + s;
    case Shape::UpperRay: return range.hi().value() - s;
    default: throw MathError("coordinate shape " + toString(range) + " has no rational auxiliary map");
  }
}

Rational auxiliaryFromCoordinate(const Interval& range, const Rational& g) {
  if (!range.contains(g)) throw MathError("coordinate value outside its range");
  switch (shapeOf(range)) {
    case Shape::Point: return Rational(0);
    case Shape::ClosedOpen: return (g - range.lo().value()) / (range.hi().value() - g);
    case Shape::OpenClosed: return (range.hi().value() - g) / (g - range.lo().value());
    case Shape::Closed: return (g - range.lo().value()) * (range.hi().value() - g);
    case Shape::LowerRay: return g - range.lo().value();
    case Shape::UpperRay: return range.hi().value() - g;
    default: throw MathError("coordinate shape " + toString(range) + " has no auxiliary variable");
  }
}

// ---------------------------------------------------------------------------
// Witness search

namespace {

std::vector<Rational> candidateValues(const Interval& r) {
  std::vector<Rational> out;
  auto push = [&](const Rational& v) {
    if (r.contains(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  if (r.isDegenerate()) {
    push(r.lo().value());
    return out;
  }
  for (long v : {0L, 1L, -1L}) push(Rational(v));
  push(r.interiorPoint());
  if (r.lo().isFinite()) push(r.lo().value());
  if (r.hi().isFinite()) push(r.hi().value());
  push(Rational(1, 2));
  push(Rational(-1, 2));
  push(Rational(2));
  push(Rational(-2));
  if (r.isBounded()) {
    const Rational& lo = r.lo().value();
    const Rational w = r.hi().value() - lo;
    push(Rational(lo + w / 4));
    push(Rational(lo + 3 * w / 4));
    push(Rational(lo + w / 3));
  }
  return out;
}

class WitnessSearch {
 public:
  WitnessSearch(std::span<const Polynomial> E, std::span<const Polynomial> N, const std::vector<Interval>& ranges,
                std::size_t budget)
      : N_(N), ranges_(ranges), budget_(budget) {
    for (const auto& e : E)
      if (!e.isZero()) eqs_.push_back(e);
  }

  std::optional<std::vector<Rational>> run() {
    std::vector<std::optional<Rational>> point(ranges_.size());
    if (!step(eqs_, point)) return std::nullopt;
    std::vector<Rational> out;
    out.reserve(point.size());
    for (auto& v : point) out.push_back(*v);
    return out;
  }

 private:
  bool step(std::vector<Polynomial> eqs, std::vector<std::optional<Rational>>& point) {
    if (++nodes_ > budget_) return false;
    std::erase_if(eqs, [](const Polynomial& p) { return p.isZero(); });
    for (const auto& p : eqs)
      if (p.isConstant()) return false;

    std::vector<std::size_t> freeVars;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (!point[i]) freeVars.push_back(i);
    if (freeVars.empty()) return acceptsN(point);

    // A polynomial in a single unassigned variable pins that variable.
    const Polynomial* best = nullptr;
    std::size_t bestVar = 0;
    for (const auto& p : eqs) {
      std::optional<std::size_t> only;
      bool single = true;
      for (std::size_t v : freeVars) {
        if (!p.usesVariable(v)) continue;
        if (only) {
          single = false;
          break;
        }
        only = v;
      }
      if (single && only && (!best || p.degreeIn(*only) < best->degreeIn(bestVar))) {
        best = &p;
        bestVar = *only;
      }
    }
    if (best) {
      const auto roots = rationalRootsIn(UPoly::fromPolynomial(*best, bestVar), ranges_[bestVar]);
      for (const auto& r : roots)
        if (tryValue(eqs, point, bestVar, r)) return true;
      return false;
    }

    // Otherwise fix the free variable of highest degree in the equations;
    // with no equations left, fix the first free variable.
    std::size_t pick = freeVars.front();
    unsigned pickDeg = 0;
    for (std::size_t v : freeVars) {
      unsigned d = 0;
      for (const auto& p : eqs) d = std::max<unsigned>(d, p.degreeIn(v));
      if (d > pickDeg) {
        pick = v;
        pickDeg = d;
      }
    }
    for (const auto& value : candidateValues(ranges_[pick])) {
      if (tryValue(eqs, point, pick, value)) return true;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  bool tryValue(const std::vector<Polynomial>& eqs, std::vector<std::optional<Rational>>& point, std::size_t var,
                const Rational& value) {
    std::vector<Polynomial> next;
    next.reserve(eqs.size());
    for (const auto& p : eqs) next.push_back(p.usesVariable(var) ? p.substitute(var, value) : p);
    point[var] = value;
    if (step(std::move(next), point)) return true;
    point[var].reset();
    return false;
  }

  bool acceptsN(const std::vector<std::optional<Rational>>& point) const {
    std::vector<Rational> p;
    p.reserve(point.size());
    for (const auto& v : point) p.push_back(*v);
    return std::any_of(N_.begin(), N_.end(), [&](const Polynomial& g) { return sgn(g.evaluate(p)) != 0; });
  }

  std::vector<Polynomial> eqs_;
  std::span<const Polynomial> N_;
  const std::vector<Interval>& ranges_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

bool isWitness(std::span<const Polynomial> E, std::span<const Polynomial> N, const std::vector<Interval>& ranges,
               std::span<const Rational> p) {
  for (std::size_t i = 0; i < ranges.size(); ++i)
    if (!ranges[i].contains(p[i])) return false;
  for (const auto& e : E)
    if (sgn(e.evaluate(p)) != 0) return false;
  return std::any_of(N.begin(), N.end(), [&](const Polynomial& g) { return sgn(g.evaluate(p)) != 0; });
}

// ---------------------------------------------------------------------------
// Branch and prune

struct SubBox {
  std::vector<Interval> ranges;
  unsigned depth;
};

// Index of the coordinate to bisect, nullopt when every coordinate is a point.
std::optional<std::size_t> widest(const std::vector<Interval>& r) {
  std::optional<std::size_t> best;
  std::optional<Rational> bestWidth;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].isDegenerate()) continue;
    const auto w = r[i].width();
    if (!w) {
      if (!best || bestWidth) {
        best = i;
        bestWidth.reset();
      }
      continue;
    }
    if (!best || (bestWidth && *w > *bestWidth)) {
      best = i;
      bestWidth = w;
    }
  }
  return best;
}

std::pair<Interval, Interval> bisect(const Interval& r) {
  Rational m;
  if (r.isBounded()) {
    m = (r.lo().value() + r.hi().value()) / 2;
  } else if (r.lo().isFinite()) {
    m = r.lo().value() + std::max(Rational(1), Rational(abs(r.lo().value())));
  } else if (r.hi().isFinite()) {
    m = r.hi().value() - std::max(Rational(1), Rational(abs(r.hi().value())));
  } else {
    m = 0;
  }
  return {Interval(r.lo(), ExtRational(m), r.loClosed(), true), Interval(ExtRational(m), r.hi(), false, r.hiClosed())};
}

// Divides out the variable factors that cannot vanish on the box and lowers
// the remaining variable factors to exponent one.
Polynomial stripBoxFactors(const Polynomial& p, const std::vector<Interval>& ranges) {
  if (p.isZero()) return p;
  Monomial content = p.terms().front().monomial;
  for (const auto& t : p.terms()) content = gcd(content, t.monomial);
  if (content.isOne()) return p;
  for (std::size_t i = 0; i < ranges.size(); ++i)
    if (content[i] > 0) content.setExponent(i, ranges[i].containsZero() ? content[i] - 1 : content[i]);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({content.quotientOf(t.monomial), t.coef});
  return Polynomial::fromTerms(p.ring(), std::move(terms)).primitive();
}

std::vector<Polynomial> stripAll(std::span<const Polynomial> v, const std::vector<Interval>& ranges) {
  std::vector<Polynomial> out;
  for (const auto& p : v) {
    Polynomial q = stripBoxFactors(p, ranges);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

bool excludesSolutions(const std::vector<Polynomial>& prune, std::span<const Polynomial> N,
                       const std::vector<Interval>& ranges) {
  for (const auto& p : prune)
    if (!p.evaluate(std::span<const Interval>(ranges)).containsZero()) return true;
  return std::all_of(N.begin(), N.end(),
                     [&](const Polynomial& g) { return g.evaluate(std::span<const Interval>(ranges)).isZero(); });
}

}  // namespace

ConsistencyVerdict realRootInBox(std::span<const Polynomial> E, std::span<const Polynomial> N, const Box& box,
                                 const SearchOptions& options) {
  ConsistencyVerdict out;
  const bool anyN = std::any_of(N.begin(), N.end(), [](const Polynomial& g) { return !g.isZero(); });
  const bool unitE = std::any_of(E.begin(), E.end(), [](const Polynomial& e) { return e.isConstant() && !e.isZero(); });
  if (!anyN || unitE) {
    out.status = Consistency::Inconsistent;
    out.certificate = Certificate::ComplexEmpty;
    return out;
  }
  if (ringOf(E, N)->numVars() != box.size()) throw MathError("realRootInBox: box dimension differs from the parameter count");

  if (!isConsistent(E, N)) {
    out.status = Consistency::Inconsistent;
    out.certificate = Certificate::ComplexEmpty;
    return out;
  }

  // On the box, V(E) \ V(N) is unchanged by removing non-vanishing factors.
  const auto ranges = box.ranges();
  const auto Eb = stripAll(E, ranges);
  const auto Nb = stripAll(N, ranges);
  if (!isConsistent(Eb, Nb)) {
    out.status = Consistency::Inconsistent;
    out.certificate = Certificate::BoxPruned;
    return out;
  }
  auto found = [&](std::vector<Rational> w) {
    out.status = Consistency::Consistent;
    out.certificate = Certificate::WitnessFound;
    out.witness = std::move(w);
    return out;
  };
  if (auto w = WitnessSearch(Eb, Nb, ranges, options.witnessNodes).run(); w && isWitness(E, N, ranges, *w))
    return found(std::move(*w));

  // V(E) \ V(N) is the union over n in N of V(E) \ V(n), whose closure is
  // V(E : n^∞); a sub-box is dropped once every piece is excluded.
  struct Piece {
    Polynomial n;
    std::vector<Polynomial> prune;
  };
  std::vector<Piece> pieces;
  for (const auto& n : Nb) {
    if (n.isZero()) continue;
    Piece piece{n, {}};
    for (const auto& e : Eb)
      if (!e.isZero()) piece.prune.push_back(e);
    const auto S = saturate(Eb, n);
    for (const auto& g : S.generators())
      if (std::find(piece.prune.begin(), piece.prune.end(), g) == piece.prune.end()) piece.prune.push_back(g);
    pieces.push_back(std::move(piece));
  }
  auto excluded = [&](const std::vector<Interval>& rs) {
    return std::all_of(pieces.begin(), pieces.end(), [&](const Piece& p) {
      return excludesSolutions(p.prune, std::span<const Polynomial>(&p.n, 1), rs);
    });
  };

  std::vector<SubBox> stack{{ranges, 0}};
  std::size_t examined = 0;
  bool exhausted = false;
  while (!stack.empty()) {
    SubBox cur = std::move(stack.back());
    stack.pop_back();
    if (++examined > options.maxBoxes) {
      exhausted = true;
      break;
    }
    if (excluded(cur.ranges)) continue;
    if (cur.depth > 0 && cur.depth % 3 == 0) {
      if (auto w = WitnessSearch(Eb, Nb, cur.ranges, 64).run(); w && isWitness(E, N, ranges, *w)) return found(std::move(*w));
    }
    const auto axis = widest(cur.ranges);
    if (!axis) {
      std::vector<Rational> p;
      for (const auto& r : cur.ranges) p.push_back(r.lo().value());
      if (isWitness(E, N, ranges, p)) return found(std::move(p));
      continue;
    }
    if (cur.depth >= options.depth) {
      exhausted = true;
      continue;
    }
    auto [left, right] = bisect(cur.ranges[*axis]);
    SubBox r = cur;
    r.ranges[*axis] = std::move(right);
    ++r.depth;
    cur.ranges[*axis] = std::move(left);
    ++cur.depth;
    stack.push_back(std::move(r));
    stack.push_back(std::move(cur));
  }
  if (exhausted) {
    out.status = Consistency::Unknown;
    out.certificate = Certificate::BudgetExhausted;
  } else {
    out.status = Consistency::Inconsistent;
    out.certificate = Certificate::BoxPruned;
  }
  return out;
}

bool intervalIsConsistent(std::span<const Polynomial> E, std::span<const Polynomial> N, const Box& box,
                          const SearchOptions& options) {
  if (realRootInBox(E, N, box, options).status == Consistency::Inconsistent) return false;
  return isConsistent(E, N);
}

// ---------------------------------------------------------------------------
// Driver

bool IGSResult::hasUnknown() const {
  return std::any_of(branches.begin(), branches.end(),
                     [](const BranchVerdict& b) { return b.verdict.status == Consistency::Unknown; });
}

namespace {

std::string conditionKey(std::span<const Polynomial> E, std::span<const Polynomial> N) {
  std::string key;
  for (const auto& e : E) key += e.primitive().toString() + ";";
  key += "|";
  for (const auto& g : N) key += g.primitive().toString() + ";";
  return key;
}

}  // namespace

IGSResult igsParametric(const ParametricRing& ring, std::span<const Polynomial> polys, const Box& box,
                        const SearchOptions& options) {
  if (box.size() != ring.numParameters()) throw MathError("igs: box dimension differs from the parameter count");
  std::map<std::string, BranchVerdict> seen;
  std::vector<BranchVerdict> rejected;
  ConsistencyTest test = [&](std::span<const Polynomial> E, std::span<const Polynomial> N) {
    const std::string key = conditionKey(E, N);
    if (auto it = seen.find(key); it != seen.end()) return it->second.verdict.status != Consistency::Inconsistent;
    ConsistencyVerdict v = N.empty() || std::all_of(N.begin(), N.end(), [](const Polynomial& g) { return g.isZero(); })
                               ? ConsistencyVerdict{Consistency::Inconsistent, std::nullopt, Certificate::ComplexEmpty}
                               : realRootInBox(E, N, box, options);
    if (v.status != Consistency::Inconsistent && !isConsistent(E, N))
      v = {Consistency::Inconsistent, std::nullopt, Certificate::ComplexEmpty};
    Branch b;
    for (const auto& e : E) b.E.push_back(e.primitive());
    for (const auto& g : N) b.N.push_back(g.primitive());
    BranchVerdict rec{std::move(b), v};
    if (v.status == Consistency::Inconsistent) rejected.push_back(rec);
    seen.emplace(key, std::move(rec));
    return v.status != Consistency::Inconsistent;
  };

  const std::vector<Polynomial> N{Polynomial::constant(ring.parameters(), Rational(1))};
  const auto branches = pgbMain(ring, polys, {}, N, test);

  IGSResult result{ring, std::vector<Polynomial>(polys.begin(), polys.end()), box, {}, std::move(rejected)};
  for (const auto& b : branches) {
    const auto it = seen.find(conditionKey(b.E, b.N));
    ConsistencyVerdict v = it != seen.end() ? it->second.verdict : ConsistencyVerdict{};
    result.branches.push_back({b, std::move(v)});
  }
  return result;
}

IGSResult igs(const IntervalSystem& system, const MonomialOrder& variableOrder, const SearchOptions& options) {
  const auto ps = parameterize(system, variableOrder);
  return igsParametric(ps.ring, ps.polys, ps.box, options);
}

}  // namespace igsys
