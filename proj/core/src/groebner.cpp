#include "igsys/groebner.hpp"

#include <algorithm>
#include <optional>

namespace igsys {

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> G) {
  Polynomial rest = f;
  Polynomial remainder(f.ring());
  while (!rest.isZero()) {
    const Term& lt = rest.leadingTerm();
    const Polynomial* divisor = nullptr;
    for (const auto& g : G) {
      if (!g.isZero() && g.leadingMonomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const Monomial q = divisor->leadingMonomial().quotientOf(lt.monomial);
      const Rational c = lt.coef / divisor->leadingCoefficient();
      rest.subtractMultiple(c, q, *divisor);
    } else {
      remainder.appendSmallerTerm(rest.takeLeadingTerm());
    }
  }
  return remainder;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leadingMonomial(), g.leadingMonomial());
  Polynomial s = f.mulTerm(f.leadingMonomial().quotientOf(l), Rational(1 / f.leadingCoefficient()));
  s.subtractMultiple(Rational(1 / g.leadingCoefficient()), g.leadingMonomial().quotientOf(l), g);
  return s;
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const { return normalForm(f, generators_); }

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)), order_(ring_->order()) {}

  /// Returns false once the unit ideal is detected.
  bool add(Polynomial h) {
    if (h.isZero()) return true;
    h = normalForm(h, activePolys()).monic();
    if (h.isZero()) return true;
    if (h.isConstant()) {
      unit_ = true;
      return false;
    }
    update(std::move(h));
    return true;
  }

  void run() {
    while (!unit_ && !pairs_.empty()) {
      const std::size_t best = selectPair();
      const CriticalPair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      Polynomial s = sPolynomial(polys_[p.i], polys_[p.j]);
      if (!add(std::move(s))) return;
    }
  }

  GroebnerBasis result() {
    if (unit_) return GroebnerBasis(ring_, {Polynomial::constant(ring_, Rational(1))}, true);
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) basis.push_back(polys_[k]);
    // The active set is minimal; reduce tails against the others.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (std::size_t m = 0; m < basis.size(); ++m)
        if (m != k) others.push_back(basis[m]);
      Polynomial tail = basis[k];
      Term lead = tail.takeLeadingTerm();
      Polynomial reduced = Polynomial::term(ring_, lead.monomial, lead.coef);
      reduced += normalForm(tail, others);
      basis[k] = reduced.monic();
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leadingMonomial(), b.leadingMonomial()) > 0;
    });
    return GroebnerBasis(ring_, std::move(basis), true);
  }

 private:
  std::vector<Polynomial> activePolys() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  std::size_t selectPair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k].lcm;
      const auto& b = pairs_[best].lcm;
      if (a.degree() < b.degree() || (a.degree() == b.degree() && order_.less(a, b))) best = k;
    }
    return best;
  }

  // Gebauer-Möller installation of a new basis element.
  void update(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial& lmH = h.leadingMonomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lm = polys_[hi].leadingMonomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::size_t k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      const Monomial& lg = polys_[k].leadingMonomial();
      c.push_back({k, lcm(lm, lg), lm.isCoprimeWith(lg)});
    }
    std::vector<Candidate> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (c[m].lcm.divides(c[k].lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (d[m].lcm.divides(c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      const bool drop = lm.divides(p.lcm) &&
                        !(lcm(polys_[p.i].leadingMonomial(), lm) == p.lcm) &&
                        !(lcm(polys_[p.j].leadingMonomial(), lm) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& cand : d)
      if (!cand.coprime) kept.push_back({cand.g, hi, std::move(cand.lcm)});
    pairs_ = std::move(kept);
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lm.divides(polys_[k].leadingMonomial())) active_[k] = false;
    (void)lmH;
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis reducedGB(const RingPtr& ring, std::span<const Polynomial> F) {
  Buchberger engine(ring);
  for (const auto& f : F) {
    if (f.ring() != ring && !f.ring()->sameAs(*ring)) throw MathError("reducedGB: generator from another ring");
    if (!engine.add(f)) break;
  }
  engine.run();
  return engine.result();
}

GroebnerBasis reducedGB(std::span<const Polynomial> F) {
  if (F.empty()) throw MathError("reducedGB: empty generator list has no ring; pass the ring explicitly");
  return reducedGB(F.front().ring(), F);
}

std::vector<Polynomial> eliminate(const GroebnerBasis& G, std::span<const std::string> keep) {
  const auto& order = G.order();
  const auto& names = G.ring()->names();
  if (!order.isBlock()) throw MathError("eliminate: the basis order is not a block order");
  // The kept variables must be exactly the trailing blocks.
  std::size_t split = names.size();
  for (const auto& blk : order.blocks()) {
    bool allKept = true;
    for (std::size_t i = blk.begin; i < blk.end; ++i)
      allKept = allKept && std::find(keep.begin(), keep.end(), names[i]) != keep.end();
    if (allKept && split == names.size()) split = blk.begin;
    if (!allKept && split != names.size()) throw MathError("eliminate: kept variables are not the trailing blocks");
  }
  if (split == 0 || names.size() - split != keep.size())
    throw MathError("eliminate: kept variables do not form the trailing blocks of the order");
  std::vector<Polynomial> out;
  for (const auto& g : G.generators()) {
    bool inSubring = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < split && inSubring; ++i)
        if (t.monomial[i]) inSubring = false;
    if (inSubring) out.push_back(g);
  }
  return out;
}

bool idealMember(const Polynomial& g, std::span<const Polynomial> E) {
  if (g.isZero()) return true;
  return reducedGB(g.ring(), E).contains(g);
}

namespace {

std::string freshName(const std::vector<std::string>& names, const std::string& base) {
  std::string candidate = base;
  for (int k = 0; std::find(names.begin(), names.end(), candidate) != names.end(); ++k)
    candidate = base + std::to_string(k);
  return candidate;
}

}  // namespace

bool radicalMember(const Polynomial& g, std::span<const Polynomial> E) {
  if (g.isZero()) return true;
  const auto& base = g.ring();
  if (std::all_of(E.begin(), E.end(), [](const Polynomial& e) { return e.isZero(); })) return false;
  std::vector<std::string> names = base->names();
  names.push_back(freshName(names, "_w"));
  const RingPtr ring = makeRing(names, MonomialOrder::grevlex(names.size()));
  std::vector<Polynomial> F;
  F.reserve(E.size() + 1);
  for (const auto& e : E) F.push_back(e.mapToRing(ring));
  const Polynomial w = Polynomial::variable(ring, names.size() - 1);
  F.push_back(Polynomial::constant(ring, Rational(1)) - w * g.mapToRing(ring));
  return reducedGB(ring, F).isUnit();
}

Polynomial polynomialLcm(const Polynomial& f, const Polynomial& g) {
  if (f.isZero() || g.isZero()) return Polynomial(f.ring());
  if (f.isConstant()) return g.primitive();
  if (g.isConstant()) return f.primitive();
  if (exactQuotient(g, f)) return g.primitive();
  if (exactQuotient(f, g)) return f.primitive();
  bool sharesVariable = false;
  for (std::size_t i = 0; i < f.ring()->numVars() && !sharesVariable; ++i)
    sharesVariable = f.usesVariable(i) && g.usesVariable(i);
  if (!sharesVariable) return (f * g).primitive();

  // <f> ∩ <g> = (<t*f, (1-t)*g>) ∩ K[vars].
  const auto& base = f.ring();
  std::vector<std::string> names{freshName(base->names(), "_t")};
  names.insert(names.end(), base->names().begin(), base->names().end());
  const RingPtr ring = makeRing(names, MonomialOrder::block(MonomialOrder::lex(1), MonomialOrder::grevlex(base->numVars())));
  const Polynomial t = Polynomial::variable(ring, 0);
  const Polynomial one = Polynomial::constant(ring, Rational(1));
  const std::vector<Polynomial> F{t * f.mapToRing(ring), (one - t) * g.mapToRing(ring)};
  const auto G = reducedGB(ring, F);
  for (const auto& h : G.generators())
    if (!h.usesVariable(0)) return h.mapToRing(base).primitive();
  throw MathError("polynomialLcm: intersection ideal has no generator");
}

GroebnerBasis saturate(std::span<const Polynomial> E, const Polynomial& g) {
  const auto& base = g.ring();
  std::vector<std::string> names{freshName(base->names(), "_t")};
  names.insert(names.end(), base->names().begin(), base->names().end());
  const RingPtr ring = makeRing(names, MonomialOrder::block(MonomialOrder::lex(1), base->order()));
  const Polynomial t = Polynomial::variable(ring, 0);
  std::vector<Polynomial> F{Polynomial::constant(ring, Rational(1)) - t * g.mapToRing(ring)};
  for (const auto& e : E) F.push_back(e.mapToRing(ring));
  const auto G = reducedGB(ring, F);
  std::vector<Polynomial> kept;
  for (const auto& h : G.generators())
    if (!h.usesVariable(0)) kept.push_back(h.mapToRing(base));
  return reducedGB(base, kept);
}

Polynomial polynomialGcd(const Polynomial& f, const Polynomial& g) {
  if (f.isZero()) return g.primitive();
  if (g.isZero()) return f.primitive();
  const Polynomial l = polynomialLcm(f, g);
  auto q = exactQuotient(f * g, l);
  if (!q) throw MathError("polynomialGcd: lcm does not divide the product");
  return q->primitive();
}

}  // namespace igsys
