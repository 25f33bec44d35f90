#include "igsys/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "igsys/rational.hpp"

namespace igsys {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0UL);
}

void Monomial::setExponent(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotientOf(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  q.degree_ = other.degree_ - degree_;
  return q;
}

bool Monomial::isCoprimeWith(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

MonomialOrder MonomialOrder::lex(std::size_t numVars) {
  MonomialOrder o;
  o.numVars_ = numVars;
  if (numVars) o.blocks_.push_back({Kind::Lex, 0, numVars});
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t numVars) {
  MonomialOrder o;
  o.numVars_ = numVars;
  if (numVars) o.blocks_.push_back({Kind::Grevlex, 0, numVars});
  return o;
}

MonomialOrder MonomialOrder::block(const MonomialOrder& first, const MonomialOrder& second) {
  MonomialOrder o;
  o.blocks_ = first.blocks_;
  for (Block b : second.blocks_) {
    b.begin += first.numVars_;
    b.end += first.numVars_;
    o.blocks_.push_back(b);
  }
  o.numVars_ = first.numVars_ + second.numVars_;
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.numVars() != numVars_ || b.numVars() != numVars_)
    throw MathError("monomial compared under an order with a different variable count");
  for (const Block& blk : blocks_) {
    if (blk.kind == Kind::Lex) {
      for (std::size_t i = blk.begin; i < blk.end; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    } else {
      unsigned long da = 0, db = 0;
      for (std::size_t i = blk.begin; i < blk.end; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      // Equal degree: the smaller exponent in the last differing variable wins.
      for (std::size_t i = blk.end; i-- > blk.begin;)
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  auto name = [](Kind k) { return k == Kind::Lex ? std::string("lex") : std::string("grevlex"); };
  if (blocks_.empty()) return "lex";
  if (blocks_.size() == 1) return name(blocks_[0].kind);
  std::string s = "block(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += name(blocks_[i].kind);
  }
  return s + ")";
}

}  // namespace igsys
