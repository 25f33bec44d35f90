#ifndef IGSYS_RATIONAL_HPP
#define IGSYS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace igsys {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for malformed input and for violated mathematical preconditions.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// `p` or `p/q`, with a leading `-` for negatives.
std::string toString(const Rational& q);

/// Accepts `p`, `p/q` and decimals such as `-0.25`.
Rational parseRational(std::string_view text);

inline std::strong_ordering compareRational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational ratPow(const Rational& base, unsigned exponent);

/// Floor and ceiling of a rational as an integer.
Integer floorRational(const Rational& q);
Integer ceilRational(const Rational& q);

/// Approximate value, for display and tolerance checks only.
inline double toDouble(const Rational& q) { return q.get_d(); }

}  // namespace igsys

#endif  // IGSYS_RATIONAL_HPP
