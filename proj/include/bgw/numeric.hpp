#pragma once

#include <string>

#include "bgw/pi.hpp"
#include "bgw/rational.hpp"

namespace bgw {

// Decimal rendering with `sig` significant digits, rounding half away from
// zero.  Plain notation for moderate exponents, scientific otherwise.
std::string decimal_sig(const Rational& v, int sig);

// Fixed-point rendering with `places` digits after the decimal point.
std::string decimal_fixed(const Rational& v, int places);

// Same renderings for coefficient * pi^k values: the pi precision is refined
// until the enclosure pins down every requested digit.  Throws if the current
// pi digit limit is not enough to decide the rounding.
std::string decimal_sig(const PiMultiple& v, int sig);
std::string decimal_fixed(const PiMultiple& v, int places);

// floor/ceil-style enclosure of sqrt(v) to `digits` decimal places, v >= 0.
struct SqrtBounds {
  Rational lower;
  Rational upper;
};
SqrtBounds sqrt_bounds(const Rational& v, int digits);

// Decides a strict order between an exact rational and a pi multiple using an
// interval at `digits` places; throws if the interval straddles the rational.
bool rational_below(const Rational& c, const PiMultiple& m, int digits);

// Closed rational interval with outward-rounded arithmetic.
struct RatInterval {
  Rational lo;
  Rational hi;

  static RatInterval point(const Rational& r) { return {r, r}; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const;
  RatInterval operator/(const RatInterval& o) const;  // throws if 0 is inside o

  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

RatInterval to_interval(const PiBounds& b);
RatInterval to_interval(const PiMultiple& m, int digits);

}  // namespace bgw
