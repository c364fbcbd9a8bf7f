#include "bgw/numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "bgw/intfun.hpp"

namespace bgw {
namespace {

// floor(log10(|v|)) for v != 0.
long decimal_exponent(const Rational& v) {
  Rational a = v.abs();
  long est = static_cast<long>(mpz_sizeinbase(a.num().get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.den().get_mpz_t(), 10));
  // sizeinbase may overestimate by one digit each way; settle by comparison.
  auto pow10 = [](long e) {
    Int p = ipow(10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(Int(1), p);
  };
  while (a < pow10(est)) --est;
  while (a >= pow10(est + 1)) ++est;
  return est;
}

// round(v * 10^k) half away from zero, for v > 0.
Int scaled_round(const Rational& v, long k) {
  Rational s = v;
  if (k >= 0)
    s *= Rational(ipow(10, static_cast<unsigned long>(k)));
  else
    s /= Rational(ipow(10, static_cast<unsigned long>(-k)));
  // floor((2 num + den) / (2 den)) rounds halves up (away, since s > 0).
  Int q;
  Int n2 = 2 * s.num() + s.den();
  Int d2 = 2 * s.den();
  mpz_fdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  return q;
}

std::string format_sig(const Int& mantissa, long exp10, int sig) {
  std::string digits = mantissa.get_str();
  // Plain notation while the exponent stays readable, otherwise scientific.
  if (exp10 >= -4 && exp10 <= std::max<long>(sig + 6, 17)) {
    if (exp10 < 0) {
      std::string out = "0.";
      out.append(static_cast<size_t>(-exp10 - 1), '0');
      out += digits;
      return out;
    }
    if (exp10 + 1 >= sig) {
      std::string out = digits;
      out.append(static_cast<size_t>(exp10 + 1 - sig), '0');
      return out;
    }
    return digits.substr(0, static_cast<size_t>(exp10 + 1)) + "." +
           digits.substr(static_cast<size_t>(exp10 + 1));
  }
  std::string out;
  out += digits[0];
  if (digits.size() > 1) {
    out += '.';
    out += digits.substr(1);
  }
  out += 'e';
  if (exp10 >= 0) out += '+';
  out += std::to_string(exp10);
  return out;
}

}  // namespace

std::string decimal_sig(const Rational& v, int sig) {
  if (sig < 1) throw std::domain_error("decimal_sig: need at least one digit");
  if (v.is_zero()) return "0";
  Rational a = v.abs();
  long e = decimal_exponent(a);
  Int m = scaled_round(a, sig - 1 - e);
  if (m == ipow(10, static_cast<unsigned long>(sig))) {
    // carry out of the top digit (e.g. 0.9996 at 3 digits)
    m = ipow(10, static_cast<unsigned long>(sig - 1));
    ++e;
  }
  std::string s = format_sig(m, e, sig);
  return v.sign() < 0 ? "-" + s : s;
}

std::string decimal_fixed(const Rational& v, int places) {
  if (places < 0) throw std::domain_error("decimal_fixed: negative places");
  Rational a = v.abs();
  Int m = scaled_round(a, places);
  Int den = ipow(10, static_cast<unsigned long>(places));
  Int ip = m / den, fp = m % den;
  std::string out = ip.get_str();
  if (places > 0) {
    std::string fs = fp.get_str();
    out += "." + std::string(static_cast<size_t>(places) - fs.size(), '0') + fs;
  }
  if (v.sign() < 0 && m != 0) out = "-" + out;
  return out;
}

namespace {

// Refine pi digits until `render` agrees on both interval endpoints.
template <typename Render>
std::string pinned(const PiMultiple& v, Render render) {
  if (v.is_rational()) return render(v.coefficient);
  for (int digits = 32;; digits = std::min(2 * digits, pi_digit_limit())) {
    if (digits > pi_digit_limit())
      throw std::runtime_error("decimal rendering: pi digit limit too small");
    PiBounds b = v.bounds(digits);
    std::string lo = render(b.lower), hi = render(b.upper);
    if (lo == hi) return lo;
    if (digits == pi_digit_limit())
      throw std::runtime_error("decimal rendering: undecidable at digit limit");
  }
}

}  // namespace

std::string decimal_sig(const PiMultiple& v, int sig) {
  return pinned(v, [sig](const Rational& r) { return decimal_sig(r, sig); });
}

std::string decimal_fixed(const PiMultiple& v, int places) {
  return pinned(v, [places](const Rational& r) { return decimal_fixed(r, places); });
}

SqrtBounds sqrt_bounds(const Rational& v, int digits) {
  if (v.sign() < 0) throw std::domain_error("sqrt_bounds: negative argument");
  Int den = ipow(10, static_cast<unsigned long>(digits));
  Rational t = v * Rational(den * den);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
  Int r;
  mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
  return SqrtBounds{Rational(r, den), Rational(r + 2, den)};
}

bool rational_below(const Rational& c, const PiMultiple& m, int digits) {
  PiBounds b = m.bounds(digits);
  if (c < b.lower) return true;
  if (c > b.upper) return false;
  throw std::runtime_error("comparison undecidable at the given precision");
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  if (o.lo.sign() <= 0 && o.hi.sign() >= 0)
    throw std::domain_error("RatInterval: division by an interval containing 0");
  RatInterval inv{o.hi.inverse(), o.lo.inverse()};
  return *this * inv;
}

RatInterval to_interval(const PiBounds& b) { return {b.lower, b.upper}; }

RatInterval to_interval(const PiMultiple& m, int digits) {
  return to_interval(m.bounds(digits));
}

}  // namespace bgw
