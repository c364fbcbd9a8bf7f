#pragma once

#include <stdexcept>

#include "bgw/rational.hpp"

namespace bgw {

// Rational enclosure lower < pi < upper with upper - lower = 10^-digits.
struct PiBounds {
  Rational lower;
  Rational upper;
};

// Hard cap on the available precision (digits of the stored expansion,
// minus a safety margin that guarantees strictness of the upper bound).
int max_pi_digits();

// Soft limit used by checks: requests beyond it throw, so that a check
// needing more precision than it was budgeted fails loudly instead of
// silently escalating.  Defaults to 64; raise it explicitly for long jobs.
int pi_digit_limit();
void set_pi_digit_limit(int digits);

// Enclosure of pi good to `digits` decimal places (1 <= digits <= limit).
// Successive intervals are nested.
PiBounds pi_bounds(int digits);

// A number of the form coefficient * pi^pi_power with exact rational
// coefficient.  Sums of incommensurable powers are rejected; this is enough
// for everything here, where values live in Q + Q pi^2 + Q pi^-2 separately.
struct PiMultiple {
  Rational coefficient;
  int pi_power = 0;

  PiMultiple() = default;
  PiMultiple(Rational c, int p = 0) : coefficient(std::move(c)), pi_power(p) {
    if (coefficient.is_zero()) pi_power = 0;
  }

  bool is_rational() const { return pi_power == 0; }

  PiMultiple operator*(const PiMultiple& o) const {
    return PiMultiple(coefficient * o.coefficient, pi_power + o.pi_power);
  }
  PiMultiple operator*(const Rational& r) const {
    return PiMultiple(coefficient * r, pi_power);
  }
  PiMultiple operator+(const PiMultiple& o) const {
    if (coefficient.is_zero()) return o;
    if (o.coefficient.is_zero()) return *this;
    if (pi_power != o.pi_power)
      throw std::domain_error("PiMultiple: adding different powers of pi");
    return PiMultiple(coefficient + o.coefficient, pi_power);
  }
  PiMultiple operator-() const { return PiMultiple(-coefficient, pi_power); }
  PiMultiple operator-(const PiMultiple& o) const { return *this + (-o); }

  // Rational interval containing the value, using pi to `digits` places.
  PiBounds bounds(int digits) const;
};

}  // namespace bgw
