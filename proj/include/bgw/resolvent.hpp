#pragma once

#include <vector>

#include "bgw/partitions.hpp"
#include "bgw/pi.hpp"
#include "bgw/rational.hpp"

namespace bgw {

struct Mat2 {
  Rational a00, a01, a10, a11;

  Mat2 operator+(const Mat2& o) const {
    return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11};
  }
  Mat2 operator-(const Mat2& o) const {
    return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
  Mat2 operator*(const Rational& s) const { return {a00 * s, a01 * s, a10 * s, a11 * s}; }
  Rational trace() const { return a00 + a11; }
  bool is_zero() const {
    return a00.is_zero() && a01.is_zero() && a10.is_zero() && a11.is_zero();
  }
};

// f(k) = (2k-1)!!^3 / (2^(3k) (k+1)!), defined for k >= -1.
Rational f_factor(long k);

// A_k = f(k) R(k); the zero matrix for k <= -2.
Mat2 a_matrix(long k);

// tr(A_{k_1} ... A_{k_n}); zero as soon as any index is <= -2.
Rational trace_a(const std::vector<long>& ks);

// max(0, min_i e_i) — the lattice-point count entering the n-point formula.
long min_count(const std::vector<long>& e);

// Coefficient of the one-point generating series: B(d) for a single index.
Rational B_onepoint(long d);

// n-point B via the permutation/trace formula (n >= 2; any negative index
// makes the value 0).
Rational B_npoint(const IndexVector& d);

// Specialized closed forms: pair sum with the explicit two-trace value,
// and the three- and four-point reductions.
Rational B_twopoint_sum(long d1, long d2);
Rational B_threepoint(long d1, long d2, long d3);
Rational B_fourpoint(long d1, long d2, long d3, long d4);

// F_h = (2h-1)!!^3 / (2^(3h) h!).
Rational f_weight(long h);

// C(d) for one part: g binom(2g-1, g)^2 / 4^(2g-1) with g = d + 1.
Rational C_onepoint(long d);

// Two-point closed form C(d1, d2) = (2^(2g) / (2g)!) sum_{h=0}^{d1} (g-2h) F_h F_{g-h}.
Rational C_twopoint(long d1, long d2);
Rational B_twopoint(long d1, long d2);

// Two-point value where the second argument is the half-integer t2/2; the
// result is rational * pi^-2.
PiMultiple C_twopoint_halfint(long d1, long t2);

// Table of B(a, b, d^m) for 0 <= a <= a_max, 0 <= b <= b_max, obtained from the
// commutator tower over the resolvent series.
struct WindowTable {
  long d = 0;
  long m = 0;
  std::vector<std::vector<Rational>> value;  // value[a][b]
};
WindowTable b_window(long d, long m, long a_max, long b_max);

}  // namespace bgw
