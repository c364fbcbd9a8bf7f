#pragma once

#include <string>

#include "bgw/dvv.hpp"
#include "bgw/report.hpp"

namespace bgw {

// Closed forms for the extreme normalized values at genus g:
// C(g-1) (one part) and C(1^{g-1}) (all ones, via the y_g recurrence).
Rational c_smallest(long g);
Rational c_biggest(long g);

// One genus slice of the normalized-value table: partitions in canonical
// order, exact C(d), six significant digits, the least common denominator
// D_g, and the integers D_g * C(d).
struct TableRow {
  IndexVector d;
  Rational c;
  std::string decimal;
  Int scaled;
};
struct GenusTable {
  long g = 0;
  Int common_denominator;
  std::vector<TableRow> rows;
};
GenusTable genus_table(long g, BgwTable& table);

// C(g-1) <= C(d) <= C(1^{g-1}) over all partitions of g-1 for g <= g_max
// (conjecture), plus the genus-40 endpoint digits from the closed forms.
CheckReport check_nesting(long g_max, BgwTable& table);

// Strict increase of C along the canonical partition order at each genus
// up to g_max (conjecture).
CheckReport check_monotone(long g_max, BgwTable& table);

// Per-bracket integrality for g <= g_max: the proved Z[1/2] membership of
// the normalized bracket (hard, n >= 2), the two conjectured divisibilities
// and the power-of-two denominator (reported), and the genus-6 spot
// factorization.  `slow` adds the four-point genus-40 divisibility instance.
CheckReport check_integrality(long g_max, BgwTable& table, bool slow = false);

// Exact agreement of the recursion with the closed n-point routes on all
// partitions with g <= g_max, n <= 4, plus the window-table overlap and the
// genus-40 three-point coincidence.  Hard; the first mismatch in canonical
// order is reported.
CheckReport check_cross(long g_max, BgwTable& table);

// Positivity, the one-part lower bound, and the f-function upper bound on
// all partitions with X(d) <= x_max (pi comparisons at 64 digits), plus the
// report-only band constant max g |C(d) - 1/pi| over g <= (x_max - 2)/2.
CheckReport check_bounds(long x_max, BgwTable& table);

// Interval endpoints m(g,n) and M(g,n) at fixed g: conjectured attainment
// points, ordering/disjointness, and defect ratios against the predicted
// leading terms (report-only).
CheckReport check_interval_stats(long g, BgwTable& table);

// n W(N; d, n(2d+1)) against 1 - Chat(d^n), relative tolerance 1e-3,
// decided through pi intervals (conjecture).
CheckReport check_wsum(int n, int d, int terms);

// First three coefficients of 24 log(1 + b_1 x + ...) against their closed
// rational forms for n = 2..n_max, exact (conjecture).
CheckReport check_subexp(int n_max = 6);

}  // namespace bgw
