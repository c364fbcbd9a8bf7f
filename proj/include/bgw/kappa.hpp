#pragma once

#include <string>
#include <vector>

#include "bgw/dvv.hpp"
#include "bgw/report.hpp"

namespace bgw {

// Pure bracket <tau_{d_1} ... tau_{d_n}> = B(d) / prod (2 d_j + 1)!!.
Rational tau_bracket(const IndexVector& d, BgwTable& table);

// <kappa_1^m tau_{d_1} ... tau_{d_n}> via the inclusion-exclusion transform
// to pure brackets over ordered compositions of m; requires m >= 1.
Rational kappa_number(int m, const IndexVector& d, BgwTable& table);

// C(m; d) = 3^m 2^{2g-1} prod (2 d_j + 1)!! <kappa_1^m prod tau> / (X(m;d)-1)!
// with X(m;d) = X(d) + 3m and g = |d| + m + 1; C(0; d) = C(d).
Rational c_kappa(int m, const IndexVector& d, BgwTable& table);

// Same value assembled from normalized pure values C(d, m_1..m_l) without
// passing through the brackets; used as a cross-check of c_kappa.
Rational c_kappa_direct(int m, const IndexVector& d, BgwTable& table);

// One monomial coeff * pi^{pi_power} * prod_j L_j^{2 l_exponents[j]}.
struct VolumeTerm {
  Rational coeff;
  int pi_power = 0;
  std::vector<int> l_exponents;
};

struct VolumePolynomial {
  int g = 0;
  int n = 0;
  std::vector<VolumeTerm> terms;
  std::string str() const;
};

// V_{g,n}(L) = sum over m + sum d_j = g-1 of <kappa_1^m prod tau_{d_j}>
// (2 pi^2)^m / m! * prod L_j^{2 d_j} / (2^{d_j} d_j!).
VolumePolynomial sw_volume(int g, int n, BgwTable& table);

// Strict growth of C(m; d) for m >= 1 under: larger m first, then partition
// order on d; one conjecture-level result per genus.
CheckReport kappa_monotone_check(int g_max, BgwTable& table);

// Ratio of <kappa_1^{g-1-|d|} prod tau> to its conjectured leading form,
// rendered to `digits` significant digits; requires g >= |d| + 2.
std::string gprs_ratio(int g, const IndexVector& d, BgwTable& table,
                       int digits = 8);

}  // namespace bgw
