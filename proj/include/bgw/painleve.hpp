#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgw/dvv.hpp"
#include "bgw/rational.hpp"

namespace bgw {

// Polynomial in jet variables u_0, u_1, ... with rational coefficients.
class JetPoly {
 public:
  using Key = std::vector<int>;  // exponents of u_0, u_1, ...

  JetPoly() = default;
  static JetPoly constant(const Rational& v);
  static JetPoly variable(int i);  // u_i, i >= 0

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  int max_jet() const;  // largest i with u_i present; -1 for constants

  JetPoly operator+(const JetPoly& o) const;
  JetPoly operator-(const JetPoly& o) const;
  JetPoly operator*(const JetPoly& o) const;
  JetPoly operator*(const Rational& s) const;
  bool operator==(const JetPoly& o) const { return terms_ == o.terms_; }

  // The derivation sending u_i to u_{i+1}, extended by Leibniz.
  JetPoly derived() const;
  // True when every monomial has the given degree under deg u_i = i+2.
  bool is_homogeneous(long degree) const;
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
  void add_term(const Key& k, const Rational& v);
};

// m_d, generated order by order from the quadratic relation for
// b = 1 + sum_d (2d+1)!! m_d lambda^{-d-1}:
//   b d^2(b) - (1/2) d(b)^2 - 2 (lambda - 2 u_0) b^2 = -2 lambda.
const JetPoly& m_poly(int d);

// A solved coefficient family; v[n] is the n-th coefficient (v[g] for y_g).
struct CoeffSeq {
  std::string kind;
  long d = 0;
  std::vector<Rational> v;
};

// y_1 = 1/4 and y_g = (3g-2)(3g-4) y_{g-1} + (2/(g-1)) sum (3h-1) y_h y_{g-h};
// entries v[1..g_max], v[0] unused.
CoeffSeq y_g_seq(int g_max);

// y_{d,n} = ((2d+1)n+1)! C(d^n) / ((2d+1)^n n!), y_{d,0} = 1/4.  The first
// use runs a d=1 consistency gate against y_g_seq.
CoeffSeq y_dn_seq(int d, int n_max, BgwTable& table);

// Coefficients of the formal solution Y = sum y_n X^{-(2d+1)n-2} of
//   2^{2d+1} (2d+1)!! d/dX m_d(Y/2, Y'/2, ...) - X Y' - 2Y = 0,
// solved order by order; errors on a nonzero residual at a solved order.
CoeffSeq p34_solve(int d, int n_max);

// Residual coefficients at X^{-k}, k = 0 .. (2d+1)(N+1)+1, after substituting
// the N+1 given coefficients; all must vanish for a solution.
std::vector<Rational> p34_residual(int d, const CoeffSeq& y);

// v_{d,0} = 1/2 and (2d+1)n v_{d,n} = y_{d,n} + sum_{n1+n2=n, n1,n2>=1}
// v_{d,n1} v_{d,n2}, with y_{d,n} taken from p34_solve.
CoeffSeq v_dn_seq(int d, int n_max);

// Ratios seq[i]/ref[i] rendered to `digits` significant digits.
std::vector<std::string> asym_ratio(const std::vector<Rational>& seq,
                                    const std::vector<Rational>& ref,
                                    int digits = 50);

// Fit of s_n = seq/ref ~ limit (1 + c_1/n + c_2/n^2), solved exactly from the
// last three sample points; ns[i] is the index of sample i.
struct AsymFit {
  Rational limit;
  Rational first_correction;
};
AsymFit fit_ratio(const std::vector<Rational>& seq,
                  const std::vector<Rational>& ref, const std::vector<long>& ns);

}  // namespace bgw
