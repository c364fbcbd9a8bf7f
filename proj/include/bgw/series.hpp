#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgw/dvv.hpp"
#include "bgw/partitions.hpp"
#include "bgw/pi.hpp"
#include "bgw/rational.hpp"

namespace bgw {

// Truncated expansion c0 + c1/X + ... + cN/X^N.
class Series {
 public:
  Series() = default;
  explicit Series(int order) : c_(order + 1) {}
  explicit Series(std::vector<Rational> coeffs);
  static Series constant(const Rational& value, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const;
  void set(int k, const Rational& v);
  Series truncated(int order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& s);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  Series operator*(const Series& o) const;
  Series operator-() const;
  bool operator==(const Series& o) const { return c_ == o.c_; }
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series recip() const;                     // constant term must be nonzero
  Series log() const;                       // constant term must be 1
  Series shifted(const Rational& h) const;  // X -> X + h
  Series lowered(int m) const;              // multiply by X^{-m}
  bool is_zero() const;
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

// (1 + a/X)^e for a rational exponent e.
Series binom_unit(const Rational& a, const Rational& e, int order);

// 1/((X+a)(X+a+1)...(X+a+m-1)) expanded in 1/X.
Series pochhammer_recip(const Rational& a, long m, int order);

// Polynomial, coefficient k multiplying X^k.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const;
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  Rational eval(const Rational& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;

  // X^{-deg} P(X) as an expansion in 1/X.
  Series reversed_unit(int order) const;
  std::string str(const std::string& var = "X") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Solve u(X+step) a(X) = u(X) b(X) for a unit series u with u0 = 1.  Both a
// and b must have constant term 1, equal subleading coefficients, and order
// at least `order` + 1.
Series solve_shift(const Series& a, const Series& b, const Rational& step, int order);

// prod_i Gamma((X+num[i])/2) / prod_j Gamma((X+den[j])/2) = 2^{-e} X^e u(X)
// with u a unit series normalised to u0 = 1; num and den must have the same
// length and sum(num) - sum(den) must be even.  Returns u; e goes to
// *exponent when given.
Series gamma_ratio_series(const std::vector<Rational>& num,
                          const std::vector<Rational>& den, int order,
                          long* exponent = nullptr);

// Expansion of pi * gamma(X); gamma(X) = Gamma(X/2+1)^2 / (pi
// Gamma((X+1)/2) Gamma((X+3)/2)).
Series gamma_series(int order);

// Closed-form value of gamma(X) at an integer X >= 0.
PiMultiple gamma_exact(long X);

// The monic polynomial P with C(lambda, d) = P(X) (2d+1)!!^3 /
// (X^{[n=2]} (X-1)! 2^{d+1} d!), X = X(lambda, d); lambda nonempty with
// positive parts.
Poly p_lambda(const IndexVector& lambda, BgwTable& table);

// Expansion of Chat(lambda, d) in 1/X(lambda, d) as d -> infinity.
Series chat_series(const IndexVector& lambda, int order, BgwTable& table);

// Defect series W_lambda: Chat(lambda ∪ (d)) ~ -sum over sub-multisets mu of
// lambda of W_mu, with W_empty = -1.
class DefectTable {
 public:
  explicit DefectTable(BgwTable& table) : table_(table) {}
  const Series& w(const IndexVector& lambda, int order);

 private:
  BgwTable& table_;
  std::map<IndexVector, Series> memo_;
};

Series w_lambda(const IndexVector& lambda, int order, BgwTable& table);

// A_j as a polynomial in d; a_j_poly(0) is the zero polynomial.
Poly a_j_poly(int j);

// W_d(X) through the pochhammer expansion whose j-th term carries A_j(d).
Series w_d_closed(int d, int order);

// Partial sum with `terms` pochhammer terms evaluated at a rational point x;
// requires x - 2d > terms.
Rational w_truncated(int terms, int d, const Rational& x);

// Polynomials in the multiplicity variables p_1, p_2, ...
class MPoly {
 public:
  using Key = std::vector<int>;  // exponents of p_1, p_2, ...

  MPoly() = default;
  static MPoly constant(const Rational& v);
  static MPoly variable(int i);  // p_i, i >= 1

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& s) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  // Value when p_i = multiplicity of i in lambda.
  Rational eval(const IndexVector& lambda) const;
  // Weighted degree with deg p_i = 2i+1; -1 for the zero polynomial.
  long weighted_degree() const;
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
  void add_term(const Key& k, const Rational& v);
};

// \hat c_k(p): coefficient polynomials of the expansion of Chat(lambda, d_n).
MPoly chat_poly(int k, BgwTable& table);
// c_k(p): same for the expansion of pi * C(lambda, d_n).
MPoly c_poly(int k, BgwTable& table);
// Closed evaluation of \hat c_k at p = e_d.
Rational chat_k_ed(int k, int d);

// Coefficients 1, b_1(n), ..., b_order(n) of the subexponential correction
// series for 1 - Chat(d^n).
std::vector<Rational> subexp_b_series(int n, int order);
// Coefficients of x, x^2, ... in 24 log(1 + b_1 x + b_2 x^2 + ...).
std::vector<Rational> subexp_l_series(int n, int order);

}  // namespace bgw
