#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace bgw {

using Int = mpz_class;

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.  Thin wrapper over GMP's mpq_class; every constructor
// canonicalizes, and the GMP arithmetic routines preserve canonical form.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : q_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  // Unevaluated gmpxx integer expressions (a * b, etc.) land here.
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "num" or "num/den" (optionally signed).
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
  }

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
  }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
      return Rational(0);
    }
    Rational base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), base.q_.get_num().get_mpz_t(), n);
    mpz_pow_ui(rd.get_mpz_t(), base.q_.get_den().get_mpz_t(), n);
    Rational r;
    r.q_ = mpq_class(rn, rd);  // already canonical: gcd(num,den)=1 is preserved by powers
    return r;
  }

  Rational abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
  }

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& x) { return x.abs(); }

}  // namespace bgw
