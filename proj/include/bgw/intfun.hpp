#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "bgw/rational.hpp"

namespace bgw {

// Memoized factorial table.  Each thread keeps its own table, so concurrent
// use never needs a lock.  The deque keeps returned references valid when a
// later call extends the table.
inline const Int& factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  thread_local std::deque<Int> tab{1};
  while (static_cast<long>(tab.size()) <= n)
    tab.push_back(tab.back() * static_cast<long>(tab.size()));
  return tab[static_cast<size_t>(n)];
}

// k!! for k >= -3, with (-1)!! = 1 and (-3)!! = -1.
// t[i] holds (i-3)!!; the seed covers k = -3..-1.
inline const Int& double_factorial(long k) {
  if (k < -3) throw std::domain_error("double_factorial: argument below -3");
  if (k == -2) throw std::domain_error("double_factorial: -2 is not in the domain");
  thread_local std::deque<Int> t = [] {
    std::deque<Int> v(3);
    v[0] = -1;  // (-3)!!
    v[1] = 0;   // unused (k = -2 is invalid)
    v[2] = 1;   // (-1)!!
    return v;
  }();
  long idx = k + 3;
  while (static_cast<long>(t.size()) <= idx) {
    long kk = static_cast<long>(t.size()) - 3;
    t.push_back(kk >= 1 ? Int(t[static_cast<size_t>(kk + 1)] * kk) : Int(1));
  }
  return t[static_cast<size_t>(idx)];
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// 2^e as an exact rational, e of either sign.
inline Rational two_pow(long e) {
  Int p = ipow(2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(Int(1), p);
}

inline Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step: product of k consecutive integers is divisible by k!
  }
  return r;
}

inline Int binomial(long n, long k) { return binomial(Int(n), k); }

// Binomial with an arbitrary rational upper argument.
inline Rational binomial_rat(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (a - Rational(i)) / Rational(i + 1);
  return r;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length");
  Rational r(1);
  for (long i = 0; i < n; ++i) r *= a + Rational(i);
  return r;
}

inline Int pochhammer_int(const Int& a, long n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length");
  Int r = 1;
  for (long i = 0; i < n; ++i) r *= a + i;
  return r;
}

// Falling factorial x (x-1) ... (x-k+1).
inline Rational falling(const Rational& x, long k) {
  if (k < 0) throw std::domain_error("falling: negative length");
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= x - Rational(i);
  return r;
}

// Stirling numbers of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline const Int& stirling2(long n, long k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling2: negative argument");
  thread_local std::vector<std::vector<Int>> rows{{1}};  // rows[n][k], k <= n
  while (static_cast<long>(rows.size()) <= n) {
    long m = static_cast<long>(rows.size());
    const auto& prev = rows[static_cast<size_t>(m - 1)];
    std::vector<Int> row(static_cast<size_t>(m) + 1);
    row[0] = 0;
    for (long j = 1; j <= m; ++j) {
      Int v = (j <= m - 1) ? Int(prev[static_cast<size_t>(j)] * j) : Int(0);
      v += prev[static_cast<size_t>(j - 1)];
      row[static_cast<size_t>(j)] = v;
    }
    rows.push_back(std::move(row));
  }
  thread_local Int zero = 0;
  if (k > n) return zero;
  return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

inline Int multinomial(long m, const std::vector<long>& parts) {
  Int r = factorial(m);
  long s = 0;
  for (long p : parts) {
    r /= factorial(p);
    s += p;
  }
  if (s != m) throw std::invalid_argument("multinomial: parts do not sum to m");
  return r;
}

}  // namespace bgw
