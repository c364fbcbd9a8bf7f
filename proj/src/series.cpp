#include "bgw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bgw/intfun.hpp"

namespace bgw {

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
}

Series Series::constant(const Rational& value, int order) {
  Series s(order);
  s.c_[0] = value;
  return s;
}

const Rational& Series::operator[](int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("Series: index");
  return c_[k];
}

void Series::set(int k, const Rational& v) {
  if (k < 0 || k > order()) throw std::out_of_range("Series: index");
  c_[k] = v;
}

Series Series::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  Series s(order);
  for (int k = 0; k <= order && k <= this->order(); ++k) s.c_[k] = c_[k];
  return s;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() != order()) throw std::invalid_argument("Series: order mismatch");
  for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() != order()) throw std::invalid_argument("Series: order mismatch");
  for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Series Series::operator*(const Series& o) const {
  int n = std::min(order(), o.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Series Series::recip() const {
  if (c_[0].is_zero()) throw std::domain_error("Series: reciprocal of non-unit");
  Series r(order());
  r.c_[0] = c_[0].inverse();
  for (int k = 1; k <= order(); ++k) {
    Rational acc;
    for (int i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
    r.c_[k] = -acc / c_[0];
  }
  return r;
}

Series Series::log() const {
  if (!(c_[0] == Rational(1)))
    throw std::domain_error("Series: log requires constant term 1");
  int n = order();
  Series tail = *this;
  tail.c_[0] = Rational(0);
  Series r(n), power = tail;
  int sign = 1;
  for (int m = 1; m <= n; ++m) {
    Series term = power;
    term *= Rational(sign, m);
    r += term;
    power = power * tail;
    sign = -sign;
  }
  return r;
}

Series Series::shifted(const Rational& h) const {
  int n = order();
  Series r(n);
  for (int k = 0; k <= n; ++k) {
    if (c_[k].is_zero()) continue;
    Rational hp(1);
    for (int j = k; j <= n; ++j) {
      r.c_[j] += c_[k] * binomial_rat(Rational(-k), j - k) * hp;
      hp *= h;
    }
  }
  return r;
}

Series Series::lowered(int m) const {
  if (m < 0) throw std::invalid_argument("Series: negative lowering");
  Series r(order());
  for (int k = m; k <= order(); ++k) r.c_[k] = c_[k - m];
  return r;
}

bool Series::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[k].str();
    if (k > 0) os << "/X^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(X^-" << order() + 1 << ")";
  return os.str();
}

Series binom_unit(const Rational& a, const Rational& e, int order) {
  Series r(order);
  Rational term(1), ap(1);
  r.set(0, Rational(1));
  for (int k = 1; k <= order; ++k) {
    term *= (e - Rational(k - 1)) / Rational(k);
    ap *= a;
    r.set(k, term * ap);
  }
  return r;
}

Series pochhammer_recip(const Rational& a, long m, int order) {
  Series prod = Series::constant(Rational(1), order);
  for (long i = 0; i < m; ++i)
    prod = prod * binom_unit(a + Rational(i), Rational(1), order);
  Series rec = prod.recip();
  if (m > order) return Series(order);
  return rec.lowered(static_cast<int>(m));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

bool Poly::is_monic() const {
  return !c_.empty() && c_.back() == Rational(1);
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) {
    if (k < c_.size()) c[k] += c_[k];
    if (k < o.c_.size()) c[k] += o.c_[k];
  }
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) {
    if (k < c_.size()) c[k] += c_[k];
    if (k < o.c_.size()) c[k] -= o.c_[k];
  }
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> c = c_;
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

Series Poly::reversed_unit(int order) const {
  if (c_.empty()) throw std::domain_error("Poly: reversal of zero polynomial");
  Series r(order);
  int d = degree();
  for (int k = 0; k <= order && k <= d; ++k) r.set(k, c_[d - k]);
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    Rational v = c_[k];
    if (first) {
      if (v.sign() < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
      if (v.sign() < 0) v = -v;
    }
    bool unit = v == Rational(1) && k > 0;
    if (!unit) os << v.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolate: bad node lists");
  size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Poly p;
  for (size_t i = n; i-- > 0;) {
    p = p * Poly({-xs[i], Rational(1)}) + Poly({dd[i]});
  }
  return p;
}

Series solve_shift(const Series& a, const Series& b, const Rational& step, int order) {
  if (a.order() < order + 1 || b.order() < order + 1)
    throw std::invalid_argument("solve_shift: inputs too short");
  if (!(a[0] == Rational(1)) || !(b[0] == Rational(1)))
    throw std::invalid_argument("solve_shift: inputs must be unit series");
  if (!(a[1] == b[1]))
    throw std::logic_error("solve_shift: inconsistent equation (a1 != b1)");
  if (step.is_zero()) throw std::invalid_argument("solve_shift: zero step");

  std::vector<Rational> u(order + 1);
  u[0] = Rational(1);
  for (int m = 1; m <= order; ++m) {
    // Coefficient of X^{-(m+1)} in u(X+step) a(X) - u(X) b(X), with the
    // still unknown u[m] treated as zero; its true contribution there is
    // -m*step*u[m].
    Rational resid;
    for (int i = 0; i <= m + 1; ++i) {
      Rational ushift;  // coefficient of X^{-i} in u(X+step)
      for (int k = std::min(i, m - 1); k >= 0; --k) {
        Rational p(1);
        for (int t = 0; t < i - k; ++t) p *= step;
        if (!u[k].is_zero())
          ushift += u[k] * binomial_rat(Rational(-k), i - k) * p;
      }
      resid += ushift * a[m + 1 - i];
      if (i <= m - 1) resid -= u[i] * b[m + 1 - i];
    }
    u[m] = resid / (Rational(m) * step);
  }
  return Series(std::move(u));
}

Series gamma_ratio_series(const std::vector<Rational>& num,
                          const std::vector<Rational>& den, int order,
                          long* exponent) {
  if (num.size() != den.size())
    throw std::invalid_argument("gamma_ratio_series: length mismatch");
  Rational esum;
  for (const auto& t : num) esum += t;
  for (const auto& s : den) esum -= s;
  esum /= Rational(2);
  if (!esum.is_integer())
    throw std::invalid_argument("gamma_ratio_series: exponent not an integer");
  long e = static_cast<long>(mpz_get_si(esum.num().get_mpz_t()));
  if (exponent) *exponent = e;

  Series a = binom_unit(Rational(2), Rational(e), order + 1);
  for (const auto& s : den) a = a * binom_unit(s, Rational(1), order + 1);
  Series b = Series::constant(Rational(1), order + 1);
  for (const auto& t : num) b = b * binom_unit(t, Rational(1), order + 1);
  return solve_shift(a, b, Rational(2), order);
}

Series gamma_series(int order) {
  return gamma_ratio_series({Rational(2), Rational(2)},
                            {Rational(1), Rational(3)}, order);
}

PiMultiple gamma_exact(long X) {
  if (X < 0) throw std::domain_error("gamma_exact: negative argument");
  if (X % 2 == 1) {
    long d = (X - 1) / 2;
    Rational v(ipow(Int(double_factorial(2 * d + 1)), 2),
               ipow(Int(4), d + 1) * factorial(d) * factorial(d + 1));
    return PiMultiple(v, 0);
  }
  long m = X / 2;
  Rational v(ipow(Int(2), 2 * m + 1) * ipow(factorial(m), 2),
             Int(double_factorial(2 * m - 1)) * double_factorial(2 * m + 1));
  return PiMultiple(v, -2);
}

namespace {

// Target value P_lambda(X) reconstructed from one normalised correlator.
Rational p_target(const IndexVector& lambda, long d, int delta, BgwTable& table) {
  IndexVector full = lambda;
  full.push_back(static_cast<int>(d));
  std::sort(full.begin(), full.end());
  Rational c = compute_C(full, table);
  long X = x_of(lambda) + 2 * d + 1;
  Rational v = c * Rational(factorial(X - 1)) * two_pow(d + 1) *
               Rational(factorial(d));
  v /= Rational(ipow(Int(double_factorial(2 * d + 1)), 3));
  if (delta) v *= Rational(X);
  return v;
}

bool den_is_power_of_two(const Rational& v) {
  return mpz_popcount(v.den().get_mpz_t()) == 1;
}

}  // namespace

Poly p_lambda(const IndexVector& lambda, BgwTable& table) {
  if (lambda.empty())
    throw std::invalid_argument("p_lambda: empty partition");
  for (int v : lambda)
    if (v < 1) throw std::invalid_argument("p_lambda: parts must be positive");
  IndexVector lam = sorted_key(lambda);
  int n = static_cast<int>(lam.size()) + 1;
  int delta = (n == 2) ? 1 : 0;
  long c = x_of(lam);
  long D = c + delta - 2;
  long dmax = lam.back();

  std::vector<Rational> xs, ys;
  for (long d = dmax; d <= dmax + D; ++d) {
    xs.emplace_back(c + 2 * d + 1);
    ys.push_back(p_target(lam, d, delta, table));
  }
  Poly p = interpolate(xs, ys);
  if (p.degree() != static_cast<int>(D))
    throw std::logic_error("p_lambda: unexpected degree");
  if (!p.is_monic()) throw std::logic_error("p_lambda: not monic");
  for (int k = 0; k <= p.degree(); ++k)
    if (!den_is_power_of_two(p.coeff(k)))
      throw std::logic_error("p_lambda: coefficient not in Z[1/2]");
  long dchk = dmax + D + 1;
  if (!(p.eval(Rational(c + 2 * dchk + 1)) == p_target(lam, dchk, delta, table)))
    throw std::logic_error("p_lambda: fails at control node");
  return p;
}

Series chat_series(const IndexVector& lambda, int order, BgwTable& table) {
  if (lambda.empty()) return Series::constant(Rational(1), order);
  Poly p = p_lambda(lambda, table);
  long c = x_of(lambda);
  int n = static_cast<int>(lambda.size()) + 1;
  int delta = (n == 2) ? 1 : 0;
  (void)delta;
  Series a = binom_unit(Rational(-(c - 1)), Rational(1), order + 1) *
             binom_unit(Rational(2), Rational(4 - c), order + 1);
  Series bb = binom_unit(Rational(-(c - 2)), Rational(3), order + 1) *
              binom_unit(Rational(3), Rational(1), order + 1);
  Series u = solve_shift(a, bb, Rational(2), order);
  Series result = u * p.reversed_unit(order);
  if (!(result[0] == Rational(1)))
    throw std::logic_error("chat_series: constant term is not 1");
  return result;
}

const Series& DefectTable::w(const IndexVector& lambda, int order) {
  if (lambda.empty()) throw std::invalid_argument("DefectTable: empty partition");
  IndexVector lam = sorted_key(lambda);
  auto it = memo_.find(lam);
  if (it != memo_.end() && it->second.order() >= order) return it->second;

  Series acc = Series::constant(Rational(1), order) - chat_series(lam, order, table_);

  std::vector<long> mult = multiplicities(lam);
  std::vector<int> values;
  std::vector<long> counts;
  for (size_t v = 0; v < mult.size(); ++v)
    if (mult[v] > 0) {
      values.push_back(static_cast<int>(v));
      counts.push_back(mult[v]);
    }
  std::vector<long> take(values.size(), 0);
  while (true) {
    size_t pos = 0;
    while (pos < take.size() && take[pos] == counts[pos]) take[pos++] = 0;
    if (pos == take.size()) break;
    ++take[pos];
    bool full = true;
    for (size_t r = 0; r < take.size(); ++r)
      if (take[r] != counts[r]) full = false;
    if (full) continue;  // mu = lambda handled by the LHS itself
    IndexVector mu;
    Rational ways(1);
    for (size_t r = 0; r < take.size(); ++r) {
      for (long q = 0; q < take[r]; ++q) mu.push_back(values[r]);
      ways *= Rational(binomial(counts[r], take[r]));
    }
    Series sub = w(mu, order).truncated(order);
    sub *= ways;
    acc -= sub;
  }

  long lead = 2 * weight(lam) + static_cast<long>(lam.size()) + 1;
  for (int k = 0; k < lead && k <= order; ++k)
    if (!acc[k].is_zero())
      throw std::logic_error("DefectTable: series starts below expected order");
  auto [pos2, _] = memo_.insert_or_assign(lam, std::move(acc));
  return pos2->second;
}

Series w_lambda(const IndexVector& lambda, int order, BgwTable& table) {
  DefectTable t(table);
  return t.w(lambda, order);
}

Poly a_j_poly(int j) {
  if (j < 0) throw std::invalid_argument("a_j_poly: negative index");
  if (j == 0) return Poly();
  Poly acc;
  for (int l = 0; 2 * l <= j + 1; ++l) {
    Rational pre(double_factorial(2 * l - 1));
    pre /= Rational(ipow(Int(8), l) * ipow(factorial(l), 3));
    pre *= pochhammer_int(j - 2 * l, 2 * l);
    if (pre.is_zero()) continue;
    Poly rising({Rational(1)});
    for (int t = 0; t < j - 1; ++t)
      rising = rising * Poly({Rational(2 * t + 3, 2) - Rational(l), Rational(1)});
    acc = acc + rising * pre;
  }
  Rational front(factorial(j - 1));
  if (j % 2 == 0) front = -front;
  return acc * front;
}

Series w_d_closed(int d, int order) {
  if (d < 1) throw std::invalid_argument("w_d_closed: d must be >= 1");
  Series acc(order);
  Rational pre(ipow(Int(double_factorial(2 * d + 1)), 3));
  pre /= two_pow(d + 1) * Rational(factorial(d));
  for (int j = 1; 2 * d + 2 * j <= order; ++j) {
    Series term = pochhammer_recip(Rational(-2 * d - j + 1), 2 * d + 2 * j, order);
    term *= a_j_poly(j).eval(Rational(d)) / Rational(d + j);
    acc += term;
  }
  acc *= pre;
  return acc;
}

Rational w_truncated(int terms, int d, const Rational& x) {
  if (terms < 1) throw std::invalid_argument("w_truncated: need at least one term");
  if (d < 0) throw std::invalid_argument("w_truncated: negative d");
  if (!(x - Rational(2 * d) > Rational(terms)))
    throw std::domain_error("w_truncated: outside the validity region x - 2d > N");
  Rational acc;
  for (int j = 1; j <= terms; ++j) {
    Rational poch(1);
    Rational base = x - Rational(2 * d + j - 1);
    for (long i = 0; i < 2 * d + 2 * j; ++i) poch *= base + Rational(i);
    acc += a_j_poly(j).eval(Rational(d)) / (Rational(d + j) * poch);
  }
  acc *= Rational(ipow(Int(double_factorial(2 * d + 1)), 3));
  acc /= two_pow(d + 1) * Rational(factorial(d));
  return acc;
}

void MPoly::add_term(const Key& k, const Rational& v) {
  if (v.is_zero()) return;
  Key key = k;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto [it, inserted] = terms_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::constant(const Rational& v) {
  MPoly p;
  p.add_term({}, v);
  return p;
}

MPoly MPoly::variable(int i) {
  if (i < 1) throw std::invalid_argument("MPoly: variable index must be >= 1");
  MPoly p;
  Key k(i, 0);
  k[i - 1] = 1;
  p.add_term(k, Rational(1));
  return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.add_term(k, v);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.add_term(k, -v);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [k1, v1] : terms_)
    for (const auto& [k2, v2] : o.terms_) {
      Key k(std::max(k1.size(), k2.size()), 0);
      for (size_t i = 0; i < k1.size(); ++i) k[i] += k1[i];
      for (size_t i = 0; i < k2.size(); ++i) k[i] += k2[i];
      r.add_term(k, v1 * v2);
    }
  return r;
}

MPoly MPoly::operator*(const Rational& s) const {
  MPoly r;
  if (s.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * s);
  return r;
}

Rational MPoly::eval(const IndexVector& lambda) const {
  std::vector<long> mult = multiplicities(lambda);
  Rational acc;
  for (const auto& [k, v] : terms_) {
    Rational term = v;
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      long p = (i + 1 < mult.size()) ? mult[i + 1] : 0;
      for (int e = 0; e < k[i]; ++e) term *= Rational(p);
    }
    acc += term;
  }
  return acc;
}

long MPoly::weighted_degree() const {
  long best = -1;
  for (const auto& [k, v] : terms_) {
    (void)v;
    long deg = 0;
    for (size_t i = 0; i < k.size(); ++i) deg += k[i] * (2 * (i + 1) + 1);
    best = std::max(best, deg);
  }
  return best;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational val = v;
    if (first) {
      if (val.sign() < 0) {
        os << "-";
        val = -val;
      }
    } else {
      os << (val.sign() < 0 ? " - " : " + ");
      if (val.sign() < 0) val = -val;
    }
    bool any = false;
    for (size_t i = 0; i < k.size(); ++i) any = any || k[i] > 0;
    if (!any || !(val == Rational(1))) os << val.str();
    bool prev = !any || !(val == Rational(1));
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (prev) os << "*";
      os << "p" << (i + 1);
      if (k[i] > 1) os << "^" << k[i];
      prev = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

// binom(p_i, q) as a polynomial in p_i.
MPoly binom_in_p(int i, long q) {
  MPoly acc = MPoly::constant(Rational(1));
  for (long t = 0; t < q; ++t) {
    MPoly factor = MPoly::variable(i) - MPoly::constant(Rational(t));
    acc = acc * factor;
  }
  return acc * Rational(Int(1), factorial(q));
}

}  // namespace

MPoly chat_poly(int k, BgwTable& table) {
  if (k < 0) throw std::invalid_argument("chat_poly: negative order");
  if (k == 0) return MPoly::constant(Rational(1));
  MPoly acc;
  long wmax = (k - 2) / 2;  // 2|lambda| + l(lambda) + 1 <= k needs |lambda| <= (k-2)/2
  DefectTable defects(table);
  for (long w = 1; w <= wmax; ++w) {
    for (const IndexVector& lam : enumerate_partitions(w)) {
      if (2 * w + static_cast<long>(lam.size()) + 1 > k) continue;
      const Series& wl = defects.w(lam, k);
      if (wl[k].is_zero()) continue;
      std::vector<long> mult = multiplicities(lam);
      MPoly prod = MPoly::constant(Rational(1));
      for (size_t i = 1; i < mult.size(); ++i)
        if (mult[i] > 0) prod = prod * binom_in_p(static_cast<int>(i), mult[i]);
      acc = acc - prod * wl[k];
    }
  }
  return acc;
}

MPoly c_poly(int k, BgwTable& table) {
  Series g = gamma_series(k);
  MPoly acc;
  for (int j = 0; j <= k; ++j) {
    if (g[k - j].is_zero()) continue;
    acc = acc + chat_poly(j, table) * g[k - j];
  }
  return acc;
}

Rational chat_k_ed(int k, int d) {
  if (k < 0 || d < 0) throw std::invalid_argument("chat_k_ed: negative argument");
  if (k == 0) return Rational(1);
  long jmax = k / 2 - d;
  if (jmax < 1) return Rational(0);
  Rational acc;
  for (long j = 1; j <= jmax; ++j) {
    Rational inner;
    Rational mj(-j);
    Rational mjp(1);
    for (long l = 0; l <= k - 2 * d - 2 * j; ++l) {
      inner += Rational(binomial(static_cast<long>(k - 1), l)) * mjp *
               Rational(stirling2(k - l - 1, 2 * d + 2 * j - 1));
      mjp *= mj;
    }
    acc += a_j_poly(static_cast<int>(j)).eval(Rational(d)) / Rational(d + j) * inner;
  }
  acc *= Rational(ipow(Int(double_factorial(2 * d + 1)), 3));
  acc /= two_pow(d + 1) * Rational(factorial(d));
  return -acc;
}

namespace {

// Polynomial in d rewritten as d^deg * (unit series in 1/d) * leading.
Series poly_to_dseries(const Poly& p, int order, long* power, Rational* lead) {
  if (p.is_zero()) throw std::invalid_argument("poly_to_dseries: zero polynomial");
  int deg = p.degree();
  *power = deg;
  *lead = p.coeff(deg);
  Series s(order);
  for (int k = 0; k <= order && k <= deg; ++k)
    s.set(k, p.coeff(deg - k) / *lead);
  return s;
}

Poly linear_pochhammer(const Rational& slope, const Rational& offset, long m) {
  Poly acc({Rational(1)});
  for (long i = 0; i < m; ++i) acc = acc * Poly({offset + Rational(i), slope});
  return acc;
}

}  // namespace

std::vector<Rational> subexp_b_series(int n, int order) {
  if (n < 2) throw std::invalid_argument("subexp_b_series: need n >= 2");
  int work = order + 1;

  // Ratio series sum_j T_j / T_1 in 1/d.
  Series rsum(work);
  rsum.set(0, Rational(1));
  for (int j = 2; j - 1 <= work; ++j) {
    Poly numpol = a_j_poly(j) * Poly({Rational(1), Rational(1)});  // A_j(d) (d+1)
    Poly denpol = Poly({Rational(j), Rational(1)});                // (d+j)
    denpol = denpol * linear_pochhammer(Rational(2 * n - 2), Rational(n - j + 1), j - 1);
    denpol = denpol * linear_pochhammer(Rational(2 * n), Rational(n + 2), j - 1);
    long pn = 0, pd = 0;
    Rational ln(1), ld(1);
    Series sn = poly_to_dseries(numpol, work, &pn, &ln);
    Series sd = poly_to_dseries(denpol, work, &pd, &ld);
    long drop = pd - pn;
    if (drop != j - 1)
      throw std::logic_error("subexp_b_series: unexpected ratio order");
    Series term = sn * sd.recip();
    term *= ln / ld;
    rsum += term.lowered(static_cast<int>(drop));
  }

  // H(d) = T_1(d+1) Y'(d) / (T_1(d) Y'(d+1)), a unit series in 1/d.
  Poly cube({Rational(3), Rational(2)});  // 2d+3
  Poly numpol = cube * cube * cube;
  numpol = numpol * linear_pochhammer(Rational(2 * n - 2), Rational(n), 2 * n - 2);
  Poly denpol = Poly({Rational(2), Rational(1)});  // (d+2)
  denpol = denpol * linear_pochhammer(Rational(2 * n), Rational(n + 2), 2 * n);
  denpol = denpol * Rational(2);
  long pn = 0, pd = 0;
  Rational ln(1), ld(1);
  Series sn = poly_to_dseries(numpol, work, &pn, &ln);
  Series sd = poly_to_dseries(denpol, work, &pd, &ld);
  if (pn != pd) throw std::logic_error("subexp_b_series: H is not balanced");
  Rational scale = ln / ld;
  Rational nn = Rational(ipow(Int(n), n)) / Rational(ipow(Int(n - 1), n - 1));
  scale *= nn * nn;
  if (!(scale == Rational(1)))
    throw std::logic_error("subexp_b_series: H has non-unit constant");
  Series h = sn * sd.recip() * binom_unit(Rational(1), Rational(1, 2), work);
  if (!h[1].is_zero())
    throw std::logic_error("subexp_b_series: H has a first-order term");

  Series g = solve_shift(Series::constant(Rational(1), work), h, Rational(1), order);
  Series b = g * rsum.truncated(order);
  if (!(b[0] == Rational(1)))
    throw std::logic_error("subexp_b_series: constant term is not 1");
  std::vector<Rational> out;
  for (int k = 0; k <= order; ++k) out.push_back(b[k]);
  return out;
}

std::vector<Rational> subexp_l_series(int n, int order) {
  Series b(subexp_b_series(n, order));
  Series l = b.log();
  l *= Rational(24);
  std::vector<Rational> out;
  for (int k = 1; k <= order; ++k) out.push_back(l[k]);
  return out;
}

}  // namespace bgw
