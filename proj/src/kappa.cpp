#include "bgw/kappa.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "bgw/intfun.hpp"
#include "bgw/numeric.hpp"

namespace bgw {

Rational tau_bracket(const IndexVector& d, BgwTable& table) {
  if (d.empty()) throw std::invalid_argument("tau_bracket: empty bracket");
  Rational r = table.b(d);
  for (int v : d) r /= Rational(double_factorial(2L * v + 1));
  return r;
}

namespace {

// Calls fn(parts) for every ordered tuple of positive integers summing to m.
void for_each_composition(int m, std::vector<long>& parts,
                          const std::function<void(const std::vector<long>&)>& fn) {
  if (m == 0) {
    fn(parts);
    return;
  }
  for (int first = 1; first <= m; ++first) {
    parts.push_back(first);
    for_each_composition(m - first, parts, fn);
    parts.pop_back();
  }
}

}  // namespace

Rational kappa_number(int m, const IndexVector& d, BgwTable& table) {
  if (m < 1) throw std::invalid_argument("kappa_number: m must be >= 1");
  Rational acc;
  std::vector<long> parts;
  for_each_composition(m, parts, [&](const std::vector<long>& ms) {
    size_t l = ms.size();
    IndexVector full = d;
    for (long mi : ms) full.push_back(static_cast<int>(mi));
    Rational term = tau_bracket(full, table);
    term *= Rational(multinomial(m, ms));
    term /= Rational(factorial(static_cast<long>(l)));
    if ((m - static_cast<int>(l)) % 2 != 0) term = -term;
    acc += term;
  });
  return acc;
}

Rational c_kappa(int m, const IndexVector& d, BgwTable& table) {
  if (m < 0) throw std::invalid_argument("c_kappa: negative m");
  if (m == 0) {
    if (d.empty()) throw std::invalid_argument("c_kappa: empty bracket");
    return compute_C(d, table);
  }
  long g = weight(d) + m + 1;
  long xm = x_of(d) + 3L * m;
  Rational r = kappa_number(m, d, table);
  r *= Rational(ipow(Int(3), static_cast<unsigned long>(m))) * two_pow(2 * g - 1);
  for (int v : d) r *= Rational(double_factorial(2L * v + 1));
  r /= Rational(factorial(xm - 1));
  return r;
}

Rational c_kappa_direct(int m, const IndexVector& d, BgwTable& table) {
  if (m < 0) throw std::invalid_argument("c_kappa_direct: negative m");
  if (m == 0) {
    if (d.empty()) throw std::invalid_argument("c_kappa_direct: empty bracket");
    return compute_C(d, table);
  }
  long xm = x_of(d) + 3L * m;
  Rational acc;
  std::vector<long> parts;
  for_each_composition(m, parts, [&](const std::vector<long>& ms) {
    long l = static_cast<long>(ms.size());
    IndexVector full = d;
    for (long mi : ms) full.push_back(static_cast<int>(mi));
    Rational term = compute_C(full, table);
    term *= Rational(multinomial(m, ms));
    term /= Rational(factorial(l)) * pochhammer(Rational(xm - m + l), m - l);
    for (long mi : ms) term /= Rational(double_factorial(2 * mi + 1));
    if ((m - l) % 2 != 0) term = -term;
    acc += term;
  });
  return acc * Rational(ipow(Int(3), static_cast<unsigned long>(m)));
}

std::string VolumePolynomial::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    os << c.str();
    if (t.pi_power > 0) os << "*pi^" << t.pi_power;
    for (size_t j = 0; j < t.l_exponents.size(); ++j)
      if (t.l_exponents[j] > 0) os << "*L" << j + 1 << "^" << 2 * t.l_exponents[j];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

VolumePolynomial sw_volume(int g, int n, BgwTable& table) {
  if (g < 1) throw std::invalid_argument("sw_volume: g must be >= 1");
  if (n < 0) throw std::invalid_argument("sw_volume: negative n");
  if (g == 1 && n == 0)
    throw std::invalid_argument("sw_volume: empty bracket at (1,0)");
  VolumePolynomial vol;
  vol.g = g;
  vol.n = n;

  std::vector<int> tuple(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      int m = left;
      Rational bracket;
      if (m == 0) {
        bracket = tau_bracket(tuple, table);
      } else {
        bracket = kappa_number(m, tuple, table);
      }
      VolumeTerm t;
      t.coeff = bracket * two_pow(m) / Rational(factorial(m));
      for (int dj : tuple) t.coeff /= two_pow(dj) * Rational(factorial(dj));
      t.pi_power = 2 * m;
      t.l_exponents = tuple;
      vol.terms.push_back(std::move(t));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      tuple[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    tuple[static_cast<size_t>(pos)] = 0;
  };
  rec(0, g - 1);
  return vol;
}

CheckReport kappa_monotone_check(int g_max, BgwTable& table) {
  CheckReport report;
  for (int g = 2; g <= g_max; ++g) {
    bool ok = true;
    std::string detail;
    long count = 0;
    Rational prev;
    bool have_prev = false;
    IndexVector prev_d;
    int prev_m = 0;
    for (int m = g - 1; m >= 1 && ok; --m) {
      for (const IndexVector& dd : enumerate_partitions(g - 1 - m)) {
        Rational cur = c_kappa(m, dd, table);
        ++count;
        if (have_prev && !(prev < cur)) {
          ok = false;
          detail = "C(" + std::to_string(prev_m) + ";" + render(prev_d) +
                   ") >= C(" + std::to_string(m) + ";" + render(dd) + ")";
          break;
        }
        prev = cur;
        prev_d = dd;
        prev_m = m;
        have_prev = true;
      }
    }
    if (ok) detail = std::to_string(count) + " values strictly increasing";
    report.push_back({"kappa-monotone g=" + std::to_string(g), true, ok, detail});
  }
  return report;
}

namespace {

RatInterval int_pow(const RatInterval& base, int e) {
  RatInterval r = RatInterval::point(Rational(1));
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace

std::string gprs_ratio(int g, const IndexVector& d, BgwTable& table, int digits) {
  long w = weight(d);
  int n = static_cast<int>(d.size());
  if (g < w + 2) throw std::invalid_argument("gprs_ratio: need g >= |d| + 2");
  int m = static_cast<int>(g - 1 - w);
  Rational bracket = kappa_number(m, d, table);

  // Conjectured form: pi^p 2^{g-1-3w} (3g-4-w+n)! / (3^{3g-7/2-w+n} prod!!),
  // so the ratio is rational * sqrt(3) * pi^{-p}.
  Rational a = bracket * two_pow(-(g - 1 - 3 * w));
  a /= Rational(factorial(3L * g - 4 - w + n));
  for (int v : d) a *= Rational(double_factorial(2L * v + 1));
  long e3 = 3L * g - 4 - w + n;  // 3^{e3} * sqrt(3) restores the half power
  a *= Rational(ipow(Int(3), static_cast<unsigned long>(e3)));

  int prec = std::min(digits + 15, pi_digit_limit());
  RatInterval r = RatInterval::point(a);
  SqrtBounds s3 = sqrt_bounds(Rational(3), prec);
  r = r * RatInterval{s3.lower, s3.upper};
  PiBounds pb = pi_bounds(prec);
  RatInterval pi_iv{pb.lower, pb.upper};
  int p = static_cast<int>(2 * w + n - 2);
  if (p >= 0)
    r = r / int_pow(pi_iv, p);
  else
    r = r * int_pow(pi_iv, -p);

  std::string lo = decimal_sig(r.lo, digits);
  std::string hi = decimal_sig(r.hi, digits);
  if (lo == hi) return lo;
  return decimal_sig((r.lo + r.hi) / Rational(2), digits);
}

}  // namespace bgw
