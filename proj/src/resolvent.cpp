#include "bgw/resolvent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bgw/intfun.hpp"

namespace bgw {

Rational f_factor(long k) {
  if (k < -1) throw std::domain_error("f_factor: k must be >= -1");
  const Int& df = double_factorial(2 * k - 1);
  return Rational(df * df * df) * two_pow(-3 * k) / Rational(factorial(k + 1));
}

Mat2 a_matrix(long k) {
  if (k <= -2) return Mat2{};
  Rational f = f_factor(k);
  Rational kk(k);
  Rational top = kk * Rational(k + 1);
  Rational low = -Rational(8 * k * k * k + 12 * k * k + 4 * k + 1) / Rational(8);
  Mat2 r{top, Rational(k + 1), low, -top};
  return r * f;
}

Rational trace_a(const std::vector<long>& ks) {
  if (ks.empty()) throw std::invalid_argument("trace_a: empty index list");
  for (long k : ks)
    if (k <= -2) return Rational(0);
  Mat2 p = a_matrix(ks[0]);
  for (size_t i = 1; i < ks.size(); ++i) p = p * a_matrix(ks[i]);
  return p.trace();
}

long min_count(const std::vector<long>& e) {
  if (e.empty()) throw std::invalid_argument("min_count: empty tuple");
  long mn = *std::min_element(e.begin(), e.end());
  return std::max(0L, mn);
}

Rational B_onepoint(long d) {
  if (d < 0) return Rational(0);
  const Int& df = double_factorial(2 * d + 1);
  return Rational(df * df * df) /
         (Rational(ipow(8, static_cast<unsigned long>(d + 1))) *
          Rational(factorial(d + 1)) * Rational(2 * d + 1));
}

namespace {

// Cyclic ascent/descent pattern of sigma and the resulting lattice count.
struct SigmaData {
  std::vector<int> sigma;     // 0-based images
  std::vector<bool> ascent;   // ascent[r]: sigma(r+1) > sigma(r), cyclically
  int sign;                   // (-1)^(#ascents + 1)
};

long omega(const SigmaData& sd, const IndexVector& d, const std::vector<long>& k) {
  size_t n = d.size();
  long prefix = 0;
  bool have_up = false, have_dn = false;
  long min_up = 0, max_dn = 0;
  for (size_t r = 0; r < n; ++r) {
    prefix += d[static_cast<size_t>(sd.sigma[r])] - k[r];
    if (sd.ascent[r]) {
      if (!have_up || prefix < min_up) min_up = prefix;
      have_up = true;
    } else {
      if (!have_dn || prefix > max_dn) max_dn = prefix;
      have_dn = true;
    }
  }
  if (!have_up || !have_dn) return 0;  // cannot happen for a genuine cycle
  return std::max(0L, min_up - max_dn);
}

std::vector<SigmaData> sigmas_fixing_last(size_t n) {
  std::vector<int> base(n - 1);
  std::iota(base.begin(), base.end(), 0);
  std::vector<SigmaData> out;
  do {
    SigmaData sd;
    sd.sigma.assign(base.begin(), base.end());
    sd.sigma.push_back(static_cast<int>(n) - 1);
    sd.ascent.resize(n);
    int ascents = 0;
    for (size_t r = 0; r < n; ++r) {
      bool up = sd.sigma[(r + 1) % n] > sd.sigma[r];
      sd.ascent[r] = up;
      if (up) ++ascents;
    }
    sd.sign = (ascents % 2 == 0) ? -1 : 1;
    out.push_back(std::move(sd));
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Visits every k in {k_i >= -1, sum k = s}.
template <typename F>
void for_each_k(size_t n, long s, F&& f) {
  std::vector<long> k(n, -1);
  // k_i = -1 everywhere except what remains for the last slot
  auto rec = [&](auto&& self, size_t i, long assigned) -> void {
    if (i + 1 == n) {
      long last = s - assigned;
      if (last >= -1) {
        k[i] = last;
        f(k);
      }
      return;
    }
    long remaining_min = -static_cast<long>(n - i - 1);
    for (long v = -1; assigned + v + remaining_min <= s; ++v) {
      k[i] = v;
      self(self, i + 1, assigned + v);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Rational B_npoint(const IndexVector& d) {
  size_t n = d.size();
  if (n < 2) throw std::invalid_argument("B_npoint: need at least two indices");
  long s = 0;
  for (int v : d) {
    if (v < 0) return Rational(0);
    s += v;
  }
  std::vector<SigmaData> sigmas = sigmas_fixing_last(n);
  Rational total(0);
  for_each_k(n, s, [&](const std::vector<long>& k) {
    Rational a = trace_a(k);
    if (a.is_zero()) return;
    long w = 0;
    Rational coeff(0);
    for (const SigmaData& sd : sigmas) {
      w = omega(sd, d, k);
      if (w != 0) coeff += Rational(sd.sign * w);
    }
    if (!coeff.is_zero()) total += coeff * a;
  });
  return total;
}

namespace {

Rational a_two(long k1, long k2) {
  if (k1 <= -2 || k2 <= -2) return Rational(0);
  Rational diff(k1 - k2);
  Rational inner = (diff * diff + Rational(k1 + k2, 2)) * Rational(k1 + 1) *
                       Rational(k2 + 1) +
                   Rational(k1 + k2 + 2, 8);
  return -f_factor(k1) * f_factor(k2) * inner;
}

Rational a_three(long k1, long k2, long k3) {
  if (k1 <= -2 || k2 <= -2 || k3 <= -2) return Rational(0);
  Rational v = Rational(k1 - k2) * Rational(k2 - k3) * Rational(k3 - k1);
  if (v.is_zero()) return Rational(0);
  Rational inner =
      Rational(k1 + 1) * Rational(k2 + 1) * Rational(k3 + 1) + Rational(1, 8);
  return f_factor(k1) * f_factor(k2) * f_factor(k3) * v * inner;
}

}  // namespace

Rational B_twopoint_sum(long d1, long d2) {
  if (d1 < 0 || d2 < 0) return Rational(0);
  long s = d1 + d2;
  Rational total(0);
  for (long k1 = -1; k1 <= s + 1; ++k1) {
    long k2 = s - k1;
    long w = std::max(0L, d1 - k1);
    if (w == 0) continue;
    total += Rational(w) * a_two(k1, k2);
  }
  return total;
}

Rational B_threepoint(long d1, long d2, long d3) {
  if (d1 < 0 || d2 < 0 || d3 < 0) return Rational(0);
  long s = d1 + d2 + d3;
  Rational total(0);
  for (long k1 = -1; k1 <= s + 2; ++k1)
    for (long k2 = -1; k1 + k2 <= s + 1; ++k2) {
      long k3 = s - k1 - k2;
      long w = min_count({d1 - k1, d1 + d2 - k1 - k2});
      if (w == 0) continue;
      Rational a = a_three(k1, k2, k3);
      if (!a.is_zero()) total += Rational(w) * a;
    }
  return Rational(-2) * total;
}

Rational B_fourpoint(long d1, long d2, long d3, long d4) {
  if (d1 < 0 || d2 < 0 || d3 < 0 || d4 < 0) return Rational(0);
  long s = d1 + d2 + d3 + d4;
  Rational total(0);
  for (long k1 = -1; k1 <= s + 3; ++k1)
    for (long k2 = -1; k1 + k2 <= s + 2; ++k2)
      for (long k3 = -1; k1 + k2 + k3 <= s + 1; ++k3) {
        long k4 = s - k1 - k2 - k3;
        long w1 = min_count({d1 - k1, d1 + d2 - k1 - k2, k4 - d4});
        long w2 = min_count(
            {d1 - k2, d1 + d2 - k2 - k3, d1 + d3 - k1 - k2, k4 - d4});
        long w3 = min_count({d1 - k1, d2 - k3, k2 - d3, k4 - d4});
        long w = w1 - w2 - w3;
        if (w == 0) continue;
        Rational a = trace_a({k1, k2, k3, k4});
        if (!a.is_zero()) total += Rational(w) * a;
      }
  return Rational(2) * total;
}

Rational f_weight(long h) {
  if (h < 0) throw std::domain_error("f_weight: negative index");
  const Int& df = double_factorial(2 * h - 1);
  return Rational(df * df * df) * two_pow(-3 * h) / Rational(factorial(h));
}

Rational C_onepoint(long d) {
  if (d < 0) throw std::domain_error("C_onepoint: negative index");
  long g = d + 1;
  Int b = binomial(Int(2 * g - 1), g);
  return Rational(g) * Rational(b * b) * two_pow(-(4 * g - 2));
}

Rational B_twopoint(long d1, long d2) {
  if (d1 < -1 || d2 < -1)
    throw std::domain_error("B_twopoint: index below -1");
  long g = d1 + d2 + 1;
  Rational sum(0);
  for (long h = 0; h <= d1; ++h)
    sum += Rational(g - 2 * h) * f_weight(h) * f_weight(g - h);
  if (d1 >= 0 && d2 >= 0) sum /= Rational(g);
  else if (!sum.is_zero())
    throw std::logic_error("B_twopoint: nonzero value at a negative index");
  return sum;
}

Rational C_twopoint(long d1, long d2) {
  if (d1 < -1 || d2 < -1)
    throw std::domain_error("C_twopoint: index below -1");
  long g = d1 + d2 + 1;
  Rational sum(0);
  for (long h = 0; h <= d1; ++h)
    sum += Rational(g - 2 * h) * f_weight(h) * f_weight(g - h);
  return two_pow(2 * g) * sum / Rational(factorial(2 * g));
}

PiMultiple C_twopoint_halfint(long d1, long t2) {
  if (d1 < 0 || t2 < 1 || t2 % 2 == 0)
    throw std::domain_error("C_twopoint_halfint: need integer d1 >= 0 and odd t2 >= 1");
  long twice_g = 2 * d1 + t2 + 2;
  Rational sum(0);
  for (long h = 0; h <= d1; ++h) {
    // F at the half-integer index (2(g-h)-1)/2 + 1/2: with m = (2g-2h-1)/2,
    // F_{m+1/2} = (m!)^3 2^(m+1) / ((2m+1)!! pi^2).
    long m = (twice_g - 2 * h - 1) / 2;
    const Int& mf = factorial(m);
    Rational fhalf = Rational(mf * mf * mf) * two_pow(m + 1) /
                     Rational(double_factorial(2 * m + 1));
    sum += Rational(twice_g - 4 * h, 2) * f_weight(h) * fhalf;
  }
  Rational coef = two_pow(twice_g) * sum / Rational(factorial(twice_g));
  return PiMultiple(coef, -2);
}

namespace {

// Truncated Laurent series in lambda with 2x2 rational matrix coefficients.
// Storage covers exponents [lo, hi]; entries are trustworthy only at
// exponents >= valid_lo (products lose accuracy at the bottom).
struct MatSeries {
  long lo = 0;
  long hi = 0;
  long valid_lo = 0;
  std::vector<Mat2> c;

  Mat2& slot(long e) { return c[static_cast<size_t>(e - lo)]; }
  const Mat2& slot(long e) const { return c[static_cast<size_t>(e - lo)]; }

  Mat2 at(long e) const {
    if (e > hi) return Mat2{};
    if (e < valid_lo)
      throw std::logic_error("MatSeries: coefficient below the valid depth");
    return slot(e);
  }
};

MatSeries resolvent_series(long floor_exp) {
  MatSeries s;
  s.lo = floor_exp;
  s.hi = 1;
  s.valid_lo = floor_exp;
  s.c.assign(static_cast<size_t>(s.hi - s.lo + 1), Mat2{});
  for (long e = s.lo; e <= s.hi; ++e) s.slot(e) = a_matrix(-e);
  return s;
}

MatSeries shift_up(const MatSeries& a, long d) {
  MatSeries s = a;
  s.lo += d;
  s.hi += d;
  s.valid_lo += d;
  return s;
}

MatSeries minus_part(const MatSeries& a, long floor_exp) {
  MatSeries s;
  s.lo = floor_exp;
  s.hi = -1;
  s.valid_lo = std::max(a.valid_lo, floor_exp);
  s.c.assign(static_cast<size_t>(s.hi - s.lo + 1), Mat2{});
  for (long e = std::max(s.lo, a.lo); e <= std::min(s.hi, a.hi); ++e)
    s.slot(e) = a.slot(e);
  return s;
}

MatSeries mul(const MatSeries& x, const MatSeries& y, long floor_exp) {
  MatSeries z;
  z.lo = floor_exp;
  z.hi = x.hi + y.hi;
  z.valid_lo =
      std::max({x.valid_lo + y.hi, y.valid_lo + x.hi, floor_exp});
  z.c.assign(static_cast<size_t>(z.hi - z.lo + 1), Mat2{});
  for (long e = std::max(z.lo, z.valid_lo); e <= z.hi; ++e) {
    Mat2 acc{};
    long alo = std::max(x.lo, e - y.hi);
    long ahi = std::min(x.hi, e - y.lo);
    for (long a = alo; a <= ahi; ++a) {
      const Mat2& xa = x.slot(a);
      if (xa.is_zero()) continue;
      const Mat2& yb = y.slot(e - a);
      if (yb.is_zero()) continue;
      acc = acc + xa * yb;
    }
    z.slot(e) = acc;
  }
  return z;
}

MatSeries add(const MatSeries& x, const MatSeries& y, long floor_exp) {
  MatSeries z;
  z.lo = floor_exp;
  z.hi = std::max(x.hi, y.hi);
  z.valid_lo = std::max(x.valid_lo, y.valid_lo);
  z.c.assign(static_cast<size_t>(z.hi - z.lo + 1), Mat2{});
  for (long e = z.lo; e <= z.hi; ++e) {
    Mat2 acc{};
    if (e >= x.lo && e <= x.hi) acc = acc + x.slot(e);
    if (e >= y.lo && e <= y.hi) acc = acc + y.slot(e);
    z.slot(e) = acc;
  }
  return z;
}

MatSeries scale(const MatSeries& x, const Rational& r) {
  MatSeries z = x;
  for (Mat2& m : z.c) m = m * r;
  return z;
}

}  // namespace

WindowTable b_window(long d, long m, long a_max, long b_max) {
  if (d < 0 || m < 0 || a_max < 0 || b_max < 0)
    throw std::domain_error("b_window: negative parameter");
  const long floor_exp =
      -(a_max + b_max + 2) - (m + 1) * (std::max(d, 1L) + 2) - 4;

  std::vector<MatSeries> tower;
  tower.push_back(resolvent_series(floor_exp));
  for (long level = 1; level <= m; ++level) {
    MatSeries sum;
    bool first = true;
    for (long i = 0; i + 1 <= level; ++i) {
      long j = level - 1 - i;
      MatSeries left = minus_part(shift_up(tower[static_cast<size_t>(i)], d),
                                  floor_exp);
      const MatSeries& right = tower[static_cast<size_t>(j)];
      MatSeries comm = add(mul(left, right, floor_exp),
                           scale(mul(right, left, floor_exp), Rational(-1)),
                           floor_exp);
      sum = first ? comm : add(sum, comm, floor_exp);
      first = false;
    }
    tower.push_back(scale(sum, Rational(1, level)));
  }

  // T(alpha, beta) = sum_k tr(M_k[alpha] M_{m-k}[beta]), minus the constant 1
  // that the m = 0 pairing picks up at (0, 0).
  auto T = [&](long alpha, long beta) {
    Rational t(0);
    for (long k = 0; k <= m; ++k) {
      Mat2 x = tower[static_cast<size_t>(k)].at(alpha);
      if (x.is_zero()) continue;
      Mat2 y = tower[static_cast<size_t>(m - k)].at(beta);
      if (y.is_zero()) continue;
      t += (x * y).trace();
    }
    if (m == 0 && alpha == 0 && beta == 0) t -= Rational(1);
    return t;
  };

  WindowTable w;
  w.d = d;
  w.m = m;
  w.value.assign(static_cast<size_t>(a_max + 1),
                 std::vector<Rational>(static_cast<size_t>(b_max + 1)));
  Rational mfact(factorial(m));
  for (long a = 0; a <= a_max; ++a)
    for (long b = 0; b <= b_max; ++b) {
      Rational s(0);
      for (long j = 0; j <= a; ++j)
        s += Rational(j + 1) * T(j + 1 - a, -b - 1 - j);
      w.value[static_cast<size_t>(a)][static_cast<size_t>(b)] = mfact * s;
    }
  return w;
}

}  // namespace bgw
