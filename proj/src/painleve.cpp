#include "bgw/painleve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bgw/intfun.hpp"
#include "bgw/numeric.hpp"
#include "bgw/series.hpp"

namespace bgw {

void JetPoly::add_term(const Key& k, const Rational& v) {
  if (v.is_zero()) return;
  Key key = k;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto [it, inserted] = terms_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

JetPoly JetPoly::constant(const Rational& v) {
  JetPoly p;
  p.add_term({}, v);
  return p;
}

JetPoly JetPoly::variable(int i) {
  if (i < 0) throw std::invalid_argument("JetPoly: negative jet index");
  JetPoly p;
  Key k(i + 1, 0);
  k[i] = 1;
  p.add_term(k, Rational(1));
  return p;
}

int JetPoly::max_jet() const {
  int best = -1;
  for (const auto& [k, v] : terms_) {
    (void)v;
    best = std::max(best, static_cast<int>(k.size()) - 1);
  }
  return best;
}

JetPoly JetPoly::operator+(const JetPoly& o) const {
  JetPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.add_term(k, v);
  return r;
}

JetPoly JetPoly::operator-(const JetPoly& o) const {
  JetPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.add_term(k, -v);
  return r;
}

JetPoly JetPoly::operator*(const JetPoly& o) const {
  JetPoly r;
  for (const auto& [k1, v1] : terms_)
    for (const auto& [k2, v2] : o.terms_) {
      Key k(std::max(k1.size(), k2.size()), 0);
      for (size_t i = 0; i < k1.size(); ++i) k[i] += k1[i];
      for (size_t i = 0; i < k2.size(); ++i) k[i] += k2[i];
      r.add_term(k, v1 * v2);
    }
  return r;
}

JetPoly JetPoly::operator*(const Rational& s) const {
  JetPoly r;
  if (s.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * s);
  return r;
}

JetPoly JetPoly::derived() const {
  JetPoly r;
  for (const auto& [k, v] : terms_) {
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      Key dk = k;
      if (dk.size() < i + 2) dk.resize(i + 2, 0);
      --dk[i];
      ++dk[i + 1];
      r.add_term(dk, v * Rational(k[i]));
    }
  }
  return r;
}

bool JetPoly::is_homogeneous(long degree) const {
  for (const auto& [k, v] : terms_) {
    (void)v;
    long deg = 0;
    for (size_t i = 0; i < k.size(); ++i) deg += k[i] * (static_cast<long>(i) + 2);
    if (deg != degree) return false;
  }
  return true;
}

std::string JetPoly::str() const {
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
    bool prev = false;
    if (!any || !(val == Rational(1))) {
      os << val.str();
      prev = true;
    }
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (prev) os << "*";
      os << "u" << i;
      if (k[i] > 1) os << "^" << k[i];
      prev = true;
    }
    first = false;
  }
  return os.str();
}

const JetPoly& m_poly(int d) {
  if (d < 0) throw std::invalid_argument("m_poly: negative index");
  thread_local std::vector<JetPoly> ms;
  thread_local std::vector<JetPoly> bs{JetPoly::constant(Rational(1))};
  const JetPoly u0 = JetPoly::variable(0);
  while (static_cast<int>(ms.size()) <= d) {
    int k = static_cast<int>(ms.size());
    // Coefficient of lambda^{-k}; the one unknown b_{k+1} enters only through
    // -2 (b_0 b_{k+1} + b_{k+1} b_0) = -4 b_{k+1}.
    JetPoly acc;
    for (int i = 0; i <= k; ++i) {
      const JetPoly& bi = bs[static_cast<size_t>(i)];
      const JetPoly& bj = bs[static_cast<size_t>(k - i)];
      acc = acc + bi * bj.derived().derived();
      acc = acc - bi.derived() * bj.derived() * Rational(1, 2);
      acc = acc + u0 * bi * bj * Rational(4);
    }
    for (int i = 1; i <= k; ++i)
      acc = acc - bs[static_cast<size_t>(i)] * bs[static_cast<size_t>(k + 1 - i)] *
                      Rational(2);
    JetPoly bnext = acc * Rational(1, 4);
    if (!bnext.is_homogeneous(2L * (k + 1)))
      throw std::logic_error("m_poly: generated term is not homogeneous");
    if (bnext.max_jet() > 2 * k)
      throw std::logic_error("m_poly: generated term uses too many jets");
    bs.push_back(bnext);
    ms.push_back(bnext * Rational(Int(1), double_factorial(2L * k + 1)));
  }
  return ms[static_cast<size_t>(d)];
}

CoeffSeq y_g_seq(int g_max) {
  if (g_max < 1) throw std::invalid_argument("y_g_seq: g_max must be >= 1");
  CoeffSeq s;
  s.kind = "y_g";
  s.v.resize(static_cast<size_t>(g_max) + 1);
  s.v[1] = Rational(1, 4);
  for (int g = 2; g <= g_max; ++g) {
    Rational acc = Rational(3L * g - 2) * Rational(3L * g - 4) *
                   s.v[static_cast<size_t>(g - 1)];
    Rational sum;
    for (int h = 1; h <= g - 1; ++h)
      sum += Rational(3L * h - 1) * s.v[static_cast<size_t>(h)] *
             s.v[static_cast<size_t>(g - h)];
    acc += Rational(2, g - 1) * sum;
    s.v[static_cast<size_t>(g)] = acc;
  }
  return s;
}

namespace {

Rational y_dn_value(int d, int n, BgwTable& table) {
  if (n == 0) return Rational(1, 4);
  IndexVector dd(static_cast<size_t>(n), d);
  Rational c = compute_C(dd, table);
  Rational r = Rational(factorial((2L * d + 1) * n + 1)) * c;
  r /= Rational(ipow(Int(2L * d + 1), static_cast<unsigned long>(n)) * factorial(n));
  return r;
}

void run_d1_gate(BgwTable& table) {
  thread_local bool passed = false;
  if (passed) return;
  CoeffSeq yg = y_g_seq(7);
  for (int n = 0; n <= 6; ++n) {
    Rational got = y_dn_value(1, n, table);
    Rational want = n == 0 ? Rational(1, 4) : yg.v[static_cast<size_t>(n + 1)];
    if (!(got == want))
      throw std::logic_error("y_dn_seq: d=1 gate failed at n=" + std::to_string(n));
  }
  passed = true;
}

}  // namespace

CoeffSeq y_dn_seq(int d, int n_max, BgwTable& table) {
  if (d < 1) throw std::invalid_argument("y_dn_seq: d must be positive");
  if (n_max < 0) throw std::invalid_argument("y_dn_seq: negative n_max");
  run_d1_gate(table);
  CoeffSeq s;
  s.kind = "y_dn";
  s.d = d;
  for (int n = 0; n <= n_max; ++n) s.v.push_back(y_dn_value(d, n, table));
  return s;
}

namespace {

// Finite combination sum_k coeff[k] X^{-k}, k >= 0.
using SparseX = std::map<long, Rational>;

void add_to(SparseX& a, long k, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = a.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) a.erase(it);
  }
}

SparseX mul_trunc(const SparseX& a, const SparseX& b, long k_max) {
  SparseX r;
  for (const auto& [ka, va] : a) {
    if (ka > k_max) continue;
    for (const auto& [kb, vb] : b) {
      if (ka + kb > k_max) break;
      add_to(r, ka + kb, va * vb);
    }
  }
  return r;
}

// d/dX: X^{-k} -> -k X^{-k-1}.
SparseX ddx(const SparseX& a, long k_max) {
  SparseX r;
  for (const auto& [k, v] : a)
    if (k + 1 <= k_max) add_to(r, k + 1, v * Rational(-k));
  return r;
}

// Residual of the solved equation for the given partial solution, truncated
// at X^{-k_max}.
SparseX hierarchy_residual(int d, const std::vector<Rational>& y, long k_max) {
  const JetPoly& m = m_poly(d);
  SparseX yser;
  for (size_t n = 0; n < y.size(); ++n)
    add_to(yser, (2L * d + 1) * static_cast<long>(n) + 2, y[n]);

  std::vector<SparseX> jets(static_cast<size_t>(2 * d + 1));
  for (const auto& [k, v] : yser) jets[0][k] = v * Rational(1, 2);
  for (int i = 1; i <= 2 * d; ++i)
    jets[static_cast<size_t>(i)] = ddx(jets[static_cast<size_t>(i - 1)], k_max);

  SparseX meval;
  for (const auto& [key, coeff] : m.terms()) {
    SparseX prod;
    prod[0] = coeff;
    for (size_t i = 0; i < key.size(); ++i)
      for (int e = 0; e < key[i]; ++e) prod = mul_trunc(prod, jets[i], k_max);
    for (const auto& [k, v] : prod) add_to(meval, k, v);
  }

  SparseX resid = ddx(meval, k_max);
  Rational pre = two_pow(2L * d + 1) * Rational(double_factorial(2L * d + 1));
  for (auto& [k, v] : resid) v *= pre;
  // -X Y' - 2Y contributes (k-2) y_k at X^{-k}.
  for (const auto& [k, v] : yser) add_to(resid, k, v * Rational(k - 2));
  return resid;
}

}  // namespace

CoeffSeq p34_solve(int d, int n_max) {
  if (d < 1) throw std::invalid_argument("p34_solve: d must be positive");
  if (n_max < 0) throw std::invalid_argument("p34_solve: negative n_max");
  CoeffSeq s;
  s.kind = "y_dn";
  s.d = d;
  s.v.push_back(Rational(1, 4));
  for (int n = 1; n <= n_max; ++n) {
    long target = (2L * d + 1) * n + 2;
    SparseX resid = hierarchy_residual(d, s.v, target);
    for (const auto& [k, v] : resid) {
      if (k < target && !v.is_zero())
        throw std::logic_error("p34_solve: nonzero residual at solved order " +
                               std::to_string(k));
    }
    Rational yn;
    auto it = resid.find(target);
    if (it != resid.end()) yn = -it->second / Rational((2L * d + 1) * n);
    s.v.push_back(yn);
  }
  return s;
}

std::vector<Rational> p34_residual(int d, const CoeffSeq& y) {
  if (d < 1) throw std::invalid_argument("p34_residual: d must be positive");
  if (y.v.empty()) throw std::invalid_argument("p34_residual: empty sequence");
  long n = static_cast<long>(y.v.size()) - 1;
  long k_max = (2L * d + 1) * (n + 1) + 1;
  SparseX resid = hierarchy_residual(d, y.v, k_max);
  std::vector<Rational> out(static_cast<size_t>(k_max) + 1);
  for (const auto& [k, v] : resid) out[static_cast<size_t>(k)] = v;
  return out;
}

CoeffSeq v_dn_seq(int d, int n_max) {
  if (d < 1) throw std::invalid_argument("v_dn_seq: d must be positive");
  if (n_max < 0) throw std::invalid_argument("v_dn_seq: negative n_max");
  CoeffSeq y = p34_solve(d, n_max);
  CoeffSeq s;
  s.kind = "v_dn";
  s.d = d;
  s.v.push_back(Rational(1, 2));
  for (int n = 1; n <= n_max; ++n) {
    Rational acc = y.v[static_cast<size_t>(n)];
    for (int n1 = 1; n1 <= n - 1; ++n1)
      acc += s.v[static_cast<size_t>(n1)] * s.v[static_cast<size_t>(n - n1)];
    s.v.push_back(acc / Rational((2L * d + 1) * n));
  }
  return s;
}

std::vector<std::string> asym_ratio(const std::vector<Rational>& seq,
                                    const std::vector<Rational>& ref, int digits) {
  if (seq.size() != ref.size())
    throw std::invalid_argument("asym_ratio: length mismatch");
  std::vector<std::string> out;
  for (size_t i = 0; i < seq.size(); ++i)
    out.push_back(decimal_sig(seq[i] / ref[i], digits));
  return out;
}

AsymFit fit_ratio(const std::vector<Rational>& seq, const std::vector<Rational>& ref,
                  const std::vector<long>& ns) {
  if (seq.size() != ref.size() || seq.size() != ns.size() || seq.size() < 3)
    throw std::invalid_argument("fit_ratio: need three aligned samples");
  size_t m = seq.size();
  // Quadratic model s = L + a x + b x^2 in x = 1/n through the last three
  // samples; L extrapolates to x = 0 and c1 = a / L.
  Rational x0 = Rational(1) / Rational(ns[m - 3]);
  Rational x1 = Rational(1) / Rational(ns[m - 2]);
  Rational x2 = Rational(1) / Rational(ns[m - 1]);
  Rational s0 = seq[m - 3] / ref[m - 3];
  Rational s1 = seq[m - 2] / ref[m - 2];
  Rational s2 = seq[m - 1] / ref[m - 1];
  Poly q = interpolate({x0, x1, x2}, {s0, s1, s2});
  AsymFit fit;
  fit.limit = q.coeff(0);
  if (fit.limit.is_zero()) throw std::domain_error("fit_ratio: zero limit");
  fit.first_correction = q.coeff(1) / fit.limit;
  return fit;
}

}  // namespace bgw
