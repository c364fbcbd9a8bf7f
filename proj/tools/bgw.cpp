#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bgw/cache.hpp"
#include "bgw/checks.hpp"
#include "bgw/dvv.hpp"
#include "bgw/intfun.hpp"
#include "bgw/kappa.hpp"
#include "bgw/numeric.hpp"
#include "bgw/painleve.hpp"
#include "bgw/resolvent.hpp"
#include "bgw/series.hpp"

using namespace bgw;
using nlohmann::json;

namespace {

// Tuple text with an optional repeat shorthand: "1,1,2", "100^10", "1^3,2".
IndexVector parse_tuple(const std::string& text) {
  IndexVector out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t caret = tok.find('^');
    long rep = 1;
    std::string base = tok;
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      rep = std::stol(tok.substr(caret + 1));
    }
    int v = std::stoi(base);
    if (v < 0 || rep < 1)
      throw CLI::ValidationError("partition", "bad entry '" + tok + "'");
    for (long i = 0; i < rep; ++i) out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("partition", "empty tuple");
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void parallel_warm(BgwTable& t, long x_max, int threads) {
  if (threads <= 1) {
    t.warm(x_max);
    return;
  }
  for (long X = 1; X <= x_max; ++X) {
    std::vector<IndexVector> batch;
    for (int n = 1; n <= X; ++n) {
      auto v = tuples_with_x(X, n);
      batch.insert(batch.end(), v.begin(), v.end());
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (size_t j = next++; j < batch.size(); j = next++) t.b(batch[j]);
      });
    for (auto& th : pool) th.join();
  }
}

int report_exit(const CheckReport& rep, bool strict, bool as_json) {
  bool hard_fail = false, conj_fail = false;
  for (const auto& r : rep) (r.conjecture ? conj_fail : hard_fail) |= !r.passed;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rep)
      arr.push_back({{"name", r.name},
                     {"conjecture", r.conjecture},
                     {"passed", r.passed},
                     {"detail", r.detail}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : rep) {
      const char* tag = r.passed ? "pass" : (r.conjecture ? "WARN" : "FAIL");
      std::cout << "[" << tag << "] " << r.name << ": " << r.detail << "\n";
    }
  }
  if (hard_fail) return 1;
  return strict && conj_fail ? 1 : 0;
}

std::string frac(const Rational& v) {
  return v.num().get_str() + "/" + v.den().get_str();
}

json seq_json(const CoeffSeq& s, size_t first) {
  json vals = json::array();
  for (size_t i = first; i < s.v.size(); ++i) vals.push_back(frac(s.v[i]));
  return {{"kind", s.kind}, {"d", s.d}, {"first_index", first}, {"values", vals}};
}

void print_table(const GenusTable& t, bool as_json) {
  if (as_json) {
    json rows = json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"d", render(r.d)},
                      {"C", frac(r.c)},
                      {"decimal", r.decimal},
                      {"scaled", r.scaled.get_str()}});
    std::cout << json{{"g", t.g},
                      {"D", t.common_denominator.get_str()},
                      {"rows", rows}}
                     .dump(2)
              << "\n";
    return;
  }
  std::cout << "g = " << t.g << "   D_g = " << t.common_denominator.get_str()
            << "\n";
  size_t wd = 0, wc = 0;
  for (const auto& r : t.rows) {
    wd = std::max(wd, render(r.d).size());
    wc = std::max(wc, frac(r.c).size());
  }
  for (const auto& r : t.rows)
    std::cout << "  (" << std::setw(static_cast<int>(wd)) << render(r.d)
              << ")  " << std::setw(static_cast<int>(wc)) << frac(r.c) << "  "
              << r.decimal << "  " << r.scaled.get_str() << "\n";
}

void write_interval_csv(const std::string& path, long g_max, BgwTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "g,n,C\n";
  for (long g = 2; g <= g_max; ++g)
    for (const auto& p : enumerate_partitions(g - 1))
      out << g << "," << p.size() << "," << decimal_sig(compute_C(p, table), 12)
          << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for BGW intersection numbers"};
  app.require_subcommand(1);
  // lets global options (--digits, --json, ...) appear after the subcommand
  app.fallthrough();

  int digits = 64;
  bool strict = false;
  int threads = 1;
  std::string cache_path;
  bool as_json = false;
  app.add_option("--digits", digits, "pi digit budget for interval decisions");
  app.add_flag("--strict-conjectures", strict,
               "nonzero exit when a conjecture-level check fails");
  app.add_option("--threads", threads, "worker threads for table warming");
  app.add_option("--cache", cache_path, "load this table snapshot on startup");
  app.add_flag("--json", as_json, "machine-readable output");

  auto* sc_compute =
      app.add_subcommand("compute", "B(d), C(d) and normalizations");
  std::string part_text;
  std::string method = "auto";
  bool chat = false;
  sc_compute->add_option("partition", part_text, "tuple, e.g. 1,1,2 or 100^10")
      ->required();
  sc_compute->add_option("--method", method, "route: auto|recursion|npoint|window")
      ->check(CLI::IsMember({"auto", "recursion", "npoint", "window"}));
  sc_compute->add_flag("--chat", chat, "also evaluate Chat(d) and 1 - Chat(d)");

  auto* sc_table = app.add_subcommand("table", "genus table of C(d)");
  long table_g = 7;
  sc_table->add_option("--g", table_g, "genus")->required();

  auto* sc_check = app.add_subcommand("check", "verification suites");
  std::string suite;
  long gmax = -1;
  bool slow = false;
  std::string csv_path;
  int opt_n = 4, opt_d = 20, opt_terms = 8;
  sc_check->add_option("suite", suite, "which suite")
      ->required()
      ->check(CLI::IsMember({"nesting", "monotone", "integrality", "cross",
                             "bounds", "intervals", "wsum", "subexp", "kappa"}));
  sc_check->add_option("--gmax", gmax, "genus range (suite-specific default)");
  sc_check->add_flag("--slow", slow, "include long-running instances");
  sc_check->add_option("--csv", csv_path, "write g,n,C plot data (intervals)");
  sc_check->add_option("--n", opt_n, "tuple length for the wsum suite");
  sc_check->add_option("--d", opt_d, "index for the wsum suite");
  sc_check->add_option("--terms", opt_terms, "terms of W(N;d,X) for wsum");

  auto* sc_series = app.add_subcommand("series", "asymptotic expansions");
  std::string family;
  int order = 12;
  int ser_d = 1;
  int ser_n = 3;
  std::string lambda_text = "1";
  sc_series->add_option("family", family, "gamma|ck|chatk|wd|wlambda|subexp")
      ->required()
      ->check(CLI::IsMember({"gamma", "ck", "chatk", "wd", "wlambda", "subexp"}));
  sc_series->add_option("--order", order, "truncation order");
  sc_series->add_option("--d", ser_d, "index d for the wd family");
  sc_series->add_option("--n", ser_n, "tuple length for the subexp family");
  sc_series->add_option("--lambda", lambda_text, "partition for wlambda");

  auto* sc_painleve = app.add_subcommand("painleve", "formal solution data");
  std::string pfam;
  int pd = 1, pn = 12;
  sc_painleve->add_option("family", pfam, "y|ydn|vdn|residual")
      ->required()
      ->check(CLI::IsMember({"y", "ydn", "vdn", "residual"}));
  sc_painleve->add_option("--d", pd, "hierarchy index");
  sc_painleve->add_option("--n", pn, "number of coefficients");

  auto* sc_kappa = app.add_subcommand("kappa", "kappa_1 brackets and volumes");
  std::string kfam;
  int km = 1, kg = 2, kn = 1;
  std::string kpart;
  sc_kappa->add_option("family", kfam, "number|table|volume|gprs")
      ->required()
      ->check(CLI::IsMember({"number", "table", "volume", "gprs"}));
  sc_kappa->add_option("--m", km, "kappa_1 exponent");
  sc_kappa->add_option("--g", kg, "genus");
  sc_kappa->add_option("--n", kn, "boundary count for volumes");
  sc_kappa->add_option("--partition", kpart, "tau indices, e.g. 1,1");

  auto* sc_cache = app.add_subcommand("cache", "table snapshots");
  std::string cfam, cpath;
  long cxmax = 26, cwarm = 0;
  sc_cache->add_option("op", cfam, "save|load")
      ->required()
      ->check(CLI::IsMember({"save", "load"}));
  sc_cache->add_option("--path", cpath, "snapshot file")->required();
  sc_cache->add_option("--xmax", cxmax, "warm depth before saving");
  sc_cache->add_option("--warm", cwarm, "warm to this X after loading");

  CLI11_PARSE(app, argc, argv);

  try {
    set_pi_digit_limit(digits);
    BgwTable table;
    if (!cache_path.empty()) cache_load(cache_path, table);

    if (*sc_compute) {
      IndexVector d = parse_tuple(part_text);
      long X = x_of(d), g = genus(d);
      size_t n = d.size();
      bool constant = std::all_of(d.begin(), d.end(),
                                  [&](int v) { return v == d[0]; });
      std::string route = method;
      if (route == "auto")
        route = X <= 60              ? "recursion"
                : constant && n >= 2 ? "window"
                : n <= 4             ? "npoint"
                                     : "recursion";
      Rational b;
      if (route == "recursion") {
        b = compute_B(d, table);
      } else if (route == "npoint") {
        b = n == 1 ? B_onepoint(d[0]) : B_npoint(d);
      } else {
        if (!constant || n < 2)
          throw std::runtime_error("window route needs a constant tuple d^n");
        b = b_window(d[0], static_cast<long>(n) - 2, d[0], d[0])
                .value[d[0]][d[0]];
      }
      Rational c = c_from_b(d, b);
      json out{{"d", render(d)},         {"n", n},
               {"weight", weight(d)},    {"g", g},
               {"X", X},                 {"route", route},
               {"B", frac(b)},           {"C", frac(c)},
               {"C_decimal", decimal_sig(c, 10)}};
      if (!as_json) {
        std::cout << "d = (" << render(d) << ")  n = " << n
                  << "  |d| = " << weight(d) << "  g = " << g << "  X = " << X
                  << "  [" << route << "]\n";
        std::cout << "B(d) = " << frac(b) << "\n";
        std::cout << "C(d) = " << frac(c) << " ~ " << decimal_sig(c, 10)
                  << "\n";
      }
      if (chat) {
        PiMultiple gam = gamma_exact(X);
        PiMultiple chat_pm(c / gam.coefficient, -gam.pi_power);
        // one part: C(d) = gamma(X) exactly, so Chat sits on the boundary
        bool exact_one =
            chat_pm.pi_power == 0 && chat_pm.coefficient == Rational(1);
        RatInterval ci = to_interval(chat_pm, digits);
        RatInterval one_minus = RatInterval::point(Rational(1)) - ci;
        bool inside = ci.lo > Rational(0) && one_minus.lo > Rational(0);
        bool outside = ci.hi <= Rational(0) || one_minus.hi <= Rational(0);
        std::string verdict = inside ? "yes"
                              : outside
                                  ? "NO"
                                  : "undecided at this digit budget";
        std::string mag =
            exact_one ? "0"
                      : decimal_sig((one_minus.lo + one_minus.hi) / Rational(2), 6);
        out["Chat"] = decimal_sig(chat_pm, std::min(digits, 40));
        out["one_minus_Chat"] = mag;
        out["Chat_is_one"] = exact_one;
        out["Chat_in_unit_interval"] = verdict;
        if (!as_json) {
          std::cout << "Chat(d) = " << decimal_sig(chat_pm, std::min(digits, 40))
                    << "\n";
          if (exact_one)
            std::cout << "1 - Chat(d) = 0 exactly (one-part value equals "
                         "gamma(X))\n";
          else
            std::cout << "1 - Chat(d) ~ " << mag << "  (Chat in (0,1): "
                      << verdict << ")\n";
        }
        if (!exact_one && !inside && strict) return 1;
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*sc_table) {
      print_table(genus_table(table_g, table), as_json);
      return 0;
    }

    if (*sc_check) {
      CheckReport rep;
      if (suite == "nesting") {
        if (gmax < 0) gmax = 12;
        parallel_warm(table, 2 * gmax, threads);
        rep = check_nesting(gmax, table);
      } else if (suite == "monotone") {
        if (gmax < 0) gmax = 12;
        parallel_warm(table, 2 * gmax, threads);
        rep = check_monotone(gmax, table);
      } else if (suite == "integrality") {
        if (gmax < 0) gmax = 12;
        parallel_warm(table, 2 * gmax, threads);
        rep = check_integrality(gmax, table, slow);
      } else if (suite == "cross") {
        if (gmax < 0) gmax = 9;
        rep = check_cross(gmax, table);
      } else if (suite == "bounds") {
        if (gmax < 0) gmax = 12;
        parallel_warm(table, 2 * gmax + 2, threads);
        rep = check_bounds(2 * gmax + 2, table);
      } else if (suite == "intervals") {
        if (gmax < 0) gmax = 12;
        rep = check_interval_stats(gmax, table);
        if (!csv_path.empty()) {
          write_interval_csv(csv_path, gmax, table);
          std::cout << "plot data written to " << csv_path << "\n";
        }
      } else if (suite == "wsum") {
        rep = check_wsum(opt_n, opt_d, opt_terms);
      } else if (suite == "subexp") {
        rep = check_subexp(6);
      } else {
        if (gmax < 0) gmax = 8;
        rep = kappa_monotone_check(static_cast<int>(gmax), table);
      }
      return report_exit(rep, strict, as_json);
    }

    if (*sc_series) {
      if (family == "gamma") {
        Series s = gamma_series(order);
        if (as_json) {
          json vals = json::array();
          for (int k = 0; k <= s.order(); ++k) vals.push_back(frac(s[k]));
          std::cout << json{{"series", "pi*gamma"}, {"coefficients", vals}}.dump(2)
                    << "\n";
        } else {
          std::cout << "pi*gamma(X) = " << s.str() << "\n";
        }
      } else if (family == "ck" || family == "chatk") {
        json arr = json::array();
        for (int k = 0; k <= order; ++k) {
          MPoly p = family == "ck" ? c_poly(k, table) : chat_poly(k, table);
          if (as_json)
            arr.push_back({{"k", k}, {"poly", p.str()}});
          else
            std::cout << (family == "ck" ? "c_" : "chat_") << k << " = "
                      << p.str() << "\n";
        }
        if (as_json)
          std::cout << json{{"series", family}, {"coefficients", arr}}.dump(2)
                    << "\n";
      } else if (family == "wd") {
        Series s = w_d_closed(ser_d, order);
        if (as_json) {
          json vals = json::array();
          for (int k = 0; k <= s.order(); ++k) vals.push_back(frac(s[k]));
          std::cout << json{{"series", "W_d"}, {"d", ser_d}, {"coefficients", vals}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << "W_" << ser_d << "(X) = " << s.str() << "\n";
        }
      } else if (family == "wlambda") {
        IndexVector lam = parse_tuple(lambda_text);
        Series s = w_lambda(lam, order, table);
        if (as_json) {
          json vals = json::array();
          for (int k = 0; k <= s.order(); ++k) vals.push_back(frac(s[k]));
          std::cout << json{{"series", "W_lambda"},
                            {"lambda", render(lam)},
                            {"coefficients", vals}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << "W_(" << render(lam) << ")(X) = " << s.str() << "\n";
        }
      } else {
        auto bs = subexp_b_series(ser_n, order);
        auto ls = subexp_l_series(ser_n, order);
        if (as_json) {
          json bj = json::array(), lj = json::array();
          for (const auto& v : bs) bj.push_back(frac(v));
          for (const auto& v : ls) lj.push_back(frac(v));
          std::cout << json{{"series", "subexp"},
                            {"n", ser_n},
                            {"b", bj},
                            {"l", lj}}
                           .dump(2)
                    << "\n";
        } else {
          for (size_t k = 1; k < bs.size(); ++k)
            std::cout << "b_" << k << "(" << ser_n << ") = " << frac(bs[k])
                      << "\n";
          for (size_t k = 0; k < ls.size(); ++k)
            std::cout << "l_" << k + 1 << "(" << ser_n << ") = " << frac(ls[k])
                      << "\n";
        }
      }
      return 0;
    }

    if (*sc_painleve) {
      if (pfam == "residual") {
        CoeffSeq y = p34_solve(pd, pn);
        auto r = p34_residual(pd, y);
        bool zero = std::all_of(r.begin(), r.end(),
                                [](const Rational& v) { return v.is_zero(); });
        if (as_json)
          std::cout << json{{"d", pd},
                            {"orders", pn},
                            {"residual_coefficients", r.size()},
                            {"all_zero", zero}}
                           .dump(2)
                    << "\n";
        else
          std::cout << "residual through " << r.size() << " coefficients: "
                    << (zero ? "identically zero" : "NONZERO") << "\n";
        return zero ? 0 : 1;
      }
      CoeffSeq s;
      size_t first = 0;
      if (pfam == "y") {
        s = y_g_seq(pn);
        first = 1;
      } else if (pfam == "ydn") {
        s = y_dn_seq(pd, pn, table);
      } else {
        s = v_dn_seq(pd, pn);
      }
      if (as_json) {
        std::cout << seq_json(s, first).dump(2) << "\n";
      } else {
        for (size_t i = first; i < s.v.size(); ++i)
          std::cout << s.kind << "[" << i << "] = " << frac(s.v[i]) << "\n";
      }
      return 0;
    }

    if (*sc_kappa) {
      IndexVector kd =
          kpart.empty() ? IndexVector{} : parse_tuple(kpart);
      if (kfam == "number") {
        Rational v = kappa_number(km, kd, table);
        if (as_json)
          std::cout << json{{"m", km}, {"d", render(kd)}, {"value", frac(v)}}
                           .dump(2)
                    << "\n";
        else
          std::cout << "<kappa_1^" << km << " tau_(" << render(kd)
                    << ")> = " << frac(v) << "\n";
      } else if (kfam == "table") {
        json brackets = json::array(), normalized = json::array();
        Int den(1);
        std::vector<std::pair<std::string, Rational>> rows;
        for (int m = kg - 1; m >= 1; --m)
          for (const auto& p : enumerate_partitions(kg - 1 - m)) {
            Rational v = kappa_number(m, p, table);
            std::string labelled = "<kappa_1^" + std::to_string(m) + " tau_(" +
                                   render(p) + ")>";
            if (as_json)
              brackets.push_back({{"m", m}, {"d", render(p)}, {"value", frac(v)}});
            else
              std::cout << labelled << " = " << frac(v) << "\n";
            if (m >= 2) {
              Rational c = c_kappa(m, p, table);
              rows.emplace_back("C(" + std::to_string(m) + "; " + render(p) + ")",
                                c);
              mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
            }
          }
        for (const auto& [label, c] : rows) {
          Rational scaled = c * Rational(den);
          if (as_json)
            normalized.push_back({{"label", label},
                                  {"value", frac(c)},
                                  {"decimal", decimal_sig(c, 6)},
                                  {"scaled", scaled.num().get_str()}});
          else
            std::cout << label << " = " << frac(c) << " ~ " << decimal_sig(c, 6)
                      << "  scaled " << scaled.num().get_str() << "\n";
        }
        if (as_json)
          std::cout << json{{"g", kg},
                            {"D", den.get_str()},
                            {"brackets", brackets},
                            {"normalized", normalized}}
                           .dump(2)
                    << "\n";
        else
          std::cout << "D_" << kg << " = " << den.get_str() << "\n";
      } else if (kfam == "volume") {
        VolumePolynomial v = sw_volume(kg, kn, table);
        if (as_json)
          std::cout << json{{"g", kg}, {"n", kn}, {"volume", v.str()}}.dump(2)
                    << "\n";
        else
          std::cout << "V_{" << kg << "," << kn << "}(L) = " << v.str() << "\n";
      } else {
        std::string r = gprs_ratio(kg, kd, table, 8);
        if (as_json)
          std::cout << json{{"g", kg}, {"d", render(kd)}, {"ratio", r}}.dump(2)
                    << "\n";
        else
          std::cout << "bracket / predicted leading form = " << r << "\n";
      }
      return 0;
    }

    if (*sc_cache) {
      if (cfam == "save") {
        auto t0 = std::chrono::steady_clock::now();
        parallel_warm(table, cxmax, threads);
        double warm_s = seconds_since(t0);
        cache_save(cpath, table);
        std::cout << "saved " << table.size() << " entries (X <= "
                  << table.x_max_seen() << ") to " << cpath << "; warm took "
                  << std::fixed << std::setprecision(2) << warm_s << " s\n";
      } else {
        auto t0 = std::chrono::steady_clock::now();
        cache_load(cpath, table);
        double load_s = seconds_since(t0);
        std::cout << "loaded " << table.size() << " entries (X <= "
                  << table.x_max_seen() << ") in " << std::fixed
                  << std::setprecision(2) << load_s << " s\n";
        if (cwarm > 0) {
          t0 = std::chrono::steady_clock::now();
          parallel_warm(table, cwarm, threads);
          std::cout << "warm(" << cwarm << ") on top of the snapshot took "
                    << std::fixed << std::setprecision(2) << seconds_since(t0)
                    << " s (" << table.size() << " entries)\n";
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
