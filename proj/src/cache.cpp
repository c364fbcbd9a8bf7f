#include "bgw/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bgw/partitions.hpp"

namespace bgw {

namespace {

std::string render_key(const IndexVector& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  return os.str();
}

IndexVector parse_key(const std::string& s) {
  IndexVector d;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (part.empty()) throw std::runtime_error("cache: empty index in key");
    size_t pos = 0;
    int v = std::stoi(part, &pos);
    if (pos != part.size() || v < 0)
      throw std::runtime_error("cache: bad index in key");
    d.push_back(v);
  }
  if (d.empty()) throw std::runtime_error("cache: empty key");
  return d;
}

bool key_less(const IndexVector& a, const IndexVector& b) {
  long xa = x_of(a), xb = x_of(b);
  if (xa != xb) return xa < xb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void cache_save(const std::string& path, const BgwTable& table) {
  auto rows = table.snapshot();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cache_save: cannot open " + path);
  out << "BGWCACHE 1 " << table.x_max_seen() << "\n";
  for (const auto& [key, value] : rows)
    out << "B " << render_key(key) << ' ' << value.num().get_str() << '/'
        << value.den().get_str() << "\n";
  if (!out) throw std::runtime_error("cache_save: write failed for " + path);
}

void cache_load(const std::string& path, BgwTable& into) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cache_load: cannot open " + path);

  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("cache_load: empty file");
  std::istringstream hs(header);
  std::string magic;
  long version = 0, x_max = -1;
  if (!(hs >> magic >> version >> x_max) || magic != "BGWCACHE")
    throw std::runtime_error("cache_load: not a cache file");
  std::string trailing;
  if (hs >> trailing) throw std::runtime_error("cache_load: malformed header");
  if (version != 1)
    throw std::runtime_error("cache_load: unsupported version " +
                             std::to_string(version));
  if (x_max < 0) throw std::runtime_error("cache_load: bad x_max");

  std::vector<std::pair<IndexVector, Rational>> rows;
  std::string line;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      throw std::runtime_error("cache_load: blank line " + std::to_string(lineno));
    std::istringstream ls(line);
    std::string tag, keytext, valtext;
    if (!(ls >> tag >> keytext >> valtext) || tag != "B" || (ls >> trailing))
      throw std::runtime_error("cache_load: malformed record at line " +
                               std::to_string(lineno));
    IndexVector key = parse_key(keytext);
    if (!std::is_sorted(key.begin(), key.end()))
      throw std::runtime_error("cache_load: key not ascending at line " +
                               std::to_string(lineno));
    if (x_of(key) > x_max)
      throw std::runtime_error("cache_load: record exceeds x_max at line " +
                               std::to_string(lineno));

    size_t slash = valtext.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == valtext.size())
      throw std::runtime_error("cache_load: malformed value at line " +
                               std::to_string(lineno));
    Int num, den;
    if (num.set_str(valtext.substr(0, slash), 10) != 0 ||
        den.set_str(valtext.substr(slash + 1), 10) != 0)
      throw std::runtime_error("cache_load: malformed value at line " +
                               std::to_string(lineno));
    if (den <= 0)
      throw std::runtime_error("cache_load: nonpositive denominator at line " +
                               std::to_string(lineno));
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1)
      throw std::runtime_error("cache_load: fraction not reduced at line " +
                               std::to_string(lineno));

    if (!rows.empty() && !key_less(rows.back().first, key))
      throw std::runtime_error("cache_load: records out of order at line " +
                               std::to_string(lineno));

    Rational value(num, den);
    if (key == IndexVector{0} && value != Rational(1, 8))
      throw std::runtime_error("cache_load: wrong seed value for B(0)");
    rows.emplace_back(std::move(key), std::move(value));
  }

  for (const auto& [key, value] : rows) into.insert(key, value);
}

}  // namespace bgw
