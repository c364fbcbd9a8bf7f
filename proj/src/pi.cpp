#include "bgw/pi.hpp"

#include <atomic>

#include "bgw/intfun.hpp"

namespace bgw {
namespace {

// Decimal expansion of pi after the point, 1040 places.  Checked against an
// independently computed enclosure in the test suite, so a corrupted digit
// cannot go unnoticed.
const char kPiFrac[] =
    "14159265358979323846264338327950288419716939937510582097494459230781640628620899"
    "86280348253421170679821480865132823066470938446095505822317253594081284811174502"
    "84102701938521105559644622948954930381964428810975665933446128475648233786783165"
    "27120190914564856692346034861045432664821339360726024914127372458700660631558817"
    "48815209209628292540917153643678925903600113305305488204665213841469519415116094"
    "33057270365759591953092186117381932611793105118548074462379962749567351885752724"
    "89122793818301194912983367336244065664308602139494639522473719070217986094370277"
    "05392171762931767523846748184676694051320005681271452635608277857713427577896091"
    "73637178721468440901224953430146549585371050792279689258923542019956112129021960"
    "86403441815981362977477130996051870721134999999837297804995105973173281609631859"
    "50244594553469083026425223082533446850352619311881710100031378387528865875332083"
    "81420617177669147303598253490428755468731159562863882353787593751957781857780532"
    "17122680661300192787661119590921642019893809525720106548586327886593615338182796";

constexpr int kStoredDigits = 1040;
constexpr int kHardCap = 1000;

std::atomic<int> g_limit{64};

}  // namespace

int max_pi_digits() { return kHardCap; }

int pi_digit_limit() { return g_limit.load(); }

void set_pi_digit_limit(int digits) {
  if (digits < 1 || digits > kHardCap)
    throw std::domain_error("set_pi_digit_limit: out of range");
  g_limit.store(digits);
}

PiBounds pi_bounds(int digits) {
  if (digits < 1) throw std::domain_error("pi_bounds: digits must be positive");
  if (digits > pi_digit_limit())
    throw std::domain_error("pi_bounds: request exceeds the digit limit");
  static const bool tail_ok = [] {
    // The truncation at any d <= kHardCap is a strict lower bound, and adding
    // 10^-d stays above pi, because the stored digits beyond the cap are not
    // all nines.
    for (int i = kHardCap; i < kStoredDigits; ++i)
      if (kPiFrac[i] != '9') return true;
    return false;
  }();
  if (!tail_ok) throw std::logic_error("pi_bounds: stored expansion unusable");

  Int scaled = 3;
  for (int i = 0; i < digits; ++i) scaled = scaled * 10 + (kPiFrac[i] - '0');
  Int den = ipow(10, static_cast<unsigned long>(digits));
  PiBounds b;
  b.lower = Rational(scaled, den);
  b.upper = Rational(scaled + 1, den);
  return b;
}

PiBounds PiMultiple::bounds(int digits) const {
  if (pi_power == 0) return PiBounds{coefficient, coefficient};
  PiBounds pi = pi_bounds(digits);
  long e = pi_power > 0 ? pi_power : -pi_power;
  Rational lo = pi.lower.pow(e);
  Rational hi = pi.upper.pow(e);
  if (pi_power < 0) {
    Rational t = lo;
    lo = hi.inverse();
    hi = t.inverse();
  }
  if (coefficient.sign() < 0) std::swap(lo, hi);
  return PiBounds{coefficient * lo, coefficient * hi};
}

}  // namespace bgw
