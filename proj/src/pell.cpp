#include "pelljeru/pell.hpp"

#include <algorithm>
#include <array>

#include "multiprecision.hpp"
#include "pelljeru/errors.hpp"

namespace pelljeru {
namespace {

constexpr std::array<PellValue, kMaxPellIndex + 1> kTable = [] {
  std::array<PellValue, kMaxPellIndex + 1> t{};
  t[0] = 0;
  t[1] = 1;
  for (std::size_t i = 2; i < t.size(); ++i) t[i] = 2 * t[i - 1] + t[i - 2];
  return t;
}();

void check_index(PellIndex n) {
  if (n > kMaxPellIndex) {
    throw IndexOutOfRange("n = " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxPellIndex));
  }
}

}  // namespace

PellValue pell(PellIndex n) {
  check_index(n);
  return kTable[n];
}

RatioDiagnostic ratio_diagnostic(PellIndex n) {
  check_index(n);
  if (n < 2) {
    throw DegenerateIndex("ratio p_n / p_{n-1} needs n >= 2, got " + std::to_string(n));
  }
  using detail::Real100;
  const Real100 sqrt2 = boost::multiprecision::sqrt(Real100(2));
  const Real100 cur = detail::to_real(kTable[n]);
  const Real100 prev = detail::to_real(kTable[n - 1]);
  const Real100 ratio = cur / prev;

  RatioDiagnostic d;
  d.n = n;
  d.ratio = static_cast<double>(ratio);
  d.error_to_silver = static_cast<double>(abs(ratio - (1 + sqrt2)));
  d.error_to_k = static_cast<double>(abs(prev / cur - (sqrt2 - 1)));
  return d;
}

bool verify_recurrence(PellIndex up_to) {
  if (up_to > kMaxPellIndex) return false;
  for (PellIndex n = 2; n <= up_to; ++n) {
    if (kTable[n] != 2 * kTable[n - 1] + kTable[n - 2]) return false;
  }
  using detail::Real100;
  const Real100 sqrt2 = boost::multiprecision::sqrt(Real100(2));
  const Real100 up = 1 + sqrt2;
  const Real100 down = 1 - sqrt2;
  for (PellIndex n = 0; n <= up_to; ++n) {
    const Real100 closed = (pow(up, n) - pow(down, n)) / (2 * sqrt2);
    const auto rounded = static_cast<boost::multiprecision::cpp_int>(round(closed));
    if (rounded != detail::to_cpp_int(kTable[n])) return false;
  }
  return true;
}

std::string to_string(PellValue value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace pelljeru
