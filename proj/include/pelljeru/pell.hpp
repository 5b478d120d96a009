#pragma once

// Exact Pell numbers p_0 = 0, p_1 = 1, p_n = 2 p_{n-1} + p_{n-2}, and the
// convergence of their consecutive ratios to the silver ratio 1 + sqrt(2).

#include <cstdint>
#include <string>

namespace pelljeru {

__extension__ using PellValue = unsigned __int128;
using PellIndex = unsigned;

/// Largest supported index. p_88 needs 111 bits, so every value is exact in PellValue.
inline constexpr PellIndex kMaxPellIndex = 88;

/// Exact p_n. Throws IndexOutOfRange for n > kMaxPellIndex.
PellValue pell(PellIndex n);

struct RatioDiagnostic {
  PellIndex n = 0;
  double ratio = 0.0;            // p_n / p_{n-1}
  double error_to_silver = 0.0;  // |p_n / p_{n-1} - (1 + sqrt 2)|
  double error_to_k = 0.0;       // |p_{n-1} / p_n - (sqrt 2 - 1)|
};

/// Ratio and both error terms, evaluated with 100 significant decimal digits
/// before rounding to double so the errors keep full relative precision.
/// Throws DegenerateIndex for n < 2, IndexOutOfRange above kMaxPellIndex.
RatioDiagnostic ratio_diagnostic(PellIndex n);

/// Self test: the recurrence holds for 2 <= n <= up_to and every p_n equals the
/// rounded closed form ((1+sqrt2)^n - (1-sqrt2)^n) / (2 sqrt2). False if
/// up_to > kMaxPellIndex.
bool verify_recurrence(PellIndex up_to);

std::string to_string(PellValue value);

}  // namespace pelljeru
