#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pelljeru/limits.hpp"
#include "pelljeru/pell.hpp"

namespace pelljeru {

using Count = boost::multiprecision::cpp_int;

/// Filled cells of P_n: a_1 = 1, a_2 = 4, a_n = 4 a_{n-1} + 4 a_{n-2}.
Count count2d_recurrence(PellIndex n);
/// Filled voxels of the cube: c_1 = 1, c_2 = 8, c_n = 8 c_{n-1} + 12 c_{n-2}.
Count count3d_recurrence(PellIndex n);

struct ScalePoint {
  PellValue side = 0;
  Count filled;
};

struct DimensionEstimate {
  double endpoint = 0.0;  // ln(filled_last) / ln(side_last)
  double slope = 0.0;     // least-squares slope of ln(filled) against ln(side)
};

/// Needs at least two entries with strictly increasing sides and nonzero counts.
DimensionEstimate dim_estimate(std::span<const ScalePoint> counts);

/// Recurrence counts for levels 1..n, ready for dim_estimate.
std::vector<ScalePoint> scale_points_2d(PellIndex n);
std::vector<ScalePoint> scale_points_3d(PellIndex n);

enum class DimensionKind { square, cube };

/// ln(lambda) / ln(1 + sqrt2) with lambda = 2 + 2 sqrt2 (square) or 4 + 2 sqrt7 (cube).
double dim_analytic(DimensionKind kind);
/// The same dimension as the root d of 4 k^d + 4 k^{2d} = 1 (square) or
/// 8 k^d + 12 k^{2d} = 1 (cube), k = sqrt2 - 1, found by bisection.
double dim_analytic_root(DimensionKind kind);

struct MetricsReport {
  PellIndex n = 0;
  PellValue side = 0;
  Count filled_2d;
  std::optional<Count> filled_3d;
  double fill_fraction = 0.0;
  std::optional<DimensionEstimate> dim_estimate_2d;  // absent for n = 1
  std::optional<DimensionEstimate> dim_estimate_3d;
  std::optional<RatioDiagnostic> ratio_diag;  // absent for n = 1
  std::optional<double> discrepancy;
};

MetricsReport report(PellIndex n, bool include_3d, bool include_discrepancy,
                     const BuildLimits& limits = {});

/// One key=value line per present field, in a fixed order.
std::string format_text(const MetricsReport& r);
/// Header line and one value line; absent optional fields are empty.
std::string format_csv(const MetricsReport& r);

/// Shortest decimal form that round-trips to the same double; integral values
/// keep a trailing ".0".
std::string format_real(double value);

}  // namespace pelljeru
