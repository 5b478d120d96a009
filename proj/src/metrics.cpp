#include "pelljeru/metrics.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "multiprecision.hpp"
#include "pelljeru/errors.hpp"
#include "pelljeru/exact_model.hpp"

namespace pelljeru {
namespace {

Count second_order(PellIndex n, long long first, long long second, long long c1, long long c2) {
  if (n == 0 || n > kMaxPellIndex) {
    throw IndexOutOfRange("count recurrence needs 1 <= n <= " + std::to_string(kMaxPellIndex) +
                          ", got " + std::to_string(n));
  }
  Count prev = first;
  Count cur = second;
  if (n == 1) return prev;
  for (PellIndex i = 3; i <= n; ++i) {
    Count next = c1 * cur + c2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<ScalePoint> scale_points(PellIndex n, Count (*count)(PellIndex)) {
  std::vector<ScalePoint> out;
  out.reserve(n);
  for (PellIndex i = 1; i <= n; ++i) out.push_back({pell(i), count(i)});
  return out;
}

double log_of(const Count& c) { return std::log(static_cast<double>(c)); }
double log_of(PellValue v) { return std::log(static_cast<double>(v)); }

std::string count_string(const Count& c) { return c.str(); }

}  // namespace

Count count2d_recurrence(PellIndex n) { return second_order(n, 1, 4, 4, 4); }

Count count3d_recurrence(PellIndex n) { return second_order(n, 1, 8, 8, 12); }

std::vector<ScalePoint> scale_points_2d(PellIndex n) { return scale_points(n, count2d_recurrence); }

std::vector<ScalePoint> scale_points_3d(PellIndex n) { return scale_points(n, count3d_recurrence); }

DimensionEstimate dim_estimate(std::span<const ScalePoint> counts) {
  if (counts.size() < 2) {
    throw TooFewEntries("dimension estimate needs at least 2 entries, got " +
                        std::to_string(counts.size()));
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i].side == 0 || counts[i].filled <= 0) {
      throw InvalidArgument("dimension estimate needs positive sides and counts");
    }
    if (i > 0 && counts[i].side <= counts[i - 1].side) {
      throw InvalidArgument("dimension estimate needs strictly increasing sides");
    }
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& c : counts) {
    xs.push_back(log_of(c.side));
    ys.push_back(log_of(c.filled));
  }
  const double m = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  DimensionEstimate est;
  est.endpoint = ys.back() / xs.back();
  est.slope = sxy / sxx;
  return est;
}

double dim_analytic(DimensionKind kind) {
  const double silver = 1.0 + std::numbers::sqrt2;
  const double growth = kind == DimensionKind::square ? 2.0 + 2.0 * std::numbers::sqrt2
                                                      : 4.0 + 2.0 * std::sqrt(7.0);
  return std::log(growth) / std::log(silver);
}

double dim_analytic_root(DimensionKind kind) {
  const double corners = kind == DimensionKind::square ? 4.0 : 8.0;
  const double edges = kind == DimensionKind::square ? 4.0 : 12.0;
  const double k = ExactModel::k;
  auto f = [&](double d) { return corners * std::pow(k, d) + edges * std::pow(k, 2.0 * d) - 1.0; };
  const double lo = kind == DimensionKind::square ? 1.0 : 2.0;
  boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 1);
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::bisect(f, lo, lo + 1.0, tol, max_iter);
  return 0.5 * (a + b);
}

MetricsReport report(PellIndex n, bool include_3d, bool include_discrepancy,
                     const BuildLimits& limits) {
  if (n == 0) throw LevelTooSmall("a report needs n >= 1");
  MetricsReport r;
  r.n = n;
  r.side = pell(n);
  r.filled_2d = count2d_recurrence(n);
  {
    using Real = boost::multiprecision::cpp_bin_float_50;
    const Real side(detail::to_cpp_int(r.side));
    r.fill_fraction = static_cast<double>(Real(r.filled_2d) / (side * side));
  }
  if (n >= 2) {
    r.ratio_diag = ratio_diagnostic(n);
    r.dim_estimate_2d = dim_estimate(scale_points_2d(n));
  }
  if (include_3d) {
    r.filled_3d = count3d_recurrence(n);
    if (n >= 2) r.dim_estimate_3d = dim_estimate(scale_points_3d(n));
  }
  if (include_discrepancy) r.discrepancy = discrepancy(n, limits);
  return r;
}

std::string format_real(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, end);
  if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

namespace {

std::vector<std::pair<std::string, std::string>> fields(const MetricsReport& r, bool keep_absent) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&](const char* key, std::optional<std::string> value) {
    if (value || keep_absent) out.emplace_back(key, value.value_or(""));
  };
  auto real = [](std::optional<double> v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return format_real(*v);
  };
  add("n", std::to_string(r.n));
  add("side", to_string(r.side));
  add("filled_2d", count_string(r.filled_2d));
  add("filled_3d", r.filled_3d ? std::optional(count_string(*r.filled_3d)) : std::nullopt);
  add("fill_fraction", format_real(r.fill_fraction));
  const auto& d2 = r.dim_estimate_2d;
  const auto& d3 = r.dim_estimate_3d;
  add("dim_estimate_2d", real(d2 ? std::optional(d2->endpoint) : std::nullopt));
  add("dim_slope_2d", real(d2 ? std::optional(d2->slope) : std::nullopt));
  add("dim_estimate_3d", real(d3 ? std::optional(d3->endpoint) : std::nullopt));
  add("dim_slope_3d", real(d3 ? std::optional(d3->slope) : std::nullopt));
  const auto& rd = r.ratio_diag;
  add("ratio", real(rd ? std::optional(rd->ratio) : std::nullopt));
  add("error_to_silver", real(rd ? std::optional(rd->error_to_silver) : std::nullopt));
  add("error_to_k", real(rd ? std::optional(rd->error_to_k) : std::nullopt));
  add("discrepancy", real(r.discrepancy));
  return out;
}

}  // namespace

std::string format_text(const MetricsReport& r) {
  std::string out;
  for (const auto& [key, value] : fields(r, false)) out += key + "=" + value + "\n";
  return out;
}

std::string format_csv(const MetricsReport& r) {
  std::string header;
  std::string row;
  for (const auto& [key, value] : fields(r, true)) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    row += value;
  }
  return header + "\n" + row + "\n";
}

}  // namespace pelljeru
