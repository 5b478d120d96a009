#include "pelljeru/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include <CLI11.hpp>

#include "pelljeru/errors.hpp"
#include "pelljeru/exact_model.hpp"
#include "pelljeru/jerusalem2d.hpp"
#include "pelljeru/jerusalem3d.hpp"
#include "pelljeru/metrics.hpp"

namespace pelljeru::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BuildLimits limits_for(const RunConfig& c) {
  BuildLimits limits;
  if (c.max_build) {
    if (c.command == Command::gen3d) {
      limits.max_build_3d = *c.max_build;
    } else {
      limits.max_build_2d = *c.max_build;
    }
  }
  return limits;
}

template <typename Write>
void with_output(const RunConfig& c, std::ostream& out, Write write) {
  if (c.output_path == "-") {
    write(out);
    return;
  }
  std::ofstream file(c.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw WriteError("cannot open '" + c.output_path + "'");
  write(file);
}

void print_pell_table(PellIndex up_to, ReportStyle style, std::ostream& out) {
  if (up_to > kMaxPellIndex) {
    throw IndexOutOfRange("--pell-up-to " + std::to_string(up_to) + " exceeds " +
                          std::to_string(kMaxPellIndex));
  }
  const char sep = style == ReportStyle::csv ? ',' : ' ';
  const std::string missing = style == ReportStyle::csv ? "" : "-";
  out << "n" << sep << "p_n" << sep << "ratio" << sep << "error_to_silver" << sep << "error_to_k"
      << "\n";
  for (PellIndex n = 0; n <= up_to; ++n) {
    out << n << sep << to_string(pell(n)) << sep;
    if (n < 2) {
      out << missing << sep << missing << sep << missing << "\n";
      continue;
    }
    const RatioDiagnostic d = ratio_diagnostic(n);
    out << format_real(d.ratio) << sep << format_real(d.error_to_silver) << sep
        << format_real(d.error_to_k) << "\n";
  }
}

void run_metrics(const RunConfig& c, std::ostream& out) {
  if (c.pell_up_to) print_pell_table(*c.pell_up_to, c.report_style, out);
  if (c.n) {
    const MetricsReport r = report(*c.n, c.include_3d, c.include_discrepancy, limits_for(c));
    out << (c.report_style == ReportStyle::csv ? format_csv(r) : format_text(r));
  }
}

void run_compare(const RunConfig& c, std::ostream& out) {
  const BuildLimits limits = limits_for(c);
  const bool csv = c.report_style == ReportStyle::csv;
  if (c.sweep) {
    out << (csv ? "n,discrepancy\n" : "n discrepancy\n");
    for (PellIndex n = c.sweep->first; n <= c.sweep->last; ++n) {
      out << n << (csv ? ',' : ' ') << format_real(discrepancy(n, limits)) << "\n";
    }
    return;
  }
  const double d = discrepancy(*c.n, limits);
  if (csv) {
    out << "n,discrepancy\n" << *c.n << "," << format_real(d) << "\n";
  } else {
    out << "discrepancy=" << format_real(d) << "\n";
  }
}

Sweep parse_sweep(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--sweep expects A..B, got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const unsigned long first = std::stoul(a, &used_a);
    const unsigned long last = std::stoul(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || first > last || last > kMaxPellIndex) {
      throw UsageError("");
    }
    return {static_cast<PellIndex>(first), static_cast<PellIndex>(last)};
  } catch (const std::exception&) {
    throw UsageError("--sweep expects A..B with A <= B <= " + std::to_string(kMaxPellIndex) +
                     ", got '" + text + "'");
  }
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::gen2d: {
        const Grid2D g = build2d(*c.n, limits_for(c));
        with_output(c, out, [&](std::ostream& os) { write2d(g, std::get<Format2D>(c.format), os); });
        break;
      }
      case Command::gen3d: {
        const Grid3D g = build3d(*c.n, limits_for(c));
        with_output(c, out, [&](std::ostream& os) { write3d(g, std::get<Format3D>(c.format), os); });
        break;
      }
      case Command::metrics:
        with_output(c, out, [&](std::ostream& os) { run_metrics(c, os); });
        break;
      case Command::compare:
        with_output(c, out, [&](std::ostream& os) { run_compare(c, os); });
        break;
    }
  } catch (const Error& e) {
    err << "pelljeru: " << e.what() << "\n";
    return 1;
  } catch (const std::bad_alloc&) {
    err << "pelljeru: out of memory\n";
    return 1;
  }
  return 0;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer Jerusalem square and cube built from Pell numbers", "pelljeru"};
  app.require_subcommand(1);

  std::optional<PellIndex> n;
  std::string format;
  std::string out_path = "-";
  std::optional<PellIndex> max_build;
  bool with_3d = false;
  bool with_discrepancy = false;
  std::string sweep;
  std::optional<PellIndex> pell_up_to;
  std::optional<PellIndex> pell_sub_up_to;

  auto* gen2d = app.add_subcommand("gen2d", "Build P_n and write it as an image or table");
  auto* gen3d = app.add_subcommand("gen3d", "Build the level-n cube and write voxels or a mesh");
  auto* metrics = app.add_subcommand("metrics", "Print counts, dimensions and ratio diagnostics");
  auto* compare = app.add_subcommand("compare", "Compare P_n with the exact-ratio fractal");
  auto* pell_sub = metrics->add_subcommand("pell", "Print the Pell sequence with ratio diagnostics");
  pell_sub->add_option("--up-to", pell_sub_up_to, "Last index")->required();
  pell_sub->fallthrough();

  for (auto* sub : {gen2d, gen3d, metrics, compare}) {
    sub->add_option("--n", n, "Pell level");
    sub->add_option("--format", format, "Output format");
    sub->add_option("--out", out_path, "Output path, '-' for standard output");
    sub->add_option("--max-build", max_build, "Override the dense build limit");
  }
  metrics->add_flag("--3d", with_3d, "Include cube counts and dimension");
  metrics->add_flag("--discrepancy", with_discrepancy, "Include the exact-model discrepancy");
  metrics->add_option("--pell-up-to", pell_up_to, "Print p_0..p_N with ratio diagnostics");
  compare->add_option("--sweep", sweep, "Range A..B of levels");

  auto usage = [&app]() { return app.help("", CLI::AppFormatMode::Normal); };

  RunConfig c;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    c.n = n;
    c.output_path = out_path;
    c.max_build = max_build;
    c.include_3d = with_3d;
    c.include_discrepancy = with_discrepancy;
    c.pell_up_to = pell_sub_up_to ? pell_sub_up_to : pell_up_to;

    if (gen2d->parsed() || gen3d->parsed()) {
      c.command = gen2d->parsed() ? Command::gen2d : Command::gen3d;
      if (!n) throw UsageError("--n is required");
      if (c.command == Command::gen2d) {
        const auto f = parse_format2d(format.empty() ? "pbm_ascii" : format);
        if (!f) throw UsageError("unknown 2D format '" + format + "'");
        c.format = *f;
      } else {
        const auto f = parse_format3d(format.empty() ? "xyz_text" : format);
        if (!f) throw UsageError("unknown 3D format '" + format + "'");
        c.format = *f;
      }
    } else {
      c.command = metrics->parsed() ? Command::metrics : Command::compare;
      if (format.empty() || format == "text") {
        c.report_style = ReportStyle::text;
      } else if (format == "csv") {
        c.report_style = ReportStyle::csv;
      } else {
        throw UsageError("unknown report format '" + format + "' (expected text or csv)");
      }
      if (c.command == Command::metrics && !n && !c.pell_up_to) {
        throw UsageError("metrics needs --n or --pell-up-to");
      }
      if (c.command == Command::compare) {
        if (!sweep.empty()) c.sweep = parse_sweep(sweep);
        if (!c.sweep && !n) throw UsageError("compare needs --n or --sweep");
      }
    }
  } catch (const CLI::CallForHelp&) {
    out << usage();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "pelljeru: " << e.what() << "\n" << usage();
    return 2;
  } catch (const UsageError& e) {
    err << "pelljeru: " << e.what() << "\n" << usage();
    return 2;
  }
  return run(c, out, err);
}

}  // namespace pelljeru::cli
