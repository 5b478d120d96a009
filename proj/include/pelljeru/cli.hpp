#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pelljeru/export.hpp"
#include "pelljeru/limits.hpp"
#include "pelljeru/pell.hpp"

namespace pelljeru::cli {

enum class Command { gen2d, gen3d, metrics, compare };
enum class ReportStyle { text, csv };

struct Sweep {
  PellIndex first = 0;
  PellIndex last = 0;
};

struct RunConfig {
  Command command = Command::gen2d;
  std::optional<PellIndex> n;
  std::variant<Format2D, Format3D> format = Format2D::pbm_ascii;
  std::string output_path = "-";
  std::optional<PellIndex> max_build;
  ReportStyle report_style = ReportStyle::text;
  bool include_3d = false;
  bool include_discrepancy = false;
  std::optional<Sweep> sweep;
  std::optional<PellIndex> pell_up_to;
};

/// Executes a parsed config. Output for "-" goes to `out`; diagnostics to `err`.
/// Returns 0 on success and 1 on any library or I/O error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs. Parse errors print the
/// usage to `err` and return 2.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pelljeru::cli
