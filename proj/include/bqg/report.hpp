#pragma once

#include <bqg/io.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace bqg {

struct RunOptions {
  int q = 2;
  std::optional<std::uint64_t> prime;
  std::optional<std::size_t> max_deg;  // default_max_deg(g) when absent
  std::size_t coset_cap = 1'000'000;
};

Json report_group_info(const FiniteGroup& g);
Json report_poset(const FiniteGroup& g, const RunOptions& o);
Json report_colimit(const FiniteGroup& g, const RunOptions& o);
Json report_higher_limits(const FiniteGroup& g, const RunOptions& o);
Json report_homology(const FiniteGroup& g, const RunOptions& o);
Json report_universal_cover(const FiniteGroup& g, const RunOptions& o);
Json report_coset_poset(const FiniteGroup& g, const RunOptions& o);
Json report_splitting(const FiniteGroup& g, const RunOptions& o);
Json report_ktheory(const FiniteGroup& g, const RunOptions& o);

/// Dispatch by command name (group-info, poset, colimit, ...).
Json run_command(const std::string& command, const FiniteGroup& g, const RunOptions& o);
bool is_group_command(const std::string& command);

/// Indented key/value rendering of a report.
std::string render_text(const Json& report);

}  // namespace bqg
