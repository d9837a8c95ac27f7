#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fnil/construction.hpp"

namespace fnil::cli {

// 0 = all requested verdicts determined, 2 = some verdict or value stayed
// unknown, 1 = input error (reserved for the entry point).
struct Report {
  std::string command;
  nlohmann::ordered_json inputs;
  std::vector<std::string> lines;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  int exit_status = 0;

  void add_line(const std::string& s) { lines.push_back(s); }
  void add_entry(const BoundReport& r);
  void mark_unknown() { if (exit_status == 0) exit_status = 2; }
  std::string render_text() const;
  nlohmann::ordered_json to_json() const;
};

struct CommonOptions {
  bool json = false;
  bool strict = false;
  bool allow_upper_bounds = false;
  std::string out_path;  // structured report destination ("" = none)
};

struct HypersurfaceArgs {
  int64_t p = 0;
  int n = 0;
  int64_t d = 0;
  std::string g_terms;  // "" = diagonal (Fermat) preset
  int max_e = 10;
  std::optional<int64_t> window_lo;
  bool dump_matrix = false;
  std::string profile_out;  // profile file destination ("" = none)
};
Report cmd_hypersurface(const HypersurfaceArgs& args, const CommonOptions& common);

struct SweepArgs {
  int64_t d = 0;
  int n = 0;
  int64_t p_lo = 0, p_hi = 0;
};
Report cmd_sweep(const SweepArgs& args, const CommonOptions& common);

struct SegreArgs {
  std::string profile_r, profile_s;
  std::string profile_out;
};
Report cmd_segre(const SegreArgs& args, const CommonOptions& common);

struct VeroneseArgs {
  std::string profile;
  int64_t v = 1;
  std::string profile_out;
};
Report cmd_veronese(const VeroneseArgs& args, const CommonOptions& common);

struct GlueArgs {
  int64_t d = 0, dim1 = 0, dim2 = 0, dimb = 0;
  std::string profile_a, profile_b, profile_ab;
  bool generalized = false;
  std::optional<int64_t> hsl_top;  // top HSL of the glued ring, when asserted
};
Report cmd_glue(const GlueArgs& args, const CommonOptions& common);

struct DiagonalArgs {
  std::string profile_r, profile_s;
  DiagonalSpec spec;
  bool dims_match = true;  // dim (T/fT)_Delta = dim T_Delta - 1, asserted
};
Report cmd_diagonal(const DiagonalArgs& args, const CommonOptions& common);

struct FteArgs {
  std::string mode;  // weak | generalized | segre | veronese | glue
  std::vector<int64_t> h;
  int64_t d = 0;
  int64_t N = 0;
  int64_t p = 0;
  bool veronese_generalized = false;
  std::vector<std::string> profiles;
  GlueArgs glue;  // for mode = glue
};
Report cmd_fte(const FteArgs& args, const CommonOptions& common);

// Writes the report per the common options and returns its exit status.
int finish(const Report& report, const CommonOptions& common);

}  // namespace fnil::cli
