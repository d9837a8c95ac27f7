#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fnil/cli.hpp"

namespace {

std::pair<int64_t, int64_t> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("--p-range", "expected LO..HI");
  return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fnilcli: Frobenius actions on graded local cohomology of diagonal "
      "hypersurfaces over F_p, nilpotence invariants, and the Segre / "
      "Veronese / gluing / diagonal-subalgebra calculators"};
  app.require_subcommand(1);

  fnil::cli::CommonOptions common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "print the structured report");
    sub->add_flag("--strict", common.strict,
                  "complain on stderr when verdicts stay unknown");
    sub->add_flag("--allow-upper-bounds", common.allow_upper_bounds,
                  "accept upper-bound HSL inputs in Fte computations");
    sub->add_option("--report-out", common.out_path,
                    "write the structured report to a file");
  };

  // hypersurface
  fnil::cli::HypersurfaceArgs hyp;
  auto* sub_hyp = app.add_subcommand(
      "hypersurface",
      "classify H^n of F_p[x_0..x_n]/(x_n^d - g) degree by degree");
  sub_hyp->add_option("--p", hyp.p, "characteristic (prime)")->required();
  sub_hyp->add_option("--n", hyp.n, "number of denominator variables = dim R")
      ->required();
  sub_hyp->add_option("--d", hyp.d, "degree of the defining form")->required();
  sub_hyp->add_option("--g-terms", hyp.g_terms,
                      "terms of g as e0,..,e_{n-1}:coeff;... "
                      "(default: diagonal form x_0^d + ... + x_{n-1}^d)");
  sub_hyp->add_option("--max-e", hyp.max_e, "iteration cap per degree");
  sub_hyp->add_option("--window-lo", hyp.window_lo,
                      "lowest degree scanned (default -4d)");
  sub_hyp->add_flag("--dump-matrix", hyp.dump_matrix,
                    "print the degree-0 Frobenius matrix");
  sub_hyp->add_option("--out", hyp.profile_out, "write the profile file here");
  add_common(sub_hyp);

  // sweep
  fnil::cli::SweepArgs sweep;
  std::string range_text;
  auto* sub_sweep = app.add_subcommand(
      "sweep", "degree-0 verdicts and Segre F-depth across a prime range");
  sub_sweep->add_option("--d", sweep.d, "degree of the diagonal form")
      ->required();
  sub_sweep->add_option("--n", sweep.n, "dimension")->required();
  sub_sweep->add_option("--p-range", range_text, "primes LO..HI")->required();
  add_common(sub_sweep);

  // segre
  fnil::cli::SegreArgs segre;
  auto* sub_segre =
      app.add_subcommand("segre", "profile of the Segre product R # S");
  sub_segre->add_option("R", segre.profile_r, "profile of R")->required();
  sub_segre->add_option("S", segre.profile_s, "profile of S")->required();
  sub_segre->add_option("--out", segre.profile_out,
                        "write the product profile here");
  add_common(sub_segre);

  // veronese
  fnil::cli::VeroneseArgs ver;
  auto* sub_ver =
      app.add_subcommand("veronese", "profile of the Veronese subring R^(v)");
  sub_ver->add_option("R", ver.profile, "profile of R")->required();
  sub_ver->add_option("--v", ver.v, "Veronese index")->required();
  sub_ver->add_option("--out", ver.profile_out, "write the profile here");
  add_common(sub_ver);

  // glue
  fnil::cli::GlueArgs glue;
  std::vector<int64_t> dims;
  auto* sub_glue = app.add_subcommand(
      "glue", "bounds for a ring glued from R/a1, R/a2 along R/(a1+a2)");
  sub_glue->add_option("A", glue.profile_a, "profile of R/a1")->required();
  sub_glue->add_option("B", glue.profile_b, "profile of R/a2")->required();
  sub_glue->add_option("AB", glue.profile_ab, "profile of R/(a1+a2)")
      ->required();
  sub_glue
      ->add_option("--dims", dims, "d dim1 dim2 dimb")
      ->expected(4)
      ->required();
  sub_glue->add_flag("--generalized", glue.generalized,
                     "use gF-depth and generalized verdicts");
  sub_glue->add_option("--hsl-top", glue.hsl_top,
                       "asserted top HSL number of the glued ring");
  add_common(sub_glue);

  // diagonal
  fnil::cli::DiagonalArgs diag;
  std::vector<int64_t> bideg;
  bool no_dims_match = false;
  auto* sub_diag = app.add_subcommand(
      "diagonal",
      "diagonal subalgebra T_Delta = R^(g) # S^(h) and its hypersurface "
      "quotient");
  sub_diag->set_help_flag("--help", "print help");
  sub_diag->add_option("R", diag.profile_r, "profile of R")->required();
  sub_diag->add_option("S", diag.profile_s, "profile of S")->required();
  sub_diag->add_option("--g", diag.spec.g, "first Veronese index")->required();
  sub_diag->add_option("--h", diag.spec.h, "second Veronese index")
      ->required();
  sub_diag->add_option("--f-bidegree", bideg, "bidegree (d1, d2) of f")
      ->expected(2);
  sub_diag->add_flag("--no-dims-match", no_dims_match,
                     "do not assume dim (T/fT)_Delta = dim T_Delta - 1");
  add_common(sub_diag);

  // fte
  fnil::cli::FteArgs fte;
  auto* sub_fte = app.add_subcommand(
      "fte", "Frobenius test exponent upper bounds from HSL data");
  sub_fte->set_help_flag("--help", "print help");
  sub_fte
      ->add_option("--mode", fte.mode,
                   "weak | generalized | segre | veronese | glue")
      ->required();
  sub_fte->add_option("--h", fte.h, "HSL numbers h_0 .. h_d");
  sub_fte->add_option("--d", fte.d, "dimension");
  sub_fte->add_option("--N", fte.N, "uniform annihilator exponent");
  sub_fte->add_option("--p", fte.p, "characteristic");
  sub_fte->add_flag("--veronese-generalized", fte.veronese_generalized,
                    "use the generalized Veronese bound");
  sub_fte->add_option("profiles", fte.profiles, "profile files (per mode)");
  sub_fte->add_option("--dims", dims, "d dim1 dim2 dimb (glue mode)")
      ->expected(4);
  sub_fte->add_option("--hsl-top", glue.hsl_top,
                      "asserted top HSL number (glue mode)");
  add_common(sub_fte);

  CLI11_PARSE(app, argc, argv);

  try {
    fnil::cli::Report report;
    if (sub_hyp->parsed()) {
      report = fnil::cli::cmd_hypersurface(hyp, common);
    } else if (sub_sweep->parsed()) {
      std::tie(sweep.p_lo, sweep.p_hi) = parse_range(range_text);
      report = fnil::cli::cmd_sweep(sweep, common);
    } else if (sub_segre->parsed()) {
      report = fnil::cli::cmd_segre(segre, common);
    } else if (sub_ver->parsed()) {
      report = fnil::cli::cmd_veronese(ver, common);
    } else if (sub_glue->parsed()) {
      glue.d = dims[0];
      glue.dim1 = dims[1];
      glue.dim2 = dims[2];
      glue.dimb = dims[3];
      report = fnil::cli::cmd_glue(glue, common);
    } else if (sub_diag->parsed()) {
      if (bideg.size() == 2) {
        diag.spec.d1 = bideg[0];
        diag.spec.d2 = bideg[1];
      }
      diag.dims_match = !no_dims_match;
      report = fnil::cli::cmd_diagonal(diag, common);
    } else if (sub_fte->parsed()) {
      if (fte.mode == "glue") {
        if (dims.size() != 4)
          throw std::invalid_argument("glue mode needs --dims d dim1 dim2 dimb");
        if (fte.profiles.size() != 3)
          throw std::invalid_argument("glue mode needs three profile paths");
        fte.glue.d = dims[0];
        fte.glue.dim1 = dims[1];
        fte.glue.dim2 = dims[2];
        fte.glue.dimb = dims[3];
        fte.glue.profile_a = fte.profiles[0];
        fte.glue.profile_b = fte.profiles[1];
        fte.glue.profile_ab = fte.profiles[2];
        fte.glue.hsl_top = glue.hsl_top;
      }
      report = fnil::cli::cmd_fte(fte, common);
    }
    return fnil::cli::finish(report, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
