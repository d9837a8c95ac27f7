#include "fnil/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "fnil/hypersurface.hpp"
#include "fnil/profile_io.hpp"

namespace fnil::cli {

namespace {

using json = nlohmann::ordered_json;

std::string status_string(const DegreeVerdict& v) {
  switch (v.status) {
    case DegreeStatus::ZeroSpace:
      return "zero piece";
    case DegreeStatus::Nilpotent:
      return "nilpotent (e = " + std::to_string(v.e) + ")";
    case DegreeStatus::NotNilpotent:
      return "not nilpotent";
    case DegreeStatus::NotNilpotentUpTo:
      return "undecided after " + std::to_string(v.e) + " steps";
  }
  return "?";
}

std::string b_string(const BInvariant& b) { return b.to_string(); }

std::vector<GTerm> parse_g_terms(const std::string& text, int n) {
  // "e0,e1,...:coeff;e0,e1,...:coeff"
  std::vector<GTerm> terms;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, ';')) {
    if (term.empty()) continue;
    const auto colon = term.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("g-term needs the form e0,..,e_{n-1}:coeff");
    GTerm g;
    g.coeff = std::stoll(term.substr(colon + 1));
    std::stringstream es(term.substr(0, colon));
    std::string e;
    while (std::getline(es, e, ',')) g.exps.push_back(std::stoll(e));
    if (int(g.exps.size()) != n)
      throw std::invalid_argument("g-term needs one exponent per variable");
    terms.push_back(std::move(g));
  }
  if (terms.empty()) throw std::invalid_argument("no g-terms parsed");
  return terms;
}

HypersurfaceRing build_ring(const HypersurfaceArgs& args) {
  if (args.g_terms.empty())
    return HypersurfaceRing::fermat(args.p, args.n, args.d);
  return HypersurfaceRing(args.p, args.n, args.d,
                          parse_g_terms(args.g_terms, args.n));
}

void add_profile_lines(Report& rep, const RingProfile& prof) {
  rep.add_line("F-depth = " + prof.fdepth().to_string() +
               ", gF-depth = " + prof.gfdepth().to_string());
  rep.add_line("weakly F-nilpotent: " + to_string(prof.weakly_f_nilpotent()));
  rep.add_line("generalized weakly F-nilpotent: " +
               to_string(prof.generalized_weakly_f_nilpotent()));
  rep.add_line("b(R) = " + prof.b_index().to_string());
  rep.add_line("F-nilpotent: " + to_string(prof.f_nilpotent()));
  if (prof.weakly_f_nilpotent() == TriBool::Unknown ||
      prof.generalized_weakly_f_nilpotent() == TriBool::Unknown ||
      prof.f_nilpotent() == TriBool::Unknown)
    rep.mark_unknown();
}

HslValue profile_hsl_at(const RingProfile& p, int j) {
  if (j > p.dim || p.index(j).is_zero) return HslValue::exact(0);
  return p.index(j).hsl;
}

}  // namespace

void Report::add_entry(const BoundReport& r) {
  entries.push_back(bound_report_to_json(r));
  if (r.kind == BoundReport::Kind::Unknown ||
      (r.kind == BoundReport::Kind::Verdict && r.verdict == TriBool::Unknown))
    mark_unknown();
}

std::string Report::render_text() const {
  std::ostringstream os;
  os << "== " << command << " ==\n";
  for (const std::string& l : lines) os << l << "\n";
  return os.str();
}

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["lines"] = lines;
  j["entries"] = entries;
  j["exit_status"] = exit_status;
  return j;
}

Report cmd_hypersurface(const HypersurfaceArgs& args,
                        const CommonOptions& common) {
  (void)common;
  Report rep;
  rep.command = "hypersurface";
  rep.inputs = {{"p", args.p},
                {"n", args.n},
                {"d", args.d},
                {"g_terms", args.g_terms},
                {"max_e", args.max_e}};

  const HypersurfaceRing ring = build_ring(args);
  ClassifyOptions opts;
  opts.max_e = args.max_e;
  opts.window_lo = args.window_lo;
  std::vector<DegreeVerdict> verdicts;
  const RingProfile prof = classify_ring(ring, opts, &verdicts);

  rep.add_line("ring: " + ring.describe());
  rep.add_line("dim = " + std::to_string(prof.dim) +
               " (Cohen-Macaulay hypersurface; H^j = 0 for j < dim)");
  rep.add_line("a-invariant of H^" + std::to_string(prof.dim) + " = " +
               std::to_string(a_invariant(ring)));
  for (const DegreeVerdict& v : verdicts) {
    if (v.status != DegreeStatus::ZeroSpace || v.degree == 0)
      rep.add_line("  degree " + std::to_string(v.degree) + ": " +
                   status_string(v));
    json entry;
    entry["type"] = "degree_verdict";
    entry["degree"] = v.degree;
    entry["status"] = status_string(v);
    entry["steps"] = v.e;
    entry["kernel_dims"] = v.chain.dims;
    rep.entries.push_back(entry);
  }
  rep.add_line("b_" + std::to_string(prof.dim) + " = " +
               b_string(b_invariant(prof.index(prof.dim).nilsupport)));
  rep.add_line("HSL of the degree-0 piece = " +
               prof.index(prof.dim).hsl_deg0.to_string() +
               ", dim of the degree-0 non-nilpotent quotient = " +
               std::to_string(prof.index(prof.dim).dim_g0.value_or(-1)));
  if (!prof.punctured_f_rational.has_value())
    rep.add_line(
        "punctured-spectrum flag unknown (defining form not certified "
        "smooth); F-nilpotence verdict is conditional");
  add_profile_lines(rep, prof);

  if (args.dump_matrix) {
    const PrimeFieldMatrix m = frobenius_layer(ring, 0).matrix;
    rep.add_line("degree-0 Frobenius matrix (" + std::to_string(m.rows()) +
                 "x" + std::to_string(m.cols()) +
                 "), rows/columns in lexicographic basis order:");
    const auto basis = basis_at_degree(ring, 0);
    for (size_t i = 0; i < basis.size(); ++i) {
      std::ostringstream os;
      os << "  basis[" << i << "] = x_" << ring.n() << "^"
         << basis[i].xn_exp << " / (";
      for (int v = 0; v < ring.n(); ++v)
        os << (v ? " " : "") << "x_" << v << "^" << basis[i].denom[size_t(v)];
      os << ")";
      rep.add_line(os.str());
    }
    for (int i = 0; i < m.rows(); ++i) {
      std::ostringstream os;
      os << " ";
      for (int c = 0; c < m.cols(); ++c) os << " " << m.at(i, c);
      rep.add_line(os.str());
    }
  }

  if (!args.profile_out.empty()) {
    save_profile(prof, args.profile_out);
    rep.add_line("profile written to " + args.profile_out);
  }
  rep.entries.push_back(profile_to_json(prof));
  return rep;
}

Report cmd_sweep(const SweepArgs& args, const CommonOptions& common) {
  (void)common;
  Report rep;
  rep.command = "sweep";
  rep.inputs = {{"d", args.d},
                {"n", args.n},
                {"p_lo", args.p_lo},
                {"p_hi", args.p_hi}};
  std::vector<int64_t> primes;
  for (int64_t p = std::max<int64_t>(2, args.p_lo); p <= args.p_hi; ++p)
    if (PrimeField::is_prime(p)) primes.push_back(p);
  if (primes.empty()) throw std::invalid_argument("no primes in the range");

  struct Row {
    int64_t p;
    std::string mod, verdict, b, segre;
  };
  auto run_one = [&](int64_t p) {
    Row row;
    row.p = p;
    row.mod = std::to_string(p % args.d);
    const HypersurfaceRing ring = HypersurfaceRing::fermat(p, args.n, args.d);
    ClassifyOptions opts;
    opts.window_lo = 0;  // degree-0 data is all the sweep needs
    const RingProfile prof = classify_ring(ring, opts);
    row.verdict = status_string(degree_verdict(ring, 0, 2));
    row.b = b_string(b_invariant(prof.index(prof.dim).nilsupport));
    const RingProfile plane = polynomial_ring_profile(p, 2);
    const RingProfile t = segre_profile(prof, plane).profile;
    row.segre = t.fdepth().to_string() +
                (t.weakly_f_nilpotent() == TriBool::True ? " (wfn)" : "");
    return row;
  };
  std::vector<std::future<Row>> jobs;
  for (int64_t p : primes)
    jobs.push_back(std::async(std::launch::async, run_one, p));

  rep.add_line("p | p mod d | degree-0 verdict | b_n | F-depth(R # P^1)");
  for (auto& job : jobs) {
    const Row row = job.get();
    rep.add_line(std::to_string(row.p) + " | " + row.mod + " | " + row.verdict +
                 " | " + row.b + " | " + row.segre);
    json entry;
    entry["p"] = row.p;
    entry["p_mod_d"] = std::stoll(row.mod);
    entry["degree0"] = row.verdict;
    entry["b"] = row.b;
    entry["segre_fdepth"] = row.segre;
    rep.entries.push_back(entry);
  }
  return rep;
}

Report cmd_segre(const SegreArgs& args, const CommonOptions& common) {
  (void)common;
  Report rep;
  rep.command = "segre";
  rep.inputs = {{"R", args.profile_r}, {"S", args.profile_s}};
  const RingProfile R = load_profile(args.profile_r);
  const RingProfile S = load_profile(args.profile_s);
  const SegreResult res = segre_profile(R, S);

  rep.add_line("T = " + res.profile.name + ", dim = " +
               std::to_string(res.profile.dim));
  for (const auto& kr : res.kunneth) {
    if (kr.summands.empty()) continue;
    std::ostringstream os;
    os << "H^" << kr.j << "(T) =";
    for (size_t i = 0; i < kr.summands.size(); ++i) {
      os << (i ? " + " : " ") << kr.summands[i].to_string(kr.j);
    }
    os << "  [nilsupport: "
       << res.profile.index(kr.j).nilsupport.to_string() << "]";
    rep.add_line(os.str());
  }
  for (const BoundReport& r : segre_fdepth_bounds(R, S)) {
    rep.add_line(r.quantity + " = " + r.value_string());
    rep.add_entry(r);
  }
  for (const BoundReport& r : segre_gfdepth(R, S)) {
    rep.add_line(r.quantity + " = " + r.value_string());
    rep.add_entry(r);
  }
  rep.add_line("b(T) = " + res.profile.b_index().to_string());

  if (!args.profile_out.empty()) {
    save_profile(res.profile, args.profile_out);
    rep.add_line("profile written to " + args.profile_out);
  }
  return rep;
}

Report cmd_veronese(const VeroneseArgs& args, const CommonOptions& common) {
  (void)common;
  Report rep;
  rep.command = "veronese";
  rep.inputs = {{"R", args.profile}, {"v", args.v}};
  const RingProfile R = load_profile(args.profile);
  const RingProfile V = veronese_profile(R, args.v);
  rep.add_line("R^(" + std::to_string(args.v) + "), dim = " +
               std::to_string(V.dim));
  for (int j = 0; j <= V.dim; ++j) {
    if (V.index(j).is_zero) continue;
    rep.add_line("H^" + std::to_string(j) + ": nilsupport " +
                 V.index(j).nilsupport.to_string() + ", b = " +
                 b_string(b_invariant(V.index(j).nilsupport)));
  }
  add_profile_lines(rep, V);
  const auto eq = veronese_fnilpotence_equivalence(R, {args.v});
  rep.add_entry(eq.report);
  if (!eq.per_index.empty())
    rep.add_line("F-nilpotent (Veronese equivalence): " +
                 to_string(eq.per_index[0].second));
  if (!args.profile_out.empty()) {
    save_profile(V, args.profile_out);
    rep.add_line("profile written to " + args.profile_out);
  }
  return rep;
}

Report cmd_glue(const GlueArgs& args, const CommonOptions& common) {
  (void)common;
  Report rep;
  rep.command = "glue";
  rep.inputs = {{"d", args.d},       {"dim1", args.dim1}, {"dim2", args.dim2},
                {"dimb", args.dimb}, {"A", args.profile_a},
                {"B", args.profile_b}, {"AB", args.profile_ab},
                {"generalized", args.generalized}};
  const RingProfile A = load_profile(args.profile_a);
  const RingProfile B = load_profile(args.profile_b);
  const RingProfile AB = load_profile(args.profile_ab);

  const DepthInterval f1 = args.generalized ? A.gfdepth() : A.fdepth();
  const DepthInterval f2 = args.generalized ? B.gfdepth() : B.fdepth();
  const DepthInterval fb = args.generalized ? AB.gfdepth() : AB.fdepth();
  const BoundReport depth = glue_fdepth(f1, f2, fb, args.generalized);
  rep.add_line(depth.quantity + " " + depth.value_string() + "  (" +
               depth.formula + ")");
  rep.add_entry(depth);

  const TriBool v1 = args.generalized ? A.generalized_weakly_f_nilpotent()
                                      : A.weakly_f_nilpotent();
  const TriBool v2 = args.generalized ? B.generalized_weakly_f_nilpotent()
                                      : B.weakly_f_nilpotent();
  const TriBool vb = args.generalized ? AB.generalized_weakly_f_nilpotent()
                                      : AB.weakly_f_nilpotent();
  const BoundReport wfn =
      glue_wfn_check(args.d, args.dim1, args.dim2, args.dimb, v1, v2, vb,
                     A.equidimensional && B.equidimensional &&
                         AB.equidimensional,
                     args.generalized);
  rep.add_line(wfn.quantity + ": " + to_string(wfn.verdict));
  rep.add_entry(wfn);

  if (args.dimb == args.d || args.dimb == args.d - 1) {
    std::vector<HslValue> hq, hmax;
    for (int j = 0; j <= args.d; ++j) {
      hq.push_back(profile_hsl_at(AB, j));
      hmax.push_back(hsl_max(profile_hsl_at(A, j), profile_hsl_at(B, j)));
    }
    std::optional<HslValue> top;
    if (args.hsl_top) top = HslValue::exact(*args.hsl_top);
    if (args.dimb == args.d || top) {
      const GlueHslResult hsl = glue_hsl_fte(hq, hmax, args.d, args.dimb, top);
      rep.add_line(hsl.fte.quantity + " " + hsl.fte.value_string());
      rep.add_entry(hsl.fte);
    } else {
      rep.add_line(
          "Fte bound skipped: dim R/b = d - 1 needs the top HSL number of "
          "the glued ring (--hsl-top)");
      rep.mark_unknown();
    }
  }
  return rep;
}

Report cmd_diagonal(const DiagonalArgs& args, const CommonOptions& common) {
  (void)common;
  Report rep;
  rep.command = "diagonal";
  rep.inputs = {{"R", args.profile_r}, {"S", args.profile_s},
                {"g", args.spec.g},    {"h", args.spec.h},
                {"d1", args.spec.d1},  {"d2", args.spec.d2},
                {"dims_match", args.dims_match}};
  const RingProfile R = load_profile(args.profile_r);
  const RingProfile S = load_profile(args.profile_s);
  const RingProfile T = diagonal_profile(R, S, args.spec);
  rep.add_line("T_Delta = " + T.name + ", dim = " + std::to_string(T.dim));

  for (const BoundReport& r : diagonal_fdepth(R, S, args.spec)) {
    rep.add_line(r.quantity + " = " + r.value_string());
    for (const std::string& n : r.notes) rep.add_line("  note: " + n);
    rep.add_entry(r);
  }
  rep.add_line("T_Delta weakly F-nilpotent: " +
               to_string(T.weakly_f_nilpotent()));

  bool conditions_hold = false;
  const DepthInterval fR = R.fdepth(), fS = S.fdepth();
  if (args.spec.g >= 1 && args.spec.h >= 1 && fR.exact() && fS.exact()) {
    const int64_t f_T = fR.lo + fS.lo - 1;
    auto b_at = [&](const RingProfile& P) {
      if (f_T > P.dim || P.index(int(f_T)).is_zero)
        return BInvariant{BInvariant::Kind::NegInfinity, 0, std::nullopt};
      return b_invariant(P.index(int(f_T)).nilsupport);
    };
    const DiagonalQuotientResult cond =
        diagonal_quotient_conditions(b_at(R), b_at(S), args.spec);
    conditions_hold = cond.all_hold;
    rep.add_line("numerical conditions at f_T = " + std::to_string(f_T) +
                 ": " + cond.report.formula);
    rep.add_entry(cond.report);
  }

  std::vector<BoundReport> quotient =
      diagonal_hypersurface_bounds(T, args.dims_match);
  // The numerical conditions can settle the quotient verdict even when the
  // one-way transfer from T_Delta cannot.
  const bool conditions_conclude = conditions_hold && args.dims_match &&
                                   T.fdepth().lo >= int64_t(T.dim) - 1;
  for (BoundReport& r : quotient) {
    if (conditions_conclude &&
        (r.rule == "diagonal-quotient-wfn" ||
         r.rule == "diagonal-quotient-gwfn") &&
        r.verdict != TriBool::True) {
      r.verdict = TriBool::True;
      r.notes = {"F-depth((T/fT)_Delta) >= F-depth(T_Delta) >= dim "
                 "(T/fT)_Delta via the numerical conditions"};
    }
    if (conditions_conclude && r.rule == "diagonal-quotient-fdepth")
      r.value = std::max(r.value, T.fdepth().lo);
    rep.add_line(r.quantity + " = " +
                 (r.kind == BoundReport::Kind::Verdict ? to_string(r.verdict)
                                                       : r.value_string()));
    rep.add_entry(r);
  }
  if (conditions_conclude)
    rep.add_line("(T/fT)_Delta weakly F-nilpotent: true");
  return rep;
}

Report cmd_fte(const FteArgs& args, const CommonOptions& common) {
  Report rep;
  rep.command = "fte";
  rep.inputs = {{"mode", args.mode}};

  auto require_known_inputs = [&](const std::vector<HslValue>& hs) {
    for (const HslValue& h : hs) {
      if (!h.is_known())
        throw std::invalid_argument(
            "an HSL input is unknown; assert it in the profile first");
      if (!h.is_exact() && !common.allow_upper_bounds)
        throw std::invalid_argument(
            "an HSL input is only an upper bound; pass --allow-upper-bounds "
            "to use it");
    }
  };

  if (args.mode == "weak" || args.mode == "generalized") {
    std::vector<HslValue> h;
    for (int64_t x : args.h) h.push_back(HslValue::exact(x));
    const BoundReport r =
        args.mode == "weak"
            ? fte_bound_weak_report(h, args.d)
            : fte_bound_generalized_report(h, args.d, args.N, args.p);
    rep.add_line(r.quantity + " " + r.value_string() + "  (" + r.formula + ")");
    rep.add_entry(r);
    return rep;
  }
  if (args.mode == "segre") {
    if (args.profiles.size() != 2)
      throw std::invalid_argument("segre mode needs two profile paths");
    const RingProfile R = load_profile(args.profiles[0]);
    const RingProfile S = load_profile(args.profiles[1]);
    std::vector<HslValue> check;
    for (int j = 0; j <= R.dim; ++j) check.push_back(profile_hsl_at(R, j));
    for (int j = 0; j <= S.dim; ++j) check.push_back(profile_hsl_at(S, j));
    require_known_inputs(check);
    const SegreFteResult r = segre_fte_bound(R, S);
    rep.add_line(r.refined.quantity + " (refined) " +
                 r.refined.value_string());
    rep.add_line(r.coarse.quantity + " (coarse) " + r.coarse.value_string());
    rep.add_entry(r.refined);
    rep.add_entry(r.coarse);
    return rep;
  }
  if (args.mode == "veronese") {
    if (args.profiles.size() != 1)
      throw std::invalid_argument("veronese mode needs one profile path");
    const RingProfile R = load_profile(args.profiles[0]);
    std::vector<HslValue> check;
    for (int j = 0; j <= R.dim; ++j) check.push_back(profile_hsl_at(R, j));
    require_known_inputs(check);
    const BoundReport r =
        veronese_fte_bound(R, args.veronese_generalized, args.N);
    rep.add_line(r.quantity + " " + r.value_string());
    rep.add_entry(r);
    return rep;
  }
  if (args.mode == "glue") {
    const GlueArgs& g = args.glue;
    const RingProfile A = load_profile(g.profile_a);
    const RingProfile B = load_profile(g.profile_b);
    const RingProfile AB = load_profile(g.profile_ab);
    std::vector<HslValue> hq, hmax;
    for (int j = 0; j <= g.d; ++j) {
      hq.push_back(profile_hsl_at(AB, j));
      hmax.push_back(hsl_max(profile_hsl_at(A, j), profile_hsl_at(B, j)));
    }
    require_known_inputs(hq);
    require_known_inputs(hmax);
    std::optional<HslValue> top;
    if (g.hsl_top) top = HslValue::exact(*g.hsl_top);
    const GlueHslResult r = glue_hsl_fte(hq, hmax, g.d, g.dimb, top);
    rep.add_line(r.fte.quantity + " " + r.fte.value_string());
    rep.add_entry(r.fte);
    return rep;
  }
  throw std::invalid_argument("unknown fte mode: " + args.mode);
}

int finish(const Report& report, const CommonOptions& common) {
  if (common.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.render_text();
  if (!common.out_path.empty()) {
    std::ofstream out(common.out_path);
    if (!out) throw std::runtime_error("cannot write " + common.out_path);
    out << report.to_json().dump(2) << "\n";
  }
  if (common.strict && report.exit_status != 0)
    std::cerr << "strict mode: some verdicts stayed unknown\n";
  return report.exit_status;
}

}  // namespace fnil::cli
