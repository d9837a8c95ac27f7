#include "fnil/construction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fnil/combinatorics.hpp"

namespace fnil {

namespace {

int64_t sat_add(int64_t a, int64_t b) {
  if (a >= kPosInf || b >= kPosInf) return kPosInf;
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  return a + b;
}

std::string fmt_ext(int64_t v) {
  if (v >= kPosInf) return "inf";
  if (v <= kNegInf) return "-inf";
  return std::to_string(v);
}

// certified lower bound carried by a b(R) bracket
int64_t b_index_lower(const BIndex& b) {
  switch (b.kind) {
    case BIndex::Kind::Infinity:
      return kPosInf;
    case BIndex::Kind::Exact:
    case BIndex::Kind::Range:
      return b.lo;
  }
  return 0;
}

bool b_index_certainly_finite(const BIndex& b) {
  return b.kind == BIndex::Kind::Exact ||
         (b.kind == BIndex::Kind::Range && b.hi < kPosInf);
}

}  // namespace

std::string BoundReport::value_string() const {
  switch (kind) {
    case Kind::Exact:
      return fmt_ext(value);
    case Kind::LowerBound:
      return ">= " + fmt_ext(value);
    case Kind::UpperBound:
      return "<= " + fmt_ext(value);
    case Kind::Interval:
      return "[" + fmt_ext(value) + ", " + fmt_ext(value_hi) + "]";
    case Kind::Verdict:
      return to_string(verdict);
    case Kind::Unknown:
      return "unknown";
  }
  return "?";
}

int64_t min_e_pow_at_least(int64_t p, int64_t threshold) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  int64_t e = 0, power = 1;
  while (power < threshold) {
    power = power * p;
    ++e;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Fte arithmetic
// ---------------------------------------------------------------------------

int64_t fte_bound_weak(const std::vector<int64_t>& h, int64_t d) {
  if (int64_t(h.size()) != d + 1)
    throw std::invalid_argument("need one HSL number per index 0..d");
  int64_t acc = 0;
  for (int64_t j = 0; j <= d; ++j) acc += binomial_int64(d, j) * h[size_t(j)];
  return acc;
}

int64_t fte_bound_generalized(const std::vector<int64_t>& h, int64_t d,
                              int64_t N, int64_t p) {
  if (N < 0) throw std::invalid_argument("annihilator exponent must be >= 0");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const int64_t e1 = min_e_pow_at_least(p, (int64_t(1) << (d - 1)) * N);
  return e1 + fte_bound_weak(h, d);
}

BoundReport fte_bound_weak_report(const std::vector<HslValue>& h, int64_t d) {
  BoundReport r;
  r.quantity = "Fte upper bound";
  r.rule = "fte-binomial-sum";
  if (int64_t(h.size()) != d + 1)
    throw std::invalid_argument("need one HSL number per index 0..d");
  bool all_exact = true;
  std::vector<int64_t> values;
  std::ostringstream formula;
  for (int64_t j = 0; j <= d; ++j) {
    const HslValue& x = h[size_t(j)];
    if (!x.is_known()) {
      r.kind = BoundReport::Kind::Unknown;
      r.notes.push_back("HSL number at index " + std::to_string(j) +
                        " is unknown");
      return r;
    }
    all_exact = all_exact && x.is_exact();
    values.push_back(x.value);
    if (j) formula << " + ";
    formula << "C(" << d << "," << j << ")*" << x.value;
  }
  r.value = fte_bound_weak(values, d);
  r.kind = BoundReport::Kind::UpperBound;
  r.formula = formula.str() + " = " + std::to_string(r.value);
  if (!all_exact) r.notes.push_back("some inputs are themselves upper bounds");
  return r;
}

BoundReport fte_bound_generalized_report(const std::vector<HslValue>& h,
                                         int64_t d, int64_t N, int64_t p) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (N < 0) throw std::invalid_argument("annihilator exponent must be >= 0");
  BoundReport r = fte_bound_weak_report(h, d);
  r.rule = "fte-binomial-sum-generalized";
  if (r.kind == BoundReport::Kind::Unknown) return r;
  const int64_t e1 = min_e_pow_at_least(p, (int64_t(1) << (d - 1)) * N);
  r.value += e1;
  r.formula = "e1 = " + std::to_string(e1) + " (p^e >= 2^(d-1) N), total " +
              std::to_string(r.value);
  return r;
}

// ---------------------------------------------------------------------------
// Gluing
// ---------------------------------------------------------------------------

BoundReport glue_fdepth(const DepthInterval& f1, const DepthInterval& f2,
                        const DepthInterval& fb, bool generalized) {
  BoundReport r;
  r.quantity = generalized ? "gF-depth(R)" : "F-depth(R)";
  r.rule = "glue-fdepth-lower";
  const int64_t lower = std::min({f1.lo, f2.lo, sat_add(fb.lo, 1)});
  r.formula = "min{" + fmt_ext(f1.lo) + ", " + fmt_ext(f2.lo) + ", " +
              fmt_ext(fb.lo) + " + 1} = " + fmt_ext(lower);
  const int64_t others = std::min(f1.lo, f2.lo);
  if (sat_add(fb.hi, 1) < others) {
    // strictly smaller intersection depth pins the value
    if (fb.exact()) {
      r.kind = BoundReport::Kind::Exact;
      r.value = sat_add(fb.lo, 1);
      r.rule = "glue-fdepth-sharp";
      r.notes.push_back("intersection depth + 1 falls below both pieces");
      return r;
    }
    r.kind = BoundReport::Kind::Interval;
    r.value = sat_add(fb.lo, 1);
    r.value_hi = sat_add(fb.hi, 1);
    r.rule = "glue-fdepth-sharp";
    return r;
  }
  r.kind = BoundReport::Kind::LowerBound;
  r.value = lower;
  return r;
}

BoundReport glue_wfn_check(int64_t d, int64_t dim1, int64_t dim2, int64_t dimb,
                           TriBool v1, TriBool v2, TriBool vb,
                           bool equidimensional, bool generalized) {
  BoundReport r;
  r.quantity = generalized
                   ? "glued ring certified generalized weakly F-nilpotent"
                   : "glued ring certified weakly F-nilpotent";
  r.rule = generalized ? "glue-gwfn" : "glue-wfn";
  r.kind = BoundReport::Kind::Verdict;
  if (dim1 != d || dim2 != d) {
    r.verdict = TriBool::False;
    r.notes.push_back("dimension hypothesis fails: both pieces must have dim d");
    return r;
  }
  if (dimb < d - 1) {
    r.verdict = TriBool::False;
    r.notes.push_back("dimension hypothesis fails: dim R/b >= d - 1 required");
    return r;
  }
  if (generalized && !equidimensional) {
    r.verdict = TriBool::False;
    r.notes.push_back("equidimensionality required for the generalized form");
    return r;
  }
  if (v1 == TriBool::True && v2 == TriBool::True && vb == TriBool::True) {
    r.verdict = TriBool::True;
    return r;
  }
  r.verdict = (v1 == TriBool::False || v2 == TriBool::False ||
               vb == TriBool::False)
                  ? TriBool::False
                  : TriBool::Unknown;
  if (r.verdict == TriBool::False)
    r.notes.push_back("an input verdict is false; no certification");
  else
    r.notes.push_back("an input verdict is unknown");
  return r;
}

GlueHslResult glue_hsl_fte(const std::vector<HslValue>& h_quotient,
                           const std::vector<HslValue>& h_max, int64_t d,
                           int64_t dim_b,
                           const std::optional<HslValue>& hsl_top) {
  if (int64_t(h_quotient.size()) != d + 1 || int64_t(h_max.size()) != d + 1)
    throw std::invalid_argument("HSL lists must have length d + 1");
  if (dim_b != d && dim_b != d - 1)
    throw std::invalid_argument("dim R/b must be d or d - 1");
  if (dim_b == d - 1 && !hsl_top.has_value())
    throw std::invalid_argument(
        "the top HSL number of R is required when dim R/b = d - 1");

  GlueHslResult out;
  out.per_index.assign(size_t(d) + 1, HslValue::unknown());
  const int64_t j_limit = dim_b == d ? d : d - 1;
  auto quotient_at = [&](int64_t j) {
    return j < 0 ? HslValue::exact(0) : h_quotient[size_t(j)];
  };
  for (int64_t j = 0; j <= j_limit; ++j) {
    out.per_index[size_t(j)] =
        hsl_ses_bound(quotient_at(j - 1), h_max[size_t(j)], false);
    out.valid_indices.push_back(int(j));
  }

  BoundReport fte;
  fte.quantity = "Fte upper bound for the glued ring";
  fte.rule = dim_b == d ? "glue-fte-full-intersection" : "glue-fte-codim-one";
  bool known = true;
  int64_t total = 0;
  for (int64_t j = 1; j <= j_limit; ++j) {
    const HslValue& q = quotient_at(j - 1);
    if (!q.is_known()) known = false;
    else total += binomial_int64(d, j) * q.value;
  }
  for (int64_t j = 0; j <= j_limit; ++j) {
    if (!h_max[size_t(j)].is_known()) known = false;
    else total += binomial_int64(d, j) * h_max[size_t(j)].value;
  }
  if (dim_b == d - 1) {
    if (!hsl_top->is_known()) known = false;
    else total += hsl_top->value;
  }
  if (!known) {
    fte.kind = BoundReport::Kind::Unknown;
    fte.notes.push_back("an HSL input is unknown");
  } else {
    fte.kind = BoundReport::Kind::UpperBound;
    fte.value = total;
  }
  out.fte = fte;
  return out;
}

// ---------------------------------------------------------------------------
// Segre products
// ---------------------------------------------------------------------------

namespace {

void require_segre_inputs(const RingProfile& R, const RingProfile& S) {
  if (R.p != S.p)
    throw std::invalid_argument("Segre factors live over different primes");
  if (!R.depth_ge_2 || !S.depth_ge_2)
    throw std::invalid_argument(
        "Kuenneth decomposition requires depth >= 2 on both factors");
  if (!R.reduced || !S.reduced)
    throw std::invalid_argument(
        "Segre machinery requires reduced factors (injective ring Frobenius)");
}

HslValue factor_summand_hsl(const IndexData& idx, int64_t p) {
  // HSL(H^j # ring) = max of the degree-0 requirement and the escape
  // exponent for the positive part.
  const int64_t escape = f_exp(idx.a(), p);
  return hsl_max(idx.hsl_deg0, HslValue::upper(escape));
}

HslValue mixed_summand_hsl(const IndexData& a, const IndexData& b) {
  const bool a_nil = a.nilsupport.certainly_nilpotent();
  const bool b_nil = b.nilsupport.certainly_nilpotent();
  if (a_nil && b_nil) return hsl_min_upper(a.hsl, b.hsl);
  if (a_nil) return a.hsl.is_known() ? HslValue::upper(a.hsl.value)
                                     : HslValue::unknown();
  if (b_nil) return b.hsl.is_known() ? HslValue::upper(b.hsl.value)
                                     : HslValue::unknown();
  if (a.hsl.is_known() && b.hsl.is_known())
    return HslValue::upper(std::max(a.hsl.value, b.hsl.value));
  return HslValue::unknown();
}

HslValue mixed_summand_hsl_deg0(const IndexData& a, const IndexData& b) {
  const bool a_zero_piece = a.degsupp.is_empty || a.degsupp.hi < 0 || a.degsupp.lo > 0;
  const bool b_zero_piece = b.degsupp.is_empty || b.degsupp.hi < 0 || b.degsupp.lo > 0;
  if (a_zero_piece || b_zero_piece) return HslValue::exact(0);
  if (!a.hsl_deg0.is_known() || !b.hsl_deg0.is_known())
    return HslValue::unknown();
  const int64_t v = std::max(a.hsl_deg0.value, b.hsl_deg0.value);
  if (v == 0 && a.hsl_deg0.is_exact() && b.hsl_deg0.is_exact())
    return HslValue::exact(0);
  return HslValue::upper(v);
}

}  // namespace

std::string KunnethSummand::to_string(int j) const {
  switch (label) {
    case Label::FirstFactor:
      return "H^" + std::to_string(j) + "(R) # S";
    case Label::SecondFactor:
      return "R # H^" + std::to_string(j) + "(S)";
    case Label::Mixed:
      return "H^" + std::to_string(r) + "(R) # H^" + std::to_string(s) + "(S)";
  }
  return "?";
}

SegreResult segre_profile(const RingProfile& R, const RingProfile& S) {
  require_segre_inputs(R, S);
  const int64_t p = R.p;
  const int d_T = R.dim + S.dim - 1;
  const DegreeSupport nonneg = DegreeSupport::interval(0, kPosInf);

  SegreResult out;
  RingProfile& T = out.profile;
  T.name = R.name + " # " + S.name;
  T.p = p;
  T.dim = d_T;
  T.H.resize(size_t(d_T) + 1);

  for (int j = 0; j <= d_T; ++j) {
    KunnethSummandReport report;
    report.j = j;

    if (j <= R.dim && !R.index(j).is_zero) {
      const IndexData& idx = R.index(j);
      DegreeSupport ds = degsupp_intersect(idx.degsupp, nonneg);
      if (!ds.is_empty) {
        KunnethSummand sm;
        sm.label = KunnethSummand::Label::FirstFactor;
        sm.descriptor = restrict_to_degree_zero(idx.nilsupport);
        sm.degsupp = ds;
        sm.hsl = factor_summand_hsl(idx, p);
        sm.dim_g0 = idx.dim_g0;
        report.summands.push_back(std::move(sm));
      }
    }
    if (j <= S.dim && !S.index(j).is_zero) {
      const IndexData& idx = S.index(j);
      DegreeSupport ds = degsupp_intersect(idx.degsupp, nonneg);
      if (!ds.is_empty) {
        KunnethSummand sm;
        sm.label = KunnethSummand::Label::SecondFactor;
        sm.descriptor = restrict_to_degree_zero(idx.nilsupport);
        sm.degsupp = ds;
        sm.hsl = factor_summand_hsl(idx, p);
        sm.dim_g0 = idx.dim_g0;
        report.summands.push_back(std::move(sm));
      }
    }
    for (int r = 0; r <= std::min(j + 1, R.dim); ++r) {
      const int s = j + 1 - r;
      if (s < 0 || s > S.dim) continue;
      if (R.index(r).is_zero || S.index(s).is_zero) continue;
      DegreeSupport ds =
          degsupp_intersect(R.index(r).degsupp, S.index(s).degsupp);
      if (ds.is_empty) continue;
      KunnethSummand sm;
      sm.label = KunnethSummand::Label::Mixed;
      sm.r = r;
      sm.s = s;
      sm.descriptor =
          nilsupp_intersect(R.index(r).nilsupport, S.index(s).nilsupport);
      sm.degsupp = ds;
      sm.hsl = mixed_summand_hsl(R.index(r), S.index(s));
      if (R.index(r).dim_g0 && S.index(s).dim_g0)
        sm.dim_g0 = *R.index(r).dim_g0 * *S.index(s).dim_g0;
      report.summands.push_back(std::move(sm));
    }

    IndexData& t_idx = T.H[size_t(j)];
    if (report.summands.empty()) {
      t_idx.is_zero = true;
      t_idx.nilsupport = NilSupportDescriptor::empty(p);
    } else {
      t_idx.is_zero = false;
      // degree-support hull of the summands; the top end is exact
      int64_t lo = kPosInf, hi = kNegInf;
      NilSupportDescriptor nil = NilSupportDescriptor::empty(p);
      HslValue hsl = HslValue::exact(0);
      HslValue hsl0 = HslValue::exact(0);
      std::optional<int64_t> g0 = 0;
      for (const KunnethSummand& sm : report.summands) {
        lo = std::min(lo, sm.degsupp.lo);
        hi = std::max(hi, sm.degsupp.hi);
        nil = nilsupp_union(nil, sm.descriptor);
        hsl = hsl_max(hsl, sm.hsl);
        HslValue sm0;
        switch (sm.label) {
          case KunnethSummand::Label::FirstFactor:
            sm0 = R.index(j).hsl_deg0;
            break;
          case KunnethSummand::Label::SecondFactor:
            sm0 = S.index(j).hsl_deg0;
            break;
          case KunnethSummand::Label::Mixed:
            sm0 = mixed_summand_hsl_deg0(R.index(sm.r), S.index(sm.s));
            break;
        }
        hsl0 = hsl_max(hsl0, sm0);
        if (g0 && sm.dim_g0)
          g0 = *g0 + *sm.dim_g0;
        else
          g0 = std::nullopt;
      }
      t_idx.degsupp = DegreeSupport::interval(lo, hi);
      t_idx.nilsupport = nil;
      t_idx.hsl = hsl;
      t_idx.hsl_deg0 = hsl0;
      t_idx.dim_g0 = g0;
    }
    out.kunneth.push_back(std::move(report));
  }

  T.cm = true;
  for (int j = 0; j < d_T; ++j) T.cm = T.cm && T.H[size_t(j)].is_zero;
  T.depth_ge_2 = T.H[0].is_zero && (d_T < 1 || T.H[1].is_zero);
  T.equidimensional = R.equidimensional && S.equidimensional;
  T.reduced = true;
  T.validate();
  return out;
}

std::vector<BoundReport> segre_fdepth_bounds(const RingProfile& R,
                                             const RingProfile& S) {
  SegreResult segre = segre_profile(R, S);
  const DepthInterval fR = R.fdepth(), fS = S.fdepth();
  const BIndex bR = R.b_index(), bS = S.b_index();
  const int64_t f_lo = sat_add(sat_add(fR.lo, fS.lo), -1);
  const int64_t theorem_lower =
      std::min({b_index_lower(bR), b_index_lower(bS), f_lo});
  const DepthInterval certified = segre.profile.fdepth();
  const int64_t lower = std::max(theorem_lower, certified.lo);
  const int64_t upper = certified.hi;

  BoundReport main;
  main.quantity = "F-depth(T)";
  main.rule = "segre-fdepth";
  main.formula = "min{b(R) = " + bR.to_string() + ", b(S) = " + bS.to_string() +
                 ", f = " + fmt_ext(f_lo) + "} and the per-index certificates";
  if (lower >= upper) {
    main.kind = BoundReport::Kind::Exact;
    main.value = upper;
  } else {
    main.kind = BoundReport::Kind::Interval;
    main.value = lower;
    main.value_hi = upper;
  }
  const bool equality_clause =
      bR.kind == BIndex::Kind::Exact && fR.exact() && bR.lo == fR.lo &&
      bS.kind == BIndex::Kind::Exact && fS.exact() && bS.lo == fS.lo;
  if (equality_clause) {
    main.notes.push_back(
        "equality hypothesis holds: b(R) = F-depth R and b(S) = F-depth S");
    if (main.kind == BoundReport::Kind::Exact && main.value != f_lo)
      main.notes.push_back(
          "degree-zero certificate pins F-depth T = " + fmt_ext(main.value) +
          ", below F-depth R + F-depth S - 1 = " + fmt_ext(f_lo));
  }

  BoundReport wfn;
  wfn.quantity = "T weakly F-nilpotent";
  wfn.rule = "segre-wfn";
  wfn.kind = BoundReport::Kind::Verdict;
  wfn.verdict = segre.profile.weakly_f_nilpotent();
  if (R.weakly_f_nilpotent() == TriBool::True &&
      S.weakly_f_nilpotent() == TriBool::True) {
    if (bR.kind == BIndex::Kind::Infinity && bS.kind == BIndex::Kind::Infinity) {
      wfn.verdict = TriBool::True;
      wfn.notes.push_back("b(R) = b(S) = infinity, hence b(T) = infinity");
    } else if (b_index_certainly_finite(bR) || b_index_certainly_finite(bS)) {
      wfn.verdict = TriBool::False;
      wfn.notes.push_back("a factor has finite b, T cannot be weakly F-nilpotent");
    }
  }
  return {main, wfn};
}

std::vector<BoundReport> segre_gfdepth(const RingProfile& R,
                                       const RingProfile& S) {
  SegreResult segre = segre_profile(R, S);
  const DepthInterval gR = R.gfdepth(), gS = S.gfdepth();
  const int64_t sum_lower = sat_add(sat_add(gR.lo, gS.lo), -1);
  const DepthInterval certified = segre.profile.gfdepth();
  const int64_t lower = std::max(sum_lower, certified.lo);
  int64_t upper = certified.hi;

  BoundReport main;
  main.quantity = "gF-depth(T)";
  main.rule = "segre-gfdepth";
  main.formula = "gF-depth R + gF-depth S - 1 = " + fmt_ext(sum_lower);
  // equality when the critical nil-supports share a nonzero degree
  if (gR.exact() && gS.exact() && gR.lo <= R.dim && gS.lo <= S.dim &&
      !R.index(int(gR.lo)).is_zero && !S.index(int(gS.lo)).is_zero) {
    const NilSupportDescriptor crossing = nilsupp_intersect(
        R.index(int(gR.lo)).nilsupport, S.index(int(gS.lo)).nilsupport);
    if (crossing.certainly_not_generalized()) {
      upper = std::min(upper, sum_lower);
      main.notes.push_back(
          "the critical nil-supports intersect outside degree zero");
    }
  }
  if (lower >= upper) {
    main.kind = BoundReport::Kind::Exact;
    main.value = std::min(lower, upper);
  } else {
    main.kind = BoundReport::Kind::Interval;
    main.value = lower;
    main.value_hi = upper;
  }

  BoundReport gwfn;
  gwfn.quantity = "T generalized weakly F-nilpotent";
  gwfn.rule = "segre-gwfn";
  gwfn.kind = BoundReport::Kind::Verdict;
  gwfn.verdict = segre.profile.generalized_weakly_f_nilpotent();
  if (R.generalized_weakly_f_nilpotent() == TriBool::True &&
      S.generalized_weakly_f_nilpotent() == TriBool::True) {
    gwfn.verdict = TriBool::True;
    gwfn.notes.push_back("preserved from both factors");
  }
  return {main, gwfn};
}

namespace {

std::vector<HslValue> kunneth_hsl_bounds(const RingProfile& R,
                                         const RingProfile& S) {
  SegreResult segre = segre_profile(R, S);
  std::vector<HslValue> out;
  for (const auto& rep : segre.kunneth) {
    HslValue h = HslValue::exact(0);
    for (const auto& sm : rep.summands) h = hsl_max(h, sm.hsl);
    out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<HslValue> segre_hsl_bounds(const RingProfile& R,
                                       const RingProfile& S) {
  if (R.weakly_f_nilpotent() != TriBool::True ||
      S.weakly_f_nilpotent() != TriBool::True)
    throw std::invalid_argument(
        "per-index HSL bounds require both factors weakly F-nilpotent");
  return kunneth_hsl_bounds(R, S);
}

SegreFteResult segre_fte_bound(const RingProfile& R, const RingProfile& S) {
  if (R.weakly_f_nilpotent() != TriBool::True ||
      S.weakly_f_nilpotent() != TriBool::True)
    throw std::invalid_argument("Fte bound requires weakly F-nilpotent factors");
  if (R.b_index().kind != BIndex::Kind::Infinity ||
      S.b_index().kind != BIndex::Kind::Infinity)
    throw std::invalid_argument("Fte bound requires b(R) = b(S) = infinity");
  const int64_t d_T = R.dim + S.dim - 1;
  SegreFteResult out;
  out.refined = fte_bound_weak_report(segre_hsl_bounds(R, S), d_T);
  out.refined.quantity = "Fte* upper bound for T";
  out.refined.rule = "segre-fte-refined";

  BoundReport coarse;
  coarse.quantity = "Fte* upper bound for T";
  coarse.rule = "segre-fte-coarse";
  HslValue hR = HslValue::exact(0), hS = HslValue::exact(0);
  for (int j = 0; j <= R.dim; ++j) hR = hsl_max(hR, R.index(j).hsl);
  for (int j = 0; j <= S.dim; ++j) hS = hsl_max(hS, S.index(j).hsl);
  if (hR.is_known() && hS.is_known()) {
    coarse.kind = BoundReport::Kind::UpperBound;
    coarse.value = (int64_t(1) << d_T) * std::max(hR.value, hS.value);
    coarse.formula = "2^" + std::to_string(d_T) + " * " +
                     std::to_string(std::max(hR.value, hS.value));
  } else {
    coarse.kind = BoundReport::Kind::Unknown;
    coarse.notes.push_back("a factor HSL number is unknown");
  }
  out.coarse = coarse;
  return out;
}

BoundReport segre_gwfn_fte_bound(const RingProfile& R, const RingProfile& S,
                                 int64_t N) {
  if (R.generalized_weakly_f_nilpotent() != TriBool::True ||
      S.generalized_weakly_f_nilpotent() != TriBool::True)
    throw std::invalid_argument(
        "bound requires generalized weakly F-nilpotent factors");
  if (N < 0) throw std::invalid_argument("annihilator exponent must be >= 0");
  const int64_t d_T = R.dim + S.dim - 1;
  const int64_t e1 =
      min_e_pow_at_least(R.p, (N + 1) * (int64_t(1) << (d_T - 1)));
  BoundReport r = fte_bound_weak_report(kunneth_hsl_bounds(R, S), d_T);
  r.quantity = "Fte* upper bound for T";
  r.rule = "segre-fte-gwfn";
  if (r.kind == BoundReport::Kind::Unknown) return r;
  r.value += e1;
  r.formula = "e1 = " + std::to_string(e1) +
              " (p^e >= (N+1) 2^(d_T - 1)), total " + std::to_string(r.value);
  return r;
}

BoundReport segre_length_deg0(const RingProfile& R, const RingProfile& S,
                              int j) {
  require_segre_inputs(R, S);
  BoundReport r;
  r.quantity = "length of the degree-0 non-nilpotent quotient of H^" +
               std::to_string(j) + "(T)";
  r.rule = "segre-length-deg0";
  int64_t total = 0;
  std::ostringstream formula;
  auto g_of = [](const RingProfile& P, int idx) -> std::optional<int64_t> {
    if (idx > P.dim) return 0;
    if (P.index(idx).is_zero) return 0;
    return P.index(idx).dim_g0;
  };
  const auto gR = g_of(R, j), gS = g_of(S, j);
  if (!gR || !gS) {
    r.kind = BoundReport::Kind::Unknown;
    r.notes.push_back("a degree-0 quotient dimension is missing");
    return r;
  }
  total = *gR + *gS;
  formula << *gR << " + " << *gS;
  for (int rr = 0; rr <= std::min(j + 1, R.dim); ++rr) {
    const int ss = j + 1 - rr;
    if (ss < 0 || ss > S.dim) continue;
    if (R.index(rr).is_zero || S.index(ss).is_zero) continue;
    if (degsupp_intersect(R.index(rr).degsupp, S.index(ss).degsupp).is_empty)
      continue;
    const NilSupportDescriptor pair =
        nilsupp_intersect(R.index(rr).nilsupport, S.index(ss).nilsupport);
    if (pair.certainly_nilpotent()) continue;  // contributes nothing
    if (!pair.certainly_generalized()) {
      r.kind = BoundReport::Kind::Unknown;
      r.notes.push_back(
          "mixed summand (" + std::to_string(rr) + "," + std::to_string(ss) +
          ") is not certified to concentrate in degree zero");
      return r;
    }
    const auto gr = g_of(R, rr), gs = g_of(S, ss);
    if (!gr || !gs) {
      r.kind = BoundReport::Kind::Unknown;
      r.notes.push_back("a degree-0 quotient dimension is missing");
      return r;
    }
    total += *gr * *gs;
    formula << " + " << *gr << "*" << *gs;
  }
  r.kind = BoundReport::Kind::Exact;
  r.value = total;
  r.formula = formula.str() + " = " + std::to_string(total);
  return r;
}

// ---------------------------------------------------------------------------
// Veronese subrings
// ---------------------------------------------------------------------------

RingProfile veronese_profile(const RingProfile& R, int64_t v) {
  if (v < 1) throw std::invalid_argument("Veronese index must be >= 1");
  if (v == 1) return R;
  RingProfile out = R;
  out.name = R.name + "^(" + std::to_string(v) + ")";
  for (int j = 0; j <= R.dim; ++j) {
    IndexData& idx = out.H[size_t(j)];
    if (idx.is_zero) continue;
    // degree support: degrees t with v*t in the old support
    const DegreeSupport& ds = idx.degsupp;
    const int64_t lo = ds.lo <= kNegInf ? kNegInf : ceil_div(ds.lo, v);
    const int64_t hi = ds.hi >= kPosInf ? kPosInf : floor_div(ds.hi, v);
    if (lo > hi) {
      idx = IndexData{};
      idx.nilsupport = NilSupportDescriptor::empty(R.p);
      continue;
    }
    idx.degsupp = DegreeSupport::interval(lo, hi);
    idx.nilsupport = veronese_restrict(idx.nilsupport, v);
    // HSL numbers can only drop; degree-0 data is copied verbatim.
    if (idx.hsl.is_exact() && idx.hsl.value > 0)
      idx.hsl = HslValue::upper(idx.hsl.value);
  }
  out.validate();
  return out;
}

VeroneseEquivalenceResult veronese_fnilpotence_equivalence(
    const RingProfile& R, const std::vector<int64_t>& v_list) {
  VeroneseEquivalenceResult out;
  out.report.quantity = "F-nilpotence of the Veronese subrings";
  out.report.rule = "veronese-fnilpotence-equivalence";
  out.report.kind = BoundReport::Kind::Verdict;
  const bool punc = R.punctured_f_rational.value_or(false) ||
                    R.punctured_f_nilpotent.value_or(false);
  if (R.weakly_f_nilpotent() != TriBool::True || !punc) {
    out.report.verdict = TriBool::Unknown;
    out.report.notes.push_back(
        "hypothesis not established: weakly F-nilpotent and F-nilpotent on "
        "the punctured spectrum");
    for (int64_t v : v_list) out.per_index.emplace_back(v, TriBool::Unknown);
    return out;
  }
  const BIndex b = R.b_index();
  TriBool verdict = TriBool::Unknown;
  if (b.kind == BIndex::Kind::Infinity) verdict = TriBool::True;
  else if (b_index_certainly_finite(b)) verdict = TriBool::False;
  out.report.verdict = verdict;
  out.report.formula = "b(R) = " + b.to_string();
  out.report.notes.push_back(
      "one verdict propagates to every Veronese subring");
  for (int64_t v : v_list) out.per_index.emplace_back(v, verdict);
  return out;
}

BoundReport veronese_fte_bound(const RingProfile& R, bool generalized,
                               int64_t N) {
  if (!generalized && R.weakly_f_nilpotent() != TriBool::True)
    throw std::invalid_argument("bound requires a weakly F-nilpotent ring");
  if (generalized &&
      R.generalized_weakly_f_nilpotent() != TriBool::True)
    throw std::invalid_argument(
        "bound requires a generalized weakly F-nilpotent ring");
  if (R.dim < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<HslValue> h;
  for (int j = 0; j <= R.dim; ++j) h.push_back(R.index(j).hsl);
  BoundReport r = fte_bound_weak_report(h, R.dim);
  r.quantity = "Fte* upper bound for the Veronese subring";
  r.rule = generalized ? "veronese-fte-generalized" : "veronese-fte";
  if (r.kind == BoundReport::Kind::Unknown || !generalized) return r;
  const int64_t e1 =
      min_e_pow_at_least(R.p, N * (int64_t(1) << (R.dim - 1)));
  r.value += e1;
  r.formula += "; e1 = " + std::to_string(e1) + " (p^e >= N 2^(d-1))";
  return r;
}

// ---------------------------------------------------------------------------
// Diagonal subalgebras
// ---------------------------------------------------------------------------

RingProfile diagonal_profile(const RingProfile& R, const RingProfile& S,
                             const DiagonalSpec& spec) {
  if (spec.g < 0 || spec.h < 0 || (spec.g == 0 && spec.h == 0))
    throw std::invalid_argument("Delta = (g, h) must be nonzero and nonnegative");
  if (spec.g == 0) return veronese_profile(S, spec.h);
  if (spec.h == 0) return veronese_profile(R, spec.g);
  return segre_profile(veronese_profile(R, spec.g),
                       veronese_profile(S, spec.h))
      .profile;
}

std::vector<BoundReport> diagonal_fdepth(const RingProfile& R,
                                         const RingProfile& S,
                                         const DiagonalSpec& spec) {
  std::vector<BoundReport> reports;
  const RingProfile T = diagonal_profile(R, S, spec);
  if (spec.g == 0 || spec.h == 0) {
    BoundReport r;
    r.quantity = "F-depth(T_Delta)";
    r.rule = "veronese-fdepth";
    const DepthInterval f = T.fdepth();
    r.kind = f.exact() ? BoundReport::Kind::Exact : BoundReport::Kind::Interval;
    r.value = f.lo;
    r.value_hi = f.hi;
    r.notes.push_back("Delta degenerates to a single Veronese subring");
    reports.push_back(r);
    return reports;
  }

  const DepthInterval fR = R.fdepth(), fS = S.fdepth();
  const int64_t f_T = sat_add(sat_add(fR.lo, fS.lo), -1);
  const DepthInterval certified = T.fdepth();

  BoundReport main;
  main.quantity = "F-depth(T_Delta)";
  main.rule = "diagonal-fdepth";
  if (certified.exact()) {
    main.kind = BoundReport::Kind::Exact;
    main.value = certified.lo;
  } else {
    main.kind = BoundReport::Kind::Interval;
    main.value = certified.lo;
    main.value_hi = certified.hi;
  }
  main.formula = "f_T = F-depth R + F-depth S - 1 = " + fmt_ext(f_T);

  // (a) the additive lower bound claim
  BoundReport a;
  a.quantity = "F-depth(T_Delta) clause (a)";
  a.rule = "diagonal-fdepth-additive";
  a.kind = BoundReport::Kind::LowerBound;
  a.value = f_T;
  if (certified.hi < f_T)
    a.notes.push_back(
        "additive bound exceeds the certified value " + certified.to_string() +
        "; a factor has b below f_T, which caps the F-depth (bound superseded "
        "by the per-index certificates)");
  reports.push_back(main);
  reports.push_back(a);

  // (b) generalized nilpotence of the critical module
  if (fR.exact() && fS.exact()) {
    const bool bR_gen = R.index(int(fR.lo)).nilsupport.certainly_generalized();
    const bool bS_gen = S.index(int(fS.lo)).nilsupport.certainly_generalized();
    if (bR_gen || bS_gen) {
      BoundReport b;
      b.quantity = "H^{f_T}(T_Delta) generalized nilpotent";
      b.rule = "diagonal-fdepth-generalized-critical";
      b.kind = BoundReport::Kind::Verdict;
      b.verdict = TriBool::True;
      reports.push_back(b);
    }
  }

  // (c) exactness from b(R) = F-depth R and b(S) = F-depth S
  const BIndex bR = R.b_index(), bS = S.b_index();
  if (bR.kind == BIndex::Kind::Exact && fR.exact() && bR.lo == fR.lo &&
      bS.kind == BIndex::Kind::Exact && fS.exact() && bS.lo == fS.lo) {
    BoundReport c;
    c.quantity = "F-depth(T_Delta) clause (c)";
    c.rule = "diagonal-fdepth-degree-zero";
    c.kind = BoundReport::Kind::Exact;
    c.value = certified.exact() ? certified.lo : std::min(fR.lo, fS.lo);
    c.notes.push_back("b(R) = F-depth R and b(S) = F-depth S");
    if (c.value != f_T)
      c.notes.push_back(
          "the degree-zero certificate pins the value below f_T = " +
          fmt_ext(f_T));
    reports.push_back(c);
  }

  // (d) strict inequality via vanishing at index f_T
  if (fR.exact() && fS.exact()) {
    auto zero_at = [](const RingProfile& P, int64_t j) {
      if (j > P.dim) return Membership::Absent;
      if (P.index(int(j)).is_zero) return Membership::Absent;
      return P.index(int(j)).nilsupport.zero_membership();
    };
    const Membership mR = zero_at(R, f_T), mS = zero_at(S, f_T);
    const bool bR_gen = R.index(int(fR.lo)).nilsupport.certainly_generalized();
    const bool bS_gen = S.index(int(fS.lo)).nilsupport.certainly_generalized();
    const bool bfS_nonzero = zero_at(S, fS.lo) == Membership::Absent;
    const bool bfR_nonzero = zero_at(R, fR.lo) == Membership::Absent;
    if (mR == Membership::Absent && mS == Membership::Absent &&
        ((bR_gen && bfS_nonzero) || (bS_gen && bfR_nonzero))) {
      BoundReport d;
      d.quantity = "F-depth(T_Delta) clause (d)";
      d.rule = "diagonal-fdepth-strict";
      d.kind = BoundReport::Kind::Verdict;
      d.verdict = certified.lo > f_T ? TriBool::True : TriBool::Unknown;
      d.notes.push_back("H^{f_T}(T_Delta) is nilpotent");
      if (certified.lo <= f_T)
        d.notes.push_back(
            "strictness requires the lower bound f_T, which is not certified "
            "for these inputs");
      reports.push_back(d);
    }
  }
  return reports;
}

std::vector<BoundReport> diagonal_hypersurface_bounds(
    const RingProfile& t_delta, bool dims_match) {
  std::vector<BoundReport> reports;
  const DepthInterval f = t_delta.fdepth();
  const DepthInterval g = t_delta.gfdepth();

  BoundReport rf;
  rf.quantity = "F-depth((T/fT)_Delta)";
  rf.rule = "diagonal-quotient-fdepth";
  rf.kind = BoundReport::Kind::LowerBound;
  rf.value = sat_add(f.lo, -1);
  rf.formula = "F-depth(T_Delta) - 1 = " + fmt_ext(rf.value);
  reports.push_back(rf);

  BoundReport rg;
  rg.quantity = "gF-depth((T/fT)_Delta)";
  rg.rule = "diagonal-quotient-gfdepth";
  rg.kind = BoundReport::Kind::LowerBound;
  rg.value = sat_add(g.lo, -1);
  reports.push_back(rg);

  // The verdict transfers one way only: a quotient of a weakly F-nilpotent
  // T_Delta of one dimension less is weakly F-nilpotent, but nothing follows
  // when T_Delta is not.
  BoundReport wfn;
  wfn.quantity = "(T/fT)_Delta weakly F-nilpotent";
  wfn.rule = "diagonal-quotient-wfn";
  wfn.kind = BoundReport::Kind::Verdict;
  if (!dims_match) {
    wfn.verdict = TriBool::Unknown;
    wfn.notes.push_back("requires dim (T/fT)_Delta = dim T_Delta - 1");
  } else if (t_delta.weakly_f_nilpotent() == TriBool::True) {
    wfn.verdict = TriBool::True;
  } else {
    wfn.verdict = TriBool::Unknown;
    wfn.notes.push_back("T_Delta is not certified weakly F-nilpotent");
  }
  reports.push_back(wfn);

  BoundReport gwfn;
  gwfn.quantity = "(T/fT)_Delta generalized weakly F-nilpotent";
  gwfn.rule = "diagonal-quotient-gwfn";
  gwfn.kind = BoundReport::Kind::Verdict;
  if (dims_match && t_delta.generalized_weakly_f_nilpotent() == TriBool::True)
    gwfn.verdict = TriBool::True;
  else {
    gwfn.verdict = TriBool::Unknown;
    gwfn.notes.push_back(dims_match
                             ? "T_Delta is not certified generalized weakly "
                               "F-nilpotent"
                             : "requires dim (T/fT)_Delta = dim T_Delta - 1");
  }
  reports.push_back(gwfn);
  return reports;
}

DiagonalQuotientResult diagonal_quotient_conditions(const BInvariant& b_ft_R,
                                                    const BInvariant& b_ft_S,
                                                    const DiagonalSpec& spec) {
  if (spec.g < 1 || spec.h < 1)
    throw std::invalid_argument("the numerical conditions require g, h >= 1");
  DiagonalQuotientResult out;

  auto bound_value = [](const BInvariant& b) -> std::optional<int64_t> {
    switch (b.kind) {
      case BInvariant::Kind::NegInfinity:
        return kNegInf;
      case BInvariant::Kind::Exact:
      case BInvariant::Kind::UpperBound:
        return b.value;  // an upper bound suffices for the ceiling test
    }
    return std::nullopt;
  };

  const auto vR = bound_value(b_ft_R);
  const auto vS = bound_value(b_ft_S);

  // e/h >= ceil((b + d)/g), with the non-integrality escape
  auto ratio_bullet = [&](std::optional<int64_t> b, int64_t num_deg,
                          int64_t other_deg, int64_t div_num,
                          int64_t div_other) {
    if (other_deg % div_other != 0) return true;  // ratio not an integer
    if (!b) return false;
    if (*b <= kNegInf) return true;  // empty constraint
    const int64_t c = ceil_div(*b + num_deg, div_num);
    return other_deg >= c * div_other;
  };
  out.bullet_ratio_first = ratio_bullet(vR, spec.d1, spec.d2, spec.g, spec.h);
  out.bullet_ratio_second = ratio_bullet(vS, spec.d2, spec.d1, spec.h, spec.g);
  const int64_t det = spec.d1 * spec.h - spec.d2 * spec.g;
  out.bullet_determinant =
      det != 0 || spec.d2 % spec.h != 0 || spec.d1 % spec.g != 0;
  out.all_hold = out.bullet_ratio_first && out.bullet_ratio_second &&
                 out.bullet_determinant;

  BoundReport& r = out.report;
  r.quantity = "F-depth((T/fT)_Delta) >= F-depth(T_Delta)";
  r.rule = "diagonal-quotient-conditions";
  r.kind = BoundReport::Kind::Verdict;
  r.verdict = out.all_hold ? TriBool::True : TriBool::Unknown;
  std::ostringstream f;
  f << "ratio conditions: " << (out.bullet_ratio_first ? "yes" : "no") << ", "
    << (out.bullet_ratio_second ? "yes" : "no")
    << "; determinant/integrality: " << (out.bullet_determinant ? "yes" : "no");
  r.formula = f.str();
  if (!out.all_hold)
    r.notes.push_back("a numerical condition fails; no improvement certified");
  return out;
}

}  // namespace fnil
