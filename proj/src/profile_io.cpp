#include "fnil/profile_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fnil {

namespace {

using json = nlohmann::ordered_json;

json ext_to_json(int64_t v) {
  if (v >= kPosInf) return "inf";
  if (v <= kNegInf) return "-inf";
  return v;
}

int64_t ext_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kPosInf;
    if (s == "-inf") return kNegInf;
    throw std::invalid_argument("bad extended integer: " + s);
  }
  return j.get<int64_t>();
}

json degsupp_to_json(const DegreeSupport& d) {
  json j;
  if (d.is_empty) {
    j["empty"] = true;
    return j;
  }
  j["lo"] = ext_to_json(d.lo);
  j["hi"] = ext_to_json(d.hi);
  return j;
}

DegreeSupport degsupp_from_json(const json& j) {
  if (j.contains("empty") && j["empty"].get<bool>()) return DegreeSupport::none();
  return DegreeSupport::interval(ext_from_json(j.at("lo")),
                                 ext_from_json(j.at("hi")));
}

std::string tribool_str(TriBool t) { return to_string(t); }

}  // namespace

json hsl_to_json(const HslValue& v) {
  json j;
  switch (v.kind) {
    case HslValue::Kind::Exact:
      j["kind"] = "exact";
      j["value"] = v.value;
      break;
    case HslValue::Kind::UpperBound:
      j["kind"] = "upper_bound";
      j["value"] = v.value;
      break;
    case HslValue::Kind::Unknown:
      j["kind"] = "unknown";
      break;
  }
  return j;
}

HslValue hsl_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact") return HslValue::exact(j.at("value").get<int64_t>());
  if (kind == "upper_bound")
    return HslValue::upper(j.at("value").get<int64_t>());
  if (kind == "unknown") return HslValue::unknown();
  throw std::invalid_argument("bad HSL kind: " + kind);
}

json nilsupport_to_json(const NilSupportDescriptor& d) {
  json j;
  switch (d.kind) {
    case NilKind::Empty:
      j["kind"] = "empty";
      break;
    case NilKind::ZeroOnly:
      j["kind"] = "zero_only";
      break;
    case NilKind::Window: {
      j["kind"] = "window";
      j["lo"] = d.window_lo;
      j["hi"] = d.window_hi;
      j["members"] = json::array();
      for (int64_t t : d.members) j["members"].push_back(t);
      j["undecided"] = json::array();
      for (int64_t t : d.unknown) j["undecided"].push_back(t);
      j["tail_known"] = d.tail_known;
      break;
    }
    case NilKind::LowerInterval:
      j["kind"] = "lower_interval";
      j["sup"] = d.sup_bound;
      j["sup_exact"] = d.sup_exact;
      j["full"] = d.full;
      break;
  }
  return j;
}

NilSupportDescriptor nilsupport_from_json(const json& j, int64_t p) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "empty") return NilSupportDescriptor::empty(p);
  if (kind == "zero_only") return NilSupportDescriptor::zero_only(p);
  if (kind == "window") {
    std::set<int64_t> members, undecided;
    for (const auto& t : j.at("members")) members.insert(t.get<int64_t>());
    for (const auto& t : j.at("undecided")) undecided.insert(t.get<int64_t>());
    return NilSupportDescriptor::window(p, j.at("lo").get<int64_t>(),
                                        j.at("hi").get<int64_t>(),
                                        std::move(members),
                                        std::move(undecided),
                                        j.at("tail_known").get<bool>());
  }
  if (kind == "lower_interval")
    return NilSupportDescriptor::lower_interval(p, j.at("sup").get<int64_t>(),
                                                j.at("sup_exact").get<bool>(),
                                                j.at("full").get<bool>());
  throw std::invalid_argument("bad nil-support kind: " + kind);
}

json profile_to_json(const RingProfile& profile) {
  json j;
  j["schema_version"] = kProfileSchemaVersion;
  j["name"] = profile.name;
  j["p"] = profile.p;
  j["dim"] = profile.dim;

  json flags;
  flags["cm"] = profile.cm;
  flags["depth_ge_2"] = profile.depth_ge_2;
  flags["equidimensional"] = profile.equidimensional;
  flags["reduced"] = profile.reduced;
  flags["punctured_spectrum_f_rational"] =
      profile.punctured_f_rational ? json(*profile.punctured_f_rational)
                                   : json(nullptr);
  flags["punctured_spectrum_f_nilpotent"] =
      profile.punctured_f_nilpotent ? json(*profile.punctured_f_nilpotent)
                                    : json(nullptr);
  j["flags"] = flags;

  json indices = json::array();
  for (int idx = 0; idx <= profile.dim; ++idx) {
    const IndexData& d = profile.index(idx);
    json ij;
    ij["j"] = idx;
    ij["is_zero"] = d.is_zero;
    ij["asserted"] = d.asserted;
    if (!d.is_zero) {
      ij["degsupp"] = degsupp_to_json(d.degsupp);
      ij["nilsupport"] = nilsupport_to_json(d.nilsupport);
      ij["hsl"] = hsl_to_json(d.hsl);
      ij["hsl_deg0"] = hsl_to_json(d.hsl_deg0);
      ij["dim_g0"] = d.dim_g0 ? json(*d.dim_g0) : json(nullptr);
    }
    indices.push_back(ij);
  }
  j["indices"] = indices;

  json derived;
  const DepthInterval f = profile.fdepth(), g = profile.gfdepth();
  derived["fdepth"] = {{"lo", ext_to_json(f.lo)}, {"hi", ext_to_json(f.hi)}};
  derived["gfdepth"] = {{"lo", ext_to_json(g.lo)}, {"hi", ext_to_json(g.hi)}};
  derived["b_index"] = profile.b_index().to_string();
  derived["weakly_f_nilpotent"] = tribool_str(profile.weakly_f_nilpotent());
  derived["generalized_weakly_f_nilpotent"] =
      tribool_str(profile.generalized_weakly_f_nilpotent());
  derived["f_nilpotent"] = tribool_str(profile.f_nilpotent());
  j["derived"] = derived;
  return j;
}

RingProfile profile_from_json(const json& j) {
  if (!j.contains("schema_version") ||
      j["schema_version"].get<int>() != kProfileSchemaVersion)
    throw std::invalid_argument("unsupported profile schema version");
  RingProfile p;
  p.name = j.at("name").get<std::string>();
  p.p = j.at("p").get<int64_t>();
  p.dim = j.at("dim").get<int>();
  const json& flags = j.at("flags");
  p.cm = flags.at("cm").get<bool>();
  p.depth_ge_2 = flags.at("depth_ge_2").get<bool>();
  p.equidimensional = flags.at("equidimensional").get<bool>();
  p.reduced = flags.at("reduced").get<bool>();
  if (!flags.at("punctured_spectrum_f_rational").is_null())
    p.punctured_f_rational =
        flags.at("punctured_spectrum_f_rational").get<bool>();
  if (!flags.at("punctured_spectrum_f_nilpotent").is_null())
    p.punctured_f_nilpotent =
        flags.at("punctured_spectrum_f_nilpotent").get<bool>();

  p.H.resize(size_t(p.dim) + 1);
  for (auto& idx : p.H) idx.nilsupport = NilSupportDescriptor::empty(p.p);
  for (const json& ij : j.at("indices")) {
    const int idx = ij.at("j").get<int>();
    IndexData& d = p.index(idx);
    d.is_zero = ij.at("is_zero").get<bool>();
    d.asserted = ij.at("asserted").get<bool>();
    if (!d.is_zero) {
      d.degsupp = degsupp_from_json(ij.at("degsupp"));
      d.nilsupport = nilsupport_from_json(ij.at("nilsupport"), p.p);
      d.hsl = hsl_from_json(ij.at("hsl"));
      d.hsl_deg0 = hsl_from_json(ij.at("hsl_deg0"));
      if (!ij.at("dim_g0").is_null()) d.dim_g0 = ij.at("dim_g0").get<int64_t>();
    }
  }
  p.validate();
  return p;
}

void save_profile(const RingProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << profile_to_json(profile).dump(2) << "\n";
}

RingProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile: " + path);
  json j;
  in >> j;
  return profile_from_json(j);
}

json bound_report_to_json(const BoundReport& r) {
  json j;
  j["quantity"] = r.quantity;
  switch (r.kind) {
    case BoundReport::Kind::Exact:
      j["kind"] = "exact";
      j["value"] = ext_to_json(r.value);
      break;
    case BoundReport::Kind::LowerBound:
      j["kind"] = "lower_bound";
      j["value"] = ext_to_json(r.value);
      break;
    case BoundReport::Kind::UpperBound:
      j["kind"] = "upper_bound";
      j["value"] = ext_to_json(r.value);
      break;
    case BoundReport::Kind::Interval:
      j["kind"] = "interval";
      j["value"] = ext_to_json(r.value);
      j["value_hi"] = ext_to_json(r.value_hi);
      break;
    case BoundReport::Kind::Verdict:
      j["kind"] = "verdict";
      j["verdict"] = to_string(r.verdict);
      break;
    case BoundReport::Kind::Unknown:
      j["kind"] = "unknown";
      break;
  }
  j["rule"] = r.rule;
  if (!r.formula.empty()) j["formula"] = r.formula;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace fnil
