#pragma once

#include <string>

#include "json.hpp"

#include "fnil/construction.hpp"
#include "fnil/profile.hpp"

namespace fnil {

inline constexpr int kProfileSchemaVersion = 1;

// Profiles travel between commands as versioned JSON documents with explicit
// unknown markers and per-field asserted/computed provenance. The derived
// block is written for readers but recomputed on load, so parse(serialize(p))
// restores every stored field.
nlohmann::ordered_json profile_to_json(const RingProfile& profile);
RingProfile profile_from_json(const nlohmann::ordered_json& j);

void save_profile(const RingProfile& profile, const std::string& path);
RingProfile load_profile(const std::string& path);

nlohmann::ordered_json hsl_to_json(const HslValue& v);
HslValue hsl_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json nilsupport_to_json(const NilSupportDescriptor& d);
NilSupportDescriptor nilsupport_from_json(const nlohmann::ordered_json& j,
                                          int64_t p);
nlohmann::ordered_json bound_report_to_json(const BoundReport& r);

}  // namespace fnil
