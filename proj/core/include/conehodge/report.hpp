#pragma once

#include <string>

#include "json.hpp"

#include "conehodge/catalog.hpp"
#include "conehodge/cone.hpp"
#include "conehodge/ktheory.hpp"
#include "conehodge/lcdef.hpp"

namespace conehodge::report {

// Machine JSON is the source of truth for every command; markdown and
// CSV are pure renderings of it. Every results object carries a "kind"
// discriminator the renderers dispatch on.

nlohmann::json to_json(const Obstruction& obstruction);
nlohmann::json to_json(const GradedDimension& graded);
nlohmann::json to_json(const ValidationReport& violations);
nlohmann::json to_json(const CatalogSpec& spec);
nlohmann::json to_json(const ConeDuBoisTable& table);
nlohmann::json to_json(const DepthValue& depth);
nlohmann::json to_json(const DepthVector& depths);
nlohmann::json to_json(const RestrictionTest& test);
nlohmann::json to_json(const LcdefCertificate& cert);
nlohmann::json to_json(const VanishingAudit& audit);
nlohmann::json to_json(const PreDuBoisLevel& level);
nlohmann::json to_json(const KGradedSeries& series);

// {"tool_version", "command", "inputs", "results", "violations"}.
nlohmann::json envelope(const std::string& command, nlohmann::json inputs, nlohmann::json results,
                        nlohmann::json violations);

// Deterministic dump: nlohmann objects iterate in sorted key order; two
// space indent, trailing newline. No timestamps anywhere in the payload.
std::string dump(const nlohmann::json& payload);

std::string render_markdown(const nlohmann::json& envelope);
std::string render_csv(const nlohmann::json& envelope);

}  // namespace conehodge::report
