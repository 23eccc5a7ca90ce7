#pragma once

#include <string>

#include <json.hpp>

#include "fmf/criteria.hpp"
#include "fmf/scenarios.hpp"
#include "fmf/transform.hpp"

// Canonical JSON encodings (schema "v1").  Dimensions and ranks are
// unbounded integers and always serialize as decimal strings so that
// consumers with 53-bit number types cannot corrupt counts.

namespace fmf {

using json = nlohmann::json;

json to_json(const Int& value);
Int int_from_json(const json& j);

json to_json(const CohomologyTable& table);
CohomologyTable cohomology_table_from_json(const json& j);

json to_json(const SupportLocusTable& table);
SupportLocusTable support_locus_table_from_json(const json& j);

json to_json(const Contribution& c);
Contribution contribution_from_json(const json& j);

json to_json(const ContributionGrid& grid);
ContributionGrid contribution_grid_from_json(const json& j);

json to_json(const GridPosition& pos);
GridPosition grid_position_from_json(const json& j);

json to_json(const Verdict& verdict);
Verdict verdict_from_json(const json& j);

/// Self-describing CLI output: a result never travels without the command
/// and parameters that produced it.
struct OutputEnvelope {
    std::string command;
    json params;
    json result;

    friend bool operator==(const OutputEnvelope&, const OutputEnvelope&) = default;
};

json to_json(const OutputEnvelope& envelope);
OutputEnvelope envelope_from_json(const json& j);

/// Parse with input_error on malformed text or schema violations.
json parse_json(const std::string& text);

} // namespace fmf
