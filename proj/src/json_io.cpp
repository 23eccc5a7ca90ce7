#include "fmf/json_io.hpp"

namespace fmf {

namespace {

const json& require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& f = require_field(j, key);
    if (!f.is_number_integer()) throw input_error(std::string("json: field '") + key + "' must be an integer");
    return f.get<int>();
}

SupportLabel support_label_from_string(const std::string& name) {
    if (name == "DiagonalX") return SupportLabel::DiagonalX;
    if (name == "CenterProduct") return SupportLabel::CenterProduct;
    if (name == "Ambient") return SupportLabel::Ambient;
    if (name == "Zero") return SupportLabel::Zero;
    throw input_error("json: unknown support label '" + name + "'");
}

} // namespace

json to_json(const Int& value) { return value.str(); }

Int int_from_json(const json& j) {
    if (!j.is_string()) throw input_error("json: unbounded integers are encoded as decimal strings");
    try {
        return Int(j.get<std::string>());
    } catch (const std::runtime_error&) {
        throw input_error("json: malformed integer string '" + j.get<std::string>() + "'");
    }
}

json to_json(const CohomologyTable& table) {
    json dims = json::object();
    for (const auto& [degree, dim] : table.dims()) dims[std::to_string(degree)] = to_json(dim);
    return json{{"dims", dims}};
}

CohomologyTable cohomology_table_from_json(const json& j) {
    const json& dims = require_field(j, "dims");
    if (!dims.is_object()) throw input_error("json: 'dims' must be an object");
    CohomologyTable table;
    for (const auto& [key, value] : dims.items()) {
        int degree = 0;
        try {
            degree = std::stoi(key);
        } catch (const std::exception&) {
            throw input_error("json: bad degree key '" + key + "'");
        }
        table.add(degree, int_from_json(value));
    }
    return table;
}

json to_json(const SupportLocusTable& table) {
    json entries = json::array();
    for (const auto& [i, dim] : table.entries()) {
        entries.push_back(json{{"i", i}, {"dim", dim ? json(*dim) : json("EMPTY")}});
    }
    return json{{"ambient_dim", table.ambient_dim()}, {"entries", entries}};
}

SupportLocusTable support_locus_table_from_json(const json& j) {
    SupportLocusTable table(int_field(j, "ambient_dim"));
    const json& entries = require_field(j, "entries");
    if (!entries.is_array()) throw input_error("json: 'entries' must be an array");
    for (const json& e : entries) {
        const int i = int_field(e, "i");
        const json& dim = require_field(e, "dim");
        if (dim.is_string()) {
            if (dim.get<std::string>() != "EMPTY")
                throw input_error("json: locus dimension must be an integer or \"EMPTY\"");
            table.set_empty(i);
        } else if (dim.is_number_integer()) {
            table.set_dimension(i, dim.get<int>());
        } else {
            throw input_error("json: locus dimension must be an integer or \"EMPTY\"");
        }
    }
    return table;
}

json to_json(const Contribution& c) {
    json out{{"tor_index", c.tor_index},
             {"push_degree", c.push_degree},
             {"support", support_label_name(c.support)},
             {"rank", c.rank.is_generic() ? json("GENERIC") : to_json(c.rank.value())}};
    out["bundle"] = c.bundle ? json(*c.bundle) : json(nullptr);
    return out;
}

Contribution contribution_from_json(const json& j) {
    const json& rank = require_field(j, "rank");
    Rank r = (rank.is_string() && rank.get<std::string>() == "GENERIC")
                 ? Rank::generic()
                 : Rank::exact(int_from_json(rank));
    std::optional<MultiDegree> bundle;
    if (j.contains("bundle") && !j.at("bundle").is_null()) {
        if (!j.at("bundle").is_array()) throw input_error("json: 'bundle' must be an array");
        bundle = j.at("bundle").get<MultiDegree>();
    }
    return make_contribution(int_field(j, "tor_index"), int_field(j, "push_degree"),
                             support_label_from_string(
                                 require_field(j, "support").get<std::string>()),
                             std::move(r), std::move(bundle));
}

json to_json(const ContributionGrid& grid) {
    json entries = json::array();
    for (const auto& e : grid.entries()) entries.push_back(to_json(e));
    return json{{"dim_target", grid.dim_target()}, {"entries", entries}};
}

ContributionGrid contribution_grid_from_json(const json& j) {
    ContributionGrid grid(int_field(j, "dim_target"));
    const json& entries = require_field(j, "entries");
    if (!entries.is_array()) throw input_error("json: 'entries' must be an array");
    for (const json& e : entries) grid.add(contribution_from_json(e));
    return grid;
}

json to_json(const GridPosition& pos) { return json{{"p", pos.p}, {"q", pos.q}}; }

GridPosition grid_position_from_json(const json& j) {
    return GridPosition{int_field(j, "p"), int_field(j, "q")};
}

json to_json(const Verdict& verdict) {
    json out{{"status", verdict_status_name(verdict.status())}};
    switch (verdict.status()) {
        case Verdict::Status::FullyFaithful: break;
        case Verdict::Status::NotFullyFaithful:
            out["witness"] = json{{"total_degree", verdict.witness_total_degree()},
                                  {"entry", to_json(verdict.witness())}};
            break;
        case Verdict::Status::Indeterminate: {
            json positions = json::array();
            for (const auto& pos : verdict.surviving()) positions.push_back(to_json(pos));
            out["surviving"] = positions;
            break;
        }
    }
    return out;
}

Verdict verdict_from_json(const json& j) {
    const std::string status = require_field(j, "status").get<std::string>();
    if (status == "FullyFaithful") return Verdict::fully_faithful();
    if (status == "NotFullyFaithful") {
        const json& witness = require_field(j, "witness");
        return Verdict::not_fully_faithful(contribution_from_json(require_field(witness, "entry")));
    }
    if (status == "Indeterminate") {
        const json& surviving = require_field(j, "surviving");
        if (!surviving.is_array()) throw input_error("json: 'surviving' must be an array");
        std::vector<GridPosition> positions;
        for (const json& pos : surviving) positions.push_back(grid_position_from_json(pos));
        return Verdict::indeterminate(std::move(positions));
    }
    throw input_error("json: unknown verdict status '" + status + "'");
}

json to_json(const OutputEnvelope& envelope) {
    return json{{"schema", "v1"},
                {"command", envelope.command},
                {"params", envelope.params},
                {"result", envelope.result},
                {"metadata",
                 json{{"char_assumption", "zero"}, {"grading", "target-at-degree-0"}}}};
}

OutputEnvelope envelope_from_json(const json& j) {
    if (require_field(j, "schema").get<std::string>() != "v1")
        throw input_error("json: unsupported schema version");
    const json& metadata = require_field(j, "metadata");
    if (require_field(metadata, "char_assumption").get<std::string>() != "zero" ||
        require_field(metadata, "grading").get<std::string>() != "target-at-degree-0")
        throw input_error("json: unexpected metadata conventions");
    return OutputEnvelope{require_field(j, "command").get<std::string>(),
                          require_field(j, "params"), require_field(j, "result")};
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("json: malformed input");
    return j;
}

} // namespace fmf
