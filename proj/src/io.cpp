#include "csg/io.hpp"

#include <sstream>

namespace csg::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int parse_entry(const std::string& token) {
    std::size_t used = 0;
    int value;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw SpecError("matrix text: '" + token + "' is not an integer");
    }
    if (used != token.size()) {
        throw SpecError("matrix text: '" + token + "' is not an integer");
    }
    return value;
}

ordered_json profile_list(const std::vector<Profile>& profiles) {
    ordered_json out = ordered_json::array();
    for (const Profile& p : profiles) {
        out.push_back({p.m1, p.m2});
    }
    return out;
}

ordered_json coalition_list(const std::vector<Coalition>& family) {
    ordered_json out = ordered_json::array();
    for (Coalition s : family) {
        out.push_back(coalition_members(s));
    }
    return out;
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw SpecError(std::string("expected integer field \"") + key + '"');
    }
    return j[key].get<int>();
}

} // namespace

MatrixM parse_matrix_text(std::string_view text) {
    MatrixM rows;
    std::string row_text;
    std::istringstream stream{std::string(text)};
    while (std::getline(stream, row_text, ';')) {
        std::istringstream row_stream(row_text);
        std::string token;
        std::vector<int> entries;
        while (std::getline(row_stream, token, ',')) {
            entries.push_back(parse_entry(token));
        }
        if (entries.size() != 2) {
            throw SpecError("matrix text: each row needs exactly two entries");
        }
        rows.push_back(Profile{entries[0], entries[1]});
    }
    if (rows.empty()) {
        throw SpecError("matrix text: no rows");
    }
    return rows;
}

std::string format_matrix_text(const MatrixM& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << (i ? ";" : "") << rows[i].m1 << ',' << rows[i].m2;
    }
    return out.str();
}

ordered_json spec_to_json(const CompleteGameSpec& spec) {
    ordered_json matrix = ordered_json::array();
    for (const Profile& row : spec.rows) {
        matrix.push_back({row.m1, row.m2});
    }
    return ordered_json{{"n1", spec.n1}, {"n2", spec.n2}, {"matrix", std::move(matrix)}};
}

CompleteGameSpec spec_from_json(const json& j) {
    const int n1 = require_int(j, "n1");
    const int n2 = require_int(j, "n2");
    if (!j.contains("matrix") || !j["matrix"].is_array()) {
        throw SpecError("expected array field \"matrix\"");
    }
    MatrixM rows;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
            !row[1].is_number_integer()) {
            throw SpecError("matrix rows must be [m1, m2] integer pairs");
        }
        rows.push_back(Profile{row[0].get<int>(), row[1].get<int>()});
    }
    return validate_spec(n1, n2, std::move(rows));
}

std::string spec_to_csv(const CompleteGameSpec& spec) {
    std::ostringstream out;
    out << spec.n1 << ',' << spec.n2 << ',' << spec.rows.size() << ",\""
        << format_matrix_text(spec.rows) << '"';
    return out.str();
}

ordered_json game_to_json(const SimpleGame& g) {
    return ordered_json{{"n", g.n}, {"minimal_winning", coalition_list(g.minimal_winning)}};
}

SimpleGame game_from_json(const json& j) {
    const int n = require_int(j, "n");
    if (!j.contains("minimal_winning") || !j["minimal_winning"].is_array()) {
        throw GameError("expected array field \"minimal_winning\"");
    }
    std::vector<Coalition> family;
    for (const auto& coalition : j["minimal_winning"]) {
        if (!coalition.is_array()) {
            throw GameError("coalitions must be arrays of voters");
        }
        std::vector<int> voters;
        for (const auto& v : coalition) {
            if (!v.is_number_integer()) {
                throw GameError("voters must be integers");
            }
            voters.push_back(v.get<int>());
        }
        family.push_back(coalition_from_members(voters, n));
    }
    return make_game(n, std::move(family));
}

ordered_json classification_to_json(const SimpleGame& g, const Classification& c) {
    if (!c.complete) {
        const auto& w = *c.witness;
        return ordered_json{
            {"complete", false},
            {"witness", {{"i", w.i}, {"j", w.j}, {"s", coalition_members(w.s)}}}};
    }
    ordered_json out{{"complete", true},
                     {"types", c.partition.classes.size()},
                     {"classes", c.partition.classes}};
    if (c.partition.classes.size() == 2) {
        out["spec"] = spec_to_json(parametrize(g));
    }
    return out;
}

ordered_json inspect_report(const CompleteGameSpec& spec) {
    const SimpleGame game = realize(spec);
    return ordered_json{{"n1", spec.n1},
                        {"n2", spec.n2},
                        {"matrix", spec_to_json(spec)["matrix"]},
                        {"winning_profiles", profile_list(winning_profiles(spec))},
                        {"min_winning_profiles", profile_list(min_winning_profiles(spec))},
                        {"delta_minimal_rows", spec_to_json(spec)["matrix"]},
                        {"min_winning_coalitions", coalition_list(game.minimal_winning)},
                        {"max_losing_profiles", profile_list(maximal_losing_profiles(spec))},
                        {"null_voters", null_voters(game)}};
}

} // namespace csg::io
