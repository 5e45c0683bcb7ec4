#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blockerlab/colouring.hpp"
#include "blockerlab/graph.hpp"
#include "blockerlab/io.hpp"
#include "blockerlab/oracle.hpp"
#include "blockerlab/parameters.hpp"

namespace blockerlab {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "blockerlab.report/1";

/// Result of one CLI run. Common fields sit at the top level of the JSON;
/// `details` holds the subcommand's own fields and is merged alongside them.
struct RunReport {
    std::string subcommand;
    std::string input_digest;
    std::string answer;  ///< "yes", "no" or "value"
    json witness = json::object();
    std::optional<long long> before;
    std::optional<long long> after;
    double wall_time_ms = 0.0;
    json details = json::object();

    json to_json() const {
        json j = details;
        j["schema"] = kReportSchema;
        j["subcommand"] = subcommand;
        j["input_digest"] = input_digest;
        j["answer"] = answer;
        j["witness"] = witness;
        j["before"] = before ? json(*before) : json(nullptr);
        j["after"] = after ? json(*after) : json(nullptr);
        j["wall_time_ms"] = wall_time_ms;
        return j;
    }

    static RunReport from_json(const json& j) {
        if (!j.is_object()) throw InvalidInput("report is not a JSON object");
        for (const char* key : {"subcommand", "input_digest", "answer", "witness"})
            if (!j.contains(key)) throw InvalidInput(std::string("report lacks field '") + key + "'");
        RunReport r;
        r.subcommand = j.at("subcommand").get<std::string>();
        r.input_digest = j.at("input_digest").get<std::string>();
        r.answer = j.at("answer").get<std::string>();
        r.witness = j.at("witness");
        if (j.contains("before") && !j["before"].is_null()) r.before = j["before"].get<long long>();
        if (j.contains("after") && !j["after"].is_null()) r.after = j["after"].get<long long>();
        if (j.contains("wall_time_ms")) r.wall_time_ms = j["wall_time_ms"].get<double>();
        for (auto it = j.begin(); it != j.end(); ++it) {
            static const std::set<std::string> common{"schema", "subcommand", "input_digest", "answer", "witness", "before", "after", "wall_time_ms"};
            if (!common.count(it.key())) r.details[it.key()] = it.value();
        }
        return r;
    }
};

inline json edges_to_json(const EdgeSet& s) {
    json a = json::array();
    for (const auto& e : s) a.push_back({e.u, e.v});
    return a;
}

inline EdgeSet edges_from_json(const json& a) {
    EdgeSet s;
    for (const auto& p : a) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("edge must be a pair");
        s.push_back(make_edge(p[0].get<int>(), p[1].get<int>()));
    }
    return s;
}

inline json parameter_witness(const ParameterValue& p) {
    json w = json::object();
    switch (p.kind) {
        case Param::alpha:
        case Param::omega:
        case Param::tau: w["vertices"] = p.vertices; break;
        case Param::mu: w["edges"] = edges_to_json(p.edges); break;
        case Param::chi: w["colouring"] = p.colouring.colour; break;
    }
    return w;
}

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string why) {
        ok = false;
        problems.push_back(std::move(why));
    }
};

namespace detail {

inline void verify_blocker(const Graph& g, const RunReport& r, VerifyResult& out) {
    auto op = parse_operation(r.details.at("operation").get<std::string>());
    auto param = parse_param(r.details.at("parameter").get<std::string>());
    const int k = r.details.at("k").get<int>();
    const int d = r.details.at("d").get<int>();
    const int before = parameter_value(g, param);
    if (r.before && *r.before != before) out.fail("claimed value before is " + std::to_string(*r.before) + ", recomputed " + std::to_string(before));
    if (r.answer != "yes") return;
    EdgeSet edges;
    VertexSet vertices;
    if (acts_on_edges(op)) {
        edges = edges_from_json(r.witness.value("edges", json::array()));
        if (!std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return g.has_edge(e); })) {
            out.fail("witness contains a pair that is not an edge of the graph");
            return;
        }
        if (normalized(edges).size() != edges.size()) out.fail("witness repeats an edge");
    } else {
        vertices = r.witness.value("vertices", json::array()).get<VertexSet>();
        if (!std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return g.contains(v); })) {
            out.fail("witness contains a vertex outside the graph");
            return;
        }
        if (normalized(vertices).size() != vertices.size()) out.fail("witness repeats a vertex");
    }
    const auto size = acts_on_edges(op) ? edges.size() : vertices.size();
    if (static_cast<int>(size) > k) out.fail("witness has " + std::to_string(size) + " elements, more than k = " + std::to_string(k));
    const int after = parameter_after(g, op, param, normalized(edges), normalized(vertices));
    if (r.after && *r.after != after) out.fail("claimed value after is " + std::to_string(*r.after) + ", recomputed " + std::to_string(after));
    if (after > before - d)
        out.fail("parameter drops from " + std::to_string(before) + " to " + std::to_string(after) + ", less than d = " + std::to_string(d));
}

inline void verify_mono(const Graph& g, const RunReport& r, VerifyResult& out) {
    const int h = r.details.at("colours").get<int>();
    Colouring c{r.witness.at("colouring").get<std::vector<int>>(), h};
    if (static_cast<int>(c.colour.size()) != g.order()) {
        out.fail("colouring does not cover every vertex");
        return;
    }
    for (int x : c.colour)
        if (x < 0 || x >= h) {
            out.fail("colour " + std::to_string(x) + " outside [0, " + std::to_string(h) + ")");
            return;
        }
    const int count = count_monochromatic_edges(g, c);
    const auto claimed = r.details.at("min_mono_edges").get<long long>();
    if (claimed != count) out.fail("claimed " + std::to_string(claimed) + " monochromatic edges, recounted " + std::to_string(count));
    if (r.details.contains("deleted_edges")) {
        auto deleted = normalized(edges_from_json(r.details["deleted_edges"]));
        if (deleted != monochromatic_edges(g, c)) out.fail("deleted edges differ from the monochromatic edges");
        else if (!is_proper(delete_edges(g, deleted), c)) out.fail("colouring is not proper after deleting the edges");
    }
}

inline void verify_param(const Graph& g, const RunReport& r, VerifyResult& out) {
    ParameterValue p;
    p.kind = parse_param(r.details.at("kind").get<std::string>());
    p.value = r.details.at("value").get<int>();
    p.vertices = r.witness.value("vertices", json::array()).get<VertexSet>();
    p.edges = edges_from_json(r.witness.value("edges", json::array()));
    if (r.witness.contains("colouring")) p.colouring = {r.witness["colouring"].get<std::vector<int>>(), p.value};
    for (Vertex v : p.vertices)
        if (!g.contains(v)) {
            out.fail("witness contains a vertex outside the graph");
            return;
        }
    try {
        if (!validate_parameter(g, p)) out.fail("witness does not certify the value " + std::to_string(p.value));
    } catch (const Error& e) {
        out.fail(std::string("witness rejected: ") + e.what());
    }
    const int actual = compute_parameter(g, p.kind).value;
    if (actual != p.value) out.fail("claimed value " + std::to_string(p.value) + ", recomputed " + std::to_string(actual));
}

}  // namespace detail

/// Re-derives a report's claim from its witness using only graph operations
/// and parameter computation.
inline VerifyResult verify_report(const RunReport& r, const Graph& g) {
    VerifyResult out;
    if (r.input_digest != graph_digest(g)) {
        out.fail("report digest " + r.input_digest + " does not match the graph (" + graph_digest(g) + ")");
        return out;
    }
    try {
        if (r.subcommand == "blocker" || r.subcommand == "oracle")
            detail::verify_blocker(g, r, out);
        else if (r.subcommand == "mono")
            detail::verify_mono(g, r, out);
        else if (r.subcommand == "param")
            detail::verify_param(g, r, out);
        else
            out.fail("reports of subcommand '" + r.subcommand + "' carry no checkable claim");
    } catch (const json::exception& e) {
        out.fail(std::string("malformed report: ") + e.what());
    } catch (const Error& e) {
        out.fail(std::string("report rejected: ") + e.what());
    }
    return out;
}

inline VerifyResult verify_report(const json& j, const Graph& g) { return verify_report(RunReport::from_json(j), g); }

}  // namespace blockerlab
