#include "flipforge/serialize.hpp"

#include <map>

namespace flipforge {

nlohmann::json report_to_json(const FlipReport& report) {
    const StatsMatrix& m = report.stats;
    // profile = degrees row followed by the t count rows
    std::map<std::vector<long long>, std::pair<int, long long>> profiles;
    for (int v = 0; v < m.vertices; ++v) {
        std::vector<long long> key;
        key.reserve(static_cast<std::size_t>(m.colours) * (m.t + 1));
        for (int j = 1; j <= m.colours; ++j) key.push_back(m.degree(v, j));
        for (int s = 1; s <= m.t; ++s)
            for (int j = 1; j <= m.colours; ++j) key.push_back(m.count(v, s, j));
        auto [it, inserted] = profiles.emplace(std::move(key), std::make_pair(v, 1ll));
        if (!inserted) ++it->second.second;
    }
    std::map<int, nlohmann::json> ordered;
    for (const auto& [key, info] : profiles) {
        nlohmann::json entry;
        entry["vertex"] = info.first;
        entry["multiplicity"] = info.second;
        entry["degrees"] =
            std::vector<long long>(key.begin(), key.begin() + m.colours);
        nlohmann::json counts = nlohmann::json::array();
        for (int s = 0; s < m.t; ++s)
            counts.push_back(std::vector<long long>(
                key.begin() + m.colours + static_cast<std::size_t>(s) * m.colours,
                key.begin() + m.colours + static_cast<std::size_t>(s + 1) * m.colours));
        entry["counts"] = counts;
        ordered.emplace(info.first, std::move(entry));
    }
    nlohmann::json profile_array = nlohmann::json::array();
    for (auto& [vertex, entry] : ordered) profile_array.push_back(std::move(entry));

    nlohmann::json doc{{"mode", to_string(report.mode)},
                       {"t", report.t},
                       {"colours", report.colours},
                       {"vertices", report.vertices},
                       {"verdict", report.pass ? "pass" : "fail"},
                       {"colour_regular", report.colour_regular},
                       {"require_colour_regular", report.require_colour_regular},
                       {"global_edge_counts", report.global_edge_counts},
                       {"profiles", profile_array}};
    if (report.colour_regular) doc["degrees"] = report.degrees;
    if (report.first_counterexample) {
        const Counterexample& ce = *report.first_counterexample;
        doc["first_counterexample"] = {{"vertex", ce.vertex},
                                       {"distance", ce.distance},
                                       {"colour_low", ce.colour_low},
                                       {"colour_high", ce.colour_high},
                                       {"kind", ce.kind},
                                       {"value_low", ce.value_low},
                                       {"value_high", ce.value_high}};
    } else {
        doc["first_counterexample"] = nullptr;
    }
    return doc;
}

namespace {
const char* kTriangleNames[6] = {"BBB", "BBR", "BRB", "BRR", "RRB", "RRR"};
}

nlohmann::json census_to_json(const TriangleCensus& census) {
    nlohmann::json per_vertex = nlohmann::json::array();
    for (const auto& row : census.per_vertex) {
        nlohmann::json entry;
        for (int type = 0; type < 6; ++type) entry[kTriangleNames[type]] = row[type];
        per_vertex.push_back(std::move(entry));
    }
    nlohmann::json totals;
    for (int type = 0; type < 6; ++type) totals[kTriangleNames[type]] = census.totals[type];
    return nlohmann::json{{"vertices", census.per_vertex.size()},
                          {"per_vertex", per_vertex},
                          {"totals", totals}};
}

nlohmann::json decomposition_to_json(const FactorDecomposition& dec) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& factor : dec.factors) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : factor) edges.push_back(nlohmann::json::array({u, v}));
        factors.push_back(std::move(edges));
    }
    return nlohmann::json{{"base", dec.base},
                          {"vertices", dec.vertices},
                          {"degrees", dec.degrees},
                          {"factors", factors}};
}

nlohmann::json packing_to_json(const PackingResult& result) {
    return nlohmann::json{{"vertices", result.combined.vertex_count()},
                          {"edges", result.combined.edge_count()},
                          {"sigma", result.sigma},
                          {"switches", result.switches},
                          {"restarts", result.restarts},
                          {"seed", result.seed}};
}

nlohmann::json witness_to_json(const NecessityWitness& witness) {
    return nlohmann::json{{"vertex", witness.vertex},
                          {"open_blue", witness.open_blue},
                          {"open_red", witness.open_red},
                          {"difference", witness.difference},
                          {"bound", witness.bound}};
}

nlohmann::json demo_to_json(const PipelineDemoReport& report) {
    return nlohmann::json{{"b", report.b},
                          {"q", report.q},
                          {"t", report.t},
                          {"seed", report.seed},
                          {"vertices", report.n},
                          {"girth_required", report.girth_required},
                          {"girth_actual", report.girth_actual},
                          {"degree_condition", report.degree_condition},
                          {"girth_condition", report.girth_condition},
                          {"packing_condition", report.packing_condition},
                          {"edge_disjoint", report.edge_disjoint},
                          {"flip_verdict", report.flip_verdict},
                          {"blue_count_bound", report.blue_count_bound},
                          {"blue_min_count", report.blue_min_count},
                          {"red_max_count", report.red_max_count}};
}

}  // namespace flipforge
