#include "flipforge/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "flipforge/util.hpp"

namespace flipforge {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

[[noreturn]] void parse_fail(const std::string& name, long long line,
                             const std::string& what) {
    throw InputError(name + ": " + what + " at line " + std::to_string(line));
}

}  // namespace

ColouredGraph read_edge_list(std::istream& in, const std::string& name) {
    std::string line;
    long long lineno = 0;
    long long n = -1, k = -1;
    std::vector<Edge> edges;
    std::map<std::pair<int, int>, long long> seen;  // edge -> first line
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        if (lineno == 1) {
            std::string extra;
            if (!(ss >> n >> k) || (ss >> extra) || n < 0 || k < 1)
                parse_fail(name, lineno, "malformed header");
            continue;
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        long long u, v, c;
        std::string extra;
        if (!(ss >> u >> v >> c) || (ss >> extra))
            parse_fail(name, lineno, "malformed edge");
        if (u == v) parse_fail(name, lineno, "self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            parse_fail(name, lineno, "vertex out of range");
        if (c < 1 || c > k) parse_fail(name, lineno, "colour out of range");
        if (u > v) std::swap(u, v);
        auto key = std::make_pair(static_cast<int>(u), static_cast<int>(v));
        if (!seen.emplace(key, lineno).second)
            parse_fail(name, lineno, "duplicate edge");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(c)});
    }
    if (n < 0) parse_fail(name, 1, "malformed header");
    return ColouredGraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

void write_edge_list(const ColouredGraph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.colour_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << e.colour << '\n';
}

ColouredGraph read_json_graph(std::istream& in, const std::string& name) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(name + ": invalid JSON: " + ex.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("colours") ||
        !doc.contains("edges"))
        throw InputError(name + ": JSON graph needs vertices, colours and edges fields");
    std::vector<Edge> edges;
    long long entry = 0;
    for (const auto& e : doc["edges"]) {
        ++entry;
        if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("colour"))
            throw InputError(name + ": malformed edge entry " + std::to_string(entry));
        edges.push_back({e["u"].get<int>(), e["v"].get<int>(), e["colour"].get<int>()});
    }
    return ColouredGraph(doc["vertices"].get<int>(), doc["colours"].get<int>(),
                         std::move(edges));
}

void write_json_graph(const ColouredGraph& g, std::ostream& out) {
    out << "{\"colours\":" << g.colour_count()
        << ",\"edges\":[";
    bool first = true;
    for (const auto& e : g.edges()) {
        if (!first) out << ',';
        first = false;
        out << "{\"colour\":" << e.colour << ",\"u\":" << e.u << ",\"v\":" << e.v << '}';
    }
    out << "],\"vertices\":" << g.vertex_count() << "}\n";
}

ColouredGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    if (has_suffix(path, ".json")) return read_json_graph(in, path);
    return read_edge_list(in, path);
}

void save_graph(const ColouredGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");
    if (has_suffix(path, ".json"))
        write_json_graph(g, out);
    else
        write_edge_list(g, out);
    if (!out) throw InputError(path + ": write failed");
}

std::string dot_colour_name(int colour) {
    switch (colour) {
        case 1: return "blue";
        case 2: return "red";
        case 3: return "green";
        default: break;
    }
    static const char* palette[] = {"orange",  "purple", "cyan",   "brown",
                                    "magenta", "olive",  "navy",   "teal"};
    return palette[(colour - 4) % 8];
}

void write_dot(const ColouredGraph& g, std::ostream& out) {
    out << "graph flipforge {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges())
        out << "  " << e.u << " -- " << e.v << " [color=\""
            << dot_colour_name(e.colour) << "\"];\n";
    out << "}\n";
}

void export_dot(const ColouredGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");
    write_dot(g, out);
}

}  // namespace flipforge
