#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flipforge/classifier.hpp"
#include "flipforge/constructions.hpp"
#include "flipforge/graph_io.hpp"
#include "flipforge/packing.hpp"
#include "flipforge/serialize.hpp"
#include "flipforge/util.hpp"
#include "flipforge/verification.hpp"

namespace {

// exit codes: 0 success/pass, 1 usage or input error,
// 2 verification fail / infeasible, 3 unknown / not found
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kFail = 2;
constexpr int kUnknown = 3;

void write_json_file(const nlohmann::json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw flipforge::InputError(path + ": cannot open file for writing");
    out << doc.dump(2) << '\n';
}

int emit_construction(const flipforge::Construction& built,
                      const std::string& out_path, const std::string& cert_path) {
    nlohmann::json cert = built.certificate.to_json();
    std::cout << cert.dump(2) << '\n';
    if (!out_path.empty()) flipforge::save_graph(built.graph, out_path);
    if (!cert_path.empty()) write_json_file(cert, cert_path);
    std::cerr << "constructed " << built.certificate.recipe << ": "
              << built.graph.vertex_count() << " vertices, "
              << built.graph.edge_count() << " edges";
    if (!out_path.empty()) std::cerr << " -> " << out_path;
    std::cerr << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flipforge: build and check edge-coloured graphs whose colour "
                 "degrees and neighbourhood colour counts run in opposite orders"};
    app.require_subcommand(1);

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a recipe graph");
    construct->require_subcommand(1);
    std::string out_path, cert_path;
    construct->add_option("--out", out_path, "write the graph here (.el/.json)");
    construct->add_option("--cert", cert_path, "write the certificate JSON here");

    int rb_b = 0, rb_r = 0;
    auto* c_rb = construct->add_subcommand("rb", "two-colour product witness");
    c_rb->add_option("b", rb_b)->required();
    c_rb->add_option("r", rb_r)->required();

    int opt_b = 0, opt_r = 0;
    std::optional<int> opt_x;
    auto* c_opt = construct->add_subcommand("rb-opt", "smaller two-colour witness");
    c_opt->add_option("b", opt_b)->required();
    c_opt->add_option("r", opt_r)->required();
    c_opt->add_option("x", opt_x, "blue matchings on the bipartite side");

    auto* c_weak = construct->add_subcommand("weak23", "18-vertex weak witness");

    std::vector<int> three_args;
    auto* c_three = construct->add_subcommand("three", "three-colour witness");
    c_three->add_option("degrees", three_args, "a1 a2 a3")->expected(3);

    int gap_k = 0;
    std::optional<long long> gap_t;
    auto* c_gap = construct->add_subcommand("gap", "k>=4 colours, scalable top degree");
    c_gap->add_option("k", gap_k)->required();
    c_gap->add_option("t", gap_t, "matching budget (default: proof minimum)");

    long long rc_r = 0, rc_c = 0;
    auto* c_rc = construct->add_subcommand("rc-constant",
                                           "regular graph with constant e(v)");
    c_rc->add_option("r", rc_r)->required();
    c_rc->add_option("c", rc_c)->required();

    int interval_b = 0;
    bool interval_force = false;
    auto* c_interval = construct->add_subcommand("interval", "degrees b..2b-2");
    c_interval->add_option("b", interval_b)->required();
    c_interval->add_flag("--force", interval_force, "build past the executable bound");

    int large_b = 0;
    std::optional<int> large_len;
    std::optional<long long> large_m;
    long long large_cap = flipforge::kDefaultOrderCap;
    auto* c_large = construct->add_subcommand("interval-large",
                                              "constant-graph chain interval");
    c_large->add_option("b", large_b)->required();
    c_large->add_option("length", large_len, "number of colours");
    c_large->add_option("M", large_m, "neighbourhood budget of the first colour");
    c_large->add_option("--cap", large_cap, "order cap");

    int cayley_s = 0;
    std::optional<int> cayley_t;
    auto* c_cayley = construct->add_subcommand("cayley", "binary-space Cayley witness");
    c_cayley->add_option("s", cayley_s)->required();
    c_cayley->add_option("t", cayley_t, "radius (default s-1)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check the flip property of a file");
    std::string verify_path, report_path;
    int verify_t = 1;
    bool verify_weak = false, verify_regular = false;
    verify->add_option("graph", verify_path)->required();
    verify->add_option("--t", verify_t, "neighbourhood radius");
    verify->add_flag("--weak", verify_weak, "allow equal neighbourhood counts");
    verify->add_flag("--require-regular", verify_regular,
                     "demand constant colour degrees");
    verify->add_option("--report", report_path, "write the report JSON here");

    // ---- classify ----
    auto* classify_cmd = app.add_subcommand("classify", "decide a flip sequence");
    std::vector<long long> sequence;
    classify_cmd->add_option("degrees", sequence, "strictly increasing degrees")
        ->required()
        ->expected(-2);

    // ---- census ----
    auto* census_cmd = app.add_subcommand("census", "triangle types of a two-coloured file");
    std::string census_path;
    census_cmd->add_option("graph", census_path)->required();

    // ---- pack ----
    auto* pack_cmd = app.add_subcommand("pack", "edge-disjoint packing of two files");
    std::string pack_g, pack_h, pack_out;
    std::uint64_t pack_seed = 0;
    pack_cmd->add_option("g", pack_g)->required();
    pack_cmd->add_option("h", pack_h)->required();
    pack_cmd->add_option("--seed", pack_seed, "RNG seed");
    pack_cmd->add_option("--out", pack_out, "write the combined graph here");

    // ---- export ----
    auto* export_cmd = app.add_subcommand("export", "convert between formats");
    std::string export_in, export_out;
    export_cmd->add_option("in", export_in)->required();
    export_cmd->add_option("out", export_out, "target path (.el/.json/.dot)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (construct->parsed()) {
            if (c_rb->parsed())
                return emit_construction(flipforge::construct_rb(rb_b, rb_r), out_path,
                                         cert_path);
            if (c_opt->parsed())
                return emit_construction(
                    flipforge::construct_rb_optimized(opt_b, opt_r, opt_x), out_path,
                    cert_path);
            if (c_weak->parsed())
                return emit_construction(flipforge::construct_weak_23(), out_path,
                                         cert_path);
            if (c_three->parsed())
                return emit_construction(
                    flipforge::construct_3flip(three_args[0], three_args[1], three_args[2]),
                    out_path, cert_path);
            if (c_gap->parsed())
                return emit_construction(flipforge::construct_gap(gap_k, gap_t), out_path,
                                         cert_path);
            if (c_rc->parsed())
                return emit_construction(flipforge::construct_rc_constant(rc_r, rc_c),
                                         out_path, cert_path);
            if (c_interval->parsed())
                return emit_construction(
                    flipforge::construct_interval(interval_b, interval_force), out_path,
                    cert_path);
            if (c_large->parsed())
                return emit_construction(
                    flipforge::construct_interval_large(large_b, large_len, large_m,
                                                        large_cap),
                    out_path, cert_path);
            if (c_cayley->parsed())
                return emit_construction(flipforge::construct_cayley_tflip(cayley_s, cayley_t),
                                         out_path, cert_path);
        }
        if (verify->parsed()) {
            flipforge::ColouredGraph g = flipforge::load_graph(verify_path);
            flipforge::FlipReport report =
                verify_weak
                    ? flipforge::verify_flip(g, flipforge::VerifyMode::weak, verify_regular)
                    : flipforge::verify_t_flip(g, verify_t, verify_regular);
            nlohmann::json doc = flipforge::report_to_json(report);
            std::cout << doc.dump(2) << '\n';
            if (!report_path.empty()) write_json_file(doc, report_path);
            std::cerr << report.summary() << '\n';
            return report.pass ? kOk : kFail;
        }
        if (classify_cmd->parsed()) {
            flipforge::SequenceVerdict verdict = flipforge::classify(sequence);
            std::cout << verdict.to_json().dump(2) << '\n';
            std::cerr << "classify: " << flipforge::to_string(verdict.status) << '\n';
            switch (verdict.status) {
                case flipforge::Feasibility::feasible: return kOk;
                case flipforge::Feasibility::infeasible: return kFail;
                default: return kUnknown;
            }
        }
        if (census_cmd->parsed()) {
            flipforge::ColouredGraph g = flipforge::load_graph(census_path);
            flipforge::TriangleCensus census = flipforge::triangle_census(g);
            std::cout << flipforge::census_to_json(census).dump(2) << '\n';
            std::cerr << "census: " << g.vertex_count() << " vertices\n";
            return kOk;
        }
        if (pack_cmd->parsed()) {
            flipforge::ColouredGraph g = flipforge::load_graph(pack_g);
            flipforge::ColouredGraph h = flipforge::load_graph(pack_h);
            flipforge::PackingResult result =
                flipforge::sauer_spencer_pack(g.recoloured(1, 1), h.recoloured(1, 1),
                                              pack_seed);
            std::cout << flipforge::packing_to_json(result).dump(2) << '\n';
            if (!pack_out.empty()) flipforge::save_graph(result.combined, pack_out);
            std::cerr << "pack: " << result.switches << " switches, "
                      << result.restarts << " restarts\n";
            return kOk;
        }
        if (export_cmd->parsed()) {
            flipforge::ColouredGraph g = flipforge::load_graph(export_in);
            if (export_out.size() >= 4 &&
                export_out.compare(export_out.size() - 4, 4, ".dot") == 0)
                flipforge::export_dot(g, export_out);
            else
                flipforge::save_graph(g, export_out);
            std::cerr << "export: " << export_in << " -> " << export_out << '\n';
            return kOk;
        }
    } catch (const flipforge::PackingExhausted& e) {
        std::cerr << "not found: " << e.what() << '\n';
        return kUnknown;
    } catch (const flipforge::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
