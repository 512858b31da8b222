// Command-line front end: curve / code / scan / quantum / simulate.
// Machine-first output (JSON or CSV on stdout, exit status 0/1); --table
// switches to a human-readable rendering.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "goppa/agcode.hpp"
#include "goppa/channel.hpp"
#include "goppa/curve.hpp"
#include "goppa/galois.hpp"
#include "goppa/quantum.hpp"

using nlohmann::json;

namespace {

struct CurveSetup {
    std::unique_ptr<goppa::Field> field;
    std::unique_ptr<goppa::Curve> curve;
};

CurveSetup make_curve(int p, int e, int s) {
    CurveSetup out;
    out.field = std::make_unique<goppa::Field>(p, e);
    out.curve = std::make_unique<goppa::Curve>(*out.field, s);
    return out;
}

void print_table(const json& j) {
    size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << it.key()
                  << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << '\n';
    }
}

void emit(const json& payload, bool table) {
    if (table) {
        print_table(payload);
    } else {
        std::cout << payload.dump() << '\n';
    }
}

int emit_error(const json& payload) {
    std::cout << payload.dump() << '\n';
    return 1;
}

goppa::DistanceMode parse_distance_mode(const std::string& name) {
    if (name == "exhaustive") return goppa::DistanceMode::exhaustive;
    if (name == "enumerator") return goppa::DistanceMode::enumerator;
    return goppa::DistanceMode::bound;
}

int run_curve(int p, int e, int s, const std::string& points_path, bool table) {
    CurveSetup cs = make_curve(p, e, s);
    const goppa::Curve& curve = *cs.curve;
    json payload{
        {"q", curve.q()},
        {"s", curve.s()},
        {"genus", curve.genus()},
        {"affine_points", curve.points().size()},
        {"total", curve.points().size() + 1},
        {"maximal", curve.is_maximal()},
    };
    if (!points_path.empty()) {
        std::ofstream os(points_path);
        if (!os) throw std::runtime_error("cannot open " + points_path + " for writing");
        curve.write_points_csv(os);
    }
    emit(payload, table);
    return 0;
}

int run_code(int p, int e, int s, int m, const std::string& distance, const std::string& export_path,
             bool table) {
    CurveSetup cs = make_curve(p, e, s);
    const goppa::Curve& curve = *cs.curve;
    goppa::LinearCode code = goppa::build_code(curve, m);
    goppa::DimensionPrediction pred = goppa::predicted_dimension(curve, m);

    int d = 0;
    bool d_exact = true;
    if (code.dimension() > 0) {
        goppa::Distance dist = goppa::min_distance(code, parse_distance_mode(distance));
        d = dist.d;
        d_exact = dist.exact;
    }
    json payload{
        {"n", code.length()},
        {"k", code.dimension()},
        {"d", d},
        {"d_exact", d_exact},
        {"designed_d", code.length() - m},
        {"self_orthogonal", goppa::is_hermitian_self_orthogonal(code)},
        {"paper_case", pred.paper_case},
        {"agrees_with_paper", pred.agrees_with_paper},
    };
    if (!export_path.empty()) {
        std::ofstream os(export_path);
        if (!os) throw std::runtime_error("cannot open " + export_path + " for writing");
        goppa::write_generator_matrix(os, code);
    }
    emit(payload, table);
    return 0;
}

int run_scan(int p, int e, int s, int m_max, bool table) {
    CurveSetup cs = make_curve(p, e, s);
    std::vector<goppa::ScanRow> rows = goppa::scan_self_orthogonality(*cs.curve, m_max);
    std::string csv = goppa::scan_to_csv(rows);
    if (!table) {
        std::cout << csv;
        return 0;
    }
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) std::cout << std::left << std::setw(16) << cell;
        std::cout << '\n';
    }
    return 0;
}

int run_quantum(int p, int e, int s, int m, bool table) {
    CurveSetup cs = make_curve(p, e, s);
    goppa::LinearCode code = goppa::build_code(*cs.curve, m);
    if (!goppa::is_hermitian_self_orthogonal(code)) {
        return emit_error(json{
            {"error", "code is not Hermitian self-orthogonal"},
            {"gram_nonzero", goppa::hermitian_gram_nonzero_count(code)},
        });
    }
    goppa::QuantumParams params = goppa::derive_params(code);
    goppa::StabilizerMatrix stab = goppa::build_stabilizer(code);
    json payload{
        {"n", params.n},
        {"logical", params.logical},
        {"d_lower", params.d_lower},
        {"exact", params.exact_distance},
        {"q", params.base_field},
        {"source_m", params.source_m},
        {"stabilizer_rows", stab.generator_count()},
        {"stabilizer_rank", stab.rank()},
        {"stabilizer_commutes", goppa::verify_commutation(stab)},
    };
    emit(payload, table);
    return 0;
}

int run_simulate(int p, int e, int s, int m, const std::string& kind, double prob, int64_t trials,
                 uint64_t seed, bool table) {
    CurveSetup cs = make_curve(p, e, s);
    goppa::LinearCode code = goppa::build_code(*cs.curve, m);
    goppa::ChannelSpec spec{kind == "erasure" ? goppa::ChannelKind::erasure : goppa::ChannelKind::symmetric,
                            prob, seed};
    goppa::TransmissionReport report = goppa::wer_experiment(code, spec, trials);

    goppa::Distance dist = code.codebook_size() <= goppa::kEnumerationGuard
                               ? goppa::min_distance(code, goppa::DistanceMode::exhaustive)
                               : goppa::min_distance(code, goppa::DistanceMode::bound);
    json payload{
        {"code", json{{"n", code.length()}, {"k", code.dimension()}, {"d", dist.d}, {"exact", dist.exact}}},
        {"channel", json{{"kind", kind}, {"p", prob}, {"seed", seed}, {"rng", goppa::kRngName}}},
        {"trials", report.trials},
        {"word_errors", report.word_errors},
        {"symbol_errors_injected", report.symbol_errors_injected},
        {"decoder", report.decoder},
    };
    emit(payload, table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-point Goppa codes on the maximal curves y^q + y = x^s over F_{q^2}: "
                 "point counts, code parameters, Hermitian self-orthogonality audits, derived "
                 "stabilizer codes, and channel experiments"};
    app.require_subcommand(1);

    int p = 3, e = 1, s = 2, m = 0, m_max = 0;
    int64_t trials = 1000;
    uint64_t seed = 0;
    double prob = 0.0;
    std::string distance = "bound", kind = "symmetric";
    std::string export_path, points_path;
    bool table = false;

    CLI::App* cmd_curve = app.add_subcommand("curve", "Enumerate rational points and check maximality");
    cmd_curve->add_option("--p", p, "odd prime characteristic")->required();
    cmd_curve->add_option("--e", e, "subfield degree: q = p^e")->required();
    cmd_curve->add_option("--s", s, "curve exponent, must divide q+1")->required();
    cmd_curve->add_option("--points", points_path, "write the point list CSV to this file");
    cmd_curve->add_flag("--table", table, "human-readable output");

    CLI::App* cmd_code = app.add_subcommand("code", "Build C_L(D, m P_inf) and report its parameters");
    cmd_code->add_option("--p", p)->required();
    cmd_code->add_option("--e", e)->required();
    cmd_code->add_option("--s", s)->required();
    cmd_code->add_option("--m", m, "divisor parameter (may be negative)")->required();
    cmd_code->add_option("--distance", distance, "d computation: exhaustive, enumerator, or bound")
        ->check(CLI::IsMember({"exhaustive", "enumerator", "bound"}));
    cmd_code->add_option("--export", export_path, "write the generator matrix to this file");
    cmd_code->add_flag("--table", table);

    CLI::App* cmd_scan = app.add_subcommand("scan", "Self-orthogonality and dimension audit per m (CSV)");
    cmd_scan->add_option("--p", p)->required();
    cmd_scan->add_option("--e", e)->required();
    cmd_scan->add_option("--s", s)->required();
    cmd_scan->add_option("--m-max", m_max, "scan m = 0..m_max")->required();
    cmd_scan->add_flag("--table", table);

    CLI::App* cmd_quantum = app.add_subcommand("quantum", "Derive stabilizer code parameters");
    cmd_quantum->add_option("--p", p)->required();
    cmd_quantum->add_option("--e", e)->required();
    cmd_quantum->add_option("--s", s)->required();
    cmd_quantum->add_option("--m", m)->required();
    cmd_quantum->add_flag("--table", table);

    CLI::App* cmd_simulate = app.add_subcommand("simulate", "Seeded encode/transmit/decode experiment");
    cmd_simulate->add_option("--p", p)->required();
    cmd_simulate->add_option("--e", e)->required();
    cmd_simulate->add_option("--s", s)->required();
    cmd_simulate->add_option("--m", m)->required();
    cmd_simulate->add_option("--kind", kind, "channel kind")->check(CLI::IsMember({"symmetric", "erasure"}));
    cmd_simulate->add_option("--prob", prob, "per-symbol event probability")->required();
    cmd_simulate->add_option("--trials", trials, "number of trials");
    cmd_simulate->add_option("--seed", seed, "base seed; trial t uses seed + t");
    cmd_simulate->add_flag("--table", table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        return emit_error(json{{"error", err.what()}});
    }

    try {
        if (app.got_subcommand(cmd_curve)) return run_curve(p, e, s, points_path, table);
        if (app.got_subcommand(cmd_code)) return run_code(p, e, s, m, distance, export_path, table);
        if (app.got_subcommand(cmd_scan)) return run_scan(p, e, s, m_max, table);
        if (app.got_subcommand(cmd_quantum)) return run_quantum(p, e, s, m, table);
        if (app.got_subcommand(cmd_simulate)) return run_simulate(p, e, s, m, kind, prob, trials, seed, table);
    } catch (const std::exception& err) {
        return emit_error(json{{"error", err.what()}});
    }
    return emit_error(json{{"error", "no subcommand"}});
}
