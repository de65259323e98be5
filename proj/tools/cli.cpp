#include "cli.hpp"

#include <cstdint>
#include <iomanip>
#include <map>

#include <CLI11.hpp>

#include "bireal/bench.hpp"
#include "bireal/io.hpp"
#include "bireal/oracles.hpp"
#include "bireal/realizability.hpp"
#include "bireal/realizer.hpp"

namespace bireal::cli {

namespace {

std::string certificate_line(const DominanceViolation& v) {
    return "not realizable: prefix k=" + std::to_string(v.prefix) + ", side " +
           (v.side == Side::Rows ? "r" : "c");
}

void print_vector(std::ostream& os, const char* name, const DegreeVector& v) {
    os << name;
    for (degree_t x : v) {
        os << ' ' << x;
    }
    os << '\n';
}

int cmd_check(const std::string& path, bool quiet, std::ostream& out) {
    const SortedInstance sorted = validate_and_normalize(read_instance_file(path));
    if (auto violation = find_violation(sorted)) {
        if (!quiet) {
            out << certificate_line(*violation) << '\n';
        }
        return kNotRealizable;
    }
    if (!quiet) {
        out << "realizable\n";
    }
    return kRealizable;
}

int cmd_realize(const std::string& path, const std::string& mode, GraphFormat format,
                bool verify, bool quiet, std::ostream& out, std::ostream& err) {
    const IntervalInstance inst = read_instance_file(path);
    RealizationReport report;
    try {
        report = mode == "max" ? realize_edge_maximal(inst) : realize_edge_minimal(inst);
    } catch (const NotRealizable& e) {
        err << certificate_line(e.certificate()) << '\n';
        return kNotRealizable;
    }

    if (verify) {
        if (!verify_realization(report.graph, inst)) {
            err << "verification failed: degrees outside their intervals\n";
            return kVerificationFailed;
        }
        if (!flow_realize(inst)) {
            err << "verification failed: flow oracle finds no realization\n";
            return kVerificationFailed;
        }
    }

    out << format_graph(report.graph, format);
    if (!quiet) {
        err << "delta1 " << report.delta1 << '\n'
            << "delta2 " << report.delta2 << '\n'
            << "edges " << report.graph.edge_count() << '\n';
        print_vector(err, "r", report.final_r);
        print_vector(err, "c", report.final_c);
        if (verify) {
            err << "verified\n";
        }
    }
    return kRealizable;
}

int cmd_bench(const std::string& schedule_text, std::uint64_t seed, std::size_t runs,
              std::size_t repetitions, bool quiet, std::ostream& out) {
    const auto schedule = schedule_text.empty() ? default_schedule() : parse_schedule(schedule_text);
    if (!quiet) {
        out << "n1\tn2\tedges\tdelta1\tdelta2\toperations\tmedian_ms\n";
    }
    for (const PlantedSpec& spec : schedule) {
        const BenchRow row = run_bench(spec, seed, runs, repetitions);
        out << row.spec.n1 << '\t' << row.spec.n2 << '\t' << row.edges << '\t' << row.delta1
            << '\t' << row.delta2 << '\t' << row.operations << '\t' << std::fixed
            << std::setprecision(4) << row.median_seconds * 1e3 << '\n';
        out.unsetf(std::ios::floatfield);
    }
    return kRealizable;
}

}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bipartite graphs with degrees in prescribed intervals"};
    app.require_subcommand(1);

    std::string path;
    bool quiet = false;

    auto* check = app.add_subcommand("check", "Decide whether the bounds are realizable");
    check->add_option("instance", path, "Instance file")->required();
    check->add_flag("--quiet", quiet, "Report through the exit status only");

    std::string mode = "min";
    GraphFormat format = GraphFormat::Edges;
    bool verify = false;
    const std::map<std::string, GraphFormat> formats{
        {"edges", GraphFormat::Edges}, {"json", GraphFormat::Json}, {"dot", GraphFormat::Dot}};
    auto* realize = app.add_subcommand("realize", "Construct an edge-minimal or -maximal realization");
    realize->add_option("instance", path, "Instance file")->required();
    realize->add_option("--mode", mode, "min or max")->check(CLI::IsMember({"min", "max"}));
    realize->add_option("--format", format, "edges, json or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    realize->add_flag("--verify", verify, "Re-check the output and cross-check with a max-flow oracle");
    realize->add_flag("--quiet", quiet, "Omit the diagnostics on standard error");

    std::string schedule;
    std::uint64_t seed = 1;
    std::size_t runs = 5;
    std::size_t repetitions = 1;
    auto* bench = app.add_subcommand("bench", "Time realizations of planted random instances");
    bench->add_option("--schedule", schedule, "Comma-separated n1xn2xdensity entries");
    bench->add_option("--seed", seed, "Generator seed");
    bench->add_option("--runs", runs, "Timed samples per size (median reported)");
    bench->add_option("--reps", repetitions, "Realizations per sample");
    bench->add_flag("--quiet", quiet, "Omit the header row");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        app.name(reversed.back());
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*check) {
            return cmd_check(path, quiet, out);
        }
        if (*realize) {
            return cmd_realize(path, mode, format, verify, quiet, out, err);
        }
        return cmd_bench(schedule, seed, runs, repetitions, quiet, out);
    } catch (const ParseError& e) {
        err << "error: " << path << ": " << e.what() << '\n';
    } catch (const InvalidInstance& e) {
        err << "error: invalid instance: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

}
