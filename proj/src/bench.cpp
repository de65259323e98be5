#include "bireal/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "bireal/realizer.hpp"

namespace bireal {

IntervalInstance planted_instance(const PlantedSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n1) * spec.n2;
    const auto wanted = std::min<std::uint64_t>(
        pairs, static_cast<std::uint64_t>(std::llround(spec.density * static_cast<double>(spec.n1))));

    // distinct pair codes u * n2 + v
    std::vector<std::uint64_t> codes;
    if (wanted > 0) {
        std::uniform_int_distribution<std::uint64_t> pick(0, pairs - 1);
        while (codes.size() < wanted) {
            for (std::uint64_t k = codes.size(); k < wanted; ++k) {
                codes.push_back(pick(rng));
            }
            std::sort(codes.begin(), codes.end());
            codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        }
    }

    std::vector<degree_t> row_deg(spec.n1, 0);
    std::vector<degree_t> col_deg(spec.n2, 0);
    for (std::uint64_t code : codes) {
        ++row_deg[code / spec.n2];
        ++col_deg[code % spec.n2];
    }

    std::uniform_int_distribution<degree_t> widen(0, std::max<degree_t>(spec.slack, 0));
    const auto bounds = [&](const std::vector<degree_t>& deg, std::size_t opposite,
                            std::vector<degree_t>& low, std::vector<degree_t>& up) {
        low.resize(deg.size());
        up.resize(deg.size());
        for (std::size_t k = 0; k < deg.size(); ++k) {
            low[k] = std::max<degree_t>(0, deg[k] - widen(rng));
            up[k] = std::min<degree_t>(static_cast<degree_t>(opposite), deg[k] + widen(rng));
        }
    };

    IntervalInstance inst;
    inst.n1 = spec.n1;
    inst.n2 = spec.n2;
    bounds(row_deg, spec.n2, inst.r_low, inst.r_up);
    bounds(col_deg, spec.n1, inst.c_low, inst.c_up);
    return inst;
}

std::vector<PlantedSpec> default_schedule() {
    std::vector<PlantedSpec> out;
    for (std::size_t n = std::size_t{1} << 10; n <= (std::size_t{1} << 14); n *= 2) {
        out.push_back({n, n, 4.0, 2});
    }
    return out;
}

std::vector<PlantedSpec> parse_schedule(std::string_view text) {
    std::vector<PlantedSpec> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        const std::string item(text.substr(pos, comma - pos));
        pos = comma + 1;

        const auto x1 = item.find('x');
        const auto x2 = x1 == std::string::npos ? x1 : item.find('x', x1 + 1);
        if (x2 == std::string::npos) {
            throw std::invalid_argument("schedule entry '" + item + "' is not n1xn2xdensity");
        }
        PlantedSpec spec;
        const auto parse_size = [&](std::string_view s, std::size_t& out_value) {
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out_value);
            if (ec != std::errc{} || ptr != s.data() + s.size()) {
                throw std::invalid_argument("bad size '" + std::string(s) + "' in schedule");
            }
        };
        parse_size(std::string_view(item).substr(0, x1), spec.n1);
        parse_size(std::string_view(item).substr(x1 + 1, x2 - x1 - 1), spec.n2);
        try {
            std::size_t used = 0;
            const std::string density = item.substr(x2 + 1);
            spec.density = std::stod(density, &used);
            if (used != density.size() || spec.density < 0) {
                throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad density in schedule entry '" + item + "'");
        }
        out.push_back(spec);
    }
    return out;
}

BenchRow run_bench(const PlantedSpec& spec, std::uint64_t seed, std::size_t runs,
                   std::size_t repetitions) {
    const IntervalInstance inst = planted_instance(spec, seed);
    BenchRow row;
    row.spec = spec;

    OpCounter counter;
    const RealizationReport report = realize_edge_minimal(inst, &counter);
    row.edges = report.graph.edge_count();
    row.delta1 = report.delta1;
    row.delta2 = report.delta2;
    row.operations = counter.total();

    runs = std::max<std::size_t>(runs, 1);
    repetitions = std::max<std::size_t>(repetitions, 1);
    std::vector<double> samples;
    std::size_t sink = 0;
    for (std::size_t run = 0; run < runs; ++run) {
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t rep = 0; rep < repetitions; ++rep) {
            sink += realize_edge_minimal(inst).graph.edge_count();
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        samples.push_back(elapsed.count() / static_cast<double>(repetitions));
    }
    if (sink != row.edges * runs * repetitions) {
        throw std::logic_error("realization changed between benchmark runs");
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    row.median_seconds = samples[samples.size() / 2];
    return row;
}

}
