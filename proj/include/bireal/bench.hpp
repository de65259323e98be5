#ifndef bireal_bench_hpp
#define bireal_bench_hpp

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "bireal/model.hpp"

namespace bireal {

/// A benchmark size: part sizes and the planted edge count per U-vertex.
struct PlantedSpec {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    double density = 4.0;
    degree_t slack = 2;  // intervals are widened by up to this much each side
};

/// Bounds derived from a random graph with about density * n1 edges: each
/// vertex of degree d gets [d - a, d + b] with a, b uniform in [0, slack],
/// cut to [0, opposite part size]. Realizable by construction and fully
/// determined by (spec, seed).
IntervalInstance planted_instance(const PlantedSpec& spec, std::uint64_t seed);

/// n = 2^10 .. 2^14, square, density 4.
std::vector<PlantedSpec> default_schedule();

/// Comma-separated "n1xn2xdensity" triples, e.g. "1024x1024x4,2048x2048x4".
/// Throws std::invalid_argument on malformed input.
std::vector<PlantedSpec> parse_schedule(std::string_view text);

struct BenchRow {
    PlantedSpec spec;
    std::size_t edges = 0;
    degree_t delta1 = 0;
    degree_t delta2 = 0;
    std::uint64_t operations = 0;
    double median_seconds = 0.0;  // per edge-minimal realization
};

/// Times realize_edge_minimal on one planted instance: `runs` samples, each
/// averaging `repetitions` calls; reports the median sample.
BenchRow run_bench(const PlantedSpec& spec, std::uint64_t seed, std::size_t runs = 5,
                   std::size_t repetitions = 1);

}

#endif /* bireal_bench_hpp */
