#ifndef bireal_io_hpp
#define bireal_io_hpp

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bireal/model.hpp"

namespace bireal {

/// line is 1-based, or 0 when unknown; field is empty when the error is not
/// tied to one field.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string field, const std::string& message);
    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

/// Accepts either the line format
///
///     # comment
///     n1 3
///     n2 5
///     r_low: 4 1 0
///     r_up: 4 2 3
///     c_low: 2 2 0 0 0
///     c_up: 2 3 1 2 2
///
/// (keys in any order, colons optional) or a JSON object with the same six
/// keys. JSON is detected by a leading '{'. Vector lengths are checked
/// against n1/n2; values are not (that is validate_and_normalize's job).
IntervalInstance parse_instance(std::string_view text);
IntervalInstance read_instance_file(const std::string& path);

std::string format_instance(const IntervalInstance& inst);

enum class GraphFormat { Edges, Json, Dot };

/// Edges: one "u v" line per edge, 1-based, lexicographic.
/// Json: {"n1":..,"n2":..,"edges":[[u,v],...]}, 1-based.
/// Dot: an undirected graph with nodes u1..un1 and v1..vn2.
std::string format_graph(const BipartiteGraph& g, GraphFormat format);

/// Inverse of format_graph(g, GraphFormat::Json).
BipartiteGraph parse_graph_json(std::string_view text);

}

#endif /* bireal_io_hpp */
