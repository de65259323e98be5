#include "bireal/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace bireal {

namespace {

using json = nlohmann::json;

constexpr std::array<std::string_view, 4> kVectorKeys = {"r_low", "r_up", "c_low", "c_up"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

degree_t parse_integer(std::string_view token, std::size_t line, const std::string& field) {
    degree_t value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, field, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::vector<degree_t> parse_integers(std::string_view rest, std::size_t line,
                                     const std::string& field) {
    std::vector<degree_t> out;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        const auto start = rest.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) {
            break;
        }
        auto stop = rest.find_first_of(" \t\r", start);
        if (stop == std::string_view::npos) {
            stop = rest.size();
        }
        out.push_back(parse_integer(rest.substr(start, stop - start), line, field));
        pos = stop;
    }
    return out;
}

std::size_t as_size(degree_t value, std::size_t line, const std::string& field) {
    if (value < 0) {
        throw ParseError(line, field, "part size must be nonnegative");
    }
    return static_cast<std::size_t>(value);
}

// works for const and non-const instances
template <class Instance>
auto& vector_field(Instance& inst, std::string_view key) {
    if (key == "r_low") return inst.r_low;
    if (key == "r_up") return inst.r_up;
    if (key == "c_low") return inst.c_low;
    return inst.c_up;
}

void check_lengths(const IntervalInstance& inst, const std::array<std::size_t, 4>& lines) {
    for (std::size_t k = 0; k < kVectorKeys.size(); ++k) {
        auto& v = vector_field(inst, kVectorKeys[k]);
        const std::size_t expected = k < 2 ? inst.n1 : inst.n2;
        if (v.size() != expected) {
            throw ParseError(lines[k], std::string(kVectorKeys[k]),
                             "expected " + std::to_string(expected) + " entries, got " +
                                 std::to_string(v.size()));
        }
    }
}

IntervalInstance parse_line_format(std::string_view text) {
    IntervalInstance inst;
    std::optional<std::size_t> n1_line, n2_line;
    std::array<std::size_t, 4> vector_lines{};
    std::array<bool, 4> seen{};

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        auto key_end = line.find_first_of(" \t:");
        std::string key(line.substr(0, key_end));
        std::string_view rest = key_end == std::string_view::npos ? "" : line.substr(key_end);
        rest = trim(rest);
        if (!rest.empty() && rest.front() == ':') {
            rest = trim(rest.substr(1));
        }

        if (key == "n1" || key == "n2") {
            auto& slot = key == "n1" ? n1_line : n2_line;
            if (slot) {
                throw ParseError(line_no, key, "duplicate field");
            }
            const auto values = parse_integers(rest, line_no, key);
            if (values.size() != 1) {
                throw ParseError(line_no, key, "expected exactly one integer");
            }
            (key == "n1" ? inst.n1 : inst.n2) = as_size(values[0], line_no, key);
            slot = line_no;
            continue;
        }

        bool matched = false;
        for (std::size_t k = 0; k < kVectorKeys.size(); ++k) {
            if (key == kVectorKeys[k]) {
                if (seen[k]) {
                    throw ParseError(line_no, key, "duplicate field");
                }
                vector_field(inst, key) = parse_integers(rest, line_no, key);
                seen[k] = true;
                vector_lines[k] = line_no;
                matched = true;
            }
        }
        if (!matched) {
            throw ParseError(line_no, key, "unknown field");
        }
    }

    if (!n1_line) throw ParseError(0, "n1", "missing field");
    if (!n2_line) throw ParseError(0, "n2", "missing field");
    for (std::size_t k = 0; k < kVectorKeys.size(); ++k) {
        if (!seen[k]) {
            throw ParseError(0, std::string(kVectorKeys[k]), "missing field");
        }
    }
    check_lengths(inst, vector_lines);
    return inst;
}

IntervalInstance parse_json_format(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, "", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError(0, "", "expected a JSON object");
    }
    const auto get_int = [](const json& value, const std::string& field) {
        if (!value.is_number_integer()) {
            throw ParseError(0, field, "expected an integer");
        }
        return value.get<degree_t>();
    };

    IntervalInstance inst;
    for (const char* key : {"n1", "n2"}) {
        if (!doc.contains(key)) {
            throw ParseError(0, key, "missing field");
        }
        (std::string_view(key) == "n1" ? inst.n1 : inst.n2) =
            as_size(get_int(doc[key], key), 0, key);
    }
    for (std::string_view key : kVectorKeys) {
        const std::string field(key);
        if (!doc.contains(field)) {
            throw ParseError(0, field, "missing field");
        }
        const json& arr = doc[field];
        if (!arr.is_array()) {
            throw ParseError(0, field, "expected an array of integers");
        }
        auto& out = vector_field(inst, key);
        for (const json& x : arr) {
            out.push_back(get_int(x, field));
        }
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "n1" && key != "n2" &&
            std::find(kVectorKeys.begin(), kVectorKeys.end(), key) == kVectorKeys.end()) {
            throw ParseError(0, key, "unknown field");
        }
    }
    check_lengths(inst, {0, 0, 0, 0});
    return inst;
}

}

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
    : std::runtime_error([&] {
          std::string where;
          if (line > 0) {
              where += "line " + std::to_string(line);
          }
          if (!field.empty()) {
              where += (where.empty() ? "field " : ", field ") + field;
          }
          return where.empty() ? message : where + ": " + message;
      }()),
      line_(line),
      field_(std::move(field)) {}

IntervalInstance parse_instance(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json_format(text);
    }
    return parse_line_format(text);
}

IntervalInstance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "", "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string format_instance(const IntervalInstance& inst) {
    std::ostringstream out;
    out << "n1 " << inst.n1 << "\nn2 " << inst.n2 << "\n";
    for (std::string_view key : kVectorKeys) {
        out << key << ":";
        for (degree_t x : vector_field(inst, key)) {
            out << ' ' << x;
        }
        out << "\n";
    }
    return out.str();
}

std::string format_graph(const BipartiteGraph& g, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
    case GraphFormat::Edges:
        for (const auto& [u, v] : g.edges()) {
            out << u + 1 << ' ' << v + 1 << '\n';
        }
        break;
    case GraphFormat::Json: {
        json edges = json::array();
        for (const auto& [u, v] : g.edges()) {
            edges.push_back({u + 1, v + 1});
        }
        json doc = {{"n1", g.n1()}, {"n2", g.n2()}, {"edges", std::move(edges)}};
        out << doc.dump() << '\n';
        break;
    }
    case GraphFormat::Dot:
        out << "graph realization {\n";
        for (std::size_t u = 0; u < g.n1(); ++u) {
            out << "  u" << u + 1 << ";\n";
        }
        for (std::size_t v = 0; v < g.n2(); ++v) {
            out << "  v" << v + 1 << ";\n";
        }
        for (const auto& [u, v] : g.edges()) {
            out << "  u" << u + 1 << " -- v" << v + 1 << ";\n";
        }
        out << "}\n";
        break;
    }
    return out.str();
}

BipartiteGraph parse_graph_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, "", std::string("invalid JSON: ") + e.what());
    }
    try {
        const auto n1 = doc.at("n1").get<std::size_t>();
        const auto n2 = doc.at("n2").get<std::size_t>();
        std::vector<Edge> edges;
        for (const json& e : doc.at("edges")) {
            const auto u = e.at(0).get<std::size_t>();
            const auto v = e.at(1).get<std::size_t>();
            if (u == 0 || v == 0) {
                throw ParseError(0, "edges", "vertex indices are 1-based");
            }
            edges.emplace_back(u - 1, v - 1);
        }
        return BipartiteGraph::from_edges(n1, n2, edges);
    } catch (const json::exception& e) {
        throw ParseError(0, "", std::string("malformed graph: ") + e.what());
    }
}

}
