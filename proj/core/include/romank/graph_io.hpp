#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "romank/graph.hpp"

namespace romank {

// Edge-list text format:
//   - '#' starts a comment line
//   - header line `n <vertex_count>`
//   - one `u v` pair per line, 0-based, whitespace-separated
// Serialization emits edges sorted lexicographically.

class ParseError : public std::runtime_error {
public:
    enum class Kind {
        bad_header,
        vertex_out_of_range,
        self_loop,
        duplicate_edge,
        malformed_line,
        cap_exceeded,
    };

    ParseError(Kind kind, int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

// Parse-time cap; keeps every weight sum well inside 64 bits.
inline constexpr int kMaxParsedVertices = 100000;

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace romank
