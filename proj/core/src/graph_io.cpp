#include "romank/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace romank {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            long long count = -1;
            std::string trailing;
            ls >> tag >> count;
            if (!ls || tag != "n" || count < 0 || (ls >> trailing))
                throw ParseError(ParseError::Kind::bad_header, lineno,
                                 "expected header `n <vertex_count>`, got `" + line + "`");
            if (count > kMaxParsedVertices)
                throw ParseError(ParseError::Kind::cap_exceeded, lineno,
                                 "vertex count " + std::to_string(count) + " exceeds cap " +
                                     std::to_string(kMaxParsedVertices));
            n = static_cast<int>(count);
            continue;
        }
        long long u = -1, v = -1;
        std::string trailing;
        ls >> u >> v;
        if (!ls || (ls >> trailing))
            throw ParseError(ParseError::Kind::malformed_line, lineno,
                             "expected `u v`, got `" + line + "`");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseError::Kind::vertex_out_of_range, lineno,
                             "edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(ParseError::Kind::self_loop, lineno,
                             "self-loop at vertex " + std::to_string(u));
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second)
            throw ParseError(ParseError::Kind::duplicate_edge, lineno,
                             "duplicate edge " + std::to_string(e.first) + " " +
                                 std::to_string(e.second));
        edges.push_back(e);
    }
    if (n < 0)
        throw ParseError(ParseError::Kind::bad_header, lineno, "missing `n <vertex_count>` header");
    return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << serialize_graph(g);
}

}  // namespace romank
