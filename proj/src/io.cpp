#include "fracdim/io.hpp"

#include <fstream>
#include <sstream>

namespace fracdim {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail(const std::string& source, int line_no, const std::string& what) {
    throw std::invalid_argument(source + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source_name) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream fields(body);
        if (n < 0) {
            if (!(fields >> n) || n < 0) fail(source_name, line_no, "expected vertex count");
            std::string extra;
            if (fields >> extra) fail(source_name, line_no, "trailing tokens after vertex count");
            continue;
        }
        int u, v;
        if (!(fields >> u >> v)) fail(source_name, line_no, "expected edge 'u v'");
        std::string extra;
        if (fields >> extra) fail(source_name, line_no, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(source_name, line_no, "endpoint out of range");
        if (u >= v) fail(source_name, line_no, "edges must satisfy u < v");
        edges.emplace_back(u, v);
    }
    if (n < 0) fail(source_name, line_no, "missing vertex count line");
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(source_name + ": " + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_labels(std::ostream& out, const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << " " << (g.has_labels() ? g.label(v) : std::to_string(v)) << "\n";
    }
}

}  // namespace fracdim
