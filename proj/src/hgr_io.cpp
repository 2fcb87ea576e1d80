#include "hypercol/hgr_io.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hypercol {

void write_hgr(std::ostream& out, const Hypergraph& h) {
    out << "p hgr " << h.num_vertices() << ' ' << h.num_edges() << ' ' << h.uniformity() << '\n';
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        const auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j)
            out << (j ? " " : "") << e[j] + 1;
        out << '\n';
    }
}

std::string to_hgr(const Hypergraph& h) {
    std::ostringstream out;
    write_hgr(out, h);
    return out.str();
}

namespace {

std::uint64_t read_count(std::istringstream& ss, std::size_t lineno, const char* what) {
    std::string tok;
    if (!(ss >> tok) || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, std::string("expected ") + what);
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw ParseError(lineno, std::string(what) + " out of range");
    }
}

}  // namespace

Hypergraph parse_hgr(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::uint64_t n = 0, m = 0, r = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t'))
            continue;
        std::istringstream ss(line);
        if (!header) {
            std::string p, fmt;
            if (!(ss >> p >> fmt) || p != "p" || fmt != "hgr")
                throw ParseError(lineno, "expected header `p hgr <n> <m> <r>`");
            n = read_count(ss, lineno, "vertex count");
            m = read_count(ss, lineno, "edge count");
            r = read_count(ss, lineno, "uniformity");
            std::string extra;
            if (ss >> extra)
                throw ParseError(lineno, "trailing tokens after header");
            if (r < 2)
                throw ParseError(lineno, "uniformity must be at least 2");
            if (n > std::numeric_limits<VertexId>::max())
                throw ParseError(lineno, "too many vertices");
            header = true;
            continue;
        }
        if (edges.size() == m)
            throw ParseError(lineno, "more edge lines than the header declares");
        Edge e;
        std::string tok;
        while (ss >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(lineno, "bad vertex id `" + tok + "`");
            std::uint64_t id = 0;
            try {
                id = std::stoull(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "vertex id out of range");
            }
            if (id < 1 || id > n)
                throw ParseError(lineno, "vertex id " + tok + " outside [1, " + std::to_string(n) + "]");
            e.push_back(static_cast<VertexId>(id - 1));
        }
        if (e.size() != r)
            throw ParseError(lineno, "edge has " + std::to_string(e.size()) + " vertices, expected " +
                                         std::to_string(r));
        std::ranges::sort(e);
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ParseError(lineno, "edge repeats a vertex");
        edges.push_back(std::move(e));
    }
    if (!header)
        throw ParseError(lineno, "missing `p hgr` header");
    if (edges.size() != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph parse_hgr(const std::string& text) {
    std::istringstream in(text);
    return parse_hgr(in);
}

}  // namespace hypercol
