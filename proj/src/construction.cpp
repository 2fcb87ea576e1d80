#include "hypercol/construction.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hypercol {

namespace {

BigInt binomial(const BigInt& n, std::size_t k) {
    if (n < k)
        return 0;
    BigInt result = 1;
    for (std::size_t i = 0; i < k; ++i)
        result = result * (n - i) / (i + 1);
    return result;
}

BigInt power(const BigInt& base, std::size_t exp) {
    BigInt result = 1;
    for (std::size_t i = 0; i < exp; ++i)
        result *= base;
    return result;
}

ConstructionStats step_sizes(const BigInt& prev_vertices, const BigInt& prev_edges,
                             std::size_t r, std::size_t d) {
    const std::size_t copies = d + r - 2;
    ConstructionStats s;
    s.num_s = binomial(copies, d) * power(binomial(prev_vertices, r - 1), d);
    s.vertices = copies * prev_vertices + (r - 1) * s.num_s;
    s.edges = copies * prev_edges + s.num_s * d * (r - 1);
    return s;
}

std::string describe(const ConstructionStats& s) {
    return "V=" + s.vertices.str() + " E=" + s.edges.str() + " numS=" + s.num_s.str();
}

void check_cap(const ConstructionStats& s, const BigInt& cap) {
    if (s.vertices + s.edges > cap)
        throw SizeRefused(s, cap);
}

// All k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<VertexId>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<VertexId>> out;
    if (k > n)
        return out;
    std::vector<VertexId> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = static_cast<VertexId>(i);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

SizeRefused::SizeRefused(ConstructionStats predicted, BigInt cap)
    : std::runtime_error("predicted size " + describe(predicted) + " exceeds cap of " +
                         cap.str() + " vertices+edges"),
      predicted_(std::move(predicted)),
      cap_(std::move(cap)) {}

ConstructionStats predict_sizes(std::size_t r, std::size_t d) {
    if (r < 2)
        throw InputError("r must be at least 2");
    if (d < 1)
        throw InputError("d must be at least 1");
    ConstructionStats s{BigInt(r * (r - 1)), BigInt((r - 1) * (r - 1)), BigInt(0)};
    for (std::size_t level = 2; level <= d; ++level)
        s = step_sizes(s.vertices, s.edges, r, level);
    return s;
}

Hypergraph build_base(std::size_t r) {
    if (r < 2)
        throw InputError("r must be at least 2");
    const std::size_t n = r * (r - 1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + r <= n; ++i) {
        Edge e(r);
        for (std::size_t j = 0; j < r; ++j)
            e[j] = static_cast<VertexId>(i + j);
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, r, std::move(edges));
}

Construction extend(const Hypergraph& prev, std::size_t r, std::size_t d, const BigInt& cap) {
    if (r < 2 || prev.uniformity() != r)
        throw InputError("previous level is not " + std::to_string(r) + "-uniform");
    if (d < 2)
        throw InputError("extend needs d >= 2");
    check_cap(step_sizes(prev.num_vertices(), prev.num_edges(), r, d), cap);

    const std::size_t copies = d + r - 2;
    const std::size_t block = prev.num_vertices();

    std::vector<Edge> edges;
    std::vector<VertexProvenance> prov;
    prov.reserve(copies * block);
    for (std::size_t c = 0; c < copies; ++c) {
        for (VertexId v = 0; v < block; ++v)
            prov.push_back(VertexProvenance::copy(c, v));
        for (std::size_t i = 0; i < prev.num_edges(); ++i) {
            Edge e(prev.edge(i).begin(), prev.edge(i).end());
            for (auto& v : e)
                v += static_cast<VertexId>(c * block);
            edges.push_back(std::move(e));
        }
    }

    const auto local = subsets(block, r - 1);
    VertexId next = static_cast<VertexId>(copies * block);
    std::uint64_t s_index = 0;
    for (const auto& chosen : subsets(copies, d)) {
        if (local.empty())
            break;
        // Odometer over one local subset per chosen copy; the last copy varies
        // fastest, which visits the combined tuples in lexicographic order.
        std::vector<std::size_t> pick(d, 0);
        while (true) {
            for (std::size_t j = 1; j < r; ++j) {
                const VertexId fresh = next++;
                prov.push_back(VertexProvenance::fresh(s_index, j));
                for (std::size_t t = 0; t < d; ++t) {
                    Edge e;
                    e.reserve(r);
                    for (VertexId v : local[pick[t]])
                        e.push_back(static_cast<VertexId>(chosen[t] * block + v));
                    e.push_back(fresh);
                    edges.push_back(std::move(e));
                }
            }
            ++s_index;
            std::size_t t = d;
            while (t > 0 && pick[t - 1] + 1 == local.size()) {
                pick[t - 1] = 0;
                --t;
            }
            if (t == 0)
                break;
            ++pick[t - 1];
        }
    }

    return {Hypergraph(next, r, std::move(edges)), std::move(prov)};
}

Construction build_with_provenance(ConstructionParams params, const BigInt& cap) {
    check_cap(predict_sizes(params.r, params.d), cap);
    Construction out{build_base(params.r), {}};
    out.provenance.assign(out.graph.num_vertices(), VertexProvenance::base());
    for (std::size_t level = 2; level <= params.d; ++level)
        out = extend(out.graph, params.r, level, cap);
    return out;
}

Hypergraph build(ConstructionParams params, const BigInt& cap) {
    return build_with_provenance(params, cap).graph;
}

void write_provenance(std::ostream& out, const std::vector<VertexProvenance>& prov) {
    for (std::size_t v = 0; v < prov.size(); ++v) {
        const auto& p = prov[v];
        out << "v " << v + 1;
        switch (p.kind) {
        case VertexProvenance::Kind::kBase:
            out << " BASE\n";
            break;
        case VertexProvenance::Kind::kCopy:
            out << " COPY " << p.a << ' ' << p.b + 1 << '\n';
            break;
        case VertexProvenance::Kind::kNew:
            out << " NEW " << p.a << ' ' << p.b << '\n';
            break;
        }
    }
}

std::vector<VertexProvenance> parse_provenance(std::istream& in) {
    std::vector<VertexProvenance> prov;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        std::string tag, kind;
        std::uint64_t id = 0;
        if (!(ss >> tag >> id >> kind) || tag != "v")
            throw ParseError(lineno, "expected `v <id> <kind> ...`");
        if (id != prov.size() + 1)
            throw ParseError(lineno, "vertex ids must be consecutive from 1");
        VertexProvenance p;
        if (kind == "BASE") {
            p = VertexProvenance::base();
        } else if (kind == "COPY" || kind == "NEW") {
            std::uint64_t a = 0, b = 0;
            if (!(ss >> a >> b))
                throw ParseError(lineno, "missing fields after " + kind);
            if (kind == "COPY") {
                if (b == 0)
                    throw ParseError(lineno, "inner vertex ids are 1-based");
                p = VertexProvenance::copy(a, static_cast<VertexId>(b - 1));
            } else {
                p = VertexProvenance::fresh(a, b);
            }
        } else {
            throw ParseError(lineno, "unknown provenance kind `" + kind + "`");
        }
        std::string extra;
        if (ss >> extra)
            throw ParseError(lineno, "trailing tokens");
        prov.push_back(p);
    }
    return prov;
}

}  // namespace hypercol
