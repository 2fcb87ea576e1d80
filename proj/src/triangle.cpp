#include <algorithm>
#include <iterator>

#include "hypercol/certify.hpp"

namespace hypercol {

// Distinct r-edges span at least r+1 vertices, so a triangle is three edges
// inside one (r+1)-set. For each edge a, collect the later edges b sharing
// r-1 vertices with it; the third edge is then U \ {x} for some x in U = a | b.
std::optional<TriangleCertificate> find_triangle(const Hypergraph& h) {
    const std::size_t m = h.num_edges();
    const std::size_t r = h.uniformity();
    std::vector<std::uint32_t> overlap(m, 0);
    std::vector<std::size_t> touched;
    std::vector<VertexId> uni, third;

    for (std::size_t a = 0; a < m; ++a) {
        touched.clear();
        for (VertexId v : h.edge(a))
            for (auto f : h.incident(v))
                if (f > a && overlap[f]++ == 0)
                    touched.push_back(f);
        std::vector<std::size_t> partners;
        for (auto f : touched) {
            if (overlap[f] == r - 1)
                partners.push_back(f);
            overlap[f] = 0;
        }
        std::ranges::sort(partners);

        for (auto b : partners) {
            uni.clear();
            std::ranges::set_union(h.edge(a), h.edge(b), std::back_inserter(uni));
            std::size_t best = m;
            for (std::size_t skip = 0; skip < uni.size(); ++skip) {
                third.clear();
                for (std::size_t i = 0; i < uni.size(); ++i)
                    if (i != skip)
                        third.push_back(uni[i]);
                auto c = h.find_edge(third);
                if (c > static_cast<std::ptrdiff_t>(b))
                    best = std::min(best, static_cast<std::size_t>(c));
            }
            if (best < m)
                return TriangleCertificate{{a, b, best}, uni};
        }
    }
    return std::nullopt;
}

}  // namespace hypercol
