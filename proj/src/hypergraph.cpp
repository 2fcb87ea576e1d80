#include "hypercol/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hypercol/errors.hpp"

namespace hypercol {

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges) : n_(n), r_(r) {
    if (r < 2)
        throw InputError("uniformity must be at least 2, got " + std::to_string(r));
    for (auto& e : edges) {
        if (e.size() != r)
            throw InputError("edge of size " + std::to_string(e.size()) +
                             " in a " + std::to_string(r) + "-uniform hypergraph");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InputError("edge repeats a vertex");
        if (e.back() >= n)
            throw InputError("edge vertex " + std::to_string(e.back()) + " out of range for n = " +
                             std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    duplicates_dropped_ = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());

    edges_.reserve(edges.size() * r);
    for (const auto& e : edges)
        edges_.insert(edges_.end(), e.begin(), e.end());

    incidence_offsets_.assign(n + 1, 0);
    for (VertexId v : edges_)
        ++incidence_offsets_[v + 1];
    for (std::size_t v = 0; v < n; ++v)
        incidence_offsets_[v + 1] += incidence_offsets_[v];
    incidence_.resize(edges_.size());
    std::vector<std::size_t> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (VertexId v : edges[i])
            incidence_[fill[v]++] = static_cast<std::uint32_t>(i);
}

std::ptrdiff_t Hypergraph::find_edge(std::span<const VertexId> e) const {
    if (e.size() != r_)
        return -1;
    std::size_t lo = 0, hi = num_edges();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto cand = edge(mid);
        if (std::lexicographical_compare(cand.begin(), cand.end(), e.begin(), e.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < num_edges() && std::ranges::equal(edge(lo), e))
        return static_cast<std::ptrdiff_t>(lo);
    return -1;
}

Coloring::Coloring(std::vector<std::uint32_t> colors, std::size_t k)
    : colors_(std::move(colors)), k_(k) {
    for (auto c : colors_)
        if (c >= k_)
            throw InputError("colour " + std::to_string(c) + " outside palette of size " +
                             std::to_string(k_));
}

Coloring Coloring::from_colors(std::vector<std::uint32_t> colors) {
    std::size_t k = colors.empty() ? 0 : *std::ranges::max_element(colors) + std::size_t{1};
    return Coloring(std::move(colors), k);
}

std::size_t Coloring::num_used() const {
    std::vector<bool> seen(k_, false);
    std::size_t used = 0;
    for (auto c : colors_)
        if (!seen[c]) {
            seen[c] = true;
            ++used;
        }
    return used;
}

std::size_t degree(const Hypergraph& h, VertexId v) {
    if (v >= h.num_vertices())
        throw InputError("vertex " + std::to_string(v) + " out of range");
    return h.incident(v).size();
}

Hypergraph induced(const Hypergraph& h, std::span<const VertexId> keep) {
    constexpr VertexId kAbsent = ~VertexId{0};
    std::vector<VertexId> relabel(h.num_vertices(), kAbsent);
    for (VertexId v : keep) {
        if (v >= h.num_vertices())
            throw InputError("vertex " + std::to_string(v) + " out of range");
        relabel[v] = 0;
    }
    VertexId next = 0;
    for (auto& id : relabel)
        if (id != kAbsent)
            id = next++;

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        auto e = h.edge(i);
        if (std::ranges::all_of(e, [&](VertexId v) { return relabel[v] != kAbsent; })) {
            Edge mapped;
            mapped.reserve(e.size());
            for (VertexId v : e)
                mapped.push_back(relabel[v]);
            edges.push_back(std::move(mapped));
        }
    }
    return Hypergraph(next, h.uniformity(), std::move(edges));
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
    if (c.size() != h.num_vertices())
        throw InputError("colouring covers " + std::to_string(c.size()) + " of " +
                         std::to_string(h.num_vertices()) + " vertices");
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        auto e = h.edge(i);
        const auto first = c[e[0]];
        if (std::ranges::all_of(e, [&](VertexId v) { return c[v] == first; }))
            return false;
    }
    return true;
}

Hypergraph complete_uniform(std::size_t n, std::size_t r) {
    if (r < 2 || n < r)
        throw InputError("complete_uniform needs n >= r >= 2");
    std::vector<Edge> edges;
    Edge cur(r);
    for (std::size_t i = 0; i < r; ++i)
        cur[i] = static_cast<VertexId>(i);
    while (true) {
        edges.push_back(cur);
        // Advance to the next r-subset in lexicographic order.
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + (i - 1))
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < r; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return Hypergraph(n, r, std::move(edges));
}

}  // namespace hypercol
