#include <algorithm>
#include <set>
#include <string>

#include "hypercol/certify.hpp"

namespace hypercol {

std::size_t EliminationOrder::bound() const {
    return step_degrees.empty() ? 0 : *std::ranges::max_element(step_degrees);
}

DegeneracyResult degeneracy(const Hypergraph& h) {
    const std::size_t n = h.num_vertices();
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, VertexId>> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = h.incident(v).size();
        queue.emplace(deg[v], v);
    }
    std::vector<bool> removed(n, false);
    std::vector<bool> edge_alive(h.num_edges(), true);

    DegeneracyResult res;
    res.order.order.reserve(n);
    res.order.step_degrees.reserve(n);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        res.order.order.push_back(v);
        res.order.step_degrees.push_back(d);
        res.degeneracy = std::max(res.degeneracy, d);
        for (auto ei : h.incident(v)) {
            if (!edge_alive[ei])
                continue;
            edge_alive[ei] = false;
            for (VertexId u : h.edge(ei)) {
                if (u == v || removed[u])
                    continue;
                queue.erase({deg[u], u});
                queue.emplace(--deg[u], u);
            }
        }
    }
    return res;
}

bool is_d_degenerate(const Hypergraph& h, std::size_t d) {
    return degeneracy(h).degeneracy <= d;
}

bool check_elimination_order(const Hypergraph& h, const EliminationOrder& ord) {
    const std::size_t n = h.num_vertices();
    if (ord.order.size() != n || ord.step_degrees.size() != n)
        return false;
    // position[v] = step at which v is removed
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = ord.order[i];
        if (v >= n || position[v] != n)
            return false;
        position[v] = i;
    }
    // An edge survives until its earliest vertex goes, so it counts toward the
    // step degree of exactly that vertex.
    std::vector<std::size_t> recomputed(n, 0);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        std::size_t first = n;
        for (VertexId v : h.edge(i))
            first = std::min(first, position[v]);
        ++recomputed[first];
    }
    return recomputed == ord.step_degrees;
}

Coloring greedy_color(const Hypergraph& h, const EliminationOrder& ord) {
    if (!check_elimination_order(h, ord))
        throw InputError("invalid elimination order");
    constexpr std::uint32_t kUncolored = ~std::uint32_t{0};
    std::vector<std::uint32_t> color(h.num_vertices(), kUncolored);
    std::vector<bool> forbidden;
    for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
        const VertexId v = *it;
        forbidden.assign(h.incident(v).size() + 1, false);
        for (auto ei : h.incident(v)) {
            std::uint32_t shared = kUncolored;
            bool mono = true;
            for (VertexId u : h.edge(ei)) {
                if (u == v)
                    continue;
                if (color[u] == kUncolored || (shared != kUncolored && color[u] != shared)) {
                    mono = false;
                    break;
                }
                shared = color[u];
            }
            if (mono && shared < forbidden.size())
                forbidden[shared] = true;
        }
        std::uint32_t c = 0;
        while (forbidden[c])
            ++c;
        color[v] = c;
    }
    return Coloring::from_colors(std::move(color));
}

}  // namespace hypercol
