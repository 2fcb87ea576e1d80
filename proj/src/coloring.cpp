#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <numeric>
#include <string>

#include "hypercol/certify.hpp"

namespace hypercol {

namespace {

constexpr std::uint32_t kUncolored = std::numeric_limits<std::uint32_t>::max();

// Backtracking state with forward checking on edges. Counters make every
// assignment undoable in LIFO order.
class Backtracker {
public:
    Backtracker(const Hypergraph& h, std::size_t k, std::uint64_t budget,
                std::atomic<std::uint64_t>& nodes, const std::atomic<bool>& stop)
        : h_(h), k_(k), budget_(budget), nodes_(nodes), stop_(stop),
          color_(h.num_vertices(), kUncolored),
          forbid_(h.num_vertices() * k, 0),
          allowed_(h.num_vertices(), k),
          edge_colored_(h.num_edges(), 0),
          edge_count_(h.num_edges() * k, 0) {
        order_.resize(h.num_vertices());
        std::iota(order_.begin(), order_.end(), VertexId{0});
        std::ranges::stable_sort(order_, [&](VertexId a, VertexId b) {
            return h.incident(a).size() > h.incident(b).size();
        });
    }

    const std::vector<VertexId>& order() const { return order_; }
    bool aborted() const { return aborted_; }
    std::vector<std::uint32_t> colors() const { return color_; }

    bool allowed(VertexId v, std::size_t c) const { return forbid_[v * k_ + c] == 0; }

    // Returns false when some vertex is left with no admissible colour. The
    // assignment is recorded either way and must be undone with unassign.
    bool assign(VertexId v, std::uint32_t c) {
        color_[v] = c;
        bool ok = true;
        const std::size_t r = h_.uniformity();
        for (auto ei : h_.incident(v)) {
            ++edge_colored_[ei];
            const auto same = ++edge_count_[ei * k_ + c];
            if (edge_colored_[ei] == r - 1 && same == r - 1) {
                const VertexId last = uncolored_in(ei);
                if (forbid_[last * k_ + c]++ == 0 && --allowed_[last] == 0)
                    ok = false;
            }
        }
        return ok;
    }

    void unassign(VertexId v, std::uint32_t c) {
        const std::size_t r = h_.uniformity();
        for (auto ei : h_.incident(v)) {
            if (edge_colored_[ei] == r - 1 && edge_count_[ei * k_ + c] == r - 1) {
                const VertexId last = uncolored_in(ei);
                if (--forbid_[last * k_ + c] == 0)
                    ++allowed_[last];
            }
            --edge_colored_[ei];
            --edge_count_[ei * k_ + c];
        }
        color_[v] = kUncolored;
    }

    // Depth-first search from position `pos` of the branching order.
    bool search(std::size_t pos) {
        if (pos == order_.size())
            return true;
        const VertexId v = order_[pos];
        const std::size_t limit = pos == 0 ? 1 : k_;
        for (std::uint32_t c = 0; c < limit; ++c) {
            if (!allowed(v, c))
                continue;
            if (stop_.load(std::memory_order_relaxed) ||
                nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
                aborted_ = true;
                return false;
            }
            const bool ok = assign(v, c);
            if (ok && search(pos + 1))
                return true;
            unassign(v, c);
            if (aborted_)
                return false;
        }
        return false;
    }

private:
    VertexId uncolored_in(std::size_t ei) const {
        for (VertexId u : h_.edge(ei))
            if (color_[u] == kUncolored)
                return u;
        return kUncolored;  // unreachable: edge_colored < r
    }

    const Hypergraph& h_;
    std::size_t k_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& nodes_;
    const std::atomic<bool>& stop_;
    std::vector<VertexId> order_;
    std::vector<std::uint32_t> color_;
    std::vector<std::uint32_t> forbid_;
    std::vector<std::size_t> allowed_;
    std::vector<std::uint32_t> edge_colored_;
    std::vector<std::uint32_t> edge_count_;
    bool aborted_ = false;
};

ColorSearch finish(std::vector<std::uint32_t> colors, std::size_t k, std::uint64_t nodes) {
    return {SearchStatus::kColorable, Coloring(std::move(colors), k), nodes};
}

ColorSearch search_parallel(const Hypergraph& h, std::size_t k, std::size_t width,
                            const SolverOptions& opts) {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    Backtracker probe(h, width, opts.node_budget, nodes, stop);
    const auto& order = probe.order();
    if (order.size() < 2) {
        bool ok = probe.search(0);
        return ok ? finish(probe.colors(), k, nodes.load())
                  : ColorSearch{SearchStatus::kNotColorable, std::nullopt, nodes.load()};
    }

    // One task per colour of the second branching vertex.
    std::vector<std::future<std::pair<bool, Backtracker>>> tasks;
    for (std::uint32_t c = 0; c < width; ++c) {
        tasks.push_back(std::async(std::launch::async, [&, c] {
            Backtracker bt(h, width, opts.node_budget, nodes, stop);
            nodes.fetch_add(2, std::memory_order_relaxed);
            bool ok = bt.assign(bt.order()[0], 0);
            if (ok && bt.allowed(bt.order()[1], c))
                ok = bt.assign(bt.order()[1], c) && bt.search(2);
            else
                ok = false;
            if (ok)
                stop.store(true);
            return std::pair<bool, Backtracker>(ok, std::move(bt));
        }));
    }
    std::optional<std::vector<std::uint32_t>> witness;
    bool aborted = false;
    for (auto& t : tasks) {
        auto [ok, bt] = t.get();
        if (ok && !witness)
            witness = bt.colors();
        aborted = aborted || bt.aborted();
    }
    if (witness)
        return finish(std::move(*witness), k, nodes.load());
    return {aborted ? SearchStatus::kBudgetExceeded : SearchStatus::kNotColorable, std::nullopt,
            nodes.load()};
}

}  // namespace

ColorSearch k_colorable(const Hypergraph& h, std::size_t k, const SolverOptions& opts) {
    if (k < 1)
        throw InputError("k must be at least 1");
    const std::size_t n = h.num_vertices();
    // No colouring of n vertices needs more than n colours.
    const std::size_t width = std::min(k, std::max<std::size_t>(n, 1));

    if (opts.parallel && width > 1)
        return search_parallel(h, k, width, opts);

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    Backtracker bt(h, width, opts.node_budget, nodes, stop);
    if (bt.search(0))
        return finish(bt.colors(), k, nodes.load());
    return {bt.aborted() ? SearchStatus::kBudgetExceeded : SearchStatus::kNotColorable,
            std::nullopt, nodes.load()};
}

Coloring optimal_coloring(const Hypergraph& h, std::size_t kmax, const SolverOptions& opts) {
    if (kmax < 1)
        throw InputError("kmax must be at least 1");
    for (std::size_t k = 1; k <= kmax; ++k) {
        auto res = k_colorable(h, k, opts);
        if (res.status == SearchStatus::kBudgetExceeded)
            throw BudgetExceeded(opts.node_budget);
        if (res.status == SearchStatus::kColorable)
            return Coloring(res.coloring->colors(), k);
    }
    throw BoundExceeded(kmax);
}

std::size_t chromatic_number(const Hypergraph& h, std::size_t kmax, const SolverOptions& opts) {
    return optimal_coloring(h, kmax, opts).palette();
}

namespace {

struct ClassSizeSearch {
    const Hypergraph& h;
    std::size_t k;
    std::uint64_t budget;
    std::vector<std::vector<std::uint32_t>> closing;  // edges whose largest vertex is v
    std::vector<std::uint32_t> color;
    std::vector<std::size_t> count;
    std::uint64_t nodes = 0;
    std::optional<std::size_t> best;

    ClassSizeSearch(const Hypergraph& g, std::size_t colours, std::uint64_t node_budget)
        : h(g), k(colours), budget(node_budget), closing(g.num_vertices()),
          color(g.num_vertices(), 0), count(colours, 0) {
        for (std::size_t i = 0; i < g.num_edges(); ++i)
            closing[g.edge(i).back()].push_back(static_cast<std::uint32_t>(i));
    }

    bool completes_monochromatic(VertexId v, std::uint32_t c) const {
        for (auto ei : closing[v]) {
            auto e = h.edge(ei);
            if (std::all_of(e.begin(), e.end() - 1, [&](VertexId u) { return color[u] == c; }))
                return true;
        }
        return false;
    }

    void run(VertexId v) {
        if (best && *best == 0)
            return;
        // Class sizes only grow, so the current minimum bounds the branch below.
        if (best && *std::ranges::min_element(count) >= *best)
            return;
        if (v == h.num_vertices()) {
            best = *std::ranges::min_element(count);
            return;
        }
        for (std::uint32_t c = 0; c < k; ++c) {
            if (++nodes > budget)
                throw BudgetExceeded(budget);
            if (completes_monochromatic(v, c))
                continue;
            color[v] = c;
            ++count[c];
            run(v + 1);
            --count[c];
        }
    }
};

}  // namespace

std::optional<std::size_t> min_color_class_size(const Hypergraph& h, std::size_t k,
                                                std::uint64_t node_budget) {
    if (k < 1)
        throw InputError("k must be at least 1");
    ClassSizeSearch s(h, k, node_budget);
    s.run(0);
    return s.best;
}

}  // namespace hypercol
