#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hypercol {

/// 0-based vertex index, dense in [0, n).
using VertexId = std::uint32_t;
/// Edge as a strictly increasing list of vertex ids.
using Edge = std::vector<VertexId>;

/// Immutable r-uniform hypergraph with a canonical, lexicographically sorted
/// and deduplicated edge list plus a vertex -> incident-edge index.
class Hypergraph {
public:
    /// Edgeless hypergraph on zero vertices with uniformity 2.
    Hypergraph() : Hypergraph(0, 2, {}) {}

    /// Validates and canonicalises `edges`. Each edge is sorted; repeated
    /// vertices within an edge, sizes other than r, and ids >= n are
    /// InputErrors. Duplicate edges are dropped and counted.
    Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size() / r_; }
    std::size_t uniformity() const noexcept { return r_; }

    std::span<const VertexId> edge(std::size_t i) const {
        return {edges_.data() + i * r_, r_};
    }

    /// Indices of the edges containing v, ascending.
    std::span<const std::uint32_t> incident(VertexId v) const {
        return {incidence_.data() + incidence_offsets_[v],
                incidence_.data() + incidence_offsets_[v + 1]};
    }

    /// Index of the edge equal to `e` (sorted), or -1.
    std::ptrdiff_t find_edge(std::span<const VertexId> e) const;

    /// Number of duplicate edges dropped while canonicalising the input.
    std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) noexcept {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::size_t r_;
    std::vector<VertexId> edges_;  // flat, m * r
    std::vector<std::uint32_t> incidence_;
    std::vector<std::size_t> incidence_offsets_;
    std::size_t duplicates_dropped_ = 0;
};

/// Total assignment of colours in [0, k) to the vertices of a hypergraph.
class Coloring {
public:
    Coloring() = default;
    /// Throws InputError if some entry is >= k.
    Coloring(std::vector<std::uint32_t> colors, std::size_t k);

    /// Palette size is one more than the largest colour used.
    static Coloring from_colors(std::vector<std::uint32_t> colors);

    std::size_t size() const noexcept { return colors_.size(); }
    std::size_t palette() const noexcept { return k_; }
    std::uint32_t operator[](VertexId v) const { return colors_[v]; }
    const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

    /// Number of distinct colours that actually occur.
    std::size_t num_used() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<std::uint32_t> colors_;
    std::size_t k_ = 0;
};

std::size_t degree(const Hypergraph& h, VertexId v);

/// Subhypergraph induced by `keep`, relabelled densely in increasing id order.
Hypergraph induced(const Hypergraph& h, std::span<const VertexId> keep);

/// True iff no edge is monochromatic. InputError unless c covers every vertex.
bool is_proper(const Hypergraph& h, const Coloring& c);

/// All C(n, r) r-subsets of [0, n).
Hypergraph complete_uniform(std::size_t n, std::size_t r);

}  // namespace hypercol
