#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypercol/errors.hpp"
#include "hypercol/hypergraph.hpp"

namespace hypercol {

/// Removal sequence with the residual degree of each vertex at the moment it
/// was removed.
struct EliminationOrder {
    std::vector<VertexId> order;
    std::vector<std::size_t> step_degrees;

    std::size_t bound() const;
};

struct DegeneracyResult {
    std::size_t degeneracy = 0;
    EliminationOrder order;
};

/// Smallest D such that h is D-degenerate, via repeated removal of a
/// minimum-degree vertex (lowest id on ties).
DegeneracyResult degeneracy(const Hypergraph& h);

bool is_d_degenerate(const Hypergraph& h, std::size_t d);

/// Recomputes step degrees from scratch. True iff `ord.order` is a
/// permutation of the vertices and every stored step degree matches.
bool check_elimination_order(const Hypergraph& h, const EliminationOrder& ord);

struct TriangleCertificate {
    std::array<std::size_t, 3> edge_indices{};
    std::vector<VertexId> vertices;  // the r+1 vertex union, ascending

    friend bool operator==(const TriangleCertificate&, const TriangleCertificate&) = default;
};

/// Lexicographically first (a < b < c) triple of edges whose union has r+1 vertices.
std::optional<TriangleCertificate> find_triangle(const Hypergraph& h);

/// Colours in reverse elimination order, each vertex taking the smallest colour
/// not completing a monochromatic edge. Uses at most ord.bound() + 1 colours.
/// InputError if `ord` fails check_elimination_order.
Coloring greedy_color(const Hypergraph& h, const EliminationOrder& ord);

struct SolverOptions {
    std::uint64_t node_budget = 100'000'000;
    /// Split the search below the first branching vertex across threads.
    /// Same decision as sequential mode; the witness may differ.
    bool parallel = false;
};

/// kUnknown is only produced by external solvers that give up.
enum class SearchStatus { kColorable, kNotColorable, kBudgetExceeded, kUnknown };

struct ColorSearch {
    SearchStatus status = SearchStatus::kNotColorable;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

/// Exact backtracking decision of k-colourability. Vertices are branched in
/// descending degree order; an edge whose other vertices share colour c forbids
/// c on its last vertex; the first branched vertex is fixed to colour 0.
ColorSearch k_colorable(const Hypergraph& h, std::size_t k, const SolverOptions& opts = {});

/// Smallest k <= kmax admitting a proper colouring. Throws BoundExceeded or
/// BudgetExceeded.
std::size_t chromatic_number(const Hypergraph& h, std::size_t kmax,
                             const SolverOptions& opts = {});

/// Like chromatic_number, returning an optimal colouring as well.
Coloring optimal_coloring(const Hypergraph& h, std::size_t kmax, const SolverOptions& opts = {});

/// Minimum over all proper k-colourings of the smallest colour class (empty
/// classes count as size 0); nullopt when no proper k-colouring exists.
/// Exhaustive. Throws BudgetExceeded after `node_budget` search nodes.
std::optional<std::size_t> min_color_class_size(const Hypergraph& h, std::size_t k,
                                                std::uint64_t node_budget = 100'000'000);

}  // namespace hypercol
