#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypercol/errors.hpp"
#include "hypercol/hypergraph.hpp"

namespace hypercol {

using BigInt = boost::multiprecision::cpp_int;

struct ConstructionParams {
    std::size_t r = 2;
    std::size_t d = 1;
};

/// Exact sizes of G_d for uniformity r. num_s counts the S-sets added by the
/// last inductive step (0 for the base).
struct ConstructionStats {
    BigInt vertices;
    BigInt edges;
    BigInt num_s;
};

/// Default refusal threshold on predicted vertices + edges.
inline const BigInt kDefaultSizeCap{1000000};

/// Thrown when the predicted instance is larger than the permitted cap.
class SizeRefused : public std::runtime_error {
public:
    SizeRefused(ConstructionStats predicted, BigInt cap);

    const ConstructionStats& predicted() const noexcept { return predicted_; }
    const BigInt& cap() const noexcept { return cap_; }

private:
    ConstructionStats predicted_;
    BigInt cap_;
};

/// Where a vertex of G_d came from. Base vertices of G_1 are kBase.
struct VertexProvenance {
    enum class Kind : std::uint8_t { kBase, kCopy, kNew };

    Kind kind = Kind::kBase;
    std::uint64_t a = 0;  // kCopy: copy index; kNew: S-set index
    std::uint64_t b = 0;  // kCopy: vertex id inside the copy; kNew: j in [1, r-1]

    static VertexProvenance base() { return {}; }
    static VertexProvenance copy(std::uint64_t copy_index, VertexId inner) {
        return {Kind::kCopy, copy_index, inner};
    }
    static VertexProvenance fresh(std::uint64_t s_index, std::uint64_t j) {
        return {Kind::kNew, s_index, j};
    }

    friend bool operator==(const VertexProvenance&, const VertexProvenance&) = default;
};

struct Construction {
    Hypergraph graph;
    std::vector<VertexProvenance> provenance;  // one entry per vertex
};

ConstructionStats predict_sizes(std::size_t r, std::size_t d);

/// G_1: r(r-1) vertices on a path, one edge per window of r consecutive vertices.
Hypergraph build_base(std::size_t r);

/// One inductive step: d+r-2 disjoint copies of `prev` (which must be the
/// (r, d-1) instance) plus r-1 new vertices per S-set, S-sets visited in
/// canonical order. Refuses with SizeRefused when the result would exceed
/// `cap` vertices + edges.
Construction extend(const Hypergraph& prev, std::size_t r, std::size_t d,
                    const BigInt& cap = kDefaultSizeCap);

/// G_d, built from the base by repeated extension. Checks the cap against
/// predict_sizes before doing any work.
Construction build_with_provenance(ConstructionParams params,
                                   const BigInt& cap = kDefaultSizeCap);

Hypergraph build(ConstructionParams params, const BigInt& cap = kDefaultSizeCap);

/// Sidecar text: one `v <id> BASE|COPY <copy> <inner-id>|NEW <s-index> <j>`
/// line per vertex. Vertex ids are 1-based like the hgr format.
void write_provenance(std::ostream& out, const std::vector<VertexProvenance>& prov);
std::vector<VertexProvenance> parse_provenance(std::istream& in);

}  // namespace hypercol
