#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stag/inversions.hpp"

namespace stag {

/// One Schubert stratum: the coset wW_L with both distinguished
/// representatives and its staggered codimension.
struct OrbitNode {
    WeylElement min_rep;
    WeylElement max_rep;
    std::int64_t scod = 0;
    int cell_dim = 0;
};

/// Orbit closures ordered by inclusion.  Nodes are sorted by
/// (cell dimension, canonical word of the minimal representative); covers
/// are the transitive reduction of the closure order.  Built posets carry
/// the coset data; synthetic posets (for boundary-case tests) carry only
/// scod values and labels.
class OrbitPoset {
public:
    static OrbitPoset build(const RootSystem& rs, const ParabolicData& p,
                            std::uint64_t cap = kDefaultGroupCap);
    /// Poset from raw decoration; covers as (below, above) index pairs.
    static OrbitPoset synthetic(std::vector<std::int64_t> scods,
                                std::vector<std::pair<int, int>> covers,
                                std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(scods_.size()); }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::int64_t scod_of(int i) const { return scods_[i]; }
    const std::string& label(int i) const { return labels_[i]; }

    /// true iff the closure of node a is contained in the closure of node b.
    bool leq(int a, int b) const;
    /// Nodes strictly above a (larger closures), ascending.
    std::vector<int> strictly_above(int a) const;

    bool has_nodes() const { return !nodes_.empty(); }
    const std::vector<OrbitNode>& nodes() const { return nodes_; }
    const RootSystem& system() const;
    const ParabolicData& parabolic() const;

private:
    OrbitPoset() = default;
    void close_upward();

    const RootSystem* sys_ = nullptr;
    std::optional<ParabolicData> parab_;
    std::vector<OrbitNode> nodes_;
    std::vector<std::int64_t> scods_;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_; // (below, above)
    std::vector<std::vector<std::uint64_t>> above_; // reachability bitsets
};

struct GapViolation {
    int below = 0, above = 0;
    std::int64_t scod_below = 0, scod_above = 0;
    std::string what; // "gap" or "monotone"
};

struct GapCheckResult {
    std::uint64_t cover_pairs = 0;
    std::uint64_t comparable_pairs = 0;
    std::vector<std::int64_t> cover_gaps; // sorted ascending
    std::vector<GapViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// scod must strictly decrease along the closure order and every
/// comparable pair must differ by at least 2.  All comparable pairs are
/// checked (reachability is precomputed), not just covers.
GapCheckResult check_codim_gaps(const OrbitPoset& poset);

/// An integer function on the strata.  Valid when, for every comparable
/// pair v < w, 0 < p(v) - p(w) < scod(v) - scod(w) (both p and scod - p
/// strictly increase going down the closure order).
struct Perversity {
    std::vector<std::int64_t> values;
};

/// The floor(scod/2) perversity; verifies the strict sandwich on every
/// comparable pair before returning and throws InvariantError with a
/// witness if it fails (it cannot, once check_codim_gaps passed).
Perversity build_perversity(const OrbitPoset& poset);

/// Coordinate box in the fundamental-weight basis, one [lo, hi] per
/// simple root.
struct WeightBox {
    std::vector<std::pair<std::int64_t, std::int64_t>> bounds;

    static WeightBox zero(int rank) {
        return WeightBox{std::vector<std::pair<std::int64_t, std::int64_t>>(
            static_cast<std::size_t>(rank), {0, 0})};
    }
    static WeightBox cube(int rank, std::int64_t lo, std::int64_t hi) {
        return WeightBox{std::vector<std::pair<std::int64_t, std::int64_t>>(
            static_cast<std::size_t>(rank), {lo, hi})};
    }
    std::uint64_t volume() const;
};

struct BasisLabel {
    int node = 0;
    std::vector<std::int64_t> weight_fundamental; // integer coordinates
    LatticeVector weight;                         // simple-root coordinates
};

/// Labels of the simple objects spanning the equivariant K-group: one per
/// (stratum, weight in the box), deterministic order, no duplicates.
std::vector<BasisLabel> enumerate_basis_labels(const OrbitPoset& poset,
                                               const WeightBox& box);

} // namespace stag
