#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stag/lattice_vector.hpp"

namespace stag {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Parse a label like "A3", "F4", "G2".  Throws UsageError on anything else.
std::pair<LieType, int> parse_type_label(const std::string& label);
std::string type_label(LieType t, int rank);

/// A finite irreducible root system, built from its Cartan matrix.
///
/// Coordinates are in the simple-root basis throughout.  The invariant form
/// is B = diag(d_i) * cartan, normalized so that every short root has
/// squared length 2; with this choice every pairing of root-lattice and
/// weight-lattice elements is an integer.
///
/// Positive roots come first in the canonical root order, sorted by height
/// then lexicographically; root index p + positive_count() is the negative
/// of root index p.  Immutable after construction.
class RootSystem {
public:
    static RootSystem build(LieType t, int rank);
    static RootSystem build(const std::string& label);

    LieType lie_type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const { return type_label(type_, rank_); }

    /// Cartan matrix entries a[i][j] = <alpha_i^vee, alpha_j>.
    const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
    /// Symmetrizers d_i = <alpha_i,alpha_i>/2 (minimal positive integers).
    const std::vector<std::int64_t>& symmetrizers() const { return sym_; }

    int root_count() const { return static_cast<int>(roots_.size()); }
    int positive_count() const { return positive_count_; }

    const RootCoords& root_coords(int idx) const { return roots_[idx]; }
    LatticeVector root_vector(int idx) const {
        return LatticeVector::from_coords(roots_[idx], rank_);
    }
    /// Index of a root in the canonical order, or -1 if not a root.
    int find_root(const RootCoords& c) const;
    bool is_positive(int idx) const { return idx < positive_count_; }
    int negated(int idx) const {
        return idx < positive_count_ ? idx + positive_count_ : idx - positive_count_;
    }
    /// Index of simple root alpha_i (0-based i) among the positive roots.
    int simple_root_index(int i) const { return simple_index_[i]; }
    std::int64_t height(int idx) const;

    const RootCoords& two_rho_coords() const { return two_rho_; }
    LatticeVector two_rho() const { return LatticeVector::from_coords(two_rho_, rank_); }

    // -- invariant bilinear form ------------------------------------------

    /// Exact pairing <x,y>.  Symmetric; integral whenever one side is in
    /// the root lattice and the other in the weight lattice (asserted).
    Rational pairing(const LatticeVector& x, const LatticeVector& y) const;
    /// Integer fast path for root-lattice data (roots, tau sums, 2rho).
    std::int64_t pairing_ii(const RootCoords& x, const RootCoords& y) const;

    /// 2<alpha,x>/<alpha,alpha>; alpha must be a nonzero vector.
    Rational coroot_pairing(const LatticeVector& alpha, const LatticeVector& x) const;
    std::int64_t coroot_pairing_ii(int root_idx, const RootCoords& x) const;
    std::int64_t root_norm(int idx) const; // <alpha,alpha>

    bool in_root_lattice(const LatticeVector& v) const;
    bool in_weight_lattice(const LatticeVector& v) const;

    /// Fundamental weight omega_i in simple-root coordinates (rational).
    const LatticeVector& fundamental_weight(int i) const { return fundamental_[i]; }
    /// Coordinates of v in the fundamental-weight basis: <alpha_i^vee, v>.
    std::vector<Rational> to_fundamental(const LatticeVector& v) const;
    LatticeVector from_fundamental(const std::vector<Rational>& c) const;

private:
    RootSystem() = default;
    void enumerate_roots();
    void validate() const;

    LieType type_{};
    int rank_ = 0;
    std::vector<std::vector<std::int64_t>> cartan_;
    std::vector<std::int64_t> sym_;
    std::vector<RootCoords> roots_;      // positives then negatives
    int positive_count_ = 0;
    std::vector<int> simple_index_;
    RootCoords two_rho_{};
    std::vector<LatticeVector> fundamental_;
    std::vector<std::pair<RootCoords, int>> index_; // sorted for lookup
};

/// Number of elements of the Weyl group, from the classical order formulas.
boost::multiprecision::cpp_int weyl_group_order(LieType t, int rank);

} // namespace stag
