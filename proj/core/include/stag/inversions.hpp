#pragma once

#include <cstdint>
#include <vector>

#include "stag/weyl.hpp"

namespace stag {

/// Inversion data of a Weyl group element relative to a parabolic.
///
/// psi_same = Phi+ ∩ w(Phi+)            psi_same_L = Phi+ ∩ w(Phi+ \ Phi_L)
/// psi_opp  = Phi+ ∩ w(Phi-)            psi_opp_L  = Phi+ ∩ w(Phi- \ Phi_L)
///
/// The psi sets are stored as sorted positive-root indices into the root
/// system's canonical order; each tau is the coordinate sum of its set.
struct InversionProfile {
    std::vector<int> psi_same, psi_opp, psi_same_L, psi_opp_L;
    LatticeVector tau_same, tau_opp, tau_same_L, tau_opp_L;
};

/// Same data with raw int64 tau coordinates; the fast path for sweeps.
struct InversionProfileRaw {
    std::vector<int> psi_same, psi_opp, psi_same_L, psi_opp_L;
    RootCoords tau_same{}, tau_opp{}, tau_same_L{}, tau_opp_L{};
};

InversionProfileRaw profile_raw(const RootSystem& rs, const WeylElement& w,
                                const ParabolicData& p);
InversionProfile profile(const RootSystem& rs, const WeylElement& w,
                         const ParabolicData& p);

/// Degree of the twist O(lambda) on a Bruhat cell: <lambda, -2rho>.
/// Must be an integer for weight-lattice input (InvariantError otherwise).
std::int64_t cell_degree(const RootSystem& rs, const LatticeVector& lambda);
std::int64_t cell_degree_ii(const RootSystem& rs, const RootCoords& lambda);

/// Affine coordinates of a Bruhat cell and of its open neighborhood:
/// the cell is spanned by the root lines of psi_opp_L(w); the neighborhood
/// adds the lines of -psi_same_L(w).  Indices into the full root list.
struct CellStructure {
    std::vector<int> cell_roots;             // positive root indices
    std::vector<int> open_nbhd_extra_roots;  // negative root indices
};

CellStructure cell_structure(const RootSystem& rs, const WeylElement& w,
                             const ParabolicData& p);

/// Torus weights of the restricted ideal sheaf on the cell of a
/// maximal-length coset representative: one copy of O(alpha) per
/// alpha in psi_same_L(w).  Requires w maximal in wW_L.
std::vector<LatticeVector> ideal_restriction_weights(const RootSystem& rs,
                                                     const WeylElement& w,
                                                     const ParabolicData& p);

/// Staggered codimension of the Schubert variety of wW_L:
/// |Phi+| - l(w*) + <tau_same(w*), 2rho> for w* the maximal coset
/// representative.  Depends only on the coset.
std::int64_t scod(const RootSystem& rs, const WeylElement& w, const ParabolicData& p);

/// Same value computed without passing to the maximal representative:
/// codim + <tau_same_L(w), 2rho>, with codim = |Phi+ \ Phi_L| - |psi_opp_L(w)|.
std::int64_t scod_via_cell(const RootSystem& rs, const WeylElement& w,
                           const ParabolicData& p);

/// One row of the scod table for a coset.
struct ScodRow {
    std::vector<int> min_word, max_word; // 0-based letters
    int length = 0;                      // l(max rep)
    std::int64_t codim = 0;
    std::int64_t tau_same_L_two_rho = 0;
    std::int64_t scod = 0;
};

std::vector<ScodRow> scod_table(const RootSystem& rs, const ParabolicData& p,
                                std::uint64_t cap = kDefaultGroupCap);

} // namespace stag
