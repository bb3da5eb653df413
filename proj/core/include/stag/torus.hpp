#pragma once

#include <cstdint>
#include <vector>

#include "stag/inversions.hpp"
#include "stag/lattice_vector.hpp"

namespace stag {

/// Guard on the number of removed coordinates in the Koszul oracle
/// (exterior powers grow as 2^(n-m)).
inline constexpr int kKoszulGuard = 8;

/// A torus action on affine n-space, with coordinate-line weights
/// lambda_1..lambda_n, together with the inclusion of the subspace
/// spanned by the first m coordinates.
struct AffineModel {
    std::vector<LatticeVector> weights;
    int cut = 0; // m, with 0 <= m <= n

    int n() const { return static_cast<int>(weights.size()); }
    int m() const { return cut; }
    void validate() const;
};

/// One summand of a graded answer: a free rank-`dimension` module of the
/// given torus weight sitting in the given homological degree.
struct GradedPiece {
    LatticeVector weight;
    std::int64_t dimension = 0;
    int homological_degree = 0;
};

/// Closed form for the restricted conormal module: the weight multiset
/// {-lambda_{m+1}, ..., -lambda_n}, kept sorted with multiplicity.
std::vector<LatticeVector> conormal_weights(const AffineModel& model);

struct ShriekTwist {
    LatticeVector weight;
    int shift = 0; // m - n
};

/// Closed form for the shriek-pullback of the twisted structure sheaf:
/// weight mu + lambda_{m+1} + ... + lambda_n, homological shift m - n.
ShriekTwist shriek_twist(const AffineModel& model, const LatticeVector& mu);

/// Independent recomputation of shriek_twist from the dual Koszul complex
/// on the removed coordinates.  Splits the complex by multidegree in the
/// removed variables; a component's matrices depend only on the set of
/// exponents equal to -1, so the 2^(n-m) such sets cover every graded
/// piece.  Each component is checked by exact fraction-free rank
/// computation.  Contract: exactly one nonzero cohomological degree, n-m,
/// carrying a free rank-one module of weight mu + sum of removed lambdas.
/// Throws GuardError if n-m exceeds the guard, OracleError if cohomology
/// appears anywhere else.
std::vector<GradedPiece> koszul_oracle(const AffineModel& model,
                                       const LatticeVector& mu);

/// Independent recomputation of conormal_weights: generators of I/I^2 over
/// the subring, extracted by exact elimination on monomial slices of the
/// ideal modulo products and subring multiples.
std::vector<LatticeVector> conormal_oracle(const AffineModel& model);

/// The affine model of the open neighborhood of a Bruhat cell: cell
/// directions first (weights = roots of psi_opp_L), then the extra
/// directions (weights = negated psi_same_L roots); cut at the cell.
AffineModel affine_model_for_cell(const RootSystem& rs, const WeylElement& w,
                                  const ParabolicData& p);

} // namespace stag
