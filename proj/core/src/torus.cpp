#include "stag/torus.hpp"

#include <algorithm>
#include <map>

#include "stag/errors.hpp"
#include "stag/exact_linalg.hpp"

namespace stag {

namespace {

// Subsets of {0..c-1} as bitmasks; basis element order within a Koszul term
// is ascending bitmask.
std::vector<std::vector<unsigned>> subsets_by_size(int c, unsigned required) {
    std::vector<std::vector<unsigned>> by_size(static_cast<std::size_t>(c) + 1);
    for (unsigned s = 0; s < (1u << c); ++s) {
        if ((s & required) != required) continue;
        by_size[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
    }
    return by_size;
}

int koszul_sign(unsigned subset, int j) {
    // (-1)^{number of members below j}
    const unsigned below = subset & ((1u << j) - 1u);
    return (__builtin_popcount(below) % 2 == 0) ? 1 : -1;
}

} // namespace

void AffineModel::validate() const {
    if (cut < 0 || cut > n())
        throw UsageError("affine model: cut index out of range");
    for (std::size_t i = 1; i < weights.size(); ++i)
        if (weights[i].rank() != weights[0].rank())
            throw UsageError("affine model: weights of mixed rank");
}

std::vector<LatticeVector> conormal_weights(const AffineModel& model) {
    model.validate();
    std::vector<LatticeVector> out;
    out.reserve(static_cast<std::size_t>(model.n() - model.m()));
    for (int j = model.m(); j < model.n(); ++j) out.push_back(-model.weights[j]);
    std::sort(out.begin(), out.end());
    return out;
}

ShriekTwist shriek_twist(const AffineModel& model, const LatticeVector& mu) {
    model.validate();
    ShriekTwist out{mu, model.m() - model.n()};
    for (int j = model.m(); j < model.n(); ++j) out.weight += model.weights[j];
    return out;
}

std::vector<GradedPiece> koszul_oracle(const AffineModel& model,
                                       const LatticeVector& mu) {
    model.validate();
    const int c = model.n() - model.m();
    if (c > kKoszulGuard)
        throw GuardError("koszul_oracle: n - m = " + std::to_string(c) +
                         " exceeds guard " + std::to_string(kKoszulGuard));

    // Weight bookkeeping: the torus acts on the line k*x_i with weight
    // -lambda_i, so the monomial x_i has weight -lambda_i as a generator.
    // The dual generator carried by a removed subset S contributes
    // +sum_{j in S} lambda_j on top of the twist mu.
    std::vector<std::int64_t> hline(static_cast<std::size_t>(c) + 1, 0);

    for (unsigned required = 0; required < (1u << c); ++required) {
        const auto by_size = subsets_by_size(c, required);
        const int kmin = __builtin_popcount(required);
        // Differential from term k to term k+1: wedge with each missing
        // generator, coefficient the Koszul sign.
        std::vector<int> ranks(static_cast<std::size_t>(c) + 1, 0);
        for (int k = kmin; k < c; ++k) {
            const auto& src = by_size[static_cast<std::size_t>(k)];
            const auto& dst = by_size[static_cast<std::size_t>(k) + 1];
            if (src.empty() || dst.empty()) continue;
            std::map<unsigned, int> dst_pos;
            for (int i = 0; i < static_cast<int>(dst.size()); ++i) dst_pos[dst[i]] = i;
            IntMatrix mat(dst.size(), std::vector<Int>(src.size(), 0));
            for (int scol = 0; scol < static_cast<int>(src.size()); ++scol) {
                const unsigned s = src[static_cast<std::size_t>(scol)];
                for (int j = 0; j < c; ++j) {
                    if (s & (1u << j)) continue;
                    mat[static_cast<std::size_t>(dst_pos.at(s | (1u << j)))]
                       [static_cast<std::size_t>(scol)] = koszul_sign(s, j);
                }
            }
            ranks[static_cast<std::size_t>(k)] = rank_bareiss(std::move(mat));
        }
        for (int k = kmin; k <= c; ++k) {
            const auto dim = static_cast<std::int64_t>(
                by_size[static_cast<std::size_t>(k)].size());
            const std::int64_t rk_out = ranks[static_cast<std::size_t>(k)];
            const std::int64_t rk_in = k > kmin ? ranks[static_cast<std::size_t>(k) - 1] : 0;
            const std::int64_t h = dim - rk_out - rk_in;
            if (h < 0) throw OracleError("negative cohomology dimension");
            if (h == 0) continue;
            if (required == (1u << c) - 1u) {
                hline[static_cast<std::size_t>(k)] += h;
            } else {
                throw OracleError(
                    "Koszul cohomology appears in an exact component (exponent "
                    "set " + std::to_string(required) + ", degree " +
                    std::to_string(k) + ")");
            }
        }
    }

    for (int k = 0; k <= c; ++k) {
        const std::int64_t h = hline[static_cast<std::size_t>(k)];
        if (k == c) {
            if (h != 1)
                throw OracleError("top Koszul cohomology has rank " +
                                  std::to_string(h) + ", expected 1");
        } else if (h != 0) {
            throw OracleError("Koszul cohomology in unexpected degree " +
                              std::to_string(k));
        }
    }

    GradedPiece piece{mu, 1, c};
    for (int j = model.m(); j < model.n(); ++j) piece.weight += model.weights[j];
    return {piece};
}

std::vector<LatticeVector> conormal_oracle(const AffineModel& model) {
    model.validate();
    const int n = model.n();
    const int m = model.m();
    if (n - m > kKoszulGuard)
        throw GuardError("conormal_oracle: n - m exceeds guard");

    // Monomial slice of the ideal (x_{m+1}..x_n) up to total degree 2:
    //   degree 1 in the removed variables:      x_j
    //   removed x removed:                      x_i x_j   (i <= j, both removed)
    //   subring x removed:                      x_a x_j   (a < m <= j)
    // I^2 is spanned by the removed-x-removed monomials; multiples by the
    // subring maximal ideal by the mixed ones.  Generators of I/I^2 over
    // the subring are the non-pivot columns after eliminating both spans.
    struct Monomial { int a, b; }; // factor indices, a == -1 for degree one
    std::vector<Monomial> cols;
    std::vector<Monomial> killers;
    for (int j = m; j < n; ++j) cols.push_back({-1, j});
    for (int i = m; i < n; ++i)
        for (int j = i; j < n; ++j) {
            cols.push_back({i, j});
            killers.push_back({i, j});
        }
    for (int a = 0; a < m; ++a)
        for (int j = m; j < n; ++j) {
            cols.push_back({a, j});
            killers.push_back({a, j});
        }

    IntMatrix mat(killers.size(), std::vector<Int>(cols.size(), 0));
    auto col_of = [&](const Monomial& k) {
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (cols[c].a == k.a && cols[c].b == k.b) return c;
        throw InvariantError("killer monomial missing from slice");
    };
    for (std::size_t r = 0; r < killers.size(); ++r) mat[r][col_of(killers[r])] = 1;

    // Column elimination: surviving (non-pivot) columns form a basis of the
    // quotient.  With this monomial basis the matrix is a subpermutation,
    // but the pivots are still found by elimination, not by assumption.
    IntMatrix work = mat;
    std::vector<char> pivot(cols.size(), 0);
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols.size() && row < work.size(); ++c) {
        std::size_t p = row;
        while (p < work.size() && work[p][c] == 0) ++p;
        if (p == work.size()) continue;
        std::swap(work[row], work[p]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == row || work[r][c] == 0) continue;
            const Int f = work[r][c];
            for (std::size_t cc = 0; cc < cols.size(); ++cc)
                work[r][cc] = work[r][cc] * work[row][c] - f * work[row][cc];
        }
        pivot[c] = 1;
        ++row;
    }

    std::vector<LatticeVector> out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (pivot[c]) continue;
        const Monomial& mon = cols[c];
        if (mon.a != -1)
            throw OracleError("conormal generator of unexpected degree");
        // Generator weight: the monomial x_j carries weight -lambda_j.
        out.push_back(-model.weights[mon.b]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AffineModel affine_model_for_cell(const RootSystem& rs, const WeylElement& w,
                                  const ParabolicData& p) {
    const CellStructure cs = cell_structure(rs, w, p);
    AffineModel model;
    model.cut = static_cast<int>(cs.cell_roots.size());
    for (const int idx : cs.cell_roots) model.weights.push_back(rs.root_vector(idx));
    for (const int idx : cs.open_nbhd_extra_roots)
        model.weights.push_back(rs.root_vector(idx));
    model.validate();
    return model;
}

} // namespace stag
