#include "stag/inversions.hpp"

#include <algorithm>

#include "stag/errors.hpp"

namespace stag {

namespace {

bool coords_positive(const RootCoords& c, int rank) {
    for (int i = 0; i < rank; ++i) {
        if (c[i] > 0) return true;
        if (c[i] < 0) return false;
    }
    throw InvariantError("zero vector is not a root");
}

void negate(RootCoords& c, int rank) {
    for (int i = 0; i < rank; ++i) c[i] = -c[i];
}

void add_to(RootCoords& acc, const RootCoords& c, int rank) {
    for (int i = 0; i < rank; ++i) acc[i] += c[i];
}

} // namespace

InversionProfileRaw profile_raw(const RootSystem& rs, const WeylElement& w,
                                const ParabolicData& p) {
    const int rank = rs.rank();
    InversionProfileRaw out;
    for (int b = 0; b < rs.positive_count(); ++b) {
        RootCoords y = w.apply(rs.root_coords(b));
        const bool image_positive = coords_positive(y, rank);
        if (!image_positive) negate(y, rank);
        const int yi = rs.find_root(y);
        if (yi < 0) throw InvariantError("image of a root is not a root");
        const bool b_in_L = p.contains_root(b);
        if (image_positive) {
            out.psi_same.push_back(yi);
            add_to(out.tau_same, y, rank);
            if (!b_in_L) {
                out.psi_same_L.push_back(yi);
                add_to(out.tau_same_L, y, rank);
            }
        } else {
            out.psi_opp.push_back(yi);
            add_to(out.tau_opp, y, rank);
            if (!b_in_L) {
                out.psi_opp_L.push_back(yi);
                add_to(out.tau_opp_L, y, rank);
            }
        }
    }
    std::sort(out.psi_same.begin(), out.psi_same.end());
    std::sort(out.psi_opp.begin(), out.psi_opp.end());
    std::sort(out.psi_same_L.begin(), out.psi_same_L.end());
    std::sort(out.psi_opp_L.begin(), out.psi_opp_L.end());
    if (static_cast<int>(out.psi_same.size() + out.psi_opp.size()) != rs.positive_count())
        throw InvariantError("psi_same, psi_opp do not partition Phi+");
    if (static_cast<int>(out.psi_opp.size()) != w.length())
        throw InvariantError("|psi_opp| != l(w)");
    return out;
}

InversionProfile profile(const RootSystem& rs, const WeylElement& w,
                         const ParabolicData& p) {
    InversionProfileRaw raw = profile_raw(rs, w, p);
    const auto rank = static_cast<std::size_t>(rs.rank());
    InversionProfile out;
    out.psi_same = std::move(raw.psi_same);
    out.psi_opp = std::move(raw.psi_opp);
    out.psi_same_L = std::move(raw.psi_same_L);
    out.psi_opp_L = std::move(raw.psi_opp_L);
    out.tau_same = LatticeVector::from_coords(raw.tau_same, rank);
    out.tau_opp = LatticeVector::from_coords(raw.tau_opp, rank);
    out.tau_same_L = LatticeVector::from_coords(raw.tau_same_L, rank);
    out.tau_opp_L = LatticeVector::from_coords(raw.tau_opp_L, rank);
    return out;
}

std::int64_t cell_degree(const RootSystem& rs, const LatticeVector& lambda) {
    return to_int64(rs.pairing(lambda, -rs.two_rho()));
}

std::int64_t cell_degree_ii(const RootSystem& rs, const RootCoords& lambda) {
    return -rs.pairing_ii(lambda, rs.two_rho_coords());
}

CellStructure cell_structure(const RootSystem& rs, const WeylElement& w,
                             const ParabolicData& p) {
    const InversionProfileRaw raw = profile_raw(rs, w, p);
    CellStructure cs;
    cs.cell_roots = raw.psi_opp_L;
    cs.open_nbhd_extra_roots.reserve(raw.psi_same_L.size());
    for (const int idx : raw.psi_same_L)
        cs.open_nbhd_extra_roots.push_back(rs.negated(idx));
    std::sort(cs.open_nbhd_extra_roots.begin(), cs.open_nbhd_extra_roots.end());

    // The disjoint union must recover w(Phi- \ Phi_L) exactly.
    std::vector<int> lhs;
    for (int b = 0; b < rs.positive_count(); ++b) {
        if (p.contains_root(b)) continue;
        lhs.push_back(rs.negated(w.apply_root(b))); // w(-beta)
    }
    std::sort(lhs.begin(), lhs.end());
    std::vector<int> rhs = cs.open_nbhd_extra_roots;
    rhs.insert(rhs.end(), cs.cell_roots.begin(), cs.cell_roots.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs)
        throw InvariantError("cell decomposition of w(Phi- \\ Phi_L) failed");
    return cs;
}

std::vector<LatticeVector> ideal_restriction_weights(const RootSystem& rs,
                                                     const WeylElement& w,
                                                     const ParabolicData& p) {
    if (!(w == maximal_coset_rep(w, p)))
        throw UsageError(
            "ideal_restriction_weights requires the maximal coset representative");
    const InversionProfileRaw raw = profile_raw(rs, w, p);
    std::vector<LatticeVector> out;
    out.reserve(raw.psi_same_L.size());
    for (const int idx : raw.psi_same_L) out.push_back(rs.root_vector(idx));
    return out;
}

std::int64_t scod(const RootSystem& rs, const WeylElement& w, const ParabolicData& p) {
    const WeylElement wmax = maximal_coset_rep(w, p);
    const InversionProfileRaw raw = profile_raw(rs, wmax, p);
    const std::int64_t value = rs.positive_count() - wmax.length() +
                               rs.pairing_ii(raw.tau_same, rs.two_rho_coords());
    if (value < 0) throw InvariantError("negative staggered codimension");
    return value;
}

std::int64_t scod_via_cell(const RootSystem& rs, const WeylElement& w,
                           const ParabolicData& p) {
    const InversionProfileRaw raw = profile_raw(rs, w, p);
    const std::int64_t codim = (rs.positive_count() -
                                static_cast<std::int64_t>(p.phi_L_pos.size())) -
                               static_cast<std::int64_t>(raw.psi_opp_L.size());
    return codim + rs.pairing_ii(raw.tau_same_L, rs.two_rho_coords());
}

std::vector<ScodRow> scod_table(const RootSystem& rs, const ParabolicData& p,
                                std::uint64_t cap) {
    std::vector<ScodRow> rows;
    for (const WeylElement& mn : coset_representatives(rs, p, CosetMode::minimal, cap)) {
        const WeylElement mx = maximal_coset_rep(mn, p);
        const InversionProfileRaw raw = profile_raw(rs, mx, p);
        ScodRow row;
        row.min_word = mn.word();
        row.max_word = mx.word();
        row.length = mx.length();
        row.codim = rs.positive_count() - mx.length();
        row.tau_same_L_two_rho = rs.pairing_ii(raw.tau_same_L, rs.two_rho_coords());
        row.scod = rs.positive_count() - mx.length() +
                   rs.pairing_ii(raw.tau_same, rs.two_rho_coords());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace stag
