#include "stag/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "stag/errors.hpp"

namespace stag::checks {

namespace {

std::string parab_str(const ParabolicData& p) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < p.subset.size(); ++i) {
        if (i) os << ' ';
        os << p.subset[i] + 1;
    }
    os << '}';
    return os.str();
}

std::string witness(const RootSystem& rs, const ParabolicData& p,
                    const WeylElement& w, const std::string& msg) {
    return "type=" + rs.label() + " parabolic=" + parab_str(p) +
           " w=[" + word_str(w) + "] : " + msg;
}

bool matches(const WeylElement& w, const ElementFilter& only) {
    return !only || w.word() == *only;
}

// Coordinates of s_j(v): coordinate j changes by -sum_t a[j][t] v_t.
RootCoords simple_apply(const RootSystem& rs, int j, const RootCoords& v) {
    RootCoords out = v;
    std::int64_t pair = 0;
    for (int t = 0; t < rs.rank(); ++t) pair += rs.cartan()[j][t] * v[t];
    out[j] -= pair;
    return out;
}

bool coords_positive(const RootCoords& c, int rank) {
    for (int i = 0; i < rank; ++i) {
        if (c[i] > 0) return true;
        if (c[i] < 0) return false;
    }
    throw InvariantError("zero vector is not a root");
}

// l(u * w) == l(u) + l(w), decided without computing the product's length:
// u must keep every inversion of w inverted.
bool product_length_additive(const RootSystem& rs, const WeylElement& u,
                             const WeylElement& w) {
    for (int b = 0; b < rs.positive_count(); ++b) {
        const RootCoords y = w.apply(rs.root_coords(b));
        if (coords_positive(y, rs.rank())) continue;
        if (coords_positive(u.apply(y), rs.rank())) return false;
    }
    return true;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

LatticeVector random_weight(std::mt19937_64& rng, int rank) {
    LatticeVector v(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        v[i] = static_cast<std::int64_t>(bounded(rng, 11)) - 5;
    return v;
}

std::string vec_list(const std::vector<LatticeVector>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += vs[i].str();
    }
    return s + "]";
}

void run_trial(TorusTrial& t) {
    AffineModel model{t.weights, t.m};
    t.conormal_closed = conormal_weights(model);
    t.conormal_from_oracle = conormal_oracle(model);
    const ShriekTwist st = shriek_twist(model, t.mu);
    t.shriek_weight = st.weight;
    t.shriek_shift = st.shift;
    t.pass = true;
    try {
        t.pieces = koszul_oracle(model, t.mu);
    } catch (const OracleError& e) {
        t.pass = false;
        t.detail = e.what();
        return;
    }
    if (t.conormal_from_oracle != t.conormal_closed) {
        t.pass = false;
        t.detail = "conormal oracle " + vec_list(t.conormal_from_oracle) +
                   " != closed form " + vec_list(t.conormal_closed);
        return;
    }
    if (t.pieces.size() != 1 || t.pieces[0].dimension != 1 ||
        t.pieces[0].homological_degree != t.n - t.m ||
        !(t.pieces[0].weight == st.weight)) {
        t.pass = false;
        t.detail = "Koszul oracle disagrees with the closed-form twist";
        return;
    }
    // Factor the inclusion through every intermediate subspace; the twists
    // and shifts must compose to the one-shot answer.
    for (int mid = t.m; mid <= t.n; ++mid) {
        AffineModel outer{t.weights, mid};
        const ShriekTwist outer_twist = shriek_twist(outer, t.mu);
        AffineModel inner{{t.weights.begin(), t.weights.begin() + mid}, t.m};
        const ShriekTwist inner_twist = shriek_twist(inner, outer_twist.weight);
        if (!(inner_twist.weight == st.weight) ||
            inner_twist.shift + outer_twist.shift != st.shift) {
            t.pass = false;
            t.detail = "two-step factorization does not compose at mid=" +
                       std::to_string(mid);
            return;
        }
    }
}

} // namespace

SweepResult tau_orthogonality_sweep(const RootSystem& rs, const GroupEnumeration& en,
                                    const ParabolicData& p, const ElementFilter& only) {
    SweepResult res;
    for (const WeylElement& w : en.elements) {
        if (!matches(w, only)) continue;
        const InversionProfileRaw pr = profile_raw(rs, w, p);
        ++res.instances;
        const std::int64_t v = rs.pairing_ii(pr.tau_same, pr.tau_opp);
        if (v != 0)
            res.violations.push_back(
                witness(rs, p, w, "<tau_same, tau_opp> = " + std::to_string(v)));
    }
    return res;
}

SweepResult tau_reflection_sweep(const RootSystem& rs, const GroupEnumeration& en,
                                 const ParabolicData& p, const ElementFilter& only) {
    SweepResult res;
    const int n = rs.rank();
    for (const WeylElement& w : en.elements) {
        if (!matches(w, only)) continue;
        const InversionProfileRaw pr = profile_raw(rs, w, p);
        for (int j = 0; j < n; ++j) {
            if (!w.left_ascent(j)) continue;
            ++res.instances;
            const InversionProfileRaw ps = profile_raw(rs, w.simple_times(j), p);
            RootCoords same = simple_apply(rs, j, pr.tau_same);
            RootCoords opp = simple_apply(rs, j, pr.tau_opp);
            same[j] += 1;
            opp[j] += 1;
            if (same != ps.tau_same)
                res.violations.push_back(witness(
                    rs, p, w, "tau_same recursion fails at s" + std::to_string(j + 1)));
            if (opp != ps.tau_opp)
                res.violations.push_back(witness(
                    rs, p, w, "tau_opp recursion fails at s" + std::to_string(j + 1)));
        }
    }
    return res;
}

NegSweepResult simple_root_negativity_sweep(const RootSystem& rs,
                                            const GroupEnumeration& en,
                                            const ParabolicData& p,
                                            const ElementFilter& only) {
    NegSweepResult res;
    const int n = rs.rank();
    const auto max_len = static_cast<std::size_t>(rs.positive_count());
    res.visited_by_length.assign(max_len + 1, 0);
    res.checks_by_length.assign(max_len + 1, 0);
    for (const WeylElement& w : en.elements) {
        if (!matches(w, only)) continue;
        const auto len = static_cast<std::size_t>(w.length());
        ++res.visited_by_length[len];
        const InversionProfileRaw pr = profile_raw(rs, w, p);
        for (int j = 0; j < n; ++j) {
            // alpha_j lies in psi_same(w) iff l(s_j w) > l(w).
            if (!w.left_ascent(j)) continue;
            ++res.instances;
            ++res.checks_by_length[len];
            RootCoords alpha{};
            alpha[j] = 1;
            const std::int64_t v = rs.pairing_ii(alpha, pr.tau_opp);
            if (v > 0)
                res.violations.push_back(
                    witness(rs, p, w,
                            "<alpha_" + std::to_string(j + 1) + ", tau_opp> = " +
                                std::to_string(v) + " > 0"));
            // Coverage bookkeeping along the descent ladder.
            if (w.length() == 0) {
                ++res.case_counts[0];
                continue;
            }
            int t = 0;
            while (t < n && w.left_ascent(t)) ++t;
            if (t == n) throw InvariantError("no left descent for l(w) > 0");
            const WeylElement tw = w.simple_times(t);
            if (tw.left_ascent(j)) {
                ++res.case_counts[1];
                continue;
            }
            const WeylElement stw = tw.simple_times(j);
            if (stw.left_ascent(t)) {
                ++res.case_counts[2];
                continue;
            }
            const std::int64_t N = rs.cartan()[j][t] * rs.cartan()[t][j];
            if (N == 2) ++res.case_counts[3];
            else if (N == 3) ++res.case_counts[4];
            else
                res.violations.push_back(witness(
                    rs, p, w, "descent-ladder classification failed (N = " +
                                  std::to_string(N) + ")"));
        }
    }
    return res;
}

namespace {

TripleValues triple_values_impl(const RootSystem& rs, const ParabolicData& trivial,
                                const WeylElement& v, int simple_j,
                                const WeylElement& w) {
    const WeylElement vs = v.times_simple(simple_j);
    const InversionProfileRaw p_vw = profile_raw(rs, multiply(v, w), trivial);
    const InversionProfileRaw p_vsw = profile_raw(rs, multiply(vs, w), trivial);
    const InversionProfileRaw p_vinv = profile_raw(rs, v.inverse(), trivial);

    TripleValues out;
    out.lhs = rs.pairing_ii(p_vw.tau_same, rs.two_rho_coords()) -
              rs.pairing_ii(p_vsw.tau_same, rs.two_rho_coords());
    RootCoords alpha{};
    alpha[simple_j] = 1;
    const std::int64_t coroot = rs.coroot_pairing_ii(
        rs.simple_root_index(simple_j), p_vinv.tau_opp);
    // <w^{-1} alpha, 2rho> = <alpha, w(2rho)> since w preserves the form.
    const std::int64_t wa = rs.pairing_ii(alpha, w.apply(rs.two_rho_coords()));
    out.rhs = (1 - coroot) * wa;
    return out;
}

} // namespace

TripleValues order_triple_values(const RootSystem& rs, const WeylElement& v,
                                 int simple_j, const WeylElement& w) {
    return triple_values_impl(rs, make_parabolic(rs, {}), v, simple_j, w);
}

OrderSweepResult order_identity_sweep(const RootSystem& rs, const GroupEnumeration& en,
                                      std::uint64_t sample_size, std::uint64_t seed,
                                      const ElementFilter& only) {
    OrderSweepResult res;
    const int n = rs.rank();
    const ParabolicData trivial = make_parabolic(rs, {});

    auto check_triple = [&](const WeylElement& v, int j, const WeylElement& w) {
        ++res.instances;
        const TripleValues tv = triple_values_impl(rs, trivial, v, j, w);
        if (tv.lhs != tv.rhs || tv.lhs <= 0) {
            std::ostringstream os;
            os << "type=" << rs.label() << " v=[" << word_str(v) << "] s="
               << j + 1 << " w=[" << word_str(w) << "] : lhs=" << tv.lhs
               << " rhs=" << tv.rhs;
            res.violations.push_back(os.str());
        }
    };

    // Candidate v indices (all of W unless a rerun filter is set).
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < en.elements.size(); ++i)
        if (matches(en.elements[i], only)) candidates.push_back(i);

    if (rs.rank() <= 3) {
        for (const std::size_t vi : candidates) {
            const WeylElement& v = en.elements[vi];
            for (int j = 0; j < n; ++j) {
                if (!v.right_ascent(j)) continue;
                const WeylElement vs = v.times_simple(j);
                for (const WeylElement& w : en.elements)
                    if (product_length_additive(rs, vs, w)) check_triple(v, j, w);
            }
        }
        return res;
    }

    res.sampled = true;
    bool any_ascent = false;
    for (const std::size_t vi : candidates)
        for (int j = 0; j < n && !any_ascent; ++j)
            if (en.elements[vi].right_ascent(j)) any_ascent = true;
    if (!any_ascent) return res;

    // Rejection sampling: uniform over admissible triples.
    std::mt19937_64 rng(seed);
    const std::uint64_t count = en.elements.size();
    while (res.instances < sample_size) {
        const WeylElement& v =
            en.elements[candidates[bounded(rng, candidates.size())]];
        const int j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
        if (!v.right_ascent(j)) continue;
        const WeylElement& w = en.elements[bounded(rng, count)];
        if (!product_length_additive(rs, v.times_simple(j), w)) continue;
        check_triple(v, j, w);
    }
    return res;
}

SweepResult structural_identity_sweep(const RootSystem& rs, const GroupEnumeration& en,
                                      const ParabolicData& p, const ElementFilter& only) {
    SweepResult res;
    const int n = rs.rank();
    for (const WeylElement& w : en.elements) {
        if (!matches(w, only)) continue;
        ++res.instances;
        const InversionProfileRaw pr = profile_raw(rs, w, p);

        RootCoords sum{}, diff{};
        for (int i = 0; i < n; ++i) {
            sum[i] = pr.tau_same[i] + pr.tau_opp[i];
            diff[i] = pr.tau_same[i] - pr.tau_opp[i];
        }
        if (sum != rs.two_rho_coords())
            res.violations.push_back(witness(rs, p, w, "tau_same + tau_opp != 2rho"));
        if (diff != w.apply(rs.two_rho_coords()))
            res.violations.push_back(witness(rs, p, w, "tau_same - tau_opp != w(2rho)"));
        if (static_cast<int>(pr.psi_opp.size()) != w.length())
            res.violations.push_back(witness(rs, p, w, "|psi_opp| != l(w)"));
        if (!std::includes(pr.psi_same.begin(), pr.psi_same.end(),
                           pr.psi_same_L.begin(), pr.psi_same_L.end()))
            res.violations.push_back(witness(rs, p, w, "psi_same_L not in psi_same"));
        if (!std::includes(pr.psi_opp.begin(), pr.psi_opp.end(),
                           pr.psi_opp_L.begin(), pr.psi_opp_L.end()))
            res.violations.push_back(witness(rs, p, w, "psi_opp_L not in psi_opp"));

        // w(Phi- \ Phi_L) must be exactly (-psi_same_L) u psi_opp_L.
        std::vector<int> lhs, rhs;
        for (int b = 0; b < rs.positive_count(); ++b) {
            if (p.contains_root(b)) continue;
            lhs.push_back(rs.negated(w.apply_root(b)));
        }
        for (const int idx : pr.psi_same_L) rhs.push_back(rs.negated(idx));
        rhs.insert(rhs.end(), pr.psi_opp_L.begin(), pr.psi_opp_L.end());
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs)
            res.violations.push_back(
                witness(rs, p, w, "w(Phi- \\ Phi_L) decomposition failed"));

        if (scod(rs, w, p) != scod_via_cell(rs, w, p))
            res.violations.push_back(
                witness(rs, p, w, "scod via maximal representative != scod via cell"));
    }
    return res;
}

SweepResult ideal_degree_sweep(const RootSystem& rs, const GroupEnumeration& en,
                               const ParabolicData& p, const ElementFilter& only) {
    SweepResult res;
    for (const WeylElement& w : en.elements) {
        if (!matches(w, only)) continue;
        const InversionProfileRaw pr = profile_raw(rs, w, p);
        for (const int idx : pr.psi_same_L) {
            ++res.instances;
            const std::int64_t deg = cell_degree_ii(rs, rs.root_coords(idx));
            if (deg > -1)
                res.violations.push_back(
                    witness(rs, p, w,
                            "ideal weight " + rs.root_vector(idx).str() +
                                " has cell degree " + std::to_string(deg)));
        }
    }
    return res;
}

CodimSuiteResult scod_gap_suite(const RootSystem& rs, const ParabolicData& p,
                                std::uint64_t cap) {
    CodimSuiteResult res;
    const OrbitPoset poset = OrbitPoset::build(rs, p, cap);
    res.nodes = poset.size();
    GapCheckResult gaps = check_codim_gaps(poset);
    res.instances = gaps.comparable_pairs;
    res.cover_gaps = gaps.cover_gaps;
    for (const GapViolation& v : gaps.violations)
        res.violations.push_back("type=" + rs.label() + " parabolic=" + parab_str(p) +
                                 " : " + v.what);
    if (gaps.ok()) {
        try {
            build_perversity(poset);
            res.perversity_ok = true;
        } catch (const InvariantError& e) {
            res.violations.push_back("type=" + rs.label() + " parabolic=" +
                                     parab_str(p) + " : " + e.what());
        }
    }
    return res;
}

TorusSweepResult torus_equivalence_sweep(std::uint64_t trials, int max_n, int max_rank,
                                         std::uint64_t seed) {
    TorusSweepResult res;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        TorusTrial t;
        t.rank = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_rank)));
        t.n = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_n) + 1));
        t.m = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(t.n) + 1));
        for (int k = 0; k < t.n; ++k) t.weights.push_back(random_weight(rng, t.rank));
        t.mu = random_weight(rng, t.rank);
        run_trial(t);
        ++res.instances;
        if (!t.pass)
            res.violations.push_back("trial " + std::to_string(i) + " (n=" +
                                     std::to_string(t.n) + ", m=" + std::to_string(t.m) +
                                     "): " + t.detail);
        res.trials.push_back(std::move(t));
    }
    return res;
}

TorusSweepResult torus_fixed_model_sweep(int n, int m, int rank, std::uint64_t trials,
                                         std::uint64_t seed) {
    if (n < 0 || m < 0 || m > n) throw UsageError("torus model requires 0 <= m <= n");
    if (n - m > kKoszulGuard)
        throw GuardError("torus-check: n - m = " + std::to_string(n - m) +
                         " exceeds the oracle guard " + std::to_string(kKoszulGuard));
    TorusSweepResult res;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        TorusTrial t;
        t.rank = rank;
        t.n = n;
        t.m = m;
        for (int k = 0; k < n; ++k) t.weights.push_back(random_weight(rng, rank));
        t.mu = random_weight(rng, rank);
        run_trial(t);
        ++res.instances;
        if (!t.pass)
            res.violations.push_back("trial " + std::to_string(i) + ": " + t.detail);
        res.trials.push_back(std::move(t));
    }
    return res;
}

} // namespace stag::checks
