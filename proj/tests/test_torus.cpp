#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "stag/checks.hpp"
#include "stag/exact_linalg.hpp"
#include "stag/torus.hpp"

using namespace stag;

namespace {

LatticeVector vec(std::initializer_list<std::int64_t> cs) {
    LatticeVector v(cs.size());
    std::size_t i = 0;
    for (const std::int64_t c : cs) v[i++] = c;
    return v;
}

// Rank over the rationals by plain Gaussian elimination; the reference
// the fraction-free routine is checked against.
int rank_rational(const IntMatrix& in) {
    std::vector<std::vector<Rational>> m(in.size());
    for (std::size_t r = 0; r < in.size(); ++r)
        m[r].assign(in[r].begin(), in[r].end());
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[piv]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[static_cast<std::size_t>(rank)][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] -= f * m[static_cast<std::size_t>(rank)][cc];
        }
        ++rank;
    }
    return rank;
}

// Brute-force cohomology of one multidegree component of the dual Koszul
// complex, built from scratch: basis pairs (S, a) with a = gamma + delta(S)
// nonnegative, differential by wedging with each missing generator.
std::vector<int> component_cohomology(int c, const std::vector<int>& gamma) {
    std::map<std::pair<unsigned, std::vector<int>>, int> pos;
    std::vector<std::vector<std::pair<unsigned, std::vector<int>>>> basis(
        static_cast<std::size_t>(c) + 1);
    for (unsigned s = 0; s < (1u << c); ++s) {
        std::vector<int> a(gamma);
        bool ok = true;
        for (int j = 0; j < c; ++j) {
            if (s & (1u << j)) a[static_cast<std::size_t>(j)] += 1;
            if (a[static_cast<std::size_t>(j)] < 0) ok = false;
        }
        if (!ok) continue;
        auto& level = basis[static_cast<std::size_t>(__builtin_popcount(s))];
        pos[{s, a}] = static_cast<int>(level.size());
        level.emplace_back(s, a);
    }
    std::vector<int> ranks(static_cast<std::size_t>(c) + 1, 0);
    for (int k = 0; k < c; ++k) {
        const auto& src = basis[static_cast<std::size_t>(k)];
        const auto& dst = basis[static_cast<std::size_t>(k) + 1];
        if (src.empty() || dst.empty()) continue;
        IntMatrix mat(dst.size(), std::vector<Int>(src.size(), 0));
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& [s, a] = src[col];
            for (int j = 0; j < c; ++j) {
                if (s & (1u << j)) continue;
                std::vector<int> a2(a);
                a2[static_cast<std::size_t>(j)] += 1;
                const auto it = pos.find({s | (1u << j), a2});
                if (it == pos.end()) continue;
                const int sign =
                    __builtin_popcount(s & ((1u << j) - 1u)) % 2 == 0 ? 1 : -1;
                mat[static_cast<std::size_t>(it->second)][col] = sign;
            }
        }
        ranks[static_cast<std::size_t>(k)] = rank_bareiss(std::move(mat));
    }
    std::vector<int> h(static_cast<std::size_t>(c) + 1, 0);
    for (int k = 0; k <= c; ++k) {
        const int dim = static_cast<int>(basis[static_cast<std::size_t>(k)].size());
        const int rk_in = k > 0 ? ranks[static_cast<std::size_t>(k) - 1] : 0;
        h[static_cast<std::size_t>(k)] =
            dim - ranks[static_cast<std::size_t>(k)] - rk_in;
    }
    return h;
}

} // namespace

TEST_CASE("fraction-free rank equals rational-elimination rank") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        IntMatrix m(rows, std::vector<Int>(cols));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % 7) - 3;
        CHECK(rank_bareiss(m) == rank_rational(m));
    }
}

TEST_CASE("Koszul components over a full multidegree window") {
    // Every component with some exponent <= -2 is empty; components are
    // determined by the set of exponents equal to -1; cohomology lives only
    // at the all-(-1) multidegree, in the top degree.  Checked here against
    // a from-scratch computation over the window [-2, 1]^c.
    for (int c = 1; c <= 3; ++c) {
        std::vector<int> gamma(static_cast<std::size_t>(c), -2);
        for (;;) {
            const auto h = component_cohomology(c, gamma);
            const bool all_minus_one =
                std::all_of(gamma.begin(), gamma.end(), [](int g) { return g == -1; });
            for (int k = 0; k <= c; ++k) {
                const int expected = (all_minus_one && k == c) ? 1 : 0;
                CHECK(h[static_cast<std::size_t>(k)] == expected);
            }
            int i = 0;
            while (i < c && gamma[static_cast<std::size_t>(i)] == 1) {
                gamma[static_cast<std::size_t>(i)] = -2;
                ++i;
            }
            if (i == c) break;
            gamma[static_cast<std::size_t>(i)] += 1;
        }
    }
}

TEST_CASE("closed forms on degenerate and small models") {
    // m = n: zero ideal, identity inclusion.
    const AffineModel full{{vec({1, 0}), vec({0, 2})}, 2};
    CHECK(conormal_weights(full).empty());
    CHECK(conormal_oracle(full).empty());
    const ShriekTwist st = shriek_twist(full, vec({3, -1}));
    CHECK(st.weight == vec({3, -1}));
    CHECK(st.shift == 0);

    // One removed coordinate.
    const AffineModel one{{vec({1, 0}), vec({2, -3})}, 1};
    const auto cw = conormal_weights(one);
    REQUIRE(cw.size() == 1);
    CHECK(cw[0] == vec({-2, 3}));

    // The rank-one step: weight mu + lambda_1, shift -1.
    const AffineModel rank_one{{vec({4, 1})}, 0};
    const ShriekTwist base = shriek_twist(rank_one, vec({0, 0}));
    CHECK(base.weight == vec({4, 1}));
    CHECK(base.shift == -1);
}

TEST_CASE("conormal multiplicities survive coincident weights") {
    const LatticeVector lam = vec({2, 2});
    const AffineModel model{{vec({1, 0}), lam, lam, vec({0, 5})}, 1};
    const auto cw = conormal_weights(model);
    REQUIRE(cw.size() == 3);
    CHECK(std::count(cw.begin(), cw.end(), -lam) == 2);
    CHECK(conormal_oracle(model) == cw);
}

TEST_CASE("Koszul oracle on the smallest models") {
    const AffineModel rank_one{{vec({4, 1})}, 0};
    const auto pieces = koszul_oracle(rank_one, vec({2, 2}));
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].homological_degree == 1);
    CHECK(pieces[0].dimension == 1);
    CHECK(pieces[0].weight == vec({6, 3}));

    const AffineModel two{{vec({1, 2}), vec({-1, 1})}, 0};
    const auto p2 = koszul_oracle(two, vec({0, 0}));
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].homological_degree == 2);
    CHECK(p2[0].weight == vec({0, 3}));

    // Trivial torus action: the grading collapses but the complex does not.
    const AffineModel trivial{{vec({0}), vec({0})}, 0};
    const auto p3 = koszul_oracle(trivial, vec({7}));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].homological_degree == 2);
    CHECK(p3[0].weight == vec({7}));

    // m = n: degree 0, the twist untouched.
    const AffineModel idm{{vec({1}), vec({2})}, 2};
    const auto p4 = koszul_oracle(idm, vec({9}));
    REQUIRE(p4.size() == 1);
    CHECK(p4[0].homological_degree == 0);
    CHECK(p4[0].weight == vec({9}));
}

TEST_CASE("oracle guard refuses oversized models") {
    std::vector<LatticeVector> weights(9, vec({1}));
    const AffineModel big{weights, 0};
    CHECK_THROWS_AS(koszul_oracle(big, vec({0})), GuardError);
    CHECK_THROWS_AS(conormal_oracle(big), GuardError);
    CHECK_THROWS_AS(checks::torus_fixed_model_sweep(12, 0, 1, 1, 0), GuardError);
    CHECK_THROWS_AS((AffineModel{weights, 10}.validate()), UsageError);
}

TEST_CASE("oracles agree with the closed forms on random models") {
    const auto res = checks::torus_equivalence_sweep(200, 5, 4, 42);
    CHECK(res.instances == 200);
    CHECK(res.ok());
    for (const checks::TorusTrial& t : res.trials) {
        REQUIRE(t.pieces.size() == 1);
        CHECK(t.pieces[0].homological_degree == t.n - t.m);
        CHECK(t.pieces[0].weight == t.shriek_weight);
        CHECK(t.conormal_from_oracle == t.conormal_closed);
    }
}

TEST_CASE("fixed-model sweep mirrors the CLI base case") {
    const auto res = checks::torus_fixed_model_sweep(1, 0, 2, 1, 123);
    CHECK(res.instances == 1);
    CHECK(res.ok());
}

TEST_CASE("cell models re-derive the ideal weights and the scod degree term") {
    for (const std::string& label : {std::string("A2"), std::string("B2"),
                                     std::string("G2")}) {
        const RootSystem rs = RootSystem::build(label);
        const GroupEnumeration en = enumerate_group(rs);
        for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
            std::vector<int> subset;
            for (int j = 0; j < rs.rank(); ++j)
                if (mask & (1u << j)) subset.push_back(j);
            const ParabolicData p = make_parabolic(rs, subset);
            for (const WeylElement& mx :
                 coset_representatives(rs, p, CosetMode::maximal)) {
                const AffineModel model = affine_model_for_cell(rs, mx, p);

                // Restricted conormal weights = the ideal restriction weights.
                std::vector<LatticeVector> expected =
                    ideal_restriction_weights(rs, mx, p);
                std::sort(expected.begin(), expected.end());
                CHECK(conormal_weights(model) == expected);
                CHECK(conormal_oracle(model) == expected);

                // Shriek twist of the untwisted sheaf: degree of the result
                // equals the tau_same_L pairing term of scod, shift equals
                // minus the number of extra directions.
                const ShriekTwist st = shriek_twist(model, LatticeVector(
                                                               static_cast<std::size_t>(
                                                                   rs.rank())));
                const InversionProfile pr = profile(rs, mx, p);
                CHECK(cell_degree(rs, st.weight) ==
                      to_int64(rs.pairing(pr.tau_same_L, rs.two_rho())));
                CHECK(st.shift == -static_cast<int>(pr.psi_same_L.size()));
                if (model.n() - model.m() <= kKoszulGuard) {
                    const auto pieces = koszul_oracle(
                        model, LatticeVector(static_cast<std::size_t>(rs.rank())));
                    REQUIRE(pieces.size() == 1);
                    CHECK(pieces[0].weight == st.weight);
                }
            }
        }
    }
}
