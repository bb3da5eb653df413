#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "stag/inversions.hpp"
#include "stag/weyl.hpp"

using namespace stag;

namespace {

const std::vector<std::string> kRank4Types = {"A1", "A2", "A3", "A4", "B2", "B3",
                                              "B4", "C3", "C4", "D4", "F4", "G2"};

// Transitive closure of the reflection-cover relation; the independent
// Bruhat-order oracle (memory-heavy, test-only).
std::vector<std::vector<bool>> bruhat_closure_oracle(const RootSystem& rs,
                                                     const GroupEnumeration& en) {
    const std::size_t n = en.elements.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[en.elements[i].word()] = i;

    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    // Covers: w -> t*w for reflections t raising length by exactly one.
    std::vector<std::vector<std::size_t>> covers(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int p = 0; p < rs.positive_count(); ++p) {
            const WeylElement t = WeylElement::root_reflection(rs, p);
            const WeylElement tw = multiply(t, en.elements[i]);
            if (tw.length() == en.elements[i].length() + 1)
                covers[i].push_back(index.at(tw.word()));
        }
    }
    // Elements are sorted by length, so a reverse pass closes the relation.
    for (std::size_t i = n; i-- > 0;)
        for (const std::size_t j : covers[i])
            for (std::size_t k = 0; k < n; ++k)
                if (leq[j][k]) leq[i][k] = true;
    return leq;
}

} // namespace

TEST_CASE("simple reflections are involutions and basic A2 lengths") {
    const RootSystem a2 = RootSystem::build("A2");
    const WeylElement s1 = WeylElement::simple_reflection(a2, 0);
    const WeylElement s2 = WeylElement::simple_reflection(a2, 1);
    CHECK(multiply(s1, s1).is_identity());
    CHECK(multiply(s1, s1).length() == 0);
    CHECK(multiply(s1, s2).length() == 2);
    CHECK(multiply(multiply(s1, s2), s1).length() == 3);
    CHECK(multiply(multiply(s1, s2), s1).length() == a2.positive_count());
}

TEST_CASE("length drops by |Phi+| - l(w) after multiplying by w0") {
    const RootSystem b3 = RootSystem::build("B3");
    const GroupEnumeration en = enumerate_group(b3);
    const WeylElement w0 = longest_element(b3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const WeylElement& w = en.elements[rng() % en.elements.size()];
        CHECK(multiply(w0, w).length() == b3.positive_count() - w.length());
    }
}

TEST_CASE("l(sw) = l(w) +- 1, exhaustively through rank 4") {
    for (const std::string& label : kRank4Types) {
        const RootSystem rs = RootSystem::build(label);
        const GroupEnumeration en = enumerate_group(rs);
        for (const WeylElement& w : en.elements)
            for (int j = 0; j < rs.rank(); ++j) {
                const int diff = w.simple_times(j).length() - w.length();
                CHECK((diff == 1 || diff == -1));
                CHECK((diff == 1) == w.left_ascent(j));
            }
    }
}

TEST_CASE("l(sw) > l(w) iff alpha lies in psi_same(w)") {
    for (const std::string& label : kRank4Types) {
        const RootSystem rs = RootSystem::build(label);
        const GroupEnumeration en = enumerate_group(rs);
        const ParabolicData triv = make_parabolic(rs, {});
        for (const WeylElement& w : en.elements) {
            const InversionProfileRaw pr = profile_raw(rs, w, triv);
            for (int j = 0; j < rs.rank(); ++j) {
                const bool in_same =
                    std::binary_search(pr.psi_same.begin(), pr.psi_same.end(),
                                       rs.simple_root_index(j));
                CHECK(in_same == w.left_ascent(j));
            }
        }
    }
}

TEST_CASE("canonical words are reduced and rebuild their element") {
    const RootSystem f4 = RootSystem::build("F4");
    const GroupEnumeration en = enumerate_group(f4);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const WeylElement& w = en.elements[rng() % en.elements.size()];
        const std::vector<int> word = w.word();
        CHECK(static_cast<int>(word.size()) == w.length());
        CHECK(from_word(f4, word) == w);
        CHECK(multiply(w, w.inverse()).is_identity());
    }
}

TEST_CASE("is_length_additive basics") {
    const RootSystem a2 = RootSystem::build("A2");
    const GroupEnumeration en = enumerate_group(a2);
    const WeylElement e = WeylElement::identity(a2);
    const WeylElement s1 = WeylElement::simple_reflection(a2, 0);
    const WeylElement s2 = WeylElement::simple_reflection(a2, 1);
    for (const WeylElement& w : en.elements) CHECK(is_length_additive(e, w));
    CHECK_FALSE(is_length_additive(s1, s1));
    CHECK(is_length_additive(s1, multiply(s2, s1)));
}

TEST_CASE("longest elements") {
    const RootSystem a1 = RootSystem::build("A1");
    CHECK(longest_element(a1).length() == 1);
    CHECK(longest_element(a1) == WeylElement::simple_reflection(a1, 0));

    const RootSystem g2 = RootSystem::build("G2");
    CHECK(longest_element(g2).length() == 6);

    const RootSystem a3 = RootSystem::build("A3");
    const std::vector<int> sub{0, 1};
    CHECK(longest_element(a3, sub).length() == 3);
    CHECK(longest_element(a3, std::span<const int>{}).is_identity());

    // w0 sends every positive root to a negative one.
    const WeylElement w0 = longest_element(g2);
    for (int p = 0; p < g2.positive_count(); ++p)
        CHECK_FALSE(g2.is_positive(w0.apply_root(p)));
}

TEST_CASE("group enumeration: counts, determinism, cap refusal") {
    CHECK(enumerate_group(RootSystem::build("A1")).elements.size() == 2);
    CHECK(enumerate_group(RootSystem::build("G2")).elements.size() == 12);
    CHECK(enumerate_group(RootSystem::build("F4")).elements.size() == 1152);
    CHECK(enumerate_group(RootSystem::build("B3")).elements.size() == 48);

    const RootSystem b3 = RootSystem::build("B3");
    const GroupEnumeration a = enumerate_group(b3);
    const GroupEnumeration b = enumerate_group(b3);
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        CHECK(a.elements[i] == b.elements[i]);
    // Within each length block the canonical words ascend lexicographically.
    for (const auto& [begin, end] : a.length_blocks)
        for (std::size_t i = begin + 1; i < end; ++i) {
            CHECK(a.elements[i].length() == a.elements[begin].length());
            CHECK(a.elements[i - 1].word() < a.elements[i].word());
        }

    const RootSystem e7 = RootSystem::build("E7");
    try {
        enumerate_group(e7);
        FAIL("cap refusal expected");
    } catch (const GuardError& e) {
        CHECK(std::string(e.what()).find("2903040") != std::string::npos);
    }
    CHECK(weyl_group_order(LieType::E, 7) == 2903040);
}

TEST_CASE("bruhat_leq agrees with the reflection-cover closure oracle") {
    for (const std::string& label : {std::string("A3"), std::string("B3"),
                                     std::string("G2")}) {
        const RootSystem rs = RootSystem::build(label);
        const GroupEnumeration en = enumerate_group(rs);
        const auto oracle = bruhat_closure_oracle(rs, en);
        for (std::size_t i = 0; i < en.elements.size(); ++i)
            for (std::size_t j = 0; j < en.elements.size(); ++j)
                CHECK(bruhat_leq(en.elements[i], en.elements[j]) == oracle[i][j]);
    }
}

TEST_CASE("bruhat_leq basics") {
    const RootSystem a2 = RootSystem::build("A2");
    const GroupEnumeration en = enumerate_group(a2);
    const WeylElement e = WeylElement::identity(a2);
    const WeylElement w0 = longest_element(a2);
    const WeylElement s1 = WeylElement::simple_reflection(a2, 0);
    const WeylElement s2 = WeylElement::simple_reflection(a2, 1);
    for (const WeylElement& w : en.elements) {
        CHECK(bruhat_leq(e, w));
        CHECK(bruhat_leq(w, w0));
    }
    CHECK(bruhat_leq(s1, multiply(s2, s1)));
    CHECK_FALSE(bruhat_leq(s1, s2));
}

TEST_CASE("coset representatives: counts, examples, partition") {
    const RootSystem a2 = RootSystem::build("A2");

    // Empty parabolic: every element is its own coset, in both modes.
    const ParabolicData none = make_parabolic(a2, {});
    CHECK(coset_representatives(a2, none, CosetMode::minimal).size() == 6);
    CHECK(coset_representatives(a2, none, CosetMode::maximal).size() == 6);

    // Full parabolic: single coset, {e} minimal and {w0} maximal.
    const ParabolicData full = make_parabolic(a2, {0, 1});
    const auto fmin = coset_representatives(a2, full, CosetMode::minimal);
    const auto fmax = coset_representatives(a2, full, CosetMode::maximal);
    REQUIRE(fmin.size() == 1);
    REQUIRE(fmax.size() == 1);
    CHECK(fmin[0].is_identity());
    CHECK(fmax[0] == longest_element(a2));

    // A2 mod {alpha_1}: three cosets with minimal reps e, s2, s1s2.
    const ParabolicData p1 = make_parabolic(a2, {0});
    const auto mins = coset_representatives(a2, p1, CosetMode::minimal);
    REQUIRE(mins.size() == 3);
    CHECK(mins[0].word() == std::vector<int>{});
    CHECK(mins[1].word() == std::vector<int>{1});
    CHECK((mins[2].word() == std::vector<int>{0, 1}));
    for (const WeylElement& mx : coset_representatives(a2, p1, CosetMode::maximal))
        CHECK(mx.length() == minimal_coset_rep(mx, p1).length() + p1.w0_L.length());

    // Every element factors uniquely as (min rep) * (element of W_L) with
    // additive lengths; exhaust A3 over all parabolic subsets.
    const RootSystem a3 = RootSystem::build("A3");
    const GroupEnumeration en = enumerate_group(a3);
    for (unsigned mask = 0; mask < 8u; ++mask) {
        std::vector<int> subset;
        for (int j = 0; j < 3; ++j)
            if (mask & (1u << j)) subset.push_back(j);
        const ParabolicData p = make_parabolic(a3, subset);
        const auto reps = coset_representatives(a3, p, CosetMode::minimal);
        CHECK(reps.size() * parabolic_subgroup_order(a3, p) == en.elements.size());
        std::size_t covered = 0;
        for (const WeylElement& w : en.elements) {
            const WeylElement mn = minimal_coset_rep(w, p);
            const WeylElement rest = multiply(mn.inverse(), w);
            CHECK(mn.length() + rest.length() == w.length());
            // rest must lie in W_L: it only inverts roots of Phi_L.
            for (int b = 0; b < a3.positive_count(); ++b)
                if (!a3.is_positive(rest.apply_root(b))) CHECK(p.contains_root(b));
            ++covered;
        }
        CHECK(covered == en.elements.size());
    }
}

TEST_CASE("argument validation") {
    const RootSystem a2 = RootSystem::build("A2");
    const RootSystem b2 = RootSystem::build("B2");
    CHECK_THROWS_AS(from_word(a2, std::vector<int>{0, 5}), UsageError);
    CHECK_THROWS_AS(make_parabolic(a2, {3}), UsageError);
    CHECK_THROWS_AS(WeylElement::simple_reflection(a2, -1), UsageError);
    CHECK_THROWS_AS(
        multiply(WeylElement::identity(a2), WeylElement::identity(b2)), UsageError);
}

TEST_CASE("maximal coset representative is an involution-free closure point") {
    const RootSystem b3 = RootSystem::build("B3");
    const GroupEnumeration en = enumerate_group(b3);
    const ParabolicData p = make_parabolic(b3, {0, 2});
    for (const WeylElement& w : en.elements) {
        const WeylElement mx = maximal_coset_rep(w, p);
        // Maximal means every parabolic generator is a descent.
        for (const int j : p.subset) CHECK_FALSE(mx.right_ascent(j));
        CHECK(maximal_coset_rep(mx, p) == mx);
        CHECK(minimal_coset_rep(mx, p) == minimal_coset_rep(w, p));
    }
}
