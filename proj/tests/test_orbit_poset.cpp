#include <doctest.h>

#include <algorithm>
#include <set>

#include "stag/export.hpp"
#include "stag/orbit_poset.hpp"

using namespace stag;

TEST_CASE("A1 poset is a two-node chain with gap 3") {
    const RootSystem a1 = RootSystem::build("A1");
    const OrbitPoset poset = OrbitPoset::build(a1, make_parabolic(a1, {}));
    REQUIRE(poset.size() == 2);
    REQUIRE(poset.covers().size() == 1);
    CHECK(poset.scod_of(0) == 3);
    CHECK(poset.scod_of(1) == 0);
    const GapCheckResult gaps = check_codim_gaps(poset);
    CHECK(gaps.ok());
    CHECK(gaps.cover_gaps == std::vector<std::int64_t>{3});

    const Perversity p = build_perversity(poset);
    CHECK(p.values == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("A2 poset is the hexagon with the expected gaps and perversity") {
    const RootSystem a2 = RootSystem::build("A2");
    const OrbitPoset poset = OrbitPoset::build(a2, make_parabolic(a2, {}));
    REQUIRE(poset.size() == 6);
    CHECK(poset.covers().size() == 8);

    // Two atoms above the point, two coatoms below the dense stratum.
    int atoms = 0, coatoms = 0;
    for (const auto& [below, above] : poset.covers()) {
        if (below == 0) ++atoms;
        if (above == 5) ++coatoms;
    }
    CHECK(atoms == 2);
    CHECK(coatoms == 2);

    const GapCheckResult gaps = check_codim_gaps(poset);
    CHECK(gaps.ok());
    CHECK(gaps.cover_gaps ==
          std::vector<std::int64_t>{3, 3, 3, 3, 5, 5, 5, 5});

    const Perversity p = build_perversity(poset);
    CHECK(p.values == std::vector<std::int64_t>{5, 4, 4, 1, 1, 0});
}

TEST_CASE("A3 modulo {1,2} is a four-node chain") {
    const RootSystem a3 = RootSystem::build("A3");
    const OrbitPoset poset = OrbitPoset::build(a3, make_parabolic(a3, {0, 1}));
    REQUIRE(poset.size() == 4);
    CHECK(poset.covers().size() == 3);
    for (int i = 0; i + 1 < poset.size(); ++i) {
        CHECK(poset.leq(i, i + 1));
        CHECK(poset.scod_of(i) > poset.scod_of(i + 1));
    }
    CHECK(check_codim_gaps(poset).ok());
}

TEST_CASE("closure order equals pairwise Bruhat order on minimal reps") {
    for (const std::string& label : {std::string("A3"), std::string("B3"),
                                     std::string("G2")}) {
        const RootSystem rs = RootSystem::build(label);
        for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
            std::vector<int> subset;
            for (int j = 0; j < rs.rank(); ++j)
                if (mask & (1u << j)) subset.push_back(j);
            const OrbitPoset poset = OrbitPoset::build(rs, make_parabolic(rs, subset));
            for (int a = 0; a < poset.size(); ++a)
                for (int b = 0; b < poset.size(); ++b)
                    CHECK(poset.leq(a, b) ==
                          bruhat_leq(poset.nodes()[a].min_rep,
                                     poset.nodes()[b].min_rep));
        }
    }
}

TEST_CASE("synthetic posets: the boundary gap and broken chains") {
    // Minimal admissible gap: scods {2, 0}.
    const OrbitPoset chain = OrbitPoset::synthetic({2, 0}, {{0, 1}});
    CHECK(check_codim_gaps(chain).ok());
    const Perversity p = build_perversity(chain);
    CHECK(p.values == std::vector<std::int64_t>{1, 0});

    // Gap of 1 is rejected and the perversity construction must refuse.
    const OrbitPoset bad = OrbitPoset::synthetic({1, 0}, {{0, 1}});
    const GapCheckResult gaps = check_codim_gaps(bad);
    REQUIRE(gaps.violations.size() == 1);
    CHECK(gaps.violations[0].what.find("gap") != std::string::npos);
    CHECK_THROWS_AS(build_perversity(bad), InvariantError);

    // scod increasing upward violates strict monotonicity.
    const OrbitPoset inverted = OrbitPoset::synthetic({0, 2}, {{0, 1}});
    REQUIRE(check_codim_gaps(inverted).violations.size() == 1);
    CHECK(check_codim_gaps(inverted).violations[0].what.find("monotone") !=
          std::string::npos);
}

TEST_CASE("basis labels: counts, uniqueness, determinism") {
    const RootSystem a2 = RootSystem::build("A2");
    const OrbitPoset hexagon = OrbitPoset::build(a2, make_parabolic(a2, {}));
    CHECK(enumerate_basis_labels(hexagon, WeightBox::zero(2)).size() == 6);

    const RootSystem a3 = RootSystem::build("A3");
    const OrbitPoset chain = OrbitPoset::build(a3, make_parabolic(a3, {0, 1}));
    CHECK(enumerate_basis_labels(chain, WeightBox::zero(3)).size() == 4);

    const RootSystem a1 = RootSystem::build("A1");
    const OrbitPoset two = OrbitPoset::build(a1, make_parabolic(a1, {}));
    const auto labels = enumerate_basis_labels(two, WeightBox::cube(1, -1, 1));
    CHECK(labels.size() == 6);

    std::set<std::pair<int, std::vector<std::int64_t>>> dedup;
    for (const BasisLabel& l : labels) dedup.insert({l.node, l.weight_fundamental});
    CHECK(dedup.size() == labels.size());

    const auto again = enumerate_basis_labels(two, WeightBox::cube(1, -1, 1));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        CHECK(labels[i].node == again[i].node);
        CHECK(labels[i].weight_fundamental == again[i].weight_fundamental);
    }

    // Fundamental coordinates translate to exact simple-root coordinates:
    // for A1, omega = alpha/2.
    CHECK(labels[0].weight == -a1.fundamental_weight(0));
    CHECK(labels[0].weight[0] == Rational(-1, 2));
}

TEST_CASE("DOT and JSON exports carry the decoration") {
    const RootSystem a2 = RootSystem::build("A2");
    const OrbitPoset poset = OrbitPoset::build(a2, make_parabolic(a2, {}));
    const Perversity perv = build_perversity(poset);

    const std::string dot = poset_dot(poset, &perv);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("e | scod=11 | p=5") != std::string::npos);
    CHECK(dot.find("1 2 1 | scod=0 | p=0") != std::string::npos);

    const nlohmann::json j = poset_json(poset, &perv);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("nodes").size() == 6);
    CHECK(j.at("covers").size() == 8);
    CHECK(j.at("nodes")[0].at("scod") == 11);
    CHECK(j.at("nodes")[0].at("perversity") == 5);
}

TEST_CASE("basis labels on a synthetic poset are refused") {
    const OrbitPoset chain = OrbitPoset::synthetic({2, 0}, {{0, 1}});
    CHECK_THROWS_AS(enumerate_basis_labels(chain, WeightBox::zero(1)), UsageError);

    const RootSystem a1 = RootSystem::build("A1");
    const OrbitPoset two = OrbitPoset::build(a1, make_parabolic(a1, {}));
    CHECK_THROWS_AS(enumerate_basis_labels(two, WeightBox::cube(1, 2, -2)),
                    UsageError);
    CHECK_THROWS_AS(enumerate_basis_labels(two, WeightBox::zero(5)), UsageError);
}
