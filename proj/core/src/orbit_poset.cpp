#include "stag/orbit_poset.hpp"

#include <algorithm>

#include "stag/errors.hpp"

namespace stag {

namespace {

std::string gap_witness(const OrbitPoset& poset, int a, int b, const char* what) {
    return std::string(what) + " violation: node '" + poset.label(a) + "' (scod " +
           std::to_string(poset.scod_of(a)) + ") < node '" + poset.label(b) +
           "' (scod " + std::to_string(poset.scod_of(b)) + ")";
}

} // namespace

const RootSystem& OrbitPoset::system() const {
    if (!sys_) throw UsageError("synthetic poset has no root system");
    return *sys_;
}

const ParabolicData& OrbitPoset::parabolic() const {
    if (!parab_) throw UsageError("synthetic poset has no parabolic data");
    return *parab_;
}

bool OrbitPoset::leq(int a, int b) const {
    if (a == b) return true;
    return (above_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] >>
            (static_cast<std::size_t>(b) % 64)) & 1u;
}

std::vector<int> OrbitPoset::strictly_above(int a) const {
    std::vector<int> out;
    for (int b = 0; b < size(); ++b)
        if (b != a && leq(a, b)) out.push_back(b);
    return out;
}

void OrbitPoset::close_upward() {
    const auto n = static_cast<std::size_t>(size());
    const std::size_t words = (n + 63) / 64;
    above_.assign(n, std::vector<std::uint64_t>(words, 0));
    // Nodes are sorted by grade, so covers point from lower to higher index;
    // accumulate reachability from the top down.
    std::vector<std::vector<int>> up(n);
    for (const auto& [below, above] : covers_) {
        if (below >= above)
            throw InvariantError("cover does not respect the node order");
        up[static_cast<std::size_t>(below)].push_back(above);
    }
    for (int a = size(); a-- > 0;) {
        auto& row = above_[static_cast<std::size_t>(a)];
        for (const int b : up[static_cast<std::size_t>(a)]) {
            row[static_cast<std::size_t>(b) / 64] |=
                std::uint64_t{1} << (static_cast<std::size_t>(b) % 64);
            const auto& brow = above_[static_cast<std::size_t>(b)];
            for (std::size_t w = 0; w < words; ++w) row[w] |= brow[w];
        }
    }
}

OrbitPoset OrbitPoset::build(const RootSystem& rs, const ParabolicData& p,
                             std::uint64_t cap) {
    OrbitPoset poset;
    poset.sys_ = &rs;
    poset.parab_ = p;

    const std::vector<WeylElement> mins =
        coset_representatives(rs, p, CosetMode::minimal, cap);
    for (const WeylElement& mn : mins) {
        OrbitNode node{mn, maximal_coset_rep(mn, p), 0, mn.length()};
        node.scod = scod(rs, mn, p);
        poset.nodes_.push_back(std::move(node));
    }
    // coset_representatives returns enumeration order: by length of the
    // minimal representative (= cell dimension), then lex word.
    for (const OrbitNode& node : poset.nodes_) {
        poset.scods_.push_back(node.scod);
        poset.labels_.push_back(word_str(node.min_rep));
    }

    // The quotient order is graded by the length of minimal representatives,
    // so the covers are exactly the comparable pairs one length apart.
    // TODO: bucket nodes by cell_dim to avoid the quadratic candidate scan
    // on large quotients.
    for (int a = 0; a < poset.size(); ++a)
        for (int b = a + 1; b < poset.size(); ++b) {
            if (poset.nodes_[b].cell_dim != poset.nodes_[a].cell_dim + 1) continue;
            if (bruhat_leq(poset.nodes_[a].min_rep, poset.nodes_[b].min_rep))
                poset.covers_.emplace_back(a, b);
        }
    poset.close_upward();

    // Unique maximum (the dense stratum, scod 0) and unique minimum.
    int maxima = 0, minima = 0;
    for (int a = 0; a < poset.size(); ++a) {
        if (poset.strictly_above(a).empty()) {
            ++maxima;
            if (poset.scods_[a] != 0)
                throw InvariantError("dense stratum has nonzero scod");
        }
        bool is_min = true;
        for (int b = 0; b < poset.size() && is_min; ++b)
            if (b != a && poset.leq(b, a)) is_min = false;
        if (is_min) ++minima;
    }
    if (maxima != 1 || minima != 1)
        throw InvariantError("orbit poset is not bounded");
    return poset;
}

OrbitPoset OrbitPoset::synthetic(std::vector<std::int64_t> scods,
                                 std::vector<std::pair<int, int>> covers,
                                 std::vector<std::string> labels) {
    OrbitPoset poset;
    poset.scods_ = std::move(scods);
    poset.covers_ = std::move(covers);
    if (labels.empty())
        for (int i = 0; i < poset.size(); ++i)
            labels.push_back("n" + std::to_string(i));
    if (static_cast<int>(labels.size()) != poset.size())
        throw UsageError("synthetic poset: label count mismatch");
    poset.labels_ = std::move(labels);
    for (const auto& [a, b] : poset.covers_)
        if (a < 0 || b < 0 || a >= poset.size() || b >= poset.size())
            throw UsageError("synthetic poset: cover index out of range");
    poset.close_upward();
    return poset;
}

GapCheckResult check_codim_gaps(const OrbitPoset& poset) {
    GapCheckResult res;
    for (const auto& [a, b] : poset.covers()) {
        ++res.cover_pairs;
        res.cover_gaps.push_back(poset.scod_of(a) - poset.scod_of(b));
    }
    std::sort(res.cover_gaps.begin(), res.cover_gaps.end());
    for (int a = 0; a < poset.size(); ++a) {
        for (int b = a + 1; b < poset.size(); ++b) {
            if (!poset.leq(a, b)) continue;
            ++res.comparable_pairs;
            const std::int64_t gap = poset.scod_of(a) - poset.scod_of(b);
            if (gap <= 0)
                res.violations.push_back(
                    {a, b, poset.scod_of(a), poset.scod_of(b),
                     gap_witness(poset, a, b, "monotone")});
            else if (gap < 2)
                res.violations.push_back({a, b, poset.scod_of(a), poset.scod_of(b),
                                          gap_witness(poset, a, b, "gap")});
        }
    }
    return res;
}

Perversity build_perversity(const OrbitPoset& poset) {
    Perversity p;
    p.values.reserve(static_cast<std::size_t>(poset.size()));
    for (int a = 0; a < poset.size(); ++a) {
        const std::int64_t s = poset.scod_of(a);
        if (s < 0) throw InvariantError("negative scod in perversity construction");
        p.values.push_back(s / 2);
    }
    for (int a = 0; a < poset.size(); ++a)
        for (int b = a + 1; b < poset.size(); ++b) {
            if (!poset.leq(a, b)) continue;
            const std::int64_t dp = p.values[static_cast<std::size_t>(a)] -
                                    p.values[static_cast<std::size_t>(b)];
            const std::int64_t ds = poset.scod_of(a) - poset.scod_of(b);
            if (!(0 < dp && dp < ds))
                throw InvariantError("perversity sandwich failed between '" +
                                     poset.label(a) + "' and '" + poset.label(b) +
                                     "': dp=" + std::to_string(dp) +
                                     " dscod=" + std::to_string(ds));
        }
    return p;
}

std::uint64_t WeightBox::volume() const {
    std::uint64_t v = 1;
    for (const auto& [lo, hi] : bounds) {
        if (hi < lo) throw UsageError("weight box with hi < lo");
        v *= static_cast<std::uint64_t>(hi - lo + 1);
    }
    return v;
}

std::vector<BasisLabel> enumerate_basis_labels(const OrbitPoset& poset,
                                               const WeightBox& box) {
    const RootSystem& rs = poset.system();
    if (static_cast<int>(box.bounds.size()) != rs.rank())
        throw UsageError("weight box rank mismatch");
    box.volume(); // rejects hi < lo

    std::vector<std::vector<std::int64_t>> weights;
    std::vector<std::int64_t> cur(box.bounds.size());
    for (std::size_t i = 0; i < box.bounds.size(); ++i) cur[i] = box.bounds[i].first;
    for (;;) {
        weights.push_back(cur);
        std::size_t i = 0;
        while (i < cur.size()) {
            if (cur[i] < box.bounds[i].second) {
                ++cur[i];
                for (std::size_t j = 0; j < i; ++j) cur[j] = box.bounds[j].first;
                break;
            }
            ++i;
        }
        if (i == cur.size()) break;
    }
    std::sort(weights.begin(), weights.end());

    std::vector<BasisLabel> out;
    out.reserve(weights.size() * static_cast<std::size_t>(poset.size()));
    for (int node = 0; node < poset.size(); ++node) {
        for (const auto& wt : weights) {
            std::vector<Rational> fc(wt.begin(), wt.end());
            out.push_back({node, wt, rs.from_fundamental(fc)});
        }
    }
    return out;
}

} // namespace stag
