#include "stag/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "stag/errors.hpp"

namespace stag {

namespace {

void check_same_system(const WeylElement& a, const WeylElement& b) {
    if (&a.system() != &b.system())
        throw UsageError("Weyl elements from different root systems");
}

// Sign of a root vector; roots never have mixed signs.
bool coords_positive(const RootCoords& c, int rank) {
    for (int i = 0; i < rank; ++i) {
        if (c[i] > 0) return true;
        if (c[i] < 0) return false;
    }
    throw InvariantError("zero vector is not a root");
}

struct MatrixHash {
    std::size_t operator()(const ActionMatrix& m) const {
        std::size_t h = 1469598103934665603ull;
        for (const std::int64_t v : m) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
    WeylElement w(&rs);
    for (int i = 0; i < rs.rank(); ++i) {
        w.fwd_[i * kMaxRank + i] = 1;
        w.inv_[i * kMaxRank + i] = 1;
    }
    return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i >= rs.rank())
        throw UsageError("simple reflection index out of range");
    return identity(rs).times_simple(i);
}

WeylElement WeylElement::root_reflection(const RootSystem& rs, int root_idx) {
    WeylElement w(&rs);
    const int n = rs.rank();
    const RootCoords& gamma = rs.root_coords(root_idx);
    for (int j = 0; j < n; ++j) {
        RootCoords ej{};
        ej[j] = 1;
        const std::int64_t cp = rs.coroot_pairing_ii(root_idx, ej);
        for (int i = 0; i < n; ++i)
            w.fwd_[i * kMaxRank + j] = (i == j ? 1 : 0) - cp * gamma[i];
    }
    w.inv_ = w.fwd_; // a reflection is an involution
    int inv_count = 0;
    for (int p = 0; p < rs.positive_count(); ++p)
        if (!coords_positive(w.apply(rs.root_coords(p)), n)) ++inv_count;
    w.len_ = inv_count;
    return w;
}

RootCoords WeylElement::apply(const RootCoords& v) const {
    const int n = sys_->rank();
    RootCoords out{};
    for (int j = 0; j < n; ++j) {
        const std::int64_t vj = v[j];
        if (vj == 0) continue;
        for (int i = 0; i < n; ++i) out[i] += fwd_[i * kMaxRank + j] * vj;
    }
    return out;
}

RootCoords WeylElement::apply_inverse(const RootCoords& v) const {
    const int n = sys_->rank();
    RootCoords out{};
    for (int j = 0; j < n; ++j) {
        const std::int64_t vj = v[j];
        if (vj == 0) continue;
        for (int i = 0; i < n; ++i) out[i] += inv_[i * kMaxRank + j] * vj;
    }
    return out;
}

LatticeVector WeylElement::apply(const LatticeVector& v) const {
    const int n = sys_->rank();
    if (static_cast<int>(v.rank()) != n)
        throw UsageError("apply: rank mismatch");
    LatticeVector out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        for (int i = 0; i < n; ++i)
            out[i] += Rational(fwd_[i * kMaxRank + j]) * v[j];
    }
    return out;
}

int WeylElement::apply_root(int root_idx) const {
    const int out = sys_->find_root(apply(sys_->root_coords(root_idx)));
    if (out < 0) throw InvariantError("Weyl action does not permute the roots");
    return out;
}

bool WeylElement::right_ascent(int j) const {
    // Column j of fwd_ is w(alpha_j).
    const int n = sys_->rank();
    for (int i = 0; i < n; ++i) {
        const std::int64_t v = fwd_[i * kMaxRank + j];
        if (v > 0) return true;
        if (v < 0) return false;
    }
    throw InvariantError("action matrix has a zero column");
}

bool WeylElement::left_ascent(int j) const {
    const int n = sys_->rank();
    for (int i = 0; i < n; ++i) {
        const std::int64_t v = inv_[i * kMaxRank + j];
        if (v > 0) return true;
        if (v < 0) return false;
    }
    throw InvariantError("inverse action matrix has a zero column");
}

WeylElement WeylElement::times_simple(int j) const {
    const int n = sys_->rank();
    const auto& a = sys_->cartan();
    WeylElement out = *this;
    out.len_ = len_ + (right_ascent(j) ? 1 : -1);
    // fwd * S_j: every column c picks up -a[j][c] * column j.
    for (int c = 0; c < n; ++c) {
        const std::int64_t f = a[j][c];
        if (f == 0) continue;
        for (int i = 0; i < n; ++i)
            out.fwd_[i * kMaxRank + c] -= f * fwd_[i * kMaxRank + j];
    }
    // S_j * inv: row j becomes row_j - sum_c a[j][c] row_c.
    for (int c = 0; c < n; ++c) {
        const std::int64_t f = a[j][c];
        if (f == 0) continue;
        for (int b = 0; b < n; ++b)
            out.inv_[j * kMaxRank + b] -= f * inv_[c * kMaxRank + b];
    }
    return out;
}

WeylElement WeylElement::simple_times(int j) const {
    const int n = sys_->rank();
    const auto& a = sys_->cartan();
    WeylElement out = *this;
    out.len_ = len_ + (left_ascent(j) ? 1 : -1);
    for (int c = 0; c < n; ++c) {
        const std::int64_t f = a[j][c];
        if (f == 0) continue;
        for (int b = 0; b < n; ++b)
            out.fwd_[j * kMaxRank + b] -= f * fwd_[c * kMaxRank + b];
    }
    for (int c = 0; c < n; ++c) {
        const std::int64_t f = a[j][c];
        if (f == 0) continue;
        for (int i = 0; i < n; ++i)
            out.inv_[i * kMaxRank + c] -= f * inv_[i * kMaxRank + j];
    }
    return out;
}

WeylElement WeylElement::inverse() const {
    WeylElement out = *this;
    std::swap(out.fwd_, out.inv_);
    return out;
}

std::vector<int> WeylElement::word() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(len_));
    WeylElement x = *this;
    const int n = sys_->rank();
    while (x.len_ > 0) {
        int j = 0;
        while (j < n && x.left_ascent(j)) ++j;
        if (j == n) throw InvariantError("positive length but no left descent");
        out.push_back(j);
        x = x.simple_times(j);
    }
    return out;
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
    check_same_system(u, v);
    const RootSystem& rs = u.system();
    const int n = rs.rank();
    WeylElement out = WeylElement::identity(rs);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < n; ++k)
                acc += u.fwd_[i * kMaxRank + k] * v.fwd_[k * kMaxRank + j];
            out.fwd_[i * kMaxRank + j] = acc;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < n; ++k)
                acc += v.inv_[i * kMaxRank + k] * u.inv_[k * kMaxRank + j];
            out.inv_[i * kMaxRank + j] = acc;
        }
    int inv_count = 0;
    for (int p = 0; p < rs.positive_count(); ++p)
        if (!coords_positive(out.apply(rs.root_coords(p)), n)) ++inv_count;
    out.len_ = inv_count;
    return out;
}

bool is_length_additive(const WeylElement& u, const WeylElement& v) {
    check_same_system(u, v);
    return multiply(u, v).length() == u.length() + v.length();
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
    WeylElement w = WeylElement::identity(rs);
    for (const int j : word) {
        if (j < 0 || j >= rs.rank())
            throw UsageError("word letter out of range: " + std::to_string(j + 1));
        w = w.times_simple(j);
    }
    return w;
}

WeylElement longest_element(const RootSystem& rs) {
    std::vector<int> all(static_cast<std::size_t>(rs.rank()));
    for (int i = 0; i < rs.rank(); ++i) all[i] = i;
    return longest_element(rs, all);
}

WeylElement longest_element(const RootSystem& rs, std::span<const int> parabolic) {
    WeylElement w = WeylElement::identity(rs);
    for (bool moved = true; moved;) {
        moved = false;
        for (const int j : parabolic) {
            if (w.right_ascent(j)) {
                w = w.times_simple(j);
                moved = true;
                break;
            }
        }
    }
    return w;
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
    check_same_system(v, w);
    if (v.length() > w.length()) return false;
    const std::vector<int> word = w.word();
    WeylElement x = v;
    for (std::size_t t = word.size(); t-- > 0;) {
        if (x.length() > static_cast<int>(t) + 1) return false;
        const int j = word[t];
        if (!x.right_ascent(j)) x = x.times_simple(j);
    }
    return x.is_identity();
}

GroupEnumeration enumerate_group(const RootSystem& rs, std::uint64_t cap) {
    const auto order = weyl_group_order(rs.lie_type(), rs.rank());
    if (order > cap)
        throw GuardError("refusing to enumerate W(" + rs.label() + "): |W| = " +
                         order.str() + " exceeds cap " + std::to_string(cap));

    GroupEnumeration out;
    std::unordered_set<ActionMatrix, MatrixHash> seen;
    std::vector<WeylElement> level{WeylElement::identity(rs)};
    seen.insert(level.front().matrix());

    while (!level.empty()) {
        // Sort the level by canonical reduced word for a reproducible order.
        std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
        keyed.reserve(level.size());
        for (std::size_t i = 0; i < level.size(); ++i)
            keyed.emplace_back(level[i].word(), i);
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        const std::size_t begin = out.elements.size();
        for (const auto& [wd, i] : keyed) out.elements.push_back(level[i]);
        out.length_blocks.emplace_back(begin, out.elements.size());

        std::vector<WeylElement> next;
        for (const auto& [wd, i] : keyed) {
            const WeylElement& w = level[i];
            for (int j = 0; j < rs.rank(); ++j) {
                if (!w.right_ascent(j)) continue;
                WeylElement x = w.times_simple(j);
                if (seen.insert(x.matrix()).second) next.push_back(std::move(x));
            }
        }
        level = std::move(next);
    }

    if (order != out.elements.size())
        throw InvariantError("group enumeration count mismatch in " + rs.label());
    return out;
}

ParabolicData make_parabolic(const RootSystem& rs, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (const int j : subset)
        if (j < 0 || j >= rs.rank())
            throw UsageError("parabolic index out of range: " + std::to_string(j + 1));

    ParabolicData p{std::move(subset), {}, {}, {},
                    longest_element(rs, std::span<const int>{})};
    p.root_in_L.assign(static_cast<std::size_t>(rs.root_count()), 0);
    std::vector<char> in_subset(static_cast<std::size_t>(rs.rank()), 0);
    for (const int j : p.subset) in_subset[j] = 1;
    for (int idx = 0; idx < rs.root_count(); ++idx) {
        const RootCoords& c = rs.root_coords(idx);
        bool ok = true;
        for (int i = 0; i < rs.rank() && ok; ++i)
            if (c[i] != 0 && !in_subset[i]) ok = false;
        if (!ok) continue;
        p.root_in_L[idx] = 1;
        p.phi_L.push_back(idx);
        if (rs.is_positive(idx)) p.phi_L_pos.push_back(idx);
    }
    p.w0_L = longest_element(rs, p.subset);
    if (p.w0_L.length() != static_cast<int>(p.phi_L_pos.size()))
        throw InvariantError("l(w0_L) != |Phi_L^+|");
    for (const int idx : p.phi_L_pos) {
        const int im = p.w0_L.apply_root(idx);
        if (rs.is_positive(im) || !p.root_in_L[im])
            throw InvariantError("w0_L does not negate Phi_L^+");
    }
    return p;
}

std::uint64_t parabolic_subgroup_order(const RootSystem& rs, const ParabolicData& p,
                                       std::uint64_t cap) {
    std::unordered_set<ActionMatrix, MatrixHash> seen;
    std::vector<WeylElement> queue{WeylElement::identity(rs)};
    seen.insert(queue.front().matrix());
    while (!queue.empty()) {
        WeylElement w = std::move(queue.back());
        queue.pop_back();
        for (const int j : p.subset) {
            WeylElement x = w.times_simple(j);
            if (seen.insert(x.matrix()).second) {
                if (seen.size() > cap)
                    throw GuardError("parabolic subgroup exceeds cap " +
                                     std::to_string(cap));
                queue.push_back(std::move(x));
            }
        }
    }
    return seen.size();
}

std::vector<WeylElement> coset_representatives(const RootSystem& rs,
                                               const ParabolicData& p, CosetMode mode,
                                               std::uint64_t cap) {
    const GroupEnumeration en = enumerate_group(rs, cap);
    std::vector<WeylElement> out;
    for (const WeylElement& w : en.elements) {
        bool minimal = true;
        for (const int j : p.subset)
            if (!w.right_ascent(j)) { minimal = false; break; }
        if (!minimal) continue;
        if (mode == CosetMode::minimal) {
            out.push_back(w);
        } else {
            WeylElement mx = multiply(w, p.w0_L);
            if (mx.length() != w.length() + p.w0_L.length())
                throw InvariantError("maximal coset rep length not additive");
            out.push_back(std::move(mx));
        }
    }
    return out;
}

WeylElement minimal_coset_rep(WeylElement w, const ParabolicData& p) {
    for (bool moved = true; moved;) {
        moved = false;
        for (const int j : p.subset) {
            if (!w.right_ascent(j)) {
                w = w.times_simple(j);
                moved = true;
                break;
            }
        }
    }
    return w;
}

WeylElement maximal_coset_rep(const WeylElement& w, const ParabolicData& p) {
    WeylElement mn = minimal_coset_rep(w, p);
    WeylElement mx = multiply(mn, p.w0_L);
    if (mx.length() != mn.length() + p.w0_L.length())
        throw InvariantError("maximal coset rep length not additive");
    return mx;
}

std::string word_str(std::span<const int> word) {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << word[i] + 1;
    }
    return os.str();
}

std::string word_str(const WeylElement& w) { return word_str(w.word()); }

} // namespace stag
