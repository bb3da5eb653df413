#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stag/root_system.hpp"

namespace stag {

/// Default cap on exhaustive group enumeration (covers everything through
/// E6/D7); larger groups are refused with their computed order.
inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

using ActionMatrix = std::array<std::int64_t, kMaxRank * kMaxRank>;

/// A Weyl group element, stored as its exact linear action on the root
/// lattice (column j = image of alpha_j in simple-root coordinates)
/// together with the action of the inverse and the cached length.
/// Immutable value type; equality is equality of action matrices.
class WeylElement {
public:
    static WeylElement identity(const RootSystem& rs);
    static WeylElement simple_reflection(const RootSystem& rs, int i);
    /// Reflection in an arbitrary root (by canonical root index).
    static WeylElement root_reflection(const RootSystem& rs, int root_idx);

    const RootSystem& system() const { return *sys_; }
    int length() const { return len_; }
    bool is_identity() const { return len_ == 0; }

    RootCoords apply(const RootCoords& v) const;
    RootCoords apply_inverse(const RootCoords& v) const;
    LatticeVector apply(const LatticeVector& v) const;
    /// Image of a root as a root index.
    int apply_root(int root_idx) const;

    /// l(w s_j) > l(w), i.e. w(alpha_j) is positive.
    bool right_ascent(int j) const;
    /// l(s_j w) > l(w), i.e. w^{-1}(alpha_j) is positive.
    bool left_ascent(int j) const;

    WeylElement times_simple(int j) const; // w * s_j
    WeylElement simple_times(int j) const; // s_j * w
    WeylElement inverse() const;

    /// Canonical reduced word (greedy smallest left descent); 0-based
    /// simple-root indices.  This is the lexicographically least reduced
    /// word, and the element's serialized form.
    std::vector<int> word() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.fwd_ == b.fwd_;
    }

    const ActionMatrix& matrix() const { return fwd_; }

private:
    WeylElement(const RootSystem* rs) : sys_(rs) {}

    const RootSystem* sys_ = nullptr;
    ActionMatrix fwd_{};
    ActionMatrix inv_{};
    int len_ = 0;

    friend WeylElement multiply(const WeylElement&, const WeylElement&);
};

/// Product uv; the returned length is recomputed from the inversion count.
WeylElement multiply(const WeylElement& u, const WeylElement& v);

/// True iff l(uv) = l(u) + l(v).
bool is_length_additive(const WeylElement& u, const WeylElement& v);

WeylElement from_word(const RootSystem& rs, std::span<const int> word);

/// Longest element of W, or of the standard parabolic subgroup generated by
/// the given simple reflections (0-based indices; empty set -> identity).
WeylElement longest_element(const RootSystem& rs);
WeylElement longest_element(const RootSystem& rs, std::span<const int> parabolic);

/// Strong Bruhat order, decided by the greedy subword scan against the
/// canonical reduced word of w.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

struct GroupEnumeration {
    std::vector<WeylElement> elements; // BFS by length, lex reduced word
    std::vector<std::pair<std::size_t, std::size_t>> length_blocks; // [begin,end) per length
};

/// Every element exactly once, in deterministic order.  Throws GuardError
/// (with the computed |W|) if the group exceeds the cap.
GroupEnumeration enumerate_group(const RootSystem& rs,
                                 std::uint64_t cap = kDefaultGroupCap);

/// A standard parabolic: subset of simple roots, its root subsystem, and
/// the longest element of W_L.
struct ParabolicData {
    std::vector<int> subset;           // 0-based simple indices, sorted
    std::vector<int> phi_L;            // root indices in Phi_L
    std::vector<int> phi_L_pos;        // positive root indices in Phi_L
    std::vector<char> root_in_L;       // indexed by root index
    WeylElement w0_L;

    bool contains_root(int root_idx) const { return root_in_L[root_idx] != 0; }
};

ParabolicData make_parabolic(const RootSystem& rs, std::vector<int> subset);

/// |W_L| by direct subgroup enumeration (guarded by cap).
std::uint64_t parabolic_subgroup_order(const RootSystem& rs, const ParabolicData& p,
                                       std::uint64_t cap = kDefaultGroupCap);

enum class CosetMode { minimal, maximal };

/// One representative per coset wW_L, in enumeration order of the minimal
/// representatives.  Maximal mode returns minimal * w0_L.
std::vector<WeylElement> coset_representatives(const RootSystem& rs,
                                               const ParabolicData& p, CosetMode mode,
                                               std::uint64_t cap = kDefaultGroupCap);

WeylElement minimal_coset_rep(WeylElement w, const ParabolicData& p);
WeylElement maximal_coset_rep(const WeylElement& w, const ParabolicData& p);

/// "e" or 1-based letters like "1 2 1"; the human-facing word format.
std::string word_str(const WeylElement& w);
std::string word_str(std::span<const int> word);

} // namespace stag
