#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <vector>

#include "stag/rational.hpp"

namespace stag {

/// Upper bound on the rank of any supported root system (E8).
inline constexpr int kMaxRank = 8;

/// Integer coordinate vector in the simple-root basis.  Entries beyond the
/// system's rank stay zero, so whole-array comparison and hashing are valid.
using RootCoords = std::array<std::int64_t, kMaxRank>;

/// Exact-rational coordinate vector in the simple-root basis.  Represents
/// roots, weights, half-sums and their images under the Weyl group.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t rank) : coords_(rank) {}
    LatticeVector(std::initializer_list<Rational> cs) : coords_(cs) {}
    explicit LatticeVector(std::vector<Rational> cs) : coords_(std::move(cs)) {}

    static LatticeVector from_ints(std::span<const std::int64_t> cs) {
        LatticeVector v(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i) v.coords_[i] = cs[i];
        return v;
    }
    static LatticeVector from_coords(const RootCoords& c, std::size_t rank) {
        LatticeVector v(rank);
        for (std::size_t i = 0; i < rank; ++i) v.coords_[i] = c[i];
        return v;
    }

    std::size_t rank() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_integral() const {
        for (const auto& c : coords_)
            if (!is_integer(c)) return false;
        return true;
    }

    LatticeVector& operator+=(const LatticeVector& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    LatticeVector& operator*=(const Rational& s) {
        for (auto& c : coords_) c *= s;
        return *this;
    }

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(const Rational& s, LatticeVector a) { return a *= s; }
    friend LatticeVector operator-(LatticeVector a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
        return a.coords_ == b.coords_;
    }
    /// Lexicographic order; used only to keep multisets in a stable order.
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        return a.coords_ < b.coords_;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ", ";
            os << coords_[i];
        }
        os << ')';
        return os.str();
    }

private:
    void check_rank(const LatticeVector& o) const {
        if (o.coords_.size() != coords_.size())
            throw UsageError("lattice vector rank mismatch");
    }

    std::vector<Rational> coords_;
};

} // namespace stag
