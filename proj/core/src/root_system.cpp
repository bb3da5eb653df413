#include "stag/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "stag/errors.hpp"

namespace stag {

namespace {

// Classical positive-root counts, used as an independent cross-check on the
// closure enumeration.
int classical_positive_count(LieType t, int n) {
    switch (t) {
        case LieType::A: return n * (n + 1) / 2;
        case LieType::B:
        case LieType::C: return n * n;
        case LieType::D: return n * (n - 1);
        case LieType::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case LieType::F: return 24;
        case LieType::G: return 6;
    }
    throw UsageError("unknown Lie type");
}

void require_valid(LieType t, int rank) {
    bool ok = false;
    switch (t) {
        case LieType::A: ok = rank >= 1; break;
        case LieType::B: ok = rank >= 2; break;
        case LieType::C: ok = rank >= 3; break;
        case LieType::D: ok = rank >= 4; break;
        case LieType::E: ok = rank >= 6 && rank <= 8; break;
        case LieType::F: ok = rank == 4; break;
        case LieType::G: ok = rank == 2; break;
    }
    if (rank > kMaxRank) ok = false;
    if (!ok)
        throw UsageError("invalid irreducible type/rank combination: " +
                         type_label(t, rank));
}

std::vector<std::vector<std::int64_t>> cartan_matrix(LieType t, int n) {
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (t) {
        case LieType::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case LieType::B: // alpha_n short
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 1][n - 2] = -2;
            break;
        case LieType::C: // alpha_n long
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            a[n - 2][n - 1] = -2;
            break;
        case LieType::D:
            for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case LieType::E:
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case LieType::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            link(0, 1); link(1, 2); link(2, 3);
            a[2][1] = -2;
            break;
        case LieType::G: // alpha_1 long, alpha_2 short
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

// Minimal positive integers d_i making diag(d) * C symmetric.  Connectivity
// of the Dynkin diagram lets us propagate from d_0 and rescale.
std::vector<std::int64_t> compute_symmetrizers(
    const std::vector<std::vector<std::int64_t>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Rational> d(n, 0);
    d[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                // d_i * a_ij = d_j * a_ji
                if (d[i] != 0 && d[j] == 0) {
                    d[j] = d[i] * a[i][j] / a[j][i];
                    changed = true;
                }
            }
    }
    Int denom_lcm = 1;
    for (const auto& q : d) {
        if (q == 0) throw InvariantError("Dynkin diagram not connected");
        denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(q));
    }
    std::vector<std::int64_t> out(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        Int v = boost::multiprecision::numerator(d[i]) * denom_lcm /
                boost::multiprecision::denominator(d[i]);
        out[i] = static_cast<std::int64_t>(v);
        g = boost::multiprecision::gcd(g, v);
    }
    for (auto& v : out) v /= static_cast<std::int64_t>(g);
    return out;
}

bool all_nonneg(const RootCoords& c) {
    return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; });
}
bool all_nonpos(const RootCoords& c) {
    return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x <= 0; });
}

} // namespace

std::pair<LieType, int> parse_type_label(const std::string& label) {
    if (label.size() < 2)
        throw UsageError("bad type label '" + label + "' (expected e.g. A2, F4)");
    const char c = static_cast<char>(std::toupper(label[0]));
    if (c < 'A' || c > 'G')
        throw UsageError("bad Lie type '" + label + "'");
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw UsageError("bad rank in type label '" + label + "'");
        rank = rank * 10 + (label[i] - '0');
        if (rank > 99) throw UsageError("rank out of range in '" + label + "'");
    }
    return {static_cast<LieType>(c), rank};
}

std::string type_label(LieType t, int rank) {
    return std::string(1, static_cast<char>(t)) + std::to_string(rank);
}

RootSystem RootSystem::build(const std::string& label) {
    auto [t, r] = parse_type_label(label);
    return build(t, r);
}

RootSystem RootSystem::build(LieType t, int rank) {
    require_valid(t, rank);
    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(t, rank);
    rs.sym_ = compute_symmetrizers(rs.cartan_);
    rs.enumerate_roots();
    rs.validate();
    return rs;
}

void RootSystem::enumerate_roots() {
    const int n = rank_;
    std::set<RootCoords> seen;
    std::vector<RootCoords> queue;
    for (int i = 0; i < n; ++i) {
        RootCoords c{};
        c[i] = 1;
        seen.insert(c);
        queue.push_back(c);
    }
    // Closure under simple reflections: s_i(v) changes coordinate i by
    // -sum_j a_ij v_j.
    while (!queue.empty()) {
        RootCoords v = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            std::int64_t pair = 0;
            for (int j = 0; j < n; ++j) pair += cartan_[i][j] * v[j];
            RootCoords w = v;
            w[i] -= pair;
            if (seen.insert(w).second) queue.push_back(w);
        }
    }

    std::vector<RootCoords> positives;
    for (const auto& c : seen) {
        if (all_nonneg(c)) positives.push_back(c);
        else if (!all_nonpos(c))
            throw InvariantError("root with mixed-sign coordinates");
    }
    auto ht = [n](const RootCoords& c) {
        std::int64_t h = 0;
        for (int i = 0; i < n; ++i) h += c[i];
        return h;
    };
    std::sort(positives.begin(), positives.end(),
              [&](const RootCoords& x, const RootCoords& y) {
                  const auto hx = ht(x), hy = ht(y);
                  if (hx != hy) return hx < hy;
                  return x < y;
              });

    positive_count_ = static_cast<int>(positives.size());
    roots_ = positives;
    for (const auto& c : positives) {
        RootCoords m{};
        for (int i = 0; i < n; ++i) m[i] = -c[i];
        roots_.push_back(m);
    }

    two_rho_ = RootCoords{};
    for (const auto& c : positives)
        for (int i = 0; i < n; ++i) two_rho_[i] += c[i];

    simple_index_.assign(n, -1);
    index_.clear();
    index_.reserve(roots_.size());
    for (int idx = 0; idx < static_cast<int>(roots_.size()); ++idx)
        index_.emplace_back(roots_[idx], idx);
    std::sort(index_.begin(), index_.end());
    for (int i = 0; i < n; ++i) {
        RootCoords c{};
        c[i] = 1;
        simple_index_[i] = find_root(c);
        if (simple_index_[i] < 0) throw InvariantError("simple root missing");
    }

    // Fundamental weights: columns of the inverse Cartan matrix, solved
    // exactly.
    fundamental_.clear();
    const int m = n;
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(2 * m, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = cartan_[i][j];
        aug[i][m + i] = 1;
    }
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw InvariantError("singular Cartan matrix");
        std::swap(aug[col], aug[piv]);
        const Rational p = aug[col][col];
        for (int j = 0; j < 2 * m; ++j) aug[col][j] /= p;
        for (int r = 0; r < m; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (int j = 0; j < 2 * m; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    for (int i = 0; i < m; ++i) {
        LatticeVector w(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) w[j] = aug[j][m + i];
        fundamental_.push_back(std::move(w));
    }
}

void RootSystem::validate() const {
    if (positive_count_ != classical_positive_count(type_, rank_))
        throw InvariantError(label() + ": closure produced " +
                             std::to_string(positive_count_) +
                             " positive roots, expected " +
                             std::to_string(classical_positive_count(type_, rank_)));
    // Form matrix symmetric, short roots of squared length 2.
    std::int64_t min_norm = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (sym_[i] * cartan_[i][j] != sym_[j] * cartan_[j][i])
                throw InvariantError("form matrix not symmetric");
    for (int p = 0; p < positive_count_; ++p) {
        const std::int64_t nrm = pairing_ii(roots_[p], roots_[p]);
        if (nrm <= 0) throw InvariantError("nonpositive root norm");
        if (min_norm == 0 || nrm < min_norm) min_norm = nrm;
    }
    if (min_norm != 2)
        throw InvariantError("short-root normalization broken: min norm " +
                             std::to_string(min_norm));
    // <2rho, omega_i> must be an integer for every fundamental weight.
    const LatticeVector tr = two_rho();
    for (int i = 0; i < rank_; ++i) {
        const Rational v = pairing(tr, fundamental_[i]);
        if (!is_integer(v))
            throw InvariantError("<2rho, omega_" + std::to_string(i + 1) +
                                 "> not integral in " + label());
    }
}

int RootSystem::find_root(const RootCoords& c) const {
    auto it = std::lower_bound(index_.begin(), index_.end(),
                               std::make_pair(c, 0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it == index_.end() || it->first != c) return -1;
    return it->second;
}

std::int64_t RootSystem::height(int idx) const {
    std::int64_t h = 0;
    for (int i = 0; i < rank_; ++i) h += roots_[idx][i];
    return h;
}

std::int64_t RootSystem::pairing_ii(const RootCoords& x, const RootCoords& y) const {
    std::int64_t acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        std::int64_t row = 0;
        for (int j = 0; j < rank_; ++j) row += cartan_[i][j] * y[j];
        acc += x[i] * sym_[i] * row;
    }
    return acc;
}

Rational RootSystem::pairing(const LatticeVector& x, const LatticeVector& y) const {
    if (static_cast<int>(x.rank()) != rank_ || static_cast<int>(y.rank()) != rank_)
        throw UsageError("pairing: rank mismatch with root system " + label());
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < rank_; ++j) row += Rational(cartan_[i][j]) * y[j];
        acc += x[i] * Rational(sym_[i]) * row;
    }
    // Root lattice paired against weight lattice must land in Z.
    if ((in_root_lattice(x) && in_weight_lattice(y)) ||
        (in_root_lattice(y) && in_weight_lattice(x))) {
        if (!is_integer(acc))
            throw InvariantError("non-integral lattice pairing " + acc.str());
    }
    return acc;
}

Rational RootSystem::coroot_pairing(const LatticeVector& alpha,
                                    const LatticeVector& x) const {
    const Rational nn = pairing(alpha, alpha);
    if (nn == 0) throw InvariantError("coroot of a zero-length vector");
    return 2 * pairing(alpha, x) / nn;
}

std::int64_t RootSystem::coroot_pairing_ii(int root_idx, const RootCoords& x) const {
    const std::int64_t nn = root_norm(root_idx);
    const std::int64_t num = 2 * pairing_ii(roots_[root_idx], x);
    if (num % nn != 0)
        throw InvariantError("non-integral coroot pairing");
    return num / nn;
}

std::int64_t RootSystem::root_norm(int idx) const {
    return pairing_ii(roots_[idx], roots_[idx]);
}

bool RootSystem::in_root_lattice(const LatticeVector& v) const {
    return static_cast<int>(v.rank()) == rank_ && v.is_integral();
}

bool RootSystem::in_weight_lattice(const LatticeVector& v) const {
    if (static_cast<int>(v.rank()) != rank_) return false;
    for (int i = 0; i < rank_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < rank_; ++j) acc += Rational(cartan_[i][j]) * v[j];
        if (!is_integer(acc)) return false;
    }
    return true;
}

std::vector<Rational> RootSystem::to_fundamental(const LatticeVector& v) const {
    if (static_cast<int>(v.rank()) != rank_)
        throw UsageError("to_fundamental: rank mismatch");
    std::vector<Rational> out(rank_);
    for (int i = 0; i < rank_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < rank_; ++j) acc += Rational(cartan_[i][j]) * v[j];
        out[i] = acc;
    }
    return out;
}

LatticeVector RootSystem::from_fundamental(const std::vector<Rational>& c) const {
    if (static_cast<int>(c.size()) != rank_)
        throw UsageError("from_fundamental: rank mismatch");
    LatticeVector v(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) v[j] += c[i] * fundamental_[i][j];
    }
    return v;
}

boost::multiprecision::cpp_int weyl_group_order(LieType t, int rank) {
    require_valid(t, rank);
    using boost::multiprecision::cpp_int;
    auto fact = [](int n) {
        cpp_int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    cpp_int p2 = 1;
    switch (t) {
        case LieType::A: return fact(rank + 1);
        case LieType::B:
        case LieType::C:
            for (int i = 0; i < rank; ++i) p2 *= 2;
            return p2 * fact(rank);
        case LieType::D:
            for (int i = 0; i < rank - 1; ++i) p2 *= 2;
            return p2 * fact(rank);
        case LieType::E:
            if (rank == 6) return 51840;
            if (rank == 7) return 2903040;
            return cpp_int("696729600");
        case LieType::F: return 1152;
        case LieType::G: return 12;
    }
    throw UsageError("unknown Lie type");
}

} // namespace stag
