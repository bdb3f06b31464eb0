#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ternary/cyclotomic.hpp"
#include "ternary/errors.hpp"

namespace ternary {

/// Exponent sequence nu in {0,1,2}^inf with finite support, naming the
/// basis monomial e^nu = e_1^{nu_1} e_2^{nu_2} ... . Stored sparsely as
/// strictly increasing (position, exponent) pairs with exponent in {1,2};
/// the canonical form is unique.
class MultiIndex {
public:
    using Entry = std::pair<std::uint32_t, std::uint8_t>;

    MultiIndex() = default;

    /// Build from sparse (position, exponent) pairs; positions 1-based.
    static MultiIndex from_entries(std::vector<Entry> entries) {
        MultiIndex idx;
        std::uint32_t prev = 0;
        for (const auto& [pos, exp] : entries) {
            if (pos == 0) throw DomainError("multi-index positions are 1-based");
            if (pos <= prev) throw DomainError("multi-index positions must be strictly increasing");
            if (exp != 1 && exp != 2) throw DomainError("multi-index exponents must be 1 or 2");
            prev = pos;
        }
        idx.entries_ = std::move(entries);
        return idx;
    }

    /// Build from a dense exponent list starting at position 1, e.g. {1,0,2}.
    static MultiIndex from_dense(std::initializer_list<int> exps) {
        std::vector<Entry> entries;
        std::uint32_t pos = 1;
        for (int e : exps) {
            if (e < 0 || e > 2) throw DomainError("dense exponent out of {0,1,2}");
            if (e != 0) entries.emplace_back(pos, static_cast<std::uint8_t>(e));
            ++pos;
        }
        return from_entries(std::move(entries));
    }

    static MultiIndex unit(std::uint32_t position, std::uint8_t exponent = 1) {
        return from_entries({{position, exponent}});
    }

    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Total degree |nu| = sum of exponents.
    int degree() const {
        int d = 0;
        for (const auto& [pos, exp] : entries_) d += exp;
        return d;
    }

    /// Support size #nu.
    std::size_t support_size() const { return entries_.size(); }

    std::uint32_t max_position() const {
        return entries_.empty() ? 0 : entries_.back().first;
    }

    int exponent_at(std::uint32_t position) const {
        for (const auto& [pos, exp] : entries_) {
            if (pos == position) return exp;
            if (pos > position) break;
        }
        return 0;
    }

    /// nu + mu, or nullopt when some slot exceeds 2.
    static std::optional<MultiIndex> sum(const MultiIndex& x, const MultiIndex& y) {
        MultiIndex out;
        out.entries_.reserve(x.entries_.size() + y.entries_.size());
        std::size_t i = 0, j = 0;
        while (i < x.entries_.size() || j < y.entries_.size()) {
            if (j == y.entries_.size() ||
                (i < x.entries_.size() && x.entries_[i].first < y.entries_[j].first)) {
                out.entries_.push_back(x.entries_[i++]);
            } else if (i == x.entries_.size() || y.entries_[j].first < x.entries_[i].first) {
                out.entries_.push_back(y.entries_[j++]);
            } else {
                int e = x.entries_[i].second + y.entries_[j].second;
                if (e > 2) return std::nullopt;
                out.entries_.emplace_back(x.entries_[i].first, static_cast<std::uint8_t>(e));
                ++i, ++j;
            }
        }
        return out;
    }

    /// mu - nu, or nullopt when some slot would go negative.
    static std::optional<MultiIndex> difference(const MultiIndex& mu, const MultiIndex& nu) {
        MultiIndex out;
        std::size_t i = 0, j = 0;
        while (i < mu.entries_.size() || j < nu.entries_.size()) {
            if (j == nu.entries_.size() ||
                (i < mu.entries_.size() && mu.entries_[i].first < nu.entries_[j].first)) {
                out.entries_.push_back(mu.entries_[i++]);
            } else if (i == mu.entries_.size() || nu.entries_[j].first < mu.entries_[i].first) {
                return std::nullopt;  // nu occupies a slot mu does not
            } else {
                int e = mu.entries_[i].second - nu.entries_[j].second;
                if (e < 0) return std::nullopt;
                if (e > 0)
                    out.entries_.emplace_back(mu.entries_[i].first, static_cast<std::uint8_t>(e));
                ++i, ++j;
            }
        }
        return out;
    }

    /// Index 2*nu (valid only when nu in {0,1}^inf; caller checks exponents).
    MultiIndex doubled() const {
        MultiIndex out;
        out.entries_.reserve(entries_.size());
        for (const auto& [pos, exp] : entries_)
            out.entries_.emplace_back(pos, static_cast<std::uint8_t>(2 * exp));
        return out;
    }

    friend bool operator==(const MultiIndex& x, const MultiIndex& y) {
        return x.entries_ == y.entries_;
    }
    friend bool operator!=(const MultiIndex& x, const MultiIndex& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& idx) {
        if (idx.empty()) return os << "1";
        bool first = true;
        for (const auto& [pos, exp] : idx.entries_) {
            if (!first) os << "*";
            first = false;
            os << "e[" << pos << "]";
            if (exp == 2) os << "^2";
        }
        return os;
    }

private:
    std::vector<Entry> entries_;
};

/// Canonical term order: by total degree, then within a degree by the
/// dense exponent sequence with the larger exponent at the first differing
/// position coming first. For d = 2, degree 2 this lists e1^2, e1*e2, e2^2.
struct GradedLexLess {
    bool operator()(const MultiIndex& x, const MultiIndex& y) const {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        const auto& ex = x.entries();
        const auto& ey = y.entries();
        std::size_t i = 0, j = 0;
        while (i < ex.size() && j < ey.size()) {
            if (ex[i].first != ey[j].first) return ex[i].first < ey[j].first;
            if (ex[i].second != ey[j].second) return ex[i].second > ey[j].second;
            ++i, ++j;
        }
        return i < ex.size();  // remaining occupied slots sort first
    }
};

/// Number of generator transpositions (mod 3) incurred when reordering
/// e^nu e^mu into canonical form: sum over positions j > s of nu_j * mu_s.
/// O(#nu * #mu) over the sparse supports.
inline int sigma_exponent(const MultiIndex& nu, const MultiIndex& mu) {
    long swaps = 0;
    for (const auto& [j, vj] : nu.entries())
        for (const auto& [s, ms] : mu.entries()) {
            if (s >= j) break;
            swaps += static_cast<long>(vj) * ms;
        }
    return static_cast<int>((2 * swaps) % 3);
}

/// Structure phase of e^nu e^mu = sigma(nu, mu) e^{nu+mu}: zero if some
/// slot overflows past exponent 2, otherwise the power of w counting the
/// reordering transpositions.
inline Cyclotomic sigma(const MultiIndex& nu, const MultiIndex& mu) {
    if (!MultiIndex::sum(nu, mu)) return Cyclotomic::zero();
    return Cyclotomic::omega_pow(sigma_exponent(nu, mu));
}

}  // namespace ternary
