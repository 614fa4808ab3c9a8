#pragma once

// Sparse row echelon forms keyed by a leading (largest) column.
//
// Integer mode keeps the row lattice unchanged: every step is unimodular
// (subtracting multiples, or an extended-gcd 2x2 transform), so the pivots
// describe the Z-span and unit pivots certify a Z-free quotient. Field mode
// normalizes pivots to 1.

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "orbconf/scalar.hpp"

namespace orbconf::detail {

// Thrown by checked int64 arithmetic; callers retry with mpz_class.
struct Overflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
}

template <typename T>
struct RingOps;

template <>
struct RingOps<std::int64_t> {
    static constexpr bool field = false;
    static std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
    static std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
    static std::int64_t neg(std::int64_t a) { return checked_neg(a); }
    static bool zero(std::int64_t a) { return a == 0; }
    static bool negative(std::int64_t a) { return a < 0; }
    static bool unit(std::int64_t a) { return a == 1 || a == -1; }
    static bool divides(std::int64_t p, std::int64_t r) { return r % p == 0; }
    static std::int64_t quot(std::int64_t r, std::int64_t p) { return r / p; }
    // g = u*a + v*b, g = gcd(a, b) > 0
    static void gcdext(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& u, std::int64_t& v) {
        std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            r0 = checked_add(r0, checked_neg(checked_mul(q, r1)));
            std::swap(r0, r1);
            s0 = checked_add(s0, checked_neg(checked_mul(q, s1)));
            std::swap(s0, s1);
            t0 = checked_add(t0, checked_neg(checked_mul(q, t1)));
            std::swap(t0, t1);
        }
        if (r0 < 0) {
            r0 = checked_neg(r0);
            s0 = checked_neg(s0);
            t0 = checked_neg(t0);
        }
        g = r0;
        u = s0;
        v = t0;
    }
    static Integer to_integer(std::int64_t a) { return Integer(static_cast<long>(a)); }
};

template <>
struct RingOps<Integer> {
    static constexpr bool field = false;
    static Integer add(const Integer& a, const Integer& b) { return a + b; }
    static Integer mul(const Integer& a, const Integer& b) { return a * b; }
    static Integer neg(const Integer& a) { return -a; }
    static bool zero(const Integer& a) { return sgn(a) == 0; }
    static bool negative(const Integer& a) { return sgn(a) < 0; }
    static bool unit(const Integer& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
    static bool divides(const Integer& p, const Integer& r) { return mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()) != 0; }
    static Integer quot(const Integer& r, const Integer& p) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        return q;
    }
    static void gcdext(const Integer& a, const Integer& b, Integer& g, Integer& u, Integer& v) {
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static Integer to_integer(const Integer& a) { return a; }
};

template <>
struct RingOps<Rational> {
    static constexpr bool field = true;
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational neg(const Rational& a) { return -a; }
    static bool zero(const Rational& a) { return sgn(a) == 0; }
    static bool negative(const Rational& a) { return sgn(a) < 0; }
    static bool unit(const Rational& a) { return sgn(a) != 0; }
};

template <typename T>
using SparseRow = std::vector<std::pair<std::uint64_t, T>>;  // strictly decreasing columns

// a + q * b
template <typename T>
SparseRow<T> axpy(const SparseRow<T>& a, const T& q, const SparseRow<T>& b) {
    using Ops = RingOps<T>;
    SparseRow<T> out;
    out.reserve(a.size() + b.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
        if (y == b.size() || (x < a.size() && a[x].first > b[y].first)) {
            out.push_back(a[x++]);
        } else if (x == a.size() || b[y].first > a[x].first) {
            out.emplace_back(b[y].first, Ops::mul(q, b[y].second));
            ++y;
        } else {
            T v = Ops::add(a[x].second, Ops::mul(q, b[y].second));
            if (!Ops::zero(v)) out.emplace_back(a[x].first, std::move(v));
            ++x;
            ++y;
        }
    }
    return out;
}

// s * a + t * b
template <typename T>
SparseRow<T> combine(const T& s, const SparseRow<T>& a, const T& t, const SparseRow<T>& b) {
    SparseRow<T> scaled;
    scaled.reserve(a.size());
    for (const auto& [c, v] : a) scaled.emplace_back(c, RingOps<T>::mul(s, v));
    return axpy(scaled, t, b);
}

template <typename T>
void negate(SparseRow<T>& row) {
    for (auto& e : row) e.second = RingOps<T>::neg(e.second);
}

template <typename T>
class SparseEchelon {
public:
    using Ops = RingOps<T>;
    using Row = SparseRow<T>;

    explicit SparseEchelon(std::uint64_t columns) : pivots_(columns) {}

    std::uint64_t columns() const { return pivots_.size(); }
    std::uint64_t rank() const { return rank_; }
    bool has_pivot(std::uint64_t col) const { return !pivots_[col].empty(); }
    const Row& pivot_row(std::uint64_t col) const { return pivots_[col]; }

    // True when every pivot entry is a unit (always true in field mode).
    bool unit_pivots() const {
        if constexpr (Ops::field) return true;
        for (const auto& r : pivots_)
            if (!r.empty() && !Ops::unit(r.front().second)) return false;
        return true;
    }

    // Adds a row to the span; returns true when the rank grew.
    bool insert(Row row) {
        while (!row.empty()) {
            const auto c = row.front().first;
            auto& piv = pivots_[c];
            if (piv.empty()) {
                normalize(row);
                piv = std::move(row);
                ++rank_;
                return true;
            }
            const T& p = piv.front().second;
            const T& r = row.front().second;
            if constexpr (Ops::field) {
                row = axpy(row, Ops::neg(r), piv);
            } else if (Ops::divides(p, r)) {
                row = axpy(row, Ops::neg(Ops::quot(r, p)), piv);
            } else {
                T g, u, v;
                Ops::gcdext(p, r, g, u, v);
                Row new_piv = combine(u, piv, v, row);
                row = combine(Ops::quot(p, g), row, Ops::neg(Ops::quot(r, g)), piv);
                normalize(new_piv);
                piv = std::move(new_piv);
            }
        }
        return false;
    }

    // Reduces every pivot column out of row. Needs unit pivots.
    Row reduce(Row row) const {
        Row out;
        std::size_t pos = 0;
        while (pos < row.size()) {
            const auto c = row[pos].first;
            const auto& piv = pivots_[c];
            if (piv.empty()) {
                out.push_back(std::move(row[pos++]));
                continue;
            }
            row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pos));
            pos = 0;
            if constexpr (Ops::field) {
                row = axpy(row, Ops::neg(row.front().second), piv);
            } else {
                if (!Ops::unit(piv.front().second)) throw std::logic_error("reduce needs unit pivots");
                // p = +-1 so r / p = r * p
                row = axpy(row, Ops::neg(Ops::mul(row.front().second, piv.front().second)), piv);
            }
        }
        return out;
    }

    std::vector<Row> rows() const {
        std::vector<Row> out;
        for (const auto& r : pivots_)
            if (!r.empty()) out.push_back(r);
        return out;
    }

private:
    static void normalize(Row& row) {
        if constexpr (Ops::field) {
            const T inv = 1 / row.front().second;
            for (auto& e : row) e.second *= inv;
        } else {
            if (Ops::negative(row.front().second)) negate(row);
        }
    }

    std::vector<Row> pivots_;
    std::uint64_t rank_ = 0;
};

}  // namespace orbconf::detail
