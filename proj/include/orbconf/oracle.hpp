#pragma once

// Brute-force reference for A_n: the degree-d piece of the free exterior
// algebra modulo the span of (relator ^ free monomial of degree d-2), with
// exact ranks over Q and invariant factors over Z. It shares nothing with the
// straightening code except the relator list.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "orbconf/algebra.hpp"
#include "orbconf/detail/smith.hpp"
#include "orbconf/detail/sparse_echelon.hpp"
#include "orbconf/error.hpp"
#include "orbconf/presentation.hpp"

namespace orbconf {

struct OracleOptions {
    std::uint64_t budget = 200000;  // maximum number of free monomials C(N1, d)
    std::uint64_t dense_budget = 4000000;  // entries allowed in a dense Smith form fallback
};

struct DegreeReport {
    unsigned degree = 0;
    Integer free_monomials;
    std::uint64_t ideal_rank = 0;
    Integer quotient_dim;
    Integer expected_dim;
    std::optional<std::vector<Integer>> invariant_factors;
    bool basis_independent = false;
    bool pass = false;
};

struct BasisReport {
    std::vector<DegreeReport> degrees;
    bool pass() const {
        for (const auto& d : degrees)
            if (!d.pass) return false;
        return true;
    }
};

// Colex ranking of d-subsets of {0..N-1}: rank = sum_t C(f_t, t+1).
class ColexRanker {
public:
    ColexRanker(std::uint64_t n, unsigned d) : d_(d), table_(d + 1, std::vector<std::uint64_t>(n + 1, 0)) {
        for (unsigned k = 0; k <= d; ++k)
            for (std::uint64_t x = 0; x <= n; ++x) table_[k][x] = k == 0 ? 1 : (x == 0 ? 0 : table_[k][x - 1] + table_[k - 1][x - 1]);
    }
    std::uint64_t rank(std::span<const GenIndex> f) const {
        std::uint64_t r = 0;
        for (std::size_t t = 0; t < f.size(); ++t) r += table_[t + 1][f[t]];
        return r;
    }

private:
    unsigned d_;
    std::vector<std::vector<std::uint64_t>> table_;  // table_[k][x] = C(x, k)
};

class QuotientOracle {
public:
    explicit QuotientOracle(std::shared_ptr<const Presentation> pres, OracleOptions options = {})
        : pres_(std::move(pres)), options_(options) {
        if (!pres_) throw PreconditionError("null presentation");
    }
    explicit QuotientOracle(Presentation pres, OracleOptions options = {})
        : QuotientOracle(std::make_shared<const Presentation>(std::move(pres)), options) {}

    const Presentation& presentation() const { return *pres_; }

    Integer free_monomials(unsigned d) const { return binomial(pres_->generator_count(), d); }

    std::uint64_t ideal_rank(unsigned d) const { return data(d).rank; }

    Integer quotient_rank(unsigned d) const { return free_monomials(d) - Integer(static_cast<unsigned long>(data(d).rank)); }

    // Nonzero invariant factors of the relator matrix in degree d.
    std::vector<Integer> integral_invariants(unsigned d) const {
        const auto& dd = data(d);
        if (dd.unit) return std::vector<Integer>(dd.rank, Integer(1));
        return dense_invariants(dd);
    }

    // Image of a raw free-algebra element of degree d in coordinates over basis(p, d).
    std::vector<Rational> reduce_in_quotient(const Element<Integer>& raw, unsigned d) const {
        const auto& dd = data(d);
        if (!dd.standard_is_basis) throw Error("basis failure: basis monomials are not the standard monomials of the quotient in degree " + std::to_string(d));
        const ColexRanker ranker(pres_->generator_count(), d);
        detail::SparseRow<Integer> row;
        for (const auto& [m, c] : raw.terms()) {
            if (m.degree() != d) throw PreconditionError("raw element is not homogeneous of degree " + std::to_string(d));
            row.emplace_back(ranker.rank(m.factors()), c);
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
        const auto reduced = dd.reduce(row);
        std::vector<Rational> out(dd.basis.size(), Rational(0));
        for (const auto& [col, v] : reduced) {
            auto it = dd.basis_position.find(col);
            if (it == dd.basis_position.end()) throw InternalError("reduction left a non-basis column");
            out[it->second] = v;
        }
        return out;
    }

    DegreeReport check(unsigned d, bool with_invariants = true) const {
        DegreeReport r;
        r.degree = d;
        r.free_monomials = free_monomials(d);
        const auto& dd = data(d);
        r.ideal_rank = dd.rank;
        r.quotient_dim = r.free_monomials - Integer(static_cast<unsigned long>(dd.rank));
        r.expected_dim = dimension(*pres_, d);
        r.basis_independent = dd.basis_independent;
        if (with_invariants) r.invariant_factors = integral_invariants(d);
        r.pass = r.quotient_dim == r.expected_dim && r.expected_dim == Integer(static_cast<unsigned long>(dd.basis.size())) && dd.basis_independent;
        if (r.invariant_factors)
            for (const auto& f : *r.invariant_factors)
                if (f != 1) r.pass = false;
        return r;
    }

    BasisReport check_basis(unsigned max_degree, bool with_invariants = true) const {
        BasisReport rep;
        for (unsigned d = 0; d <= max_degree; ++d) rep.degrees.push_back(check(d, with_invariants));
        return rep;
    }

private:
    struct DegreeData {
        std::uint64_t columns = 0;
        std::uint64_t rank = 0;
        bool unit = true;
        bool basis_independent = false;
        bool standard_is_basis = false;
        // exactly one of small/big holds the integer echelon
        std::unique_ptr<detail::SparseEchelon<std::int64_t>> small;
        std::unique_ptr<detail::SparseEchelon<Integer>> big;
        mutable std::once_flag field_once;
        mutable std::unique_ptr<detail::SparseEchelon<Rational>> field;
        std::vector<Monomial> basis;
        std::map<std::uint64_t, std::size_t> basis_position;

        bool has_pivot(std::uint64_t c) const { return small ? small->has_pivot(c) : big->has_pivot(c); }

        std::vector<detail::SparseRow<Integer>> integer_rows() const {
            if (big) return big->rows();
            std::vector<detail::SparseRow<Integer>> out;
            for (const auto& r : small->rows()) {
                detail::SparseRow<Integer> b;
                for (const auto& [c, v] : r) b.emplace_back(c, Integer(static_cast<long>(v)));
                out.push_back(std::move(b));
            }
            return out;
        }

        const detail::SparseEchelon<Rational>& rational() const {
            std::call_once(field_once, [this] {
                field = std::make_unique<detail::SparseEchelon<Rational>>(columns);
                for (const auto& r : integer_rows()) {
                    detail::SparseRow<Rational> q;
                    for (const auto& [c, v] : r) q.emplace_back(c, Rational(v));
                    field->insert(std::move(q));
                }
                if (field->rank() != rank) throw InternalError("integer and rational ranks disagree");
            });
            return *field;
        }

        // Exact reduction modulo the ideal; integer arithmetic when the pivots allow it.
        detail::SparseRow<Rational> reduce(const detail::SparseRow<Integer>& row) const {
            auto lift = [](const auto& r) {
                detail::SparseRow<Rational> q;
                for (const auto& [c, v] : r) q.emplace_back(c, Rational(Integer(v)));
                return q;
            };
            if (unit && big) return lift(big->reduce(row));
            if (unit && small) {
                try {
                    detail::SparseRow<std::int64_t> s;
                    for (const auto& [c, v] : row) {
                        if (!v.fits_slong_p()) throw detail::Overflow{};
                        s.emplace_back(c, v.get_si());
                    }
                    detail::SparseRow<Rational> q;
                    for (const auto& [c, v] : small->reduce(std::move(s))) q.emplace_back(c, Rational(Integer(static_cast<long>(v))));
                    return q;
                } catch (const detail::Overflow&) {
                }
            }
            return rational().reduce(lift(row));
        }
    };

    const DegreeData& data(unsigned d) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(d); it != cache_.end()) return *it->second;
        }
        auto built = build(d);
        std::lock_guard lock(mutex_);
        return *cache_.try_emplace(d, std::move(built)).first->second;
    }

    template <typename T>
    void eliminate(detail::SparseEchelon<T>& ech, unsigned d, const ColexRanker& ranker) const {
        const auto n1 = static_cast<GenIndex>(pres_->generator_count());
        if (d < 2 || d - 2 > n1) return;
        const unsigned k = d - 2;
        std::vector<GenIndex> comb(k);
        std::vector<GenIndex> word;
        detail::SparseRow<T> row;
        for (const auto& rel : pres_->relators()) {
            for (unsigned t = 0; t < k; ++t) comb[t] = t;
            while (true) {
                row.clear();
                for (const auto& [m, c] : rel.element.terms()) {
                    word.assign(m.factors().begin(), m.factors().end());
                    word.insert(word.end(), comb.begin(), comb.end());
                    auto sm = sort_with_sign(word);
                    if (!sm) continue;
                    T v;
                    if constexpr (std::is_same_v<T, std::int64_t>)
                        v = c.get_si();
                    else
                        v = T(c);
                    if (sm->sign < 0) v = detail::RingOps<T>::neg(v);
                    row.emplace_back(ranker.rank(sm->monomial.factors()), v);
                }
                if (!row.empty()) {
                    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
                    ech.insert(row);
                }
                // next k-combination of {0..n1-1}
                int t = static_cast<int>(k) - 1;
                while (t >= 0 && comb[t] == n1 - k + static_cast<unsigned>(t)) --t;
                if (t < 0) break;
                ++comb[t];
                for (auto u = static_cast<unsigned>(t) + 1; u < k; ++u) comb[u] = comb[u - 1] + 1;
            }
        }
    }

    std::unique_ptr<DegreeData> build(unsigned d) const {
        const auto n1 = pres_->generator_count();
        const Integer cols = binomial(n1, d);
        if (cols > Integer(static_cast<unsigned long>(options_.budget)))
            throw BudgetExceeded("degree " + std::to_string(d) + " needs " + cols.get_str() + " free monomials; budget is " +
                                 std::to_string(options_.budget));
        auto dd = std::make_unique<DegreeData>();
        dd->columns = cols.get_ui();
        const ColexRanker ranker(n1, d);
        try {
            auto ech = std::make_unique<detail::SparseEchelon<std::int64_t>>(dd->columns);
            eliminate(*ech, d, ranker);
            dd->rank = ech->rank();
            dd->unit = ech->unit_pivots();
            dd->small = std::move(ech);
        } catch (const detail::Overflow&) {
            auto ech = std::make_unique<detail::SparseEchelon<Integer>>(dd->columns);
            eliminate(*ech, d, ranker);
            dd->rank = ech->rank();
            dd->unit = ech->unit_pivots();
            dd->big = std::move(ech);
        }

        if (d <= pres_->n()) dd->basis = basis(*pres_, d);
        std::vector<std::uint64_t> basis_cols;
        for (std::size_t k = 0; k < dd->basis.size(); ++k) {
            const auto col = ranker.rank(dd->basis[k].factors());
            dd->basis_position.emplace(col, k);
            basis_cols.push_back(col);
        }
        // Basis monomials are independent modulo the ideal iff their reductions are.
        bool any_pivot = false;
        for (auto c : basis_cols) any_pivot = any_pivot || dd->has_pivot(c);
        dd->standard_is_basis = !any_pivot && dd->columns - dd->rank == dd->basis.size();
        if (!any_pivot) {
            dd->basis_independent = true;
        } else {
            detail::SparseEchelon<Rational> images(dd->columns);
            for (auto c : basis_cols) images.insert(dd->reduce({{c, Integer(1)}}));
            dd->basis_independent = images.rank() == dd->basis.size();
        }
        return dd;
    }

    std::vector<Integer> dense_invariants(const DegreeData& dd) const {
        const auto rows = dd.integer_rows();
        std::map<std::uint64_t, std::size_t> used;
        for (const auto& r : rows)
            for (const auto& [c, v] : r) used.emplace(c, 0);
        std::size_t k = 0;
        for (auto& [c, pos] : used) pos = k++;
        if (static_cast<double>(rows.size()) * static_cast<double>(used.size()) > static_cast<double>(options_.dense_budget))
            throw BudgetExceeded("dense Smith form of " + std::to_string(rows.size()) + " x " + std::to_string(used.size()) + " exceeds budget");
        detail::DenseMatrix m(rows.size(), std::vector<Integer>(used.size(), Integer(0)));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r]) m[r][used[c]] = v;
        return detail::smith_invariants(std::move(m));
    }

    std::shared_ptr<const Presentation> pres_;
    OracleOptions options_;
    mutable std::mutex mutex_;
    mutable std::map<unsigned, std::unique_ptr<DegreeData>> cache_;
};

inline Integer quotient_rank(const Presentation& p, unsigned d, OracleOptions options = {}) { return QuotientOracle(p, options).quotient_rank(d); }

inline std::vector<Integer> integral_invariants(const Presentation& p, unsigned d, OracleOptions options = {}) {
    return QuotientOracle(p, options).integral_invariants(d);
}

inline BasisReport check_basis(const Presentation& p, unsigned max_degree, OracleOptions options = {}) {
    return QuotientOracle(p, options).check_basis(max_degree);
}

}  // namespace orbconf
