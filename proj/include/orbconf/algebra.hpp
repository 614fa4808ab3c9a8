#pragma once

// Multiplication in A_n by straightening products onto basis monomials,
// i.e. monomials whose factors have pairwise distinct second strand indices.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>
#include <vector>

#include "orbconf/element.hpp"
#include "orbconf/error.hpp"
#include "orbconf/presentation.hpp"

namespace orbconf {

// alpha_k = |G|(k-1) + |Z| - 1 for k = 1..n.
inline std::vector<Integer> alpha_profile(const Presentation& p) {
    std::vector<Integer> out;
    for (unsigned k = 1; k <= p.n(); ++k) out.emplace_back(static_cast<unsigned long>(p.block_size(k)));
    return out;
}

// e_d(alpha_1, ..., alpha_n), read off prod (1 + alpha_k t).
inline Integer dimension(const Presentation& p, unsigned d) {
    std::vector<Integer> e{Integer(1)};
    for (const auto& a : alpha_profile(p)) {
        e.emplace_back(0);
        for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += a * e[k - 1];
    }
    return d < e.size() ? e[d] : Integer(0);
}

inline bool is_basis_monomial(const Presentation& p, const Monomial& m) {
    for (std::size_t t = 1; t < m.degree(); ++t)
        if (p.generators()[m[t - 1]].j == p.generators()[m[t]].j) return false;
    return true;
}

// Basis monomials of degree d, in increasing (lexicographic) order.
inline std::vector<Monomial> basis(const Presentation& p, unsigned d) {
    if (d > p.n()) throw PreconditionError("basis degree must lie in 0..n");
    std::vector<Monomial> out;
    std::vector<GenIndex> cur;
    auto rec = [&](auto&& self, unsigned next_block) -> void {
        if (cur.size() == d) {
            out.emplace_back(cur);
            return;
        }
        const auto left = d - static_cast<unsigned>(cur.size());
        for (unsigned j = next_block; j + left <= p.n() + 1; ++j) {
            const auto start = p.block_start(j);
            for (GenIndex g = start; g < start + p.block_size(j); ++g) {
                cur.push_back(g);
                self(self, j + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

template <typename Scalar = Integer>
class Algebra {
public:
    using Value = Element<Scalar>;

    explicit Algebra(std::shared_ptr<const Presentation> pres) : pres_(std::move(pres)) {
        if (!pres_) throw PreconditionError("null presentation");
    }
    explicit Algebra(Presentation pres) : Algebra(std::make_shared<const Presentation>(std::move(pres))) {}

    const Presentation& presentation() const { return *pres_; }
    std::shared_ptr<const Presentation> presentation_ptr() const { return pres_; }

    unsigned second_index(GenIndex g) const { return pres_->generators()[g].j; }

    Value generator(GenIndex g) const {
        if (g >= pres_->generator_count()) throw PreconditionError("generator index out of range");
        return Value::generator(g);
    }

    // Straightens an element of the free exterior algebra.
    Value normalize(const Value& x) const {
        Value out;
        for (const auto& [m, c] : x.terms()) {
            check_monomial(m);
            auto nf = reduce(m);
            nf *= c;
            out += nf;
        }
        return out;
    }

    Value wedge(const Value& x, const Value& y) const { return normalize(exterior_product(x, y)); }

    // Left fold of wedge over a word of generators.
    Value normal_form(const std::vector<GenIndex>& word) const {
        auto acc = Value::one();
        for (auto g : word) acc = wedge(acc, generator(g));
        return acc;
    }

    // Same reduction with the rewrite site chosen at random; no caching.
    template <typename Rng>
    Value normalize_random(const Value& x, Rng& rng) const {
        Value out;
        for (const auto& [m, c] : x.terms()) {
            check_monomial(m);
            auto nf = reduce_random(m, rng);
            nf *= c;
            out += nf;
        }
        return out;
    }

    bool is_normal(const Value& x) const {
        for (const auto& [m, c] : x.terms())
            if (!is_basis_monomial(*pres_, m)) return false;
        return true;
    }

    // Coefficients of a homogeneous normal-form element against basis(p, d).
    std::vector<Scalar> coordinates(const Value& x, unsigned d) const {
        const auto& b = basis_cached(d);
        std::vector<Scalar> out(b.size(), Scalar(0));
        for (const auto& [m, c] : x.terms()) {
            auto it = std::lower_bound(b.begin(), b.end(), m);
            if (it == b.end() || !(*it == m)) throw PreconditionError("element is not a normal form of degree " + std::to_string(d));
            out[static_cast<std::size_t>(it - b.begin())] = c;
        }
        return out;
    }

    // The value of a^b (a < b, same second index) as a combination of
    // monomials that are smaller in both senses used by the termination proof.
    const Element<Integer>& rule(GenIndex a, GenIndex b) const {
        const auto key = (static_cast<std::uint64_t>(a) << 32) | b;
        {
            std::lock_guard lock(mutex_);
            if (auto it = rules_.find(key); it != rules_.end()) return it->second;
        }
        auto value = compute_rule(a, b);
        std::lock_guard lock(mutex_);
        return rules_.try_emplace(key, std::move(value)).first->second;
    }

private:
    void check_monomial(const Monomial& m) const {
        for (auto f : m.factors())
            if (f >= pres_->generator_count()) throw PreconditionError("element does not belong to this presentation");
    }

    const std::vector<Monomial>& basis_cached(unsigned d) const {
        std::lock_guard lock(mutex_);
        auto it = bases_.find(d);
        if (it == bases_.end()) it = bases_.emplace(d, basis(*pres_, d)).first;
        return it->second;
    }

    Element<Integer> compute_rule(GenIndex a, GenIndex b) const {
        const auto& x = pres_->generators()[a];
        const auto& y = pres_->generators()[b];
        if (a >= b || x.j != y.j) throw InternalError("rule requested for a non-clashing pair");
        if (x.is_diag() && y.is_diag()) return {};
        Element<Integer> rel;
        if (y.is_diag())
            rel = pres_->rel2(x.i, x.j, x.g, y.p);
        else if (x.i == y.i)
            rel = pres_->rel4(x.i, x.j, x.g, y.g);
        else
            rel = pres_->rel3(x.i, y.i, x.j, x.g, y.g);
        const Monomial lead({a, b});
        const Integer c = rel.coefficient(lead);
        if (mpz_cmpabs_ui(c.get_mpz_t(), 1) != 0) throw InternalError("relator does not isolate the clashing pair");
        rel.add(lead, Integer(-c));
        // a^b = -c * rest  (c = +-1)
        rel *= Integer(-c);
        return rel;
    }

    // Adjacent clash positions with the largest second index first.
    std::vector<std::size_t> clashes(const Monomial& m) const {
        std::vector<std::size_t> out;
        for (std::size_t t = 1; t < m.degree(); ++t)
            if (second_index(m[t - 1]) == second_index(m[t])) out.push_back(t - 1);
        std::stable_sort(out.begin(), out.end(), [&](std::size_t u, std::size_t v) { return second_index(m[u]) > second_index(m[v]); });
        return out;
    }

    template <typename Recurse>
    Value rewrite(const Monomial& m, std::size_t t, Recurse&& recurse) const {
        const auto& r = rule(m[t], m[t + 1]);
        Value out;
        for (const auto& [pair, c] : r.terms()) {
            std::vector<GenIndex> word(m.factors().begin(), m.factors().begin() + static_cast<std::ptrdiff_t>(t));
            word.insert(word.end(), pair.factors().begin(), pair.factors().end());
            word.insert(word.end(), m.factors().begin() + static_cast<std::ptrdiff_t>(t + 2), m.factors().end());
            auto sm = sort_with_sign(std::move(word));
            if (!sm) continue;
            auto nf = recurse(sm->monomial);
            nf *= Scalar(sm->sign > 0 ? c : Integer(-c));
            out += nf;
        }
        return out;
    }

    Value reduce(const Monomial& m) const {
        const auto sites = clashes(m);
        if (sites.empty()) return Value::from_monomial(m);
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(m); it != memo_.end()) return it->second;
        }
        auto value = rewrite(m, sites.front(), [this](const Monomial& next) { return reduce(next); });
        std::lock_guard lock(mutex_);
        memo_.try_emplace(m, value);
        return value;
    }

    template <typename Rng>
    Value reduce_random(const Monomial& m, Rng& rng) const {
        const auto sites = clashes(m);
        if (sites.empty()) return Value::from_monomial(m);
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        return rewrite(m, sites[pick(rng)], [&](const Monomial& next) { return reduce_random(next, rng); });
    }

    std::shared_ptr<const Presentation> pres_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, Element<Integer>> rules_;
    mutable std::map<Monomial, Value> memo_;
    mutable std::map<unsigned, std::vector<Monomial>> bases_;
};

}  // namespace orbconf
