#pragma once

// Free exterior algebra on numbered degree-1 generators: monomials are strictly
// increasing index sequences, elements are finite sparse linear combinations.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orbconf/error.hpp"
#include "orbconf/scalar.hpp"

namespace orbconf {

using GenIndex = std::uint32_t;

class Monomial {
public:
    Monomial() = default;

    // Factors must already be strictly increasing.
    explicit Monomial(std::vector<GenIndex> factors) : factors_(std::move(factors)) {
        for (std::size_t k = 1; k < factors_.size(); ++k)
            if (factors_[k - 1] >= factors_[k]) throw PreconditionError("monomial factors must be strictly increasing");
    }

    static Monomial unit() { return {}; }

    std::size_t degree() const { return factors_.size(); }
    std::span<const GenIndex> factors() const { return factors_; }
    GenIndex operator[](std::size_t k) const { return factors_[k]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return a.factors_ <=> b.factors_;
    }

private:
    std::vector<GenIndex> factors_;
};

struct SignedMonomial {
    int sign;
    Monomial monomial;
};

// Sorts an arbitrary word of generators into a monomial, tracking the
// permutation sign; nullopt when a generator repeats (the product is zero).
inline std::optional<SignedMonomial> sort_with_sign(std::vector<GenIndex> word) {
    int sign = 1;
    // insertion sort: each adjacent swap flips the sign
    for (std::size_t k = 1; k < word.size(); ++k) {
        for (std::size_t m = k; m > 0 && word[m - 1] >= word[m]; --m) {
            if (word[m - 1] == word[m]) return std::nullopt;
            std::swap(word[m - 1], word[m]);
            sign = -sign;
        }
    }
    return SignedMonomial{sign, Monomial(std::move(word))};
}

template <typename Scalar = Integer>
class Element {
public:
    using Terms = std::map<Monomial, Scalar>;

    Element() = default;

    static Element generator(GenIndex g, Scalar coeff = Scalar(1)) {
        Element e;
        e.add(Monomial({g}), coeff);
        return e;
    }
    static Element from_monomial(Monomial m, Scalar coeff = Scalar(1)) {
        Element e;
        e.add(std::move(m), coeff);
        return e;
    }
    static Element one() { return from_monomial(Monomial::unit()); }

    // Adds coeff * (word sorted with sign).
    void add_word(std::vector<GenIndex> word, const Scalar& coeff) {
        if (auto sm = sort_with_sign(std::move(word))) add(std::move(sm->monomial), sm->sign > 0 ? Scalar(coeff) : Scalar(-coeff));
    }

    void add(Monomial m, const Scalar& coeff) {
        if (orbconf::is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
        if (!inserted) {
            it->second += coeff;
            if (orbconf::is_zero(it->second)) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    // Degree of a homogeneous element; nullopt for zero or mixed elements.
    std::optional<std::size_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        const auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, Scalar(-c));
        return *this;
    }
    Element& operator*=(const Scalar& s) {
        if (orbconf::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Scalar(-1); }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    friend bool operator==(const Element&, const Element&) = default;

    template <typename Other>
    Element<Other> cast() const {
        Element<Other> out;
        for (const auto& [m, c] : terms_) out.add(m, Other(c));
        return out;
    }

private:
    Terms terms_;
};

// Product in the free exterior algebra (no relations).
template <typename Scalar>
Element<Scalar> exterior_product(const Element<Scalar>& x, const Element<Scalar>& y) {
    Element<Scalar> out;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            std::vector<GenIndex> word(mx.factors().begin(), mx.factors().end());
            word.insert(word.end(), my.factors().begin(), my.factors().end());
            out.add_word(std::move(word), Scalar(cx * cy));
        }
    return out;
}

}  // namespace orbconf
