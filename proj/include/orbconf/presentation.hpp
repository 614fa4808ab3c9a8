#pragma once

// Degree-1 generators and the quadratic relators of the algebra A_n for a
// marked action, plus the pullback action of G^n x| S_n on generators.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orbconf/element.hpp"
#include "orbconf/error.hpp"
#include "orbconf/group_action.hpp"

namespace orbconf {

struct Generator {
    enum class Kind : std::uint8_t { off_diag, diag };

    Kind kind = Kind::off_diag;
    unsigned i = 0;  // first strand (equals j for diag)
    unsigned j = 0;  // second strand
    Elem g = 0;      // off_diag only
    Point p = 0;     // diag only

    static Generator off_diag(unsigned i, unsigned j, Elem g) { return {Kind::off_diag, i, j, g, 0}; }
    static Generator diag(unsigned k, Point p) { return {Kind::diag, k, k, 0, p}; }

    bool is_diag() const { return kind == Kind::diag; }
    unsigned second_index() const { return j; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

enum class Rel3Variant { derived, printed };

inline std::string_view rel3_variant_name(Rel3Variant v) { return v == Rel3Variant::derived ? "derived" : "printed"; }

enum class RelatorFamily { rel1a, rel2, rel3, rel4 };

inline std::string_view family_name(RelatorFamily f) {
    switch (f) {
        case RelatorFamily::rel1a: return "rel1a";
        case RelatorFamily::rel2: return "rel2";
        case RelatorFamily::rel3: return "rel3";
        case RelatorFamily::rel4: return "rel4";
    }
    return "?";
}

// Instantiating data; fields a family does not use stay zero.
struct RelatorData {
    unsigned i = 0, j = 0, k = 0;
    Elem h = 0, g = 0;
    Point p = 0, q = 0;
    friend bool operator==(const RelatorData&, const RelatorData&) = default;
};

struct Relator {
    RelatorFamily family;
    RelatorData data;
    Element<Integer> element;  // homogeneous of degree 2, declared zero
};

// An element of G^n x| S_n. As a map of configurations it first permutes the
// strands, P -> (p_{sigma^-1(1)}, ..., p_{sigma^-1(n)}), then moves strand k by h[k-1].
struct Transform {
    std::vector<Elem> h;           // h[k-1] acts on strand k
    std::vector<unsigned> sigma;   // sigma[k-1] = sigma(k), values in 1..n

    static Transform identity(unsigned n) {
        Transform t{std::vector<Elem>(n, 0), std::vector<unsigned>(n)};
        std::iota(t.sigma.begin(), t.sigma.end(), 1u);
        return t;
    }

    unsigned sigma_inverse(unsigned k) const {
        for (unsigned m = 0; m < sigma.size(); ++m)
            if (sigma[m] == k) return m + 1;
        throw PreconditionError("sigma is not a permutation");
    }
};

// The map composition a o b (b applied first).
inline Transform compose(const FiniteGroup& G, const Transform& a, const Transform& b) {
    const auto n = static_cast<unsigned>(a.h.size());
    Transform out{std::vector<Elem>(n), std::vector<unsigned>(n)};
    for (unsigned k = 1; k <= n; ++k) {
        out.h[k - 1] = G(a.h[k - 1], b.h[a.sigma_inverse(k) - 1]);
        out.sigma[k - 1] = a.sigma[b.sigma[k - 1] - 1];
    }
    return out;
}

class Presentation {
public:
    Presentation(MarkedAction action, unsigned n, Rel3Variant variant = Rel3Variant::derived)
        : action_(std::move(action)), n_(n), variant_(variant) {
        if (action_.sphere_case) throw PreconditionError("sphere case has no affine presentation");
        if (n_ < 1) throw PreconditionError("strand count n must be >= 1");
        if (action_.z_size() == 0) throw PreconditionError("Z must be non-empty");
        if (action_.order() > 1) {
            auto report = validate(action_);
            if (!report.ok())
                throw PreconditionError("marked action fails validation: " + report.violations.front().code + " (" +
                                        report.violations.front().detail + ")");
        }
        if (action_.p_infinity >= action_.z_size()) throw PreconditionError("p_infinity outside Z");
        diag_rank_.assign(action_.z_size(), 0);
        unsigned r = 0;
        for (Point p = 0; p < action_.z_size(); ++p) {
            if (p == action_.p_infinity) continue;
            diag_rank_[p] = r++;
            finite_points_.push_back(p);
        }
        block_start_.assign(n_ + 2, 0);
        for (unsigned j = 1; j <= n_; ++j) block_start_[j + 1] = block_start_[j] + block_size(j);
        build_generators();
        build_relators();
    }

    const MarkedAction& action() const { return action_; }
    const FiniteGroup& group() const { return action_.group; }
    unsigned n() const { return n_; }
    Rel3Variant variant() const { return variant_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Relator>& relators() const { return relators_; }
    std::size_t generator_count() const { return generators_.size(); }
    // Points of Z other than p_infinity, in index order.
    const std::vector<Point>& finite_points() const { return finite_points_; }

    // Number of generators whose second strand index is j: |G|(j-1) + |Z| - 1.
    std::size_t block_size(unsigned j) const { return (j - 1) * action_.order() + action_.z_size() - 1; }
    GenIndex block_start(unsigned j) const { return static_cast<GenIndex>(block_start_[j]); }

    // Index of w[i,j;g] for i != j, canonicalized through w[j,i;g] = w[i,j;g^-1].
    GenIndex off_diag_index(unsigned i, unsigned j, Elem g) const {
        if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw PreconditionError("off-diagonal generator needs distinct strands in 1..n");
        if (g >= action_.order()) throw PreconditionError("group element out of range");
        if (i > j) {
            std::swap(i, j);
            g = group().inv[g];
        }
        return static_cast<GenIndex>(block_start_[j] + (i - 1) * action_.order() + g);
    }

    // Index of w[k;p]; nullopt for p = p_infinity, whose form is zero.
    std::optional<GenIndex> diag_index(unsigned k, Point p) const {
        if (k < 1 || k > n_) throw PreconditionError("strand out of range");
        if (p >= action_.z_size()) throw PreconditionError("point out of range");
        if (p == action_.p_infinity) return std::nullopt;
        return static_cast<GenIndex>(block_start_[k] + (k - 1) * action_.order() + diag_rank_[p]);
    }

    std::optional<GenIndex> index_of(const Generator& x) const {
        if (x.is_diag()) return diag_index(x.j, x.p);
        return off_diag_index(x.i, x.j, x.g);
    }

    Element<Integer> omega(unsigned i, unsigned j, Elem g) const { return Element<Integer>::generator(off_diag_index(i, j, g)); }

    Element<Integer> omega_diag(unsigned k, Point p) const {
        if (auto idx = diag_index(k, p)) return Element<Integer>::generator(*idx);
        return {};
    }

    // ASCII name used by the CLI: w[i,j;g] or w[k;label].
    std::string generator_name(GenIndex idx) const {
        const auto& x = generators_.at(idx);
        if (x.is_diag()) return "w[" + std::to_string(x.j) + ";" + action_.points[x.p] + "]";
        return "w[" + std::to_string(x.i) + "," + std::to_string(x.j) + ";" + std::to_string(x.g) + "]";
    }

    Element<Integer> rel1a(unsigned k, Point p, Point q) const { return wedge(omega_diag(k, p), omega_diag(k, q)); }

    // w_ij^h w_jj^p - w_ij^h w_ii^{hp} - w_ii^{hp} w_jj^p - w_ii^{h.pinf} w_ij^h
    Element<Integer> rel2(unsigned i, unsigned j, Elem h, Point p) const {
        const auto w = omega(i, j, h);
        const Point hp = action_.apply(h, p);
        const auto a = omega_diag(i, action_.apply(h, action_.p_infinity));
        auto r = wedge(w, omega_diag(j, p));
        r -= wedge(w, omega_diag(i, hp));
        r -= wedge(omega_diag(i, hp), omega_diag(j, p));
        r -= wedge(a, w);
        return r;
    }

    // W Y - X (Y - W) - b (X' - Y) - a (W - X) - a b with W = w_ik^h, Y = w_jk^g,
    // X = w_ij^{hg^-1}, a = w_ii^{h.pinf}, b = w_jj^{g.pinf}. X' is X for the derived
    // variant and w_ij^{h^-1 g} for the printed one.
    Element<Integer> rel3(unsigned i, unsigned j, unsigned k, Elem h, Elem g) const {
        const auto& G = group();
        const auto W = omega(i, k, h);
        const auto Y = omega(j, k, g);
        const auto X = omega(i, j, G(h, G.inv[g]));
        const auto Xb = variant_ == Rel3Variant::derived ? X : omega(i, j, G(G.inv[h], g));
        const auto a = omega_diag(i, action_.apply(h, action_.p_infinity));
        const auto b = omega_diag(j, action_.apply(g, action_.p_infinity));
        auto r = wedge(W, Y);
        r -= wedge(X, Y - W);
        r -= wedge(b, Xb - Y);
        r -= wedge(a, W - X);
        r -= wedge(a, b);
        return r;
    }

    // w_ij^h w_ij^g - (w_ii^{p1} + w_ii^{p2})(w_ij^g - w_ij^h) + w_ii^{g.pinf} w_ij^g
    //   - w_ii^{h.pinf} w_ij^h, where {p1, p2} are the fixed points of hg^-1.
    Element<Integer> rel4(unsigned i, unsigned j, Elem h, Elem g) const {
        if (h == g) throw PreconditionError("rel4 needs h != g");
        const auto& G = group();
        const auto pair = action_.fixed_pair.at(G(h, G.inv[g]));
        if (!pair) throw InternalError("missing fixed pair for a non-identity element");
        const auto wh = omega(i, j, h);
        const auto wg = omega(i, j, g);
        const auto pinf = action_.p_infinity;
        auto r = wedge(wh, wg);
        r -= wedge(omega_diag(i, pair->first) + omega_diag(i, pair->second), wg - wh);
        r += wedge(omega_diag(i, action_.apply(g, pinf)), wg);
        r -= wedge(omega_diag(i, action_.apply(h, pinf)), wh);
        return r;
    }

    // Pullback of one generator: sigma^*(h^*(x)).
    Element<Integer> pullback(const Transform& t, const Generator& x) const {
        check_transform(t);
        const auto& G = group();
        const Point pinf = action_.p_infinity;
        Element<Integer> moved;
        if (x.is_diag()) {
            const Elem hinv = G.inv[t.h[x.j - 1]];
            moved = omega_diag(x.j, action_.apply(hinv, x.p)) - omega_diag(x.j, action_.apply(hinv, pinf));
        } else {
            const Elem hi = t.h[x.i - 1], hj = t.h[x.j - 1];
            moved = omega(x.i, x.j, G(G(G.inv[hi], x.g), hj));
            moved -= omega_diag(x.i, action_.apply(G.inv[hi], pinf));
            moved -= omega_diag(x.j, action_.apply(G.inv[hj], pinf));
        }
        Element<Integer> out;
        for (const auto& [m, c] : moved.terms()) {
            const auto& y = generators_[m[0]];
            if (y.is_diag())
                out += c * omega_diag(t.sigma_inverse(y.j), y.p);
            else
                out += c * omega(t.sigma_inverse(y.i), t.sigma_inverse(y.j), y.g);
        }
        return out;
    }

    // Multiplicative extension of pullback to the free exterior algebra.
    Element<Integer> pullback(const Transform& t, const Element<Integer>& x) const {
        Element<Integer> out;
        for (const auto& [m, c] : x.terms()) {
            auto image = Element<Integer>::one();
            for (auto f : m.factors()) image = exterior_product(image, pullback(t, generators_[f]));
            out += c * image;
        }
        return out;
    }

private:
    static Element<Integer> wedge(const Element<Integer>& x, const Element<Integer>& y) { return exterior_product(x, y); }

    void check_transform(const Transform& t) const {
        if (t.h.size() != n_ || t.sigma.size() != n_) throw PreconditionError("transform has the wrong strand count");
        std::vector<bool> hit(n_ + 1, false);
        for (auto s : t.sigma) {
            if (s < 1 || s > n_ || hit[s]) throw PreconditionError("sigma is not a permutation of 1..n");
            hit[s] = true;
        }
        for (auto g : t.h)
            if (g >= action_.order()) throw PreconditionError("transform element out of range");
    }

    void build_generators() {
        const auto order = action_.order();
        for (unsigned j = 1; j <= n_; ++j) {
            for (unsigned i = 1; i < j; ++i)
                for (Elem g = 0; g < order; ++g) generators_.push_back(Generator::off_diag(i, j, g));
            for (auto p : finite_points_) generators_.push_back(Generator::diag(j, p));
        }
    }

    void emit(RelatorFamily family, RelatorData data, Element<Integer> element) {
        if (!element.is_zero()) relators_.push_back({family, data, std::move(element)});
    }

    void build_relators() {
        const auto order = static_cast<Elem>(action_.order());
        for (unsigned k = 1; k <= n_; ++k)
            for (std::size_t a = 0; a < finite_points_.size(); ++a)
                for (std::size_t b = a + 1; b < finite_points_.size(); ++b) {
                    RelatorData d;
                    d.i = k;
                    d.p = finite_points_[a];
                    d.q = finite_points_[b];
                    emit(RelatorFamily::rel1a, d, rel1a(k, d.p, d.q));
                }
        for (unsigned i = 1; i <= n_; ++i)
            for (unsigned j = 1; j <= n_; ++j) {
                if (i == j) continue;
                for (Elem h = 0; h < order; ++h)
                    for (auto p : finite_points_) {
                        RelatorData d;
                        d.i = i;
                        d.j = j;
                        d.h = h;
                        d.p = p;
                        emit(RelatorFamily::rel2, d, rel2(i, j, h, p));
                    }
            }
        for (unsigned i = 1; i <= n_; ++i)
            for (unsigned j = 1; j <= n_; ++j)
                for (unsigned k = 1; k <= n_; ++k) {
                    if (i == j || j == k || i == k) continue;
                    for (Elem h = 0; h < order; ++h)
                        for (Elem g = 0; g < order; ++g) {
                            RelatorData d;
                            d.i = i;
                            d.j = j;
                            d.k = k;
                            d.h = h;
                            d.g = g;
                            emit(RelatorFamily::rel3, d, rel3(i, j, k, h, g));
                        }
                }
        for (unsigned i = 1; i <= n_; ++i)
            for (unsigned j = i + 1; j <= n_; ++j)
                for (Elem h = 0; h < order; ++h)
                    for (Elem g = h + 1; g < order; ++g) {
                        RelatorData d;
                        d.i = i;
                        d.j = j;
                        d.h = h;
                        d.g = g;
                        emit(RelatorFamily::rel4, d, rel4(i, j, h, g));
                    }
    }

    MarkedAction action_;
    unsigned n_;
    Rel3Variant variant_;
    std::vector<unsigned> diag_rank_;
    std::vector<Point> finite_points_;
    std::vector<std::size_t> block_start_;
    std::vector<Generator> generators_;
    std::vector<Relator> relators_;
};

// Canonical generator list: sorted by second strand, then first strand, then element/point.
inline std::vector<Generator> generators(const MarkedAction& action, unsigned n) { return Presentation(action, n).generators(); }

inline std::vector<Relator> relators(const MarkedAction& action, unsigned n, Rel3Variant variant = Rel3Variant::derived) {
    return Presentation(action, n, variant).relators();
}

inline Element<Integer> symmetry_action(const Presentation& pres, const Transform& t, const Generator& x) { return pres.pullback(t, x); }

}  // namespace orbconf
