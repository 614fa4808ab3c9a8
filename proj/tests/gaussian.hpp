#pragma once

// Exact arithmetic in Q(i) and explicit Moebius models of the small actions
// whose coordinates lie in Q(i). Used to evaluate the 1-forms at points.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orbconf/orbconf.hpp"

namespace gauss {

using orbconf::Rational;

struct QI {
    Rational re, im;

    QI() = default;
    QI(long r) : re(r), im(0) {}
    QI(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    friend QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
    friend QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
    friend QI operator-(const QI& a) { return {-a.re, -a.im}; }
    friend QI operator*(const QI& a, const QI& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend QI operator/(const QI& a, const QI& b) {
        const Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
};

inline const QI I{Rational(0), Rational(1)};

inline QI power(const QI& x, unsigned k) {
    QI r(1);
    for (unsigned t = 0; t < k; ++t) r = r * x;
    return r;
}

// z -> (a z + b) / (c z + d)
struct Mobius {
    QI a, b, c, d;
    QI det() const { return a * d - b * c; }
};

// A point of P^1: nullopt is infinity.
using PointValue = std::optional<QI>;

struct Model {
    std::vector<Mobius> elements;    // indexed like the group table
    std::vector<PointValue> points;  // indexed like Z
};

// Root of unity zeta_m in Q(i), m in {1, 2, 4}.
inline QI zeta(unsigned m) {
    if (m == 1) return QI(1);
    if (m == 2) return QI(-1);
    return I;
}

// Coordinates for cyclic:m (m in 1, 2, 4), dihedral:2 and trivial:z, with any
// number of extra regular orbits, matching the numbering of the builders.
inline Model standard_model(const orbconf::MarkedAction& a) {
    using orbconf::Family;
    Model md;
    std::vector<QI> orbit_bases = {QI(Rational(3), Rational(1)), QI(Rational(-5, 2), Rational(7, 3)), QI(Rational(2, 7), Rational(-4))};
    if (a.family == Family::cyclic) {
        const QI z = zeta(a.parameter);
        for (unsigned k = 0; k < a.parameter; ++k) md.elements.push_back({power(z, k), QI(0), QI(0), QI(1)});
    } else if (a.family == Family::dihedral) {
        const QI z = zeta(a.parameter);
        for (unsigned k = 0; k < a.parameter; ++k) md.elements.push_back({power(z, k), QI(0), QI(0), QI(1)});
        for (unsigned k = 0; k < a.parameter; ++k) md.elements.push_back({QI(0), power(z, k), QI(1), QI(0)});
    } else if (a.family == Family::trivial) {
        md.elements.push_back({QI(1), QI(0), QI(0), QI(1)});
    } else {
        throw std::invalid_argument("no Q(i) model");
    }
    const QI eta = a.parameter == 2 ? I : QI(1);  // eta^2 = zeta for dihedral:2
    for (const auto& label : a.points) {
        if (label == "inf") {
            md.points.push_back(std::nullopt);
        } else if (label == "0") {
            md.points.push_back(QI(0));
        } else if (label[0] == 'q') {
            md.points.push_back(QI(std::stol(label.substr(1))));
        } else if (label[0] == 'e') {
            md.points.push_back(power(eta, static_cast<unsigned>(std::stoul(label.substr(1)))));
        } else if (label[0] == 'o') {
            const auto dot = label.find('.');
            const auto t = std::stoul(label.substr(1, dot - 1));
            const auto g = std::stoul(label.substr(dot + 1));
            const auto& M = md.elements[g];
            const QI w = orbit_bases.at(t - 1);
            md.points.push_back((M.a * w + M.b) / (M.c * w + M.d));
        } else {
            throw std::invalid_argument("unknown label " + label);
        }
    }
    return md;
}

inline PointValue apply(const Mobius& M, const PointValue& p) {
    if (!p) return M.c.zero() ? PointValue{} : PointValue{M.a / M.c};
    const QI den = M.c * *p + M.d;
    if (den.zero()) return std::nullopt;
    return (M.a * *p + M.b) / den;
}

inline Mobius operator*(const Mobius& x, const Mobius& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// The standard model moved by z -> 1/(z - w), where w is the value of
// p_infinity, so that p_infinity sits at infinity. Identity when it already does.
inline Model model_of(const orbconf::MarkedAction& a) {
    Model md = standard_model(a);
    const auto w = md.points[a.p_infinity];
    if (!w) return md;
    const Mobius to{QI(0), QI(1), QI(1), -*w};
    const Mobius from{*w, QI(1), QI(1), QI(0)};
    for (auto& M : md.elements) M = to * M * from;
    for (auto& p : md.points) p = gauss::apply(to, p);
    return md;
}

inline QI random_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace gauss
