#pragma once

// The configuration space as a hypersurface complement: irreducible
// components D_ij(g), D_kk(p), the closed affine factorization for cyclic
// groups (zeta kept as an exponent), and the meridian/generator duality.

#include <string>
#include <vector>

#include "orbconf/error.hpp"
#include "orbconf/group_action.hpp"
#include "orbconf/presentation.hpp"

namespace orbconf {

struct Component {
    Generator::Kind kind;
    unsigned i = 0;  // diag: the strand k
    unsigned j = 0;
    Elem g = 0;
    Point p = 0;

    // "D12(g1)" or "D11(0)"
    std::string label(const MarkedAction& a) const {
        if (kind == Generator::Kind::diag) return "D" + std::to_string(i) + std::to_string(i) + "(" + a.points[p] + ")";
        return "D" + std::to_string(i) + std::to_string(j) + "(g" + std::to_string(g) + ")";
    }
};

struct ComponentInventory {
    std::vector<Component> components;  // same order as the generators
    std::size_t off_diag_count = 0;
    std::size_t diag_count = 0;
    std::size_t total() const { return components.size(); }
};

inline ComponentInventory components(const MarkedAction& a, unsigned n) {
    const Presentation pres(a, n);
    ComponentInventory inv;
    for (const auto& x : pres.generators()) {
        if (x.is_diag()) {
            inv.components.push_back({x.kind, x.j, x.j, 0, x.p});
            ++inv.diag_count;
        } else {
            inv.components.push_back({x.kind, x.i, x.j, x.g, 0});
            ++inv.off_diag_count;
        }
    }
    return inv;
}

// z_i - q  or  z_i - zeta^k z_j
struct Factor {
    enum class Kind { diag, off_diag };
    Kind kind;
    unsigned i = 0;
    unsigned j = 0;
    unsigned exponent = 0;
    std::string point;

    std::string to_string() const {
        const auto zi = "z" + std::to_string(i);
        if (kind == Kind::diag) return point == "0" ? zi : zi + " - " + point;
        return zi + " - ζ^" + std::to_string(exponent) + " z" + std::to_string(j);
    }
};

inline void require_cyclic(const MarkedAction& a) {
    if (a.sphere_case) throw PreconditionError("sphere case has no affine presentation");
    if (a.family != Family::cyclic && a.family != Family::trivial)
        throw Unsupported("closed affine factorization is only available for cyclic groups; for " + std::string(family_name(a.family)) +
                          " groups the components cannot be mapped homeomorphically to a hyperplane arrangement");
}

// Factors of f for a cyclic (or trivial) group with infinity in Z: all
// z_i - q first (strand, then point), then z_i - zeta^k z_j (pair, then k).
inline std::vector<Factor> defining_factors(const MarkedAction& a, unsigned n) {
    require_cyclic(a);
    if (n < 1) throw PreconditionError("strand count n must be >= 1");
    const auto inf = a.find_point("inf");
    if (!inf) throw InternalError("cyclic action without a point at infinity");
    std::vector<Factor> out;
    for (unsigned i = 1; i <= n; ++i)
        for (Point p = 0; p < a.z_size(); ++p)
            if (p != *inf) out.push_back({Factor::Kind::diag, i, 0, 0, a.points[p]});
    // element k of a cyclic group is z -> zeta^k z; the trivial group only has k = 0
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
            for (unsigned k = 0; k < a.order(); ++k) out.push_back({Factor::Kind::off_diag, i, j, k, {}});
    return out;
}

// Whether all components share a common point of C^n: Z \ {inf} is empty, or
// a single point fixed by the whole group (Z = {0, inf} for m >= 2).
inline bool is_central(const MarkedAction& a) {
    require_cyclic(a);
    const auto inf = a.find_point("inf");
    std::vector<Point> finite;
    for (Point p = 0; p < a.z_size(); ++p)
        if (!inf || p != *inf) finite.push_back(p);
    if (finite.empty()) return true;
    if (finite.size() > 1) return false;
    for (Elem g = 0; g < a.order(); ++g)
        if (a.apply(g, finite[0]) != finite[0]) return false;
    return true;
}

struct Meridian {
    Generator::Kind kind;
    unsigned i = 0;
    unsigned j = 0;
    Elem g = 0;
    Point p = 0;

    // "x12^1" or "x11^0"
    std::string label(const MarkedAction& a) const {
        if (kind == Generator::Kind::diag) return "x" + std::to_string(i) + std::to_string(i) + "^" + a.points[p];
        return "x" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(g);
    }
};

struct PeriodPairing {
    std::vector<Meridian> meridians;
    std::vector<Generator> generators;
    std::vector<std::vector<int>> matrix;  // matrix[a][b] = period of generator b on meridian a
    bool identity = false;
};

// Periods of the generators on the meridian loops: 1 when the labels agree, 0 otherwise.
inline PeriodPairing period_pairing(const MarkedAction& a, unsigned n) {
    const Presentation pres(a, n);
    PeriodPairing pp;
    pp.generators = pres.generators();
    for (const auto& x : pp.generators) {
        if (x.is_diag())
            pp.meridians.push_back({x.kind, x.j, x.j, 0, x.p});
        else
            pp.meridians.push_back({x.kind, x.i, x.j, x.g, 0});
    }
    const auto size = pp.generators.size();
    pp.matrix.assign(size, std::vector<int>(size, 0));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            const auto& m = pp.meridians[r];
            const auto& w = pp.generators[c];
            const bool same = m.kind == w.kind && m.i == w.i && m.j == w.j && (w.is_diag() ? m.p == w.p : m.g == w.g);
            pp.matrix[r][c] = same ? 1 : 0;
        }
    pp.identity = true;
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
            if (pp.matrix[r][c] != (r == c ? 1 : 0)) pp.identity = false;
    return pp;
}

}  // namespace orbconf
