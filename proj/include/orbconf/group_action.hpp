#pragma once

// Combinatorial models of the finite orientation-preserving actions on the
// Riemann sphere: a multiplication table, a tabulated action on a finite set of
// labelled points Z, the two fixed points of every non-identity element, and
// the basepoint p_infinity. No coordinates are ever used.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbconf/detail/platonic_data.hpp"
#include "orbconf/error.hpp"

namespace orbconf {

using Elem = std::uint32_t;
using Point = std::uint32_t;

struct FiniteGroup {
    std::vector<std::vector<Elem>> mult;  // mult[a][b] = a*b (b acts first)
    std::vector<Elem> inv;
    Elem identity = 0;

    std::size_t order() const { return inv.size(); }
    Elem operator()(Elem a, Elem b) const { return mult[a][b]; }

    std::size_t element_order(Elem g) const {
        std::size_t k = 1;
        for (Elem x = g; x != identity; x = mult[g][x]) ++k;
        return k;
    }

    bool is_cyclic() const {
        for (Elem g = 0; g < order(); ++g)
            if (element_order(g) == order()) return true;
        return false;
    }
};

enum class Family { trivial, cyclic, dihedral, tetrahedral, octahedral, icosahedral, sphere };
enum class Solid { tetrahedral, octahedral, icosahedral };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::trivial: return "trivial";
        case Family::cyclic: return "cyclic";
        case Family::dihedral: return "dihedral";
        case Family::tetrahedral: return "tetrahedral";
        case Family::octahedral: return "octahedral";
        case Family::icosahedral: return "icosahedral";
        case Family::sphere: return "sphere";
    }
    return "?";
}

using FixedPair = std::pair<Point, Point>;

// Element and point numbering of the built-in families:
//   cyclic(m):   element k is z -> zeta^k z; points "0", "inf" (only "inf" when m = 1)
//   dihedral(m): element k < m is z -> zeta^k z, element m+k is z -> zeta^k / z;
//                points "0", "inf", then "e<r>" = eta^r with eta^2 = zeta, r in [0, 2m)
//   platonic:    elements are rotations as vertex permutations (identity first);
//                points "v<i>", "e<i>", "f<i>" for vertices, edge midpoints, face centres
//   trivial(z):  points "inf", "q1", ..., "q<z-1>"
// Extra regular orbits append points "o<t>.<g>" on which h acts as o<t>.<g> -> o<t>.<hg>.
struct MarkedAction {
    FiniteGroup group;
    Family family = Family::trivial;
    unsigned parameter = 0;  // m for cyclic/dihedral, |Z| for trivial
    std::size_t extra_orbits = 0;
    std::vector<std::string> points;
    std::vector<std::vector<Point>> act;          // act[g][p]
    std::vector<std::optional<FixedPair>> fixed_pair;  // nullopt exactly for the identity
    Point p_infinity = 0;
    bool sphere_case = false;

    std::size_t order() const { return group.order(); }
    std::size_t z_size() const { return points.size(); }
    Point apply(Elem g, Point p) const { return act[g][p]; }

    std::optional<Point> find_point(std::string_view label) const {
        for (Point p = 0; p < points.size(); ++p)
            if (points[p] == label) return p;
        return std::nullopt;
    }

    // Canonical group spec string, e.g. "dihedral:3+orbits:1".
    std::string spec() const {
        std::string s(family_name(family));
        if (family == Family::cyclic || family == Family::dihedral || family == Family::trivial)
            s += ":" + std::to_string(parameter);
        if (extra_orbits > 0) s += "+orbits:" + std::to_string(extra_orbits);
        return s;
    }
};

namespace detail {

inline FiniteGroup group_from_table(std::vector<std::vector<Elem>> mult) {
    FiniteGroup g;
    const auto n = mult.size();
    g.mult = std::move(mult);
    g.identity = 0;
    g.inv.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        bool found = false;
        for (Elem b = 0; b < n && !found; ++b) {
            if (g.mult[a][b] == 0) {
                g.inv[a] = b;
                found = true;
            }
        }
        if (!found) throw InternalError("group table without inverse");
    }
    return g;
}

inline void add_regular_orbits(MarkedAction& a, std::size_t count) {
    const auto order = a.order();
    for (std::size_t t = 1; t <= count; ++t) {
        const auto base = static_cast<Point>(a.points.size());
        for (Elem g = 0; g < order; ++g)
            a.points.push_back("o" + std::to_string(t) + "." + std::to_string(g));
        for (Elem h = 0; h < order; ++h)
            for (Elem g = 0; g < order; ++g) a.act[h].push_back(base + a.group(h, g));
    }
    a.extra_orbits = count;
}

inline Point default_p_infinity(const MarkedAction& a) {
    if (auto p = a.find_point("inf")) return *p;
    return 0;
}

}  // namespace detail

inline MarkedAction build_cyclic(unsigned m, std::size_t extra_orbits = 0) {
    if (m < 1) throw PreconditionError("cyclic group needs m >= 1");
    MarkedAction a;
    std::vector<std::vector<Elem>> mult(m, std::vector<Elem>(m));
    for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y) mult[x][y] = (x + y) % m;
    a.group = detail::group_from_table(std::move(mult));
    a.family = Family::cyclic;
    a.parameter = m;
    if (m == 1) {
        a.points = {"inf"};
    } else {
        a.points = {"0", "inf"};
    }
    a.act.assign(m, std::vector<Point>{});
    for (Elem g = 0; g < m; ++g)
        for (Point p = 0; p < a.points.size(); ++p) a.act[g].push_back(p);
    a.fixed_pair.assign(m, std::nullopt);
    for (Elem g = 1; g < m; ++g) a.fixed_pair[g] = FixedPair{0, 1};
    detail::add_regular_orbits(a, extra_orbits);
    a.p_infinity = detail::default_p_infinity(a);
    return a;
}

inline MarkedAction build_dihedral(unsigned m, std::size_t extra_orbits = 0) {
    if (m < 2) throw PreconditionError("dihedral group needs m >= 2");
    const unsigned order = 2 * m;
    auto encode = [m](unsigned reflection, unsigned k) -> Elem { return reflection * m + (k % m); };
    std::vector<std::vector<Elem>> mult(order, std::vector<Elem>(order));
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned a = 0; a < m; ++a)
            for (unsigned t = 0; t < 2; ++t)
                for (unsigned b = 0; b < m; ++b) {
                    // r_a r_b = r_{a+b}, r_a s_b = s_{a+b}, s_a r_b = s_{a-b}, s_a s_b = r_{a-b}
                    const unsigned k = s == 0 ? a + b : a + m - b;
                    mult[encode(s, a)][encode(t, b)] = encode(s ^ t, k);
                }

    MarkedAction act;
    act.group = detail::group_from_table(std::move(mult));
    act.family = Family::dihedral;
    act.parameter = m;
    act.points = {"0", "inf"};
    for (unsigned r = 0; r < 2 * m; ++r) act.points.push_back("e" + std::to_string(r));
    const auto twice = 2 * m;
    act.act.assign(order, std::vector<Point>(act.points.size()));
    act.fixed_pair.assign(order, std::nullopt);
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned k = 0; k < m; ++k) {
            const Elem g = encode(s, k);
            auto& row = act.act[g];
            row[0] = s == 0 ? 0 : 1;
            row[1] = s == 0 ? 1 : 0;
            for (unsigned r = 0; r < twice; ++r) {
                const unsigned image = s == 0 ? (r + 2 * k) % twice : (2 * k + twice - r) % twice;
                row[2 + r] = 2 + image;
            }
            if (g == 0) continue;
            if (s == 0)
                act.fixed_pair[g] = FixedPair{0, 1};
            else  // z -> zeta^k / z fixes eta^k and eta^(k+m)
                act.fixed_pair[g] = FixedPair{2 + k, 2 + k + m};
        }
    detail::add_regular_orbits(act, extra_orbits);
    act.p_infinity = detail::default_p_infinity(act);
    return act;
}

inline MarkedAction build_platonic(Solid solid, std::size_t extra_orbits = 0) {
    const detail::SolidData data = solid == Solid::tetrahedral  ? detail::tetrahedron_data()
                                   : solid == Solid::octahedral ? detail::octahedron_data()
                                                                : detail::icosahedron_data();
    using Perm = std::vector<std::uint32_t>;
    const auto nv = data.vertex_count;
    auto compose = [](const Perm& a, const Perm& b) {
        Perm r(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
        return r;
    };

    for (const auto& e : data.edges)
        if (e[0] == e[1] || e[0] >= nv || e[1] >= nv) throw InternalError("bad edge in solid data");
    if (nv - data.edges.size() + data.faces.size() != 2) throw InternalError("solid data fails Euler characteristic");

    Perm id(nv);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Perm> elements{id};
    std::map<Perm, Elem> index{{id, 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& gen : data.generators) {
            Perm next = compose(gen, elements[head]);
            if (index.emplace(next, static_cast<Elem>(elements.size())).second) elements.push_back(std::move(next));
        }
    }
    const std::size_t expected = solid == Solid::tetrahedral ? 12 : solid == Solid::octahedral ? 24 : 60;
    if (elements.size() != expected) throw InternalError("rotation group of the solid has the wrong order");

    const auto order = elements.size();
    std::vector<std::vector<Elem>> mult(order, std::vector<Elem>(order));
    for (Elem a = 0; a < order; ++a)
        for (Elem b = 0; b < order; ++b) mult[a][b] = index.at(compose(elements[a], elements[b]));

    std::map<std::set<std::uint32_t>, Point> cell_index;
    std::vector<std::set<std::uint32_t>> cells;
    MarkedAction act;
    for (std::uint32_t v = 0; v < nv; ++v) {
        cells.push_back({v});
        act.points.push_back("v" + std::to_string(v));
    }
    for (std::size_t e = 0; e < data.edges.size(); ++e) {
        cells.push_back({data.edges[e][0], data.edges[e][1]});
        act.points.push_back("e" + std::to_string(e));
    }
    for (std::size_t f = 0; f < data.faces.size(); ++f) {
        const auto& face = data.faces[f];
        for (int s = 0; s < 3; ++s) {
            std::array<std::uint32_t, 2> side{std::min(face[s], face[(s + 1) % 3]), std::max(face[s], face[(s + 1) % 3])};
            if (std::find(data.edges.begin(), data.edges.end(), side) == data.edges.end())
                throw InternalError("face side missing from the edge list");
        }
        cells.push_back({face[0], face[1], face[2]});
        act.points.push_back("f" + std::to_string(f));
    }
    for (Point c = 0; c < cells.size(); ++c)
        if (!cell_index.emplace(cells[c], c).second) throw InternalError("duplicate cell in solid data");

    act.group = detail::group_from_table(std::move(mult));
    act.family = solid == Solid::tetrahedral  ? Family::tetrahedral
                 : solid == Solid::octahedral ? Family::octahedral
                                              : Family::icosahedral;
    act.act.assign(order, std::vector<Point>(cells.size()));
    act.fixed_pair.assign(order, std::nullopt);
    for (Elem g = 0; g < order; ++g) {
        std::vector<Point> stabilized;
        for (Point c = 0; c < cells.size(); ++c) {
            std::set<std::uint32_t> image;
            for (auto v : cells[c]) image.insert(elements[g][v]);
            auto it = cell_index.find(image);
            if (it == cell_index.end()) throw InternalError("vertex permutation does not preserve incidence");
            act.act[g][c] = it->second;
            if (it->second == c) stabilized.push_back(c);
        }
        if (g == 0) continue;
        if (stabilized.size() != 2) throw InternalError("rotation does not stabilize exactly two cells");
        act.fixed_pair[g] = FixedPair{stabilized[0], stabilized[1]};
    }
    detail::add_regular_orbits(act, extra_orbits);
    act.p_infinity = detail::default_p_infinity(act);
    return act;
}

inline MarkedAction build_trivial(std::size_t z_size) {
    if (z_size == 0) throw PreconditionError("trivial action needs |Z| >= 1; use sphere_case() for Z empty");
    MarkedAction a;
    a.group = detail::group_from_table({{0}});
    a.family = Family::trivial;
    a.parameter = static_cast<unsigned>(z_size);
    a.points.push_back("inf");
    for (std::size_t q = 1; q < z_size; ++q) a.points.push_back("q" + std::to_string(q));
    a.act.assign(1, std::vector<Point>(z_size));
    std::iota(a.act[0].begin(), a.act[0].end(), Point{0});
    a.fixed_pair.assign(1, std::nullopt);
    a.p_infinity = 0;
    return a;
}

// The pair (trivial group, Z empty): configuration spaces of the whole sphere.
inline MarkedAction sphere_case() {
    MarkedAction a;
    a.group = detail::group_from_table({{0}});
    a.family = Family::sphere;
    a.act.assign(1, {});
    a.fixed_pair.assign(1, std::nullopt);
    a.sphere_case = true;
    return a;
}

inline MarkedAction with_p_infinity(MarkedAction a, std::string_view label) {
    auto p = a.find_point(label);
    if (!p) throw PreconditionError("no point labelled '" + std::string(label) + "' in Z");
    a.p_infinity = *p;
    return a;
}

inline std::vector<std::vector<Point>> orbits(const MarkedAction& a) {
    std::vector<std::vector<Point>> result;
    std::vector<bool> seen(a.z_size(), false);
    for (Point p = 0; p < a.z_size(); ++p) {
        if (seen[p]) continue;
        std::set<Point> orbit;
        for (Elem g = 0; g < a.order(); ++g) orbit.insert(a.apply(g, p));
        for (auto q : orbit) seen[q] = true;
        result.emplace_back(orbit.begin(), orbit.end());
    }
    return result;
}

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::size_t irregular_count = 0;
    std::size_t irregular_orbit_count = 0;
    bool cyclic_group = false;

    bool ok() const { return violations.empty(); }
    bool has(std::string_view code) const {
        return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
    }
};

inline ValidationReport validate(const MarkedAction& a) {
    ValidationReport report;
    auto fail = [&](std::string code, std::string detail) { report.violations.push_back({std::move(code), std::move(detail)}); };
    const auto& G = a.group;
    const auto n = G.order();
    const auto z = a.z_size();

    bool table_ok = n > 0 && G.mult.size() == n && G.identity < n;
    for (const auto& row : G.mult) {
        if (row.size() != n) table_ok = false;
        for (auto x : row)
            if (x >= n) table_ok = false;
    }
    for (auto x : G.inv)
        if (x >= n) table_ok = false;
    if (!table_ok) {
        fail("group axioms", "multiplication table is not a total operation on 0..order-1");
        return report;
    }
    for (Elem x = 0; x < n; ++x) {
        if (G(G.identity, x) != x || G(x, G.identity) != x) fail("group axioms", "identity fails on element " + std::to_string(x));
        if (G(x, G.inv[x]) != G.identity || G(G.inv[x], x) != G.identity)
            fail("group axioms", "inv fails on element " + std::to_string(x));
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem w = 0; w < n; ++w)
                if (G(G(x, y), w) != G(x, G(y, w))) {
                    fail("group axioms", "associativity fails");
                    x = y = w = static_cast<Elem>(n);
                }
    report.cyclic_group = G.is_cyclic();

    if (a.sphere_case) {
        if (n != 1 || z != 0) fail("sphere case", "sphere case must be the trivial group with Z empty");
        return report;
    }

    bool action_shape = a.act.size() == n;
    for (const auto& row : a.act) {
        if (row.size() != z) action_shape = false;
        std::vector<bool> hit(z, false);
        for (auto p : row) {
            if (p >= z || hit[p]) {
                action_shape = false;
                break;
            }
            hit[p] = true;
        }
    }
    if (!action_shape) {
        fail("action axioms", "act[g] is not a permutation of Z for every g");
        return report;
    }
    for (Point p = 0; p < z; ++p)
        if (a.apply(G.identity, p) != p) fail("action axioms", "identity moves " + a.points[p]);
    for (Elem g = 0; g < n; ++g)
        for (Elem h = 0; h < n; ++h)
            for (Point p = 0; p < z; ++p)
                if (a.apply(G(g, h), p) != a.apply(g, a.apply(h, p))) {
                    fail("action axioms", "act(gh, p) != act(g, act(h, p))");
                    g = h = static_cast<Elem>(n);
                    break;
                }
    if (n > 1 && z == 0) fail("empty Z", "a non-trivial group needs a non-empty Z");
    if (z > 0 && a.p_infinity >= z) fail("p_infinity", "p_infinity is not a point of Z");

    if (a.fixed_pair.size() != n) {
        fail("fixed_pair missing", "fixed_pair table has the wrong size");
        return report;
    }
    std::set<Point> irregular;
    for (Elem g = 0; g < n; ++g) {
        if (g == G.identity) {
            if (a.fixed_pair[g]) fail("fixed_pair mismatch", "identity carries a fixed pair");
            continue;
        }
        std::vector<Point> fixed;
        for (Point p = 0; p < z; ++p)
            if (a.apply(g, p) == p) fixed.push_back(p);
        if (fixed.size() != 2)
            fail("fixed point count", "element " + std::to_string(g) + " fixes " + std::to_string(fixed.size()) + " points of Z");
        const auto& fp = a.fixed_pair[g];
        if (!fp) {
            fail("fixed_pair missing", "element " + std::to_string(g));
            continue;
        }
        if (fp->first >= z || fp->second >= z || fp->first == fp->second) {
            fail("fixed_pair mismatch", "element " + std::to_string(g) + " has a malformed pair");
            continue;
        }
        std::vector<Point> claimed{std::min(fp->first, fp->second), std::max(fp->first, fp->second)};
        if (claimed != fixed) fail("fixed_pair mismatch", "element " + std::to_string(g) + ": fixed_pair is not its fixed-point set");
        irregular.insert(claimed.begin(), claimed.end());
    }

    report.irregular_count = irregular.size();
    std::set<std::vector<Point>> irregular_orbits;
    for (auto p : irregular) {
        std::set<Point> orbit;
        for (Elem g = 0; g < n; ++g) orbit.insert(a.apply(g, p));
        irregular_orbits.emplace(orbit.begin(), orbit.end());
    }
    report.irregular_orbit_count = irregular_orbits.size();
    if (n > 1) {
        const std::size_t want_count = report.cyclic_group ? 2 : 2 + n;
        const std::size_t want_orbits = report.cyclic_group ? 2 : 3;
        if (report.irregular_count != want_count)
            fail("irregular count", std::to_string(report.irregular_count) + " irregular points, expected " + std::to_string(want_count));
        if (report.irregular_orbit_count != want_orbits)
            fail("irregular orbit count",
                 std::to_string(report.irregular_orbit_count) + " irregular orbits, expected " + std::to_string(want_orbits));
    }
    return report;
}

// Parses the CLI grammar: cyclic:<m> | dihedral:<m> | tetrahedral | octahedral |
// icosahedral | trivial:<z> | sphere, optionally followed by +orbits:<k>.
inline MarkedAction parse_group_spec(std::string_view spec) {
    auto number = [&](std::string_view text) -> unsigned long {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
            throw ParseError("expected a non-negative integer in group spec '" + std::string(spec) + "'");
        return std::stoul(std::string(text));
    };
    std::string_view head = spec;
    std::size_t extra = 0;
    if (auto plus = spec.find('+'); plus != std::string_view::npos) {
        head = spec.substr(0, plus);
        auto mod = spec.substr(plus + 1);
        constexpr std::string_view key = "orbits:";
        if (mod.substr(0, key.size()) != key) throw ParseError("unknown group modifier in '" + std::string(spec) + "'");
        extra = number(mod.substr(key.size()));
    }
    std::string_view name = head;
    std::optional<unsigned long> arg;
    if (auto colon = head.find(':'); colon != std::string_view::npos) {
        name = head.substr(0, colon);
        arg = number(head.substr(colon + 1));
    }
    auto need_arg = [&]() -> unsigned {
        if (!arg) throw ParseError("group '" + std::string(name) + "' needs a parameter");
        return static_cast<unsigned>(*arg);
    };
    auto no_arg = [&] {
        if (arg) throw ParseError("group '" + std::string(name) + "' takes no parameter");
    };
    if (name == "cyclic") return build_cyclic(need_arg(), extra);
    if (name == "dihedral") return build_dihedral(need_arg(), extra);
    if (name == "tetrahedral") return no_arg(), build_platonic(Solid::tetrahedral, extra);
    if (name == "octahedral") return no_arg(), build_platonic(Solid::octahedral, extra);
    if (name == "icosahedral") return no_arg(), build_platonic(Solid::icosahedral, extra);
    if (name == "trivial") {
        if (extra > 0) throw ParseError("+orbits does not apply to trivial:<z>; enlarge z instead");
        return build_trivial(need_arg());
    }
    if (name == "sphere") {
        no_arg();
        if (extra > 0) throw ParseError("the sphere case takes no modifiers");
        return sphere_case();
    }
    throw ParseError("unknown group '" + std::string(name) + "'");
}

}  // namespace orbconf
