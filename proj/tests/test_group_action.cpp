#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "orbconf/orbconf.hpp"

using namespace orbconf;

namespace {

std::multiset<std::size_t> orbit_sizes(const MarkedAction& a) {
    std::multiset<std::size_t> s;
    for (const auto& o : orbits(a)) s.insert(o.size());
    return s;
}

std::vector<MarkedAction> all_small_actions() {
    std::vector<MarkedAction> out;
    for (unsigned m = 1; m <= 12; ++m) out.push_back(build_cyclic(m));
    for (unsigned m = 2; m <= 12; ++m) out.push_back(build_dihedral(m));
    out.push_back(build_platonic(Solid::tetrahedral));
    out.push_back(build_platonic(Solid::octahedral));
    out.push_back(build_platonic(Solid::icosahedral));
    return out;
}

// Points fixed by g, computed from the action table.
std::set<Point> fixed_points(const MarkedAction& a, Elem g) {
    std::set<Point> s;
    for (Point p = 0; p < a.z_size(); ++p)
        if (a.apply(g, p) == p) s.insert(p);
    return s;
}

}  // namespace

TEST(GroupAction, CyclicThree) {
    const auto a = build_cyclic(3);
    EXPECT_EQ(a.order(), 3u);
    EXPECT_EQ(a.z_size(), 2u);
    const auto r = validate(a);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.irregular_count, 2u);
    EXPECT_EQ(r.irregular_orbit_count, 2u);
    EXPECT_EQ(a.points[a.p_infinity], "inf");
}

TEST(GroupAction, CyclicOneIsTrivialWithInfinity) {
    const auto a = build_cyclic(1);
    EXPECT_EQ(a.order(), 1u);
    ASSERT_EQ(a.z_size(), 1u);
    EXPECT_EQ(a.points[0], "inf");
    EXPECT_TRUE(validate(a).ok());
}

TEST(GroupAction, CyclicWithRegularOrbit) {
    const auto a = build_cyclic(2, 1);
    EXPECT_EQ(a.z_size(), 4u);
    EXPECT_EQ(orbit_sizes(a), (std::multiset<std::size_t>{1, 1, 2}));
    EXPECT_TRUE(validate(a).ok());
}

TEST(GroupAction, DihedralThree) {
    const auto a = build_dihedral(3);
    EXPECT_EQ(a.order(), 6u);
    EXPECT_EQ(a.z_size(), 8u);
    EXPECT_EQ(orbit_sizes(a), (std::multiset<std::size_t>{2, 3, 3}));
    EXPECT_TRUE(validate(a).ok());
}

TEST(GroupAction, DihedralTwoFixedPairs) {
    const auto a = build_dihedral(2);
    EXPECT_EQ(a.order(), 4u);
    EXPECT_EQ(a.z_size(), 6u);
    EXPECT_EQ(orbit_sizes(a), (std::multiset<std::size_t>{2, 2, 2}));
    for (Elem g = 1; g < 4; ++g) {
        EXPECT_EQ(fixed_points(a, g).size(), 2u);
        const auto [p, q] = *a.fixed_pair[g];
        EXPECT_EQ(fixed_points(a, g), (std::set<Point>{p, q}));
    }
}

TEST(GroupAction, DihedralFourIrregularCount) {
    const auto r = validate(build_dihedral(4));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.irregular_count, 10u);
}

TEST(GroupAction, DihedralOneRejected) { EXPECT_THROW(build_dihedral(1), PreconditionError); }

TEST(GroupAction, Platonic) {
    const auto t = build_platonic(Solid::tetrahedral);
    EXPECT_EQ(t.order(), 12u);
    EXPECT_EQ(t.z_size(), 14u);
    EXPECT_EQ(orbits(t).size(), 3u);
    EXPECT_EQ(orbit_sizes(t), (std::multiset<std::size_t>{4, 4, 6}));

    const auto o = build_platonic(Solid::octahedral);
    EXPECT_EQ(o.order(), 24u);
    EXPECT_EQ(orbit_sizes(o), (std::multiset<std::size_t>{6, 8, 12}));

    const auto i = build_platonic(Solid::icosahedral);
    EXPECT_EQ(i.order(), 60u);
    EXPECT_EQ(i.z_size(), 62u);
    EXPECT_EQ(orbit_sizes(i), (std::multiset<std::size_t>{12, 20, 30}));
}

TEST(GroupAction, TrivialAndSphere) {
    const auto t = build_trivial(3);
    EXPECT_EQ(t.order(), 1u);
    EXPECT_EQ(orbit_sizes(t), (std::multiset<std::size_t>{1, 1, 1}));
    EXPECT_TRUE(validate(t).ok());
    EXPECT_THROW(build_trivial(0), PreconditionError);

    const auto s = sphere_case();
    EXPECT_TRUE(s.sphere_case);
    EXPECT_EQ(s.order(), 1u);
    EXPECT_EQ(s.z_size(), 0u);
    EXPECT_TRUE(validate(s).ok());
}

TEST(GroupAction, FaultInjectedFixedPairIsReported) {
    auto a = build_dihedral(3);
    // a reflection: replace one fixed point by a point it moves
    const Elem s = 3;
    auto pair = *a.fixed_pair[s];
    for (Point p = 0; p < a.z_size(); ++p)
        if (a.apply(s, p) != p) {
            pair.second = p;
            break;
        }
    a.fixed_pair[s] = pair;
    const auto r = validate(a);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(r.has("fixed_pair mismatch"));
    EXPECT_THROW(Presentation(a, 2), PreconditionError);
}

TEST(GroupAction, FaultInjectedActionIsReported) {
    auto a = build_cyclic(3);
    std::swap(a.act[1][0], a.act[1][1]);  // no longer a homomorphism
    EXPECT_TRUE(validate(a).has("action axioms"));
}

TEST(GroupAction, FaultInjectedTableIsReported) {
    auto a = build_cyclic(4);
    std::swap(a.group.mult[1][1], a.group.mult[1][2]);
    EXPECT_TRUE(validate(a).has("group axioms"));
}

// Property: every built-in action satisfies the axioms, each non-identity
// element has exactly two fixed points, and |orbit| * |stabilizer| = |G|.
TEST(GroupAction, PropertyAllSmallActions) {
    for (const auto& a : all_small_actions()) {
        SCOPED_TRACE(a.spec());
        const auto r = validate(a);
        EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.violations.front().code);
        const auto& G = a.group;
        const auto n = a.order();
        for (Elem g = 0; g < n; ++g)
            for (Elem h = 0; h < n; ++h)
                for (Point p = 0; p < a.z_size(); ++p) ASSERT_EQ(a.apply(G(g, h), p), a.apply(g, a.apply(h, p)));
        for (Elem g = 1; g < n; ++g) {
            const auto fx = fixed_points(a, g);
            ASSERT_EQ(fx.size(), 2u);
            EXPECT_EQ(fx, (std::set<Point>{a.fixed_pair[g]->first, a.fixed_pair[g]->second}));
        }
        for (const auto& orbit : orbits(a)) {
            std::size_t stab = 0;
            for (Elem g = 0; g < n; ++g) stab += a.apply(g, orbit.front()) == orbit.front();
            EXPECT_EQ(orbit.size() * stab, n);
        }
        const bool cyclic = a.family == Family::cyclic;
        if (n > 1) {
            EXPECT_EQ(r.irregular_count, cyclic ? 2u : 2u + n);
            EXPECT_EQ(r.irregular_orbit_count, cyclic ? 2u : 3u);
        }
        EXPECT_EQ(G.is_cyclic(), cyclic || n == 1);
    }
}

TEST(GroupAction, PropertyRegularOrbitsKeepFixedPairs) {
    for (const auto& base : all_small_actions()) {
        if (base.order() == 1) continue;
        for (std::size_t k = 1; k <= 2; ++k) {
            MarkedAction a = base.family == Family::cyclic     ? build_cyclic(base.parameter, k)
                             : base.family == Family::dihedral ? build_dihedral(base.parameter, k)
                                                               : parse_group_spec(base.spec() + "+orbits:" + std::to_string(k));
            SCOPED_TRACE(a.spec());
            EXPECT_EQ(a.z_size(), base.z_size() + k * base.order());
            EXPECT_EQ(a.fixed_pair, base.fixed_pair);
            EXPECT_TRUE(validate(a).ok());
        }
    }
}

TEST(GroupAction, ParseGroupSpec) {
    EXPECT_EQ(parse_group_spec("cyclic:5").order(), 5u);
    EXPECT_EQ(parse_group_spec("dihedral:4+orbits:2").z_size(), 10u + 16u);
    EXPECT_EQ(parse_group_spec("icosahedral").order(), 60u);
    EXPECT_EQ(parse_group_spec("trivial:2").z_size(), 2u);
    EXPECT_TRUE(parse_group_spec("sphere").sphere_case);
    EXPECT_EQ(parse_group_spec("dihedral:3+orbits:1").spec(), "dihedral:3+orbits:1");
    for (const char* bad : {"", "cyclic", "cyclic:x", "cyclic:-1", "tetrahedral:2", "pentagonal", "cyclic:3+orbit:1", "trivial:2+orbits:1",
                            "sphere+orbits:1", "dihedral:3+orbits:"})
        EXPECT_THROW(parse_group_spec(bad), ParseError) << bad;
    EXPECT_THROW(parse_group_spec("cyclic:0"), PreconditionError);
}

TEST(GroupAction, BasepointSelection) {
    const auto a = with_p_infinity(build_dihedral(2), "e1");
    EXPECT_EQ(a.points[a.p_infinity], "e1");
    EXPECT_THROW(with_p_infinity(build_dihedral(2), "nowhere"), PreconditionError);
}
