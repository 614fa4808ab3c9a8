#include <gtest/gtest.h>

#include "orbconf/orbconf.hpp"

using namespace orbconf;

namespace {

std::vector<std::string> rendered(const std::vector<Factor>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.to_string());
    return out;
}

}  // namespace

TEST(Hypersurface, CyclicTwoComponents) {
    const auto a = build_cyclic(2);
    const auto inv = components(a, 2);
    EXPECT_EQ(inv.total(), 4u);
    EXPECT_EQ(inv.diag_count, 2u);
    EXPECT_EQ(inv.off_diag_count, 2u);
    EXPECT_EQ(inv.components[1].label(a), "D12(g0)");
    EXPECT_EQ(inv.components[0].label(a), "D11(0)");
    EXPECT_EQ(rendered(defining_factors(a, 2)), (std::vector<std::string>{"z1", "z2", "z1 - ζ^0 z2", "z1 - ζ^1 z2"}));
}

TEST(Hypersurface, TrivialGroup) {
    EXPECT_EQ(components(build_trivial(1), 3).total(), 3u);
    EXPECT_EQ(rendered(defining_factors(build_trivial(1), 2)), (std::vector<std::string>{"z1 - ζ^0 z2"}));
    EXPECT_EQ(rendered(defining_factors(build_trivial(2), 1)), (std::vector<std::string>{"z1 - q1"}));
}

TEST(Hypersurface, CyclicThreeFactors) {
    const auto f = defining_factors(build_cyclic(3), 2);
    EXPECT_EQ(f.size(), 5u);
    EXPECT_EQ(f.back().to_string(), "z1 - ζ^2 z2");
}

TEST(Hypersurface, ComponentCountMatchesGenerators) {
    for (const char* spec : {"cyclic:4+orbits:1", "dihedral:3", "tetrahedral", "trivial:5"})
        for (unsigned n = 1; n <= 3; ++n) {
            const auto a = parse_group_spec(spec);
            EXPECT_EQ(components(a, n).total(), Presentation(a, n).generator_count());
            if (a.family == Family::cyclic || a.family == Family::trivial) EXPECT_EQ(defining_factors(a, n).size(), components(a, n).total());
        }
}

TEST(Hypersurface, NonCyclicUnsupported) {
    EXPECT_THROW(defining_factors(build_platonic(Solid::tetrahedral), 2), Unsupported);
    EXPECT_THROW(defining_factors(build_dihedral(3), 2), Unsupported);
    EXPECT_THROW(is_central(build_dihedral(2)), Unsupported);
    EXPECT_THROW(defining_factors(sphere_case(), 2), PreconditionError);
}

TEST(Hypersurface, Centrality) {
    EXPECT_TRUE(is_central(build_cyclic(3)));
    EXPECT_TRUE(is_central(build_cyclic(1)));
    EXPECT_TRUE(is_central(build_trivial(1)));
    EXPECT_TRUE(is_central(build_trivial(2)));
    EXPECT_FALSE(is_central(build_trivial(3)));
    EXPECT_FALSE(is_central(build_cyclic(2, 1)));
}

TEST(Hypersurface, PeriodPairingIsIdentity) {
    for (const char* spec : {"cyclic:2", "dihedral:3", "tetrahedral", "trivial:3", "cyclic:3+orbits:2"})
        for (unsigned n = 1; n <= 3; ++n) {
            const auto a = parse_group_spec(spec);
            const auto pp = period_pairing(a, n);
            EXPECT_TRUE(pp.identity);
            EXPECT_EQ(pp.meridians.size(), Presentation(a, n).generator_count());
        }
    const auto pp = period_pairing(build_cyclic(2), 2);
    EXPECT_EQ(pp.meridians[2].label(build_cyclic(2)), "x12^1");
    EXPECT_EQ(pp.meridians[0].label(build_cyclic(2)), "x11^0");
}
