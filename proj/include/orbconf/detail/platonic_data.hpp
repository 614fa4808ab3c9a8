#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

// Incidence data of the three Platonic solids whose rotation groups are the
// non-dihedral finite subgroups of PGL(2, C). Vertex numbering is arbitrary but
// fixed; the generator permutations were read off from the standard coordinates
// (octahedron: +-e_i, icosahedron: cyclic permutations of (0, +-1, +-phi)).
namespace orbconf::detail {

struct SolidData {
    std::size_t vertex_count;
    std::vector<std::vector<std::uint32_t>> generators;  // vertex permutations
    std::vector<std::array<std::uint32_t, 2>> edges;
    std::vector<std::array<std::uint32_t, 3>> faces;  // all three solids are triangulated
};

inline SolidData tetrahedron_data() {
    return SolidData{
        4,
        {{1, 2, 0, 3}, {1, 0, 3, 2}},
        {{{0, 1}}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}, {{2, 3}}},
        {{{1, 2, 3}}, {{0, 2, 3}}, {{0, 1, 3}}, {{0, 1, 2}}},
    };
}

inline SolidData octahedron_data() {
    // 0:+x 1:-x 2:+y 3:-y 4:+z 5:-z
    return SolidData{
        6,
        {{2, 3, 1, 0, 4, 5}, {0, 1, 4, 5, 3, 2}},
        {{{0, 2}}, {{0, 3}}, {{0, 4}}, {{0, 5}}, {{1, 2}}, {{1, 3}},
         {{1, 4}}, {{1, 5}}, {{2, 4}}, {{2, 5}}, {{3, 4}}, {{3, 5}}},
        {{{0, 2, 4}}, {{0, 2, 5}}, {{0, 3, 4}}, {{0, 3, 5}},
         {{1, 2, 4}}, {{1, 2, 5}}, {{1, 3, 4}}, {{1, 3, 5}}},
    };
}

inline SolidData icosahedron_data() {
    // generators: order 5 about vertex 0, order 3 about the centre of face {0,1,2}
    return SolidData{
        12,
        {{0, 7, 1, 11, 8, 6, 2, 5, 3, 9, 4, 10}, {2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10}},
        {{{0, 1}},  {{0, 2}},  {{0, 5}},  {{0, 6}},  {{0, 7}},   {{1, 2}},  {{1, 3}},  {{1, 7}},
         {{1, 8}},  {{2, 4}},  {{2, 6}},  {{2, 8}},  {{3, 7}},   {{3, 8}},  {{3, 9}},  {{3, 11}},
         {{4, 6}},  {{4, 8}},  {{4, 9}},  {{4, 10}}, {{5, 6}},   {{5, 7}},  {{5, 10}}, {{5, 11}},
         {{6, 10}}, {{7, 11}}, {{8, 9}},  {{9, 10}}, {{9, 11}},  {{10, 11}}},
        {{{0, 1, 2}},  {{0, 1, 7}},  {{0, 2, 6}},  {{0, 5, 6}},   {{0, 5, 7}},
         {{1, 2, 8}},  {{1, 3, 7}},  {{1, 3, 8}},  {{2, 4, 6}},   {{2, 4, 8}},
         {{3, 7, 11}}, {{3, 8, 9}},  {{3, 9, 11}}, {{4, 6, 10}},  {{4, 8, 9}},
         {{4, 9, 10}}, {{5, 6, 10}}, {{5, 7, 11}}, {{5, 10, 11}}, {{9, 10, 11}}},
    };
}

}  // namespace orbconf::detail
