#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "orbconf/orbconf.hpp"

namespace support {

struct Config {
    std::string spec;
    unsigned n;
};

// Configurations whose degree-n quotients fit the default oracle budget.
inline const std::vector<Config>& oracle_configs() {
    static const std::vector<Config> c = {
        {"trivial:1", 4},  {"trivial:3", 4},  {"cyclic:2", 4},  {"cyclic:3", 4},           {"cyclic:4", 4},
        {"dihedral:2", 4}, {"dihedral:3", 3}, {"tetrahedral", 2}, {"cyclic:2+orbits:1", 3}, {"octahedral", 2},
    };
    return c;
}

inline std::shared_ptr<const orbconf::Presentation> make(const std::string& spec, unsigned n,
                                                         orbconf::Rel3Variant v = orbconf::Rel3Variant::derived) {
    return std::make_shared<const orbconf::Presentation>(orbconf::parse_group_spec(spec), n, v);
}

// A word of d generator indices, possibly with repeats or out of order.
inline std::vector<orbconf::GenIndex> random_word(std::mt19937_64& rng, std::size_t generators, unsigned d) {
    std::uniform_int_distribution<orbconf::GenIndex> pick(0, static_cast<orbconf::GenIndex>(generators - 1));
    std::vector<orbconf::GenIndex> w(d);
    for (auto& x : w) x = pick(rng);
    return w;
}

// A random degree-1 element with small integer coefficients.
inline orbconf::Element<orbconf::Integer> random_linear(std::mt19937_64& rng, std::size_t generators, unsigned terms = 3) {
    std::uniform_int_distribution<orbconf::GenIndex> pick(0, static_cast<orbconf::GenIndex>(generators - 1));
    std::uniform_int_distribution<int> coeff(-3, 3);
    orbconf::Element<orbconf::Integer> x;
    for (unsigned t = 0; t < terms; ++t) x += orbconf::Element<orbconf::Integer>::generator(pick(rng), orbconf::Integer(coeff(rng)));
    return x;
}

}  // namespace support
