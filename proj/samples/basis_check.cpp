// Builds the algebra for the dihedral group of order 6 acting on its 8
// irregular points, multiplies two generators, and checks the graded
// dimensions against an independent rank computation.

#include <iostream>
#include <memory>

#include "orbconf/orbconf.hpp"

int main() {
    using namespace orbconf;

    auto action = build_dihedral(3);
    auto pres = std::make_shared<const Presentation>(action, 3);
    Algebra<> algebra(pres);

    // w[1,3;1] ^ w[2,3;4]: both factors have second strand 3, so rel3 applies
    auto x = algebra.generator(pres->off_diag_index(1, 3, 1));
    auto y = algebra.generator(pres->off_diag_index(2, 3, 4));
    std::cout << format_element(*pres, x) << " ^ " << format_element(*pres, y) << " = " << format_element(*pres, algebra.wedge(x, y)) << "\n";

    std::cout << "P(t) = " << poincare_polynomial(action, 3).to_string() << "\n";

    QuotientOracle oracle(pres);
    for (unsigned d = 0; d <= 3; ++d) {
        const auto report = oracle.check(d);
        std::cout << "degree " << d << ": quotient " << report.quotient_dim << ", expected " << report.expected_dim
                  << (report.pass ? "  ok" : "  MISMATCH") << "\n";
    }
    return 0;
}
