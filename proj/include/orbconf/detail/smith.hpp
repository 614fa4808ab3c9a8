#pragma once

// Dense Smith normal form over Z, used where the sparse echelon cannot
// certify unit invariant factors by itself.

#include <utility>
#include <vector>

#include "orbconf/scalar.hpp"

namespace orbconf::detail {

using DenseMatrix = std::vector<std::vector<Integer>>;

// q = round(a / b), so that |a - q b| <= |b| / 2
inline Integer nearest_quotient(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer twice = 2 * r;
    if (mpz_cmpabs(twice.get_mpz_t(), b.get_mpz_t()) > 0) q += 1;
    return q;
}

// Nonzero invariant factors d_1 | d_2 | ... (positive), in order.
inline std::vector<Integer> smith_invariants(DenseMatrix a) {
    std::vector<Integer> diag;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        bool clean = false;
        while (!clean) {
            // smallest nonzero entry of the remaining block goes to (t, t); keeps entries small
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (sgn(a[r][c]) != 0 && (pr == rows || mpz_cmpabs(a[r][c].get_mpz_t(), a[pr][pc].get_mpz_t()) < 0)) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (sgn(a[r][t]) == 0) continue;
                const Integer q = nearest_quotient(a[r][t], a[t][t]);
                for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
                if (sgn(a[r][t]) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (sgn(a[t][c]) == 0) continue;
                const Integer q = nearest_quotient(a[t][c], a[t][t]);
                for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
                if (sgn(a[t][c]) != 0) clean = false;
            }
            if (!clean) continue;
            // the pivot must divide the rest of the block
            for (std::size_t r = t + 1; r < rows && clean; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (!mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t())) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace orbconf::detail
