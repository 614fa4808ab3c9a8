#pragma once

// Integer polynomials and truncated power series for Poincare polynomials,
// fiber profiles, lower central series ranks and the LCS product identity.

#include <algorithm>
#include <string>
#include <vector>

#include "orbconf/error.hpp"
#include "orbconf/group_action.hpp"
#include "orbconf/scalar.hpp"

namespace orbconf {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(Integer coeff, std::size_t degree) {
        std::vector<Integer> c(degree + 1, Integer(0));
        c[degree] = std::move(coeff);
        return IntPolynomial(std::move(c));
    }
    static IntPolynomial one() { return IntPolynomial({Integer(1)}); }

    const std::vector<Integer>& coefficients() const { return c_; }
    Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    // p(-t)
    IntPolynomial negate_variable() const {
        auto c = c_;
        for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t x = 0; x < a.c_.size(); ++x)
            for (std::size_t y = 0; y < b.c_.size(); ++y) c[x + y] += a.c_[x] * b.c_[y];
        return IntPolynomial(std::move(c));
    }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // "1 + 4 t + 3 t^2"; "0" for the zero polynomial.
    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (sgn(c_[k]) == 0) continue;
            const bool neg = sgn(c_[k]) < 0;
            const Integer mag = abs(c_[k]);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (k == 0 || mag != 1) out += mag.get_str() + (k == 0 ? "" : " ");
            if (k == 1) out += "t";
            if (k > 1) out += "t^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// Power series with coefficients of t^0..t^order, arithmetic mod t^(order+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Integer(0)) {}
    TruncatedSeries(std::size_t order, const IntPolynomial& p) : TruncatedSeries(order) {
        for (std::size_t k = 0; k <= order; ++k) c_[k] = p.coefficient(k);
    }
    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Integer& operator[](std::size_t k) const { return c_.at(k); }
    Integer& operator[](std::size_t k) { return c_.at(k); }
    const std::vector<Integer>& coefficients() const { return c_; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) throw PreconditionError("series orders differ");
        TruncatedSeries out(a.order());
        for (std::size_t x = 0; x <= a.order(); ++x) {
            if (sgn(a.c_[x]) == 0) continue;
            for (std::size_t y = 0; x + y <= a.order(); ++y) out.c_[x + y] += a.c_[x] * b.c_[y];
        }
        return out;
    }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // Repeated squaring.
    TruncatedSeries pow(Integer e) const {
        if (sgn(e) < 0) throw PreconditionError("negative exponent");
        auto result = one(order());
        auto base = *this;
        while (sgn(e) > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = result * base;
            e >>= 1;
            if (sgn(e) > 0) base = base * base;
        }
        return result;
    }

    // (1 - t^i)^e = sum_k C(e, k) (-1)^k t^(ik)
    static TruncatedSeries one_minus_power(std::size_t order, std::size_t i, const Integer& e) {
        if (i == 0) throw PreconditionError("power must be positive");
        TruncatedSeries s(order);
        Integer binom(1);
        for (std::size_t k = 0; k * i <= order; ++k) {
            if (k > 0) {
                binom = binom * (e - Integer(static_cast<unsigned long>(k - 1)));
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k);
            }
            if (sgn(binom) == 0) break;
            s.c_[k * i] = (k % 2 == 0) ? binom : Integer(-binom);
        }
        return s;
    }

private:
    std::vector<Integer> c_;
};

inline int mobius(unsigned long n) {
    if (n == 0) throw PreconditionError("mobius needs n >= 1");
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline void require_affine(const MarkedAction& a) {
    if (a.sphere_case) throw PreconditionError("sphere case has no affine presentation");
}

// (alpha_1, ..., alpha_n), alpha_k = |G|(k-1) + |Z| - 1.
inline std::vector<Integer> alpha_profile(const MarkedAction& a, unsigned n) {
    require_affine(a);
    std::vector<Integer> out;
    for (unsigned k = 1; k <= n; ++k) out.push_back(Integer(static_cast<unsigned long>(a.order())) * (k - 1) + (a.z_size() - 1));
    return out;
}

// Punctures of the fiber of the projection forgetting the last of n points.
inline Integer fiber_puncture_count(const MarkedAction& a, unsigned n) {
    require_affine(a);
    if (n < 1) throw PreconditionError("n must be >= 1");
    return Integer(static_cast<unsigned long>(a.z_size())) + Integer(static_cast<unsigned long>(a.order())) * (n - 1);
}

// prod (1 + c_k t)
inline IntPolynomial product_one_plus(const std::vector<Integer>& profile) {
    auto p = IntPolynomial::one();
    for (const auto& c : profile) p = p * IntPolynomial({Integer(1), c});
    return p;
}

inline IntPolynomial poincare_polynomial(const MarkedAction& a, unsigned n) { return product_one_plus(alpha_profile(a, n)); }

// beta_k = k + 1 for k = 1..n-3.
inline std::vector<Integer> sphere_tower(unsigned n) {
    std::vector<Integer> out;
    for (unsigned k = 1; k + 3 <= n; ++k) out.emplace_back(k + 1);
    return out;
}

// Poincare polynomial of C_n(P^1): t^2 for n = 1, 2 and t^3 prod (1 + beta_k t) beyond.
inline IntPolynomial poincare_sphere(int n) {
    if (n <= 0) throw PreconditionError("n must be >= 1");
    if (n <= 2) return IntPolynomial::monomial(Integer(1), 2);
    return IntPolynomial::monomial(Integer(1), 3) * product_one_plus(sphere_tower(static_cast<unsigned>(n)));
}

struct LcsTable {
    std::vector<Integer> profile;
    std::vector<Integer> ranks;  // ranks[i-1] = phi_i
    bool central_torsion_factor = false;
};

// phi_i = (1/i) sum_k sum_{j | i} mu(j) c_k^(i/j)
inline LcsTable lcs_ranks(const std::vector<Integer>& profile, unsigned i_max) {
    if (i_max < 1) throw PreconditionError("i_max must be >= 1");
    for (const auto& c : profile)
        if (sgn(c) < 0) throw PreconditionError("profile entries must be non-negative");
    LcsTable t{profile, {}, false};
    for (unsigned i = 1; i <= i_max; ++i) {
        Integer sum(0);
        for (unsigned j = 1; j <= i; ++j) {
            if (i % j) continue;
            const int mu = mobius(j);
            if (mu == 0) continue;
            for (const auto& c : profile) {
                Integer pw;
                mpz_pow_ui(pw.get_mpz_t(), c.get_mpz_t(), i / j);
                sum += mu * pw;
            }
        }
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), i)) throw InternalError("Mobius sum not divisible by " + std::to_string(i));
        mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), i);
        t.ranks.push_back(sum);
    }
    return t;
}

struct LcsIdentityReport {
    std::vector<Integer> profile;
    unsigned i_max = 0;
    std::vector<Integer> ranks;
    TruncatedSeries lhs{0};  // prod_i (1 - t^i)^phi_i
    TruncatedSeries rhs{0};  // prod_k (1 - c_k t)
    bool identity_ok = false;
    bool poincare_ok = false;  // prod_k (1 - c_k t) = P(-t) with P = prod (1 + c_k t)
    bool ok() const { return identity_ok && poincare_ok; }
};

inline LcsIdentityReport verify_lcs_identity(const std::vector<Integer>& profile, unsigned i_max) {
    LcsIdentityReport r;
    r.profile = profile;
    r.i_max = i_max;
    r.ranks = lcs_ranks(profile, i_max).ranks;
    r.lhs = TruncatedSeries::one(i_max);
    for (unsigned i = 1; i <= i_max; ++i) r.lhs = r.lhs * TruncatedSeries::one_minus_power(i_max, i, r.ranks[i - 1]);
    auto rhs_poly = IntPolynomial::one();
    for (const auto& c : profile) rhs_poly = rhs_poly * IntPolynomial({Integer(1), Integer(-c)});
    r.rhs = TruncatedSeries(i_max, rhs_poly);
    r.identity_ok = r.lhs == r.rhs;
    r.poincare_ok = rhs_poly == product_one_plus(profile).negate_variable();
    return r;
}

struct SphereLcsReport {
    unsigned n = 0;
    LcsIdentityReport tower;  // identity for the torsion-free factor
    bool poincare_ok = false;  // P_n(-t) = (-1)^3 t^3 prod (1 - beta_k t)
    bool ok() const { return tower.ok() && poincare_ok; }
};

// Sign-consistent form of the sphere identity, for n >= 4.
inline SphereLcsReport verify_sphere_lcs(unsigned n, unsigned i_max) {
    if (n < 4) throw PreconditionError("the sphere tower is empty for n < 4");
    SphereLcsReport r;
    r.n = n;
    const auto tower = sphere_tower(n);
    r.tower = verify_lcs_identity(tower, i_max);
    auto rhs = IntPolynomial::monomial(Integer(-1), 3);
    for (const auto& b : tower) rhs = rhs * IntPolynomial({Integer(1), Integer(-b)});
    r.poincare_ok = poincare_sphere(static_cast<int>(n)).negate_variable() == rhs;
    return r;
}

struct GroupProfile {
    std::vector<Integer> tower;  // free ranks, innermost factor first
    bool central_torsion_factor = false;
    std::string description;
};

inline std::string describe_tower(const std::vector<Integer>& tower) {
    if (tower.empty()) return "trivial";
    std::string out = "F(" + tower.front().get_str() + ")";
    for (std::size_t k = 1; k < tower.size(); ++k) {
        const std::string inner = k == 1 ? out : "(" + out + ")";
        out = "F(" + tower[k].get_str() + ") x| " + inner;
    }
    return out;
}

// pi_1 as an iterated almost direct product of free groups.
inline GroupProfile fundamental_group_profile(const MarkedAction& a, unsigned n) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    GroupProfile g;
    if (!a.sphere_case) {
        g.tower = alpha_profile(a, n);
        g.description = describe_tower(g.tower);
        return g;
    }
    if (n <= 2) {
        g.description = "trivial";
        return g;
    }
    g.central_torsion_factor = true;
    g.tower = sphere_tower(n);
    g.description = g.tower.empty() ? "Z/2" : "Z/2 x " + (g.tower.size() == 1 ? describe_tower(g.tower) : "(" + describe_tower(g.tower) + ")");
    return g;
}

}  // namespace orbconf
