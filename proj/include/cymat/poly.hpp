#pragma once

#include <string>
#include <vector>

#include "cymat/gf16.hpp"

namespace cymat {

/// Polynomial over GF(16), coefficients lowest degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree -1.
class F16Poly {
public:
    F16Poly() = default;
    explicit F16Poly(std::vector<F16> coeffs) : c_(std::move(coeffs)) { trim(); }

    static F16Poly zero() { return F16Poly(); }
    static F16Poly one() { return constant(F16::one()); }
    static F16Poly constant(F16 a);
    static F16Poly x();
    static F16Poly monomial(F16 a, int deg);
    static F16Poly xn_minus_1(int n); // x^n + 1 in characteristic 2

    int deg() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == F16::one(); }
    F16 coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[size_t(i)] : F16::zero(); }
    F16 lead() const { return c_.empty() ? F16::zero() : c_.back(); }
    const std::vector<F16>& coeffs() const { return c_; }

    friend F16Poly operator+(const F16Poly& a, const F16Poly& b);
    friend F16Poly operator-(const F16Poly& a, const F16Poly& b) { return a + b; }
    friend F16Poly operator*(const F16Poly& a, const F16Poly& b);
    F16Poly operator*(F16 s) const;
    friend bool operator==(const F16Poly& a, const F16Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const F16Poly& a, const F16Poly& b) { return !(a == b); }
    bool operator<(const F16Poly& o) const; // canonical order: degree, then coeffs from the top

    /// Quotient and remainder by a nonzero divisor.
    static void divmod(const F16Poly& a, const F16Poly& b, F16Poly& q, F16Poly& r);
    F16Poly mod(const F16Poly& m) const;
    F16 eval(F16 x) const;

    F16Poly monic() const;
    F16Poly pow_mod(uint64_t e, const F16Poly& m) const;

    std::string str() const; // descending terms, e.g. "x^3 + x + 1", "x + w^12"

private:
    void trim();
    std::vector<F16> c_;
};

F16Poly gcd(const F16Poly& a, const F16Poly& b); // monic gcd
/// Monic extended gcd: g = a*s + b*t.
F16Poly egcd(const F16Poly& a, const F16Poly& b, F16Poly& s, F16Poly& t);

F16Poly poly_mul_mod(const F16Poly& a, const F16Poly& b, const F16Poly& modulus);

/// Coefficient reversal x^deg(f) * f(1/x); optionally normalized monic.
F16Poly reciprocal(const F16Poly& f, bool make_monic = true);

/// Coefficient-wise Frobenius a -> a^4.
F16Poly poly_conj(const F16Poly& f);

/// (x^n - 1) / p; p must divide exactly, otherwise throws with the remainder
/// in the message.
F16Poly hat(const F16Poly& p, int n);

/// Parses "x^3 + x + 1", "w^5*x^2 + wx + 1", "0" ... (sums of coefficient-times-
/// x-power terms; '*' optional).
F16Poly parse_poly(const std::string& text);

/// The distinct monic irreducible factors of x^n - 1 over GF(16), n odd, in
/// canonical order (degree first, then coefficients compared from the top with
/// 0 < 1 < w < ... < w^14).
struct FactorSet {
    int n = 0;
    std::vector<F16Poly> factors;

    const F16Poly& at1(int i) const; // 1-based accessor matching f_i naming
    std::string str() const;
};

/// Cyclotomic-coset factorization of x^n - 1 over GF(16).  Every emitted factor
/// is re-verified irreducible and the product is checked against x^n - 1.
FactorSet factor_xn_minus_1(int n, uint64_t seed = 0x16c0de);

bool is_irreducible(const F16Poly& f);

bool is_unit_mod_xn_minus_1(const F16Poly& f, int n);

} // namespace cymat
