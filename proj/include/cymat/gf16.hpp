#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cymat {

/// Element of GF(16) = F2[w]/<w^4 + w + 1> in polynomial basis {1, w, w^2, w^3},
/// packed into the low four bits of a byte.  The modulus is the Conway
/// polynomial, so w is primitive: every nonzero element is w^t for a unique
/// t in [0,15).
class F16 {
public:
    constexpr F16() : bits_(0) {}
    constexpr explicit F16(unsigned bits) : bits_(uint8_t(bits & 0xF)) {}

    static constexpr F16 zero() { return F16(0); }
    static constexpr F16 one() { return F16(1); }
    static F16 w_pow(long t); // w^t, t reduced mod 15 (negative t accepted)

    uint8_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    /// Discrete log base w of a nonzero element; throws on zero.
    int log() const;

    /// Total order used for canonical sorting: 0 < 1 < w < w^2 < ... < w^14.
    int sort_key() const { return bits_ == 0 ? -1 : log(); }

    friend F16 operator+(F16 a, F16 b) { return F16(unsigned(a.bits_ ^ b.bits_)); }
    friend F16 operator-(F16 a, F16 b) { return a + b; }
    friend F16 operator*(F16 a, F16 b);
    F16& operator+=(F16 o) { bits_ ^= o.bits_; return *this; }
    F16& operator-=(F16 o) { bits_ ^= o.bits_; return *this; }
    F16& operator*=(F16 o) { *this = *this * o; return *this; }
    friend bool operator==(F16 a, F16 b) { return a.bits_ == b.bits_; }
    friend bool operator!=(F16 a, F16 b) { return a.bits_ != b.bits_; }
    friend bool operator<(F16 a, F16 b) { return a.sort_key() < b.sort_key(); }

    F16 inv() const;                     // a^14; throws on zero
    F16 conj() const;                    // Frobenius a -> a^4
    F16 pow(long e) const;

    std::string str() const;             // "0", "1", "w", "w^2", ..., "w^14"
    static F16 parse(const std::string& s);

private:
    uint8_t bits_;
};

/// Description of GF(16^m) = GF(16)[y]/<g(y)>, g monic irreducible of degree m.
/// The modulus is found by seeded random search so runs are reproducible; the
/// seed actually used is recorded.
class ExtField {
public:
    using Elem = std::vector<F16>; // m coefficients, lowest degree first

    int m() const { return m_; }
    const std::vector<F16>& modulus() const { return modulus_; }
    uint64_t seed() const { return seed_; }
    uint64_t group_order() const; // 16^m - 1

    Elem zero() const { return Elem(size_t(m_), F16::zero()); }
    Elem one() const;
    Elem embed(F16 a) const; // GF(16) constant as an extension element

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, uint64_t e) const;
    Elem random_nonzero(uint64_t* state) const;

    /// Multiplicative order of a nonzero element that is known to divide n.
    bool has_order(const Elem& a, uint64_t n) const;

    friend ExtField ext_build(int m, uint64_t seed);

private:
    int m_ = 1;
    std::vector<F16> modulus_; // length m+1, monic
    uint64_t seed_ = 0;
};

/// Builds GF(16^m), 1 <= m <= 12.  The modulus search is deterministic for a
/// given seed and every candidate passes a full irreducibility test.
ExtField ext_build(int m, uint64_t seed = 0x16c0de);

/// Multiplicative order of 16 modulo odd n (the degree of the splitting field
/// of x^n - 1 over GF(16)).
int ord16_mod(int n);

/// An element of multiplicative order exactly n inside GF(16^m), m = ord16_mod(n).
/// Rejects even n.  The field used is returned through `field`.
ExtField::Elem nth_root(int n, ExtField& field, uint64_t seed = 0x16c0de);

std::vector<int> prime_divisors(uint64_t n);

} // namespace cymat
