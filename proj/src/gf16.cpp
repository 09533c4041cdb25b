#include "cymat/gf16.hpp"

#include <algorithm>
#include <stdexcept>

namespace cymat {

namespace {

struct Tables {
    uint8_t exp[15];  // exp[t] = bits of w^t
    int log[16];      // log[bits] for nonzero bits
    uint8_t mul[16][16];

    Tables() {
        // w^4 = w + 1  (modulus x^4 + x + 1)
        uint8_t x = 1;
        for (int t = 0; t < 15; ++t) {
            exp[t] = x;
            log[x] = t;
            uint8_t hi = uint8_t(x & 0x8);
            x = uint8_t((x << 1) & 0xF);
            if (hi) x ^= 0x3; // w^4 -> w + 1
        }
        log[0] = -1;
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 16; ++b)
                mul[a][b] = (a && b) ? exp[(log[a] + log[b]) % 15] : 0;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

} // namespace

F16 F16::w_pow(long t) {
    long r = t % 15;
    if (r < 0) r += 15;
    return F16(tables().exp[r]);
}

int F16::log() const {
    if (bits_ == 0) throw std::domain_error("log of zero in GF(16)");
    return tables().log[bits_];
}

F16 operator*(F16 a, F16 b) { return F16(tables().mul[a.bits()][b.bits()]); }

F16 F16::inv() const {
    if (bits_ == 0) throw std::domain_error("inverse of zero in GF(16)");
    return w_pow(15 - log());
}

F16 F16::conj() const {
    if (bits_ == 0) return *this;
    return w_pow(4L * log());
}

F16 F16::pow(long e) const {
    if (bits_ == 0) {
        if (e == 0) return F16::one();
        if (e < 0) throw std::domain_error("negative power of zero");
        return F16::zero();
    }
    return w_pow(long(log()) * e);
}

std::string F16::str() const {
    if (bits_ == 0) return "0";
    int t = log();
    if (t == 0) return "1";
    if (t == 1) return "w";
    return "w^" + std::to_string(t);
}

F16 F16::parse(const std::string& s) {
    if (s == "0") return F16::zero();
    if (s == "1") return F16::one();
    if (s == "w") return F16(2);
    if (s.rfind("w^", 0) == 0) {
        long t = std::stol(s.substr(2));
        return w_pow(t);
    }
    throw std::invalid_argument("not a GF(16) element: '" + s + "'");
}

// ---------------------------------------------------------------------------
// GF(16^m)

uint64_t ExtField::group_order() const {
    uint64_t q = 1;
    for (int i = 0; i < m_; ++i) q *= 16;
    return q - 1;
}

ExtField::Elem ExtField::one() const {
    Elem e = zero();
    e[0] = F16::one();
    return e;
}

ExtField::Elem ExtField::embed(F16 a) const {
    Elem e = zero();
    e[0] = a;
    return e;
}

bool ExtField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](F16 c) { return c.is_zero(); });
}

bool ExtField::is_one(const Elem& a) const {
    if (a[0] != F16::one()) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (int i = 0; i < m_; ++i) r[i] += b[i];
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    std::vector<F16> prod(size_t(2 * m_ - 1), F16::zero());
    for (int i = 0; i < m_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce modulo the monic modulus g: y^m = g - leading term
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        F16 c = prod[d];
        if (c.is_zero()) continue;
        prod[d] = F16::zero();
        for (int i = 0; i < m_; ++i) prod[d - m_ + i] += c * modulus_[i];
    }
    prod.resize(size_t(m_));
    return prod;
}

ExtField::Elem ExtField::pow(const Elem& a, uint64_t e) const {
    Elem r = one();
    Elem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

ExtField::Elem ExtField::random_nonzero(uint64_t* state) const {
    auto next = [&]() {
        // xorshift64*, fine for test-vector generation
        uint64_t x = *state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        *state = x;
        return x * 0x2545F4914F6CDD1DULL;
    };
    while (true) {
        Elem e = zero();
        uint64_t bitsrc = next();
        for (int i = 0; i < m_; ++i) {
            e[i] = F16(unsigned(bitsrc & 0xF));
            bitsrc >>= 4;
            if (i % 15 == 14) bitsrc = next();
        }
        if (!is_zero(e)) return e;
    }
}

std::vector<int> prime_divisors(uint64_t n) {
    std::vector<int> ps;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(int(p));
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(int(n));
    return ps;
}

bool ExtField::has_order(const Elem& a, uint64_t n) const {
    if (!is_one(pow(a, n))) return false;
    for (int p : prime_divisors(n))
        if (is_one(pow(a, n / uint64_t(p)))) return false;
    return true;
}

namespace {

// f monic of degree m over GF(16); true iff irreducible.
// Test: y^(16^m) == y mod f, and gcd(y^(16^(m/p)) - y, f) == 1 for prime p | m.
bool irreducible_modpoly(const std::vector<F16>& f, int m) {
    ExtField tmp;
    struct PolyMod {
        const std::vector<F16>& f;
        int m;
        std::vector<F16> mul(const std::vector<F16>& a, const std::vector<F16>& b) const {
            std::vector<F16> prod(size_t(2 * m - 1), F16::zero());
            for (int i = 0; i < m; ++i) {
                if (a[i].is_zero()) continue;
                for (int j = 0; j < m; ++j) prod[i + j] += a[i] * b[j];
            }
            for (int d = 2 * m - 2; d >= m; --d) {
                F16 c = prod[d];
                if (c.is_zero()) continue;
                prod[d] = F16::zero();
                for (int i = 0; i < m; ++i) prod[d - m + i] += c * f[i];
            }
            prod.resize(size_t(m));
            return prod;
        }
    } pm{f, m};

    auto frob_pow = [&](std::vector<F16> a, int times) {
        // a -> a^(16^times) by repeated 16th powers
        for (int t = 0; t < times; ++t) {
            auto a2 = pm.mul(a, a);
            auto a4 = pm.mul(a2, a2);
            auto a8 = pm.mul(a4, a4);
            a = pm.mul(a8, a8);
        }
        return a;
    };

    std::vector<F16> y(size_t(m), F16::zero());
    if (m == 1) {
        return true; // monic degree 1 is always irreducible
    }
    y[1] = F16::one();

    // y^(16^m) must equal y
    if (frob_pow(y, m) != y) return false;

    // for each prime p | m:  gcd over polynomials is overkill here; since f has
    // degree m it suffices that y^(16^(m/p)) != y (no proper subfield contains y)
    for (int p : prime_divisors(uint64_t(m))) {
        if (frob_pow(y, m / p) == y) return false;
    }
    return true;
}

} // namespace

ExtField ext_build(int m, uint64_t seed) {
    if (m < 1 || m > 12) throw std::invalid_argument("ext_build: m out of range [1,12]");
    ExtField F;
    F.m_ = m;
    F.seed_ = seed;
    if (m == 1) {
        F.modulus_ = {F16::one(), F16::one()}; // y + 1, never actually used
        return F;
    }
    uint64_t state = seed ^ (0x9E3779B97F4A7C15ULL * uint64_t(m));
    auto next = [&]() {
        uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545F4914F6CDD1DULL;
    };
    while (true) {
        std::vector<F16> f(size_t(m + 1), F16::zero());
        uint64_t r = next();
        for (int i = 0; i < m; ++i) {
            f[i] = F16(unsigned(r & 0xF));
            r >>= 4;
            if (i % 15 == 14) r = next();
        }
        f[m] = F16::one();
        if (f[0].is_zero()) continue; // must not be divisible by y
        if (irreducible_modpoly(f, m)) {
            F.modulus_ = f;
            return F;
        }
    }
}

int ord16_mod(int n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("ord16_mod: n must be odd positive");
    int r = 16 % n;
    int ord = 1;
    int x = r;
    while (x != 1 % n) {
        x = int((int64_t(x) * r) % n);
        ++ord;
        if (ord > n) throw std::logic_error("ord16_mod failed");
    }
    return ord;
}

ExtField::Elem nth_root(int n, ExtField& field, uint64_t seed) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("nth_root: n must be odd positive");
    int m = ord16_mod(n);
    field = ext_build(m, seed);
    if (n == 1) return field.one();
    uint64_t q = field.group_order();
    if (q % uint64_t(n) != 0) throw std::logic_error("nth_root: n does not divide 16^m - 1");
    uint64_t state = seed ^ 0xA5A5A5A55A5A5A5AULL ^ uint64_t(n);
    while (true) {
        auto z = field.random_nonzero(&state);
        auto rho = field.pow(z, q / uint64_t(n));
        if (field.has_order(rho, uint64_t(n))) return rho;
    }
}

} // namespace cymat
