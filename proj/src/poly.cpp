#include "cymat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cymat {

void F16Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

F16Poly F16Poly::constant(F16 a) {
    F16Poly p;
    if (!a.is_zero()) p.c_ = {a};
    return p;
}

F16Poly F16Poly::x() { return monomial(F16::one(), 1); }

F16Poly F16Poly::monomial(F16 a, int deg) {
    F16Poly p;
    if (!a.is_zero()) {
        p.c_.assign(size_t(deg + 1), F16::zero());
        p.c_.back() = a;
    }
    return p;
}

F16Poly F16Poly::xn_minus_1(int n) {
    F16Poly p;
    p.c_.assign(size_t(n + 1), F16::zero());
    p.c_[0] = F16::one();
    p.c_[size_t(n)] = F16::one();
    return p;
}

F16Poly operator+(const F16Poly& a, const F16Poly& b) {
    F16Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), F16::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

F16Poly operator*(const F16Poly& a, const F16Poly& b) {
    if (a.is_zero() || b.is_zero()) return F16Poly::zero();
    F16Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, F16::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

F16Poly F16Poly::operator*(F16 s) const {
    if (s.is_zero()) return F16Poly::zero();
    F16Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool F16Poly::operator<(const F16Poly& o) const {
    if (deg() != o.deg()) return deg() < o.deg();
    for (int i = deg(); i >= 0; --i) {
        int a = coeff(i).sort_key(), b = o.coeff(i).sort_key();
        if (a != b) return a < b;
    }
    return false;
}

void F16Poly::divmod(const F16Poly& a, const F16Poly& b, F16Poly& q, F16Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    q = F16Poly::zero();
    F16 lb_inv = b.lead().inv();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int d = r.deg() - b.deg();
        F16 f = r.lead() * lb_inv;
        q = q + F16Poly::monomial(f, d);
        r = r + b * F16Poly::monomial(f, d);
    }
}

F16Poly F16Poly::mod(const F16Poly& m) const {
    F16Poly q, r;
    divmod(*this, m, q, r);
    return r;
}

F16 F16Poly::eval(F16 x) const {
    F16 acc = F16::zero();
    for (int i = deg(); i >= 0; --i) acc = acc * x + coeff(i);
    return acc;
}

F16Poly F16Poly::monic() const {
    if (is_zero() || lead() == F16::one()) return *this;
    return *this * lead().inv();
}

F16Poly F16Poly::pow_mod(uint64_t e, const F16Poly& m) const {
    F16Poly r = F16Poly::one().mod(m);
    F16Poly base = mod(m);
    while (e) {
        if (e & 1) r = (r * base).mod(m);
        base = (base * base).mod(m);
        e >>= 1;
    }
    return r;
}

std::string F16Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        F16 a = coeff(i);
        if (a.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += a.str();
        } else {
            std::string xpart = (i == 1) ? "x" : "x^" + std::to_string(i);
            if (a == F16::one())
                out += xpart;
            else
                out += a.str() + "*" + xpart;
        }
    }
    return out;
}

F16Poly gcd(const F16Poly& a, const F16Poly& b) {
    F16Poly x = a, y = b;
    while (!y.is_zero()) {
        F16Poly r = x.mod(y);
        x = y;
        y = r;
    }
    return x.monic();
}

F16Poly egcd(const F16Poly& a, const F16Poly& b, F16Poly& s, F16Poly& t) {
    F16Poly r0 = a, r1 = b;
    F16Poly s0 = F16Poly::one(), s1 = F16Poly::zero();
    F16Poly t0 = F16Poly::zero(), t1 = F16Poly::one();
    while (!r1.is_zero()) {
        F16Poly q, r;
        F16Poly::divmod(r0, r1, q, r);
        r0 = r1; r1 = r;
        F16Poly s2 = s0 + q * s1;
        s0 = s1; s1 = s2;
        F16Poly t2 = t0 + q * t1;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero() && r0.lead() != F16::one()) {
        F16 inv = r0.lead().inv();
        r0 = r0 * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    s = s0;
    t = t0;
    return r0;
}

F16Poly poly_mul_mod(const F16Poly& a, const F16Poly& b, const F16Poly& modulus) {
    if (modulus.is_zero()) throw std::domain_error("poly_mul_mod: zero modulus");
    return (a * b).mod(modulus);
}

F16Poly reciprocal(const F16Poly& f, bool make_monic) {
    if (f.is_zero()) throw std::domain_error("reciprocal of zero polynomial");
    std::vector<F16> rev(f.coeffs().rbegin(), f.coeffs().rend());
    F16Poly r{std::move(rev)};
    return make_monic ? r.monic() : r;
}

F16Poly poly_conj(const F16Poly& f) {
    std::vector<F16> c = f.coeffs();
    for (auto& a : c) a = a.conj();
    return F16Poly{std::move(c)};
}

F16Poly hat(const F16Poly& p, int n) {
    F16Poly q, r;
    F16Poly::divmod(F16Poly::xn_minus_1(n), p, q, r);
    if (!r.is_zero())
        throw std::invalid_argument("hat: '" + p.str() + "' does not divide x^" +
                                    std::to_string(n) + " - 1 (remainder " + r.str() + ")");
    return q;
}

// ---------------------------------------------------------------------------
// Factorization of x^n - 1 via cyclotomic cosets.

namespace {

std::vector<std::vector<int>> cyclotomic_cosets(int n) {
    std::vector<std::vector<int>> cosets;
    std::vector<bool> seen(size_t(n), false);
    for (int s = 0; s < n; ++s) {
        if (seen[size_t(s)]) continue;
        std::vector<int> coset;
        int t = s;
        do {
            seen[size_t(t)] = true;
            coset.push_back(t);
            t = int((int64_t(t) * 16) % n);
        } while (t != s);
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

} // namespace

bool is_irreducible(const F16Poly& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    if (f.deg() <= 3) {
        // cubic/quadratic reducible iff it has a GF(16) root
        for (unsigned b = 0; b < 16; ++b)
            if (f.eval(F16(b)).is_zero()) return false;
        return true;
    }
    // x^(16^i) - x tests
    F16Poly x = F16Poly::x();
    F16Poly xq = x;
    int d = f.deg();
    for (int i = 1; i <= d / 2; ++i) {
        xq = xq.pow_mod(16, f);
        if (!gcd(xq + x, f).is_one()) return false;
    }
    return true;
}

const F16Poly& FactorSet::at1(int i) const {
    if (i < 1 || i > int(factors.size()))
        throw std::out_of_range("factor index f_" + std::to_string(i) + " out of range");
    return factors[size_t(i - 1)];
}

std::string FactorSet::str() const {
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ", ";
        out += "f" + std::to_string(i + 1) + " = " + factors[i].str();
    }
    return out;
}

FactorSet factor_xn_minus_1(int n, uint64_t seed) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("factor_xn_minus_1: n must be odd positive");
    FactorSet fs;
    fs.n = n;

    ExtField F;
    auto rho = nth_root(n, F, seed);

    for (const auto& coset : cyclotomic_cosets(n)) {
        // prod over s in coset of (y - rho^s), computed in GF(16^m)
        std::vector<ExtField::Elem> coeffs{F.one()};
        for (int s : coset) {
            auto root = F.pow(rho, uint64_t(s));
            std::vector<ExtField::Elem> next(coeffs.size() + 1, F.zero());
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = F.add(next[i + 1], coeffs[i]);
                next[i] = F.add(next[i], F.mul(coeffs[i], root)); // char 2: -root = root
            }
            coeffs = std::move(next);
        }
        std::vector<F16> base(coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            for (size_t j = 1; j < coeffs[i].size(); ++j)
                if (!coeffs[i][j].is_zero())
                    throw std::logic_error("coset factor has a coefficient outside GF(16)");
            base[i] = coeffs[i][0];
        }
        F16Poly f{std::move(base)};
        if (!is_irreducible(f))
            throw std::logic_error("coset factor failed irreducibility check: " + f.str());
        fs.factors.push_back(f.monic());
    }

    std::sort(fs.factors.begin(), fs.factors.end());

    F16Poly prod = F16Poly::one();
    for (const auto& f : fs.factors) prod = prod * f;
    if (prod != F16Poly::xn_minus_1(n))
        throw std::logic_error("factor product does not reproduce x^n - 1");
    return fs;
}

bool is_unit_mod_xn_minus_1(const F16Poly& f, int n) {
    if (f.is_zero()) return false;
    return gcd(f, F16Poly::xn_minus_1(n)).is_one();
}

// ---------------------------------------------------------------------------
// Small parser for GF(16)[x] polynomials: sums of terms, term = coefficient
// and/or x-power, '*' optional, '{}' around exponents tolerated.

namespace {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && (std::isspace(uint8_t(s[i])) || s[i] == '{' || s[i] == '}')) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return s[i];
    }
    long number() {
        skip();
        if (i >= s.size() || !std::isdigit(uint8_t(s[i])))
            throw std::invalid_argument("poly parse: expected number at position " + std::to_string(i));
        long v = 0;
        while (i < s.size() && std::isdigit(uint8_t(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    }
};

} // namespace

F16Poly parse_poly(const std::string& text) {
    PolyLexer lx{text};
    F16Poly sum = F16Poly::zero();
    bool expect_term = true;
    F16Poly term = F16Poly::one();
    bool have_term = false;

    auto flush = [&]() {
        if (have_term) sum = sum + term;
        term = F16Poly::one();
        have_term = false;
    };

    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+') {
            ++lx.i;
            flush();
            expect_term = true;
            continue;
        }
        if (c == '*') {
            ++lx.i;
            continue;
        }
        if (c == 'w') {
            ++lx.i;
            long e = 1;
            if (!lx.eof() && lx.peek() == '^') {
                ++lx.i;
                e = lx.number();
            }
            term = term * F16::w_pow(e);
            have_term = true;
            expect_term = false;
            continue;
        }
        if (c == 'x') {
            ++lx.i;
            long e = 1;
            if (!lx.eof() && lx.peek() == '^') {
                ++lx.i;
                e = lx.number();
            }
            term = term * F16Poly::monomial(F16::one(), int(e));
            have_term = true;
            expect_term = false;
            continue;
        }
        if (std::isdigit(uint8_t(c))) {
            long v = lx.number();
            term = term * ((v % 2) ? F16::one() : F16::zero());
            have_term = true;
            expect_term = false;
            continue;
        }
        throw std::invalid_argument(std::string("poly parse: unexpected character '") + c +
                                    "' at position " + std::to_string(lx.i));
    }
    if (expect_term && have_term) {
        // trailing '+' without term would land here; tolerate only complete input
    }
    flush();
    return sum;
}

} // namespace cymat
