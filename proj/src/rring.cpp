#include "cymat/rring.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cymat {

Mat4 mat4_mul(Mat4 a, Mat4 b) {
    Mat4 r = 0;
    for (int i = 0; i < 4; ++i) {
        uint16_t arow = uint16_t((a >> (4 * i)) & 0xF);
        uint16_t acc = 0;
        for (int t = 0; t < 4; ++t)
            if ((arow >> t) & 1) acc ^= uint16_t((b >> (4 * t)) & 0xF);
        r |= Mat4(acc << (4 * i));
    }
    return r;
}

int mat4_rank(Mat4 a) {
    uint16_t rows[4];
    for (int i = 0; i < 4; ++i) rows[i] = uint16_t((a >> (4 * i)) & 0xF);
    int rank = 0;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = rank; r < 4; ++r)
            if ((rows[r] >> c) & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < 4; ++r)
            if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

MatForm MatForm::identity(int k) {
    MatForm m = zero(k);
    for (int i = 0; i < 4; ++i) m.e[size_t(i * 4 + i)] = 1;
    return m;
}

MatForm MatForm::from_mat4(int k, Mat4 a, int ulayer) {
    MatForm m = zero(k);
    if (ulayer >= k) return m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if ((a >> (r * 4 + c)) & 1) m.e[size_t(r * 4 + c)] = uint32_t(1) << ulayer;
    return m;
}

Mat4 MatForm::layer(int i) const {
    Mat4 a = 0;
    for (int p = 0; p < 16; ++p)
        if ((e[size_t(p)] >> i) & 1) a |= Mat4(1 << p);
    return a;
}

MatForm operator+(const MatForm& a, const MatForm& b) {
    if (a.k != b.k) throw std::invalid_argument("MatForm add: mismatched k");
    MatForm r = a;
    for (int p = 0; p < 16; ++p) r.e[size_t(p)] ^= b.e[size_t(p)];
    return r;
}

MatForm operator*(const MatForm& a, const MatForm& b) {
    if (a.k != b.k) throw std::invalid_argument("MatForm mul: mismatched k");
    MatForm r = MatForm::zero(a.k);
    uint32_t mask = r.umask();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            uint64_t acc = 0;
            for (int t = 0; t < 4; ++t) {
                uint64_t x = a.e[size_t(i * 4 + t)];
                uint64_t y = b.e[size_t(t * 4 + j)];
                if (!x || !y) continue;
                // carry-less product of the u-polynomials
                for (int bit = 0; bit < a.k; ++bit)
                    if ((x >> bit) & 1) acc ^= y << bit;
            }
            r.e[size_t(i * 4 + j)] = uint32_t(acc) & mask;
        }
    }
    return r;
}

std::string MatForm::str() const {
    std::ostringstream os;
    for (int r = 0; r < 4; ++r) {
        os << "[ ";
        for (int c = 0; c < 4; ++c) {
            uint32_t p = e[size_t(r * 4 + c)];
            std::string entry;
            if (p == 0) entry = "0";
            else {
                for (int i = 0; i < k; ++i) {
                    if (!((p >> i) & 1)) continue;
                    if (!entry.empty()) entry += "+";
                    entry += (i == 0) ? "1" : (i == 1 ? "u" : "u^" + std::to_string(i));
                }
            }
            os << entry << (c < 3 ? " " : "");
        }
        os << " ]";
        if (r < 3) os << "\n";
    }
    return os.str();
}

RElem RElem::one(int k) { return monomial(k, 0, 0, F16::one()); }

RElem RElem::monomial(int k, int ui, int vj, F16 lambda) {
    RElem r = zero(k);
    if (ui < k && vj < 4) r.set_coeff(ui, vj, lambda);
    return r;
}

bool RElem::is_zero() const {
    for (auto a : c)
        if (!a.is_zero()) return false;
    return true;
}

RElem operator+(const RElem& a, const RElem& b) {
    if (a.k != b.k) throw std::invalid_argument("RElem add: mismatched k");
    RElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

const char* conj_mode_name(ConjMode m) {
    return m == ConjMode::RingPower ? "power" : "coeff";
}

// ---------------------------------------------------------------------------
// RingContext

namespace {

// The displayed basis matrices (row-major bit layout r*4+c):
//   e = 1000 / 0010 / 1100 / 0011      omega = 0100 / 0010 / 0001 / 1100
Mat4 paper_e() {
    const int rows[4] = {0b0001, 0b0100, 0b0011, 0b1100};
    Mat4 m = 0;
    for (int r = 0; r < 4; ++r) m |= Mat4(rows[r] << (4 * r));
    return m;
}

Mat4 paper_omega() {
    const int rows[4] = {0b0010, 0b0100, 0b1000, 0b0011};
    Mat4 m = 0;
    for (int r = 0; r < 4; ++r) m |= Mat4(rows[r] << (4 * r));
    return m;
}

// Bit layout of a vectorized MatForm: position (r*4+c)*k + i.
std::vector<uint64_t> vectorize(const MatForm& m) {
    std::vector<uint64_t> v(size_t((16 * m.k + 63) / 64), 0);
    for (int p = 0; p < 16; ++p) {
        uint32_t bits = m.e[size_t(p)];
        while (bits) {
            int i = __builtin_ctz(bits);
            bits &= bits - 1;
            int pos = p * m.k + i;
            v[size_t(pos >> 6)] |= uint64_t(1) << (pos & 63);
        }
    }
    return v;
}

} // namespace

MatForm RingContext::basis_mat(int i, int j, int l) const {
    MatForm m = MatForm::from_mat4(k_, kMat4Identity, i); // u^i
    for (int t = 0; t < j; ++t) m = m * V_;
    for (int t = 0; t < l; ++t) m = m * Omega_;
    return m;
}

RingContext::RingContext(int k) : k_(k) {
    if (k < 1 || k > 12) throw std::invalid_argument("RingContext: k out of range [1,12]");
    E_ = MatForm::from_mat4(k, paper_e());
    Omega_ = MatForm::from_mat4(k, paper_omega());
    V_ = MatForm::identity(k) + E_;

    // twist exponent: the unique s with E*Omega = Omega^s*E
    twist_ = -1;
    {
        MatForm lhs = E_ * Omega_;
        MatForm pw = MatForm::identity(k);
        for (int s = 1; s <= 14; ++s) {
            pw = pw * Omega_;
            if (pw * E_ == lhs) { twist_ = s; break; }
        }
        if (twist_ != 2 && twist_ != 4 && twist_ != 8)
            throw std::logic_error("twist exponent not in {2,4,8}; basis constants are wrong");
    }

    int dim = 16 * k;
    right_basis_.resize(size_t(dim), MatForm::zero(k));
    BitMat right(dim, dim); // column kappa = vectorized basis matrix
    BitMat left(dim, dim);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int l = 0; l < 4; ++l) {
                int kappa = (i * 4 + j) * 4 + l;
                MatForm bm = basis_mat(i, j, l);
                right_basis_[size_t(kappa)] = bm;
                auto v = vectorize(bm);
                // left-form basis: u^i * Omega^l * V^j
                MatForm lm = MatForm::from_mat4(k, kMat4Identity, i);
                for (int t = 0; t < l; ++t) lm = lm * Omega_;
                for (int t = 0; t < j; ++t) lm = lm * V_;
                auto lv = vectorize(lm);
                for (int row = 0; row < dim; ++row) {
                    right.set(row, kappa, (v[size_t(row >> 6)] >> (row & 63)) & 1);
                    left.set(row, kappa, (lv[size_t(row >> 6)] >> (row & 63)) & 1);
                }
            }
        }
    }
    basis_rank_ = right.rank();
    if (basis_rank_ != dim)
        throw std::logic_error("monomial basis of M4(F2[u]/<u^k>) is rank-deficient");
    right_inv_ = right.inverse();
    left_inv_ = left.inverse();
}

const RingContext& RingContext::get(int k) {
    static std::mutex mu;
    static std::map<int, const RingContext*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, new RingContext(k)).first;
    return *it->second;
}

MatForm RingContext::psi_inv(const RElem& r) const {
    if (r.k != k_) throw std::invalid_argument("psi_inv: element has wrong k");
    MatForm m = MatForm::zero(k_);
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < 4; ++j) {
            uint8_t bits = r.coeff(i, j).bits();
            for (int l = 0; l < 4; ++l)
                if ((bits >> l) & 1) m = m + right_basis_[size_t((i * 4 + j) * 4 + l)];
        }
    }
    return m;
}

RElem RingContext::psi(const MatForm& m) const {
    if (m.k != k_) throw std::invalid_argument("psi: matrix has wrong k");
    auto y = right_inv_.mul_vec(vectorize(m));
    RElem r = RElem::zero(k_);
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < 4; ++j) {
            unsigned bits = 0;
            for (int l = 0; l < 4; ++l) {
                int kappa = (i * 4 + j) * 4 + l;
                if ((y[size_t(kappa >> 6)] >> (kappa & 63)) & 1) bits |= 1u << l;
            }
            r.set_coeff(i, j, F16(bits));
        }
    }
    return r;
}

RElem RingContext::mul(const RElem& a, const RElem& b) const {
    if (a.k != b.k) throw std::invalid_argument("RElem mul: mismatched k");
    return psi(psi_inv(a) * psi_inv(b));
}

RElem RingContext::conj(const RElem& r, ConjMode mode) const {
    if (mode == ConjMode::RingPower) {
        RElem sq = mul(r, r);
        return mul(sq, sq);
    }
    RElem out = r;
    for (auto& a : out.c) a = a.conj();
    return out;
}

std::vector<F16> RingContext::left_coords(const RElem& r) const {
    auto y = left_inv_.mul_vec(vectorize(psi_inv(r)));
    std::vector<F16> mu(size_t(4 * k_), F16::zero());
    for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < 4; ++j) {
            unsigned bits = 0;
            for (int l = 0; l < 4; ++l) {
                int kappa = (i * 4 + j) * 4 + l;
                if ((y[size_t(kappa >> 6)] >> (kappa & 63)) & 1) bits |= 1u << l;
            }
            mu[size_t(4 * i + j)] = F16(bits);
        }
    }
    return mu;
}

// ---------------------------------------------------------------------------
// Gray map, weights

std::vector<F16> theta(const RElem& r) {
    int n4k = 4 * r.k;
    std::vector<F16> out(size_t(n4k), F16::zero());
    F16 last = r.c[size_t(n4k - 1)];
    out[0] = last;
    for (int p = 1; p <= n4k - 2; ++p) out[size_t(p)] = r.c[size_t(n4k - 1 - p)] + last;
    F16 sum = F16::zero();
    for (auto d : r.c) sum += d;
    out[size_t(n4k - 1)] = sum;
    return out;
}

RElem theta_inv(int k, const std::vector<F16>& y) {
    int n4k = 4 * k;
    if (int(y.size()) != n4k) throw std::invalid_argument("theta_inv: wrong length");
    RElem r = RElem::zero(k);
    F16 last = y[0];
    r.c[size_t(n4k - 1)] = last;
    for (int p = 1; p <= n4k - 2; ++p) r.c[size_t(n4k - 1 - p)] = y[size_t(p)] + last;
    F16 rest = F16::zero();
    for (int t = 1; t < n4k; ++t) rest += r.c[size_t(t)];
    r.c[0] = y[size_t(n4k - 1)] + rest;
    return r;
}

int lee_weight(const RElem& r) {
    int w = 0;
    for (auto a : theta(r))
        if (!a.is_zero()) ++w;
    return w;
}

std::vector<Mat4> bachoc_phi(const RingContext& ctx, const RElem& r) {
    MatForm m = ctx.psi_inv(r);
    int k = ctx.k();
    std::vector<Mat4> layers(size_t(k), 0);
    for (int i = 0; i < k; ++i) layers[size_t(i)] = m.layer(i);
    std::vector<Mat4> out;
    out.reserve(size_t(k));
    Mat4 top = layers[size_t(k - 1)];
    out.push_back(top);
    for (int i = k - 2; i >= 1; --i) out.push_back(Mat4(top ^ layers[size_t(i)]));
    if (k >= 2) {
        Mat4 sum = 0;
        for (auto y : layers) sum ^= y;
        out.push_back(sum);
    }
    return out;
}

int default_bachoc_base(Mat4 a) {
    if (a == 0) return 0;
    return mat4_rank(a) == 4 ? 1 : 2;
}

int bachoc_weight(const RingContext& ctx, const RElem& r, const std::function<int(Mat4)>& base) {
    int w = 0;
    for (Mat4 y : bachoc_phi(ctx, r)) w += base(y);
    return w;
}

std::string relem_str(const RingContext& ctx, const RElem& r) {
    if (r.is_zero()) return "0";
    auto mu = ctx.left_coords(r);
    std::string out;
    for (int i = ctx.k() - 1; i >= 0; --i) {
        for (int j = 3; j >= 0; --j) {
            F16 a = mu[size_t(4 * i + j)];
            if (a.is_zero()) continue;
            std::string term;
            if (a != F16::one() || (i == 0 && j == 0)) term = a.str();
            if (i > 0) {
                if (!term.empty()) term += "*";
                term += (i == 1) ? "u" : "u^" + std::to_string(i);
            }
            if (j > 0) {
                if (!term.empty()) term += "*";
                term += (j == 1) ? "v" : "v^" + std::to_string(j);
            }
            if (!out.empty()) out += " + ";
            out += term;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// RPoly

RPoly RPoly::zero(int n, int k) {
    return RPoly{n, k, std::vector<RElem>(size_t(n), RElem::zero(k))};
}

RPoly RPoly::one(int n, int k) {
    RPoly p = zero(n, k);
    p.c[0] = RElem::one(k);
    return p;
}

bool RPoly::is_zero() const {
    for (const auto& a : c)
        if (!a.is_zero()) return false;
    return true;
}

RPoly rp_add(const RPoly& a, const RPoly& b) {
    if (a.n != b.n || a.k != b.k) throw std::invalid_argument("rp_add: mismatched n or k");
    RPoly r = a;
    for (int t = 0; t < r.n; ++t) r.c[size_t(t)] = r.c[size_t(t)] + b.c[size_t(t)];
    return r;
}

RPoly rp_mul(const RingContext& ctx, const RPoly& a, const RPoly& b) {
    if (a.n != b.n || a.k != b.k) throw std::invalid_argument("rp_mul: mismatched n or k");
    RPoly r = RPoly::zero(a.n, a.k);
    for (int i = 0; i < a.n; ++i) {
        if (a.c[size_t(i)].is_zero()) continue;
        for (int j = 0; j < b.n; ++j) {
            if (b.c[size_t(j)].is_zero()) continue;
            int t = (i + j) % a.n;
            r.c[size_t(t)] = r.c[size_t(t)] + ctx.mul(a.c[size_t(i)], b.c[size_t(j)]);
        }
    }
    return r;
}

RPoly rp_lift(const F16Poly& f, int n, int k) {
    RPoly p = RPoly::zero(n, k);
    for (int d = 0; d <= f.deg(); ++d) {
        F16 a = f.coeff(d);
        if (a.is_zero()) continue;
        int t = d % n;
        RElem add = RElem::monomial(k, 0, 0, a);
        p.c[size_t(t)] = p.c[size_t(t)] + add;
    }
    return p;
}

RPoly rp_mul_monomial(const RingContext& ctx, const RPoly& p, int t, int ui, int vj, int wl) {
    RPoly r = RPoly::zero(p.n, p.k);
    F16 lam = (wl < 0) ? F16::one() : F16::w_pow(wl);
    RElem m = RElem::monomial(p.k, ui, vj, lam);
    if (m.is_zero()) return r;
    for (int d = 0; d < p.n; ++d) {
        if (p.c[size_t(d)].is_zero()) continue;
        int dst = (d + t) % p.n;
        r.c[size_t(dst)] = r.c[size_t(dst)] + ctx.mul(p.c[size_t(d)], m);
    }
    return r;
}

std::string rp_str(const RingContext& ctx, const RPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.n - 1; d >= 0; --d) {
        const RElem& a = p.c[size_t(d)];
        if (a.is_zero()) continue;
        std::string coeff = relem_str(ctx, a);
        bool needs_parens = coeff.find(" + ") != std::string::npos;
        std::string term;
        if (d == 0) {
            term = needs_parens ? "(" + coeff + ")" : coeff;
        } else {
            std::string xpart = (d == 1) ? "x" : "x^" + std::to_string(d);
            if (coeff == "1")
                term = xpart;
            else
                term = (needs_parens ? "(" + coeff + ")" : coeff) + "*" + xpart;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace cymat
