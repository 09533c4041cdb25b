#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cymat/f2linalg.hpp"
#include "cymat/gf16.hpp"
#include "cymat/poly.hpp"

namespace cymat {

/// 4x4 matrix over F2 packed into 16 bits, bit r*4+c.
using Mat4 = uint16_t;

constexpr Mat4 kMat4Identity = 0x8421 >> 0 ? Mat4((1 << 0) | (1 << 5) | (1 << 10) | (1 << 15)) : 0;
Mat4 mat4_mul(Mat4 a, Mat4 b);
int mat4_rank(Mat4 a);

/// Element of M4(F2[u]/<u^k>): entry (r,c) is a k-bit polynomial in u.
struct MatForm {
    int k = 1;
    std::array<uint32_t, 16> e{};

    static MatForm zero(int k) { MatForm m; m.k = k; return m; }
    static MatForm identity(int k);
    static MatForm from_mat4(int k, Mat4 a, int ulayer = 0);

    uint32_t umask() const { return (k >= 32) ? ~uint32_t(0) : ((uint32_t(1) << k) - 1); }
    Mat4 layer(int i) const; // coefficient of u^i as an F2 matrix

    friend MatForm operator+(const MatForm& a, const MatForm& b);
    friend MatForm operator*(const MatForm& a, const MatForm& b);
    friend bool operator==(const MatForm& a, const MatForm& b) { return a.k == b.k && a.e == b.e; }
    friend bool operator!=(const MatForm& a, const MatForm& b) { return !(a == b); }

    std::string str() const; // 4 rows of k-bit polynomial entries
};

/// Element of R = F16[u,v]/<u^k, v^4> in coordinate form: c[4*i + j] is the
/// coefficient of u^i v^j (coefficients stand to the right of the monomial).
struct RElem {
    int k = 1;
    std::vector<F16> c;

    static RElem zero(int k) { return RElem{k, std::vector<F16>(size_t(4 * k))}; }
    static RElem one(int k);
    static RElem monomial(int k, int ui, int vj, F16 lambda);

    F16 coeff(int ui, int vj) const { return c[size_t(4 * ui + vj)]; }
    void set_coeff(int ui, int vj, F16 a) { c[size_t(4 * ui + vj)] = a; }
    bool is_zero() const;

    friend RElem operator+(const RElem& a, const RElem& b);
    friend bool operator==(const RElem& a, const RElem& b) { return a.k == b.k && a.c == b.c; }
    friend bool operator!=(const RElem& a, const RElem& b) { return !(a == b); }
};

enum class ConjMode { RingPower, CoeffWise };
const char* conj_mode_name(ConjMode m);

/// Shared per-k structure: the paper's basis matrices e and omega, the 16k
/// monomial basis u^i V^j Omega^l of M4(F2[u]/<u^k>) with its inverse (backing
/// psi), the mirrored left-coefficient basis used for printing, and the twist
/// exponent documenting noncommutativity.  Built once per k, read-only after.
class RingContext {
public:
    static const RingContext& get(int k);

    int k() const { return k_; }
    const MatForm& E() const { return E_; }
    const MatForm& Omega() const { return Omega_; }
    const MatForm& V() const { return V_; }

    /// The unique s in {2,4,8} with E*Omega = Omega^s*E.
    int twist_exponent() const { return twist_; }

    MatForm psi_inv(const RElem& r) const;  // u^i v^j w^l -> u^i V^j Omega^l
    RElem psi(const MatForm& m) const;      // inverse map, solved via cached basis

    RElem mul(const RElem& a, const RElem& b) const;
    RElem conj(const RElem& r, ConjMode mode) const;

    /// Coefficients mu with r = sum_{i,j} mu[4i+j] * u^i v^j read with the
    /// scalar to the LEFT of the v-power (used for paper-style printing).
    std::vector<F16> left_coords(const RElem& r) const;

    /// Rank of the 16k monomial basis over F2 (always 16k; exposed for tests).
    int basis_rank() const { return basis_rank_; }

private:
    explicit RingContext(int k);
    MatForm basis_mat(int i, int j, int l) const;

    int k_;
    MatForm E_, Omega_, V_;
    int twist_;
    int basis_rank_;
    std::vector<MatForm> right_basis_; // index (i*4+j)*4+l
    BitMat right_inv_;
    BitMat left_inv_;
};

/// Gray map theta: R -> F16^{4k}.  With d_t = coeff of u^i v^j (t = 4i+j),
/// the image is (d_{4k-1}, d_{4k-2}+d_{4k-1}, ..., d_1+d_{4k-1}, sum of all d_t)
/// in 0-based indexing.  Bijective and right-F16-linear.
std::vector<F16> theta(const RElem& r);
RElem theta_inv(int k, const std::vector<F16>& y);

/// Hamming weight of theta(r); the extended Lee weight on R.
int lee_weight(const RElem& r);

/// Bachoc layer map: write psi_inv(r) = Y_1 + u Y_2 + ... + u^{k-1} Y_k and
/// emit (Y_k, Y_k + Y_{k-1}, ..., Y_k + Y_2, Y_1 + ... + Y_k), k coordinates.
std::vector<Mat4> bachoc_phi(const RingContext& ctx, const RElem& r);

/// Base weight on M4(F2): 0 on zero, 1 on invertible, 2 on nonzero singular.
int default_bachoc_base(Mat4 a);

int bachoc_weight(const RingContext& ctx, const RElem& r,
                  const std::function<int(Mat4)>& base = default_bachoc_base);

/// Paper-style rendering, scalars to the left: "w^3*v^3 + w^5*v^2 + w^4*v + w^12".
std::string relem_str(const RingContext& ctx, const RElem& r);

// ---------------------------------------------------------------------------
// R_n = R[x]/<x^n - 1>

struct RPoly {
    int n = 1;
    int k = 1;
    std::vector<RElem> c; // always size n (reduced)

    static RPoly zero(int n, int k);
    static RPoly one(int n, int k);

    bool is_zero() const;
    friend bool operator==(const RPoly& a, const RPoly& b) { return a.n == b.n && a.k == b.k && a.c == b.c; }
    friend bool operator!=(const RPoly& a, const RPoly& b) { return !(a == b); }
};

RPoly rp_add(const RPoly& a, const RPoly& b);
RPoly rp_mul(const RingContext& ctx, const RPoly& a, const RPoly& b);
/// F16[x] polynomial embedded at u^0 v^0, reduced mod x^n - 1.
RPoly rp_lift(const F16Poly& f, int n, int k);
/// p * x^t u^i v^j w^l  (right multiplication by a monomial).
RPoly rp_mul_monomial(const RingContext& ctx, const RPoly& p, int t, int ui, int vj, int wl = -1);
/// Human-readable rendering with x-powers, highest degree first.
std::string rp_str(const RingContext& ctx, const RPoly& p);

} // namespace cymat
