#include "cymat/codebuild.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cymat/f2linalg.hpp"
#include "json.hpp"

namespace cymat {

namespace {

F16Poly unit_one() { return F16Poly::one(); }

std::string class_name(int cls, int k) {
    if (cls == 0) return "P0 (unused)";
    if (cls <= k) return "u^" + std::to_string(cls - 1);
    if (cls <= 2 * k) return "u^" + std::to_string(cls - k - 1) + " v";
    if (cls <= 3 * k) return "u^" + std::to_string(cls - 2 * k - 1) + " v^2";
    if (cls <= 4 * k) return "u^" + std::to_string(cls - 3 * k - 1) + " v^3";
    if (cls <= 5 * k - 1) return "beta class " + std::to_string(cls - 4 * k);
    return "alpha class " + std::to_string(cls - 5 * k);
}

} // namespace

F16Poly ConstructionProfile::alpha(int row, int col) const {
    if (row == 1 && col == 1) return F16Poly::zero();
    if (row == 1 && col == 2) return F16Poly::one();
    auto it = alphas.find({row, col});
    return it == alphas.end() ? unit_one() : it->second;
}

F16Poly ConstructionProfile::beta(int m, int i) const {
    auto it = betas.find({m, i});
    return it == betas.end() ? unit_one() : it->second;
}

F16Poly ConstructionProfile::class_product(const FactorSet& factors, int cls) const {
    F16Poly prod = F16Poly::one();
    for (size_t i = 0; i < class_of.size(); ++i)
        if (class_of[i] == cls) prod = prod * factors.factors[i];
    return prod;
}

int ConstructionProfile::class_degree(const FactorSet& factors, int cls) const {
    int d = 0;
    for (size_t i = 0; i < class_of.size(); ++i)
        if (class_of[i] == cls) d += factors.factors[i].deg();
    return d;
}

void ConstructionProfile::validate(const FactorSet& factors) const {
    if (n != factors.n) throw std::invalid_argument("profile n does not match factor set");
    if (k < 1) throw std::invalid_argument("profile k must be >= 1");
    if (class_of.size() != factors.factors.size())
        throw std::invalid_argument("profile must assign a class to every factor");
    int maxcls = 5 * k + 3;
    for (size_t i = 0; i < class_of.size(); ++i) {
        int c = class_of[i];
        if (c < 0 || c > maxcls)
            throw std::invalid_argument("factor f" + std::to_string(i + 1) + " assigned to class " +
                                        std::to_string(c) + ", outside 0.." + std::to_string(maxcls));
        if (k == 1 && c > 4 * k)
            throw std::invalid_argument(
                "factor f" + std::to_string(i + 1) + " assigned to class " + std::to_string(c) +
                " (" + class_name(c, k) + "): the u-headed classes above 4k vanish when k = 1");
    }
    for (const auto& [key, poly] : alphas) {
        auto [row, col] = key;
        if (row < 1 || row > 4 || col < 1 || col > k)
            throw std::invalid_argument("alpha index (" + std::to_string(row) + "," +
                                        std::to_string(col) + ") out of range");
        if (row == 1 && col == 1 && !poly.is_zero())
            throw std::invalid_argument("alpha_{11} is fixed to 0");
        if (row == 1 && col == 2 && !poly.is_one())
            throw std::invalid_argument("alpha_{12} is fixed to 1");
        if (!(row == 1 && col == 1) && !is_unit_mod_xn_minus_1(poly, n))
            throw std::invalid_argument("alpha_{" + std::to_string(row) + std::to_string(col) +
                                        "} = " + poly.str() + " is not a unit mod x^n - 1");
    }
    for (const auto& [key, poly] : betas) {
        auto [m, i] = key;
        if (m < 1 || m > 3 || i < 1 || i > k - 1)
            throw std::invalid_argument("beta index (" + std::to_string(m) + "," +
                                        std::to_string(i) + ") out of range");
        if (!is_unit_mod_xn_minus_1(poly, n))
            throw std::invalid_argument("beta_{" + std::to_string(m) + std::to_string(i) + "} = " +
                                        poly.str() + " is not a unit mod x^n - 1");
    }
}

// ---------------------------------------------------------------------------
// JSON round-trip

ConstructionProfile profile_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    ConstructionProfile p;
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    int nfactors = 0;
    if (j.contains("factors")) {
        nfactors = j.at("factors").get<int>();
    } else {
        // count of factors follows from n
        nfactors = int(factor_xn_minus_1(p.n).factors.size());
    }
    p.class_of.assign(size_t(nfactors), 0);
    if (j.contains("classes")) {
        for (auto& [key, arr] : j.at("classes").items()) {
            int cls = std::stoi(key);
            for (auto& v : arr) {
                int fi = v.get<int>(); // 1-based factor index
                if (fi < 1 || fi > nfactors)
                    throw std::invalid_argument("profile refers to factor f" + std::to_string(fi) +
                                                " but x^n - 1 has " + std::to_string(nfactors) +
                                                " factors");
                p.class_of[size_t(fi - 1)] = cls;
            }
        }
    }
    auto read_units = [&](const char* name, std::map<std::pair<int, int>, F16Poly>& dst) {
        if (!j.contains(name)) return;
        for (auto& [key, val] : j.at(name).items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument(std::string(name) + " keys must look like \"2,1\"");
            int a = std::stoi(key.substr(0, comma));
            int b = std::stoi(key.substr(comma + 1));
            dst[{a, b}] = parse_poly(val.get<std::string>());
        }
    };
    read_units("alphas", p.alphas);
    read_units("betas", p.betas);
    return p;
}

std::string profile_to_json(const ConstructionProfile& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["factors"] = int(p.class_of.size());
    nlohmann::json classes = nlohmann::json::object();
    for (size_t i = 0; i < p.class_of.size(); ++i) {
        if (p.class_of[i] == 0) continue;
        classes[std::to_string(p.class_of[i])].push_back(int(i + 1));
    }
    j["classes"] = classes;
    auto dump_units = [&](const char* name, const std::map<std::pair<int, int>, F16Poly>& src) {
        if (src.empty()) return;
        nlohmann::json u = nlohmann::json::object();
        for (const auto& [key, poly] : src)
            u[std::to_string(key.first) + "," + std::to_string(key.second)] = poly.str();
        j[name] = u;
    };
    dump_units("alphas", p.alphas);
    dump_units("betas", p.betas);
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Generator assembly (Theorem-3 direct-sum shape)

namespace {

// sum_{j=jlo..jhi} u^{j-1} * alpha(row, j), as an element of R_n
RPoly alpha_row(const RingContext& ctx, const ConstructionProfile& p, int row, int jlo, int jhi) {
    RPoly acc = RPoly::zero(p.n, p.k);
    for (int j = jlo; j <= jhi; ++j) {
        RPoly lifted = rp_lift(p.alpha(row, j), p.n, p.k);
        acc = rp_add(acc, rp_mul_monomial(ctx, lifted, 0, j - 1, 0));
    }
    return acc;
}

RPoly vmono(const RingContext& ctx, int n, int k, int vj) {
    (void)ctx;
    RPoly p = RPoly::zero(n, k);
    p.c[0] = RElem::monomial(k, 0, vj, F16::one());
    return p;
}

} // namespace

GeneratorSet assemble_generators(const FactorSet& factors, const ConstructionProfile& p) {
    p.validate(factors);
    const auto& ctx = RingContext::get(p.k);
    const int n = p.n, k = p.k;
    GeneratorSet out;
    out.n = n;
    out.k = k;

    auto hat_of_class = [&](int cls) -> RPoly {
        F16Poly prod = p.class_product(factors, cls);
        if (prod.is_one()) return RPoly::zero(n, k); // empty class
        return rp_lift(hat(prod, n), n, k);
    };

    for (int cls = 1; cls <= 5 * k + 3; ++cls) {
        if (p.class_degree(factors, cls) == 0) continue;
        RPoly hatp = hat_of_class(cls);
        RPoly gen = RPoly::zero(n, k);
        if (cls <= 4 * k) {
            int family = (cls - 1) / k; // 0..3 = v-power
            int i = (cls - 1) % k + 1;  // u-index 1..k
            RPoly mono = RPoly::zero(n, k);
            mono.c[0] = RElem::monomial(k, i - 1, family, F16::one());
            gen = rp_mul(ctx, mono, hatp);
        } else if (cls <= 5 * k - 1) {
            int i = cls - 4 * k; // 1..k-1
            RPoly inner = RPoly::zero(n, k);
            inner.c[0] = RElem::monomial(k, i, 0, F16::one()); // u^i
            for (int m = 1; m <= 3; ++m) {
                RPoly lifted = rp_lift(p.beta(m, i), n, k);
                inner = rp_add(inner, rp_mul(ctx, vmono(ctx, n, k, m), lifted));
            }
            gen = rp_mul(ctx, inner, hatp);
        } else if (cls == 5 * k) {
            RPoly inner = alpha_row(ctx, p, 1, 2, k);
            inner = rp_add(inner, rp_mul(ctx, vmono(ctx, n, k, 1), alpha_row(ctx, p, 2, 1, k)));
            inner = rp_add(inner, rp_mul(ctx, vmono(ctx, n, k, 2), alpha_row(ctx, p, 3, 1, k)));
            inner = rp_add(inner, rp_mul(ctx, vmono(ctx, n, k, 3), alpha_row(ctx, p, 4, 1, k - 1)));
            gen = rp_mul(ctx, inner, hatp);
        } else if (cls == 5 * k + 1) {
            RPoly inner = rp_mul(ctx, vmono(ctx, n, k, 1), alpha_row(ctx, p, 1, 2, k));
            inner = rp_add(inner, rp_mul(ctx, vmono(ctx, n, k, 2), alpha_row(ctx, p, 2, 1, k)));
            inner = rp_add(inner, rp_mul(ctx, vmono(ctx, n, k, 3), alpha_row(ctx, p, 3, 1, k)));
            gen = rp_mul(ctx, inner, hatp);
        } else if (cls == 5 * k + 2) {
            RPoly inner = rp_mul(ctx, vmono(ctx, n, k, 2), alpha_row(ctx, p, 1, 2, k));
            inner = rp_add(inner, rp_mul(ctx, vmono(ctx, n, k, 3), alpha_row(ctx, p, 2, 1, k - 1)));
            gen = rp_mul(ctx, inner, hatp);
        } else { // 5k + 3
            // leading u term is unconditional: at k = 2 the displayed row is
            // empty but the class is the <u^{k-1} v^3> module, so keep u alone.
            RPoly row = RPoly::zero(n, k);
            row.c[0] = RElem::monomial(k, 1, 0, F16::one());
            for (int j = 3; j <= k - 1; ++j) {
                RPoly lifted = rp_lift(p.alpha(1, j), n, k);
                row = rp_add(row, rp_mul_monomial(ctx, lifted, 0, j - 1, 0));
            }
            RPoly inner = rp_mul(ctx, vmono(ctx, n, k, 3), row);
            gen = rp_mul(ctx, inner, hatp);
        }
        if (gen.is_zero())
            throw std::logic_error("class " + std::to_string(cls) +
                                   " produced a zero generator despite being populated");
        out.gens.push_back(std::move(gen));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gray span

std::vector<F16> gray_codeword(const RPoly& p) {
    std::vector<F16> row;
    row.reserve(size_t(4 * p.k * p.n));
    for (int t = 0; t < p.n; ++t) {
        auto img = theta(p.c[size_t(t)]);
        row.insert(row.end(), img.begin(), img.end());
    }
    return row;
}

LinearCodeF16 gray_span(const GeneratorSet& gens) {
    const auto& ctx = RingContext::get(gens.k);
    LinearCodeF16 code;
    code.n = gens.n;
    code.k = gens.k;
    code.length = 4 * gens.k * gens.n;
    F16Mat rows;
    for (const auto& g : gens.gens) {
        for (int t = 0; t < gens.n; ++t)
            for (int i = 0; i < gens.k; ++i)
                for (int j = 0; j < 4; ++j)
                    rows.push_back(gray_codeword(rp_mul_monomial(ctx, g, t, i, j)));
    }
    rref16(rows);
    code.basis = std::move(rows);
    return code;
}

// ---------------------------------------------------------------------------
// Cardinality

long long CardinalitySummary::rprime_exponent() const {
    long long s = 0;
    for (int d : degA) s += d;
    return (5LL * k + 3) * n - s;
}

CardinalitySummary cardinality_xi(const FactorSet& factors, const ConstructionProfile& p) {
    p.validate(factors);
    const int k = p.k;
    auto d = [&](int cls) { return (long long)p.class_degree(factors, cls); };
    CardinalitySummary s;
    s.n = p.n;
    s.k = k;
    long long xi = 0, eta = 0;
    eta += 4LL * k * d(0);
    for (int i = 1; i <= k; ++i) {
        xi += (4LL * k - 4 * (i - 1)) * d(i);
        if (i >= 2) eta += 4LL * (i - 1) * d(i);
        xi += (3LL * k - 3 * (i - 1)) * d(k + i);
        eta += (1LL * k + 3 * (i - 1)) * d(k + i);
        xi += (2LL * k - 2 * (i - 1)) * d(2 * k + i);
        eta += (2LL * k + 2 * (i - 1)) * d(2 * k + i);
        xi += (1LL * k - (i - 1)) * d(3 * k + i);
        eta += (3LL * k + (i - 1)) * d(3 * k + i);
    }
    for (int i = 1; i <= k - 1; ++i) {
        xi += (4LL * k - i) * d(4 * k + i);
        eta += 1LL * i * d(4 * k + i);
    }
    xi += (4LL * k - 1) * d(5 * k);
    eta += 1LL * d(5 * k);
    xi += (3LL * k - 3) * d(5 * k + 1);
    eta += (1LL * k + 3) * d(5 * k + 1);
    xi += (2LL * k - 2) * d(5 * k + 2);
    eta += (2LL * k + 2) * d(5 * k + 2);
    xi += (1LL * k - 1) * d(5 * k + 3);
    eta += (3LL * k + 1) * d(5 * k + 3);
    s.xi = xi;
    s.eta = eta;
    if (s.xi + s.eta != 4LL * k * p.n)
        throw std::logic_error("xi + eta != 4kn; cardinality bookkeeping is broken");
    return s;
}

// The R'-principal-ideal form is computed from the code itself: order the
// u^i v^j slots v-major (matching the A_j indexing), row-reduce the spanning
// family over slot-major coordinates, and read off each slot's leading ideal.
// Every slot ideal comes out principal with a generator dividing x^n - 1,
// which is verified via its degree.
std::vector<int> rprime_slot_degrees(const GeneratorSet& gens) {
    const int n = gens.n, k = gens.k;
    const auto& ctx = RingContext::get(k);
    const int slots = 4 * k;
    F16Mat rows;
    for (const auto& g : gens.gens) {
        for (int t = 0; t < n; ++t) {
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < 4; ++j) {
                    RPoly c = rp_mul_monomial(ctx, g, t, i, j);
                    F16Vec row(size_t(slots * n), F16::zero());
                    for (int xd = 0; xd < n; ++xd)
                        for (int ii = 0; ii < k; ++ii)
                            for (int jj = 0; jj < 4; ++jj)
                                row[size_t((jj * k + ii) * n + xd)] = c.c[size_t(xd)].coeff(ii, jj);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    rref16(rows);
    F16Poly xn1 = F16Poly::xn_minus_1(n);
    std::vector<int> degA(size_t(slots), n);
    auto piv = pivot_columns(rows);
    for (int s = 0; s < slots; ++s) {
        F16Poly ideal_gcd = xn1;
        int pivots_here = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (piv[r] < s * n || piv[r] >= (s + 1) * n) continue;
            ++pivots_here;
            std::vector<F16> c(rows[r].begin() + s * n, rows[r].begin() + (s + 1) * n);
            ideal_gcd = gcd(ideal_gcd, F16Poly{std::move(c)});
        }
        degA[size_t(s)] = ideal_gcd.deg();
        if (ideal_gcd.deg() != n - pivots_here)
            throw std::logic_error("slot leading ideal is not principal of the expected degree");
    }
    return degA;
}

CardinalitySummary to_rprime_form(const FactorSet& factors, const ConstructionProfile& p) {
    CardinalitySummary s = cardinality_xi(factors, p);
    auto slot_deg = rprime_slot_degrees(assemble_generators(factors, p));
    s.degA.assign(size_t(5 * p.k + 3), p.n); // beta/alpha slots stay at <x^n-1>
    for (int sl = 0; sl < 4 * p.k; ++sl) s.degA[size_t(sl)] = slot_deg[size_t(sl)];
    if (s.rprime_exponent() != s.xi)
        throw std::logic_error("R'-form count 16^" + std::to_string(s.rprime_exponent()) +
                               " does not match 16^xi with xi = " + std::to_string(s.xi));
    return s;
}

long long xi_term_of_class(const FactorSet& factors, const ConstructionProfile& p, int cls) {
    const int k = p.k;
    long long d = p.class_degree(factors, cls);
    if (cls <= 0) return 0;
    if (cls <= k) return (4LL * k - 4 * (cls - 1)) * d;
    if (cls <= 2 * k) return (3LL * k - 3 * (cls - k - 1)) * d;
    if (cls <= 3 * k) return (2LL * k - 2 * (cls - 2 * k - 1)) * d;
    if (cls <= 4 * k) return (1LL * k - (cls - 3 * k - 1)) * d;
    if (cls <= 5 * k - 1) return (4LL * k - (cls - 4 * k)) * d;
    if (cls == 5 * k) return (4LL * k - 1) * d;
    if (cls == 5 * k + 1) return (3LL * k - 3) * d;
    if (cls == 5 * k + 2) return (2LL * k - 2) * d;
    return (1LL * k - 1) * d;
}

bool profile_is_normal(const FactorSet& factors, const ConstructionProfile& p) {
    p.validate(factors);
    for (int cls = 1; cls <= 5 * p.k + 3; ++cls) {
        if (p.class_degree(factors, cls) == 0) continue;
        ConstructionProfile single = p;
        for (auto& c : single.class_of)
            if (c != cls) c = 0;
        auto code = gray_span(assemble_generators(factors, single));
        if (code.dim() != xi_term_of_class(factors, p, cls)) return false;
    }
    return true;
}

namespace {

uint64_t sm_next(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

F16Poly random_unit(int n, uint64_t& s) {
    // mostly scalars, occasionally a genuine unit polynomial
    if (sm_next(s) % 10 < 7) return F16Poly::constant(F16::w_pow(long(sm_next(s) % 15)));
    while (true) {
        std::vector<F16> c(size_t(1 + sm_next(s) % size_t(n)), F16::zero());
        for (auto& a : c) a = F16(unsigned(sm_next(s) & 0xF));
        F16Poly f{std::move(c)};
        if (is_unit_mod_xn_minus_1(f, n)) return f;
    }
}

} // namespace

ConstructionProfile random_profile(const FactorSet& factors, int k, uint64_t seed, bool normalize) {
    uint64_t s = seed ^ 0xC0DEC0DE;
    const int maxcls = (k == 1) ? 4 : 5 * k + 3;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        ConstructionProfile p;
        p.n = factors.n;
        p.k = k;
        p.class_of.resize(factors.factors.size());
        for (auto& c : p.class_of) c = int(sm_next(s) % uint64_t(maxcls + 1));
        const int unit_tries = normalize ? 64 : 1;
        for (int ut = 0; ut < unit_tries; ++ut) {
            p.alphas.clear();
            p.betas.clear();
            for (int row = 1; row <= 4; ++row)
                for (int col = 1; col <= k; ++col) {
                    if (row == 1 && (col == 1 || col == 2)) continue;
                    p.alphas[{row, col}] = random_unit(p.n, s);
                }
            for (int m = 1; m <= 3; ++m)
                for (int i = 1; i <= k - 1; ++i) p.betas[{m, i}] = random_unit(p.n, s);
            if (!normalize || profile_is_normal(factors, p)) return p;
        }
        // this class assignment would not normalize; draw a fresh one
    }
    throw std::runtime_error("random_profile: failed to draw a normal profile");
}

// ---------------------------------------------------------------------------
// CRT idempotents

CrtReport crt_decompose(int n) {
    auto factors = factor_xn_minus_1(n);
    CrtReport rep;
    rep.n = n;
    F16Poly xn1 = F16Poly::xn_minus_1(n);
    for (const auto& f : factors.factors) {
        F16Poly h = hat(f, n);
        F16Poly s, t;
        F16Poly g = egcd(h.mod(f), f, s, t);
        if (!g.is_one()) throw std::logic_error("hat not invertible modulo its factor");
        rep.idempotents.push_back((h * s).mod(xn1));
    }
    F16Poly sum = F16Poly::zero();
    for (const auto& e : rep.idempotents) sum = sum + e;
    rep.sum_is_one = sum.is_one();
    rep.pairwise_orthogonal = true;
    for (size_t a = 0; a < rep.idempotents.size(); ++a) {
        for (size_t b = 0; b < rep.idempotents.size(); ++b) {
            F16Poly prod = (rep.idempotents[a] * rep.idempotents[b]).mod(xn1);
            const F16Poly& expect = (a == b) ? rep.idempotents[a] : F16Poly::zero();
            if (prod != expect) rep.pairwise_orthogonal = false;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Submodule sampling oracle (Theorem-2 shape library)

namespace {

uint64_t splitmix(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RElem random_relem(int k, uint64_t& s) {
    RElem r = RElem::zero(k);
    for (auto& c : r.c) c = F16(unsigned(splitmix(s) & 0xF));
    return r;
}

// F2 vectorization of an RElem (coefficient bits in the monomial grid).
void relem_bits(const RElem& r, BitMat& m, int row) {
    for (int t = 0; t < 4 * r.k; ++t) {
        uint8_t b = r.c[size_t(t)].bits();
        for (int l = 0; l < 4; ++l)
            if ((b >> l) & 1) m.set(row, 4 * t + l, true);
    }
}

// Dimension signature of the right module generated by gens: the F2-dims of
// span{g * b * mu} for mu ranging over the u^i v^j monomial grid.
std::vector<int> module_signature(const RingContext& ctx, const std::vector<RElem>& gens) {
    int k = ctx.k();
    std::vector<RElem> elems;
    for (const auto& g : gens)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < 4; ++j)
                for (int l = 0; l < 4; ++l)
                    elems.push_back(ctx.mul(g, RElem::monomial(k, i, j, F16::w_pow(l))));
    std::vector<int> sig;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < 4; ++j) {
            RElem mu = RElem::monomial(k, i, j, F16::one());
            BitMat m(int(elems.size()), 16 * k);
            for (size_t r = 0; r < elems.size(); ++r) relem_bits(ctx.mul(elems[r], mu), m, int(r));
            sig.push_back(m.rank());
        }
    }
    return sig;
}

} // namespace

ClassifyReport submodule_sample_classify(int k, int trials, uint64_t seed) {
    if (k > 2) throw std::invalid_argument("submodule sampling is limited to k <= 2");
    const auto& ctx = RingContext::get(k);
    ClassifyReport rep;
    rep.k = k;
    rep.trials = trials;

    std::set<std::vector<int>> library;
    auto add_form = [&](const std::vector<RElem>& gens) {
        library.insert(module_signature(ctx, gens));
    };

    // {0} and the monomial forms <u^i v^j> (including <1> = R)
    add_form({RElem::zero(k)});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 4; ++j) add_form({RElem::monomial(k, i, j, F16::one())});

    uint64_t s = seed ^ 0xF00D;
    auto unit = [&]() { return F16::w_pow(long(splitmix(s) % 15)); };

    if (k >= 2) {
        const int samples = 60;
        for (int i = 1; i <= k - 1; ++i) {
            for (int t = 0; t < samples; ++t) {
                // <u^i + v b1 + v^2 b2 + v^3 b3>, units b
                RElem g = RElem::monomial(k, i, 0, F16::one());
                for (int m = 1; m <= 3; ++m) g = g + RElem::monomial(k, 0, m, unit());
                add_form({g});
            }
            // <u^i, v, v^2, v^3>
            add_form({RElem::monomial(k, i, 0, F16::one()), RElem::monomial(k, 0, 1, F16::one()),
                      RElem::monomial(k, 0, 2, F16::one()), RElem::monomial(k, 0, 3, F16::one())});
        }
        // alpha-laden forms, one per leading v power; rows follow the
        // classified shapes with unit parameters sampled
        auto urow = [&](int jlo, int jhi, bool lead_one) {
            RElem row = RElem::zero(k);
            for (int j = jlo; j <= jhi; ++j) {
                F16 a = (lead_one && j == jlo) ? F16::one() : unit();
                row = row + RElem::monomial(k, j - 1, 0, a);
            }
            return row;
        };
        for (int t = 0; t < samples; ++t) {
            auto vshift = [&](const RElem& r, int m) {
                return ctx.mul(RElem::monomial(k, 0, m, F16::one()), r);
            };
            // leading u (case 3): u-row from u^1, three full v rows, v^3 row short
            RElem g3 = urow(2, k, true);
            g3 = g3 + vshift(urow(1, k, false), 1);
            g3 = g3 + vshift(urow(1, k, false), 2);
            g3 = g3 + vshift(urow(1, k - 1, false), 3);
            add_form({g3});
            // case 4: v * (u-row) + v^2 row + v^3 short row
            RElem g4 = vshift(urow(2, k, true), 1) + vshift(urow(1, k, false), 2) +
                       vshift(urow(1, k - 1, false), 3);
            add_form({g4});
            // case 5
            RElem g5 = vshift(urow(2, k, true), 2) + vshift(urow(1, k - 1, false), 3);
            add_form({g5});
            // case 6
            RElem g6 = vshift(urow(2, std::max(2, k - 1), true), 3);
            add_form({g6});
        }
    }

    uint64_t gs = seed;
    for (int t = 0; t < trials; ++t) {
        RElem g = random_relem(k, gs);
        auto sig = module_signature(ctx, {g});
        if (library.count(sig)) {
            ++rep.matched;
        } else {
            std::ostringstream os;
            os << "unmatched signature for g = " << relem_str(ctx, g) << " dims:";
            for (int d : sig) os << " " << d;
            rep.unmatched.push_back(os.str());
        }
    }
    return rep;
}

} // namespace cymat
