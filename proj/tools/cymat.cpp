#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cymat/catalog.hpp"
#include "cymat/dualbuild.hpp"
#include "cymat/genexpr.hpp"
#include "cymat/metrics.hpp"
#include "cymat/verify.hpp"

using namespace cymat;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct BuildInputs {
    int n = 0;
    int k = 1;
    std::vector<std::string> exprs;
    std::string profile_path;
    int hint = 0;
    uint64_t seed = 0x5eed;
    bool json = false;
    bool tsv = false;
};

struct BuiltCode {
    FactorSet factors;
    GeneratorSet gens;
    LinearCodeF16 code;
    std::optional<ConstructionProfile> profile;
};

BuiltCode build_code(const BuildInputs& in) {
    BuiltCode out;
    if (!in.profile_path.empty()) {
        auto p = profile_from_json(read_file(in.profile_path));
        out.factors = factor_xn_minus_1(p.n, in.seed);
        out.profile = p;
        out.gens = assemble_generators(out.factors, p);
    } else {
        if (in.n <= 0) throw CLI::ValidationError("--n is required with --gen");
        out.factors = factor_xn_minus_1(in.n, in.seed);
        out.gens.n = in.n;
        out.gens.k = in.k;
        for (const auto& e : in.exprs)
            out.gens.gens.push_back(parse_genexpr(e, out.factors, in.k));
    }
    out.code = gray_span(out.gens);
    return out;
}

void add_build_flags(CLI::App* cmd, BuildInputs& in, bool with_hint = true) {
    cmd->add_option("--n", in.n, "code length n (odd)");
    cmd->add_option("--k", in.k, "nilpotency index of u");
    cmd->add_option("--gen", in.exprs, "generator expression (repeatable)");
    cmd->add_option("--profile", in.profile_path, "construction profile JSON file");
    if (with_hint) cmd->add_option("--hint", in.hint, "distance hint for the upper-bound search");
    cmd->add_option("--seed", in.seed, "seed for randomized subroutines");
    cmd->add_flag("--json", in.json, "emit JSON");
    cmd->add_flag("--tsv", in.tsv, "emit tab-separated values");
}

int cmd_factor(int n, bool json) {
    auto fs = factor_xn_minus_1(n);
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        for (size_t i = 0; i < fs.factors.size(); ++i)
            j["factors"].push_back(fs.factors[i].str());
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < fs.factors.size(); ++i)
            std::cout << "f" << (i + 1) << " = " << fs.factors[i].str() << "\n";
    }
    return 0;
}

int cmd_build(const BuildInputs& in, bool distance_only) {
    auto t0 = std::chrono::steady_clock::now();
    auto built = build_code(in);
    auto dist = min_distance_certified(built.code, in.hint);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int gap = dist.d > 0 ? mds_gap(built.code.length, built.code.dim(), dist.d) : 0;

    if (in.json) {
        nlohmann::json j;
        j["n"] = built.gens.n;
        j["k"] = built.gens.k;
        j["length"] = built.code.length;
        j["dim"] = built.code.dim();
        j["distance"] = nlohmann::json::parse(distance_json(dist));
        j["d_mds_gap"] = gap;
        if (built.profile) {
            auto card = cardinality_xi(built.factors, *built.profile);
            j["xi"] = card.xi;
            j["eta"] = card.eta;
        }
        j["seconds"] = secs;
        std::cout << j.dump(2) << "\n";
    } else if (in.tsv) {
        std::cout << built.code.length << "\t" << built.code.dim() << "\t" << dist.d << "\t" << gap
                  << "\t" << certificate_name(dist.certificate) << "\n";
    } else {
        const auto& ctx = RingContext::get(built.gens.k);
        if (!distance_only) {
            std::cout << "factors: " << built.factors.str() << "\n";
            for (size_t i = 0; i < built.gens.gens.size(); ++i)
                std::cout << "g" << (i + 1) << " = " << rp_str(ctx, built.gens.gens[i]) << "\n";
        }
        std::cout << "[" << built.code.length << ", " << built.code.dim() << ", "
                  << (dist.d < 0 ? std::string("inf") : std::to_string(dist.d)) << "]"
                  << "  d_MDS gap " << gap << "  certificate " << certificate_name(dist.certificate)
                  << "\n";
        if (built.profile) {
            auto card = cardinality_xi(built.factors, *built.profile);
            std::cout << "xi = " << card.xi << ", eta = " << card.eta << "\n";
        }
        std::cout << "time: " << secs << " s\n";
    }
    return dist.exact() ? 0 : 1;
}

int cmd_dual(const BuildInputs& in, bool hermitian, const std::string& conj_mode_name_in) {
    ConjMode mode = (conj_mode_name_in == "power") ? ConjMode::RingPower : ConjMode::CoeffWise;
    DualFlavor flavor = hermitian ? DualFlavor::Hermitian : DualFlavor::Euclidean;
    nlohmann::json j;
    int exit_code = 0;

    if (!in.profile_path.empty()) {
        auto p = profile_from_json(read_file(in.profile_path));
        auto fs = factor_xn_minus_1(p.n, in.seed);
        auto rep = dual_cardinality_check(fs, p, flavor, mode);
        auto dual = (flavor == DualFlavor::Euclidean) ? euclidean_dual_generators(fs, p)
                                                      : hermitian_dual_generators(fs, p);
        const auto& ctx = RingContext::get(p.k);
        j["flavor"] = dual_flavor_name(flavor);
        j["conj_mode"] = conj_mode_name(mode);
        j["xi"] = rep.xi;
        j["eta"] = rep.eta;
        j["dims"] = {rep.primal_dim, rep.dual_dim};
        j["dims_complementary"] = rep.dims_complementary;
        j["dual_dim_matches_eta"] = rep.dual_dim_matches_eta;
        j["image_orthogonal"] = rep.image_orthogonal;
        j["ring_orthogonal"] = rep.ortho.orthogonal;
        j["violations"] = nlohmann::json::array();
        if (!rep.ortho.orthogonal) j["violations"].push_back(rep.ortho.violation);
        for (const auto& g : dual.gens) j["dual_generators"].push_back(rp_str(ctx, g));
        bool ok = rep.dims_complementary && rep.dual_dim_matches_eta && rep.ortho.orthogonal;
        exit_code = ok ? 0 : 1;
        if (!in.json) {
            std::cout << "dual (" << dual_flavor_name(flavor) << ", conj " << conj_mode_name(mode)
                      << ") of profile " << in.profile_path << "\n";
            for (const auto& g : dual.gens) std::cout << "  " << rp_str(ctx, g) << "\n";
            std::cout << "dims " << rep.primal_dim << " + " << rep.dual_dim << " = "
                      << rep.primal_dim + rep.dual_dim << " (xi " << rep.xi << ", eta " << rep.eta
                      << ")\n"
                      << "image-level orthogonal: " << (rep.image_orthogonal ? "yes" : "no") << "\n"
                      << "ring-valued orthogonal: " << (rep.ortho.orthogonal ? "yes" : "no");
            if (!rep.ortho.orthogonal) std::cout << "  [witness: " << rep.ortho.violation << "]";
            std::cout << "\n";
            return exit_code;
        }
    } else {
        // expression-built code: only the Gray-image-level dual is defined
        auto built = build_code(in);
        auto h = nullspace16(built.code.basis, built.code.length);
        F16Mat hr = h;
        int ddim = rref16(hr);
        j["flavor"] = dual_flavor_name(flavor);
        j["caveat"] = "image-level nullspace dual; expression-built codes carry no profile";
        j["dims"] = {built.code.dim(), ddim};
        exit_code = 0;
        if (!in.json) {
            std::cout << "image-level dual: dims " << built.code.dim() << " + " << ddim << " = "
                      << built.code.dim() + ddim << " of " << built.code.length << "\n"
                      << "caveat: expression-built code, nullspace dual over GF(16)\n";
            return exit_code;
        }
    }
    std::cout << j.dump(2) << "\n";
    return exit_code;
}

int cmd_reproduce(int example, bool json, bool tsv, const std::string& catalog_path) {
    std::string override_json;
    if (!catalog_path.empty()) override_json = read_file(catalog_path);
    auto rep = run_reproduce(example, override_json);
    if (json) {
        std::cout << reproduce_json(rep) << "\n";
    } else {
        for (const auto& r : rep.rows) {
            std::ostringstream exp, got;
            exp << "[" << r.row.exp_length << "," << r.row.exp_dim << "," << r.row.exp_d << "]";
            got << "[" << r.got_length << "," << r.got_dim << "," << r.dist.d << "]";
            if (tsv) {
                std::cout << r.row.example << "\t" << r.row.row << "\t" << exp.str() << "\t"
                          << got.str() << "\t" << (r.match ? "MATCH" : "MISMATCH") << "\t"
                          << certificate_name(r.dist.certificate) << "\n";
            } else {
                std::cout << "example " << r.row.example << " row " << r.row.row << ": expected "
                          << exp.str() << " got " << got.str() << "  "
                          << (r.match ? "MATCH" : "MISMATCH") << " (certificate "
                          << certificate_name(r.dist.certificate) << ", d_MDS gap " << r.got_dmds
                          << ")";
                if (!r.row.reference.empty())
                    std::cout << "  [reference code " << r.row.reference << "]";
                std::cout << "\n";
            }
        }
        if (!tsv)
            std::cout << (rep.all_match ? "all rows match"
                                        : "MISMATCHES present (all distances certified: " +
                                              std::string(rep.all_certified ? "yes" : "no") + ")")
                      << "\n";
    }
    return rep.all_match ? 0 : 1;
}

int cmd_verify(const std::string& suite, uint64_t seed, bool json) {
    std::vector<SuiteResult> results;
    if (suite == "core" || suite == "all") results.push_back(run_core_suite(seed));
    if (suite == "iso" || suite == "all") results.push_back(run_iso_suite(seed));
    if (suite == "duality" || suite == "all") results.push_back(run_duality_suite(seed));
    if (results.empty()) throw CLI::ValidationError("unknown suite: " + suite);
    bool all = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        j.push_back(nlohmann::json::parse(r.json));
        if (!json)
            std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
    }
    if (json) std::cout << j.dump(2) << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for cyclic codes over M4(F2[u]/<u^k>) and their GF(16) Gray images"};
    app.require_subcommand(1);

    int factor_n = 0;
    bool factor_json = false;
    auto* factor = app.add_subcommand("factor", "factor x^n - 1 over GF(16)");
    factor->add_option("--n", factor_n, "odd length")->required();
    factor->add_flag("--json", factor_json, "emit JSON");

    BuildInputs build_in;
    auto* build = app.add_subcommand("build", "build a code and certify its parameters");
    add_build_flags(build, build_in);

    BuildInputs mind_in;
    auto* mindist = app.add_subcommand("mindist", "certified minimum distance only");
    add_build_flags(mindist, mind_in);

    BuildInputs dual_in;
    bool hermitian = false;
    std::string conj_mode = "coeff";
    auto* dual = app.add_subcommand("dual", "dual generators, orthogonality and cardinality");
    add_build_flags(dual, dual_in, false);
    dual->add_flag("--hermitian", hermitian, "Hermitian dual instead of Euclidean");
    dual->add_option("--conj-mode", conj_mode, "conjugation mode: power|coeff")
        ->check(CLI::IsMember({"power", "coeff"}));

    int example = 0;
    bool rep_json = false, rep_tsv = false;
    std::string catalog_path;
    auto* reproduce = app.add_subcommand("reproduce", "rebuild the bundled example tables");
    reproduce->add_option("--example", example, "example id 1..4 (default: all)");
    reproduce->add_flag("--json", rep_json, "emit JSON");
    reproduce->add_flag("--tsv", rep_tsv, "emit TSV");
    reproduce->add_option("--catalog", catalog_path, "external catalog JSON");

    std::string suite = "all";
    uint64_t verify_seed = 0x5eed;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", suite, "core|iso|duality|all");
    verify->add_option("--seed", verify_seed, "suite seed");
    verify->add_flag("--json", verify_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*factor) return cmd_factor(factor_n, factor_json);
        if (*build) return cmd_build(build_in, false);
        if (*mindist) return cmd_build(mind_in, true);
        if (*dual) return cmd_dual(dual_in, hermitian, conj_mode);
        if (*reproduce) return cmd_reproduce(example, rep_json, rep_tsv, catalog_path);
        if (*verify) return cmd_verify(suite, verify_seed, verify_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const GenExprError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
