#include "cymat/catalog.hpp"

#include <chrono>
#include <stdexcept>

#include "cymat/genexpr.hpp"
#include "json.hpp"

namespace cymat {

namespace {

// The bundled tables, kept as data so that a discrepancy between the builder
// and the published parameters surfaces as a reviewable diff.
const char* kCatalogJson = R"json([
{"example":1,"row":1,"n":5,"k":1,"gens":["(w^3v^3 + w^5v^2 + w^4v + w^13 + w)f_2 + wf_1"],"params":[20,14,5],"dmds":7},
{"example":1,"row":2,"n":5,"k":1,"gens":["(w v^3 + w^2v^2 + w^5)f_2","(w^2v^2 + w v + w^5)f_1f_3f_4f_5"],"params":[20,16,3],"dmds":5},
{"example":1,"row":3,"n":5,"k":1,"gens":["(w v^3 + w^2v^2 + w^5)f_2","(w^2v^3 + w v + w^4)f_1f_3f_4f_5"],"params":[20,15,4],"dmds":6},
{"example":1,"row":4,"n":5,"k":1,"gens":["(w v + w^2v^2 + vw^5)f_2","(w^2v^2 + vw^7)f_3f_4f_5"],"params":[20,19,2],"dmds":2},
{"example":2,"row":1,"n":5,"k":3,"gens":["(w^5u^2v^3 + vw^6)f_2","(w^5uv^3 + v^3w^6)f_3f_4f_5","(w^5uv + uv^3w^6 + v^3w^9)f_1f_2f_3f_5"],"params":[60,54,4],"dmds":7},
{"example":2,"row":2,"n":5,"k":3,"gens":["(w^5u^2v^3 + vw^6)f_2","(w^7u^2v^3 + w^3v^2)f_3f_4f_5","(wu^2v^3 + w^2u^2)f_2f_3f_1f_5 + (wu + w^5 + wv + wv^3 + wv^2)f_4f_3f_1f_5"],"params":[60,56,3],"dmds":5},
{"example":2,"row":3,"n":5,"k":3,"gens":["(w^5u^2v^3 + w^5u^2v^2)f_2","(w^5u^2v^3 + w^7u^2)f_3f_4f_5","(w^5u^2v^3 + w^5vu + w^5v^3)f_2f_3f_5f_4"],"params":[60,57,2],"dmds":4},
{"example":3,"row":1,"n":3,"k":4,"gens":["(wu^3v^3 + w^3u^3v + w^5u^2v^3 + w^7u^2v + w^11uv^3 + w^13uv + w^3v^3 + w^7v)f_2 + (wu^3v^3 + w^5u^3v + w^6u^2v^3 + w^7u^2v + w^10uv^3 + w^13uv + w^3v^3 + w^7v + w^13)f_1","(wu^2v^2 + w^4u^3 + w^6u^2v^2 + w^8u^2 + w^10uv^2 + w^14u + w^2v^2 + w^4)f_3"],"params":[48,41,5],"dmds":8},
{"example":3,"row":2,"n":3,"k":4,"gens":["(u^3v^3 + vw)f_2","(w u^3v^3 + v^2 + w^2)f_3","(u^3v^2w^3 + u^2v^2w^3 + u^2w^4 + w^4)f_1f_3"],"params":[48,43,3],"dmds":6},
{"example":3,"row":3,"n":3,"k":4,"gens":["(u^3v^3 + vw)f_2","(w u^3v^3 + v^2 + w^2)f_3","(w^9u^2v^3 + w^9uv^3 + w^8u^2 + w^8u^3 + w^3vu^2 + w^7vu^3 + w^7v^2u^2 + w^3v^2u^3)f_1f_2"],"params":[48,42,4],"dmds":7},
{"example":3,"row":4,"n":3,"k":4,"gens":["(u^3v^2w + u^3vw^3)f_2","(u^3v^2w^2 + u^3vw^7)f_3","(u^3v^2w^13 + u^3vw^5 + w^7)f_2f_1"],"params":[48,46,2],"dmds":3},
{"example":4,"row":1,"n":7,"k":1,"gens":["(w v^3 + w^2v^2 + w^3v + w^7)f_1","(w^11v^3 + w^13v^2 + w^15v)f_3"],"params":[28,27,2],"ref":"[28,25,2]"},
{"example":4,"row":2,"n":7,"k":1,"gens":["(w v^3 + w^2v^2 + w^3v)f_2","(w^3v^3 + w^9v)f_1f_3"],"params":[28,22,4],"ref":"[28,14,3]"},
{"example":4,"row":3,"n":7,"k":1,"gens":["(w v^3 + w^2v^2 + w^3v)f_2","(w^3v^3 + w^9v)f_1f_3","(w^5v^3 + w v^2 + w^11v)f_2f_3"],"params":[28,23,3],"ref":"[28,16,3]"},
{"example":4,"row":4,"n":3,"k":1,"gens":["(w v^3 + w^2v^2 + w^5)f_2","(w^3v^3 + w)f_1f_3"],"params":[12,7,4],"ref":"[12,6,3]"},
{"example":4,"row":5,"n":3,"k":1,"gens":["(w v^3 + w)f_2","(w^3v + w^3v^2)f_1f_3"],"params":[12,8,3],"ref":"[12,8,2]"}
])json";

} // namespace

std::vector<CatalogRow> load_catalog(const std::string& json_override) {
    nlohmann::json j =
        nlohmann::json::parse(json_override.empty() ? std::string(kCatalogJson) : json_override);
    std::vector<CatalogRow> rows;
    for (auto& e : j) {
        CatalogRow r;
        r.example = e.at("example").get<int>();
        r.row = e.at("row").get<int>();
        r.n = e.at("n").get<int>();
        r.k = e.at("k").get<int>();
        for (auto& g : e.at("gens")) r.generators.push_back(g.get<std::string>());
        auto params = e.at("params");
        r.exp_length = params.at(0).get<int>();
        r.exp_dim = params.at(1).get<int>();
        r.exp_d = params.at(2).get<int>();
        r.exp_dmds = e.value("dmds", 0);
        r.reference = e.value("ref", std::string());
        rows.push_back(std::move(r));
    }
    return rows;
}

ReproduceReport run_reproduce(int example, const std::string& catalog_override) {
    ReproduceReport rep;
    rep.all_match = true;
    rep.all_certified = true;
    for (const auto& row : load_catalog(catalog_override)) {
        if (example != 0 && row.example != example) continue;
        auto t0 = std::chrono::steady_clock::now();
        auto factors = factor_xn_minus_1(row.n);
        GeneratorSet gens;
        gens.n = row.n;
        gens.k = row.k;
        for (const auto& g : row.generators) gens.gens.push_back(parse_genexpr(g, factors, row.k));
        auto code = gray_span(gens);
        ReproduceRow out;
        out.row = row;
        out.got_length = code.length;
        out.got_dim = code.dim();
        out.dist = min_distance_certified(code, row.exp_d);
        out.got_dmds = (out.dist.d > 0) ? mds_gap(code.length, code.dim(), out.dist.d) : 0;
        out.match = (out.got_length == row.exp_length && out.got_dim == row.exp_dim &&
                     out.dist.d == row.exp_d);
        out.certified = out.dist.exact();
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.all_match = rep.all_match && out.match;
        rep.all_certified = rep.all_certified && out.certified;
        rep.rows.push_back(std::move(out));
    }
    if (rep.rows.empty()) throw std::invalid_argument("reproduce: no rows for that example id");
    return rep;
}

std::string reproduce_json(const ReproduceReport& rep) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        nlohmann::json e;
        e["example"] = r.row.example;
        e["row"] = r.row.row;
        e["n"] = r.row.n;
        e["k"] = r.row.k;
        e["expected"] = {r.row.exp_length, r.row.exp_dim, r.row.exp_d};
        e["got"] = {r.got_length, r.got_dim, r.dist.d};
        e["d_mds_gap"] = r.got_dmds;
        e["verdict"] = r.match ? "MATCH" : "MISMATCH";
        e["certificate"] = certificate_name(r.dist.certificate);
        e["distance"] = nlohmann::json::parse(distance_json(r.dist));
        if (!r.row.reference.empty()) e["reference"] = r.row.reference;
        e["seconds"] = r.seconds;
        j.push_back(std::move(e));
    }
    nlohmann::json top;
    top["rows"] = j;
    top["all_match"] = rep.all_match;
    top["all_certified"] = rep.all_certified;
    return top.dump(2);
}

} // namespace cymat
