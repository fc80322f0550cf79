#include "ivpoly/json_io.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ivpoly::io {

json int_to_json(const Int& v) { return v.str(); }

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw std::invalid_argument("expected integer (as decimal string)");
}

json zpoly_to_json(const ZPoly& g) {
    json arr = json::array();
    if (g.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const Int& c : g.coeffs()) arr.push_back(int_to_json(c));
    return arr;
}

ZPoly zpoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected coefficient array");
    std::vector<Int> coeffs;
    for (const json& c : j) coeffs.push_back(int_from_json(c));
    return ZPoly(std::move(coeffs));
}

json rational_poly_to_json(const RationalPoly& f) {
    return json{{"num", zpoly_to_json(f.num())}, {"den", int_to_json(f.den())}};
}

RationalPoly rational_poly_from_json(const json& j) {
    return RationalPoly(zpoly_from_json(j.at("num")), int_from_json(j.at("den")));
}

namespace {

json factors_to_json(const std::vector<PrimePower>& factors) {
    json arr = json::array();
    for (const PrimePower& pp : factors) arr.push_back({int_to_json(pp.q), pp.e});
    return arr;
}

std::vector<PrimePower> factors_from_json(const json& j) {
    std::vector<PrimePower> out;
    for (const json& e : j) out.push_back({int_from_json(e.at(0)), e.at(1).get<int>()});
    return out;
}

json int_list_to_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

std::vector<Int> int_list_from_json(const json& j) {
    std::vector<Int> out;
    for (const json& e : j) out.push_back(int_from_json(e));
    return out;
}

}  // namespace

json design_to_json(const ResidueDesign& d) {
    json r = json::object();
    for (const auto& [key, value] : d.R) {
        std::string k = std::to_string(key.k) + "," + std::to_string(key.i) + "," +
                        std::to_string(key.h) + "," + std::to_string(key.j);
        r[k] = int_to_json(value);
    }
    return json{{"p", int_to_json(d.params.p)},
                {"c", int_to_json(d.params.c)},
                {"factors", factors_to_json(d.params.extra_factors)},
                {"N", int_to_json(d.N)},
                {"tau", int_to_json(d.params.tau)},
                {"sigma", int_to_json(d.params.sigma)},
                {"S", int_list_to_json(d.S)},
                {"R", r},
                {"avoided_primes", int_list_to_json(d.avoided_primes)}};
}

ResidueDesign design_from_json(const json& j) {
    std::map<RKey, Int> r;
    std::map<int, int> block_sizes;  // k -> max i seen (rows and columns)
    for (const auto& [key_str, value] : j.at("R").items()) {
        RKey key{};
        std::istringstream in(key_str);
        char comma;
        if (!(in >> key.k >> comma >> key.i >> comma >> key.h >> comma >> key.j))
            throw std::invalid_argument("bad R key: " + key_str);
        r[key] = int_from_json(value);
        block_sizes[key.k] = std::max(block_sizes[key.k], key.i);
        block_sizes[key.h] = std::max(block_sizes[key.h], key.j);
    }
    if (block_sizes.empty()) throw std::invalid_argument("design without R entries");
    int n = block_sizes.rbegin()->first;
    std::vector<int> ms;
    for (int k = 1; k <= n; ++k) {
        auto it = block_sizes.find(k);
        if (it == block_sizes.end()) throw std::invalid_argument("design R keys skip a block");
        ms.push_back(it->second);
    }

    DesignParams params;
    params.p = int_from_json(j.at("p"));
    params.c = int_from_json(j.at("c"));
    params.extra_factors = factors_from_json(j.at("factors"));
    params.tau = int_from_json(j.at("tau"));
    params.sigma = int_from_json(j.at("sigma"));

    ResidueDesign d{LengthSpec(std::move(ms)), std::move(params), int_from_json(j.at("N")),
                    int_list_from_json(j.at("S")), std::move(r),
                    int_list_from_json(j.at("avoided_primes"))};
    return d;
}

json lift_to_json(const LiftCertificate& cert) {
    json profile = json::array();
    for (const auto& [q, e] : cert.profile) profile.push_back({int_to_json(q), e});
    json originals = json::array(), lifted = json::array(), offsets = json::array();
    for (const ZPoly& f : cert.originals) originals.push_back(zpoly_to_json(f));
    for (const ZPoly& f : cert.lifted) lifted.push_back(zpoly_to_json(f));
    for (const auto& row : cert.offsets) offsets.push_back(int_list_to_json(row));
    return json{{"auxQ", int_to_json(cert.aux_q)},
                {"modulusM", int_to_json(cert.modulus_m)},
                {"profile", profile},
                {"originals", originals},
                {"lifted", lifted},
                {"offsets", offsets}};
}

LiftCertificate lift_from_json(const json& j) {
    LiftCertificate cert;
    cert.aux_q = int_from_json(j.at("auxQ"));
    cert.modulus_m = int_from_json(j.at("modulusM"));
    for (const json& e : j.at("profile"))
        cert.profile[int_from_json(e.at(0))] = e.at(1).get<int>();
    for (const json& e : j.at("originals")) cert.originals.push_back(zpoly_from_json(e));
    for (const json& e : j.at("lifted")) cert.lifted.push_back(zpoly_from_json(e));
    for (const json& e : j.at("offsets")) cert.offsets.push_back(int_list_from_json(e));
    return cert;
}

json factorization_to_json(const Factorization& f) {
    json blocks = json::array();
    for (const Factorization::Block& b : f.blocks) {
        json indices = json::array();
        for (int i : b.indices) indices.push_back(i);
        blocks.push_back({{"den", int_to_json(b.den)}, {"indices", indices}});
    }
    return json{{"blocks", blocks}};
}

Factorization factorization_from_json(const json& j) {
    Factorization f;
    for (const json& b : j.at("blocks")) {
        Factorization::Block blk;
        blk.den = int_from_json(b.at("den"));
        for (const json& i : b.at("indices")) blk.indices.push_back(i.get<int>());
        f.blocks.push_back(std::move(blk));
    }
    return f;
}

json artifact_envelope(json body, const std::string& kind) {
    body["kind"] = kind;
    body["version"] = 1;
    auto now = std::chrono::system_clock::now();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    body["generated_at"] = std::to_string(secs);
    return body;
}

json prescribed_to_json(const PrescribedLengthsArtifact& art) {
    json j;
    j["spec"] = art.spec.ms;
    j["design"] = art.design ? design_to_json(*art.design) : json(nullptr);
    j["lift"] = art.lift ? lift_to_json(*art.lift) : json(nullptr);
    j["H"] = rational_poly_to_json(art.H);
    json facts = json::array();
    for (const Factorization& f : art.factorizations) facts.push_back(factorization_to_json(f));
    j["factorizations"] = facts;
    j["lengths"] = art.lengths;
    return artifact_envelope(std::move(j), "prescribed");
}

PrescribedLengthsArtifact prescribed_from_json(const json& j) {
    if (j.value("kind", "") != "prescribed")
        throw std::invalid_argument("artifact kind is not 'prescribed'");
    PrescribedLengthsArtifact art{LengthSpec(j.at("spec").get<std::vector<int>>()), std::nullopt,
                                  std::nullopt, RationalPoly(), {}, {}};
    if (!j.at("design").is_null()) art.design = design_from_json(j.at("design"));
    if (!j.at("lift").is_null()) art.lift = lift_from_json(j.at("lift"));
    art.H = rational_poly_from_json(j.at("H"));
    for (const json& f : j.at("factorizations"))
        art.factorizations.push_back(factorization_from_json(f));
    art.lengths = j.at("lengths").get<std::vector<int>>();
    return art;
}

json transfer_to_json(const TransferArtifact& art) {
    json j;
    j["n"] = art.n;
    j["primes"] = int_list_to_json(art.primes);
    j["factors"] = factors_to_json(art.extra_factors);
    j["p2"] = int_list_to_json(art.p2);
    j["c"] = int_to_json(art.c);
    j["N"] = int_to_json(art.N);
    j["R"] = int_list_to_json(art.R);
    j["a"] = int_list_to_json(art.a);
    j["lift"] = lift_to_json(art.lift);
    j["H"] = rational_poly_to_json(art.H);
    j["G"] = rational_poly_to_json(art.G);
    return artifact_envelope(std::move(j), "transfer");
}

TransferArtifact transfer_from_json(const json& j) {
    if (j.value("kind", "") != "transfer")
        throw std::invalid_argument("artifact kind is not 'transfer'");
    TransferArtifact art;
    art.n = j.at("n").get<int>();
    art.primes = int_list_from_json(j.at("primes"));
    art.extra_factors = factors_from_json(j.at("factors"));
    art.p2 = int_list_from_json(j.at("p2"));
    art.c = int_from_json(j.at("c"));
    art.N = int_from_json(j.at("N"));
    art.R = int_list_from_json(j.at("R"));
    art.a = int_list_from_json(j.at("a"));
    art.lift = lift_from_json(j.at("lift"));
    art.H = rational_poly_from_json(j.at("H"));
    art.G = rational_poly_from_json(j.at("G"));
    return art;
}

}  // namespace ivpoly::io
