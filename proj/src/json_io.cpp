#include "haff/json_io.hpp"

namespace haff {

namespace {

using nlohmann::json;

Rational rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        auto q = rat_from_string(j.get<std::string>());
        if (!q) throw std::invalid_argument("bad rational literal: " + j.get<std::string>());
        return *q;
    }
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

RatVec vec_from_json(const json& j, int expected_len, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != expected_len)
        throw std::invalid_argument(std::string(what) + " must be an array of length " +
                                    std::to_string(expected_len));
    RatVec v(expected_len);
    for (int i = 0; i < expected_len; ++i) v[i] = rat_from_json(j[i]);
    return v;
}

json vec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rat_to_string(q));
    return a;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing or non-integer field: ") + key);
    return j.at(key).get<int>();
}

}  // namespace

CarnotPresentation presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("format") || !j.at("format").is_string())
        throw std::invalid_argument("group spec must be an object with a \"format\" field");
    const std::string format = j.at("format").get<std::string>();
    if (format == "structure_constants") {
        const int rank = int_field(j, "rank");
        const int m = int_field(j, "dim_v2");
        StructureSpec spec(rank, m);
        if (j.contains("brackets")) {
            if (!j.at("brackets").is_array()) throw std::invalid_argument("\"brackets\" must be an array");
            for (const auto& b : j.at("brackets")) {
                const int i = int_field(b, "i");
                const int jj = int_field(b, "j");
                if (!b.contains("z")) throw std::invalid_argument("bracket entry missing \"z\"");
                spec.set_bracket(i, jj, vec_from_json(b.at("z"), m, "bracket value"));
            }
        }
        return CarnotPresentation::lift_to_free(spec);
    }
    if (format == "free_quotient") {
        const int n = int_field(j, "n");
        if (n < kMinDim || n > kMaxDim) throw UnsupportedDimension("free rank must be in [2, 16]");
        const int c2 = n * (n - 1) / 2;
        std::vector<RatVec> k1, k2;
        if (j.contains("kernel1")) {
            for (const auto& row : j.at("kernel1")) k1.push_back(vec_from_json(row, n, "kernel1 vector"));
        }
        if (j.contains("kernel2")) {
            for (const auto& row : j.at("kernel2")) k2.push_back(vec_from_json(row, c2, "kernel2 vector"));
        }
        return CarnotPresentation::from_kernels(n, Subspace::span(n, k1), Subspace::span(c2, k2));
    }
    throw std::invalid_argument("unknown group spec format: " + format);
}

json spec_to_json(const StructureSpec& s) {
    json j;
    j["format"] = "structure_constants";
    j["rank"] = s.rank();
    j["dim_v2"] = s.dim_v2();
    json brackets = json::array();
    for (const auto& [ij, z] : s.table()) {
        json b;
        b["i"] = ij.first;
        b["j"] = ij.second;
        b["z"] = vec_to_json(z);
        brackets.push_back(b);
    }
    j["brackets"] = brackets;
    return j;
}

json free_quotient_to_json(const CarnotPresentation& pres) {
    json j;
    j["format"] = "free_quotient";
    j["n"] = pres.n();
    json k1 = json::array();
    for (int i = 0; i < pres.kernel1().dim(); ++i) k1.push_back(vec_to_json(pres.kernel1().basis_vector(i)));
    json k2 = json::array();
    for (int i = 0; i < pres.kernel2().dim(); ++i) k2.push_back(vec_to_json(pres.kernel2().basis_vector(i)));
    j["kernel1"] = k1;
    j["kernel2"] = k2;
    return j;
}

json report_to_json(const AnalysisReport& r) {
    json j;
    j["digest"] = r.digest;
    j["n"] = r.n;
    j["rank"] = r.rank;
    j["dim_v2"] = r.dim_v2;
    j["dim_affine"] = r.dim_affine;
    j["dim_haffine"] = r.dim_haffine;
    json dims = json::array();
    for (const auto& d : r.lambda_dims) dims.push_back(json{{"k", d.k}, {"dim", d.dim}});
    j["lambda_dims"] = dims;
    j["verdict"] = r.affine ? "affine" : "non_affine";
    if (r.evidence)
        j["evidence"] = json{{"k", r.n - r.evidence->grade()}, {"eta_coeffs", vec_to_json(r.evidence->coords())}};
    if (r.witness) {
        json rows = json::array();
        for (int i = 0; i < r.witness->rows(); ++i) rows.push_back(vec_to_json(r.witness->row(i)));
        j["witness"] = rows;
    }
    if (r.f3_triple) {
        json t = json::array();
        for (const auto& x : *r.f3_triple) t.push_back(vec_to_json(x));
        j["f3_triple"] = t;
    }
    if (r.basis) {
        json b = json::array();
        for (const auto& term : *r.basis)
            b.push_back(json{{"k", term.k}, {"eta_coeffs", vec_to_json(term.eta.coords())}});
        j["basis"] = b;
    }
    return j;
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.digest = j.at("digest").get<std::string>();
    r.n = int_field(j, "n");
    r.rank = int_field(j, "rank");
    r.dim_v2 = int_field(j, "dim_v2");
    r.dim_affine = int_field(j, "dim_affine");
    r.dim_haffine = int_field(j, "dim_haffine");
    for (const auto& d : j.at("lambda_dims")) r.lambda_dims.push_back(LambdaDim{int_field(d, "k"), int_field(d, "dim")});
    r.affine = j.at("verdict").get<std::string>() == "affine";
    if (j.contains("evidence")) {
        const int k = int_field(j.at("evidence"), "k");
        const auto& coeffs = j.at("evidence").at("eta_coeffs");
        const int grade = r.n - k;
        r.evidence = KForm::from_coords(
            r.n, grade, vec_from_json(coeffs, static_cast<int>(lex_blades(r.n, grade).size()), "eta_coeffs"));
    }
    if (j.contains("witness")) {
        RatMatrix w(r.rank, r.dim_v2);
        const auto& rows = j.at("witness");
        for (int i = 0; i < r.rank; ++i) {
            const RatVec row = vec_from_json(rows.at(i), r.dim_v2, "witness row");
            for (int t = 0; t < r.dim_v2; ++t) w.at(i, t) = row[t];
        }
        r.witness = w;
    }
    if (j.contains("f3_triple")) {
        std::array<RatVec, 3> t;
        for (int i = 0; i < 3; ++i) t[i] = vec_from_json(j.at("f3_triple").at(i), r.rank, "triple entry");
        r.f3_triple = t;
    }
    if (j.contains("basis")) {
        std::vector<PsiTerm> terms;
        for (const auto& b : j.at("basis")) {
            const int k = int_field(b, "k");
            const int grade = r.n - k;
            terms.emplace_back(k, KForm::from_coords(r.n, grade,
                                                     vec_from_json(b.at("eta_coeffs"),
                                                                   static_cast<int>(lex_blades(r.n, grade).size()),
                                                                   "eta_coeffs")));
        }
        r.basis = std::move(terms);
    }
    return r;
}

}  // namespace haff
