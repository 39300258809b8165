#include "haff/report.hpp"

#include <sstream>

namespace haff {

namespace {

void fnv_mix(uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
}

}  // namespace

std::string presentation_digest(const CarnotPresentation& pres) {
    uint64_t h = 0xCBF29CE484222325ULL;
    fnv_mix(h, "n=" + std::to_string(pres.n()));
    fnv_mix(h, ";k1=");
    for (int i = 0; i < pres.kernel1().dim(); ++i) fnv_mix(h, vec_to_string(pres.kernel1().basis_vector(i)));
    fnv_mix(h, ";k2=");
    for (int i = 0; i < pres.kernel2().dim(); ++i) fnv_mix(h, vec_to_string(pres.kernel2().basis_vector(i)));
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
    return os.str();
}

AnalysisReport analyze(const CarnotPresentation& pres, const AnalyzeOptions& opt) {
    AnalysisReport rep;
    rep.digest = presentation_digest(pres);
    rep.n = pres.n();
    rep.rank = pres.rank();
    rep.dim_v2 = pres.dim_v2();

    const int lo = pres.n() - pres.rank();
    const std::vector<int> dims = lambda_dims(pres);
    rep.dim_haffine = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        rep.lambda_dims.push_back(LambdaDim{lo + static_cast<int>(i), dims[i]});
        rep.dim_haffine += dims[i];
    }
    rep.dim_affine = 1 + pres.rank() + pres.dim_v2();
    int top_three = 0;
    for (int g = pres.n() - 2; g <= pres.n(); ++g) top_three += dims[g - lo];
    if (top_three != rep.dim_affine) throw std::logic_error("affine dimension cross-check failed");

    const Classification verdict = classify(pres);
    rep.affine = verdict.affine;
    rep.evidence = verdict.evidence;
    if (!rep.affine && pres.rank() >= 3 && dims[pres.rank() - 3] == 0)
        throw std::logic_error("verdict disagrees with the grade n-3 dimension");

    if (opt.with_witness) rep.witness = bilinear_witness(pres);
    if (opt.with_f3) rep.f3_triple = find_f3_subgroup(pres);
    if (opt.with_basis) {
        std::vector<PsiTerm> terms;
        for (const HAffineMap& m : haffine_basis(pres))
            for (const PsiTerm& t : m.terms()) terms.push_back(t);
        rep.basis = std::move(terms);
    }
    return rep;
}

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "group " << r.digest << ": n=" << r.n << " rank=" << r.rank << " dim_v2=" << r.dim_v2 << "\n";
    os << "dim_affine=" << r.dim_affine << " dim_haffine=" << r.dim_haffine << "\n";
    os << "lambda dims:";
    for (const auto& d : r.lambda_dims) os << " k=" << d.k << ":" << d.dim;
    os << "\n";
    os << "verdict: " << (r.affine ? "affine" : "non_affine") << "\n";
    if (r.evidence) os << "evidence: psi[" << (r.n - r.evidence->grade()) << "]{" << r.evidence->to_string() << "}\n";
    if (r.witness) {
        os << "bilinear witness rows:\n";
        for (int i = 0; i < r.witness->rows(); ++i) os << "  " << vec_to_string(r.witness->row(i)) << "\n";
    }
    if (r.f3_triple) {
        os << "rank-3 triple: " << vec_to_string((*r.f3_triple)[0]) << " " << vec_to_string((*r.f3_triple)[1])
           << " " << vec_to_string((*r.f3_triple)[2]) << "\n";
    }
    if (r.basis) {
        os << "basis (" << r.basis->size() << " maps):\n";
        for (const auto& t : *r.basis) os << "  psi[" << t.k << "]{" << t.eta.to_string() << "}\n";
    }
    return os.str();
}

}  // namespace haff
