#include "haff/gallery.hpp"

#include <algorithm>
#include <sstream>

#include "haff/report.hpp"
#include "haff/rng.hpp"

namespace haff {

namespace {

CarnotPresentation make_ex61() {
    // quotient of the free rank-4 group by the line through dx_1^dx_2 + dx_3^dx_4
    RatVec eta(6, Rational(0));
    eta[0] = 1;  // (1,2)
    eta[5] = 1;  // (3,4)
    return CarnotPresentation::free_group(4).quotient(Subspace::zero(4), Subspace::span(6, {eta}));
}

CarnotPresentation make_ex62() {
    // quotient of the free rank-5 group by the full annihilator pair of
    // dx_1^dx_2 + dx_4^dx_5
    KForm eta(5, 2);
    eta.accumulate(lex_blades(5, 2)[0], Rational(1));  // (1,2)
    eta.accumulate(lex_blades(5, 2)[9], Rational(1));  // (4,5)
    const AnnihilatorPair anh = wedge_annihilators(eta);
    return CarnotPresentation::from_kernels(5, anh.one_forms, anh.two_forms);
}

GalleryCheckResult check_triples_generate_f3(const CarnotPresentation& pres, uint64_t seed, int trials) {
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed, static_cast<uint64_t>(trial));
        const RatVec x1 = rng.nonzero_vec(pres.rank());
        const RatVec x2 = rng.nonzero_vec(pres.rank());
        const RatVec x3 = rng.nonzero_vec(pres.rank());
        if (rank(RatMatrix::from_rows(pres.rank(), {x1, x2, x3})) != 3) continue;
        const LieSpan3 span = pres.lie_span3(x1, x2, x3);
        if (!span.f3) {
            return GalleryCheckResult{false, "independent triple with bracket span dim " +
                                                 std::to_string(span.dim_v2) + ": " + vec_to_string(x1) +
                                                 ", " + vec_to_string(x2) + ", " + vec_to_string(x3)};
        }
    }
    return GalleryCheckResult{true, "independent triples generate rank-3 bracket spans"};
}

GalleryCheckResult check_ex62_quotients(const CarnotPresentation& pres, uint64_t seed, int trials) {
    const int count = std::min(20, std::max(1, trials / 5));
    for (const auto& q : sample_proper_quotients(pres, count, seed)) {
        if (!classify(q).affine) {
            return GalleryCheckResult{false, "a proper quotient with dim_v2 " + std::to_string(q.dim_v2()) +
                                                 " is not affine"};
        }
    }
    return GalleryCheckResult{true, std::to_string(count) + " sampled proper quotients all affine"};
}

GalleryCheckResult check_ex63_metivier(const CarnotPresentation& pres, uint64_t seed, int trials) {
    const MetivierProbe probe = metivier_probe(pres, seed, trials);
    if (!probe.probably_metivier) {
        return GalleryCheckResult{false, "ad_x fails to be surjective at x = " + vec_to_string(*probe.witness)};
    }
    const GalleryCheckResult triples = check_triples_generate_f3(pres, seed + 1, std::min(trials, 50));
    if (!triples.ok) return triples;
    return GalleryCheckResult{true, "no Metivier counterexample found; " + triples.detail};
}

}  // namespace

std::string provenance_name(Provenance p) { return p == Provenance::Stated ? "stated" : "derived"; }

StructureSpec quaternionic_spec() {
    // Units 1, i, j, k; bracket [q, q'] = Im(conj(q) q') in the basis (i, j, k).
    StructureSpec s(4, 3);
    s.set_bracket(1, 2, {rat(1), rat(0), rat(0)});
    s.set_bracket(1, 3, {rat(0), rat(1), rat(0)});
    s.set_bracket(1, 4, {rat(0), rat(0), rat(1)});
    s.set_bracket(2, 3, {rat(0), rat(0), rat(-1)});
    s.set_bracket(2, 4, {rat(0), rat(1), rat(0)});
    s.set_bracket(3, 4, {rat(-1), rat(0), rat(0)});
    return s;
}

const std::vector<GalleryEntry>& gallery() {
    static const std::vector<GalleryEntry> entries = [] {
        std::vector<GalleryEntry> g;
        g.push_back({"f2", "free group of rank 2 (first Heisenberg group)",
                     [] { return CarnotPresentation::free_group(2); },
                     {2, 1, true, Provenance::Stated, 4, Provenance::Stated, 4, Provenance::Stated},
                     nullptr, true});
        g.push_back({"f3", "free group of rank 3",
                     [] { return CarnotPresentation::free_group(3); },
                     {3, 3, false, Provenance::Stated, 8, Provenance::Stated, 7, Provenance::Stated},
                     nullptr, true});
        g.push_back({"f4", "free group of rank 4",
                     [] { return CarnotPresentation::free_group(4); },
                     {4, 6, false, Provenance::Stated, 16, Provenance::Stated, 11, Provenance::Stated},
                     nullptr, true});
        g.push_back({"f5", "free group of rank 5",
                     [] { return CarnotPresentation::free_group(5); },
                     {5, 10, false, Provenance::Stated, 32, Provenance::Stated, 16, Provenance::Stated},
                     nullptr, false});
        g.push_back({"ex61", "rank-4 quotient by the line through dx_1^dx_2 + dx_3^dx_4",
                     make_ex61,
                     {4, 5, true, Provenance::Stated, 10, Provenance::Derived, 10, Provenance::Derived},
                     nullptr, true});
        g.push_back({"ex62", "rank-5 quotient by the annihilator pair of dx_1^dx_2 + dx_4^dx_5",
                     make_ex62,
                     {5, 5, false, Provenance::Stated, 12, Provenance::Derived, 11, Provenance::Derived},
                     check_ex62_quotients, true});
        g.push_back({"ex63_quaternionic", "quaternionic Heisenberg group",
                     [] { return CarnotPresentation::lift_to_free(quaternionic_spec()); },
                     {4, 3, true, Provenance::Stated, 8, Provenance::Derived, 8, Provenance::Derived},
                     check_ex63_metivier, true});
        g.push_back({"ex64_subgroups", "the ex61 group again: affine, yet full of rank-3 subgroups",
                     make_ex61,
                     {4, 5, true, Provenance::Stated, 10, Provenance::Derived, 10, Provenance::Derived},
                     check_triples_generate_f3, false});
        g.push_back({"f3_x_r1", "direct product of the free rank-3 group with a line",
                     [] { return CarnotPresentation::lift_to_free(product_with_abelian(StructureSpec::free_spec(3), 1)); },
                     {4, 3, false, Provenance::Stated, 9, Provenance::Derived, 8, Provenance::Derived},
                     nullptr, true});
        g.push_back({"f3_x_r2", "direct product of the free rank-3 group with a plane",
                     [] { return CarnotPresentation::lift_to_free(product_with_abelian(StructureSpec::free_spec(3), 2)); },
                     {5, 3, false, Provenance::Stated, 10, Provenance::Derived, 9, Provenance::Derived},
                     nullptr, true});
        g.push_back({"f2_x_f2", "direct product of two rank-2 free groups",
                     [] { return CarnotPresentation::lift_to_free(direct_product(StructureSpec::free_spec(2), StructureSpec::free_spec(2))); },
                     {4, 2, true, Provenance::Stated, 7, Provenance::Derived, 7, Provenance::Derived},
                     nullptr, true});
        g.push_back({"quat_x_quat", "direct product of two quaternionic Heisenberg groups",
                     [] { return CarnotPresentation::lift_to_free(direct_product(quaternionic_spec(), quaternionic_spec())); },
                     {8, 6, true, Provenance::Stated, 15, Provenance::Derived, 15, Provenance::Derived},
                     nullptr, true});
        return g;
    }();
    return entries;
}

const GalleryEntry* find_gallery(const std::string& name) {
    for (const auto& e : gallery()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

GalleryCheckResult run_gallery_entry(const GalleryEntry& entry, uint64_t seed, int trials) {
    const CarnotPresentation pres = entry.make();
    const AnalysisReport rep = analyze(pres);
    std::ostringstream detail;
    bool ok = true;
    auto field = [&](const std::string& what, int got, int want, Provenance src) {
        if (got != want) {
            ok = false;
            detail << what << ": got " << got << ", expected " << want << " (" << provenance_name(src)
                   << " value)\n";
        }
    };
    field("rank", rep.rank, entry.expect.rank, Provenance::Stated);
    field("dim_v2", rep.dim_v2, entry.expect.dim_v2, Provenance::Stated);
    field("dim_haffine", rep.dim_haffine, entry.expect.dim_haffine, entry.expect.dim_h_src);
    field("dim_affine", rep.dim_affine, entry.expect.dim_affine, entry.expect.dim_a_src);
    if (rep.affine != entry.expect.affine) {
        ok = false;
        detail << "verdict: got " << (rep.affine ? "affine" : "non_affine") << ", expected "
               << (entry.expect.affine ? "affine" : "non_affine") << " ("
               << provenance_name(entry.expect.verdict_src) << " value)\n";
    }
    if (entry.extra) {
        const GalleryCheckResult r = entry.extra(pres, seed, trials);
        if (!r.ok) ok = false;
        detail << r.detail << "\n";
    }
    std::string text = detail.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    if (ok && text.empty()) text = "all expected fields match";
    return GalleryCheckResult{ok, text};
}

std::vector<CarnotPresentation> sample_proper_quotients(const CarnotPresentation& pres, int count,
                                                        uint64_t seed) {
    std::vector<CarnotPresentation> out;
    const int m = pres.dim_v2();
    if (m < 2) return out;  // every proper central quotient would kill V2
    uint64_t attempt = 0;
    while (static_cast<int>(out.size()) < count) {
        Rng rng(seed, attempt++);
        if (attempt > 200u * static_cast<uint64_t>(count))
            throw std::logic_error("quotient sampling failed to produce enough valid quotients");
        const int extra_dim = 1 + static_cast<int>(rng.next() % 2);
        std::vector<RatVec> vecs;
        for (int i = 0; i < extra_dim; ++i) vecs.push_back(rng.vec(m));
        const Subspace extra = Subspace::span(m, vecs);
        if (extra.dim() == 0 || extra.dim() >= m) continue;
        out.push_back(pres.quotient(Subspace::zero(pres.rank()), extra));
    }
    return out;
}

}  // namespace haff
