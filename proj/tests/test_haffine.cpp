#include "doctest.h"

#include "haff/checks.hpp"
#include "haff/gallery.hpp"
#include "haff/haffine.hpp"
#include "haff/rng.hpp"

using namespace haff;

namespace {

RatVec vec(std::vector<long> entries) {
    RatVec v;
    for (long e : entries) v.push_back(rat(e));
    return v;
}

KForm two_form(int n, std::initializer_list<std::pair<BladeBits, long>> terms) {
    KForm f(n, 2);
    for (const auto& [bits, c] : terms) f.accumulate(bits, rat(c));
    return f;
}

}  // namespace

TEST_CASE("psi terms evaluate through wedge powers") {
    // cubic term on the free rank-3 group: theta ^ omega
    const PsiTerm cubic(3, KForm::scalar(3, rat(1)));
    const FreePoint p(KForm::basis_one_form(3, 1), KForm::blade_form(3, 0b110));
    CHECK(cubic.eval(p) == rat(1));

    // constant term
    const PsiTerm constant(0, KForm::volume_form(3));
    CHECK(constant.eval(FreePoint::origin(3)) == rat(1));
    CHECK(constant.eval(p) == rat(1));

    // quadratic term on rank 4: omega^2 against the two-pair form
    const PsiTerm quartic(4, KForm::scalar(4, rat(1)));
    const FreePoint q(KForm(4, 1), two_form(4, {{0b0011, 1}, {0b1100, 1}}));
    CHECK(quartic.eval(q) == rat(2));
}

TEST_CASE("wedge annihilators of reference forms") {
    // a single one-form on rank 3
    const AnnihilatorPair a = wedge_annihilators(KForm::basis_one_form(3, 1));
    CHECK(a.one_forms == Subspace::span(3, {vec({1, 0, 0})}));
    CHECK(a.two_forms == Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})}));  // dx_1^dx_2, dx_1^dx_3

    // the rank-5 pair-sum form
    const KForm eta = two_form(5, {{0b00011, 1}, {0b11000, 1}});
    const AnnihilatorPair b = wedge_annihilators(eta);
    CHECK(b.one_forms.dim() == 0);
    // lex 2-blade order on rank 5: 12,13,14,15,23,24,25,34,35,45
    std::vector<RatVec> expected;
    expected.push_back(vec({1, 0, 0, 0, 0, 0, 0, 0, 0, -1}));  // dx_1^dx_2 - dx_4^dx_5
    expected.push_back(vec({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));   // dx_1^dx_4
    expected.push_back(vec({0, 0, 0, 1, 0, 0, 0, 0, 0, 0}));   // dx_1^dx_5
    expected.push_back(vec({0, 0, 0, 0, 0, 1, 0, 0, 0, 0}));   // dx_2^dx_4
    expected.push_back(vec({0, 0, 0, 0, 0, 0, 1, 0, 0, 0}));   // dx_2^dx_5
    CHECK(b.two_forms == Subspace::span(10, expected));

    // the zero form annihilates everything
    const AnnihilatorPair z = wedge_annihilators(KForm(4, 2));
    CHECK(z.one_forms == Subspace::full(4));
    CHECK(z.two_forms == Subspace::full(6));
}

TEST_CASE("lambda spaces of the worked examples") {
    const CarnotPresentation ex61 = find_gallery("ex61")->make();
    CHECK(lambda_space(ex61, 1).dim() == 0);
    CHECK(lambda_space(ex61, 4) == Subspace::full(1));

    const CarnotPresentation ex62 = find_gallery("ex62")->make();
    const KForm eta = two_form(5, {{0b00011, 1}, {0b11000, 1}});
    CHECK(lambda_space(ex62, 2) == Subspace::span(10, {eta.coords()}));
    CHECK(lambda_space(ex62, 1).dim() == 0);
    CHECK(lambda_space(ex62, 0).dim() == 0);
}

TEST_CASE("h-affine dimensions") {
    CHECK(dim_haffine(CarnotPresentation::free_group(2)) == 4);
    CHECK(dim_haffine(CarnotPresentation::free_group(3)) == 8);
    CHECK(dim_affine(CarnotPresentation::free_group(3)) == 7);
    CHECK(dim_affine(CarnotPresentation::free_group(5)) == 16);
    CHECK(dim_haffine(find_gallery("ex62")->make()) == 12);
    CHECK(dim_haffine(find_gallery("ex61")->make()) == 10);
    CHECK(dim_affine(find_gallery("ex61")->make()) == 10);
}

TEST_CASE("forms that do not descend are rejected") {
    // quotient the free rank-3 group by the central line through dx_2^dx_3;
    // dx_1 wedges the kernel out of existence, so psi terms on dx_1 cannot
    // factor through the projection
    const CarnotPresentation pres = CarnotPresentation::free_group(3).quotient(
        Subspace::zero(3), Subspace::span(3, {{rat(0), rat(0), rat(1)}}));
    CHECK_FALSE(descends(pres, KForm::basis_one_form(3, 1)));
    CHECK(descends(pres, KForm::basis_one_form(3, 2)));
    const Subspace l1 = lambda_space(pres, 1);
    CHECK(l1.dim() == 2);
    CHECK_FALSE(l1.contains(KForm::basis_one_form(3, 1).coords()));
    CHECK_THROWS_AS(HAffineMap(pres, {PsiTerm(2, KForm::basis_one_form(3, 1))}), std::invalid_argument);
}

TEST_CASE("maps with several psi terms behave like their sums") {
    const CarnotPresentation pres = find_gallery("ex62")->make();
    std::vector<PsiTerm> terms;
    for (const HAffineMap& b : haffine_basis(pres))
        for (const PsiTerm& t : b.terms()) terms.push_back(t);
    REQUIRE(terms.size() == 12);
    const HAffineMap sum(pres, terms);
    Rng rng(41);
    for (int i = 0; i < 25; ++i) {
        const FreePoint p = rng.point(5);
        Rational expect(0);
        for (const PsiTerm& t : terms) expect += t.eval(p);
        CHECK(sum.eval_free(p) == expect);
        CHECK(sum(pres.project(p)) == expect);
    }
    const GroupMap fm = [&sum](const GroupPoint& g) { return sum(g); };
    CHECK(verify_h_affinity(fm, pres, 41, 25).pass);
}

TEST_CASE("presentations with more generators than the rank") {
    // the rank-2 group presented on three free generators: kill dx_3 and the
    // blades it feeds
    const CarnotPresentation pres = CarnotPresentation::from_kernels(
        3, Subspace::span(3, {{rat(0), rat(0), rat(1)}}),
        Subspace::span(3, {{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}}));
    CHECK(pres.n() == 3);
    CHECK(pres.rank() == 2);
    CHECK(pres.dim_v2() == 1);
    // grades below n - rank carry nothing
    CHECK(lambda_space(pres, 0).dim() == 0);
    CHECK(dim_haffine(pres) == 4);
    CHECK(dim_affine(pres) == 4);
    CHECK(classify(pres).affine);
    // the basis maps still factor and stay h-affine
    for (const HAffineMap& f : haffine_basis(pres)) {
        const GroupMap fm = [&f](const GroupPoint& g) { return f(g); };
        CHECK(verify_h_affinity(fm, pres, 31, 25).pass);
    }
}

TEST_CASE("classification and witnesses") {
    const Classification f3c = classify(CarnotPresentation::free_group(3));
    CHECK_FALSE(f3c.affine);
    REQUIRE(f3c.evidence.has_value());
    CHECK(f3c.evidence->grade() == 0);
    CHECK_FALSE(f3c.evidence->is_zero());

    CHECK(classify(CarnotPresentation::free_group(2)).affine);
    CHECK(classify(find_gallery("ex61")->make()).affine);
    CHECK(classify(find_gallery("ex63_quaternionic")->make()).affine);

    // the extra basis map on the free rank-3 group evaluates as theta ^ omega
    const CarnotPresentation f3 = CarnotPresentation::free_group(3);
    const HAffineMap cubic(f3, {PsiTerm(3, *f3c.evidence)});
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const FreePoint p = rng.point(3);
        CHECK(cubic.eval_free(p) == volume_coefficient(wedge(p.theta, p.omega)));
    }
}

TEST_CASE("bilinear witnesses") {
    const auto w = bilinear_witness(CarnotPresentation::free_group(3));
    REQUIRE(w.has_value());
    // b(e_1, [e_2, e_3]) = 1 after canonicalization; the polarized form is
    // alternating, so the two sister entries follow
    CHECK(w->at(0, 2) == rat(1));
    CHECK(w->at(1, 1) == rat(-1));
    CHECK(w->at(2, 0) == rat(1));

    CHECK_FALSE(bilinear_witness(find_gallery("ex61")->make()).has_value());
    CHECK_FALSE(bilinear_witness(CarnotPresentation::free_group(2)).has_value());
}

TEST_CASE("rank-3 triples from witnesses") {
    const auto t = find_f3_subgroup(CarnotPresentation::free_group(3));
    REQUIRE(t.has_value());
    CHECK((*t)[0] == vec({1, 0, 0}));
    CHECK((*t)[1] == vec({0, 1, 0}));
    CHECK((*t)[2] == vec({0, 0, 1}));

    const CarnotPresentation f3xr2 = find_gallery("f3_x_r2")->make();
    const auto t2 = find_f3_subgroup(f3xr2);
    REQUIRE(t2.has_value());
    CHECK(f3xr2.lie_span3((*t2)[0], (*t2)[1], (*t2)[2]).f3);

    CHECK_FALSE(find_f3_subgroup(find_gallery("ex61")->make()).has_value());
}

TEST_CASE("division by one-forms") {
    // zero map divides to zero
    std::vector<KForm> zero_images(3, KForm(3, 2));
    const CartanDivision z = cartan_divide(zero_images);
    REQUIRE(z.quotient.has_value());
    CHECK(z.quotient->is_zero());

    // theta ^ (dx_1 + 2 dx_3)
    const KForm eta = KForm::basis_one_form(3, 1) + KForm::basis_one_form(3, 3).scaled(rat(2));
    std::vector<KForm> images;
    for (int j = 1; j <= 3; ++j) images.push_back(wedge(KForm::basis_one_form(3, j), eta));
    const CartanDivision d = cartan_divide(images);
    REQUIRE(d.quotient.has_value());
    CHECK(*d.quotient == eta);
    for (int j = 1; j <= 3; ++j)
        CHECK(wedge(KForm::basis_one_form(3, j), *d.quotient) == images[static_cast<size_t>(j - 1)]);

    // indivisible: etabar(dx_1) = dx_2 violates the hypothesis at dx_1
    std::vector<KForm> bad(3, KForm(3, 1));
    bad[0] = KForm::basis_one_form(3, 2);
    const CartanDivision f = cartan_divide(bad);
    REQUIRE(f.failing_theta.has_value());
    CHECK(*f.failing_theta == KForm::basis_one_form(3, 1));
    CHECK_FALSE(wedge(*f.failing_theta, bad[0]).is_zero());
}

TEST_CASE("dilation coefficient extraction") {
    // constant + top-degree term on rank 3
    const PsiTerm constant(0, KForm::volume_form(3));
    const PsiTerm cubic(3, KForm::scalar(3, rat(1)));
    const FreeMap f = [&](const FreePoint& p) -> Rational { return constant.eval(p) + cubic.eval(p); };
    const FreePoint p(KForm::basis_one_form(3, 1), KForm::blade_form(3, 0b110));
    const RatVec coeffs = dilation_coefficients(f, p);
    CHECK(coeffs == vec({1, 0, 0, 1}));

    const FreeMap c5 = [](const FreePoint&) { return rat(5, 3); };
    CHECK(dilation_coefficients(c5, FreePoint::origin(4)) == RatVec{rat(5, 3), rat(0), rat(0), rat(0), rat(0)});

    // a single homogeneous term only fills its own slot
    Rng rng(17);
    const PsiTerm t2(2, rng.form(4, 2));
    const FreeMap f2 = [&](const FreePoint& q) { return t2.eval(q); };
    const FreePoint q = rng.point(4);
    const RatVec c = dilation_coefficients(f2, q);
    CHECK(c[2] == t2.eval(q));
    for (int j = 0; j <= 4; ++j)
        if (j != 2) CHECK(is_zero(c[j]));
}

TEST_CASE("coefficient recovery") {
    // all-zero samples over a spanning set recover the zero form
    std::vector<std::pair<FreePoint, Rational>> samples;
    for (const FreePoint& p : structured_points(4, 2)) samples.emplace_back(p, rat(0));
    CHECK(recover_coefficient_form(samples, 4, 2).is_zero());

    // too few samples are rejected
    samples.erase(samples.begin() + 1, samples.end());
    CHECK_THROWS_AS(recover_coefficient_form(samples, 4, 2), UnderdeterminedSamples);
}

TEST_CASE("h-affinity probe accepts basis maps and rejects quadratics") {
    const CarnotPresentation f2 = CarnotPresentation::free_group(2);
    const GroupMap square = [](const GroupPoint& g) { return Rational(g.x[0] * g.x[0]); };
    const ProbeResult bad = verify_h_affinity(square, f2, 3, 50);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.witness.empty());

    const CarnotPresentation f4 = CarnotPresentation::free_group(4);
    const GroupMap mixed = [](const GroupPoint& g) { return Rational(g.z[0] * g.z[5]); };
    const ProbeResult bad2 = verify_h_affinity(mixed, f4, 3, 50);
    CHECK_FALSE(bad2.pass);

    for (const HAffineMap& f : haffine_basis(CarnotPresentation::free_group(3))) {
        const GroupMap fm = [&f](const GroupPoint& g) { return f(g); };
        CHECK(verify_h_affinity(fm, f.presentation(), 3, 25).pass);
    }
}

TEST_CASE("metivier probes") {
    const MetivierProbe f3 = metivier_probe(CarnotPresentation::free_group(3), 1, 20);
    CHECK_FALSE(f3.probably_metivier);
    REQUIRE(f3.witness.has_value());
    CHECK(*f3.witness == vec({1, 0, 0}));

    CHECK(metivier_probe(CarnotPresentation::free_group(2), 1, 20).probably_metivier);
    CHECK(metivier_probe(find_gallery("ex63_quaternionic")->make(), 1, 50).probably_metivier);
}

TEST_CASE("randomized structural suites") {
    for (auto fn : {check_dimension_laws, check_affine_equivalence, check_factorization,
                    check_coset_constancy, check_homogeneity, check_sigma_set_f3, check_product_laws,
                    check_dim_v2_3_law}) {
        const SuiteResult r = fn(23, 20);
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("line and roundtrip suites at reduced trial counts") {
    for (auto fn : {check_line_suites, check_monotone_lines, check_division_roundtrip,
                    check_coefficient_roundtrip, check_quotient_stability}) {
        const SuiteResult r = fn(29, 6);
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
