// Acceptance suite: runs each exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. Everything is exact arithmetic;
// the only tolerances are the wall-clock budgets stated per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <utility>

#include "haff/checks.hpp"
#include "haff/gallery.hpp"
#include "haff/haffine.hpp"
#include "haff/report.hpp"
#include "haff/rng.hpp"

using namespace haff;

namespace {

constexpr uint64_t kSeed = 20240517;

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome ok(const std::string& detail) { return {true, detail}; }
Outcome bad(const std::string& detail) { return {false, detail}; }

Outcome from_suite(const SuiteResult& r) { return {r.pass, r.detail}; }

long binom(int n, int k) {
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

Outcome criterion_free_dimensions() {
    for (int n = 2; n <= 6; ++n) {
        const int got = dim_haffine(CarnotPresentation::free_group(n));
        if (got != (1 << n))
            return bad("free rank " + std::to_string(n) + ": got " + std::to_string(got) + ", want " +
                       std::to_string(1 << n));
    }
    return ok("dim of the h-affine space is 2^n for n = 2..6");
}

Outcome criterion_affine_dimensions() {
    for (int n = 2; n <= 6; ++n) {
        const CarnotPresentation f = CarnotPresentation::free_group(n);
        const int got = dim_affine(f);  // internally cross-checked against the lambda sums
        const int want = static_cast<int>(1 + n + binom(n, 2));
        if (got != want)
            return bad("free rank " + std::to_string(n) + ": got " + std::to_string(got) + ", want " +
                       std::to_string(want));
        int lambda_sum = 0;
        for (int g = n - 2; g <= n; ++g) lambda_sum += lambda_space(f, g).dim();
        if (lambda_sum != want) return bad("lambda sum disagrees at rank " + std::to_string(n));
    }
    return ok("1 + n + C(n,2) equals the top three lambda dimensions for n = 2..6");
}

Outcome criterion_f2_f3_verdicts() {
    if (!classify(CarnotPresentation::free_group(2)).affine) return bad("rank 2 must be affine");
    const CarnotPresentation f3 = CarnotPresentation::free_group(3);
    const Classification c = classify(f3);
    if (c.affine) return bad("rank 3 must not be affine");
    if (!c.evidence || c.evidence->grade() != 0 || c.evidence->is_zero())
        return bad("evidence must be a nonzero grade-0 form");
    const HAffineMap extra(f3, {PsiTerm(3, *c.evidence)});
    const Rational scale = c.evidence->coefficient(0);
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng(kSeed, static_cast<uint64_t>(trial));
        const FreePoint p = rng.point(3);
        if (extra.eval_free(p) != scale * volume_coefficient(wedge(p.theta, p.omega)))
            return bad("the cubic basis map does not evaluate as theta ^ omega");
    }
    return ok("rank 2 affine; rank 3 non-affine with the theta ^ omega cubic as evidence");
}

Outcome criterion_ex61() {
    const CarnotPresentation pres = find_gallery("ex61")->make();
    if (lambda_space(pres, 1).dim() != 0) return bad("grade-1 lambda space must vanish");
    if (!classify(pres).affine) return bad("verdict must be affine");
    const int dim_h = dim_haffine(pres);
    const int dim_a = dim_affine(pres);
    if (dim_h != 10 || dim_a != 10)
        return bad("dims drifted: h-affine " + std::to_string(dim_h) + ", affine " + std::to_string(dim_a));
    // Bracket image inequality: whenever the (1,4) and (2,3) minors vanish,
    // w12^2 + 4 w13 w24 >= 0 in the quotient coordinates that identify V2
    // with the two-forms having zero (3,4) component.
    for (int trial = 0; trial < 1000; ++trial) {
        Rng rng(kSeed, static_cast<uint64_t>(trial));
        // columns u_i = (theta_i, theta'_i); force u4 || u1 and u3 || u2
        const Rational a = rng.small_rational(), b = rng.small_rational();
        RatVec t1 = rng.vec(2), t2 = rng.vec(2);
        const RatVec t4 = vec_scale(a, t1), t3 = vec_scale(b, t2);
        KForm theta(4, 1), thetap(4, 1);
        const std::vector<RatVec> cols = {t1, t2, t3, t4};
        for (int i = 0; i < 4; ++i) {
            theta.accumulate(BladeBits(1) << i, cols[i][0]);
            thetap.accumulate(BladeBits(1) << i, cols[i][1]);
        }
        const KForm w = wedge(theta, thetap);
        const auto& blades = lex_blades(4, 2);
        const Rational w12 = w.coefficient(blades[0]), w13 = w.coefficient(blades[1]),
                       w14 = w.coefficient(blades[2]), w23 = w.coefficient(blades[3]),
                       w24 = w.coefficient(blades[4]), w34 = w.coefficient(blades[5]);
        if (!is_zero(w14) || !is_zero(w23)) return bad("conditioning failed to zero the minors");
        const Rational q12 = w12 - w34;
        const Rational value = q12 * q12 + 4 * w13 * w24;
        if (sgn(value) < 0)
            return bad("bracket image inequality fails: " + rat_to_string(value) + " at trial " +
                       std::to_string(trial));
    }
    return ok("grade-1 lambda space zero, affine, dim 10, bracket inequality on 1000 samples");
}

Outcome criterion_ex62() {
    const CarnotPresentation pres = find_gallery("ex62")->make();
    KForm eta(5, 2);
    eta.accumulate(lex_blades(5, 2)[0], Rational(1));
    eta.accumulate(lex_blades(5, 2)[9], Rational(1));
    if (!(lambda_space(pres, 2) == Subspace::span(10, {eta.coords()})))
        return bad("grade-2 lambda space is not the line through the defining form");
    if (lambda_space(pres, 1).dim() != 0 || lambda_space(pres, 0).dim() != 0)
        return bad("grades 0 and 1 must vanish");
    if (classify(pres).affine) return bad("verdict must be non_affine");
    if (dim_haffine(pres) != 12) return bad("dim drifted: " + std::to_string(dim_haffine(pres)));
    for (const auto& q : sample_proper_quotients(pres, 20, kSeed)) {
        if (!classify(q).affine) return bad("a proper quotient is not affine");
    }
    return ok("lambda line as expected, non-affine of dim 12, 20 proper quotients all affine");
}

Outcome criterion_quaternionic() {
    const CarnotPresentation pres = find_gallery("ex63_quaternionic")->make();
    if (!classify(pres).affine) return bad("verdict must be affine");
    const MetivierProbe probe = metivier_probe(pres, kSeed, 1000);
    if (!probe.probably_metivier) return bad("the probe found a non-surjective ad_x");
    int found = 0;
    uint64_t attempt = 0;
    while (found < 50) {
        Rng rng(kSeed, attempt++);
        if (attempt > 5000) return bad("failed to sample independent triples");
        const RatVec x1 = rng.nonzero_vec(4), x2 = rng.nonzero_vec(4), x3 = rng.nonzero_vec(4);
        if (rank(RatMatrix::from_rows(4, {x1, x2, x3})) != 3) continue;
        ++found;
        if (!pres.lie_span3(x1, x2, x3).f3)
            return bad("an independent triple fails to have a full bracket span");
    }
    return ok("affine; no Metivier counterexample in 1000 trials; 50 independent triples generate");
}

Outcome criterion_division() { return from_suite(check_division_roundtrip(kSeed, 200)); }

Outcome criterion_decomposition() { return from_suite(check_coefficient_roundtrip(kSeed, 50)); }

Outcome criterion_line_suites() { return from_suite(check_line_suites(kSeed, 100)); }

Outcome criterion_products() { return from_suite(check_product_laws(kSeed, 100)); }

Outcome criterion_monotone() { return from_suite(check_monotone_lines(kSeed, 100)); }

Outcome criterion_negative_controls() {
    const CarnotPresentation f2 = CarnotPresentation::free_group(2);
    const GroupMap square = [](const GroupPoint& g) { return Rational(g.x[0] * g.x[0]); };
    const ProbeResult r1 = verify_h_affinity(square, f2, kSeed, 200);
    if (r1.pass || r1.witness.empty()) return bad("the quadratic in x_1 was not rejected with a witness");

    const CarnotPresentation f4 = CarnotPresentation::free_group(4);
    const GroupMap mixed = [](const GroupPoint& g) { return Rational(g.z[0] * g.z[5]); };
    const ProbeResult r2 = verify_h_affinity(mixed, f4, kSeed, 200);
    if (r2.pass || r2.witness.empty()) return bad("the mixed quadratic in omega was not rejected");
    return ok("both quadratics rejected; witnesses: [" + r1.witness + "] and [" + r2.witness + "]");
}

}  // namespace

int main() {
    struct Criterion {
        int num;
        std::string what;
        double budget_s;  // 0 = no budget
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "free-group h-affine dimensions 2^n (n = 2..6)", 5.0, criterion_free_dimensions},
        {2, "free-group affine dimensions 1 + n + C(n,2)", 0.0, criterion_affine_dimensions},
        {3, "rank-2 affine; rank-3 non-affine with cubic evidence", 0.0, criterion_f2_f3_verdicts},
        {4, "rank-4 quotient example: affine, dim 10, bracket inequality", 5.0, criterion_ex61},
        {5, "rank-5 quotient example: non-affine dim 12, quotients affine", 30.0, criterion_ex62},
        {6, "quaternionic group: affine, Metivier probe, generating triples", 0.0, criterion_quaternionic},
        {7, "division roundtrip with exact rejection witnesses (200 cases)", 0.0, criterion_division},
        {8, "decomposition roundtrip on ranks 3..5 (50 tuples)", 60.0, criterion_decomposition},
        {9, "line-affinity suites over every gallery basis map", 0.0, criterion_line_suites},
        {10, "product classification laws", 0.0, criterion_products},
        {11, "monotone sign sequences along horizontal lines", 0.0, criterion_monotone},
        {12, "negative controls: quadratics rejected with witness lines", 0.0, criterion_negative_controls},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome{false, "unhandled exception"};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = bad(std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        if (outcome.ok && c.budget_s > 0 && elapsed > c.budget_s) {
            outcome.ok = false;
            outcome.detail += " [exceeded " + std::to_string(c.budget_s) + " s budget]";
        }
        line << (outcome.ok ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << c.num << ": " << c.what
             << " (" << std::fixed << std::setprecision(2) << elapsed << " s)";
        if (!outcome.detail.empty()) line << "\n        " << outcome.detail;
        std::cout << line.str() << "\n";
        if (!outcome.ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
