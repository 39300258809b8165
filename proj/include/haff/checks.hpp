#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "haff/gallery.hpp"
#include "haff/haffine.hpp"

namespace haff {

struct SuiteResult {
    std::string name;
    bool pass;
    std::string detail;  // counterexample on failure, summary on success
};

/// Second difference of f along the direction line t -> p . (t x', t z').
Rational second_difference(const GroupMap& f, const CarnotPresentation& pres, const GroupPoint& p,
                           const GroupPoint& dir);

SuiteResult check_wedge_anticommutativity(uint64_t seed, int trials);
SuiteResult check_wedge_associativity(uint64_t seed, int trials);
SuiteResult check_wedge_powers(uint64_t seed, int trials);
SuiteResult check_wedge_power_span(uint64_t seed, int trials);
SuiteResult check_linalg(uint64_t seed, int trials);
SuiteResult check_group_axioms(uint64_t seed, int trials);
SuiteResult check_dilation_automorphism(uint64_t seed, int trials);
SuiteResult check_morphism_law(uint64_t seed, int trials);
SuiteResult check_quotient_identity(uint64_t seed, int trials);
SuiteResult check_dimension_laws(uint64_t seed, int trials);
SuiteResult check_affine_equivalence(uint64_t seed, int trials);
SuiteResult check_factorization(uint64_t seed, int trials);
SuiteResult check_coset_constancy(uint64_t seed, int trials);
SuiteResult check_line_suites(uint64_t seed, int trials);
SuiteResult check_division_roundtrip(uint64_t seed, int trials);
SuiteResult check_coefficient_roundtrip(uint64_t seed, int trials);
SuiteResult check_homogeneity(uint64_t seed, int trials);
SuiteResult check_quotient_stability(uint64_t seed, int trials);
SuiteResult check_product_laws(uint64_t seed, int trials);
SuiteResult check_dim_v2_3_law(uint64_t seed, int trials);
SuiteResult check_sigma_set_f3(uint64_t seed, int trials);
SuiteResult check_monotone_lines(uint64_t seed, int trials);

std::vector<SuiteResult> run_all_checks(uint64_t seed, int trials);

}  // namespace haff
