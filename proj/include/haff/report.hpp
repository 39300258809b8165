#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "haff/carnot.hpp"
#include "haff/haffine.hpp"

namespace haff {

struct LambdaDim {
    int k;  // form grade
    int dim;
    bool operator==(const LambdaDim& other) const = default;
};

struct AnalysisReport {
    std::string digest;
    int n = 0;
    int rank = 0;
    int dim_v2 = 0;
    int dim_affine = 0;
    int dim_haffine = 0;
    std::vector<LambdaDim> lambda_dims;  // grades n-rank .. n
    bool affine = false;
    std::optional<KForm> evidence;
    std::optional<RatMatrix> witness;
    std::optional<std::array<RatVec, 3>> f3_triple;
    std::optional<std::vector<PsiTerm>> basis;

    bool operator==(const AnalysisReport& other) const = default;
};

struct AnalyzeOptions {
    bool with_basis = false;
    bool with_witness = false;
    bool with_f3 = false;
};

/// Canonical 64-bit digest of a presentation: FNV-1a over its kernel data,
/// so equivalent inputs share an identity.
std::string presentation_digest(const CarnotPresentation& pres);

AnalysisReport analyze(const CarnotPresentation& pres, const AnalyzeOptions& opt = {});

std::string report_to_text(const AnalysisReport& r);

}  // namespace haff
