#pragma once

#include <functional>
#include <string>
#include <vector>

#include "haff/carnot.hpp"
#include "haff/haffine.hpp"

namespace haff {

/// Where an expected gallery value comes from: stated by the underlying
/// theory, or derived once with this library's own null-space machinery and
/// frozen. A mismatch on a Stated value contradicts the theory; a mismatch
/// on a Derived value means the computation drifted.
enum class Provenance { Stated, Derived };

std::string provenance_name(Provenance p);

struct GalleryExpectation {
    int rank = 0;
    int dim_v2 = 0;
    bool affine = false;
    Provenance verdict_src = Provenance::Stated;
    int dim_haffine = 0;
    Provenance dim_h_src = Provenance::Derived;
    int dim_affine = 0;
    Provenance dim_a_src = Provenance::Derived;
};

struct GalleryCheckResult {
    bool ok;
    std::string detail;
};

struct GalleryEntry {
    std::string name;
    std::string summary;
    std::function<CarnotPresentation()> make;
    GalleryExpectation expect;
    /// Optional entry-specific verification beyond the field diff.
    std::function<GalleryCheckResult(const CarnotPresentation&, uint64_t, int)> extra;
    /// Whether the per-basis-map line suites include this entry.
    bool in_map_suites = true;
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry* find_gallery(const std::string& name);

/// The quaternionic Heisenberg structure: rank 4, dim V2 = 3, bracket the
/// imaginary part of conjugate-times-argument.
StructureSpec quaternionic_spec();

/// Compares the computed report fields of one entry against its
/// expectations and runs its extra check. Lines describe each field.
GalleryCheckResult run_gallery_entry(const GalleryEntry& entry, uint64_t seed, int trials);

/// Random proper quotients of pres by nonzero central subspaces of V2;
/// deterministic in seed.
std::vector<CarnotPresentation> sample_proper_quotients(const CarnotPresentation& pres, int count,
                                                        uint64_t seed);

}  // namespace haff
