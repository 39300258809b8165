#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "haff/carnot.hpp"
#include "haff/kform.hpp"
#include "haff/linalg.hpp"

namespace haff {

/// One homogeneous building block of an h-affine map. k is the homogeneity
/// degree under dilations and eta has grade n - k; evaluation wedges eta
/// against omega^(k/2), with a leading theta when k is odd, and reads off
/// the volume coefficient.
struct PsiTerm {
    int k;
    KForm eta;

    PsiTerm(int k_, KForm eta_);
    int dim() const { return eta.dim(); }
    Rational eval(const FreePoint& p) const;
    bool operator==(const PsiTerm& other) const = default;
};

/// Whether eta is killed by wedging with every kernel element of pi, i.e.
/// whether the psi term built on eta is constant on Ker pi cosets.
bool descends(const CarnotPresentation& pres, const KForm& eta);

/// H-affine map on the presented group: a sum of psi terms, each of whose
/// etas descends through pi. Evaluation lifts through the deterministic
/// section; any section gives the same value.
class HAffineMap {
  public:
    HAffineMap(CarnotPresentation pres, std::vector<PsiTerm> terms);

    const CarnotPresentation& presentation() const { return pres_; }
    const std::vector<PsiTerm>& terms() const { return terms_; }

    Rational operator()(const GroupPoint& g) const;
    /// The composition with pi, i.e. the corresponding map on the free group.
    Rational eval_free(const FreePoint& p) const;

    std::string to_string() const;

  private:
    CarnotPresentation pres_;
    std::vector<PsiTerm> terms_;
};

struct AnnihilatorPair {
    Subspace one_forms;  // {theta : theta ^ eta = 0}, in Lambda^1 coordinates
    Subspace two_forms;  // {omega : omega ^ eta = 0}, in Lambda^2 coordinates
};

AnnihilatorPair wedge_annihilators(const KForm& eta);

/// The grade-k forms eta whose annihilator pair swallows Ker pi, computed
/// as one stacked null-space problem over the kernel bases.
Subspace lambda_space(const CarnotPresentation& pres, int k);

/// dim lambda_space(pres, k) without materializing a basis when no kernel
/// condition applies at that grade (free groups, top grades). Keeps the
/// wide unconstrained grades of large ranks out of dense storage.
int lambda_dim(const CarnotPresentation& pres, int k);

/// lambda_dim for every grade n-r..n; independent grades run in parallel.
std::vector<int> lambda_dims(const CarnotPresentation& pres);

std::vector<HAffineMap> haffine_basis(const CarnotPresentation& pres);
int dim_haffine(const CarnotPresentation& pres);

/// 1 + r + m, cross-checked against the sum of the top three lambda_space
/// dimensions.
int dim_affine(const CarnotPresentation& pres);

struct Classification {
    bool affine;
    std::optional<KForm> evidence;  // nonzero eta of grade n-3 when not affine
};

Classification classify(const CarnotPresentation& pres);

/// An r x m matrix B with b(x, z) = x^T B z bilinear, nonzero, and
/// b(x, [x, x']) = 0 for all x, x'; nullopt when none exists.
using BilinearWitness = RatMatrix;
std::optional<BilinearWitness> bilinear_witness(const CarnotPresentation& pres);

/// Three elements of V1 generating a subgroup with full 3-dimensional
/// bracket span, found through a bilinear witness; nullopt when h-affine
/// maps on the group are affine.
std::optional<std::array<RatVec, 3>> find_f3_subgroup(const CarnotPresentation& pres);

struct CartanDivision {
    std::optional<KForm> quotient;       // grade k-1, set on success
    std::optional<KForm> failing_theta;  // probe with theta ^ etabar(theta) != 0
};

/// Given a linear map Lambda^1 -> Lambda^k by its images on dx_1..dx_n,
/// produces the unique eta with etabar(theta) = theta ^ eta, or the failing
/// probe when the divisibility hypothesis does not hold.
CartanDivision cartan_divide(const std::vector<KForm>& images);

using FreeMap = std::function<Rational(const FreePoint&)>;
using GroupMap = std::function<Rational(const GroupPoint&)>;

/// Coefficients (f_0(p), ..., f_n(p)) of the polynomial t -> f(dilate(t, p)),
/// fitted exactly through t = 1..n+1.
RatVec dilation_coefficients(const FreeMap& f, const FreePoint& p);

/// Points whose k-homogeneous coefficient samples determine the coefficient
/// form: theta over basis vectors (odd k), omega over sums of disjoint basis
/// blade pairs.
std::vector<FreePoint> structured_points(int n, int k);

/// Recovers the grade n-k form eta from exact samples (p, f_k(p)); throws
/// UnderdeterminedSamples when the samples do not pin eta down.
KForm recover_coefficient_form(const std::vector<std::pair<FreePoint, Rational>>& samples, int n, int k);

struct ProbeResult {
    bool pass;
    std::string witness;  // empty when pass
};

/// Randomized exact test that f is affine along horizontal lines: vanishing
/// of the second difference f(p.(2y,0)) - 2 f(p.(y,0)) + f(p). Failures are
/// sound; passing is probabilistic for polynomial f.
ProbeResult verify_h_affinity(const GroupMap& f, const CarnotPresentation& pres, uint64_t seed,
                              int trials);

struct MetivierProbe {
    bool probably_metivier;
    std::optional<RatVec> witness;  // x with ad_x not surjective
};

/// Checks surjectivity of ad_x on basis vectors, pairwise sums, and random
/// samples. A witness is an exact disproof; the positive answer is not one.
MetivierProbe metivier_probe(const CarnotPresentation& pres, uint64_t seed, int trials);

/// Sign sequence of f along random horizontal lines, sampled over t_grid,
/// must change sign at most once.
ProbeResult monotone_line_check(const HAffineMap& f, uint64_t seed, int trials,
                                const std::vector<Rational>& t_grid);

std::vector<Rational> default_t_grid();

}  // namespace haff
