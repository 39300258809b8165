// Independent cross-check of the h-affine dimension counts: parametrize a
// generic polynomial of bounded total degree on the group's coordinates,
// impose exact vanishing of second differences along random horizontal
// lines, and count the surviving coefficient space. No wedge machinery is
// involved, so this exercises a completely different code path than
// dim_haffine.

#include "doctest.h"

#include "haff/carnot.hpp"
#include "haff/gallery.hpp"
#include "haff/rng.hpp"

using namespace haff;

namespace {

// Exponent tuples with sum of weighted exponents <= budget; the first
// rank variables have weight x_weight, the rest weight z_weight.
void enumerate_monomials(int vars, int rank, int x_weight, int z_weight, int budget,
                         std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == vars) {
        out.push_back(current);
        return;
    }
    const int w = static_cast<int>(current.size()) < rank ? x_weight : z_weight;
    for (int d = 0; d * w <= budget; ++d) {
        current.push_back(d);
        enumerate_monomials(vars, rank, x_weight, z_weight, budget - d * w, current, out);
        current.pop_back();
    }
}

Rational eval_monomial(const std::vector<int>& mono, const GroupPoint& p) {
    Rational acc(1);
    const int r = static_cast<int>(p.x.size());
    for (size_t v = 0; v < mono.size(); ++v) {
        const Rational& coord = v < static_cast<size_t>(r) ? p.x[v] : p.z[v - r];
        for (int d = 0; d < mono[v]; ++d) acc *= coord;
    }
    return acc;
}

// Dimension of {polynomials of total degree <= maxdeg that are affine along
// horizontal lines}, estimated by random exact constraints. Extra rows
// beyond the point where the rank stabilizes make an unlucky sample
// vanishingly unlikely; any error would only overcount.
// z_weight 1 bounds plain total degree; z_weight 2 bounds the degree under
// dilations instead, which shrinks the ansatz for the wide groups.
int polynomial_haffine_dim(const CarnotPresentation& pres, int maxdeg, int z_weight, int rows,
                           uint64_t seed) {
    std::vector<std::vector<int>> monos;
    std::vector<int> scratch;
    enumerate_monomials(pres.rank() + pres.dim_v2(), pres.rank(), 1, z_weight, maxdeg, scratch, monos);
    const RatVec zero_z(pres.dim_v2(), Rational(0));
    // small integer sample coordinates keep the elimination entries short
    auto int_vec = [](Rng& rng, int len, bool nonzero) {
        while (true) {
            RatVec v(len);
            for (auto& q : v) q = rat(rng.uniform(-5, 5));
            if (!nonzero || !vec_is_zero(v)) return v;
        }
    };
    RatMatrix sys(rows, static_cast<int>(monos.size()));
    for (int i = 0; i < rows; ++i) {
        Rng rng(seed, static_cast<uint64_t>(i));
        const GroupPoint p{int_vec(rng, pres.rank(), false), int_vec(rng, pres.dim_v2(), false)};
        const RatVec y = int_vec(rng, pres.rank(), true);
        const GroupPoint p1 = pres.mul(p, GroupPoint{y, zero_z});
        const GroupPoint p2 = pres.mul(p, GroupPoint{vec_scale(rat(2), y), zero_z});
        for (size_t j = 0; j < monos.size(); ++j) {
            sys.at(i, static_cast<int>(j)) =
                eval_monomial(monos[j], p2) - 2 * eval_monomial(monos[j], p1) + eval_monomial(monos[j], p);
        }
    }
    return null_space(sys).dim();
}

}  // namespace

TEST_CASE("brute-force polynomial dimensions agree with the wedge machinery") {
    // plain degree 3 is past every candidate map on these groups, so
    // surviving dimensions would expose both undercounts and overcounts
    const CarnotPresentation f2 = CarnotPresentation::free_group(2);
    CHECK(polynomial_haffine_dim(f2, 3, 1, 60, 101) == 4);

    const CarnotPresentation f3 = CarnotPresentation::free_group(3);
    CHECK(polynomial_haffine_dim(f3, 3, 1, 180, 102) == 8);
}

TEST_CASE("brute-force dimension of the rank-4 quotient example" * doctest::skip()) {
    // run explicitly (ctest entry oracle_ex61): 160 monomials of dilation
    // degree <= 4 on 9 coordinates, so this one takes tens of seconds
    const CarnotPresentation ex61 = find_gallery("ex61")->make();
    CHECK(polynomial_haffine_dim(ex61, 4, 2, 200, 103) == 10);
}
