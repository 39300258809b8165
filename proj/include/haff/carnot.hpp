#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "haff/kform.hpp"
#include "haff/linalg.hpp"

namespace haff {

/// Element (theta, omega) of the free step-two group of rank n.
struct FreePoint {
    KForm theta;  // grade 1
    KForm omega;  // grade 2

    FreePoint(KForm th, KForm om);
    static FreePoint origin(int n);
    int dim() const { return theta.dim(); }

    bool operator==(const FreePoint& other) const = default;
};

/// Free group law (theta, omega) . (theta', omega') =
/// (theta + theta', omega + omega' + theta ^ theta').
FreePoint group_mul(const FreePoint& p, const FreePoint& q);
FreePoint group_inverse(const FreePoint& p);

/// Dilation (theta, omega) -> (t theta, t^2 omega); t may be any rational.
FreePoint dilate(const Rational& t, const FreePoint& p);

/// Element (x, z) of a presented group, x in V1 = Q^r, z in V2 = Q^m.
struct GroupPoint {
    RatVec x;
    RatVec z;
    bool operator==(const GroupPoint& other) const = default;
};

/// Bracket table [e_i, e_j] for 1 <= i < j <= rank, values in a fixed V2
/// basis. Omitted pairs are zero; skew-symmetry is implicit.
class StructureSpec {
  public:
    StructureSpec(int rank, int dim_v2);

    static StructureSpec free_spec(int n);

    void set_bracket(int i, int j, RatVec z);  // 1-based, i < j
    RatVec bracket_of(int i, int j) const;     // any i != j, sign handled

    int rank() const { return rank_; }
    int dim_v2() const { return dim_v2_; }
    const std::map<std::pair<int, int>, RatVec>& table() const { return table_; }

  private:
    int rank_;
    int dim_v2_;
    std::map<std::pair<int, int>, RatVec> table_;
};

/// Block-diagonal bracket structure [x+x', y+y'] = [x,y] + [x',y'].
StructureSpec direct_product(const StructureSpec& a, const StructureSpec& b);

/// Adds d commuting generators: [x+u, x'+u'] = [x,x'].
StructureSpec product_with_abelian(const StructureSpec& a, int d);

struct LieSpan3 {
    int dim_v1;      // dim span{x1, x2, x3}
    int dim_v2;      // dim span{[x_i, x_j]}
    bool f3;         // both equal to 3
};

/// Surjective morphism pi = (pi1, pi2) from the free group of rank n onto a
/// step-two group G, with explicit kernels. All analysis of G runs through
/// one of these.
class CarnotPresentation {
  public:
    static CarnotPresentation free_group(int n);
    static CarnotPresentation lift_to_free(const StructureSpec& spec);
    /// Quotient of the free group by given kernel subspaces in Lambda^1 /
    /// Lambda^2 coordinates (the "free_quotient" input format).
    static CarnotPresentation from_kernels(int n, const Subspace& kernel1, const Subspace& kernel2);

    /// Further quotient by subspaces given in V1 / V2 coordinates of G.
    /// The new presentation composes the canonical quotient maps with pi,
    /// so passing two zero subspaces returns an identical presentation.
    CarnotPresentation quotient(const Subspace& extra1, const Subspace& extra2) const;

    int n() const { return n_; }
    int rank() const { return r_; }
    int dim_v2() const { return m_; }
    const Subspace& kernel1() const { return kernel1_; }
    const Subspace& kernel2() const { return kernel2_; }
    const RatMatrix& pi1() const { return pi1_; }
    const RatMatrix& pi2() const { return pi2_; }

    GroupPoint project(const FreePoint& p) const;
    /// Deterministic right inverse of the projection: the preimage whose
    /// free coordinates (per the rref pivot structure of pi) are zero.
    FreePoint section(const GroupPoint& g) const;

    RatVec bracket(const RatVec& x, const RatVec& y) const;
    GroupPoint mul(const GroupPoint& p, const GroupPoint& q) const;
    GroupPoint inverse(const GroupPoint& p) const;
    GroupPoint dilate_g(const Rational& t, const GroupPoint& p) const;
    GroupPoint origin() const { return GroupPoint{RatVec(r_, Rational(0)), RatVec(m_, Rational(0))}; }

    LieSpan3 lie_span3(const RatVec& x1, const RatVec& x2, const RatVec& x3) const;

    bool operator==(const CarnotPresentation& other) const;

  private:
    CarnotPresentation() = default;
    static CarnotPresentation build(int n, RatMatrix pi1, RatMatrix pi2);
    void validate() const;

    int n_ = 0;
    int r_ = 0;
    int m_ = 0;
    Subspace kernel1_ = Subspace::zero(0);
    Subspace kernel2_ = Subspace::zero(0);
    RatMatrix pi1_;
    RatMatrix pi2_;
    std::shared_ptr<const SolveCache> sec1_;
    std::shared_ptr<const SolveCache> sec2_;
};

}  // namespace haff
