#include "haff/carnot.hpp"

namespace haff {

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

FreePoint::FreePoint(KForm th, KForm om) : theta(std::move(th)), omega(std::move(om)) {
    if (theta.dim() != omega.dim()) throw DimensionMismatch("point components live in different dimensions");
    if (theta.grade() != 1 || omega.grade() != 2) throw GradeMismatch("point components must have grades 1 and 2");
}

FreePoint FreePoint::origin(int n) { return FreePoint(KForm(n, 1), KForm(n, 2)); }

FreePoint group_mul(const FreePoint& p, const FreePoint& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("group_mul: dimension mismatch");
    return FreePoint(p.theta + q.theta, p.omega + q.omega + wedge(p.theta, q.theta));
}

FreePoint group_inverse(const FreePoint& p) { return FreePoint(-p.theta, -p.omega); }

FreePoint dilate(const Rational& t, const FreePoint& p) {
    return FreePoint(p.theta.scaled(t), p.omega.scaled(t * t));
}

StructureSpec::StructureSpec(int rank, int dim_v2) : rank_(rank), dim_v2_(dim_v2) {
    if (rank < 2 || rank > kMaxDim) throw UnsupportedDimension("rank must be in [2, 16]");
    if (dim_v2 < 1) throw TrivialV2("dim_v2 must be at least 1");
    if (dim_v2 > choose2(rank)) throw HormanderViolation("dim_v2 exceeds the space of brackets");
}

StructureSpec StructureSpec::free_spec(int n) {
    StructureSpec s(n, choose2(n));
    int idx = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            RatVec z(choose2(n), Rational(0));
            z[idx++] = 1;
            s.set_bracket(i, j, std::move(z));
        }
    }
    return s;
}

void StructureSpec::set_bracket(int i, int j, RatVec z) {
    if (i < 1 || j <= i || j > rank_) throw DimensionMismatch("bracket pair must satisfy 1 <= i < j <= rank");
    if (static_cast<int>(z.size()) != dim_v2_) throw DimensionMismatch("bracket value has wrong V2 dimension");
    if (vec_is_zero(z))
        table_.erase({i, j});
    else
        table_[{i, j}] = std::move(z);
}

RatVec StructureSpec::bracket_of(int i, int j) const {
    if (i == j) return RatVec(dim_v2_, Rational(0));
    const bool flip = i > j;
    auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == table_.end()) return RatVec(dim_v2_, Rational(0));
    return flip ? vec_scale(Rational(-1), it->second) : it->second;
}

StructureSpec direct_product(const StructureSpec& a, const StructureSpec& b) {
    StructureSpec out(a.rank() + b.rank(), a.dim_v2() + b.dim_v2());
    for (const auto& [ij, z] : a.table()) {
        RatVec zz(out.dim_v2(), Rational(0));
        for (int t = 0; t < a.dim_v2(); ++t) zz[t] = z[t];
        out.set_bracket(ij.first, ij.second, std::move(zz));
    }
    for (const auto& [ij, z] : b.table()) {
        RatVec zz(out.dim_v2(), Rational(0));
        for (int t = 0; t < b.dim_v2(); ++t) zz[a.dim_v2() + t] = z[t];
        out.set_bracket(a.rank() + ij.first, a.rank() + ij.second, std::move(zz));
    }
    return out;
}

StructureSpec product_with_abelian(const StructureSpec& a, int d) {
    if (d < 1) throw DimensionMismatch("abelian factor dimension must be >= 1");
    StructureSpec out(a.rank() + d, a.dim_v2());
    for (const auto& [ij, z] : a.table()) out.set_bracket(ij.first, ij.second, z);
    return out;
}

CarnotPresentation CarnotPresentation::build(int n, RatMatrix pi1, RatMatrix pi2) {
    CarnotPresentation p;
    p.n_ = n;
    p.r_ = pi1.rows();
    p.m_ = pi2.rows();
    p.pi1_ = std::move(pi1);
    p.pi2_ = std::move(pi2);
    p.kernel1_ = null_space(p.pi1_);
    p.kernel2_ = null_space(p.pi2_);
    p.validate();
    p.sec1_ = std::make_shared<SolveCache>(p.pi1_);
    p.sec2_ = std::make_shared<SolveCache>(p.pi2_);
    return p;
}

void CarnotPresentation::validate() const {
    if (n_ < kMinDim || n_ > kMaxDim) throw UnsupportedDimension("free rank must be in [2, 16]");
    if (m_ < 1) throw TrivialV2("quotient has trivial V2");
    if (pi1_.cols() != n_ || pi2_.cols() != choose2(n_))
        throw DimensionMismatch("projection matrices have wrong shape");
    if (kernel1_.dim() != n_ - r_) throw HormanderViolation("pi1 is not surjective");
    if (kernel2_.dim() != choose2(n_) - m_) throw HormanderViolation("pi2 is not surjective");
    // The bracket on the quotient is well defined only when wedging the
    // Lambda^1 kernel into anything lands in the Lambda^2 kernel.
    for (int b = 0; b < kernel1_.dim(); ++b) {
        const KForm theta_b = KForm::from_coords(n_, 1, kernel1_.basis_vector(b));
        for (int j = 1; j <= n_; ++j) {
            const KForm w = wedge(theta_b, KForm::basis_one_form(n_, j));
            if (!kernel2_.contains(w.coords()))
                throw NotAnIdeal("kernel1 wedge dx_" + std::to_string(j) +
                                 " leaves the Lambda^2 kernel");
        }
    }
}

CarnotPresentation CarnotPresentation::free_group(int n) {
    if (n < kMinDim || n > kMaxDim) throw UnsupportedDimension("free rank must be in [2, 16]");
    return build(n, RatMatrix::identity(n), RatMatrix::identity(choose2(n)));
}

CarnotPresentation CarnotPresentation::lift_to_free(const StructureSpec& spec) {
    const int n = spec.rank();
    const int m = spec.dim_v2();
    RatMatrix pi2(m, choose2(n));
    int col = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const RatVec z = spec.bracket_of(i, j);
            for (int t = 0; t < m; ++t) pi2.at(t, col) = z[t];
            ++col;
        }
    }
    if (haff::rank(pi2) != m)
        throw HormanderViolation("bracket vectors do not span V2");
    return build(n, RatMatrix::identity(n), std::move(pi2));
}

CarnotPresentation CarnotPresentation::from_kernels(int n, const Subspace& kernel1, const Subspace& kernel2) {
    if (n < kMinDim || n > kMaxDim) throw UnsupportedDimension("free rank must be in [2, 16]");
    if (kernel1.ambient() != n || kernel2.ambient() != choose2(n))
        throw DimensionMismatch("kernel subspaces have wrong ambient dimension");
    if (kernel2.dim() == choose2(n)) throw TrivialV2("quotient has trivial V2");
    return build(n, quotient_matrix(kernel1), quotient_matrix(kernel2));
}

CarnotPresentation CarnotPresentation::quotient(const Subspace& extra1, const Subspace& extra2) const {
    if (extra1.ambient() != r_ || extra2.ambient() != m_)
        throw DimensionMismatch("quotient subspaces must live in V1 / V2 coordinates");
    if (extra2.dim() == m_) throw TrivialV2("quotient has trivial V2");
    return build(n_, quotient_matrix(extra1).mul(pi1_), quotient_matrix(extra2).mul(pi2_));
}

GroupPoint CarnotPresentation::project(const FreePoint& p) const {
    if (p.dim() != n_) throw DimensionMismatch("project: point dimension mismatch");
    return GroupPoint{pi1_.apply(p.theta.coords()), pi2_.apply(p.omega.coords())};
}

FreePoint CarnotPresentation::section(const GroupPoint& g) const {
    auto th = sec1_->solve(g.x);
    auto om = sec2_->solve(g.z);
    if (!th || !om) throw DimensionMismatch("section: point has wrong coordinate sizes");
    return FreePoint(KForm::from_coords(n_, 1, *th), KForm::from_coords(n_, 2, *om));
}

RatVec CarnotPresentation::bracket(const RatVec& x, const RatVec& y) const {
    auto tx = sec1_->solve(x);
    auto ty = sec1_->solve(y);
    if (!tx || !ty) throw DimensionMismatch("bracket: vector size mismatch");
    const KForm w = wedge(KForm::from_coords(n_, 1, *tx), KForm::from_coords(n_, 1, *ty));
    return pi2_.apply(w.coords());
}

GroupPoint CarnotPresentation::mul(const GroupPoint& p, const GroupPoint& q) const {
    return GroupPoint{vec_add(p.x, q.x), vec_add(vec_add(p.z, q.z), bracket(p.x, q.x))};
}

GroupPoint CarnotPresentation::inverse(const GroupPoint& p) const {
    return GroupPoint{vec_scale(Rational(-1), p.x), vec_scale(Rational(-1), p.z)};
}

GroupPoint CarnotPresentation::dilate_g(const Rational& t, const GroupPoint& p) const {
    return GroupPoint{vec_scale(t, p.x), vec_scale(t * t, p.z)};
}

LieSpan3 CarnotPresentation::lie_span3(const RatVec& x1, const RatVec& x2, const RatVec& x3) const {
    const RatMatrix v1 = RatMatrix::from_rows(r_, {x1, x2, x3});
    const RatMatrix v2 = RatMatrix::from_rows(m_, {bracket(x1, x2), bracket(x1, x3), bracket(x2, x3)});
    LieSpan3 out{haff::rank(v1), haff::rank(v2), false};
    out.f3 = out.dim_v1 == 3 && out.dim_v2 == 3;
    return out;
}

bool CarnotPresentation::operator==(const CarnotPresentation& other) const {
    return n_ == other.n_ && r_ == other.r_ && m_ == other.m_ && kernel1_ == other.kernel1_ &&
           kernel2_ == other.kernel2_ && pi1_ == other.pi1_ && pi2_ == other.pi2_;
}

}  // namespace haff
