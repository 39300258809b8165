#include "haff/linalg.hpp"

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace haff {

namespace {

// Narrow or short systems stay on the single-threaded path: per-pivot
// fork/join costs more than the row updates unless rows are both many and
// wide. Measured crossover on small-entry wedge systems sits near 100x100.
constexpr int kParallelMinRows = 96;
constexpr int kParallelMinCols = 96;

// In-place Gauss-Jordan over columns [0, pivot_limit); row operations span
// all columns, so callers can augment m on the right to track them.
std::vector<int> eliminate(RatMatrix& m, int pivot_limit, bool parallel) {
    std::vector<int> pivots;
    const int rows = m.rows();
    const int cols = m.cols();
    int next_row = 0;
    for (int col = 0; col < pivot_limit && next_row < rows; ++col) {
        int pr = -1;
        for (int r = next_row; r < rows; ++r) {
            if (!is_zero(m.at(r, col))) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != next_row) {
            for (int j = col; j < cols; ++j) std::swap(m.at(pr, j), m.at(next_row, j));
        }
        if (m.at(next_row, col) != 1) {
            const Rational inv = 1 / Rational(m.at(next_row, col));
            for (int j = col; j < cols; ++j) {
                if (!is_zero(m.at(next_row, j))) m.at(next_row, j) *= inv;
            }
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
        for (int r = 0; r < rows; ++r) {
            if (r == next_row || is_zero(m.at(r, col))) continue;
            const Rational f = m.at(r, col);
            for (int j = col; j < cols; ++j) {
                if (!is_zero(m.at(next_row, j))) m.at(r, j) -= f * m.at(next_row, j);
            }
        }
        pivots.push_back(col);
        ++next_row;
    }
    (void)parallel;
    return pivots;
}

bool want_parallel(const RatMatrix& m) {
#ifdef _OPENMP
    return m.rows() >= kParallelMinRows && m.cols() >= kParallelMinCols && omp_get_max_threads() > 1;
#else
    (void)m;
    return false;
#endif
}

}  // namespace

std::string vec_to_string(const RatVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: size mismatch");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_sub: size mismatch");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec vec_scale(const Rational& c, const RatVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool vec_is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(int cols, const std::vector<RatVec>& rows) {
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw DimensionMismatch("from_rows: row length mismatch");
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

RatVec RatMatrix::row(int i) const {
    RatVec out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("apply: size mismatch");
    RatVec out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i) {
        Rational acc(0);
        for (int j = 0; j < cols_; ++j) {
            if (!is_zero(at(i, j)) && !is_zero(v[j])) acc += at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("mul: inner dimension mismatch");
    RatMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            if (is_zero(at(i, k))) continue;
            for (int j = 0; j < other.cols_; ++j) {
                if (!is_zero(other.at(k, j))) out.at(i, j) += at(i, k) * other.at(k, j);
            }
        }
    }
    return out;
}

void RatMatrix::append_row(const RatVec& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("append_row: length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

RrefResult rref(const RatMatrix& m) {
    RrefResult res{m, {}};
    res.pivots = eliminate(res.mat, m.cols(), want_parallel(m));
    return res;
}

RrefResult rref_serial(const RatMatrix& m) {
    RrefResult res{m, {}};
    res.pivots = eliminate(res.mat, m.cols(), false);
    return res;
}

int rank(const RatMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RatMatrix(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RatMatrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (int i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<RatVec>& vectors) {
    RrefResult r = rref(RatMatrix::from_rows(ambient, vectors));
    Subspace s;
    s.ambient_ = ambient;
    s.pivots_ = r.pivots;
    s.basis_ = RatMatrix(static_cast<int>(r.pivots.size()), ambient);
    for (int i = 0; i < s.basis_.rows(); ++i)
        for (int j = 0; j < ambient; ++j) s.basis_.at(i, j) = r.mat.at(i, j);
    return s;
}

bool Subspace::contains(const RatVec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("contains: size mismatch");
    RatVec w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        const Rational c = w[pivots_[i]];
        if (is_zero(c)) continue;
        for (int j = pivots_[i]; j < ambient_; ++j) {
            if (!is_zero(basis_.at(i, j))) w[j] -= c * basis_.at(i, j);
        }
    }
    return vec_is_zero(w);
}

bool Subspace::leq(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("leq: ambient mismatch");
    for (int i = 0; i < dim(); ++i) {
        if (!other.contains(basis_vector(i))) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionMismatch("sum: ambient mismatch");
    std::vector<RatVec> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
    for (int i = 0; i < other.dim(); ++i) rows.push_back(other.basis_vector(i));
    return span(ambient_, rows);
}

Subspace null_space(const RatMatrix& m) {
    RrefResult r = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(n, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

std::optional<RatVec> solve_particular(const RatMatrix& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("solve: rhs size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = eliminate(aug, m.cols(), want_parallel(m));
    for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i) {
        if (!is_zero(aug.at(i, m.cols()))) return std::nullopt;
    }
    RatVec x(m.cols(), Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

SolveCache::SolveCache(const RatMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    RatMatrix aug(rows_, cols_ + rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    pivots_ = eliminate(aug, cols_, want_parallel(m));
    reduced_ = RatMatrix(rows_, cols_);
    row_ops_ = RatMatrix(rows_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) reduced_.at(i, j) = aug.at(i, j);
        for (int j = 0; j < rows_; ++j) row_ops_.at(i, j) = aug.at(i, cols_ + j);
    }
}

std::optional<RatVec> SolveCache::solve(const RatVec& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DimensionMismatch("solve: rhs size mismatch");
    RatVec c = row_ops_.apply(b);
    for (int i = static_cast<int>(pivots_.size()); i < rows_; ++i) {
        if (!is_zero(c[i])) return std::nullopt;
    }
    RatVec x(cols_, Rational(0));
    for (size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = c[i];
    return x;
}

RatMatrix quotient_matrix(const Subspace& kernel) {
    const int n = kernel.ambient();
    std::vector<bool> is_pivot(n, false);
    for (int p : kernel.pivots()) is_pivot[p] = true;
    RatMatrix q(n - kernel.dim(), n);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        q.at(out, f) = 1;
        for (int i = 0; i < kernel.dim(); ++i) q.at(out, kernel.pivots()[i]) = -kernel.basis().at(i, f);
        ++out;
    }
    return q;
}

}  // namespace haff
