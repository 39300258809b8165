#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haff/errors.hpp"
#include "haff/rational.hpp"

namespace haff {

using RatVec = std::vector<Rational>;

std::string vec_to_string(const RatVec& v);  // "(a, b, c)"
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rational& c, const RatVec& v);
bool vec_is_zero(const RatVec& v);

/// Dense rational matrix, row-major.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix from_rows(int cols, const std::vector<RatVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatVec row(int i) const;
    RatVec apply(const RatVec& v) const;  // matrix * column vector
    RatMatrix mul(const RatMatrix& other) const;

    void append_row(const RatVec& r);

    bool operator==(const RatMatrix& other) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<int> pivots;  // pivot column per nonzero row, increasing
};

/// Exact reduced row echelon form. Pivot = first nonzero entry scanning
/// columns left to right, rows top to bottom; pivots normalized to 1.
/// Elimination runs the OpenMP kernel on large inputs.
RrefResult rref(const RatMatrix& m);

/// Single-threaded reference for the same computation. rref() must agree
/// with this bit for bit; the test suite checks that.
RrefResult rref_serial(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Linear subspace of Q^ambient held as a canonical RREF basis, so equal
/// subspaces compare equal coordinate-wise.
class Subspace {
  public:
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<RatVec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    RatVec basis_vector(int i) const { return basis_.row(i); }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const RatVec& v) const;
    bool leq(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

  private:
    Subspace() = default;
    int ambient_ = 0;
    RatMatrix basis_;  // rows = basis vectors, RREF form
    std::vector<int> pivots_;
};

/// Basis of {v : m v = 0}, dim = cols - rank, canonicalized.
Subspace null_space(const RatMatrix& m);

/// The solution of m x = b whose free coordinates (per rref pivot structure)
/// are all zero; nullopt when b is outside the column space.
std::optional<RatVec> solve_particular(const RatMatrix& m, const RatVec& b);

/// Factors m once so that many right-hand sides can be solved cheaply.
/// solve() returns the same zero-free-variable solution as solve_particular.
class SolveCache {
  public:
    explicit SolveCache(const RatMatrix& m);
    std::optional<RatVec> solve(const RatVec& b) const;
    int rows() const { return rows_; }
    int cols() const { return cols_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    RatMatrix reduced_;        // rref of m
    RatMatrix row_ops_;        // E with reduced_ = E * m
    std::vector<int> pivots_;
};

/// Canonical surjection q of Q^N onto Q^(N-dim kernel) with ker q = kernel:
/// reduce modulo the kernel basis, then read off the non-pivot coordinates.
RatMatrix quotient_matrix(const Subspace& kernel);

}  // namespace haff
