#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "haff/errors.hpp"
#include "haff/linalg.hpp"
#include "haff/rational.hpp"

namespace haff {

// Total blade space is 2^n, so the ambient dimension is capped.
constexpr int kMinDim = 2;
constexpr int kMaxDim = 16;

// A blade is an index set J in {1,...,n}, encoded with bit j-1 <-> dx_j.
using BladeBits = uint32_t;

int blade_grade(BladeBits bits);

/// All grade-k blades over R^n in lexicographic order of their increasing
/// index tuples: (1,2) < (1,3) < ... < (1,n) < (2,3) < ...
/// This ordering fixes the coordinates of every Lambda^k throughout.
const std::vector<BladeBits>& lex_blades(int n, int k);

/// Sign of dx_J ^ dx_K relative to the merged canonical blade; J, K disjoint.
int merge_sign(BladeBits a, BladeBits b);

std::string blade_to_string(BladeBits bits);

/// Alternating k-form over R^n with rational coefficients on canonical
/// blades. Zero coefficients are never stored, so equality is map equality.
class KForm {
  public:
    KForm(int dim, int grade);

    static KForm scalar(int dim, const Rational& c);
    static KForm blade_form(int dim, BladeBits bits, const Rational& c = Rational(1));
    static KForm basis_one_form(int dim, int j);  // dx_j, 1-based
    static KForm volume_form(int dim);
    static KForm from_coords(int dim, int grade, const RatVec& coords);

    int dim() const { return dim_; }
    int grade() const { return grade_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<BladeBits, Rational>& terms() const { return terms_; }
    Rational coefficient(BladeBits bits) const;
    RatVec coords() const;  // lexicographic blade order

    void accumulate(BladeBits bits, const Rational& c);

    KForm operator+(const KForm& other) const;
    KForm operator-(const KForm& other) const;
    KForm operator-() const;
    KForm scaled(const Rational& c) const;

    bool operator==(const KForm& other) const = default;

    std::string to_string() const;

  private:
    int dim_;
    int grade_;
    std::map<BladeBits, Rational> terms_;
};

/// Exterior product. Throws GradeOverflow when the result grade would exceed
/// the ambient dimension; callers that want "grade > n means zero" use
/// try_wedge instead.
KForm wedge(const KForm& a, const KForm& b);

/// Like wedge, but reports the semantically-zero overflow case as nullopt.
std::optional<KForm> try_wedge(const KForm& a, const KForm& b);

/// k-fold exterior power; wedge_power(w, 0) is the scalar 1.
KForm wedge_power(const KForm& omega, int k);

/// The unique c with a = c * dx_1^...^dx_n; requires grade(a) = n.
Rational volume_coefficient(const KForm& a);

/// The C(n,k) basis blades of Lambda^k(R^n) in lexicographic order.
std::vector<KForm> basis_kforms(int n, int k);

}  // namespace haff
