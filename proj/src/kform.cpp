#include "haff/kform.hpp"

#include <bit>
#include <mutex>
#include <sstream>

namespace haff {

namespace {

void check_dim(int dim) {
    if (dim < kMinDim || dim > kMaxDim) throw UnsupportedDimension("dimension must be in [2, 16]");
}

void enumerate_blades(int n, int k, int next_index, BladeBits acc, std::vector<BladeBits>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (int j = next_index; j <= n - k + 1; ++j) {
        enumerate_blades(n, k - 1, j + 1, acc | (BladeBits(1) << (j - 1)), out);
    }
}

}  // namespace

int blade_grade(BladeBits bits) { return std::popcount(bits); }

const std::vector<BladeBits>& lex_blades(int n, int k) {
    static std::map<std::pair<int, int>, std::vector<BladeBits>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    std::vector<BladeBits> blades;
    enumerate_blades(n, k, 1, 0, blades);
    return cache.emplace(std::pair{n, k}, std::move(blades)).first->second;
}

int merge_sign(BladeBits a, BladeBits b) {
    // parity of the number of pairs (x in a, y in b) with x > y
    int inversions = 0;
    BladeBits rest = b;
    while (rest) {
        const int y = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(a >> (y + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

std::string blade_to_string(BladeBits bits) {
    if (bits == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < kMaxDim; ++j) {
        if (bits & (BladeBits(1) << j)) {
            if (!first) os << "^";
            os << "dx_" << (j + 1);
            first = false;
        }
    }
    return os.str();
}

KForm::KForm(int dim, int grade) : dim_(dim), grade_(grade) {
    check_dim(dim);
    if (grade < 0 || grade > dim) throw GradeOverflow("form grade out of range");
}

KForm KForm::scalar(int dim, const Rational& c) {
    KForm f(dim, 0);
    f.accumulate(0, c);
    return f;
}

KForm KForm::blade_form(int dim, BladeBits bits, const Rational& c) {
    KForm f(dim, blade_grade(bits));
    if (bits >= (BladeBits(1) << dim)) throw DimensionMismatch("blade index beyond dimension");
    f.accumulate(bits, c);
    return f;
}

KForm KForm::basis_one_form(int dim, int j) {
    if (j < 1 || j > dim) throw DimensionMismatch("basis one-form index out of range");
    return blade_form(dim, BladeBits(1) << (j - 1));
}

KForm KForm::volume_form(int dim) {
    check_dim(dim);
    return blade_form(dim, (BladeBits(1) << dim) - 1);
}

KForm KForm::from_coords(int dim, int grade, const RatVec& coords) {
    const auto& blades = lex_blades(dim, grade);
    if (coords.size() != blades.size()) throw DimensionMismatch("coordinate count mismatch");
    KForm f(dim, grade);
    for (size_t i = 0; i < blades.size(); ++i) f.accumulate(blades[i], coords[i]);
    return f;
}

Rational KForm::coefficient(BladeBits bits) const {
    auto it = terms_.find(bits);
    return it == terms_.end() ? Rational(0) : it->second;
}

RatVec KForm::coords() const {
    const auto& blades = lex_blades(dim_, grade_);
    RatVec out(blades.size());
    for (size_t i = 0; i < blades.size(); ++i) out[i] = coefficient(blades[i]);
    return out;
}

void KForm::accumulate(BladeBits bits, const Rational& c) {
    if (haff::is_zero(c)) return;
    if (blade_grade(bits) != grade_) throw GradeMismatch("blade grade does not match form grade");
    auto [it, inserted] = terms_.emplace(bits, c);
    if (!inserted) {
        it->second += c;
        if (haff::is_zero(it->second)) terms_.erase(it);
    }
}

KForm KForm::operator+(const KForm& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("form addition: dimension mismatch");
    if (grade_ != other.grade_) throw GradeMismatch("form addition: grade mismatch");
    KForm out = *this;
    for (const auto& [bits, c] : other.terms_) out.accumulate(bits, c);
    return out;
}

KForm KForm::operator-(const KForm& other) const { return *this + (-other); }

KForm KForm::operator-() const { return scaled(Rational(-1)); }

KForm KForm::scaled(const Rational& c) const {
    KForm out(dim_, grade_);
    if (haff::is_zero(c)) return out;
    for (const auto& [bits, v] : terms_) out.terms_.emplace(bits, c * v);
    return out;
}

std::string KForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (BladeBits bits : lex_blades(dim_, grade_)) {
        auto it = terms_.find(bits);
        if (it == terms_.end()) continue;
        if (!first) os << " + ";
        os << rat_to_string(it->second);
        if (bits != 0) os << "*" << blade_to_string(bits);
        first = false;
    }
    return os.str();
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge: dimension mismatch");
    if (a.grade() + b.grade() > a.dim()) throw GradeOverflow("wedge: result grade exceeds dimension");
    KForm out(a.dim(), a.grade() + b.grade());
    for (const auto& [abits, ac] : a.terms()) {
        for (const auto& [bbits, bc] : b.terms()) {
            if (abits & bbits) continue;
            Rational prod = ac * bc;
            if (merge_sign(abits, bbits) < 0) prod = -prod;
            out.accumulate(abits | bbits, prod);
        }
    }
    return out;
}

std::optional<KForm> try_wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge: dimension mismatch");
    if (a.grade() + b.grade() > a.dim()) return std::nullopt;
    return wedge(a, b);
}

KForm wedge_power(const KForm& omega, int k) {
    if (k < 0) throw GradeOverflow("wedge_power: negative exponent");
    if (omega.grade() * k > omega.dim()) throw GradeOverflow("wedge_power: result grade exceeds dimension");
    KForm out = KForm::scalar(omega.dim(), Rational(1));
    for (int i = 0; i < k; ++i) out = wedge(out, omega);
    return out;
}

Rational volume_coefficient(const KForm& a) {
    if (a.grade() != a.dim()) throw GradeMismatch("volume_coefficient: form grade is not top");
    return a.coefficient((BladeBits(1) << a.dim()) - 1);
}

std::vector<KForm> basis_kforms(int n, int k) {
    check_dim(n);
    if (k < 0 || k > n) throw GradeOverflow("basis_kforms: grade out of range");
    std::vector<KForm> out;
    for (BladeBits bits : lex_blades(n, k)) out.push_back(KForm::blade_form(n, bits));
    return out;
}

}  // namespace haff
