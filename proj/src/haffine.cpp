#include "haff/haffine.hpp"

#include <map>
#include <sstream>

#include "haff/rng.hpp"

namespace haff {

namespace {

std::string gp_to_string(const GroupPoint& g) {
    return "(x=" + vec_to_string(g.x) + ", z=" + vec_to_string(g.z) + ")";
}

Rational rat_pow(const Rational& t, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= t;
    return out;
}

}  // namespace

PsiTerm::PsiTerm(int k_, KForm eta_) : k(k_), eta(std::move(eta_)) {
    if (k < 0 || k > eta.dim()) throw GradeOverflow("homogeneity degree out of range");
    if (eta.grade() != eta.dim() - k) throw GradeMismatch("eta grade must be dim - degree");
}

Rational PsiTerm::eval(const FreePoint& p) const {
    if (p.dim() != dim()) throw DimensionMismatch("psi term evaluated in wrong dimension");
    if (k % 2 == 0) return volume_coefficient(wedge(wedge_power(p.omega, k / 2), eta));
    return volume_coefficient(wedge(p.theta, wedge(wedge_power(p.omega, (k - 1) / 2), eta)));
}

bool descends(const CarnotPresentation& pres, const KForm& eta) {
    if (eta.dim() != pres.n()) throw DimensionMismatch("descends: dimension mismatch");
    for (int b = 0; b < pres.kernel1().dim(); ++b) {
        const KForm th = KForm::from_coords(pres.n(), 1, pres.kernel1().basis_vector(b));
        auto w = try_wedge(th, eta);
        if (w && !w->is_zero()) return false;
    }
    for (int b = 0; b < pres.kernel2().dim(); ++b) {
        const KForm om = KForm::from_coords(pres.n(), 2, pres.kernel2().basis_vector(b));
        auto w = try_wedge(om, eta);
        if (w && !w->is_zero()) return false;
    }
    return true;
}

HAffineMap::HAffineMap(CarnotPresentation pres, std::vector<PsiTerm> terms)
    : pres_(std::move(pres)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (t.dim() != pres_.n()) throw DimensionMismatch("term dimension mismatch");
        if (!descends(pres_, t.eta))
            throw std::invalid_argument("psi term does not descend through the presentation");
    }
}

Rational HAffineMap::operator()(const GroupPoint& g) const { return eval_free(pres_.section(g)); }

Rational HAffineMap::eval_free(const FreePoint& p) const {
    Rational acc(0);
    for (const auto& t : terms_) acc += t.eval(p);
    return acc;
}

std::string HAffineMap::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << "psi[" << terms_[i].k << "]{" << terms_[i].eta.to_string() << "}";
    }
    return os.str();
}

AnnihilatorPair wedge_annihilators(const KForm& eta) {
    const int n = eta.dim();
    const int g = eta.grade();
    auto annihilator = [&](int probe_grade) -> Subspace {
        const auto& probes = lex_blades(n, probe_grade);
        const int cols = static_cast<int>(probes.size());
        if (g + probe_grade > n) return Subspace::full(cols);
        const auto& target = lex_blades(n, g + probe_grade);
        std::map<BladeBits, int> row_of;
        for (size_t i = 0; i < target.size(); ++i) row_of[target[i]] = static_cast<int>(i);
        RatMatrix m(static_cast<int>(target.size()), cols);
        for (int c = 0; c < cols; ++c) {
            const KForm w = wedge(KForm::blade_form(n, probes[c]), eta);
            for (const auto& [bits, coeff] : w.terms()) m.at(row_of.at(bits), c) = coeff;
        }
        return null_space(m);
    };
    return AnnihilatorPair{annihilator(1), annihilator(2)};
}

Subspace lambda_space(const CarnotPresentation& pres, int k) {
    const int n = pres.n();
    if (k < 0 || k > n) throw GradeOverflow("lambda_space: grade out of range");
    const auto& unknowns = lex_blades(n, k);
    const int cols = static_cast<int>(unknowns.size());
    std::vector<RatVec> rows;
    auto add_conditions = [&](const KForm& kernel_form) {
        const int tg = kernel_form.grade() + k;
        if (tg > n) return;  // wedge lands above the top grade: no condition
        const auto& target = lex_blades(n, tg);
        std::map<BladeBits, int> row_of;
        for (size_t i = 0; i < target.size(); ++i) row_of[target[i]] = static_cast<int>(i);
        std::vector<RatVec> block(target.size(), RatVec(cols, Rational(0)));
        for (int c = 0; c < cols; ++c) {
            const KForm w = wedge(kernel_form, KForm::blade_form(n, unknowns[c]));
            for (const auto& [bits, coeff] : w.terms()) block[row_of.at(bits)][c] = coeff;
        }
        for (auto& r : block) {
            if (!vec_is_zero(r)) rows.push_back(std::move(r));
        }
    };
    for (int b = 0; b < pres.kernel1().dim(); ++b)
        add_conditions(KForm::from_coords(n, 1, pres.kernel1().basis_vector(b)));
    for (int b = 0; b < pres.kernel2().dim(); ++b)
        add_conditions(KForm::from_coords(n, 2, pres.kernel2().basis_vector(b)));
    if (rows.empty()) return Subspace::full(cols);
    return null_space(RatMatrix::from_rows(cols, rows));
}

namespace {

// No kernel condition applies at grade k: either kernel component is empty
// or its wedge with a grade-k form overflows the top grade.
bool lambda_unconstrained(const CarnotPresentation& pres, int k) {
    const bool theta_rows = pres.kernel1().dim() > 0 && k + 1 <= pres.n();
    const bool omega_rows = pres.kernel2().dim() > 0 && k + 2 <= pres.n();
    return !theta_rows && !omega_rows;
}

}  // namespace

int lambda_dim(const CarnotPresentation& pres, int k) {
    if (k < 0 || k > pres.n()) throw GradeOverflow("lambda_dim: grade out of range");
    if (lambda_unconstrained(pres, k)) return static_cast<int>(lex_blades(pres.n(), k).size());
    return lambda_space(pres, k).dim();
}

std::vector<int> lambda_dims(const CarnotPresentation& pres) {
    const int lo = pres.n() - pres.rank();
    std::vector<int> dims(pres.rank() + 1, 0);
    std::vector<int> constrained;
    for (size_t i = 0; i < dims.size(); ++i) {
        const int k = lo + static_cast<int>(i);
        if (lambda_unconstrained(pres, k))
            dims[i] = static_cast<int>(lex_blades(pres.n(), k).size());
        else
            constrained.push_back(static_cast<int>(i));
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t t = 0; t < constrained.size(); ++t)
        dims[constrained[t]] = lambda_space(pres, lo + constrained[t]).dim();
    return dims;
}

std::vector<HAffineMap> haffine_basis(const CarnotPresentation& pres) {
    const int n = pres.n();
    const int lo = n - pres.rank();
    std::vector<HAffineMap> out;
    for (int g = n; g >= lo; --g) {
        if (lambda_unconstrained(pres, g)) {
            for (BladeBits bits : lex_blades(n, g))
                out.emplace_back(pres, std::vector<PsiTerm>{PsiTerm(n - g, KForm::blade_form(n, bits))});
            continue;
        }
        const Subspace s = lambda_space(pres, g);
        for (int b = 0; b < s.dim(); ++b) {
            out.emplace_back(pres, std::vector<PsiTerm>{PsiTerm(n - g, KForm::from_coords(n, g, s.basis_vector(b)))});
        }
    }
    return out;
}

int dim_haffine(const CarnotPresentation& pres) {
    int total = 0;
    for (int d : lambda_dims(pres)) total += d;
    return total;
}

int dim_affine(const CarnotPresentation& pres) {
    const int direct = 1 + pres.rank() + pres.dim_v2();
    int from_lambdas = 0;
    for (int g = pres.n() - 2; g <= pres.n(); ++g) from_lambdas += lambda_dim(pres, g);
    if (direct != from_lambdas)
        throw std::logic_error("affine dimension cross-check failed");
    return direct;
}

Classification classify(const CarnotPresentation& pres) {
    if (pres.rank() == 2) return Classification{true, std::nullopt};
    const int g = pres.n() - 3;
    if (lambda_unconstrained(pres, g)) {
        // the full space in canonical form leads with the first lex blade
        return Classification{false, KForm::blade_form(pres.n(), lex_blades(pres.n(), g)[0])};
    }
    const Subspace s = lambda_space(pres, g);
    if (s.dim() == 0) return Classification{true, std::nullopt};
    return Classification{false, KForm::from_coords(pres.n(), g, s.basis_vector(0))};
}

std::optional<RatMatrix> bilinear_witness(const CarnotPresentation& pres) {
    const int r = pres.rank();
    const int m = pres.dim_v2();
    auto e = [&](int i) {
        RatVec v(r, Rational(0));
        v[i] = 1;
        return v;
    };
    std::vector<RatVec> rows;
    // b(e_i, [e_i, e_k]) = 0
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < r; ++k) {
            if (k == i) continue;
            const RatVec z = pres.bracket(e(i), e(k));
            if (vec_is_zero(z)) continue;
            RatVec row(r * m, Rational(0));
            for (int t = 0; t < m; ++t) row[i * m + t] = z[t];
            rows.push_back(std::move(row));
        }
    }
    // b(e_i, [e_j, e_k]) + b(e_j, [e_i, e_k]) = 0 for i < j
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            for (int k = 0; k < r; ++k) {
                const RatVec zjk = pres.bracket(e(j), e(k));
                const RatVec zik = pres.bracket(e(i), e(k));
                if (vec_is_zero(zjk) && vec_is_zero(zik)) continue;
                RatVec row(r * m, Rational(0));
                for (int t = 0; t < m; ++t) {
                    row[i * m + t] += zjk[t];
                    row[j * m + t] += zik[t];
                }
                rows.push_back(std::move(row));
            }
        }
    }
    const Subspace sols = rows.empty() ? Subspace::full(r * m) : null_space(RatMatrix::from_rows(r * m, rows));
    if (sols.dim() == 0) return std::nullopt;
    const RatVec v = sols.basis_vector(0);
    RatMatrix b(r, m);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < m; ++t) b.at(i, t) = v[i * m + t];
    return b;
}

std::optional<std::array<RatVec, 3>> find_f3_subgroup(const CarnotPresentation& pres) {
    auto witness = bilinear_witness(pres);
    if (!witness) return std::nullopt;
    const int r = pres.rank();
    const int m = pres.dim_v2();
    auto e = [&](int i) {
        RatVec v(r, Rational(0));
        v[i] = 1;
        return v;
    };
    int x1 = -1;
    for (int i = 0; i < r && x1 < 0; ++i) {
        for (int t = 0; t < m; ++t) {
            if (!is_zero(witness->at(i, t))) {
                x1 = i;
                break;
            }
        }
    }
    if (x1 < 0) throw std::logic_error("bilinear witness is zero");
    for (int j = 0; j < r; ++j) {
        for (int k = j + 1; k < r; ++k) {
            const RatVec z = pres.bracket(e(j), e(k));
            Rational val(0);
            for (int t = 0; t < m; ++t) val += witness->at(x1, t) * z[t];
            if (is_zero(val)) continue;
            std::array<RatVec, 3> triple{e(x1), e(j), e(k)};
            if (!pres.lie_span3(triple[0], triple[1], triple[2]).f3)
                throw std::logic_error("constructed triple does not span a rank-3 bracket");
            return triple;
        }
    }
    throw std::logic_error("bilinear witness admits no bracket pair");
}

CartanDivision cartan_divide(const std::vector<KForm>& images) {
    if (images.empty()) throw DimensionMismatch("cartan_divide: no images given");
    const int n = images[0].dim();
    const int k = images[0].grade();
    if (static_cast<int>(images.size()) != n)
        throw DimensionMismatch("cartan_divide: need one image per basis one-form");
    for (const auto& f : images) {
        if (f.dim() != n || f.grade() != k) throw GradeMismatch("cartan_divide: images must share one grade");
    }
    if (k < 1) throw GradeMismatch("cartan_divide: image grade must be at least 1");

    auto image_of = [&](const KForm& theta) {
        KForm acc(n, k);
        const RatVec c = theta.coords();
        for (int j = 0; j < n; ++j) {
            if (!is_zero(c[j])) acc = acc + images[j].scaled(c[j]);
        }
        return acc;
    };
    auto violates = [&](const KForm& theta) -> bool {
        auto w = try_wedge(theta, image_of(theta));
        return w && !w->is_zero();
    };
    // The hypothesis is quadratic in theta, so basis vectors and pairwise
    // sums decide it.
    for (int i = 1; i <= n; ++i) {
        const KForm th = KForm::basis_one_form(n, i);
        if (violates(th)) return CartanDivision{std::nullopt, th};
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const KForm th = KForm::basis_one_form(n, i) + KForm::basis_one_form(n, j);
            if (violates(th)) return CartanDivision{std::nullopt, th};
        }
    }

    KForm eta(n, k - 1);
    for (BladeBits ibits : lex_blades(n, k - 1)) {
        bool have = false;
        Rational value(0);
        for (int i = 1; i <= n; ++i) {
            const BladeBits bi = BladeBits(1) << (i - 1);
            if (ibits & bi) continue;
            Rational cand = images[i - 1].coefficient(ibits | bi);
            if (merge_sign(bi, ibits) < 0) cand = -cand;
            if (!have) {
                value = cand;
                have = true;
            } else if (cand != value) {
                throw std::logic_error("cartan_divide: quotient coefficient is not well defined");
            }
        }
        eta.accumulate(ibits, value);
    }
    for (int j = 1; j <= n; ++j) {
        if (!(wedge(KForm::basis_one_form(n, j), eta) == images[j - 1]))
            throw std::logic_error("cartan_divide: reconstructed quotient fails verification");
    }
    return CartanDivision{eta, std::nullopt};
}

RatVec dilation_coefficients(const FreeMap& f, const FreePoint& p) {
    const int n = p.dim();
    RatMatrix vand(n + 1, n + 1);
    RatVec rhs(n + 1);
    for (int s = 1; s <= n + 1; ++s) {
        const Rational t = rat(s);
        for (int j = 0; j <= n; ++j) vand.at(s - 1, j) = rat_pow(t, j);
        rhs[s - 1] = f(dilate(t, p));
    }
    auto sol = solve_particular(vand, rhs);
    if (!sol) throw std::logic_error("polynomial fit failed");  // Vandermonde is invertible
    return *sol;
}

std::vector<FreePoint> structured_points(int n, int k) {
    const int pairs_wanted = k / 2;
    std::vector<KForm> omegas;
    const auto& two_blades = lex_blades(n, 2);
    // all sets of pairwise disjoint basis 2-blades with size <= pairs_wanted
    std::function<void(size_t, BladeBits, const KForm&, int)> rec =
        [&](size_t start, BladeBits used, const KForm& acc, int remaining) {
            omegas.push_back(acc);
            if (remaining == 0) return;
            for (size_t t = start; t < two_blades.size(); ++t) {
                if (two_blades[t] & used) continue;
                rec(t + 1, used | two_blades[t], acc + KForm::blade_form(n, two_blades[t]), remaining - 1);
            }
        };
    rec(0, 0, KForm(n, 2), pairs_wanted);

    std::vector<FreePoint> out;
    if (k % 2 == 0) {
        for (const auto& om : omegas) out.emplace_back(KForm(n, 1), om);
    } else {
        for (int i = 1; i <= n; ++i) {
            for (const auto& om : omegas) out.emplace_back(KForm::basis_one_form(n, i), om);
        }
    }
    return out;
}

KForm recover_coefficient_form(const std::vector<std::pair<FreePoint, Rational>>& samples, int n, int k) {
    if (k < 0 || k > n) throw GradeOverflow("recover_coefficient_form: degree out of range");
    const int g = n - k;
    const auto& unknowns = lex_blades(n, g);
    const int cols = static_cast<int>(unknowns.size());
    const BladeBits full = (BladeBits(1) << n) - 1;
    std::vector<RatVec> rows;
    RatVec rhs;
    for (const auto& [p, value] : samples) {
        if (p.dim() != n) throw DimensionMismatch("sample point dimension mismatch");
        KForm w = wedge_power(p.omega, k / 2);
        if (k % 2 == 1) w = wedge(p.theta, w);
        RatVec row(cols, Rational(0));
        for (int c = 0; c < cols; ++c) {
            const BladeBits comp = full & ~unknowns[c];
            Rational coeff = w.coefficient(comp);
            if (is_zero(coeff)) continue;
            if (merge_sign(comp, unknowns[c]) < 0) coeff = -coeff;
            row[c] = coeff;
        }
        rows.push_back(std::move(row));
        rhs.push_back(value);
    }
    const RatMatrix a = RatMatrix::from_rows(cols, rows);
    if (rank(a) < cols) throw UnderdeterminedSamples("samples do not determine the coefficient form");
    auto sol = solve_particular(a, rhs);
    if (!sol) throw std::invalid_argument("samples are inconsistent with a polynomial coefficient");
    return KForm::from_coords(n, g, *sol);
}

ProbeResult verify_h_affinity(const GroupMap& f, const CarnotPresentation& pres, uint64_t seed,
                              int trials) {
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed, static_cast<uint64_t>(trial));
        const GroupPoint p = rng.gpoint(pres);
        const RatVec y = rng.nonzero_vec(pres.rank());
        const RatVec zero(pres.dim_v2(), Rational(0));
        const GroupPoint step{y, zero};
        const GroupPoint step2{vec_scale(rat(2), y), zero};
        const Rational diff = f(pres.mul(p, step2)) - 2 * f(pres.mul(p, step)) + f(p);
        if (!is_zero(diff)) {
            return ProbeResult{false, "second difference " + rat_to_string(diff) + " along p=" +
                                          gp_to_string(p) + ", y=" + vec_to_string(y)};
        }
    }
    return ProbeResult{true, ""};
}

MetivierProbe metivier_probe(const CarnotPresentation& pres, uint64_t seed, int trials) {
    const int r = pres.rank();
    const int m = pres.dim_v2();
    auto surjective = [&](const RatVec& x) {
        RatMatrix ad(m, r);
        for (int j = 0; j < r; ++j) {
            RatVec ej(r, Rational(0));
            ej[j] = 1;
            const RatVec z = pres.bracket(x, ej);
            for (int t = 0; t < m; ++t) ad.at(t, j) = z[t];
        }
        return rank(ad) == m;
    };
    std::vector<RatVec> probes;
    for (int i = 0; i < r; ++i) {
        RatVec v(r, Rational(0));
        v[i] = 1;
        probes.push_back(v);
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            RatVec v(r, Rational(0));
            v[i] = 1;
            v[j] = 1;
            probes.push_back(v);
        }
    }
    for (const auto& x : probes) {
        if (!surjective(x)) return MetivierProbe{false, x};
    }
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed, static_cast<uint64_t>(trial));
        const RatVec x = rng.nonzero_vec(r);
        if (!surjective(x)) return MetivierProbe{false, x};
    }
    return MetivierProbe{true, std::nullopt};
}

ProbeResult monotone_line_check(const HAffineMap& f, uint64_t seed, int trials,
                                const std::vector<Rational>& t_grid) {
    const CarnotPresentation& pres = f.presentation();
    const RatVec zero(pres.dim_v2(), Rational(0));
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed, static_cast<uint64_t>(trial));
        const GroupPoint p = rng.gpoint(pres);
        const RatVec y = rng.nonzero_vec(pres.rank());
        int last_sign = 0;
        int changes = 0;
        for (const Rational& t : t_grid) {
            const Rational v = f(pres.mul(p, GroupPoint{vec_scale(t, y), zero}));
            const int s = sgn(v);
            if (s != 0) {
                if (last_sign != 0 && s != last_sign) ++changes;
                last_sign = s;
            }
        }
        if (changes > 1) {
            return ProbeResult{false, "sign changes " + std::to_string(changes) + " along p=" +
                                          gp_to_string(p) + ", y=" + vec_to_string(y)};
        }
    }
    return ProbeResult{true, ""};
}

std::vector<Rational> default_t_grid() {
    return {rat(-3), rat(-2), rat(-3, 2), rat(-1), rat(-1, 2), rat(0),
            rat(1, 2), rat(1), rat(3, 2), rat(2), rat(3)};
}

}  // namespace haff
