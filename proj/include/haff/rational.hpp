#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace haff {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which is what subspace equality and all "= 0" decisions
// in this library rely on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Renders as "p" or "p/q" with q > 0.
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

// Accepts optionally signed decimal integers and "p/q" fractions.
// Returns nullopt on any other shape (whitespace, hex, empty, q == 0).
std::optional<Rational> rat_from_string(const std::string& s);

}  // namespace haff
