#include "haff/rational.hpp"

#include <cctype>

namespace haff {

std::optional<Rational> rat_from_string(const std::string& s) {
    size_t i = 0;
    auto digits = [&](size_t from) -> size_t {
        size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && s[i] == '-') ++i;
    size_t num_end = digits(i);
    if (num_end == i) return std::nullopt;
    if (num_end == s.size()) {
        Rational q(s, 10);
        q.canonicalize();
        return q;
    }
    if (s[num_end] != '/') return std::nullopt;
    size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != s.size()) return std::nullopt;
    Rational q(s, 10);
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

}  // namespace haff
