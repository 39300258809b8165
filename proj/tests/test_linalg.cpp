#include "doctest.h"

#include "haff/checks.hpp"
#include "haff/linalg.hpp"

using namespace haff;

namespace {

RatMatrix mat(int rows, int cols, std::vector<long> entries) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rat(entries[static_cast<size_t>(i) * cols + j]);
    return m;
}

RatVec vec(std::vector<long> entries) {
    RatVec v;
    for (long e : entries) v.push_back(rat(e));
    return v;
}

}  // namespace

TEST_CASE("rref of fixed matrices") {
    const RrefResult a = rref(mat(2, 2, {2, 4, 1, 2}));
    CHECK(a.mat == mat(2, 2, {1, 2, 0, 0}));
    CHECK(a.pivots == std::vector<int>{0});

    const RrefResult b = rref(RatMatrix::identity(3));
    CHECK(b.mat == RatMatrix::identity(3));
    CHECK(b.pivots == std::vector<int>{0, 1, 2});

    const RrefResult c = rref(mat(2, 2, {0, 1, 1, 0}));
    CHECK(c.mat == RatMatrix::identity(2));
}

TEST_CASE("null spaces of fixed matrices") {
    RatMatrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    CHECK(null_space(m) == Subspace::span(2, {vec({1, 1})}));

    CHECK(null_space(RatMatrix::identity(3)).dim() == 0);
    CHECK(null_space(RatMatrix(2, 3)) == Subspace::full(3));
}

TEST_CASE("particular solutions zero the free variables") {
    RatMatrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    const auto x = solve_particular(m, vec({3}));
    REQUIRE(x.has_value());
    CHECK(*x == vec({3, 0}));

    CHECK(solve_particular(RatMatrix::identity(3), vec({1, 2, 3})) == vec({1, 2, 3}));

    RatMatrix tall(2, 1);
    tall.at(0, 0) = 1;
    CHECK_FALSE(solve_particular(tall, vec({0, 1})).has_value());
}

TEST_CASE("subspace membership and inclusion") {
    const Subspace s = Subspace::span(2, {vec({1, 0})});
    CHECK(s.contains(vec({2, 0})));
    CHECK_FALSE(Subspace::span(2, {vec({1, 1})}).contains(vec({1, 0})));
    CHECK(s.leq(Subspace::full(2)));
    CHECK_FALSE(Subspace::full(2).leq(s));
    CHECK(Subspace::span(2, {vec({2, 0}), vec({3, 0})}) == s);
    CHECK(s.sum(Subspace::span(2, {vec({0, 5})})) == Subspace::full(2));
}

TEST_CASE("quotient matrix kills exactly its kernel") {
    const Subspace k = Subspace::span(3, {vec({1, 2, 0}), vec({0, 0, 1})});
    const RatMatrix q = quotient_matrix(k);
    REQUIRE(q.rows() == 1);
    CHECK(vec_is_zero(q.apply(vec({1, 2, 0}))));
    CHECK(vec_is_zero(q.apply(vec({0, 0, 1}))));
    CHECK_FALSE(vec_is_zero(q.apply(vec({0, 1, 0}))));
    CHECK(null_space(q) == k);
}

TEST_CASE("random matrix identities") {
    const SuiteResult r = check_linalg(99, 40);
    INFO(r.detail);
    CHECK(r.pass);
}
