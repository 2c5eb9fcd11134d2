#include "doctest.h"

#include "sba/scalar.hpp"

#include <random>

using namespace sba;

namespace {

// Independent oracle for "q is a square of a rational": factor-free check on
// numerator and denominator via integer sqrt, written against BigRat only.
bool rational_square_oracle(const BigRat& q) {
    if (q < 0) return false;
    BigInt n = numerator(q), d = denominator(q);
    BigInt sn = sqrt(n), sd = sqrt(d);
    return sn * sn == n && sd * sd == d;
}

GaussScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return GaussScalar(BigRat(num(rng), den(rng)), BigRat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("normalization and basic arithmetic") {
    CHECK(GaussScalar::from_parts(2, 4, 0, 1) == GaussScalar(BigRat(1, 2)));
    CHECK(GaussScalar::i() * GaussScalar::i() == GaussScalar(-1));
    CHECK_THROWS_AS(GaussScalar::from_parts(1, 0, 0, 1), ValidationError);

    // inverse of (1 + i): checked by multiplying back
    GaussScalar z(BigRat(1), BigRat(1));
    GaussScalar zi = z.inv();
    CHECK(z * zi == GaussScalar(1));
    CHECK(zi == GaussScalar(BigRat(1, 2), BigRat(-1, 2)));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(20240117);
    for (int k = 0; k < 200; ++k) {
        GaussScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inv() == GaussScalar(1));
    }
}

TEST_CASE("canonical text form round-trips") {
    const char* cases[] = {"1", "-1/2*i", "3/4-1/4*i", "0", "2+1*i", "-3", "5/7+2/3*i"};
    for (const char* s : cases) {
        GaussScalar v = GaussScalar::parse(s);
        CHECK(v.str() == s);
        CHECK(GaussScalar::parse(v.str()) == v);
    }
    CHECK(GaussScalar::parse("i") == GaussScalar::i());
    CHECK(GaussScalar::parse("-i") == -GaussScalar::i());
    CHECK(GaussScalar::parse(" 1/2 + 3*i ") == GaussScalar(BigRat(1, 2), BigRat(3)));
    CHECK_THROWS_AS(GaussScalar::parse(""), ValidationError);
    CHECK_THROWS_AS(GaussScalar::parse("1/0"), ValidationError);
    CHECK_THROWS_AS(GaussScalar::parse("2x"), ValidationError);

    std::mt19937 rng(7);
    for (int k = 0; k < 100; ++k) {
        GaussScalar v = random_scalar(rng);
        CHECK(GaussScalar::parse(v.str()) == v);
    }
}

TEST_CASE("square roots in Q(i)") {
    auto minus_one = sqrt_roots(GaussScalar(-1));
    CHECK(minus_one == std::set<GaussScalar>{GaussScalar::i(), -GaussScalar::i()});

    auto quarter = sqrt_roots(GaussScalar(BigRat(1, 4)));
    CHECK(quarter ==
          std::set<GaussScalar>{GaussScalar(BigRat(1, 2)), GaussScalar(BigRat(-1, 2))});

    // sqrt(2) does not exist in Q(i): oracle solves a^2-b^2=2, 2ab=0 by the
    // elementary case split (b=0 needs 2 to be a rational square; a=0 needs
    // -2 to be one).
    CHECK_FALSE(rational_square_oracle(BigRat(2)));
    CHECK_FALSE(rational_square_oracle(BigRat(-2)));
    CHECK(sqrt_roots(GaussScalar(2)).empty());

    // 2i = (1+i)^2
    auto two_i = sqrt_roots(GaussScalar(BigRat(0), BigRat(2)));
    CHECK(two_i.size() == 2);
    for (const auto& r : two_i) CHECK(r * r == GaussScalar(BigRat(0), BigRat(2)));

    std::mt19937 rng(99);
    for (int k = 0; k < 60; ++k) {
        GaussScalar r = random_scalar(rng);
        auto roots = sqrt_roots(r * r);
        CHECK(roots.count(r) + roots.count(-r) >= 1);
        for (const auto& s : roots) CHECK(s * s == r * r);
    }
}

TEST_CASE("univariate roots over Q(i)") {
    // t^2 - t -> {0, 1}
    UniPoly p({GaussScalar(0), GaussScalar(-1), GaussScalar(1)});
    auto sol = solve_univariate(p);
    CHECK(sol.roots == std::set<GaussScalar>{GaussScalar(0), GaussScalar(1)});
    CHECK(sol.unresolved.empty());

    // t^4 - 1 -> {1, -1, i, -i}
    UniPoly q({GaussScalar(-1), GaussScalar(0), GaussScalar(0), GaussScalar(0), GaussScalar(1)});
    sol = solve_univariate(q);
    CHECK(sol.roots == std::set<GaussScalar>{GaussScalar(1), GaussScalar(-1), GaussScalar::i(),
                                             -GaussScalar::i()});
    CHECK(sol.unresolved.empty());

    // t^2 - 2 -> no roots, the factor is reported unresolved
    UniPoly r({GaussScalar(-2), GaussScalar(0), GaussScalar(1)});
    sol = solve_univariate(r);
    CHECK(sol.roots.empty());
    REQUIRE(sol.unresolved.size() == 1);
    CHECK(sol.unresolved[0] == r);

    // every root returned evaluates to exactly zero
    UniPoly mixed = UniPoly({GaussScalar(BigRat(-1, 2)), GaussScalar(1)}) *
                    UniPoly({-GaussScalar::i(), GaussScalar(1)}) *
                    UniPoly({GaussScalar(3), GaussScalar(1)});
    sol = solve_univariate(mixed);
    CHECK(sol.roots.size() == 3);
    for (const auto& root : sol.roots) CHECK(mixed.eval(root).is_zero());
    CHECK(sol.unresolved.empty());

    // cubic with only one Q(i) root; the quadratic cofactor is unresolved
    UniPoly c = UniPoly({GaussScalar(-2), GaussScalar(0), GaussScalar(1)}) *
                UniPoly({GaussScalar(-1), GaussScalar(1)});
    sol = solve_univariate(c);
    CHECK(sol.roots == std::set<GaussScalar>{GaussScalar(1)});
    REQUIRE(sol.unresolved.size() == 1);
    CHECK(sol.unresolved[0].degree() == 2);

    CHECK_THROWS_AS(solve_univariate(UniPoly()), ValidationError);
    UniPoly deg5({GaussScalar(1), GaussScalar(0), GaussScalar(0), GaussScalar(0), GaussScalar(0),
                  GaussScalar(1)});
    CHECK_THROWS_AS(solve_univariate(deg5), UnsupportedError);
}
