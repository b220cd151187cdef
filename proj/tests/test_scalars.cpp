#include <doctest.h>

#include <cmath>
#include <random>

#include "k3lcs/error.hpp"
#include "k3lcs/scalars.hpp"

using namespace k3lcs;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(-7, 2).floor() == Rational(-4));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("cmp_sq_threshold worked values") {
    CHECK(cmp_sq_threshold(Rational(2), 4, 3) == std::strong_ordering::greater);
    CHECK(cmp_sq_threshold(Rational(1), 4, 3) == std::strong_ordering::less);
    // 3 * 1155^2 = 4002075 > 4 * 1000^2
    CHECK(cmp_sq_threshold(Rational(1155, 1000), 4, 3) == std::strong_ordering::greater);
    CHECK(cmp_sq_threshold(Rational(-5), 4, 3) == std::strong_ordering::less);
    CHECK(cmp_sq_threshold(Rational(0), 0, 1) == std::strong_ordering::equal);
    CHECK(cmp_sq_threshold(Rational(3, 2), 9, 4) == std::strong_ordering::equal);
    CHECK_THROWS_AS(cmp_sq_threshold(Rational(1), 4, 0), Error);
    CHECK_THROWS_AS(cmp_sq_threshold(Rational(1), -1, 3), Error);
}

TEST_CASE("cmp_sq_threshold against long double away from ties") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-3000, 3000), den(1, 1000), pp(0, 50), qq(1, 50);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        Rational x(num(rng), den(rng));
        std::int64_t p = pp(rng), q = qq(rng);
        long double xf = x.to_long_double();
        long double t = std::sqrt(static_cast<long double>(p) / static_cast<long double>(q));
        if (std::fabs(xf - t) < 1e-9L) continue;
        auto expected = xf < t ? std::strong_ordering::less : std::strong_ordering::greater;
        CHECK(cmp_sq_threshold(x, p, q) == expected);
        ++checked;
    }
    CHECK(checked > 990);
}

TEST_CASE("abs_sq") {
    CHECK(abs_sq(GaussianRational()) == Rational(0));
    CHECK(abs_sq(GaussianRational::i()) == Rational(1));
    CHECK(abs_sq(GaussianRational(Rational(3, 2), Rational(2))) == Rational(25, 4));
}

TEST_CASE("Gaussian rational field identities") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-40, 40), den(1, 12);
    auto draw = [&] { return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
    for (int i = 0; i < 300; ++i) {
        GaussianRational x = draw(), y = draw(), z = draw();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x.conj().conj() == x);
        CHECK(abs_sq(x * y) == abs_sq(x) * abs_sq(y));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), Error);
    CHECK(GaussianRational(Rational(1, 2), Rational(-3)).str() == "1/2-3i");
}
