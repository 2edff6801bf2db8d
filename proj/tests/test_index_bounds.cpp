#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acs/index_bounds.hpp"

using namespace acs;

TEST_CASE("bigint arithmetic survives factorial growth and division") {
    BigInt f(1);
    for (int i = 2; i <= 40; ++i) f = f * BigInt(i);
    CHECK(f.to_string() == "815915283247897734345611269596115894272000000000");
    BigInt g = f;
    for (int i = 40; i >= 2; --i) g = g / BigInt(i);
    CHECK(g == BigInt(1));
    CHECK((f % BigInt(41)).to_string() == "40");  // Wilson: (p-1)! = -1 mod p

    CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));
    CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
    CHECK(BigInt(7) + BigInt(-7) == BigInt(0));
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
}

TEST_CASE("rationals normalize and order correctly") {
    const Rational a(BigInt(2), BigInt(-4));
    CHECK(a.to_string() == "-1/2");
    CHECK(Rational(BigInt(6), BigInt(3)).to_string() == "2");
    CHECK(Rational(BigInt(0), BigInt(9)).to_string() == "0");
    CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == Rational(1) / Rational(2));
    CHECK(Rational(1) / Rational(3) < Rational(1) / Rational(2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("acs index constant 1/C(d,2)") {
    CHECK(acs_index_constant(4).to_string() == "1/6");
    CHECK(acs_index_constant(2).to_string() == "1");
    CHECK(acs_index_constant(16).to_string() == "1/120");
    CHECK_THROWS_AS(acs_index_constant(1), InvalidArgument);
}

TEST_CASE("robust index constant spot values") {
    CHECK(robust_index_constant(4).to_string() == "1/91");
    CHECK(robust_index_constant(2).to_string() == "1/10");
    CHECK(robust_index_constant(1).to_string() == "1");
}

TEST_CASE("veronese dimension arithmetic") {
    CHECK(veronese_dim(4) == 14);
    CHECK(veronese_dim(2) == 5);
    CHECK(veronese_dim(10) == 65);
}

TEST_CASE("robust constant equals the plain constant of the Veronese dimension") {
    for (long long d = 1; d <= 200; ++d)
        CHECK(robust_index_constant(d) == acs_index_constant(veronese_dim(d)));
}

TEST_CASE("both constants decrease strictly in d") {
    for (long long d = 2; d <= 120; ++d) {
        CHECK(acs_index_constant(d + 1) < acs_index_constant(d));
        CHECK(robust_index_constant(d + 1) < robust_index_constant(d));
    }
}

TEST_CASE("certificate payload renders rational strings") {
    const IndexConstants c = make_index_constants(32);
    CHECK(c.acs == "1/496");
    CHECK(c.robust == "1/156520");
    CHECK(c.ambient_dim == 32);
    CHECK(make_index_constants(1).acs.empty());
}
