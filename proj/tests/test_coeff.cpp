#include <doctest.h>

#include "segre/dpoly.hpp"
#include "support/generators.hpp"

using namespace segre;

TEST_SUITE_BEGIN("coeff");

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 3).is_integer());
}

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(7, 2) - Rational(7, 2) == Rational(0));
    CHECK(Rational(1) / Rational(4) == Rational(1, 4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

    CHECK(Rational::from_string("3/2") == Rational(3, 2));
    CHECK(Rational::from_string("-8") == Rational(-8));
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(-2).to_string() == "-2");
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 7) == 0);
}

static const DPoly kD = DPoly::var();

TEST_CASE("dpoly ring arithmetic") {
    CHECK((kD + (-kD)).is_zero());
    CHECK(kD * (kD - DPoly(3)) == DPoly({Rational(0), Rational(-3), Rational(1)}));
    CHECK((kD * kD - DPoly(3) * kD) - kD * kD == DPoly({Rational(0), Rational(-3)}));
    CHECK(DPoly().degree() == -1);
    CHECK((kD - kD).degree() == -1);
}

TEST_CASE("dpoly evaluation") {
    const DPoly p = kD * kD - DPoly(3) * kD;  // d^2 - 3d
    CHECK(p.eval_at(Rational(3)) == Rational(0));
    CHECK(p.eval_at(Rational(1)) == Rational(-2));
    CHECK(DPoly().eval_at(Rational(5)) == Rational(0));
}

TEST_CASE("division by d-3") {
    const DPoly p = kD * kD - DPoly(3) * kD;
    auto [q, r] = p.divmod_d_minus_3();
    CHECK(q == kD);
    CHECK(r == Rational(0));

    auto [q1, r1] = DPoly(1).divmod_d_minus_3();
    CHECK(q1.is_zero());
    CHECK(r1 == Rational(1));

    auto [q2, r2] = (DPoly(2) * p).divmod_d_minus_3();
    CHECK(q2 == DPoly(2) * kD);
    CHECK(r2 == Rational(0));
}

TEST_CASE("divisibility matches evaluation at the root") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 200; ++trial) {
        const DPoly p = gen.random_dpoly();
        const auto [q, r] = p.divmod_d_minus_3();
        CHECK((p.eval_at(Rational(3)).is_zero() == r.is_zero()));
        CHECK(q * (kD - DPoly(3)) + DPoly(r) == p);
    }
}

TEST_CASE("exact arithmetic round trip") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 200; ++trial) {
        const DPoly p = gen.random_dpoly();
        const DPoly q = gen.random_dpoly();
        CHECK((p + q) - q == p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("canonical storage") {
    const DPoly a({Rational(1), Rational(2), Rational(0), Rational(0)});
    const DPoly b({Rational(1), Rational(2)});
    CHECK(a == b);
    CHECK(a.degree() == 1);
    CHECK(a.coeffs() == b.coeffs());
}

TEST_CASE("rendering") {
    CHECK((DPoly(3) * kD - kD * kD * DPoly(Rational(1, 2))).to_string() ==
          "3*d - 1/2*d^2");
    CHECK(DPoly().to_string() == "0");
    CHECK(DPoly(-1).to_string() == "-1");
}

TEST_SUITE_END();
