#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stq/qseries.hpp"

using namespace stq;

namespace {

bool agree(const IntSeries &a, const IntSeries &b)
{
    return !first_discrepancy(a, b).has_value();
}

} // namespace

TEST_CASE("finite Pochhammer small cases")
{
    // (q;q)_3 = (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
    IntSeries p = pochhammer_finite(qpow(1), 1, 3, 8);
    IntSeries want =
        IntSeries::from_coeffs(0, {Int(1), Int(-1), Int(-1), Int(0), Int(1), Int(1), Int(-1)}, 8);
    CHECK(agree(p, want));
    // (x;q)_0 = 1
    CHECK(agree(pochhammer_finite(qpow(2), 1, 0, 5), IntSeries::one(5)));
}

TEST_CASE("Euler product obeys the pentagonal number expansion")
{
    const int order = 60;
    IntSeries p = euler_product(1, 1, order);
    IntSeries want(order);
    for (long n = -10; n <= 10; ++n) {
        long e = n * (3 * n - 1) / 2;
        if (e <= order)
            want += IntSeries::monomial(Int(n % 2 == 0 ? 1 : -1), static_cast<int>(e), order);
    }
    CHECK(agree(p, want));
}

TEST_CASE("infinite Pochhammer rejects non-convergent arguments")
{
    CHECK_THROWS_AS(pochhammer_inf(qpow(0), 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer_inf(qpow(-2), 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(euler_product(1, 0, 10), std::invalid_argument);
    // A z-carrying argument with qexp = 0 is fine: (z; q)_inf exists.
    CHECK_NOTHROW(pochhammer_inf(zqpow(1, 0), 1, 10));
}

TEST_CASE("theta product equals the bilateral sum oracle")
{
    // j(q^a; q^b) computed as bracket * eta-product versus the independent
    // bilateral alternating sum.
    const int order = 50;
    for (int b = 1; b <= 7; ++b)
        for (int a = -2 * b; a <= 2 * b + 3; ++a) {
            IntSeries sum = jtheta_sum_oracle(a, b, order);
            if (a % b == 0) {
                // theta with a trivial argument vanishes identically
                CHECK(sum.is_zero_series());
                CHECK(jtheta(a, b, order).is_zero_series());
                continue;
            }
            CHECK(agree(jtheta(a, b, order), sum));
        }
}

TEST_CASE("bracket laws")
{
    const int order = 40;
    for (int b : {3, 5, 7, 9, 15}) {
        for (int a = 1; a < b; ++a) {
            IntSeries br = jacobi_bracket(a, b, order);
            // reflection: <q^a> = <q^{b-a}>
            CHECK(agree(br, jacobi_bracket(b - a, b, order)));
            // shift down: <q^a> = -q^a <q^{a+b}>
            IntSeries rhs = (-jacobi_bracket(a + b, b, order - a)).shift(a);
            CHECK(agree(br.truncate(rhs.order()), rhs));
            // inversion: <q^a> = -q^a <q^{-a}>; the negative bracket has
            // negative valuation, so widen it before the shift
            IntSeries inv = (-jacobi_bracket(-a, b, order)).shift(a).truncate(order);
            CHECK(agree(br.truncate(inv.order()), inv.truncate(br.order())));
        }
    }
}

TEST_CASE("bracket with reduced exponent matches its product definition")
{
    const int order = 30;
    // 0 < a < b: directly (q^a; q^b)_inf (q^{b-a}; q^b)_inf
    for (auto [a, b] : {std::pair{1, 5}, {2, 5}, {4, 9}, {7, 15}}) {
        IntSeries want = euler_product(a, b, order) * euler_product(b - a, b, order);
        CHECK(agree(jacobi_bracket(a, b, order), want.truncate(order)));
    }
    // out-of-range exponents reduce with sign and q-power: <q^{a+b}> relates
    // back by the shift law, checked through an explicit example
    IntSeries left = jacobi_bracket(8, 5, 20); // = <q^8>_{q^5} = -q^{-3}<q^3>
    IntSeries right = (-jacobi_bracket(3, 5, 23)).shift(-3);
    CHECK(agree(left.truncate(right.order()), right.truncate(left.order())));
}

TEST_CASE("zero bracket is a distinct failure")
{
    CHECK_THROWS_AS(jacobi_bracket(0, 5, 10), ZeroBracket);
    CHECK_THROWS_AS(jacobi_bracket(15, 5, 10), ZeroBracket);
    CHECK_THROWS_AS(jacobi_bracket(-5, 5, 10), ZeroBracket);
}

TEST_CASE("two-variable Pochhammer keeps the crank variable exact")
{
    // In (zq; q)_inf the q^n coefficient is sum over partitions of n into
    // distinct parts of (-z)^{#parts}.
    auto z = [](long c, int e) { return CrankPoly::term(Int(c), e); };
    auto p = pochhammer_inf(zqpow(1, 1), 1, 6);
    CHECK(p.coeff(0) == CrankPoly(1));
    CHECK(p.coeff(1) == z(-1, 1));
    CHECK(p.coeff(3) == z(-1, 1) + z(1, 2));  // {3}, {1,2}
    CHECK(p.coeff(4) == z(-1, 1) + z(1, 2));  // {4}, {1,3}
    CHECK(p.coeff(6) == z(-1, 1) + z(2, 2) - z(1, 3)); // {6},{1,5},{2,4},{1,2,3}
    // z^{-1} arguments stay exact Laurent in z
    auto pm = pochhammer_inf(zqpow(-1, 1), 1, 3);
    CHECK(pm.coeff(3) == z(-1, -1) + z(1, -2));
}
