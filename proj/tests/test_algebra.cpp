#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "stq/series.hpp"

using namespace stq;

namespace {

// Random Laurent series over Int with a fixed order, for axiom checks.
IntSeries random_series(std::mt19937_64 &rng, int order)
{
    std::uniform_int_distribution<int> lo_dist(-4, 3);
    std::uniform_int_distribution<long> c_dist(-9, 9);
    int lo = lo_dist(rng);
    std::vector<Int> c;
    for (int e = lo; e <= order; ++e)
        c.emplace_back(c_dist(rng));
    return IntSeries::from_coeffs(lo, std::move(c), order);
}

bool agree(const IntSeries &a, const IntSeries &b)
{
    return !first_discrepancy(a, b).has_value();
}

} // namespace

TEST_CASE("series ring axioms on random elements")
{
    std::mt19937_64 rng(42);
    const int order = 16;
    for (int trial = 0; trial < 40; ++trial) {
        IntSeries a = random_series(rng, order);
        IntSeries b = random_series(rng, order);
        IntSeries c = random_series(rng, order);
        CHECK(agree(a + b, b + a));
        CHECK(agree((a + b) + c, a + (b + c)));
        CHECK(agree(a * b, b * a));
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(agree(a * (b + c), a * b + a * c));
        CHECK(agree(a + IntSeries(order), a));
        CHECK(agree(a - a, IntSeries(order)));
        CHECK((a - a).is_zero_series());
    }
}

TEST_CASE("guaranteed-order bookkeeping is pessimistic")
{
    // a known to order 10, b to order 6: sum known only to 6.
    IntSeries a = IntSeries::monomial(Int(1), 0, 10);
    IntSeries b = IntSeries::monomial(Int(1), 2, 6);
    CHECK((a + b).order() == 6);
    // product: min(order_a + lo_b, order_b + lo_a) = min(10+2, 6+0) = 6.
    CHECK((a * b).order() == 6);
    CHECK_THROWS_AS((a + b).coeff(7), std::out_of_range);

    // A factor with negative valuation extends the product's reach downward
    // but the unknown tail still caps it.
    IntSeries c = IntSeries::monomial(Int(3), -2, 5);
    IntSeries d = IntSeries::monomial(Int(1), 0, 8);
    IntSeries p = c * d;
    CHECK(p.order() == std::min(5 + 0, 8 - 2));
    CHECK(p.coeff(-2) == 3);
}

TEST_CASE("zero series and coefficient access")
{
    IntSeries z(9);
    CHECK(z.is_zero_series());
    CHECK(z.lo() == 10);
    CHECK(z.coeff(0) == 0);
    CHECK(z.coeff(9) == 0);
    CHECK_THROWS_AS(z.coeff(10), std::out_of_range);
    CHECK_THROWS_AS(IntSeries::monomial(Int(1), 5, 4), std::invalid_argument);
}

TEST_CASE("shift, scale, truncate")
{
    IntSeries a = IntSeries::from_coeffs(1, {Int(1), Int(-2), Int(5)}, 8);
    IntSeries s = a.shift(3);
    CHECK(s.order() == 11);
    CHECK(s.coeff(4) == 1);
    CHECK(s.coeff(6) == 5);
    IntSeries sc = a.scale(Int(-2));
    CHECK(sc.coeff(2) == 4);
    IntSeries t = a.truncate(2);
    CHECK(t.order() == 2);
    CHECK(t.coeff(2) == -2);
    CHECK_THROWS_AS(t.coeff(3), std::out_of_range);
}

TEST_CASE("inverse round-trips")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c_dist(-9, 9);
    const int order = 14;
    for (int trial = 0; trial < 25; ++trial) {
        // unit leading coefficient at a random (possibly negative) valuation
        int lo = static_cast<int>(c_dist(rng)) % 3 - 1;
        std::vector<Int> c;
        c.emplace_back(trial % 2 == 0 ? 1 : -1);
        for (int e = lo + 1; e <= order; ++e)
            c.emplace_back(c_dist(rng));
        IntSeries a = IntSeries::from_coeffs(lo, std::move(c), order);
        IntSeries prod = a * a.inverse();
        CHECK(agree(prod, IntSeries::one(prod.order())));
    }
    // non-unit lead rejected
    IntSeries bad = IntSeries::monomial(Int(2), 0, 5);
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
    CHECK_THROWS_AS(IntSeries(5).inverse(), std::domain_error);
}

TEST_CASE("dissection and reassembly for t = 2, 3, 5")
{
    std::mt19937_64 rng(99);
    for (int t : {2, 3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            IntSeries a = random_series(rng, 30); // lo can be negative
            std::vector<IntSeries> parts;
            for (int r = 0; r < t; ++r)
                parts.push_back(a.dissect(t, r));
            IntSeries back = reassemble(parts, t);
            CHECK(back.order() >= a.order() - t);
            CHECK(agree(back.truncate(back.order()), a.truncate(back.order())));
        }
    }
    IntSeries a = random_series(rng, 10);
    CHECK_THROWS_AS(a.dissect(3, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)reassemble(std::vector<IntSeries>{a}, 2), std::invalid_argument);
}

TEST_CASE("compose_qpow matches manual exponent scaling")
{
    IntSeries a = IntSeries::from_coeffs(-1, {Int(2), Int(0), Int(3), Int(-1)}, 5);
    IntSeries b = a.compose_qpow(3);
    CHECK(b.order() == 17);
    CHECK(b.coeff(-3) == 2);
    CHECK(b.coeff(3) == 3);
    CHECK(b.coeff(6) == -1);
    CHECK(b.coeff(4) == 0);
}

TEST_CASE("crank polynomial ring")
{
    CrankPoly z = CrankPoly::term(Int(1), 1);
    CrankPoly zinv = CrankPoly::term(Int(1), -1);
    CHECK(z * zinv == CrankPoly(1));
    CrankPoly p = z + zinv + CrankPoly(2); // z + 2 + 1/z
    CHECK(p.eval_at_one() == 4);
    CHECK(p.reciprocal_arg() == p);
    CHECK((p * p).coeff(0) == 6); // (z+2+1/z)^2 central coefficient 4+1+1
    CHECK(unit_inverse(p) == std::nullopt);
    CHECK(*unit_inverse(CrankPoly::term(Int(-1), 3)) == CrankPoly::term(Int(-1), -3));
}

TEST_CASE("cyclotomic ring identities")
{
    using C3 = Cyclotomic<3>;
    using C5 = Cyclotomic<5>;
    // 1 + zeta + ... + zeta^{P-1} = 0
    C3 s3;
    for (long k = 0; k < 3; ++k)
        s3 += C3::zeta_pow(k);
    CHECK(s3.is_zero());
    C5 s5;
    for (long k = 0; k < 5; ++k)
        s5 += C5::zeta_pow(k);
    CHECK(s5.is_zero());
    // zeta^P = 1
    CHECK(C3::zeta_pow(3) == C3(1));
    CHECK(C5::zeta_pow(5) == C5(1));
    CHECK(C5::zeta_pow(-2) == C5::zeta_pow(3));
    // norm of (1 - zeta) over Z[zeta_5] is 5
    C5 prod(1);
    for (long k = 1; k < 5; ++k)
        prod *= C5(1) - C5::zeta_pow(k);
    CHECK(prod.is_rational_integer());
    CHECK(prod.rational_part() == 5);
    // rationality detection
    CHECK(C5(7).is_rational_integer());
    CHECK(!(C5::zeta() + C5(7)).is_rational_integer());
}

TEST_CASE("evaluation at a root of unity is a ring homomorphism")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c_dist(-5, 5);
    std::uniform_int_distribution<int> e_dist(-3, 3);
    auto random_cs = [&](int order) {
        std::vector<CrankPoly> c;
        for (int e = 0; e <= order; ++e) {
            CrankPoly p;
            for (int k = 0; k < 3; ++k)
                p += CrankPoly::term(Int(c_dist(rng)), e_dist(rng));
            c.push_back(p);
        }
        return Series<CrankPoly>::from_coeffs(0, std::move(c), order);
    };
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_cs(10);
        auto b = random_cs(10);
        auto ea = eval_at_root_of_unity<5>(a);
        auto eb = eval_at_root_of_unity<5>(b);
        CHECK(!first_discrepancy(eval_at_root_of_unity<5>(a * b), ea * eb).has_value());
        CHECK(!first_discrepancy(eval_at_root_of_unity<5>(a + b), ea + eb).has_value());
    }
    // z -> zeta sends z + 1/z + 3 over P=3 to zeta + zeta^2 + 3 = 2
    auto zpoly = CrankPoly::term(Int(1), 1) + CrankPoly::term(Int(1), -1) + CrankPoly(3);
    auto s = Series<CrankPoly>::monomial(zpoly, 0, 4);
    CHECK(eval_at_root_of_unity<3>(s).coeff(0) == Cyclotomic<3>(2));
}

TEST_CASE("first_discrepancy reports the earliest difference")
{
    IntSeries a = IntSeries::from_coeffs(0, {Int(1), Int(2), Int(3)}, 6);
    IntSeries b = IntSeries::from_coeffs(0, {Int(1), Int(2), Int(5), Int(1)}, 6);
    auto d = first_discrepancy(a, b);
    REQUIRE(d.has_value());
    CHECK(d->exponent == 2);
    CHECK(d->difference == -2);
    CHECK(!first_discrepancy(a, a).has_value());
}
