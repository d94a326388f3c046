#ifndef STQ_QSERIES_HPP
#define STQ_QSERIES_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "stq/series.hpp"

namespace stq {

/// Specialization argument x = coeff * q^qexp used in products; coeff may
/// carry a z-power when the ring is CrankPoly.
template <Ring R>
struct Monomial {
    R coeff;
    int qexp = 0;
};

inline Monomial<Int> qpow(int e) { return Monomial<Int>{Int(1), e}; }

/// z^zexp * q^qexp over the crank-polynomial ring.
inline Monomial<CrankPoly> zqpow(int zexp, int qexp)
{
    return Monomial<CrankPoly>{CrankPoly::term(Int(1), zexp), qexp};
}

namespace detail {
template <Ring R>
bool pure_q(const Monomial<R> &)
{
    return true;
}
inline bool pure_q(const Monomial<CrankPoly> &x) { return !x.coeff.has_z_part(); }
} // namespace detail

/// (x; q^base)_n = prod_{k=0}^{n-1} (1 - x q^{base k}), truncated.
template <Ring R>
Series<R> pochhammer_finite(const Monomial<R> &x, int base, int n, int order)
{
    if (base <= 0)
        throw std::invalid_argument("pochhammer_finite: base must be positive");
    if (order < 0)
        throw std::invalid_argument("pochhammer_finite: negative order");
    Series<R> p = Series<R>::one(order);
    for (int k = 0; k < n; ++k) {
        long e = x.qexp + static_cast<long>(base) * k;
        if (e > order)
            continue; // factor is 1 + O(q^{order+1})
        p *= Series<R>::one(order) - Series<R>::monomial(x.coeff, static_cast<int>(e), order);
    }
    return p.truncate(order);
}

/// (x; q^base)_infinity truncated: only factors reaching the order matter.
/// A pure-q argument with qexp <= 0 has no formal limit and is rejected.
template <Ring R>
Series<R> pochhammer_inf(const Monomial<R> &x, int base, int order)
{
    if (base <= 0)
        throw std::invalid_argument("pochhammer_inf: base must be positive");
    if (x.qexp <= 0 && detail::pure_q(x))
        throw std::invalid_argument("pochhammer_inf: product does not converge formally "
                                    "(pure q^" + std::to_string(x.qexp) + " argument)");
    long n = x.qexp > order ? 0 : (static_cast<long>(order) - x.qexp) / base + 1;
    return pochhammer_finite(x, base, static_cast<int>(n), order);
}

/// (q^a; q^b)_infinity, the workhorse Euler-product form.
inline IntSeries euler_product(int a, int b, int order)
{
    return pochhammer_inf(qpow(a), b, order);
}

/// The bracket <q^a>_{q^b} vanishes identically when a = 0 (mod b); using
/// one in a denominator is a modeling error, so it is a distinct failure.
struct ZeroBracket : std::domain_error {
    ZeroBracket(int a, int b)
        : std::domain_error("bracket <q^" + std::to_string(a) + ">_{q^" + std::to_string(b) +
                            "} is identically zero")
    {
    }
};

/// <q^a>_{q^b} = (q^a, q^{b-a}; q^b)_infinity for 0 < a < b, extended to
/// all integers a via <z>_q = -z<qz>_q. May have negative valuation.
inline IntSeries jacobi_bracket(int a, int b, int order)
{
    if (b <= 0)
        throw std::invalid_argument("jacobi_bracket: base must be positive");
    if (a % b == 0)
        throw ZeroBracket(a, b);
    // Reduce a into (0, b); each step <q^{a}> = -q^{a}<q^{a+b}> (upward)
    // or equivalently <q^{a}> = -q^{b-a}<q^{a-b}> (downward), accumulating
    // a sign and a power of q.
    int sign = 1;
    long shift = 0;
    int ar = a;
    while (ar < 0) {
        // <q^{ar}> = -q^{ar} <q^{ar+b}>
        sign = -sign;
        shift += ar;
        ar += b;
    }
    while (ar > b) {
        // <q^{ar}> = -q^{b-ar} <q^{ar-b}>
        sign = -sign;
        shift += b - ar;
        ar -= b;
    }
    int inner = order - static_cast<int>(shift);
    IntSeries core = euler_product(ar, b, inner) * euler_product(b - ar, b, inner);
    core = core.truncate(inner).shift(static_cast<int>(shift));
    if (sign < 0)
        core = -core;
    return core;
}

/// j(q^a; q^b) = <q^a>_{q^b} (q^b; q^b)_infinity; zero series when a = 0 (mod b).
inline IntSeries jtheta(int a, int b, int order)
{
    if (a % b == 0)
        return IntSeries(order);
    // A negative bracket valuation eats into the product's guaranteed
    // order; widen both factors to compensate.
    int s = std::min(0, jacobi_bracket(a, b, order).lo());
    IntSeries br = jacobi_bracket(a, b, order - s);
    return (br * euler_product(b, b, order - s)).truncate(order);
}

/// The bilateral theta sum for j(q^a; q^b): sum (-1)^n q^{an + b n(n-1)/2}.
/// Deliberately independent of the product code path.
inline IntSeries jtheta_sum_oracle(int a, int b, int order)
{
    if (b <= 0)
        throw std::invalid_argument("jtheta_sum_oracle: base must be positive");
    auto expo = [&](long n) { return a * n + b * n * (n - 1) / 2; };
    // f(n) >= b n(n-1)/2 - |a||n|; find a window beyond which f > order.
    long L = 2 * (std::abs(static_cast<long>(a)) / b + 2) + 4;
    while (expo(L) <= order || expo(-L) <= order)
        ++L;
    int lo = 0;
    for (long n = -L; n <= L; ++n)
        lo = std::min<int>(lo, static_cast<int>(expo(n)));
    std::vector<Int> c(static_cast<std::size_t>(order - lo + 1), Int(0));
    for (long n = -L; n <= L; ++n) {
        long e = expo(n);
        if (e <= order)
            c[static_cast<std::size_t>(e - lo)] += (n % 2 == 0) ? 1 : -1;
    }
    return IntSeries::from_coeffs(lo, std::move(c), order);
}

} // namespace stq

#endif
