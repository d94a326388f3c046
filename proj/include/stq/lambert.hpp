#ifndef STQ_LAMBERT_HPP
#define STQ_LAMBERT_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "stq/series.hpp"

namespace stq {

/// Sigma(q^a, q^b, q^c): bilateral sum over n of
///   q^{2c n(n+1) + b n} / (1 - q^{a + c n}).
struct SigmaSpec {
    int a;
    int b;
    int c;
    int order;
};

struct SigmaPole : std::domain_error {
    SigmaPole(int a, int c)
        : std::domain_error("Sigma(" + std::to_string(a) + ",*," + std::to_string(c) +
                            ") has a pole: z-argument hits 1 (a = 0 mod c)")
    {
    }
};

/// Minimal exponent contributed by the n-th term:
///   2c n(n+1) + b n, plus |a+cn| when the denominator exponent is negative
///   (that term is rewritten as -q^{-d}/(1-q^{-d}) times the numerator).
inline long sigma_min_exponent(const SigmaSpec &s, long n)
{
    long d = s.a + static_cast<long>(s.c) * n;
    if (d == 0)
        throw SigmaPole(s.a, s.c);
    long m = 2L * s.c * n * (n + 1) + static_cast<long>(s.b) * n;
    return m + (d < 0 ? -d : 0);
}

namespace detail {

// Add q^m / (1 - q^d) (d != 0) into dense coefficients over [lo, order].
template <Ring R>
void add_geometric_term(std::vector<R> &coeffs, int lo, int order, long m, long d, const R &num)
{
    if (d > 0) {
        for (long e = m; e <= order; e += d)
            coeffs[static_cast<std::size_t>(e - lo)] = coeffs[static_cast<std::size_t>(e - lo)] + num;
    } else {
        // 1/(1-q^d) = -q^{-d}/(1-q^{-d}): coefficient -1 at m + j|d|, j >= 1
        for (long e = m - d; e <= order; e -= d)
            coeffs[static_cast<std::size_t>(e - lo)] = coeffs[static_cast<std::size_t>(e - lo)] - num;
    }
}

// Scan n over a window where the deliberately loose lower bound
// 2c n(n+1) - |b||n| - c|n| - |a| could still reach the order; exact
// minimal exponents filter the rest.
inline std::pair<long, long> sigma_scan_range(int a, int b, int c, int order)
{
    // For |n| >= N the loose bound exceeds the order; over-wide is harmless
    // since exact minimal exponents filter each candidate n.
    long N = (std::abs(static_cast<long>(b)) + std::abs(static_cast<long>(a)) + 4L * c +
              std::max(order, 0)) /
                 (2L * c) +
             2;
    return {-N, N};
}

} // namespace detail

inline IntSeries sigma(const SigmaSpec &s)
{
    if (s.a % s.c == 0)
        throw SigmaPole(s.a, s.c);
    auto [nlo, nhi] = detail::sigma_scan_range(s.a, s.b, s.c, s.order);
    long lo = 0;
    for (long n = nlo; n <= nhi; ++n)
        lo = std::min(lo, sigma_min_exponent(s, n));
    std::vector<Int> coeffs(static_cast<std::size_t>(s.order - lo + 1), Int(0));
    const Int one(1);
    for (long n = nlo; n <= nhi; ++n) {
        if (sigma_min_exponent(s, n) > s.order)
            continue;
        long m = 2L * s.c * n * (n + 1) + static_cast<long>(s.b) * n;
        long d = s.a + static_cast<long>(s.c) * n;
        detail::add_geometric_term(coeffs, static_cast<int>(lo), s.order, m, d, one);
    }
    return IntSeries::from_coeffs(static_cast<int>(lo), std::move(coeffs), s.order);
}

inline IntSeries sigma(int a, int b, int c, int order) { return sigma(SigmaSpec{a, b, c, order}); }

/// U_ell(b) = sum over n of q^{6n^2 + bn} / (1 - q^{ell(3n+1)}).
/// The denominator exponent ell(3n+1) is never zero, so there is no pole.
struct UellSpec {
    int ell;
    int b;
    int order;
};

inline IntSeries u_ell(const UellSpec &s)
{
    if (s.ell <= 0)
        throw std::invalid_argument("u_ell: ell must be positive");
    auto min_exp = [&](long n) {
        long d = static_cast<long>(s.ell) * (3 * n + 1);
        long m = 6L * n * n + static_cast<long>(s.b) * n;
        return m + (d < 0 ? -d : 0);
    };
    long N = (std::abs(static_cast<long>(s.b)) + 4L * s.ell + std::max(s.order, 0)) / 6 + 2;
    long hi = N, nlo = -N;
    long lo = 0;
    for (long n = nlo; n <= hi; ++n)
        lo = std::min(lo, min_exp(n));
    std::vector<Int> coeffs(static_cast<std::size_t>(s.order - lo + 1), Int(0));
    const Int one(1);
    for (long n = nlo; n <= hi; ++n) {
        if (min_exp(n) > s.order)
            continue;
        long m = 6L * n * n + static_cast<long>(s.b) * n;
        long d = static_cast<long>(s.ell) * (3 * n + 1);
        detail::add_geometric_term(coeffs, static_cast<int>(lo), s.order, m, d, one);
    }
    return IntSeries::from_coeffs(static_cast<int>(lo), std::move(coeffs), s.order);
}

inline IntSeries u_ell(int ell, int b, int order) { return u_ell(UellSpec{ell, b, order}); }

} // namespace stq

#endif
