#ifndef STQ_CYCLOTOMIC_HPP
#define STQ_CYCLOTOMIC_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "stq/bigint.hpp"

namespace stq {

constexpr bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Element of Z[zeta_P] for prime P, stored reduced modulo
/// Phi_P(x) = 1 + x + ... + x^{P-1}: coefficients of 1, zeta, ..., zeta^{P-2}.
///
/// Reduction is eager, so equality of representations is equality of
/// elements. zeta^P collapses to 1 and 1 + zeta + ... + zeta^{P-1} to 0.
template <unsigned P>
class Cyclotomic {
    static_assert(is_prime(P), "cyclotomic order must be prime");

public:
    static constexpr unsigned deg = P - 1;

    Cyclotomic() { c_.fill(Int(0)); }
    Cyclotomic(long v) // NOLINT: implicit on purpose, Ring concept
    {
        c_.fill(Int(0));
        c_[0] = v;
    }
    explicit Cyclotomic(Int v)
    {
        c_.fill(Int(0));
        c_[0] = std::move(v);
    }

    /// Multiply by a rational integer.
    Cyclotomic scaled(const Int &m) const
    {
        Cyclotomic r;
        for (unsigned i = 0; i < deg; ++i)
            r.c_[i] = c_[i] * m;
        return r;
    }

    /// zeta^k for any integer k.
    static Cyclotomic zeta_pow(long k)
    {
        long r = k % static_cast<long>(P);
        if (r < 0)
            r += P;
        Cyclotomic x;
        if (r < static_cast<long>(deg))
            x.c_[static_cast<std::size_t>(r)] = 1;
        else // zeta^{P-1} = -(1 + zeta + ... + zeta^{P-2})
            for (auto &v : x.c_)
                v = -1;
        return x;
    }

    static Cyclotomic zeta() { return zeta_pow(1); }

    const Int &coeff(unsigned i) const { return c_.at(i); }

    bool is_zero() const
    {
        for (const auto &v : c_)
            if (!v.is_zero())
                return false;
        return true;
    }

    /// True when the element lies in Z, i.e. every zeta coefficient vanishes.
    bool is_rational_integer() const
    {
        for (unsigned i = 1; i < deg; ++i)
            if (!c_[i].is_zero())
                return false;
        return true;
    }

    Int rational_part() const { return c_[0]; }

    friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b)
    {
        Cyclotomic r;
        for (unsigned i = 0; i < deg; ++i)
            r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic &a)
    {
        Cyclotomic r;
        for (unsigned i = 0; i < deg; ++i)
            r.c_[i] = -a.c_[i];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b)
    {
        // Convolve with exponents taken mod P (zeta^P = 1), then remove
        // the zeta^{P-1} component via Phi_P.
        std::array<Int, P> full;
        full.fill(Int(0));
        for (unsigned i = 0; i < deg; ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (unsigned j = 0; j < deg; ++j)
                full[(i + j) % P] += a.c_[i] * b.c_[j];
        }
        Cyclotomic r;
        const Int &top = full[deg];
        for (unsigned i = 0; i < deg; ++i)
            r.c_[i] = full[i] - top;
        return r;
    }

    Cyclotomic &operator+=(const Cyclotomic &o) { return *this = *this + o; }
    Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) { return a.c_ == b.c_; }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (unsigned i = 0; i < deg; ++i) {
            if (c_[i].is_zero())
                continue;
            if (!s.empty() && c_[i] > 0)
                s += "+";
            if (i == 0)
                s += c_[i].str();
            else {
                if (c_[i] == -1)
                    s += "-";
                else if (c_[i] != 1)
                    s += c_[i].str() + "*";
                s += "zeta^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    std::array<Int, P - 1> c_;
};

template <unsigned P>
bool is_zero(const Cyclotomic<P> &x)
{
    return x.is_zero();
}

// Units provided for series inversion: +-zeta^k.
template <unsigned P>
std::optional<Cyclotomic<P>> unit_inverse(const Cyclotomic<P> &x)
{
    for (long k = 0; k < static_cast<long>(P); ++k) {
        auto z = Cyclotomic<P>::zeta_pow(k);
        if (x == z)
            return Cyclotomic<P>::zeta_pow(-k);
        if (x == -z)
            return -Cyclotomic<P>::zeta_pow(-k);
    }
    return std::nullopt;
}

template <unsigned P>
std::string to_string(const Cyclotomic<P> &x)
{
    return x.str();
}

} // namespace stq

#endif
