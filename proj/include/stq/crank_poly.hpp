#ifndef STQ_CRANK_POLY_HPP
#define STQ_CRANK_POLY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stq/bigint.hpp"

namespace stq {

/// Laurent polynomial in the crank variable z over Int.
///
/// Exact in z: no truncation ever happens here, and the canonical form
/// stores no zero coefficients at either end (the zero polynomial is
/// the empty coefficient vector).
class CrankPoly {
public:
    CrankPoly() = default;
    CrankPoly(long v) // NOLINT: implicit on purpose, Ring concept
    {
        if (v != 0) {
            lo_ = 0;
            coeffs_.push_back(Int(v));
        }
    }
    explicit CrankPoly(Int v)
    {
        if (!v.is_zero()) {
            lo_ = 0;
            coeffs_.push_back(std::move(v));
        }
    }

    /// c * z^e
    static CrankPoly term(Int c, int e)
    {
        CrankPoly p;
        if (!c.is_zero()) {
            p.lo_ = e;
            p.coeffs_.push_back(std::move(c));
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }

    Int coeff(int e) const
    {
        if (coeffs_.empty() || e < lo_ || e > hi())
            return Int(0);
        return coeffs_[static_cast<std::size_t>(e - lo_)];
    }

    /// Sum of all coefficients, i.e. evaluation at z = 1.
    Int eval_at_one() const
    {
        Int s(0);
        for (const auto &c : coeffs_)
            s += c;
        return s;
    }

    /// Substitute z -> 1/z.
    CrankPoly reciprocal_arg() const
    {
        CrankPoly r;
        if (coeffs_.empty())
            return r;
        r.lo_ = -hi();
        r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        return r;
    }

    friend CrankPoly operator+(const CrankPoly &a, const CrankPoly &b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::max(a.hi(), b.hi());
        std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
        for (int e = a.lo_; e <= a.hi(); ++e)
            c[static_cast<std::size_t>(e - lo)] += a.coeffs_[static_cast<std::size_t>(e - a.lo_)];
        for (int e = b.lo_; e <= b.hi(); ++e)
            c[static_cast<std::size_t>(e - lo)] += b.coeffs_[static_cast<std::size_t>(e - b.lo_)];
        return make(lo, std::move(c));
    }

    friend CrankPoly operator-(const CrankPoly &a) { return a * CrankPoly(-1); }

    friend CrankPoly operator-(const CrankPoly &a, const CrankPoly &b) { return a + (-b); }

    friend CrankPoly operator*(const CrankPoly &a, const CrankPoly &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return make(a.lo_ + b.lo_, std::move(c));
    }

    CrankPoly &operator+=(const CrankPoly &o) { return *this = *this + o; }
    CrankPoly &operator*=(const CrankPoly &o) { return *this = *this * o; }

    friend bool operator==(const CrankPoly &a, const CrankPoly &b)
    {
        return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
    }

    bool has_z_part() const { return !coeffs_.empty() && (lo_ != 0 || coeffs_.size() > 1); }

    std::string str() const
    {
        if (coeffs_.empty())
            return "0";
        std::string s;
        for (int e = lo_; e <= hi(); ++e) {
            const Int &c = coeffs_[static_cast<std::size_t>(e - lo_)];
            if (c.is_zero())
                continue;
            if (!s.empty() && c > 0)
                s += "+";
            if (e == 0)
                s += c.str();
            else {
                if (c == -1)
                    s += "-";
                else if (c != 1)
                    s += c.str() + "*";
                s += "z^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    static CrankPoly make(int lo, std::vector<Int> c)
    {
        std::size_t b = 0, e = c.size();
        while (b < e && c[b].is_zero())
            ++b;
        while (e > b && c[e - 1].is_zero())
            --e;
        CrankPoly p;
        if (b < e) {
            p.lo_ = lo + static_cast<int>(b);
            p.coeffs_.assign(c.begin() + static_cast<long>(b), c.begin() + static_cast<long>(e));
        }
        return p;
    }

    int lo_ = 0;
    std::vector<Int> coeffs_; // exponents lo_ .. lo_+size-1, no zero ends
};

inline bool is_zero(const CrankPoly &p) { return p.is_zero(); }

// Units are the monomials +-z^k.
inline std::optional<CrankPoly> unit_inverse(const CrankPoly &p)
{
    if (p.is_zero() || p.lo() != p.hi())
        return std::nullopt;
    Int c = p.coeff(p.lo());
    if (c != 1 && c != -1)
        return std::nullopt;
    return CrankPoly::term(c, -p.lo());
}

inline std::string to_string(const CrankPoly &p) { return p.str(); }

} // namespace stq

#endif
