#ifndef STQ_SERIES_HPP
#define STQ_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stq/bigint.hpp"
#include "stq/crank_poly.hpp"
#include "stq/cyclotomic.hpp"

namespace stq {

template <typename R>
concept Ring = requires(R a, R b) {
    R{};
    R{1L};
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

/// Truncated Laurent series in q over an exact ring.
///
/// Coefficients are known exactly for every exponent <= order(); anything
/// beyond is unknown, never assumed zero. Binary operations propagate the
/// guaranteed order pessimistically, and reading past it throws. Stored
/// coefficients start at the valuation lo(); a series that is zero through
/// its order has lo() == order()+1 and no stored coefficients.
template <Ring R>
class Series {
public:
    /// The zero series, known through `order`.
    explicit Series(int order) : lo_(order + 1), order_(order) {}

    /// c * q^e, known through `order`.
    static Series monomial(R c, int e, int order)
    {
        if (e > order)
            throw std::invalid_argument("Series::monomial: exponent beyond order");
        Series s(order);
        if (!is_zero(c)) {
            s.lo_ = e;
            s.coeffs_.push_back(std::move(c));
        }
        return s;
    }

    static Series one(int order) { return monomial(R{1L}, 0, order); }

    /// From dense coefficients for exponents lo, lo+1, ....
    static Series from_coeffs(int lo, std::vector<R> coeffs, int order)
    {
        if (lo + static_cast<int>(coeffs.size()) - 1 > order)
            throw std::invalid_argument("Series::from_coeffs: coefficients beyond order");
        Series s(order);
        s.assign(lo, std::move(coeffs));
        return s;
    }

    int order() const { return order_; }
    int lo() const { return lo_; }
    bool is_zero_series() const { return coeffs_.empty(); }

    /// Exact coefficient of q^e. Asking past the guaranteed order is an
    /// error: that coefficient was never computed.
    const R &coeff(int e) const
    {
        if (e > order_)
            throw std::out_of_range("Series::coeff: exponent " + std::to_string(e) +
                                    " beyond guaranteed order " + std::to_string(order_));
        if (e < lo_ || e > hi())
            return zero_;
        return coeffs_[static_cast<std::size_t>(e - lo_)];
    }

    friend Series operator+(const Series &a, const Series &b)
    {
        int order = std::min(a.order_, b.order_);
        if (a.is_zero_series() && b.is_zero_series())
            return Series(order);
        int lo = std::min(a.lo_, b.lo_);
        lo = std::min(lo, order + 1);
        std::vector<R> c(static_cast<std::size_t>(order - lo + 1), R{});
        for (int e = std::max(lo, a.lo_); e <= std::min(order, a.hi()); ++e)
            c[static_cast<std::size_t>(e - lo)] = c[static_cast<std::size_t>(e - lo)] + a.coeff(e);
        for (int e = std::max(lo, b.lo_); e <= std::min(order, b.hi()); ++e)
            c[static_cast<std::size_t>(e - lo)] = c[static_cast<std::size_t>(e - lo)] + b.coeff(e);
        Series s(order);
        s.assign(lo, std::move(c));
        return s;
    }

    friend Series operator-(const Series &a)
    {
        Series s(a.order_);
        s.lo_ = a.lo_;
        s.coeffs_.reserve(a.coeffs_.size());
        for (const auto &v : a.coeffs_)
            s.coeffs_.push_back(-v);
        return s;
    }

    friend Series operator-(const Series &a, const Series &b) { return a + (-b); }

    /// Cauchy product. Guaranteed order: the unknown tail of one factor
    /// first pollutes exponent order_a + 1 + lo_b (resp. symmetric), hence
    /// min(order_a + lo_b, order_b + lo_a).
    friend Series operator*(const Series &a, const Series &b)
    {
        long order = std::min(static_cast<long>(a.order_) + b.lo_,
                              static_cast<long>(b.order_) + a.lo_);
        order = std::min(order, static_cast<long>(kMaxOrder));
        Series s(static_cast<int>(order));
        if (a.is_zero_series() || b.is_zero_series())
            return s;
        int lo = a.lo_ + b.lo_;
        if (lo > order)
            return s;
        std::vector<R> c(static_cast<std::size_t>(order - lo + 1), R{});
        for (int i = a.lo_; i <= a.hi(); ++i) {
            const R &ai = a.coeffs_[static_cast<std::size_t>(i - a.lo_)];
            if (is_zero(ai))
                continue;
            int jmax = std::min(b.hi(), static_cast<int>(order) - i);
            for (int j = b.lo_; j <= jmax; ++j) {
                const R &bj = b.coeffs_[static_cast<std::size_t>(j - b.lo_)];
                if (is_zero(bj))
                    continue;
                auto &slot = c[static_cast<std::size_t>(i + j - lo)];
                slot = slot + ai * bj;
            }
        }
        s.assign(lo, std::move(c));
        return s;
    }

    /// Exact equality of the stored data: same guaranteed order and same
    /// coefficients. Use first_discrepancy to compare up to a common order.
    friend bool operator==(const Series &a, const Series &b)
    {
        return a.order_ == b.order_ && a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series &a, const Series &b) { return !(a == b); }

    Series &operator+=(const Series &o) { return *this = *this + o; }
    Series &operator-=(const Series &o) { return *this = *this - o; }
    Series &operator*=(const Series &o) { return *this = *this * o; }

    /// Multiplication by q^k.
    Series shift(int k) const
    {
        Series s(order_ + k);
        s.lo_ = lo_ + k;
        s.coeffs_ = coeffs_;
        return s;
    }

    /// Scalar multiple.
    Series scale(const R &c) const
    {
        Series s(order_);
        if (is_zero(c))
            return s;
        std::vector<R> v;
        v.reserve(coeffs_.size());
        for (const auto &x : coeffs_)
            v.push_back(c * x);
        s.assign(lo_, std::move(v));
        return s;
    }

    /// Lower the guaranteed order (drop coefficients above it).
    Series truncate(int order) const
    {
        if (order >= order_)
            return *this;
        Series s(order);
        if (lo_ <= order) {
            std::vector<R> v(coeffs_.begin(),
                             coeffs_.begin() + std::min<long>(coeffs_.size(), order - lo_ + 1));
            s.assign(lo_, std::move(v));
        }
        return s;
    }

    /// Multiplicative inverse; requires a unit leading coefficient
    /// (a non-unit lead means a modeling mistake upstream).
    Series inverse() const
    {
        if (is_zero_series())
            throw std::domain_error("Series::inverse: zero series");
        auto u = unit_inverse(coeffs_.front());
        if (!u)
            throw std::domain_error("Series::inverse: leading coefficient is not a unit");
        // Invert the q^{-lo}-normalized part A (A(0) a unit), known to
        // order n = order_ - lo_; then shift back.
        int n = order_ - lo_;
        std::vector<R> b(static_cast<std::size_t>(n + 1), R{});
        b[0] = *u;
        for (int k = 1; k <= n; ++k) {
            R acc{};
            int jmax = std::min<int>(k, static_cast<int>(coeffs_.size()) - 1);
            for (int j = 1; j <= jmax; ++j)
                acc = acc + coeffs_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
            b[static_cast<std::size_t>(k)] = -(*u * acc);
        }
        Series s(order_ - 2 * lo_);
        s.assign(-lo_, std::move(b));
        return s;
    }

    /// Component of the t-dissection: g with g[m] = this[t*m + r].
    Series dissect(int t, int r) const
    {
        if (t <= 0 || r < 0 || r >= t)
            throw std::invalid_argument("Series::dissect: need 0 <= r < t");
        int gorder = floor_div(order_ - r, t);
        Series g(gorder);
        int mlo = ceil_div(lo_ - r, t);
        if (mlo > gorder)
            return g;
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(gorder - mlo + 1));
        for (int m = mlo; m <= gorder; ++m)
            c.push_back(coeff(t * m + r));
        g.assign(mlo, std::move(c));
        return g;
    }

    /// Substitute q -> q^t (t >= 1). Exponents not divisible by t are
    /// known to vanish, so the guaranteed order tightens to t*order + t-1.
    Series compose_qpow(int t) const
    {
        if (t < 1)
            throw std::invalid_argument("Series::compose_qpow: t must be positive");
        Series s(order_ * t + (t - 1));
        if (is_zero_series())
            return s;
        std::vector<R> c(static_cast<std::size_t>((hi() - lo_) * t + 1), R{});
        for (int e = lo_; e <= hi(); ++e)
            c[static_cast<std::size_t>((e - lo_) * t)] = coeff(e);
        s.assign(lo_ * t, std::move(c));
        return s;
    }

    /// Apply a coefficient map (e.g. ring embedding or evaluation).
    template <typename S, typename F>
    Series<S> map_coeffs(F &&f) const
    {
        Series<S> s(order_);
        if (is_zero_series())
            return s;
        std::vector<S> c;
        c.reserve(coeffs_.size());
        for (const auto &v : coeffs_)
            c.push_back(f(v));
        s.assign(lo_, std::move(c));
        return s;
    }

    std::string str(int max_terms = 12) const
    {
        if (is_zero_series())
            return "O(q^" + std::to_string(order_ + 1) + ")";
        std::string s;
        int printed = 0;
        for (int e = lo_; e <= hi() && printed < max_terms; ++e) {
            const R &c = coeff(e);
            if (is_zero(c))
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + to_string(c) + ")*q^" + std::to_string(e);
            ++printed;
        }
        return s + " + O(q^" + std::to_string(order_ + 1) + ")";
    }

    // Internal: install trimmed coefficients (public for map_coeffs across
    // instantiations).
    void assign(int lo, std::vector<R> c)
    {
        std::size_t b = 0, e = c.size();
        while (b < e && is_zero(c[b]))
            ++b;
        while (e > b && is_zero(c[e - 1]))
            --e;
        if (b == e) {
            lo_ = order_ + 1;
            coeffs_.clear();
        } else {
            lo_ = lo + static_cast<int>(b);
            coeffs_.assign(std::make_move_iterator(c.begin() + static_cast<long>(b)),
                           std::make_move_iterator(c.begin() + static_cast<long>(e)));
            // trailing zeros up to order_ are implicit
        }
    }

private:
    static constexpr int kMaxOrder = 1 << 20;

    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }

    static int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
    static int ceil_div(int a, int b) { return -floor_div(-a, b); }

    int lo_;
    int order_;
    std::vector<R> coeffs_;
    inline static const R zero_{};
};

using IntSeries = Series<Int>;
using CrankSeries = Series<CrankPoly>;

/// First exponent (up to the common guaranteed order) where two series
/// disagree, with the difference; nullopt when they agree throughout.
template <Ring R>
struct Discrepancy {
    int exponent;
    R difference;
};

template <Ring R>
std::optional<Discrepancy<R>> first_discrepancy(const Series<R> &a, const Series<R> &b)
{
    Series<R> d = a - b;
    for (int e = d.lo(); e <= d.order(); ++e)
        if (!is_zero(d.coeff(e)))
            return Discrepancy<R>{e, d.coeff(e)};
    return std::nullopt;
}

/// Reassemble dissection components: sum_r q^r * g_r(q^t).
template <Ring R>
Series<R> reassemble(const std::vector<Series<R>> &parts, int t)
{
    if (static_cast<int>(parts.size()) != t)
        throw std::invalid_argument("reassemble: need exactly t components");
    std::optional<Series<R>> acc;
    for (int r = 0; r < t; ++r) {
        Series<R> piece = parts[static_cast<std::size_t>(r)].compose_qpow(t).shift(r);
        // the r-th component only certifies residues r, so cap at the
        // exponent its order certifies
        piece = piece.truncate(parts[static_cast<std::size_t>(r)].order() * t + r);
        acc = acc ? *acc + piece : piece;
    }
    return *acc;
}

/// Evaluate the crank variable at a primitive t-th root of unity,
/// coefficientwise reduction modulo Phi_t. Ring homomorphism.
template <unsigned P>
Series<Cyclotomic<P>> eval_at_root_of_unity(const Series<CrankPoly> &a)
{
    return a.template map_coeffs<Cyclotomic<P>>([](const CrankPoly &p) {
        Cyclotomic<P> acc;
        for (int m = p.lo(); m <= p.hi(); ++m) {
            const Int &c = p.coeff(m);
            if (c.is_zero())
                continue;
            acc += Cyclotomic<P>::zeta_pow(m).scaled(c);
        }
        return acc;
    });
}

/// Embed an integer series into a larger coefficient ring.
template <Ring S>
Series<S> embed(const Series<Int> &a)
{
    return a.template map_coeffs<S>([](const Int &c) { return S{c}; });
}

} // namespace stq

#endif
