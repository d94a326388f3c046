#include "stq/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "stq/qseries.hpp"

namespace stq {

std::string Partition::str() const
{
    if (parts.empty())
        return "-";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += "+";
        s += std::to_string(parts[i]);
    }
    return s;
}

namespace {

// Partitions of m with non-decreasing parts in [lo, hi], emitted in
// lexicographic order.
void partitions_in_range(int m, int lo, int hi, std::vector<int> &stack,
                         const std::function<void(const std::vector<int> &)> &emit)
{
    if (m == 0) {
        emit(stack);
        return;
    }
    for (int p = lo; p <= std::min(m, hi); ++p) {
        stack.push_back(p);
        partitions_in_range(m - p, p, hi, stack, emit);
        stack.pop_back();
    }
}

} // namespace

std::vector<PartitionPair> enumerate_st_pairs(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_st_pairs: negative n");
    std::vector<PartitionPair> out;
    // pi1 grouped by its smallest part s; pi2 parts confined to [s, 2s-1].
    for (int s = 1; s <= n; ++s) {
        for (int m1 = s; m1 <= n; ++m1) {
            int m2 = n - m1;
            std::vector<Partition> firsts;
            std::vector<int> stack{s};
            partitions_in_range(m1 - s, s, m1, stack,
                                [&](const std::vector<int> &p) { firsts.push_back({p}); });
            std::vector<Partition> seconds;
            std::vector<int> stack2;
            partitions_in_range(m2, s, 2 * s - 1, stack2,
                                [&](const std::vector<int> &p) { seconds.push_back({p}); });
            for (const auto &p1 : firsts)
                for (const auto &p2 : seconds)
                    out.push_back({p1, p2});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long st_count(int n) { return static_cast<long long>(enumerate_st_pairs(n).size()); }

int paircrank(const PartitionPair &p)
{
    if (!p.in_st())
        throw std::invalid_argument("paircrank: pair violates the ST conditions");
    int k = p.pi2.count();
    if (k == 0)
        return p.pi1.count() - 1;
    int threshold = p.pi1.smallest() + k;
    int big = 0;
    for (int part : p.pi1.parts)
        if (part >= threshold)
            ++big;
    return big - k;
}

CrankTable crank_table_enum(int max_n)
{
    CrankTable t;
    t.max_n = max_n;
    for (int n = 0; n <= max_n; ++n)
        for (const auto &pair : enumerate_st_pairs(n))
            ++t.counts[{paircrank(pair), n}];
    return t;
}

long long CrankTable::row_sum(int n) const
{
    long long s = 0;
    for (const auto &[key, v] : counts)
        if (key.second == n)
            s += v;
    return s;
}

std::vector<long long> crank_mod_counts(const CrankTable &table, int t, int n)
{
    if (t <= 0)
        throw std::invalid_argument("crank_mod_counts: t must be positive");
    if (n > table.max_n)
        throw std::out_of_range("crank_mod_counts: n beyond table");
    std::vector<long long> out(static_cast<std::size_t>(t), 0);
    for (const auto &[key, v] : table.counts) {
        if (key.second != n)
            continue;
        int r = key.first % t;
        if (r < 0)
            r += t;
        out[static_cast<std::size_t>(r)] += v;
    }
    return out;
}

IntSeries st_series(int order)
{
    if (order < 1)
        throw std::invalid_argument("st_series: order must be >= 1");
    IntSeries acc(order);
    for (int n = 1; n <= order; ++n) {
        IntSeries den = pochhammer_inf(qpow(n), 1, order) * pochhammer_finite(qpow(n), 1, n, order);
        acc += den.truncate(order).inverse().truncate(order - n).shift(n);
    }
    return acc.truncate(order);
}

CrankSeries st_series_z_def(int order)
{
    if (order < 1)
        throw std::invalid_argument("st_series_z_def: order must be >= 1");
    CrankSeries acc(order);
    for (int n = 1; n <= order; ++n) {
        CrankSeries den =
            pochhammer_inf(zqpow(1, n), 1, order) * pochhammer_inf(zqpow(-1, n), 1, order);
        CrankSeries num = embed<CrankPoly>(euler_product(2 * n, 1, order));
        acc += (num * den.truncate(order).inverse()).truncate(order - n).shift(n);
    }
    return acc.truncate(order);
}

namespace {

// 1/(1 - z^ze q^d) as a truncated series; for d < 0 rewritten as
// -z^{-ze} q^{-d} / (1 - z^{-ze} q^{-d}).
CrankSeries crank_geometric(int ze, int d, int order)
{
    if (d == 0)
        throw std::invalid_argument("crank_geometric: zero q-exponent");
    bool neg = d < 0;
    int ad = neg ? -d : d;
    int zz = neg ? -ze : ze;
    std::vector<CrankPoly> dense(static_cast<std::size_t>(order + 1), CrankPoly(0));
    for (int j = neg ? 1 : 0; static_cast<long>(j) * ad <= order; ++j)
        dense[static_cast<std::size_t>(j * ad)] =
            CrankPoly::term(Int(neg ? -1 : 1), zz * j);
    return CrankSeries::from_coeffs(0, std::move(dense), order);
}

} // namespace

CrankSeries st_series_z_lambert(int order)
{
    if (order < 1)
        throw std::invalid_argument("st_series_z_lambert: order must be >= 1");
    CrankSeries acc(order);
    long N = order / 2 + 3;
    for (long n = -N; n <= N; ++n) {
        long base = 6 * n * n + 4 * n + 1;
        int d = static_cast<int>(3 * n + 1);
        long min_exp = base + std::min(0L, 6 * n + 2) + 2L * std::max(0, -d);
        if (min_exp > order)
            continue;
        // widen so the shifted product still certifies `order`
        int inner = order - static_cast<int>(std::min(base + std::min(0L, 6 * n + 2), 0L));
        CrankSeries term = crank_geometric(1, d, inner) * crank_geometric(-1, d, inner);
        CrankSeries num = CrankSeries::one(inner) -
                          CrankSeries::monomial(CrankPoly(1), static_cast<int>(6 * n + 2), inner);
        acc += (term * num).shift(static_cast<int>(base)).truncate(order);
    }
    IntSeries eta_inv = euler_product(1, 1, order).inverse();
    return (acc * embed<CrankPoly>(eta_inv)).truncate(order);
}

CrankSeries st_series_z_crankform(int order)
{
    if (order < 1)
        throw std::invalid_argument("st_series_z_crankform: order must be >= 1");
    CrankSeries acc(order);
    for (int n = 1; n <= order; ++n)
        acc += pochhammer_inf(zqpow(1, n), 1, order)
                   .inverse()
                   .truncate(order - n)
                   .shift(n);
    for (int n = 1; n <= order; ++n) {
        for (int k = 1; n + static_cast<long>(k) * n <= order; ++k) {
            // Gaussian-binomial factor (q;q)_{n+k-1} / ((q;q)_{n-1} (q;q)_k)
            IntSeries gauss = pochhammer_finite(qpow(1), 1, n + k - 1, order) *
                              (pochhammer_finite(qpow(1), 1, n - 1, order) *
                               pochhammer_finite(qpow(1), 1, k, order))
                                  .truncate(order)
                                  .inverse();
            CrankSeries term = pochhammer_finite(zqpow(0, n), 1, k, order)
                                   .inverse()
                                   .truncate(order) *
                               pochhammer_inf(zqpow(1, n + k), 1, order).inverse();
            term = term.truncate(order) * embed<CrankPoly>(gauss.truncate(order));
            term = term.truncate(order - n - k * n)
                       .shift(n + k * n)
                       .scale(CrankPoly::term(Int(1), -k));
            acc += term;
        }
    }
    return acc.truncate(order);
}

template <unsigned P>
Series<Cyclotomic<P>> st_zeta_series(int order)
{
    using C = Cyclotomic<P>;
    if (order < 1)
        throw std::invalid_argument("st_zeta_series: order must be >= 1");
    auto geometric = [&](int zsign, int d, int ord) {
        bool neg = d < 0;
        int ad = neg ? -d : d;
        int zz = neg ? -zsign : zsign;
        std::vector<C> dense(static_cast<std::size_t>(ord + 1), C{});
        for (int j = neg ? 1 : 0; static_cast<long>(j) * ad <= ord; ++j) {
            C v = C::zeta_pow(static_cast<long>(zz) * j);
            dense[static_cast<std::size_t>(j * ad)] = neg ? -v : v;
        }
        return Series<C>::from_coeffs(0, std::move(dense), ord);
    };
    Series<C> acc(order);
    long N = order / 2 + 3;
    for (long n = -N; n <= N; ++n) {
        long base = 6 * n * n + 4 * n + 1;
        int d = static_cast<int>(3 * n + 1);
        long min_exp = base + std::min(0L, 6 * n + 2) + 2L * std::max(0, -d);
        if (min_exp > order)
            continue;
        int inner = order - static_cast<int>(std::min(base + std::min(0L, 6 * n + 2), 0L));
        Series<C> term = geometric(1, d, inner) * geometric(-1, d, inner);
        Series<C> num =
            Series<C>::one(inner) - Series<C>::monomial(C{1L}, static_cast<int>(6 * n + 2), inner);
        acc += (term * num).shift(static_cast<int>(base)).truncate(order);
    }
    IntSeries eta_inv = euler_product(1, 1, order).inverse();
    return (acc * embed<C>(eta_inv)).truncate(order);
}

template Series<Cyclotomic<3>> st_zeta_series<3>(int order);
template Series<Cyclotomic<5>> st_zeta_series<5>(int order);

CrankTable crank_table_from_series(const CrankSeries &s, int max_n)
{
    if (max_n > s.order())
        throw std::out_of_range("crank_table_from_series: series order too small");
    CrankTable t;
    t.max_n = max_n;
    for (int n = 0; n <= max_n; ++n) {
        const CrankPoly &p = s.coeff(n);
        for (int m = p.lo(); m <= p.hi(); ++m) {
            Int c = p.coeff(m);
            if (c.is_zero())
                continue;
            if (c < 0)
                throw std::domain_error("crank_table_from_series: negative count");
            t.counts[{m, n}] = c.convert_to<long long>();
        }
    }
    return t;
}

} // namespace stq
