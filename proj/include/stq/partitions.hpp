#ifndef STQ_PARTITIONS_HPP
#define STQ_PARTITIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "stq/series.hpp"

namespace stq {

/// Non-decreasing sequence of positive parts. The empty partition has
/// smallest part "infinity" (represented as 0 absence) and largest part 0.
struct Partition {
    std::vector<int> parts; // non-decreasing

    long long size() const
    {
        long long s = 0;
        for (int p : parts)
            s += p;
        return s;
    }
    int count() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int smallest() const { return parts.empty() ? 0 : parts.front(); }
    int largest() const { return parts.empty() ? 0 : parts.back(); }

    std::string str() const; // "1+1+3", empty -> "-"

    auto operator<=>(const Partition &) const = default;
};

/// Pair (pi1, pi2) with pi1 non-empty, s(pi1) <= s(pi2), l(pi2) < 2 s(pi1).
struct PartitionPair {
    Partition pi1;
    Partition pi2;

    bool in_st() const
    {
        if (pi1.empty())
            return false;
        if (!pi2.empty() && (pi2.smallest() < pi1.smallest() || pi2.largest() >= 2 * pi1.smallest()))
            return false;
        return true;
    }

    auto operator<=>(const PartitionPair &) const = default;
};

/// All ST pairs of total size n, in lexicographic order on (pi1, pi2).
std::vector<PartitionPair> enumerate_st_pairs(int n);

long long st_count(int n);

/// The two-case crank statistic; rejects non-ST pairs.
int paircrank(const PartitionPair &p);

/// C(m, n) for n <= max_n, by direct enumeration or from a series.
struct CrankTable {
    int max_n = 0;
    std::map<std::pair<int, int>, long long> counts; // (m, n) -> C(m, n)

    long long at(int m, int n) const
    {
        auto it = counts.find({m, n});
        return it == counts.end() ? 0 : it->second;
    }
    long long row_sum(int n) const;
};

CrankTable crank_table_enum(int max_n);

/// C(k, t, n) for k = 0..t-1.
std::vector<long long> crank_mod_counts(const CrankTable &table, int t, int n);

/// ST(q) = sum_{n>=1} q^n / ((q^n; q)_inf (q^n; q)_n).
IntSeries st_series(int order);

/// ST(z,q) = sum_{n>=1} q^n (q^{2n}; q)_inf / ((z q^n; q)_inf (z^{-1} q^n; q)_inf).
CrankSeries st_series_z_def(int order);

/// Lambert form: (1/(q;q)_inf) sum_n q^{6n^2+4n+1}(1-q^{6n+2})
///                / ((1-z q^{3n+1})(1-z^{-1} q^{3n+1})).
CrankSeries st_series_z_lambert(int order);

/// Crank rearrangement: sum_n q^n/(zq^n;q)_inf
///   + sum_{n,k>=1} [q^n/((q^n;q)_k (zq^{n+k};q)_inf)]
///     * [z^{-k} q^{kn} (q;q)_{n+k-1} / ((q;q)_{n-1} (q;q)_k)].
CrankSeries st_series_z_crankform(int order);

/// ST(zeta_P, q) directly over Z[zeta_P], via the Lambert form with the
/// two z-denominators expanded geometrically at z = zeta_P.
template <unsigned P>
Series<Cyclotomic<P>> st_zeta_series(int order);

/// Crank table read off a two-variable series (the q^n coefficient's
/// z-expansion). Throws if a count overflows long long.
CrankTable crank_table_from_series(const CrankSeries &s, int max_n);

extern template Series<Cyclotomic<3>> st_zeta_series<3>(int order);
extern template Series<Cyclotomic<5>> st_zeta_series<5>(int order);

} // namespace stq

#endif
