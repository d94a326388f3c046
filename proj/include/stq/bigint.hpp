#ifndef STQ_BIGINT_HPP
#define STQ_BIGINT_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stq {

// Exact arbitrary-precision integer, the base coefficient ring.
using Int = boost::multiprecision::cpp_int;

inline bool is_zero(const Int &x) { return x.is_zero(); }

// Multiplicative inverse when the element is a unit (only +-1 in Z).
inline std::optional<Int> unit_inverse(const Int &x)
{
    if (x == 1 || x == -1)
        return x;
    return std::nullopt;
}

inline std::string to_string(const Int &x) { return x.str(); }

} // namespace stq

#endif
