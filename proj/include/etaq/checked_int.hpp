#ifndef ETAQ_CHECKED_INT_HPP
#define ETAQ_CHECKED_INT_HPP

#include <cstdint>
#include <string>

#include "etaq/errors.hpp"

namespace etaq {

using int128 = __int128;

inline int128 checked_add(int128 x, int128 y)
{
    int128 r;
    if (__builtin_add_overflow(x, y, &r))
        throw overflow_error("128-bit addition overflow");
    return r;
}

inline int128 checked_sub(int128 x, int128 y)
{
    int128 r;
    if (__builtin_sub_overflow(x, y, &r))
        throw overflow_error("128-bit subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 x, int128 y)
{
    int128 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw overflow_error("128-bit multiplication overflow");
    return r;
}

/* -1 to the power e, for any integer e */
inline int sign_pow(int64_t e)
{
    return (e % 2 == 0) ? 1 : -1;
}

/* Always in [0, m) */
inline int64_t mod(int64_t x, int64_t m)
{
    int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::string to_string(int128 v);

} // namespace etaq

#endif /* ETAQ_CHECKED_INT_HPP */
