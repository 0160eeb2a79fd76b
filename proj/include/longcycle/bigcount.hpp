#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace longcycle {

/// Exact nonnegative counts; never saturates.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(int n) {
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigCount bigpow(const BigCount& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

} // namespace longcycle
