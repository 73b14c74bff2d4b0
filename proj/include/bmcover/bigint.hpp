#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bmcover {

// Entry growth in monodromy products is super-exponential in word length,
// so everything arithmetic runs on arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

} // namespace bmcover
