#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sitwist {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace sitwist
