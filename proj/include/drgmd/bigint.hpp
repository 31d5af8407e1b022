#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace drg {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace drg
