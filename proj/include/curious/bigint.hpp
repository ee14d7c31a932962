#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace curious {

using Int = boost::multiprecision::cpp_int;

inline Int pow10(unsigned e) {
    return boost::multiprecision::pow(Int(10), e);
}

}  // namespace curious
