#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "pelljeru/pell.hpp"

namespace pelljeru::detail {

using Real100 = boost::multiprecision::cpp_bin_float_100;

inline boost::multiprecision::cpp_int to_cpp_int(PellValue v) {
  boost::multiprecision::cpp_int out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out |= static_cast<std::uint64_t>(v);
  return out;
}

inline Real100 to_real(PellValue v) { return Real100(to_cpp_int(v)); }

}  // namespace pelljeru::detail
