#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qjack {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt factorial(unsigned n);

} // namespace qjack
