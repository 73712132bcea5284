#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hgnoise {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

BigInt binomial(int n, int k);

std::string to_fraction_string(const BigRat& r);  // "num/den", den omitted at 1

}  // namespace hgnoise
