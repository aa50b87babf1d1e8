#pragma once

#include "webcurv/poly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>

namespace webcurv::num {

// about 200 bits
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>, boost::multiprecision::et_off>;
using Complex = boost::multiprecision::number<boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<60>>, boost::multiprecision::et_off>;

// the complex root of the minimal polynomial of smallest argument in [0, 2 pi)
Complex generator_value(Field K);
// all roots of the minimal polynomial, generator_value first
std::vector<Complex> conjugates(Field K);
Complex embed(const FieldScalar &s);
Complex embed(const FieldScalar &s, const Complex &alpha);
Complex to_complex(const Rational &q);
std::complex<double> to_double(const FieldScalar &s);

// simultaneous root finding, coefficients low to high, nonzero leading coefficient
std::vector<Complex> polynomial_roots(const std::vector<Complex> &coeffs);

// best rational approximation within tol, or false
bool recognize_rational(const Real &v, const Real &tol, Rational &out);

} // namespace webcurv::num
