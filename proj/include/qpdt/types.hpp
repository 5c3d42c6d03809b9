#pragma once

#include <complex>
#include <functional>

namespace qpdt {

using Complex = std::complex<double>;

/// A complex-valued function of one real variable.
using ComplexFunction = std::function<Complex(double)>;

}  // namespace qpdt
