#ifndef FCONE_FFTR_HPP
#define FCONE_FFTR_HPP

#include <vector>

#include "fcone/scalar.hpp"

namespace fcone::fftr {

// In-place radix-2 transform. sign=+1 computes sum_j a_j e^{+2pi i jn/N},
// sign=-1 the conjugate sum; no 1/N normalization either way.
void fft(std::vector<Complex>& a, int sign);

// Convenience: out_n = sum_j a_j e^{sign * 2pi i jn / N}.
std::vector<Complex> dft(const std::vector<Complex>& a, int sign);

} // namespace fcone::fftr

#endif
