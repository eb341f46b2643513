#ifndef QLIM_FFT_HPP
#define QLIM_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qlim::fft {

/// X[k] = sum_j x[j] e^{-2 pi i j k / n}, k = 0 .. n/2 (real input).
void real_forward(std::span<const double> in, std::vector<std::complex<double>>& out);

/// x[j] = sum_k X[k] e^{+2 pi i j k / n} with Hermitian extension of the
/// n/2+1 stored bins; unnormalized (divide by n for the inverse DFT).
void real_inverse(std::span<const std::complex<double>> in, std::size_t n,
                  std::vector<double>& out);

}  // namespace qlim::fft

#endif
