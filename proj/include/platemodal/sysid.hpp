#pragma once

#include <complex>
#include <vector>

#include "platemodal/modal_sim.hpp"

namespace platemodal {

enum class WindowKind { None, Hann };

/// Spectral-ratio transfer-function estimate on the first n_fft/2 + 1 bins.
struct EmpiricalTF {
  std::vector<double> frequency_hz;
  std::vector<std::complex<double>> h;
  std::vector<char> valid;  // 0 where the input spectrum sits below the floor
  WindowKind window = WindowKind::None;
  int n_fft = 0;
  double sample_rate = 0.0;
};

/// H(f_k) = FFT(windowed output)_k / FFT(windowed input)_k over the first
/// n_fft samples.  Bins whose input magnitude falls below 1e-8 of the input
/// spectral peak are marked invalid (h set to zero) instead of dividing.
EmpiricalTF estimate_tf(const SignalRecord& input, const SignalRecord& output, int n_fft,
                        WindowKind window);

struct ModalPeak {
  double frequency_hz;  // refined by quadratic interpolation over 3 bins
  double magnitude;
};

struct PeakList {
  std::vector<ModalPeak> peaks;  // ascending frequency
  bool shortfall = false;        // fewer maxima found than requested
};

/// Largest `count` local maxima of |H| inside [f_min, f_max].
PeakList find_modal_peaks(const EmpiricalTF& tf, double f_min, double f_max, int count);

/// Viscous damping from the half-power (-3 dB) bandwidth around a peak:
/// alpha = 2*pi*(f_hi - f_lo).  Throws BandwidthError when the half-power
/// points cannot be bracketed at the grid resolution.
double fit_damping(const EmpiricalTF& tf, double peak_hz);

}  // namespace platemodal
