#include "platemodal/sysid.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/FFT>

#include "platemodal/errors.hpp"

namespace platemodal {
namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<std::complex<double>> windowed_fft(const std::vector<double>& samples, int n_fft,
                                               WindowKind window) {
  std::vector<double> buf(samples.begin(), samples.begin() + n_fft);
  if (window == WindowKind::Hann) {
    for (int j = 0; j < n_fft; ++j)
      buf[j] *= 0.5 * (1.0 - std::cos(2.0 * M_PI * j / n_fft));
  }
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> out;
  fft.fwd(out, buf);
  return out;
}

}  // namespace

EmpiricalTF estimate_tf(const SignalRecord& input, const SignalRecord& output, int n_fft,
                        WindowKind window) {
  if (input.sample_rate != output.sample_rate)
    throw DomainError("estimate_tf: sample-rate mismatch between input and output");
  if (!is_power_of_two(n_fft)) throw DomainError("estimate_tf: n_fft must be a power of two");
  if (static_cast<int>(input.samples.size()) < n_fft ||
      static_cast<int>(output.samples.size()) < n_fft)
    throw DomainError("estimate_tf: records shorter than n_fft");

  const auto u = windowed_fft(input.samples, n_fft, window);
  const auto y = windowed_fft(output.samples, n_fft, window);

  double u_max = 0.0;
  for (int k = 0; k <= n_fft / 2; ++k) u_max = std::max(u_max, std::abs(u[k]));
  if (u_max <= 0.0) throw SignalError("estimate_tf: input spectrum is identically zero");
  const double floor = 1e-8 * u_max;

  EmpiricalTF tf;
  tf.window = window;
  tf.n_fft = n_fft;
  tf.sample_rate = input.sample_rate;
  const int bins = n_fft / 2 + 1;
  tf.frequency_hz.resize(bins);
  tf.h.resize(bins);
  tf.valid.resize(bins);
  int valid_count = 0;
  for (int k = 0; k < bins; ++k) {
    tf.frequency_hz[k] = k * input.sample_rate / n_fft;
    if (std::abs(u[k]) < floor) {
      tf.h[k] = 0.0;
      tf.valid[k] = 0;
    } else {
      tf.h[k] = y[k] / u[k];
      tf.valid[k] = 1;
      ++valid_count;
    }
  }
  if (valid_count == 0) throw SignalError("estimate_tf: every input bin below the coherence floor");
  return tf;
}

PeakList find_modal_peaks(const EmpiricalTF& tf, double f_min, double f_max, int count) {
  if (!(f_min < f_max)) throw DomainError("find_modal_peaks: need f_min < f_max");
  if (count < 1) throw DomainError("find_modal_peaks: count must be positive");
  const int bins = static_cast<int>(tf.h.size());
  if (f_min < 0.0 || f_max > tf.frequency_hz.back())
    throw DomainError("find_modal_peaks: band outside the estimated grid");
  const double df = tf.sample_rate / tf.n_fft;

  struct Candidate {
    int bin;
    double freq, mag;
  };
  std::vector<Candidate> found;
  for (int k = 1; k + 1 < bins; ++k) {
    if (tf.frequency_hz[k] < f_min || tf.frequency_hz[k] > f_max) continue;
    if (!tf.valid[k - 1] || !tf.valid[k] || !tf.valid[k + 1]) continue;
    const double m0 = std::abs(tf.h[k - 1]);
    const double m1 = std::abs(tf.h[k]);
    const double m2 = std::abs(tf.h[k + 1]);
    if (!(m1 > m0 && m1 > m2)) continue;
    // Quadratic refinement through the three bins around the maximum.
    const double denom = m0 - 2.0 * m1 + m2;
    double shift = 0.0;
    if (denom < 0.0) shift = 0.5 * (m0 - m2) / denom;
    shift = std::clamp(shift, -0.5, 0.5);
    const double freq = (k + shift) * df;
    const double mag = m1 - 0.25 * (m0 - m2) * shift;
    found.push_back({k, freq, mag});
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.mag > b.mag; });
  PeakList out;
  out.shortfall = static_cast<int>(found.size()) < count;
  const int keep = std::min<int>(count, static_cast<int>(found.size()));
  out.peaks.reserve(keep);
  for (int i = 0; i < keep; ++i) out.peaks.push_back({found[i].freq, found[i].mag});
  std::sort(out.peaks.begin(), out.peaks.end(),
            [](const ModalPeak& a, const ModalPeak& b) { return a.frequency_hz < b.frequency_hz; });
  return out;
}

double fit_damping(const EmpiricalTF& tf, double peak_hz) {
  const int bins = static_cast<int>(tf.h.size());
  const double df = tf.sample_rate / tf.n_fft;
  int center = static_cast<int>(std::lround(peak_hz / df));
  if (center < 1 || center + 1 >= bins) throw DomainError("fit_damping: peak outside the grid");
  // Snap to the local maximum within a few bins of the given frequency.
  for (int k = std::max(1, center - 3); k <= std::min(bins - 2, center + 3); ++k)
    if (std::abs(tf.h[k]) > std::abs(tf.h[center])) center = k;

  const double target = std::abs(tf.h[center]) / std::sqrt(2.0);

  int lo = center;
  while (lo > 0 && tf.valid[lo] && std::abs(tf.h[lo]) > target) --lo;
  if (!tf.valid[lo] || std::abs(tf.h[lo]) > target)
    throw BandwidthError("fit_damping: left half-power point not bracketed");
  int hi = center;
  while (hi + 1 < bins && tf.valid[hi] && std::abs(tf.h[hi]) > target) ++hi;
  if (!tf.valid[hi] || std::abs(tf.h[hi]) > target)
    throw BandwidthError("fit_damping: right half-power point not bracketed");

  if (lo == center - 1 && hi == center + 1)
    throw BandwidthError("fit_damping: peak not resolved at the grid resolution");

  const double m_lo0 = std::abs(tf.h[lo]), m_lo1 = std::abs(tf.h[lo + 1]);
  const double f_lo = tf.frequency_hz[lo] + df * (target - m_lo0) / (m_lo1 - m_lo0);
  const double m_hi0 = std::abs(tf.h[hi - 1]), m_hi1 = std::abs(tf.h[hi]);
  const double f_hi = tf.frequency_hz[hi - 1] + df * (m_hi0 - target) / (m_hi0 - m_hi1);
  return 2.0 * M_PI * (f_hi - f_lo);
}

}  // namespace platemodal
