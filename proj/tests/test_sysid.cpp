#include <cmath>
#include <complex>
#include <random>
#include <unsupported/Eigen/FFT>
#include <vector>

#include "doctest.h"
#include "platemodal/errors.hpp"
#include "platemodal/modal_sim.hpp"
#include "platemodal/plate_model.hpp"
#include "platemodal/sysid.hpp"
#include "platemodal/transfer.hpp"

using namespace platemodal;

namespace {

PlateConfig reference_config(double alpha) {
  PlateConfig c;
  c.params.rho = 505.6;
  c.params.h = 3.6e-3;
  c.params.e1 = 23e9;
  c.params.e2 = 14e9;
  c.params.g = 2.2e9;
  c.params.nu1 = 0.25;
  c.params.alpha = alpha;
  c.ell1 = 1.0;
  c.ell2 = 0.5;
  c.s0 = {0.17, 0.25};
  c.c0 = {0.5, 0.21};
  c.n_trunc = 6;
  return c;
}

const ModalModel& reference_model() {
  static const ModalModel model = build_modal_model(reference_config(0.0));
  return model;
}

std::vector<int> reference_mode_set() {
  std::vector<int> v;
  for (int i = 3; i <= 12; ++i) v.push_back(i);
  return v;
}

SignalRecord noise_record(int n, double fs, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  SignalRecord rec{fs, {}, SignalLabel::Input};
  rec.samples.reserve(n);
  for (int i = 0; i < n; ++i) rec.samples.push_back(gauss(rng));
  return rec;
}

SimResult round_trip(double alpha, int samples, double fs, const std::vector<int>& mode_set) {
  PlateConfig cfg = reference_config(alpha);
  SimOptions options;
  options.mode_set = mode_set;
  return simulate(reference_model(), cfg, PulseExcitation{1e-3, 1.0}, samples / fs, fs, options);
}

}  // namespace

TEST_CASE("identity system estimates H == 1 on valid bins") {
  const SignalRecord u = noise_record(1024, 2000.0, 17);
  const EmpiricalTF tf = estimate_tf(u, u, 1024, WindowKind::None);
  REQUIRE(tf.h.size() == 513);
  for (std::size_t k = 0; k < tf.h.size(); ++k) {
    if (!tf.valid[k]) continue;
    CHECK(std::abs(tf.h[k] - std::complex<double>(1.0, 0.0)) < 1e-10);
  }
}

TEST_CASE("one-sample delay: unit magnitude, linear phase") {
  const int n = 2048;
  const double fs = 1000.0;
  const SignalRecord u = noise_record(n + 1, fs, 3);
  SignalRecord y{fs, std::vector<double>(n + 1, 0.0), SignalLabel::Output};
  for (int k = 1; k <= n; ++k) y.samples[k] = u.samples[k - 1];
  // restrict to the first n samples of both to keep the delay exact circularly
  SignalRecord u_head{fs, {u.samples.begin(), u.samples.begin() + n}, SignalLabel::Input};
  SignalRecord y_head{fs, {y.samples.begin(), y.samples.begin() + n}, SignalLabel::Output};
  const EmpiricalTF tf = estimate_tf(u_head, y_head, n, WindowKind::None);
  for (int k = 2; k < n / 2; k += 97) {
    if (!tf.valid[k]) continue;
    CHECK(std::abs(tf.h[k]) == doctest::Approx(1.0).epsilon(5e-2));
    const double expected_phase = -2.0 * M_PI * tf.frequency_hz[k] / fs;
    const double dphase = std::remainder(std::arg(tf.h[k]) - expected_phase, 2.0 * M_PI);
    CHECK(std::abs(dphase) < 5e-2);
  }
}

TEST_CASE("estimate_tf input validation") {
  const SignalRecord u = noise_record(512, 1000.0, 5);
  SignalRecord v = u;
  v.sample_rate = 2000.0;
  CHECK_THROWS_AS(estimate_tf(u, v, 512, WindowKind::None), DomainError);
  CHECK_THROWS_AS(estimate_tf(u, u, 300, WindowKind::None), DomainError);
  CHECK_THROWS_AS(estimate_tf(u, u, 1024, WindowKind::None), DomainError);
  const SignalRecord zero{1000.0, std::vector<double>(512, 0.0), SignalLabel::Input};
  CHECK_THROWS_AS(estimate_tf(zero, zero, 512, WindowKind::None), SignalError);
}

TEST_CASE("parseval identity for the FFT backend") {
  for (WindowKind window : {WindowKind::None, WindowKind::Hann}) {
    const int n = 4096;
    std::vector<double> x = noise_record(n, 1.0, 23).samples;
    if (window == WindowKind::Hann)
      for (int j = 0; j < n; ++j) x[j] *= 0.5 * (1.0 - std::cos(2.0 * M_PI * j / n));
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, x);
    double e_time = 0.0, e_freq = 0.0;
    for (double v : x) e_time += v * v;
    for (const auto& c : spec) e_freq += std::norm(c);
    e_freq /= n;
    CHECK(e_freq == doctest::Approx(e_time).epsilon(1e-9));
  }
}

TEST_CASE("reference round trip at 2^15: peak bins sit on the visible modes") {
  const int n = 1 << 15;
  const double fs = 30000.0;
  const SimResult sim = round_trip(1.0, n, fs, reference_mode_set());
  const EmpiricalTF tf = estimate_tf(sim.input, sim.output, n, WindowKind::None);
  const PeakList peaks = find_modal_peaks(tf, 5.0, 150.0, 4);
  REQUIRE(peaks.peaks.size() == 4);
  // Modes with even-even parity carry the response; the midline actuator and
  // sensor zero out the residues of the other low modes exactly.
  const std::vector<double> visible{25.0455, 79.1405, 106.908, 137.320};
  const double bin = fs / n;
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(peaks.peaks[i].frequency_hz - visible[i]) < bin);
    CHECK(std::abs(peaks.peaks[i].frequency_hz - visible[i]) < 0.5);
  }
}

TEST_CASE("long-record spectral ratio converges to the analytic response") {
  const int n = 1 << 19;
  const double fs = 30000.0;
  const PlateConfig cfg = reference_config(1.0);
  const SimResult sim = round_trip(1.0, n, fs, reference_mode_set());
  const EmpiricalTF tf = estimate_tf(sim.input, sim.output, n, WindowKind::None);
  const TransferFunction analytic = build_transfer(reference_model(), cfg, reference_mode_set());
  double worst = 0.0;
  for (std::size_t k = 0; k < tf.h.size(); ++k) {
    if (!tf.valid[k]) continue;
    const double f = tf.frequency_hz[k];
    if (f < 5.0 || f > 150.0) continue;
    const double exact = std::abs(eval_tf(analytic, std::complex<double>(0.0, 2 * M_PI * f)));
    worst = std::max(worst, std::abs(std::abs(tf.h[k]) - exact) / exact);
  }
  CHECK(worst < 0.05);
}

TEST_CASE("hann and rectangular windows agree on peak locations") {
  const int n = 1 << 17;
  const double fs = 30000.0;
  PlateConfig cfg = reference_config(1.0);
  SimOptions options;
  options.mode_set = reference_mode_set();
  const SimResult sim = simulate(reference_model(), cfg, ChirpExcitation{5.0, 150.0, 1.0}, n / fs, fs,
                                 options);
  const EmpiricalTF plain = estimate_tf(sim.input, sim.output, n, WindowKind::None);
  const EmpiricalTF hann = estimate_tf(sim.input, sim.output, n, WindowKind::Hann);
  const PeakList pp = find_modal_peaks(plain, 10.0, 100.0, 2);
  const PeakList ph = find_modal_peaks(hann, 10.0, 100.0, 2);
  REQUIRE(pp.peaks.size() == 2);
  REQUIRE(ph.peaks.size() == 2);
  const double bin = fs / n;
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(pp.peaks[i].frequency_hz - ph.peaks[i].frequency_hz) < bin);
}

TEST_CASE("find_modal_peaks: isolated and paired synthetic modes") {
  const double fs = 30000.0;
  const int n = 1 << 17;
  SUBCASE("one mode, one peak at its frequency") {
    const SimResult sim = round_trip(1.0, n, fs, {4});
    const EmpiricalTF tf = estimate_tf(sim.input, sim.output, n, WindowKind::None);
    const PeakList peaks = find_modal_peaks(tf, 5.0, 150.0, 3);
    REQUIRE(peaks.peaks.size() >= 1);
    CHECK(peaks.shortfall);
    CHECK(std::abs(peaks.peaks.front().frequency_hz - 25.0455) < 0.5 * fs / n + 0.05);
  }
  SUBCASE("two well-separated modes in ascending order") {
    const SimResult sim = round_trip(1.0, n, fs, {4, 7});
    const EmpiricalTF tf = estimate_tf(sim.input, sim.output, n, WindowKind::None);
    const PeakList peaks = find_modal_peaks(tf, 5.0, 150.0, 2);
    REQUIRE(peaks.peaks.size() == 2);
    CHECK(peaks.peaks[0].frequency_hz < peaks.peaks[1].frequency_hz);
    CHECK(std::abs(peaks.peaks[0].frequency_hz - 25.0455) < 0.1);
    CHECK(std::abs(peaks.peaks[1].frequency_hz - 79.1405) < 0.1);
  }
  SUBCASE("requesting five peaks in a two-mode band reports a shortfall") {
    const SimResult sim = round_trip(1.0, 1 << 19, fs, reference_mode_set());
    const EmpiricalTF tf = estimate_tf(sim.input, sim.output, 1 << 19, WindowKind::None);
    const PeakList peaks = find_modal_peaks(tf, 10.0, 100.0, 5);
    CHECK(peaks.shortfall);
    REQUIRE(peaks.peaks.size() >= 2);
    // rank by magnitude to pick out the two real resonances among any
    // shallow background wiggles
    std::vector<ModalPeak> ranked = peaks.peaks;
    std::sort(ranked.begin(), ranked.end(),
              [](const ModalPeak& a, const ModalPeak& b) { return a.magnitude > b.magnitude; });
    CHECK(std::abs(ranked[0].frequency_hz - 25.0455) < 0.5);
    CHECK(std::abs(ranked[1].frequency_hz - 79.1405) < 0.5);
  }
  SUBCASE("band validation") {
    const SimResult sim = round_trip(1.0, 1 << 12, fs, {4});
    const EmpiricalTF tf = estimate_tf(sim.input, sim.output, 1 << 12, WindowKind::None);
    CHECK_THROWS_AS(find_modal_peaks(tf, 100.0, 50.0, 2), DomainError);
    CHECK_THROWS_AS(find_modal_peaks(tf, 0.0, 20000.0, 2), DomainError);
  }
}

TEST_CASE("chirp drive concentrates the output energy in its band") {
  const int n = 1 << 15;
  const double fs = 30000.0;
  PlateConfig cfg = reference_config(1.0);
  SimOptions options;
  options.mode_set = reference_mode_set();
  const SimResult sim = simulate(reference_model(), cfg, ChirpExcitation{5.0, 150.0, 1.0},
                                 n / fs, fs, options);
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, sim.output.samples);
  double in_band = 0.0, total = 0.0;
  for (int k = 0; k <= n / 2; ++k) {
    const double e = std::norm(spectrum[k]);
    total += e;
    if (k * fs / n <= 160.0) in_band += e;  // sweep band plus smearing margin
  }
  CHECK(in_band / total > 0.95);
}

TEST_CASE("half-power damping recovery on an isolated mode") {
  // one visible mode at ~25 Hz, long low-rate record for fine bins
  const double fs = 256.0;
  const int n = 1 << 16;
  for (double alpha : {0.5, 1.0, 2.0}) {
    PlateConfig cfg = reference_config(alpha);
    SimOptions options;
    options.mode_set = std::vector<int>{4};
    const SimResult sim =
        simulate(reference_model(), cfg, PulseExcitation{1e-3, 1.0}, n / fs, fs, options);
    const EmpiricalTF tf = estimate_tf(sim.input, sim.output, n, WindowKind::None);
    const PeakList peaks = find_modal_peaks(tf, 10.0, 100.0, 1);
    REQUIRE(peaks.peaks.size() == 1);
    const double est = fit_damping(tf, peaks.peaks.front().frequency_hz);
    CHECK(std::abs(est - alpha) / alpha < 0.10);
  }
}

TEST_CASE("doubled damping doubles the estimate") {
  const double fs = 256.0;
  const int n = 1 << 16;
  auto estimate = [&](double alpha) {
    PlateConfig cfg = reference_config(alpha);
    SimOptions options;
    options.mode_set = std::vector<int>{4};
    const SimResult sim =
        simulate(reference_model(), cfg, PulseExcitation{1e-3, 1.0}, n / fs, fs, options);
    const EmpiricalTF tf = estimate_tf(sim.input, sim.output, n, WindowKind::None);
    return fit_damping(tf, 25.0455);
  };
  const double a1 = estimate(0.8), a2 = estimate(1.6);
  CHECK(std::abs(a2 - 2.0 * a1) / (2.0 * a1) < 0.15);
}

TEST_CASE("zero damping leaves no finite half-power bandwidth") {
  const double fs = 256.0;
  const int n = 1 << 16;
  PlateConfig cfg = reference_config(0.0);
  SimOptions options;
  options.mode_set = std::vector<int>{4};
  const SimResult sim =
      simulate(reference_model(), cfg, PulseExcitation{1e-3, 1.0}, n / fs, fs, options);
  const EmpiricalTF tf = estimate_tf(sim.input, sim.output, n, WindowKind::None);
  CHECK_THROWS_AS(fit_damping(tf, 25.0455), BandwidthError);
}
