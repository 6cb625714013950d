#include "platemodal/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "platemodal/errors.hpp"

namespace platemodal {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) throw DomainError("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open for reading: " + path.string());
  return in;
}

double parse_number(const std::string& field, const std::filesystem::path& path, int row) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw DomainError(path.string() + ": row " + std::to_string(row) + ": bad number '" + field +
                      "'");
  }
}

}  // namespace

std::string format_g9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void write_signal_csv(const std::filesystem::path& path, const SignalRecord& record) {
  auto out = open_for_write(path);
  out << "time_s,value\n";
  for (std::size_t k = 0; k < record.samples.size(); ++k)
    out << format_g9(static_cast<double>(k) / record.sample_rate) << ','
        << format_g9(record.samples[k]) << '\n';
}

SignalRecord read_signal_csv(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) throw DomainError(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "time_s,value")
    throw DomainError(path.string() + ": row 1: expected header 'time_s,value'");

  SignalRecord rec;
  std::vector<double> times;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw DomainError(path.string() + ": row " + std::to_string(row) + ": expected two columns");
    times.push_back(parse_number(line.substr(0, comma), path, row));
    rec.samples.push_back(parse_number(line.substr(comma + 1), path, row));
    if (!std::isfinite(rec.samples.back()))
      throw DomainError(path.string() + ": row " + std::to_string(row) + ": non-finite value");
  }
  if (rec.samples.empty()) throw DomainError(path.string() + ": no samples");
  if (times.size() >= 2) {
    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) throw DomainError(path.string() + ": row 3: non-increasing time column");
    rec.sample_rate = 1.0 / dt;
  } else {
    rec.sample_rate = 1.0;
  }
  return rec;
}

SignalRecord read_signal_column(const std::filesystem::path& path, double sample_rate) {
  if (!(sample_rate > 0.0)) throw DomainError("read_signal_column: sample rate must be positive");
  auto in = open_for_read(path);
  SignalRecord rec;
  rec.sample_rate = sample_rate;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rec.samples.push_back(parse_number(line, path, row));
  }
  if (rec.samples.empty()) throw DomainError(path.string() + ": no samples");
  return rec;
}

void write_frequency_response_csv(const std::filesystem::path& path, const FrequencyResponse& fr,
                                  bool unwrap_phase) {
  auto out = open_for_write(path);
  out << "frequency_hz,magnitude,phase_rad\n";
  double offset = 0.0, prev = fr.phase_rad.empty() ? 0.0 : fr.phase_rad.front();
  for (std::size_t i = 0; i < fr.frequency_hz.size(); ++i) {
    double phase = fr.phase_rad[i];
    if (unwrap_phase) {
      while (phase + offset - prev > M_PI) offset -= 2.0 * M_PI;
      while (phase + offset - prev < -M_PI) offset += 2.0 * M_PI;
      phase += offset;
      prev = phase;
    }
    out << format_g9(fr.frequency_hz[i]) << ',' << format_g9(fr.magnitude[i]) << ','
        << format_g9(phase) << '\n';
  }
}

void write_empirical_tf_csv(const std::filesystem::path& path, const EmpiricalTF& tf) {
  auto out = open_for_write(path);
  out << "frequency_hz,magnitude,phase_rad,valid\n";
  for (std::size_t k = 0; k < tf.h.size(); ++k)
    out << format_g9(tf.frequency_hz[k]) << ',' << format_g9(std::abs(tf.h[k])) << ','
        << format_g9(std::arg(tf.h[k])) << ',' << (tf.valid[k] ? 1 : 0) << '\n';
}

void write_modes_csv(const std::filesystem::path& path, const ModalModel& model) {
  auto out = open_for_write(path);
  out << "index,lambda,frequency_hz,is_rigid_body\n";
  for (std::size_t i = 0; i < model.modes.size(); ++i)
    out << i << ',' << format_g9(model.modes[i].lambda) << ','
        << format_g9(model.modes[i].frequency_hz) << ',' << (model.modes[i].rigid_body ? 1 : 0)
        << '\n';
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  auto out = open_for_write(path);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_g9(m(r, c));
    }
    out << '\n';
  }
}

}  // namespace platemodal
