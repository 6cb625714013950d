#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "platemodal/csv.hpp"
#include "platemodal/errors.hpp"

using namespace platemodal;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("platemodal_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("format_g9 keeps nine significant digits") {
  CHECK(format_g9(1.0) == "1");
  CHECK(format_g9(0.123456789123) == "0.123456789");
  CHECK(format_g9(-2.5e-7) == "-2.5e-07");
}

TEST_CASE("signal CSV round trip preserves values and rate") {
  TempDir tmp;
  SignalRecord rec{30000.0, {0.0, 1.25e-3, -7.5, 0.333333333333}, SignalLabel::Output};
  const fs::path p = tmp.path / "sig.csv";
  write_signal_csv(p, rec);
  const SignalRecord back = read_signal_csv(p);
  CHECK(back.sample_rate == doctest::Approx(30000.0).epsilon(1e-8));
  REQUIRE(back.samples.size() == rec.samples.size());
  for (std::size_t i = 0; i < rec.samples.size(); ++i) {
    const double scale = std::max(1e-30, std::abs(rec.samples[i]));
    CHECK(std::abs(back.samples[i] - rec.samples[i]) <= 1e-8 * scale);
  }

  std::ifstream in(p);
  std::string header;
  std::getline(in, header);
  CHECK(header == "time_s,value");
}

TEST_CASE("signal CSV errors name the offending row") {
  TempDir tmp;
  const fs::path p = tmp.path / "bad.csv";
  {
    std::ofstream out(p);
    out << "time_s,value\n0,1\n0.001,oops\n";
  }
  try {
    read_signal_csv(p);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }

  const fs::path q = tmp.path / "header.csv";
  {
    std::ofstream out(q);
    out << "t,v\n0,1\n";
  }
  CHECK_THROWS_AS(read_signal_csv(q), DomainError);
}

TEST_CASE("raw column reader applies the supplied rate") {
  TempDir tmp;
  const fs::path p = tmp.path / "col.txt";
  {
    std::ofstream out(p);
    out << "1.5\n-2\n0.25\n";
  }
  const SignalRecord rec = read_signal_column(p, 512.0);
  CHECK(rec.sample_rate == 512.0);
  REQUIRE(rec.samples.size() == 3);
  CHECK(rec.samples[1] == -2.0);
  CHECK_THROWS_AS(read_signal_column(p, 0.0), DomainError);
}

TEST_CASE("frequency response writer: phase unwrap option") {
  TempDir tmp;
  // a steadily falling true phase, stored wrapped to the principal branch
  FrequencyResponse fr;
  for (int i = 0; i < 10; ++i) {
    fr.frequency_hz.push_back(i);
    fr.magnitude.push_back(1.0);
    fr.phase_rad.push_back(std::remainder(-1.3 * i, 2.0 * M_PI));
  }

  const fs::path wrapped = tmp.path / "w.csv";
  const fs::path unwrapped = tmp.path / "u.csv";
  write_frequency_response_csv(wrapped, fr, false);
  write_frequency_response_csv(unwrapped, fr, true);

  auto last_phase = [](const fs::path& p) {
    std::ifstream in(p);
    std::string line, keep;
    std::getline(in, line);  // header
    while (std::getline(in, line))
      if (!line.empty()) keep = line;
    return std::stod(keep.substr(keep.rfind(',') + 1));
  };
  CHECK(last_phase(wrapped) == doctest::Approx(std::remainder(-1.3 * 9, 2.0 * M_PI)).epsilon(1e-9));
  CHECK(last_phase(unwrapped) == doctest::Approx(-1.3 * 9).epsilon(1e-9));
}

TEST_CASE("matrix writer emits a plain numeric grid") {
  TempDir tmp;
  Eigen::MatrixXd m(2, 2);
  m << 1.0, -2.0, 0.5, 1e-3;
  const fs::path p = tmp.path / "m.csv";
  write_matrix_csv(p, m);
  std::ifstream in(p);
  std::string l1, l2;
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK(l1 == "1,-2");
  CHECK(l2 == "0.5,0.001");
}
