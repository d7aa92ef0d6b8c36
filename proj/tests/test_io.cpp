#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "tvpoint/error.hpp"
#include "tvpoint/io.hpp"
#include "tvpoint/simulate.hpp"

using namespace tvpoint;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("tvpoint_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path file(const std::string& name, const std::string& contents) const {
    const auto p = path / name;
    std::ofstream(p) << contents;
    return p;
  }
};

std::vector<double> vec(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("timestamp files with header, comments and blank lines") {
  TempDir dir;
  const auto p = dir.file("a.txt", "# n=3\n# a comment\n0.5\n\n0.25\r\n  1\n");
  const auto ev = io::read_event_file(p, io::EventFormat::timestamps);
  CHECK(ev.replicates() == 3);
  CHECK(vec(ev.times()) == std::vector<double>{0.25, 0.5, 1.0});
}

TEST_CASE("header defaults to a single replicate") {
  TempDir dir;
  const auto ev = io::read_event_file(dir.file("a.txt", "0.1\n0.2\n"), io::EventFormat::timestamps);
  CHECK(ev.replicates() == 1);
  CHECK(ev.size() == 2);
}

TEST_CASE("ill-formed timestamp files") {
  TempDir dir;
  for (const char* body : {"0\n", "1.5\n", "-0.2\n", "abc\n", "0.5x\n", "# n=0\n0.5\n", "nan\n"}) {
    CAPTURE(body);
    CHECK_THROWS_AS(io::read_event_file(dir.file("bad.txt", body), io::EventFormat::timestamps),
                    InputError);
  }
  CHECK_THROWS_AS(io::read_event_file(dir.path / "missing.txt", io::EventFormat::timestamps),
                  IoError);
}

TEST_CASE("positions are normalised onto (0, 1]") {
  const auto t = io::normalize_positions({100, 103, 101, 100});
  CHECK(t == std::vector<double>{0.25, 1.0, 0.5, 0.25});
  CHECK(io::normalize_positions({42}) == std::vector<double>{1.0});
  CHECK(io::normalize_positions({}).empty());

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> u(-1000000, 5000000);
  std::vector<std::int64_t> pos(500);
  for (auto& p : pos) p = u(rng);
  const auto n = io::normalize_positions(pos);
  double top = 0.0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    CHECK(n[i] > 0.0);
    CHECK(n[i] <= 1.0);
    top = std::max(top, n[i]);
    for (std::size_t k = 0; k < i; ++k) {
      if (pos[k] < pos[i]) CHECK(n[k] < n[i]);
    }
  }
  CHECK(top == 1.0);
}

TEST_CASE("position files") {
  TempDir dir;
  const auto ev =
      io::read_event_file(dir.file("p.txt", "# n=2\n10\n13\n11\n"), io::EventFormat::positions);
  CHECK(ev.replicates() == 2);
  CHECK(vec(ev.times()) == std::vector<double>{0.25, 0.5, 1.0});
  CHECK_THROWS_AS(io::read_event_file(dir.file("q.txt", "10\n1.5\n"), io::EventFormat::positions),
                  InputError);
}

TEST_CASE("event files round-trip exactly") {
  TempDir dir;
  const auto ev = sample_events({example_intensity(1), 40, 3});
  const auto p = dir.path / "rt.txt";
  io::write_event_file(p, ev);
  const auto back = io::read_event_file(p, io::EventFormat::timestamps);
  CHECK(back.replicates() == 40);
  CHECK(vec(back.times()) == vec(ev.times()));
}

TEST_CASE("intensity json") {
  TempDir dir;
  const auto f = io::read_intensity_json(
      dir.file("i.json", R"({"breakpoints": [0, 0.5, 1], "levels": [2, 7]})"));
  CHECK(f(0.25) == 2.0);
  CHECK(f(0.75) == 7.0);
  for (const char* body : {"{", R"({"levels": [1]})", R"({"breakpoints": [0, 1], "levels": [1, 2]})",
                           R"({"breakpoints": [0.1, 1], "levels": [1]})",
                           R"({"breakpoints": [0, 1], "levels": ["a"]})"}) {
    CAPTURE(body);
    CHECK_THROWS_AS(io::read_intensity_json(dir.file("bad.json", body)), ConfigError);
  }
  CHECK_THROWS_AS(io::read_intensity_json(dir.path / "none.json"), IoError);
}

TEST_CASE("format names") {
  CHECK(io::parse_format("timestamps") == io::EventFormat::timestamps);
  CHECK(io::parse_format("positions") == io::EventFormat::positions);
  CHECK_THROWS_AS(io::parse_format("bam"), ConfigError);
}

TEST_CASE("unwritable output") {
  CHECK_THROWS_AS(io::write_text("/nonexistent-dir/x.txt", "x"), IoError);
}
