#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "cic/emit.hpp"
#include "cic/scan.hpp"
#include "helpers.hpp"

using namespace cic;
namespace sc = cic::scan;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("uniform grid construction and validation") {
  const RealVector grid = sc::uniform_grid(-2.0, 3.0, 0.01);
  CHECK(grid.size() == 501);
  CHECK(grid(0) == doctest::Approx(-2.0));
  CHECK(grid(500) == doctest::Approx(3.0));
  CHECK_THROWS_AS(sc::uniform_grid(1.0, 1.0, 0.01), validation_error);
  CHECK_THROWS_AS(sc::uniform_grid(0.0, 1.0, -0.1), validation_error);
  CHECK_THROWS_AS(sc::uniform_grid(0.0, 1.0, 0.5), validation_error);
}

TEST_CASE("susceptibility of a linear series is exactly constant inside") {
  const RealVector x = sc::uniform_grid(0.0, 1.0, 0.05);
  const RealVector v = 2.0 * x;
  const RealVector s = sc::susceptibility(x, v);
  for (Index i = 0; i < s.size(); ++i) {
    CHECK(s(i) == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("susceptibility of a quadratic is exact at interior points") {
  const RealVector x = RealVector::LinSpaced(11, 0.0, 1.0);
  const RealVector v = x.cwiseProduct(x);
  const RealVector s = sc::susceptibility(x, v);
  for (Index i = 1; i + 1 < s.size(); ++i) {
    CHECK(s(i) == doctest::Approx(2.0 * x(i)).epsilon(1e-12));
  }
}

TEST_CASE("susceptibility rejects bad grids") {
  RealVector x(6), v(6);
  x << 0.0, 0.1, 0.2, 0.35, 0.4, 0.5;
  v.setZero();
  CHECK_THROWS_AS(sc::susceptibility(x, v), validation_error);
  RealVector tiny(3), tv(3);
  tiny << 0.0, 0.1, 0.2;
  tv.setZero();
  CHECK_THROWS_AS(sc::susceptibility(tiny, tv), validation_error);
}

TEST_CASE("smooth curves produce no kinks") {
  const RealVector x = sc::uniform_grid(0.0, 1.0, 0.01);
  RealVector sine(x.size()), cubic(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    sine(i) = std::sin(x(i));
    cubic(i) = 1.0 + x(i) - 0.3 * x(i) * x(i) + 0.05 * x(i) * x(i) * x(i);
  }
  CHECK(sc::detect_kinks(x, sine).empty());
  CHECK(sc::detect_kinks(x, cubic).empty());
  CHECK(sc::detect_kinks(x, RealVector::Zero(x.size())).empty());
}

TEST_CASE("constructed kink is found within one grid step") {
  const RealVector x = sc::uniform_grid(0.0, 1.0, 0.01);
  RealVector v(x.size());
  for (Index i = 0; i < x.size(); ++i) v(i) = std::max(std::abs(x(i)), 0.5);
  const auto kinks = sc::detect_kinks(x, v);
  REQUIRE(kinks.size() == 1);
  CHECK(std::abs(kinks[0].location - 0.5) <= 0.01 + 1e-12);
  CHECK(kinks[0].label == "kink");
}

TEST_CASE("off-grid kink location error stays within one step") {
  const RealVector x = sc::uniform_grid(0.0, 1.0, 0.01);
  RealVector v(x.size());
  const double knee = 0.3721;  // deliberately off-grid
  for (Index i = 0; i < x.size(); ++i) {
    v(i) = x(i) < knee ? 0.8 * x(i) : 0.8 * knee - 0.6 * (x(i) - knee);
  }
  const auto kinks = sc::detect_kinks(x, v);
  REQUIRE(kinks.size() == 1);
  CHECK(std::abs(kinks[0].location - knee) <= 0.01 + 1e-12);
}

TEST_CASE("a jump is labeled as a discontinuity") {
  const RealVector x = sc::uniform_grid(0.0, 1.0, 0.01);
  RealVector v(x.size());
  for (Index i = 0; i < x.size(); ++i) v(i) = x(i) < 0.5 ? 1.0 : 0.25 * std::cos(x(i));
  const auto kinks = sc::detect_kinks(x, v);
  REQUIRE(kinks.size() >= 1);
  CHECK(kinks[0].label == "discontinuity");
  CHECK(std::abs(kinks[0].location - 0.5) <= 0.01 + 1e-12);
}

TEST_CASE("detect_kinks requires enough points") {
  const RealVector x = RealVector::LinSpaced(8, 0.0, 0.7);
  CHECK_THROWS_AS(sc::detect_kinks(x, RealVector::Zero(x.size())), validation_error);
}

TEST_CASE("csv emission is deterministic and shaped correctly") {
  RealVector p(3), v(3);
  p << 0.0, 0.5, 1.0;
  v << 1.0, 2.0, 4.0;
  const std::string path_a = cic::testing::temp_path("a.csv");
  const std::string path_b = cic::testing::temp_path("b.csv");
  io::write_csv(path_a, {{"p", &p}, {"v", &v}});
  io::write_csv(path_b, {{"p", &p}, {"v", &v}});
  const std::string a = read_file(path_a);
  CHECK(a == read_file(path_b));
  CHECK(a == "p,v\n0,1\n0.5,2\n1,4\n");
  std::remove(path_a.c_str());
  std::remove(path_b.c_str());

  RealVector empty;
  CHECK_THROWS_AS(io::write_csv("/tmp/never.csv", {{"p", &empty}}), validation_error);
  CHECK_THROWS_AS(io::write_csv("/nonexistent_dir/x.csv", {{"p", &p}}), validation_error);
}

TEST_CASE("csv values carry 12 significant digits") {
  RealVector p(1), v(1);
  p << std::numbers::pi;
  v << 1.0 / 3.0;
  const std::string path = cic::testing::temp_path("digits.csv");
  io::write_csv(path, {{"p", &p}, {"v", &v}});
  CHECK(read_file(path) == "p,v\n3.14159265359,0.333333333333\n");
  std::remove(path.c_str());
}

TEST_CASE("svg emission marks critical points") {
  const RealVector x = sc::uniform_grid(0.0, 1.0, 0.01);
  RealVector v(x.size());
  for (Index i = 0; i < x.size(); ++i) v(i) = std::max(std::abs(x(i)), 0.5);
  const RealVector s = sc::susceptibility(x, v);
  const auto kinks = sc::detect_kinks(x, v);
  const std::string path = cic::testing::temp_path("plot.svg");
  io::write_svg(path, x, s, kinks, "x", "dv/dx", "synthetic");
  const std::string svg = read_file(path);
  std::remove(path.c_str());
  CHECK(svg.find("<svg") == 0);
  std::size_t markers = 0;
  for (std::size_t pos = svg.find("critical-point"); pos != std::string::npos;
       pos = svg.find("critical-point", pos + 1)) {
    ++markers;
  }
  CHECK(markers == kinks.size());
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("dv/dx") != std::string::npos);
}

TEST_CASE("parallel map is deterministic and rethrows the lowest failure") {
  RealVector out_serial(97), out_parallel(97);
  auto fill = [](RealVector& out) {
    return [&out](Index i) { out(i) = std::sin(0.1 * static_cast<double>(i)); };
  };
  sc::parallel_for(97, 1, fill(out_serial));
  sc::parallel_for(97, 4, fill(out_parallel));
  CHECK((out_serial - out_parallel).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(sc::parallel_for(50, 4,
                                   [](Index i) {
                                     if (i % 7 == 3) throw numerical_error("boom");
                                   }),
                  numerical_error);
}

TEST_CASE("scan json payload carries the series and kinks") {
  RealVector p(5), v(5);
  p << 0, 1, 2, 3, 4;
  v << 0, 1, 2, 3, 4;
  std::vector<sc::CriticalPoint> kinks = {{2.0, 11.0, "kink"}};
  const std::string text = io::scan_json("demo", {{"p", &p}, {"v", &v}}, kinks);
  CHECK(text.find("\"model\": \"demo\"") != std::string::npos);
  CHECK(text.find("\"critical_points\"") != std::string::npos);
  CHECK(text.find("\"location\": 2.0") != std::string::npos);
}
