#include <cmath>
#include <cstring>
#include <sstream>

#include "doctest.h"
#include "fbt/errors.hpp"
#include "fbt/io.hpp"

using namespace fbt;

TEST_SUITE("io") {
  TEST_CASE("csv has a header and full precision") {
    const GridPtr g = make_grid(Alpha(0.0), 1.0, 16);
    const auto f = RadialFunction::sample(g, [](double x) { return 1.0 / 3.0 + x; });
    const std::string csv = to_csv(f);
    CHECK(csv.rfind("x,value\n", 0) == 0);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      const double x = std::stod(line.substr(0, comma)), v = std::stod(line.substr(comma + 1));
      CHECK(x == g->nodes()[rows]);
      CHECK(v == f[rows]);
      ++rows;
    }
    CHECK(rows == 16);
    CHECK(to_csv(f, f).rfind("x,f,Ff\n", 0) == 0);
    CHECK(format_double(NAN) == "nan");
  }

  TEST_CASE("radial function json round trip") {
    const GridPtr g = RadialGrid::with_breakpoints(Alpha(0.5), 3.0, {0.7}, 0.5, 8);
    const auto f = RadialFunction::sample(g, [](double x) { return std::sin(x); });
    const auto back = function_from_json(nlohmann::json::parse(to_json(f).dump()));
    CHECK(back.grid()->nodes() == g->nodes());
    CHECK(back.grid()->weights() == g->weights());
    CHECK(back.values() == f.values());
  }

  TEST_CASE("interval set json round trip") {
    const IntervalSet s({{0, 1}, {2.5, 3}});
    CHECK(interval_set_from_json(to_json(s)) == s);
    CHECK(interval_set_from_json(nlohmann::json("0,1;2.5,3")) == s);
    CHECK_THROWS_AS(interval_set_from_json(nlohmann::json(3)), DomainError);
  }

  TEST_CASE("matrix dump round trip") {
    Eigen::MatrixXd m(3, 2);
    m << 1, 2, 3, 4.5, -6, 1e-300;
    std::stringstream buf;
    write_matrix(buf, m, {3, 2, 0.5, 8.0, 1024});
    const std::string text = buf.str();
    const auto nl = text.find('\n');
    const auto header = nlohmann::json::parse(text.substr(0, nl));
    CHECK(header["format"] == "fbt-matrix");
    CHECK(header["order"] == "row-major");
    CHECK(text.size() == nl + 1 + 6 * sizeof(double));
    double second;
    std::memcpy(&second, text.data() + nl + 1 + sizeof(double), sizeof(double));
    CHECK(second == 2.0);
    MatrixHeader h;
    const Eigen::MatrixXd back = read_matrix(buf, &h);
    CHECK(back == m);
    CHECK(h.alpha == 0.5);
    CHECK(h.n == 1024);
    std::stringstream bad("{\"format\":\"other\"}\n");
    CHECK_THROWS_AS(read_matrix(bad), DomainError);
    std::stringstream shortbuf(text.substr(0, text.size() - 3));
    CHECK_THROWS_AS(read_matrix(shortbuf), DomainError);
  }
}
