#include "fbt/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fbt/errors.hpp"

namespace fbt {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const RadialFunction& f) {
  std::ostringstream out;
  out << "x,value\n";
  const auto& x = f.grid()->nodes();
  for (std::size_t i = 0; i < f.size(); ++i) out << format_double(x[i]) << ',' << format_double(f[i]) << '\n';
  return out.str();
}

std::string to_csv(const RadialFunction& f, const RadialFunction& transformed) {
  if (f.grid() != transformed.grid() && f.grid()->nodes() != transformed.grid()->nodes())
    throw DomainError("to_csv: functions live on different grids");
  std::ostringstream out;
  out << "x,f,Ff\n";
  const auto& x = f.grid()->nodes();
  for (std::size_t i = 0; i < f.size(); ++i)
    out << format_double(x[i]) << ',' << format_double(f[i]) << ',' << format_double(transformed[i]) << '\n';
  return out.str();
}

json to_json(const RadialFunction& f) {
  const auto& g = *f.grid();
  return json{{"alpha", g.alpha().value()},
              {"R", g.radius()},
              {"n", g.size()},
              {"edges", g.edges()},
              {"order", g.order()},
              {"x", g.nodes()},
              {"values", f.values()}};
}

RadialFunction function_from_json(const json& j) {
  const Alpha a(j.at("alpha").get<double>());
  const double radius = j.at("R").get<double>();
  auto edges = j.at("edges").get<std::vector<double>>();
  const int order = j.at("order").get<int>();
  if (edges.size() < 2) throw DomainError("function_from_json: need at least one panel");
  double width = 0.0;
  for (std::size_t i = 1; i < edges.size(); ++i) width = std::max(width, edges[i] - edges[i - 1]);
  std::vector<double> inner(edges.begin() + 1, edges.end() - 1);
  auto grid = RadialGrid::with_breakpoints(a, radius, inner, width, order);
  auto values = j.at("values").get<std::vector<double>>();
  if (values.size() != grid->size()) throw DomainError("function_from_json: value count does not match grid");
  return RadialFunction(grid, std::move(values));
}

json to_json(const IntervalSet& s) {
  json arr = json::array();
  for (const auto& i : s.intervals()) arr.push_back({i.lo, i.hi});
  return arr;
}

IntervalSet interval_set_from_json(const json& j) {
  if (j.is_string()) return parse_interval_set(j.get<std::string>());
  if (!j.is_array()) throw DomainError("interval set must be an array of [lo, hi] pairs");
  std::vector<Interval> iv;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw DomainError("interval set entries must be [lo, hi] pairs");
    iv.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return IntervalSet(std::move(iv));
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m, const MatrixHeader& h) {
  static_assert(std::endian::native == std::endian::little, "matrix dumps assume a little-endian host");
  json header{{"format", "fbt-matrix"}, {"version", 1},     {"rows", h.rows},          {"cols", h.cols},
              {"alpha", h.alpha},       {"R", h.radius},    {"n", h.n},                {"dtype", "float64-le"},
              {"order", "row-major"}};
  out << header.dump() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double v = m(r, c);
      out.write(reinterpret_cast<const char*>(&v), sizeof v);
    }
  if (!out) throw std::runtime_error("write_matrix: write failed");
}

Eigen::MatrixXd read_matrix(std::istream& in, MatrixHeader* header) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("read_matrix: missing header");
  const json h = json::parse(line);
  if (h.value("format", "") != "fbt-matrix" || h.value("dtype", "") != "float64-le")
    throw DomainError("read_matrix: unsupported header");
  MatrixHeader mh{h.at("rows").get<long>(), h.at("cols").get<long>(), h.at("alpha").get<double>(),
                  h.at("R").get<double>(), h.at("n").get<long>()};
  if (mh.rows < 0 || mh.cols < 0) throw DomainError("read_matrix: negative dimensions");
  Eigen::MatrixXd m(mh.rows, mh.cols);
  for (long r = 0; r < mh.rows; ++r)
    for (long c = 0; c < mh.cols; ++c) {
      double v;
      if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) throw DomainError("read_matrix: truncated payload");
      m(r, c) = v;
    }
  if (header) *header = mh;
  return m;
}

void save_matrix(const std::string& path, const OperatorMatrix& m) {
  MatrixHeader h{static_cast<long>(m.rows()), static_cast<long>(m.cols()), 0.0, 0.0, 0};
  const GridPtr& g = m.in_grid() ? m.in_grid() : m.out_grid();
  if (g) {
    h.alpha = g->alpha().value();
    h.radius = g->radius();
    h.n = static_cast<long>(g->size());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_matrix: cannot open " + path);
  write_matrix(out, m.matrix(), h);
}

Eigen::MatrixXd load_matrix(const std::string& path, MatrixHeader* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_matrix: cannot open " + path);
  return read_matrix(in, header);
}

}  // namespace fbt
