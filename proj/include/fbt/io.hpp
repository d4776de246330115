#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "fbt/spectral.hpp"

namespace fbt {

std::string format_double(double v);

// Columns x,value.
std::string to_csv(const RadialFunction& f);
// Columns x,f,Ff; both functions must live on the same grid.
std::string to_csv(const RadialFunction& f, const RadialFunction& transformed);

nlohmann::json to_json(const RadialFunction& f);
RadialFunction function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

// One JSON header line, a newline, then rows*cols little-endian doubles in
// row-major order.
struct MatrixHeader {
  long rows = 0;
  long cols = 0;
  double alpha = 0.0;
  double radius = 0.0;
  long n = 0;
};

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m, const MatrixHeader& h);
Eigen::MatrixXd read_matrix(std::istream& in, MatrixHeader* header = nullptr);
void save_matrix(const std::string& path, const OperatorMatrix& m);
Eigen::MatrixXd load_matrix(const std::string& path, MatrixHeader* header = nullptr);

}  // namespace fbt
