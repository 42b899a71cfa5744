#include "qha/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qha {

Json matrix_to_json(const OperatorMatrix& S) {
  Json j;
  j["dim"] = S.dim();
  j["n"] = S.space->n();
  j["N"] = S.space->max_degree();
  Json entries = Json::array();
  for (int r = 0; r < S.dim(); ++r)
    for (int c = 0; c < S.dim(); ++c) {
      entries.push_back(S.m(r, c).real());
      entries.push_back(S.m(r, c).imag());
    }
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != 2 * dim * dim)
    throw std::invalid_argument("matrix_from_json: entry count does not match dim");
  Matrix m(dim, dim);
  size_t i = 0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const double re = entries[i++].get<double>();
      const double im = entries[i++].get<double>();
      m(r, c) = Complex(re, im);
    }
  return m;
}

Json grid_to_json(const GridFunction& g) {
  Json j;
  j["box_radius"] = g.grid.R;
  j["resolution"] = g.grid.M;
  Json values = Json::array();
  for (int r = 0; r < g.grid.M; ++r)
    for (int c = 0; c < g.grid.M; ++c) {
      values.push_back(g.values(r, c).real());
      values.push_back(g.values(r, c).imag());
    }
  j["values"] = std::move(values);
  return j;
}

GridFunction grid_from_json(const Json& j) {
  const double R = j.at("box_radius").get<double>();
  const int M = j.at("resolution").get<int>();
  const auto& values = j.at("values");
  if (static_cast<int>(values.size()) != 2 * M * M)
    throw std::invalid_argument("grid_from_json: value count does not match resolution");
  GridFunction g{make_grid(R, M), Matrix(M, M), {}};
  size_t i = 0;
  for (int r = 0; r < M; ++r)
    for (int c = 0; c < M; ++c) {
      const double re = values[i++].get<double>();
      const double im = values[i++].get<double>();
      g.values(r, c) = Complex(re, im);
    }
  return g;
}

std::string error_table_csv(const ErrorTable& table) {
  std::ostringstream out;
  out.precision(17);
  out << "t,vector,error\n";
  for (const ErrorTable::Row& r : table.rows)
    out << r.t << "," << r.vec << "," << r.error << "\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace qha
