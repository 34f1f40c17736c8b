#include "carent/io.hpp"

#include <json.hpp>

#include <fstream>
#include <vector>

namespace carent {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot open '" + path + "' for reading");
  }
  try {
    json j;
    file >> j;
    return j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream file(path);
  if (!file) {
    throw ParseError("cannot open '" + path + "' for writing");
  }
  file << j.dump(2) << '\n';
  if (!file) {
    throw ParseError("failed while writing '" + path + "'");
  }
}

using Grid = std::vector<std::vector<double>>;

Grid require_grid(const json& j, const std::string& field, Eigen::Index rows,
                  Eigen::Index cols) {
  if (!j.contains(field)) {
    throw ParseError("missing field '" + field + "'");
  }
  Grid grid;
  try {
    grid = j.at(field).get<Grid>();
  } catch (const json::exception&) {
    throw ParseError("field '" + field + "' must be an array of arrays of numbers");
  }
  if (static_cast<Eigen::Index>(grid.size()) != rows) {
    throw ParseError("field '" + field + "' must have " + std::to_string(rows) + " rows");
  }
  for (const auto& row : grid) {
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("field '" + field + "' must have " + std::to_string(cols) +
                       " columns in every row");
    }
  }
  return grid;
}

CMatrix combine(const Grid& re, const Grid& im, Eigen::Index n) {
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = Complex(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        im[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

Grid real_part(const CMatrix& m) {
  Grid grid(static_cast<std::size_t>(m.rows()),
            std::vector<double>(static_cast<std::size_t>(m.cols()), 0.0));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).real();
    }
  }
  return grid;
}

Grid imag_part(const CMatrix& m) {
  Grid grid(static_cast<std::size_t>(m.rows()),
            std::vector<double>(static_cast<std::size_t>(m.cols()), 0.0));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).imag();
    }
  }
  return grid;
}

}  // namespace

DensityMatrix load_state(const std::string& path) {
  const json j = read_json(path);
  if (!j.contains("dim")) {
    throw ParseError("missing field 'dim' in '" + path + "'");
  }
  Eigen::Index dim = 0;
  try {
    dim = j.at("dim").get<Eigen::Index>();
  } catch (const json::exception&) {
    throw ParseError("field 'dim' must be an integer in '" + path + "'");
  }
  if (dim < 2 || dim > kMaxDim) {
    throw ParseError("field 'dim' out of range in '" + path + "'");
  }
  try {
    const Grid re = require_grid(j, "re", dim, dim);
    const Grid im = require_grid(j, "im", dim, dim);
    return DensityMatrix(combine(re, im, dim));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in '" + path + "'");
  }
}

void save_state(const std::string& path, const DensityMatrix& w) {
  json j;
  j["dim"] = w.dim();
  j["re"] = real_part(w.mat());
  j["im"] = imag_part(w.mat());
  write_json(path, j);
}

PureCoeffs load_coeffs(const std::string& path) {
  const json j = read_json(path);
  try {
    const Grid re = require_grid(j, "c_re", 2, 2);
    const Grid im = require_grid(j, "c_im", 2, 2);
    Matrix2c c;
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        c(i, k) = Complex(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                          im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
      }
    }
    return PureCoeffs(c);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in '" + path + "'");
  }
}

void save_coeffs(const std::string& path, const PureCoeffs& coeffs) {
  json j;
  Grid re(2, std::vector<double>(2, 0.0));
  Grid im(2, std::vector<double>(2, 0.0));
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = coeffs.c()(i, k).real();
      im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = coeffs.c()(i, k).imag();
    }
  }
  j["c_re"] = re;
  j["c_im"] = im;
  write_json(path, j);
}

}  // namespace carent
