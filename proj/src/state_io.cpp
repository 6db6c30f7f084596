#include "cic/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cic::io {

namespace {

RealMatrix parse_real_part(const nlohmann::json& node, Index dim, const char* key) {
  if (!node.is_array() || static_cast<Index>(node.size()) != dim) {
    throw validation_error(std::string("state json: '") + key + "' must be a " +
                           std::to_string(dim) + "-row array");
  }
  RealMatrix part(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const auto& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
      throw validation_error(std::string("state json: '") + key + "' rows must have length " +
                             std::to_string(dim));
    }
    for (Index j = 0; j < dim; ++j) {
      const auto& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_number()) {
        throw validation_error(std::string("state json: '") + key + "' entries must be numbers");
      }
      part(i, j) = cell.get<double>();
    }
  }
  return part;
}

}  // namespace

DensityMatrix parse_state_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("state json parse failure: ") + e.what());
  }
  if (!root.contains("dim") || !root["dim"].is_number_integer()) {
    throw validation_error("state json: missing integer 'dim'");
  }
  const Index dim = root["dim"].get<Index>();
  if (dim < 2 || dim > 64) {
    throw validation_error("state json: 'dim' must lie in [2, 64]");
  }
  if (!root.contains("re")) throw validation_error("state json: missing 're'");
  const RealMatrix re = parse_real_part(root["re"], dim, "re");
  RealMatrix im = RealMatrix::Zero(dim, dim);
  if (root.contains("im")) im = parse_real_part(root["im"], dim, "im");
  ComplexMatrix m(dim, dim);
  m.real() = re;
  m.imag() = im;
  return DensityMatrix::checked(std::move(m));
}

DensityMatrix load_state_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open state file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str());
}

std::string state_json(const DensityMatrix& rho) {
  nlohmann::ordered_json root;
  const Index dim = rho.dim();
  root["dim"] = dim;
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (Index i = 0; i < dim; ++i) {
    nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
    nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
    for (Index j = 0; j < dim; ++j) {
      re_row.push_back(rho.m(i, j).real());
      im_row.push_back(rho.m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  root["re"] = std::move(re);
  root["im"] = std::move(im);
  return root.dump(2) + "\n";
}

void save_state_json(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open '" + path + "' for writing");
  out << state_json(rho);
  if (!out) throw validation_error("write to '" + path + "' failed");
}

}  // namespace cic::io
