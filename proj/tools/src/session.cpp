#include "gfc/cli/session.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gfc/signature.hpp"

namespace gfc::cli {
namespace {

MatrixText matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a non-empty JSON array of rows");
  MatrixText rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ConfigError("matrix rows must be JSON arrays");
    std::vector<std::string> out;
    for (const auto& entry : row) {
      if (entry.is_string()) {
        out.push_back(entry.get<std::string>());
      } else if (entry.is_number_integer()) {
        out.push_back(entry.dump());
      } else {
        throw ConfigError("matrix entries must be rational strings or integers, got " + entry.dump());
      }
    }
    rows.push_back(std::move(out));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw ConfigError("matrix must be square, got a row of length " + std::to_string(row.size()) +
                        " in a " + std::to_string(rows.size()) + "-row matrix");
    }
  }
  return rows;
}

}  // namespace

MatrixText load_matrix(std::string_view arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string_view::npos && arg[first] == '[') {
    text = arg;
  } else {
    std::ifstream in{std::string(arg)};
    if (!in) throw ConfigError("cannot read matrix file '" + std::string(arg) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

ScalarMode parse_scalar_mode(std::string_view value) {
  if (value == "rational") return ScalarMode::exact_rational;
  if (value == "float") return ScalarMode::binary_float;
  throw ConfigError("GFC_SCALAR must be 'rational' or 'float', got '" + std::string(value) + "'");
}

void resolve(SessionConfig& cfg) {
  const std::pair<const char*, const std::optional<MatrixText>*> matrices[] = {
      {"form", &cfg.form}, {"coscalar", &cfg.coform}, {"cochain", &cfg.cochain}};
  if (cfg.dim == 0) {
    for (const auto& [name, m] : matrices) {
      if (m->has_value()) {
        cfg.dim = static_cast<int>((*m)->size());
        break;
      }
    }
    if (cfg.dim == 0) throw ConfigError("--dim is required when no matrix is given");
  }
  if (cfg.dim < 1 || cfg.dim > max_dim) {
    throw ConfigError("dimension " + std::to_string(cfg.dim) + " outside 1.." + std::to_string(max_dim));
  }
  for (const auto& [name, m] : matrices) {
    if (m->has_value() && static_cast<int>((*m)->size()) != cfg.dim) {
      throw ConfigError(std::string(name) + " matrix is " + std::to_string((*m)->size()) + "x" +
                        std::to_string((*m)->size()) + " but the dimension is " +
                        std::to_string(cfg.dim));
    }
  }
}

}  // namespace gfc::cli
