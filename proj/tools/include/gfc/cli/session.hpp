#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfc/errors.hpp"
#include "gfc/scalar.hpp"

namespace gfc::cli {

// Bad flags, unreadable or malformed matrix input, inconsistent dimensions.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { text, json };

// Matrix entries kept as written; each evaluator parses them in its own field.
using MatrixText = std::vector<std::vector<std::string>>;

struct SessionConfig {
  int dim = 0;  // 0 until resolved
  ScalarMode scalar_mode = ScalarMode::exact_rational;
  std::optional<MatrixText> form;     // B
  std::optional<MatrixText> coform;   // C
  std::optional<MatrixText> cochain;  // p
  OutputFormat format = OutputFormat::text;
};

// A JSON n×n array of rational strings (integers are accepted too). The
// argument is parsed inline when it starts with '[', otherwise read as a path.
MatrixText load_matrix(std::string_view arg);

// Parses a GFC_SCALAR value: "rational" or "float".
ScalarMode parse_scalar_mode(std::string_view value);

// Infers dim from the first attached matrix when unset and checks that every
// matrix is dim×dim with 1 <= dim <= 16.
void resolve(SessionConfig& cfg);

}  // namespace gfc::cli
