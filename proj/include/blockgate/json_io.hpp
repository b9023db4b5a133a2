#pragma once

#include <string>

#include "blockgate/matrix.hpp"

namespace blockgate {

/// Matrix wire format used across the CLI and file outputs:
///   {"rows": R, "cols": C, "entries": [[re, im], ...]}
/// with entries row-major and numbers written at full precision.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

void write_matrix_file(const std::string& path, const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::string& path);

}  // namespace blockgate
