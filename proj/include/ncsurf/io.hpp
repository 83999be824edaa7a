#pragma once

// File formats of the command-line tool.
//
// Matrix documents come in two forms, both accepted everywhere:
//   text        first token n, then n*n integers row-major
//   structured  JSON {"n": 3, "entries": [...], "name": "P2"}; entries may
//               be JSON integers or decimal strings (for big values)
//
// Presentation documents are JSON:
//   {"generators": 3, "relations": [[[u, v, "coeff"], ...], ...]}
// with 0-based generator indices and integer or "p/q" coefficients.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ncsurf/classify.hpp"
#include "ncsurf/eulerform.hpp"
#include "ncsurf/exactmat.hpp"
#include "ncsurf/ncalgebra.hpp"

namespace ncsurf::io {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MatrixDocument {
    IntMatrix matrix;
    std::optional<std::string> name;
};

MatrixDocument parse_matrix_document(std::string_view text);
MatrixDocument read_matrix_file(const std::string& path);

/// Validates the document as a Gram matrix (unit diagonal, upper-triangular).
GramMatrix to_gram(const MatrixDocument& doc);

/// Named registry: P2, A, B:m, Bp:m.
GramMatrix named_matrix(std::string_view spec);

std::string format_text(const IntMatrix& m);
nlohmann::json to_json(const IntMatrix& m, const std::optional<std::string>& name = std::nullopt);
std::string format_structured(const IntMatrix& m, const std::optional<std::string>& name = std::nullopt);

QuadraticPresentation parse_presentation(std::string_view text);

/// Parses "3", "-2", "1/3".
Rational parse_rational(std::string_view text);

nlohmann::json to_json(const Fingerprint& fp);
/// One record per matrix: entries, fingerprint, verdict, witness word.
nlohmann::json to_json(const ClassificationReport& report);

} // namespace ncsurf::io
