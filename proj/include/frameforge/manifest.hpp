#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "frameforge/frames.hpp"

namespace frameforge {

using Json = nlohmann::json;

// Wire formats. Complex scalars are [re, im] pairs.
//   frame manifest: {"dim": d, "vectors": [[[re, im], ...], ...]}
//   matrix:         {"rows": r, "cols": c, "entries": [[re, im], ...]}  (row-major)
//   vector:         [[re, im], ...]
// Doubles are written with shortest round-trip formatting, so a parse of a
// dump reproduces every bit.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

Json frame_to_json(const Frame& f);
Frame frame_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// Reads a JSON document; errors become ParseError.
Json read_json_file(const std::filesystem::path& path);

/// Writes `text` to path (or stdout when path is empty or "-").
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace frameforge
