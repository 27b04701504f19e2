#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "oblique/matrix.hpp"

namespace oblique {

enum class Field { real, cplx };

/// A matrix together with the scalar field declared by its source file.
/// Real inputs are promoted to complex internally; the tag only affects
/// output formatting.
struct TaggedMatrix {
    Matrix values;
    Field field;
};

/// Text format, one matrix per file:
///   line 1:   <field> <rows> <cols>      field in {real, complex}
///   then rows*cols entries, whitespace separated, row major
///   complex entry: re,im with no interior spaces
///   '#' starts a comment that runs to end of line
TaggedMatrix parse_matrix_text(const std::string& text, const std::string& source_name);

/// Parse from a file; throws IoError / ParseError.
TaggedMatrix parse_matrix(const std::string& path);

/// Serialize in the same format; %.17g entries so values round-trip
/// bit-identically.
std::string format_matrix(const Matrix& m, Field field);

void write_matrix(const std::string& path, const Matrix& m, Field field);

/// Format a double with 17 significant digits (round-trip safe).
std::string format_double(double v);

/// FNV-1a 64-bit digest of a file's bytes, as "0x" + 16 hex digits.
std::string file_digest(const std::string& path);

}  // namespace oblique
