#pragma once

#include <stdexcept>
#include <string>

#include "facering/simplicial/complex.hpp"

namespace facering::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON: {"name", "dim", "vertices": [{"id", "coords": ["p/q", ...] | null}],
/// "facets": [[id, ...]]}. Either all vertices carry coordinates or none does.
Complex parse_json(const std::string& text, const std::string& source = "<json>");
/// One facet per line, whitespace-separated labels. Blank lines and lines
/// starting with '#' are skipped. Labels are numbered by first appearance.
Complex parse_facet_list(const std::string& text, const std::string& source = "<text>");
/// Dispatches on content: a leading '{' means JSON.
Complex parse_complex_text(const std::string& text, const std::string& source);
/// Reads a file; a path of the form "@name" loads a bundled complex.
Complex parse_complex(const std::string& path);

/// Canonical JSON (universe order, sorted facets, reduced rationals).
std::string to_json(const Complex& delta);
std::string to_facet_list(const Complex& delta);

/// Lowercase hex SHA-256 of the canonical JSON.
std::string canonical_sha256(const Complex& delta);
std::string sha256_hex(const std::string& bytes);

}  // namespace facering::io
