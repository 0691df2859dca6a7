#pragma once

#include <filesystem>
#include <string>

#include "weightforge/linalg.hpp"

namespace weightforge {

/// Code file format v1 (bit-exact, diff-friendly):
///
///   weightforge-code v1
///   q=<q> k=<k> n=<n>
///   <k lines of n space-separated decimal element encodings>
///
/// Lines starting with '#' are comments and ignored on import. The
/// newline is '\n' and a trailing newline is required. Export followed by
/// import is the identity, byte-for-byte on re-export.

std::string export_code(const LinearCode& code);

/// Throws ParseError on malformed text, NotFullRank on rank-deficient
/// generators.
LinearCode import_code(const std::string& text);

void write_code_file(const std::filesystem::path& path, const LinearCode& code);
LinearCode read_code_file(const std::filesystem::path& path);

}  // namespace weightforge
