#pragma once

#include <string>

namespace sesquiop {

// Deterministic float formatting: 17 significant digits round-trips any
// double to the same byte sequence on every run.
std::string format_g17(double x);
// Rounded display formatting for markdown summaries.
std::string format_sig3(double x);

std::string read_file(const std::string& path);                      // IoError
void write_file_atomic(const std::string& path, const std::string& content);
void ensure_directory(const std::string& path);

}  // namespace sesquiop
