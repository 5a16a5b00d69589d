#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oscform {

/// Runs one command line (arguments after the program name) and returns the
/// exit code: 0 on success, 1 for domain errors, 2 for malformed input or
/// flags, 3 for internal errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Names of the shipped example files.
std::vector<std::string> gallery_names();

/// Text of a shipped example; `scroll-d0-...-de` is generated for any
/// positive degrees.
std::optional<std::string> gallery_text(std::string_view name);

}  // namespace oscform
