#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "kp/core.hpp"

namespace kp {

/// Instance text format, the interchange unit between the generator, the
/// solvers and the benchmark harness:
///
///   line 1:        n W
///   lines 2..n+1:  p_i w_i          (space separated decimal integers)
///   trailing:      # key=value      (optional generation metadata)
///
/// write_instance followed by read_instance reproduces the instance exactly,
/// including metadata.
void write_instance(const Instance& instance, std::ostream& out);
void write_instance(const Instance& instance,
                    const std::filesystem::path& path);

/// Throws ParseError (malformed line, with line number) or StructureError
/// (header/body mismatch). allow_trivial is forwarded to the Instance
/// constructor.
Instance read_instance(std::istream& in, bool allow_trivial = false);
Instance read_instance(const std::filesystem::path& path,
                       bool allow_trivial = false);

std::string correlation_name(Correlation c);
Correlation correlation_from_name(const std::string& name);

} // namespace kp
