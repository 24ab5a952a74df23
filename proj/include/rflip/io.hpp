#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rflip/instance.hpp"

namespace rflip {

/// Parse failure with the 1-based line number it occurred on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Canonical instance format (UTF-8 text):
///   line 1:  "n m"           variable count, entry count
///   then m:  "i j c"         1-based indices, i == j is the linear term q_i,
///                            i < j the pair q_{ij}; j > i is normalized.
/// Lines starting with '#' are comments. Tokens are whitespace-separated;
/// coefficients may be integers or decimals.
QuboInstance parse_instance(std::istream& in, std::string name = "");
QuboInstance parse_instance(const std::string& text, std::string name = "");
QuboInstance load_instance(const std::string& path);

/// Writes the canonical form: entries sorted by (i, j), zero linear terms
/// suppressed by default, integer coefficients printed without a decimal
/// point. parse(write(inst)) == inst holds bit-exactly.
void write_instance(const QuboInstance& inst, std::ostream& out,
                    bool suppress_zero_linear = true);
std::string instance_to_string(const QuboInstance& inst, bool suppress_zero_linear = true);
void save_instance(const QuboInstance& inst, const std::string& path);

/// Numeric formatting shared by writers: exact for integers, round-trip
/// precision for reals.
std::string format_coefficient(double v);

}  // namespace rflip
