#include "rflip/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace rflip {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

long long parse_int_token(std::string_view tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

double parse_number_token(std::string_view tok, int line) {
  const std::string buf(tok);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(value)) {
    throw ParseError(line, "non-numeric coefficient '" + buf + "'");
  }
  return value;
}

}  // namespace

QuboInstance parse_instance(std::istream& in, std::string name) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const auto tok = split_tokens(line);
    if (tok.size() != 2) throw ParseError(line_no, "malformed header, expected 'n m'");
    n = parse_int_token(tok[0], line_no, "variable count");
    m = parse_int_token(tok[1], line_no, "entry count");
    break;
  }
  if (n == -1) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  if (n < 1) throw ParseError(line_no, "variable count must be positive");
  if (m < 0) throw ParseError(line_no, "entry count must be nonnegative");

  std::vector<double> linear(static_cast<std::size_t>(n), 0.0);
  std::vector<bool> linear_seen(static_cast<std::size_t>(n), false);
  std::vector<Entry> pairs;
  pairs.reserve(static_cast<std::size_t>(m));

  long long read = 0;
  while (read < m) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "unexpected end of input, expected " +
                                        std::to_string(m - read) + " more entries");
    }
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const auto tok = split_tokens(line);
    if (tok.size() != 3) throw ParseError(line_no, "malformed entry, expected 'i j c'");
    const long long i = parse_int_token(tok[0], line_no, "index");
    const long long j = parse_int_token(tok[1], line_no, "index");
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ParseError(line_no, "index out of range [1, " + std::to_string(n) + "]");
    }
    const double c = parse_number_token(tok[2], line_no);
    const int a = static_cast<int>(std::min(i, j)) - 1;
    const int b = static_cast<int>(std::max(i, j)) - 1;
    if (a == b) {
      if (linear_seen[a]) throw ParseError(line_no, "duplicate linear entry for variable " +
                                                        std::to_string(i));
      linear_seen[a] = true;
      linear[a] = c;
    } else {
      pairs.push_back({a, b, c});
    }
    ++read;
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (!is_comment_or_blank(line)) {
      throw ParseError(line_no, "unexpected data after the declared entries");
    }
  }

  // Duplicate pairs are diagnosed here so the error carries the file context;
  // the instance constructor would reject them anyway.
  std::vector<Entry> sorted = pairs;
  std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k - 1].i == sorted[k].i && sorted[k - 1].j == sorted[k].j) {
      throw ParseError(line_no, "duplicate pair (" + std::to_string(sorted[k].i + 1) + ", " +
                                    std::to_string(sorted[k].j + 1) + ")");
    }
  }

  return QuboInstance(static_cast<int>(n), std::move(linear), std::move(pairs),
                      std::move(name));
}

QuboInstance parse_instance(const std::string& text, std::string name) {
  std::istringstream in(text);
  return parse_instance(in, std::move(name));
}

QuboInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in, std::filesystem::path(path).stem().string());
}

std::string format_coefficient(double v) {
  if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_instance(const QuboInstance& inst, std::ostream& out, bool suppress_zero_linear) {
  struct Line {
    int i, j;
    double v;
  };
  std::vector<Line> lines;
  for (int i = 0; i < inst.num_vars(); ++i) {
    const double q = inst.linear(i);
    if (q != 0.0 || !suppress_zero_linear) lines.push_back({i, i, q});
  }
  inst.for_each_pair([&](int i, int j, double v) { lines.push_back({i, j, v}); });
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });

  out << inst.num_vars() << ' ' << lines.size() << '\n';
  for (const Line& l : lines) {
    out << (l.i + 1) << ' ' << (l.j + 1) << ' ' << format_coefficient(l.v) << '\n';
  }
}

std::string instance_to_string(const QuboInstance& inst, bool suppress_zero_linear) {
  std::ostringstream out;
  write_instance(inst, out, suppress_zero_linear);
  return out.str();
}

void save_instance(const QuboInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_instance(inst, out);
  if (!out) throw std::runtime_error("failed writing instance file: " + path);
}

}  // namespace rflip
