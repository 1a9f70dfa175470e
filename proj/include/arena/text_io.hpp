#ifndef ARENA_TEXT_IO_HPP_
#define ARENA_TEXT_IO_HPP_

#include <cstdio>
#include <string>
#include <vector>

namespace arena {

// Shortest decimal form with up to 17 significant digits; round-trips any
// double, locale-independent. All file formats use this.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string join_doubles(const std::vector<double>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += format_double(v[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep);
std::vector<double> parse_doubles(const std::string& s, char sep);

// Whole-file helpers; throw std::runtime_error with the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace arena

#endif  // ARENA_TEXT_IO_HPP_
