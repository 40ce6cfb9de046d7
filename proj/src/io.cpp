#include "capkit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "capkit/error.hpp"

namespace capkit {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    auto fields = split_fields(line);
    if (!fields.empty() && fields.front().front() != '#') out.push_back({number, std::move(fields)});
    pos = end + 1;
  }
  return out;
}

long long parse_count(std::string_view field, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

Rational parse_value(std::string_view field, std::size_t line) {
  try {
    return parse_rational(field);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

/// Shared header + indexed-rows reader. Returns (n, values in index order).
std::pair<int, std::vector<Rational>> parse_indexed(std::string_view text, std::string_view kind,
                                                    bool rows_are_masks) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& header = lines[0];
  if (header.fields.size() != 2 || header.fields[0] != kind || header.fields[1] != "v1") {
    throw ParseError(header.number, "expected header '" + std::string(kind) + " v1'");
  }
  if (lines.size() < 2) throw ParseError(0, "missing 'n <int>' line");
  const Line& size_line = lines[1];
  if (size_line.fields.size() != 2 || size_line.fields[0] != "n") {
    throw ParseError(size_line.number, "expected 'n <int>'");
  }
  const long long n = parse_count(size_line.fields[1], size_line.number);
  const long long limit = rows_are_masks ? kMaxGroundSetSize : (1LL << 24);
  if (n < 1 || n > limit) {
    throw ParseError(size_line.number, "n = " + std::to_string(n) + " out of range");
  }
  const std::size_t rows = rows_are_masks ? (std::size_t{1} << n) : static_cast<std::size_t>(n);

  std::vector<Rational> values;
  values.reserve(rows);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.fields.size() != 2) throw ParseError(line.number, "expected '<index> <rational>'");
    const long long index = parse_count(line.fields[0], line.number);
    const std::size_t expected = values.size();
    if (index < 0 || static_cast<std::size_t>(index) >= rows) {
      throw ParseError(line.number, "index " + std::to_string(index) + " out of range");
    }
    if (static_cast<std::size_t>(index) < expected) {
      throw ParseError(line.number, "duplicate index " + std::to_string(index));
    }
    if (static_cast<std::size_t>(index) > expected) {
      throw ParseError(line.number, "missing index " + std::to_string(expected));
    }
    values.push_back(parse_value(line.fields[1], line.number));
  }
  if (values.size() != rows) {
    const std::size_t last = lines.back().number;
    throw ParseError(last, "missing index " + std::to_string(values.size()) + " (expected " +
                               std::to_string(rows) + " rows)");
  }
  return {static_cast<int>(n), std::move(values)};
}

}  // namespace

Capacity parse_capacity(std::string_view text) {
  auto [n, values] = parse_indexed(text, "capacity", true);
  return build_capacity(n, std::move(values));
}

std::string serialize(const Capacity& c) {
  std::ostringstream out;
  out << "capacity v1\nn " << c.size() << "\n";
  const auto values = c.values();
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    out << mask << " " << to_string(values[mask]) << "\n";
  }
  return out.str();
}

PointFunction parse_function(std::string_view text) {
  auto [n, values] = parse_indexed(text, "function", false);
  return PointFunction(std::move(values));
}

std::string serialize(const PointFunction& x) {
  std::ostringstream out;
  out << "function v1\nn " << x.size() << "\n";
  for (std::size_t i = 0; i < x.size(); ++i) out << i << " " << to_string(x[i]) << "\n";
  return out.str();
}

std::string serialize(const IntFunction& x) {
  std::ostringstream out;
  out << "function v1\nn " << x.size() << "\n";
  for (std::size_t i = 0; i < x.size(); ++i) out << i << " " << x[i] << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace capkit
