#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "capkit/capacity.hpp"
#include "capkit/functions.hpp"

namespace capkit {

// Capacity files:
//
//   capacity v1
//   n <int>
//   <mask> <rational>        (2^n lines, masks 0, 1, ..., 2^n - 1 in order)
//
// Function files:
//
//   function v1
//   n <int>
//   <index> <rational>       (n lines, indices 0, ..., n - 1 in order)
//
// Lines starting with '#' and blank lines are ignored by the parsers.
// Serializers emit canonical text (reduced rationals, no comments), so
// parse(serialize(x)) == x and serialize(parse(text)) is a fixed point.
// parse_capacity also runs build_capacity validation, whose errors propagate
// unchanged.

Capacity parse_capacity(std::string_view text);
std::string serialize(const Capacity& c);

PointFunction parse_function(std::string_view text);
std::string serialize(const PointFunction& x);
std::string serialize(const IntFunction& x);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace capkit
