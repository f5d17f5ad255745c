#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paretolab/errors.hpp"

namespace paretolab {

/// Per-axis optimization sense. Shared by all objective vectors of a problem.
enum class Direction { Minimize, Maximize };

using Directions = std::vector<Direction>;

/// (profit, weight_1, ..., weight_{d-1}): maximize the first axis, minimize
/// the rest. The standard axis layout for knapsack-style problems.
inline Directions profit_weight_directions(int d) {
  if (d < 2) throw ContractError("objective dimension must be >= 2, got " + std::to_string(d));
  Directions dirs(static_cast<std::size_t>(d), Direction::Minimize);
  dirs[0] = Direction::Maximize;
  return dirs;
}

inline Directions all_minimize(int d) {
  if (d < 2) throw ContractError("objective dimension must be >= 2, got " + std::to_string(d));
  return Directions(static_cast<std::size_t>(d), Direction::Minimize);
}

inline Directions all_maximize(int d) {
  if (d < 2) throw ContractError("objective dimension must be >= 2, got " + std::to_string(d));
  return Directions(static_cast<std::size_t>(d), Direction::Maximize);
}

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_scalar(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_scalar(std::int64_t v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Parses a full token; trailing garbage fails.
inline bool parse_scalar(std::string_view tok, double& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

inline bool parse_scalar(std::string_view tok, std::int64_t& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

}  // namespace paretolab
