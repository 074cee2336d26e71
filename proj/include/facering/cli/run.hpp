#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "facering/field/field.hpp"

namespace facering::cli {

struct RunConfig {
  std::string command;
  std::string input;
  FieldMode mode = FieldMode::Prime;
  std::uint64_t seed = 0;
  int trials = 3;
  bool strict = true;
  std::string json_path;
  std::optional<int> degree;
  std::string subcomplex;
  std::string vertices;
  std::string order;
  std::string edge;
  std::string kind = "B";
  bool weak = false;
  std::size_t budget = 100000;
};

/// `args` excludes the program name. Exit codes: 0 success/HOLDS,
/// 2 LIKELY_FAILS or a failed search, 1 ERROR (bad input, failed gate).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facering::cli
