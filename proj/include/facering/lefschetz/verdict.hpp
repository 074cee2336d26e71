#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "facering/field/field.hpp"

namespace facering {

enum class Status { Holds, LikelyFails, Error };

std::string to_string(Status s);
/// 0 for HOLDS, 2 for LIKELY_FAILS, 1 for ERROR.
int exit_code(Status s);

/// One map checked in one degree. `map` names it, e.g. "A^1(Δ,∂Δ) -> A^2(Δ) by ℓ^1".
struct DegreeRecord {
  int k = 0;
  std::size_t rank = 0;
  std::size_t dim_src = 0;
  std::size_t dim_dst = 0;
  std::string map;
  bool ok = true;
  /// Reported for context only; does not decide the verdict.
  bool informational = false;
};

/// Everything needed to replay a successful trial: the trial seed regenerates
/// the coordinates (unless they came from the input) and ℓ.
struct Witness {
  std::uint64_t seed = 0;
  std::string coords_source;  // "input" or "sampled"
  std::vector<std::string> ell;
  std::vector<DegreeRecord> degrees;
};

struct Verdict {
  std::string check;
  Status status = Status::Error;
  int trials = 0;
  std::optional<Witness> witness;
  /// Records of the deciding trial (the witness, or the last failure).
  std::vector<DegreeRecord> degrees;
  std::string reason;
  std::vector<std::string> notes;

  bool holds() const { return status == Status::Holds; }
  static Verdict error(std::string check, std::string reason);
};

struct CheckOptions {
  FieldMode mode = FieldMode::Prime;
  std::uint64_t seed = 0;
  int trials = 3;
  bool strict = true;
};

nlohmann::json to_json(const DegreeRecord& r);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Verdict& v);
DegreeRecord degree_record_from_json(const nlohmann::json& j);

}  // namespace facering
