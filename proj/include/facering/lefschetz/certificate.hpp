#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "facering/lefschetz/verdict.hpp"
#include "facering/simplicial/complex.hpp"
#include "facering/simplicial/vectors.hpp"

namespace facering {

/// Record of the g-theorem pipeline on one complex. `stage` names the first
/// stage that failed (empty when every stage passed).
struct Certificate {
  std::string input_sha;
  FieldMode mode = FieldMode::Prime;
  std::uint64_t seed = 0;
  int trials = 0;
  /// Trial seeds tried by the Lefschetz search, in order.
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> betti;
  bool homology_sphere = false;
  std::vector<Count> f, h, g;
  bool dehn_sommerville = false;
  bool m_sequence = false;
  std::optional<Witness> witness;
  std::vector<DegreeRecord> degrees;
  Status verdict = Status::Error;
  std::string stage;
  std::string error;
};

/// Homology gate, f/h/g, Dehn-Sommerville, M-sequence, hard Lefschetz search.
Certificate certify_g(const Complex& sigma, const CheckOptions& options = {});

nlohmann::json to_json(const Certificate& c);

struct ReplayReport {
  bool ok = false;
  std::string detail;
};

/// Recomputes the vectors and the witness ranks of a serialized certificate
/// and compares them exactly.
ReplayReport replay_certificate(const Complex& sigma, const nlohmann::json& certificate);

}  // namespace facering
