#include "facering/lefschetz/certificate.hpp"

#include "facering/field/prime_field.hpp"
#include "facering/lefschetz/lefschetz.hpp"
#include "facering/linalg/random.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/io.hpp"

namespace facering {
namespace {

nlohmann::json records_json(const std::vector<DegreeRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) out.push_back({{"k", r.k}, {"rank", r.rank}, {"dim_src", r.dim_src}, {"dim_dst", r.dim_dst}});
  return out;
}

}  // namespace

Certificate certify_g(const Complex& sigma, const CheckOptions& options) {
  Certificate c;
  c.input_sha = io::canonical_sha256(sigma);
  c.mode = options.mode;
  c.seed = options.seed;
  c.betti = reduced_homology(sigma, options.mode);
  c.homology_sphere = is_homology_sphere(sigma);
  if (!c.homology_sphere && options.strict) {
    c.stage = "homology";
    c.error = "'" + sigma.name() + "' is not a homology sphere";
    return c;
  }
  const int d = sigma.dim() + 1;
  c.f = f_vector(sigma);
  c.h = h_vector(c.f, d);
  c.g = g_vector(c.h);
  c.dehn_sommerville = dehn_sommerville_check(c.h);
  c.m_sequence = is_m_sequence(c.g);
  if (!c.dehn_sommerville) {
    c.stage = "dehn_sommerville";
    c.error = "h-vector is not palindromic";
    return c;
  }
  const Verdict v = check_hard_lefschetz(sigma, options);
  c.trials = v.trials;
  for (int t = 0; t < v.trials; ++t) c.seeds.push_back(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
  c.witness = v.witness;
  c.degrees = v.degrees;
  c.verdict = v.status;
  if (v.status == Status::Error) {
    c.stage = "lefschetz";
    c.error = v.reason;
  } else if (v.status == Status::Holds && !c.m_sequence) {
    c.verdict = Status::Error;
    c.stage = "m_sequence";
    c.error = "Lefschetz witness found but g is not an M-sequence";
  } else if (v.status == Status::LikelyFails) {
    c.stage = "lefschetz";
    c.error = v.reason;
  }
  return c;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["input_sha"] = c.input_sha;
  j["field"] = std::string(to_string(c.mode));
  j["prime"] = c.mode == FieldMode::Prime ? nlohmann::json(Fp::kModulus) : nlohmann::json(nullptr);
  j["seed"] = c.seed;
  j["seeds"] = c.seeds;
  j["betti"] = c.betti;
  j["homology_sphere"] = c.homology_sphere;
  j["f"] = c.f;
  j["h"] = c.h;
  j["g"] = c.g;
  j["dehn_sommerville"] = c.dehn_sommerville;
  j["m_sequence"] = c.m_sequence;
  j["degrees"] = records_json(c.degrees);
  j["witness"] = c.witness ? to_json(*c.witness) : nlohmann::json(nullptr);
  j["normalization"] = "fundamental class is 1 on the grevlex-last top monomial with a nonzero class";
  j["verdict"] = to_string(c.verdict);
  j["stage"] = c.stage.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.stage);
  j["error"] = c.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.error);
  return j;
}

ReplayReport replay_certificate(const Complex& sigma, const nlohmann::json& cert) {
  ReplayReport r;
  try {
    if (cert.at("input_sha").get<std::string>() != io::canonical_sha256(sigma)) {
      r.detail = "input hash differs";
      return r;
    }
    const std::vector<Count> f = f_vector(sigma);
    const std::vector<Count> h = h_vector(f, sigma.dim() + 1);
    if (cert.at("f").get<std::vector<Count>>() != f || cert.at("h").get<std::vector<Count>>() != h ||
        cert.at("g").get<std::vector<Count>>() != g_vector(h)) {
      r.detail = "f/h/g vectors differ";
      return r;
    }
    if (cert.at("witness").is_null()) {
      r.ok = true;
      r.detail = "no witness to replay";
      return r;
    }
    const FieldMode mode = parse_field_mode(cert.at("field").get<std::string>());
    const auto seed = cert.at("witness").at("seed").get<std::uint64_t>();
    const auto again = replay_hard_lefschetz(sigma, mode, seed);
    const auto& stored = cert.at("degrees");
    if (stored.size() != again.size()) {
      r.detail = "number of degrees differs";
      return r;
    }
    for (std::size_t i = 0; i < again.size(); ++i) {
      const DegreeRecord s = degree_record_from_json(stored[i]);
      if (s.k != again[i].k || s.rank != again[i].rank || s.dim_src != again[i].dim_src ||
          s.dim_dst != again[i].dim_dst) {
        r.detail = "degree " + std::to_string(again[i].k) + " differs";
        return r;
      }
    }
    r.ok = true;
    r.detail = "ranks reproduced in " + std::to_string(again.size()) + " degree(s)";
  } catch (const std::exception& e) {
    r.detail = std::string("malformed certificate: ") + e.what();
  }
  return r;
}

}  // namespace facering
