#include "facering/lefschetz/verdict.hpp"

namespace facering {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "HOLDS";
    case Status::LikelyFails:
      return "LIKELY_FAILS";
    case Status::Error:
      return "ERROR";
  }
  return "ERROR";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Holds:
      return 0;
    case Status::LikelyFails:
      return 2;
    case Status::Error:
      return 1;
  }
  return 1;
}

Verdict Verdict::error(std::string check, std::string reason) {
  Verdict v;
  v.check = std::move(check);
  v.status = Status::Error;
  v.reason = std::move(reason);
  return v;
}

nlohmann::json to_json(const DegreeRecord& r) {
  nlohmann::json j = {{"k", r.k}, {"rank", r.rank}, {"dim_src", r.dim_src}, {"dim_dst", r.dim_dst}, {"map", r.map}, {"ok", r.ok}};
  if (r.informational) j["informational"] = true;
  return j;
}

DegreeRecord degree_record_from_json(const nlohmann::json& j) {
  DegreeRecord r;
  r.k = j.at("k").get<int>();
  r.rank = j.at("rank").get<std::size_t>();
  r.dim_src = j.at("dim_src").get<std::size_t>();
  r.dim_dst = j.at("dim_dst").get<std::size_t>();
  r.map = j.value("map", std::string{});
  r.ok = j.value("ok", true);
  r.informational = j.value("informational", false);
  return r;
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& r : w.degrees) degrees.push_back(to_json(r));
  return {{"seed", w.seed}, {"coords", w.coords_source}, {"ell", w.ell}, {"degrees", degrees}};
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& r : v.degrees) degrees.push_back(to_json(r));
  nlohmann::json out{{"check", v.check},   {"verdict", to_string(v.status)}, {"trials", v.trials},
                     {"degrees", degrees}, {"reason", v.reason},             {"notes", v.notes}};
  out["witness"] = v.witness ? to_json(*v.witness) : nlohmann::json(nullptr);
  return out;
}

}  // namespace facering
