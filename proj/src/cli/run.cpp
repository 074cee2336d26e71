#include "facering/cli/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "facering/artinian/graded_piece.hpp"
#include "facering/decompose/decompose.hpp"
#include "facering/field/prime_field.hpp"
#include "facering/lefschetz/certificate.hpp"
#include "facering/lefschetz/lefschetz.hpp"
#include "facering/linalg/random.hpp"
#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/io.hpp"
#include "facering/simplicial/operators.hpp"
#include "facering/simplicial/vectors.hpp"

namespace facering::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kCommands = {"vectors",     "homology",     "artinian",     "lefschetz",
                                            "pairing",     "biased",       "transversal",  "cone-check",
                                            "middle-check", "decompose",   "contract",     "certify"};

struct Outcome {
  int code = 0;
  json result;
};

template <class T>
std::string tuple(const std::vector<T>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<Vertex> vertex_list(const Complex& c, const std::string& text, const std::string& flag) {
  std::vector<Vertex> out;
  for (const auto& label : split_list(text)) {
    try {
      out.push_back(c.vertex_id(label));
    } catch (const std::exception&) {
      throw io::ParseError(flag + ": unknown vertex '" + label + "'");
    }
  }
  return out;
}

CheckOptions options_of(const RunConfig& cfg) {
  CheckOptions o;
  o.mode = cfg.mode;
  o.seed = cfg.seed;
  o.trials = cfg.trials;
  o.strict = cfg.strict;
  return o;
}

void print_header(std::ostream& out, const RunConfig& cfg, const Complex& c) {
  out << "facering " << cfg.command << " " << cfg.input << "\n";
  out << "  " << c.vertices().size() << " vertices, " << c.facets().size() << " facets, dim " << c.dim() << "\n";
  out << "  mode " << to_string(cfg.mode);
  if (cfg.mode == FieldMode::Prime) out << " (p = " << Fp::kModulus << ")";
  out << ", seed " << cfg.seed << ", trials " << cfg.trials << ", " << (cfg.strict ? "strict" : "trust") << "\n\n";
}

void print_records(std::ostream& out, const std::vector<DegreeRecord>& records) {
  if (records.empty()) return;
  out << "     k    rank  dim src  dim dst   ok  map\n";
  for (const auto& r : records) {
    out << std::setw(6) << r.k << std::setw(8) << r.rank << std::setw(9) << r.dim_src << std::setw(9) << r.dim_dst
        << std::setw(5) << (r.informational ? "-" : r.ok ? "yes" : "NO") << "  " << r.map << "\n";
  }
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << v.check << ": " << to_string(v.status);
  if (v.status != Status::Error) out << " after " << v.trials << " trial(s)";
  out << "\n";
  if (!v.reason.empty()) out << "  " << v.reason << "\n";
  print_records(out, v.degrees);
  if (v.witness) {
    out << "witness: trial seed " << v.witness->seed << ", coordinates " << v.witness->coords_source << "\n";
    if (!v.witness->ell.empty()) {
      out << "  ℓ = (";
      for (std::size_t i = 0; i < v.witness->ell.size(); ++i) out << (i ? ", " : "") << v.witness->ell[i];
      out << ")\n";
    }
  }
  for (const auto& n : v.notes) out << "note: " << n << "\n";
}

Outcome verdict_outcome(std::ostream& out, const Verdict& v) {
  print_verdict(out, v);
  return {exit_code(v.status), to_json(v)};
}

// Worst status wins: ERROR over LIKELY_FAILS over HOLDS.
int combine(int a, int b) {
  auto rank_of = [](int c) { return c == 1 ? 2 : c == 2 ? 1 : 0; };
  return rank_of(a) >= rank_of(b) ? a : b;
}

// ---- commands

Outcome cmd_vectors(std::ostream& out, const Complex& c) {
  const auto f = f_vector(c);
  const int d = c.dim() + 1;
  const auto h = h_vector(f, d);
  const auto g = g_vector(h);
  const bool ds = dehn_sommerville_check(h);
  const bool m = is_m_sequence(g);
  out << "f = " << tuple(f) << "\n";
  out << "h = " << tuple(h) << "\n";
  out << "g = " << tuple(g) << "\n";
  out << "DS: " << (ds ? "true" : "false") << "\n";
  out << "M-sequence: " << (m ? "true" : "false") << "\n";
  return {0, {{"f", f}, {"h", h}, {"g", g}, {"dehn_sommerville", ds}, {"m_sequence", m}}};
}

Outcome cmd_homology(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  const auto betti = reduced_betti(c, cfg.mode);
  const long chi = euler_characteristic(c);
  const bool sphere = is_homology_sphere(c);
  const bool ball = is_homology_ball(c);
  const bool manifold = is_homology_manifold(c);
  out << "     k  reduced betti\n";
  for (std::size_t i = 0; i < betti.size(); ++i) {
    out << std::setw(6) << static_cast<int>(i) - 1 << std::setw(15) << betti[i] << "\n";
  }
  out << "euler characteristic: " << chi << "\n";
  out << "homology sphere: " << (sphere ? "true" : "false") << "\n";
  out << "homology ball: " << (ball ? "true" : "false") << "\n";
  out << "homology manifold: " << (manifold ? "true" : "false") << "\n";
  return {0,
          {{"reduced_betti_from_minus_one", betti},
           {"euler_characteristic", chi},
           {"homology_sphere", sphere},
           {"homology_ball", ball},
           {"homology_manifold", manifold}}};
}

template <ExactField F>
Outcome artinian_impl(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  const int d = c.dim() + 1;
  const auto h = h_vector(f_vector(c), d);
  const bool sphere = is_homology_sphere(c);
  const bool ball = !sphere && is_homology_ball(c);
  std::optional<Matrix<F>> theta;
  std::uint64_t used = 0;
  std::vector<std::string> notes;
  for (int t = 0; t < std::max(1, cfg.trials) && !theta; ++t) {
    used = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    SampleStream stream(used);
    auto g = realize<F>(c, static_cast<std::size_t>(d), stream);
    if (const auto bad = improper_face(c, g.coords)) {
      if (c.coords()) require_proper(c, g.coords);
      notes.push_back("trial " + std::to_string(t) + ": improper at " + c.face_to_string(*bad));
      continue;
    }
    theta = std::move(g.coords);
  }
  if (!theta) throw ImproperCoordinates("no proper coordinate sample", {});
  const auto abs = module_of(c, *theta, false);
  std::optional<ArtinianModule<F>> rel;
  if (ball) rel = module_of(c, *theta, true);

  json rows = json::array();
  bool agree = true;
  out << "     k     h_k  dim A^k(Δ)";
  if (rel) out << "  dim A^k(Δ,∂Δ)";
  out << "\n";
  for (int k = 0; k <= d; ++k) {
    const std::size_t da = abs.dim(k);
    const Count hk = k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : 0;
    json row = {{"k", k}, {"h", hk}, {"dim_abs", da}};
    out << std::setw(6) << k << std::setw(8) << hk << std::setw(12) << da;
    if (rel) {
      const std::size_t dr = rel->dim(k);
      row["dim_rel"] = dr;
      out << std::setw(16) << dr;
    }
    out << "\n";
    if ((sphere || ball) && static_cast<Count>(da) != hk) agree = false;
    rows.push_back(row);
  }
  out << "coordinates: " << (c.coords() ? "input" : "sampled, trial seed " + std::to_string(used)) << "\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  json j = {{"degrees", rows}, {"trial_seed", used}, {"coords_source", c.coords() ? "input" : "sampled"}};
  if (sphere || ball) {
    out << "dim A^k(Δ) = h_k: " << (agree ? "true" : "false") << "\n";
    j["matches_h"] = agree;
    return {agree ? 0 : 2, j};
  }
  out << "not a homology sphere or ball: dimensions are reported without comparison\n";
  j["matches_h"] = nullptr;
  return {0, j};
}

Outcome cmd_artinian(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  if (cfg.mode == FieldMode::Prime) return artinian_impl<Fp>(out, c, cfg);
  return artinian_impl<Rational>(out, c, cfg);
}

// X is read with its own labels and re-indexed into the universe of Σ.
Complex embed(const Complex& sigma, const Complex& x, const std::string& path) {
  std::vector<Face> facets;
  for (const auto& f : x.facets()) {
    Face g;
    for (Vertex v : f) {
      const std::string& label = x.labels()[v];
      try {
        g.push_back(sigma.vertex_id(label));
      } catch (const std::exception&) {
        throw io::ParseError(path + ": vertex '" + label + "' is not a vertex of the input complex");
      }
    }
    facets.push_back(make_face(std::move(g)));
  }
  if (facets.empty()) return Complex::void_on(sigma.labels());
  return Complex::generated_by(sigma.labels(), std::move(facets), std::nullopt, x.name());
}

Outcome cmd_biased(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  if (cfg.subcomplex.empty()) return verdict_outcome(out, check_biased_pairing(c, options_of(cfg), cfg.degree));
  const Complex x = embed(c, io::parse_complex(cfg.subcomplex), cfg.subcomplex);
  return verdict_outcome(out, check_biased_poincare(c, x, options_of(cfg), cfg.degree));
}

Outcome cmd_transversal(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  if (cfg.vertices.empty()) throw io::ParseError("--vertices: required for transversal");
  return verdict_outcome(out, check_transversal_prime(c, vertex_list(c, cfg.vertices, "--vertices"), options_of(cfg),
                                                      cfg.degree));
}

Outcome cmd_cone(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  const std::vector<Vertex> vs = cfg.vertices.empty() ? c.vertices() : vertex_list(c, cfg.vertices, "--vertices");
  Outcome o{0, json::array()};
  for (Vertex v : vs) {
    out << "vertex " << c.labels()[v] << "\n";
    const Verdict verdict = cone_lemma_check(c, v, options_of(cfg));
    print_verdict(out, verdict);
    out << "\n";
    o.code = combine(o.code, exit_code(verdict.status));
    json j = to_json(verdict);
    j["vertex"] = c.labels()[v];
    o.result.push_back(j);
  }
  o.result = {{"vertices", o.result}};
  return o;
}

Outcome cmd_decompose(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  if (!cfg.order.empty()) {
    const COrderReport r = verify_C_order(c, vertex_list(c, cfg.order, "--order"));
    out << "C-decomposition order: " << (r.holds ? "holds" : "fails") << "\n  " << r.detail << "\n";
    out << "  step  vertex  (1) submanifold  (3) Lk_w M ∩ (∂M ∪ U_W)  (3) Lk_w U_W\n";
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const auto& s = r.steps[i];
      out << std::setw(6) << i << std::setw(8) << s.label << std::setw(17) << (s.submanifold ? "yes" : "NO") << "  "
          << s.meet.detail << " | " << s.link.detail << "\n";
    }
    out << "stars cover M: " << (r.covers ? "true" : "false") << "\n";
    return {r.holds ? 0 : 2, to_json(r)};
  }
  if (cfg.kind != "A" && cfg.kind != "B") throw io::ParseError("--kind: expected A or B, got '" + cfg.kind + "'");
  SearchOptions so;
  so.node_cap = cfg.budget;
  const DecompositionTrace t =
      cfg.kind == "A" ? find_A_decomposition(c, so) : find_B_decomposition(c, so);
  out << cfg.kind << "-decomposition: " << to_string(t.outcome) << " (" << t.nodes << " node(s))\n";
  if (t.success()) {
    out << "  step  delete  f after\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const auto& s = t.steps[i];
      out << std::setw(6) << i << std::setw(8) << s.label << "  " << tuple(s.f)
          << (s.link_trace ? "  (link: " + std::to_string(s.link_trace->steps.size()) + " deletion(s))" : "") << "\n";
    }
  }
  for (const auto& f : t.frontier) out << "  rejected " << f << "\n";
  return {t.success() ? 0 : 2, to_json(t, c)};
}

Outcome cmd_contract(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  if (!cfg.edge.empty()) {
    const auto ids = vertex_list(c, cfg.edge, "--edge");
    if (ids.size() != 2) throw io::ParseError("--edge: expected two vertices");
    const Face edge = make_face({ids[0], ids[1]});
    if (!c.contains(edge)) throw io::ParseError("--edge: " + c.face_to_string(edge) + " is not an edge");
    const ContractionResult r = contract_edge(c.with_coords(std::nullopt), {ids[0], ids[1]});
    if (!r.ok()) {
      out << "edge " << c.face_to_string(edge) << " fails the link condition at " << c.face_to_string(*r.violation)
          << "\n";
      return {2, {{"edge", c.face_to_string(edge)}, {"link_condition", false},
                  {"violation", c.face_to_string(*r.violation)}}};
    }
    const Complex after = compact(*r.complex);
    const bool same = reduced_betti(after) == reduced_betti(c);
    out << "contracted " << c.face_to_string(edge) << " (" << c.labels()[ids[1]] << " merged into " << c.labels()[ids[0]] << ")\n";
    out << "f after = " << tuple(f_vector(after)) << "\n";
    out << "homology preserved: " << (same ? "true" : "false") << "\n";
    out << io::to_facet_list(after);
    return {0, {{"edge", c.face_to_string(edge)},
                {"link_condition", true},
                {"homology_preserved", same},
                {"f_after", f_vector(after)},
                {"complex", json::parse(io::to_json(after))}}};
  }
  const auto edges = contractible_edges(c);
  json rows = json::array();
  std::size_t good = 0;
  out << "  edge        link condition  homology  f after\n";
  for (const auto& e : edges) {
    out << "  " << std::left << std::setw(12) << c.face_to_string(e.edge) << std::right << std::setw(14)
        << (e.link_condition ? "yes" : "no") << std::setw(10)
        << (e.homology_preserved ? (*e.homology_preserved ? "same" : "CHANGED") : "-") << "  "
        << (e.link_condition ? tuple(e.f_after) : "violated at " + c.face_to_string(*e.violation)) << "\n";
    if (e.link_condition) ++good;
    rows.push_back(to_json(e, c));
  }
  out << good << " of " << edges.size() << " edge(s) contractible\n";
  return {0, {{"edges", rows}, {"contractible", good}}};
}

Outcome cmd_certify(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  const Certificate cert = certify_g(c, options_of(cfg));
  out << "f = " << tuple(cert.f) << "\n";
  out << "h = " << tuple(cert.h) << "\n";
  out << "g = " << tuple(cert.g) << "\n";
  out << "homology sphere: " << (cert.homology_sphere ? "true" : "false") << "\n";
  out << "DS: " << (cert.dehn_sommerville ? "true" : "false") << "\n";
  out << "M-sequence: " << (cert.m_sequence ? "true" : "false") << "\n";
  print_records(out, cert.degrees);
  if (cert.witness) out << "hard Lefschetz witness: trial seed " << cert.witness->seed << "\n";
  out << "verdict: " << to_string(cert.verdict);
  if (!cert.stage.empty()) out << " at stage " << cert.stage;
  out << "\n";
  if (!cert.error.empty()) out << "  " << cert.error << "\n";
  return {exit_code(cert.verdict), to_json(cert)};
}

Outcome dispatch(std::ostream& out, const Complex& c, const RunConfig& cfg) {
  const CheckOptions o = options_of(cfg);
  const std::string& cmd = cfg.command;
  if (cmd == "vectors") return cmd_vectors(out, c);
  if (cmd == "homology") return cmd_homology(out, c, cfg);
  if (cmd == "artinian") return cmd_artinian(out, c, cfg);
  if (cmd == "lefschetz") return verdict_outcome(out, cfg.weak ? check_weak_lefschetz(c, o) : check_hard_lefschetz(c, o));
  if (cmd == "pairing") return verdict_outcome(out, check_graebe_pairing(c, o));
  if (cmd == "biased") return cmd_biased(out, c, cfg);
  if (cmd == "transversal") return cmd_transversal(out, c, cfg);
  if (cmd == "cone-check") return cmd_cone(out, c, cfg);
  if (cmd == "middle-check") return verdict_outcome(out, middle_reduction_check(c, o));
  if (cmd == "decompose") return cmd_decompose(out, c, cfg);
  if (cmd == "contract") return cmd_contract(out, c, cfg);
  return cmd_certify(out, c, cfg);
}

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

json envelope(const RunConfig& cfg, const std::string& sha) {
  json j;
  j["command"] = cfg.command;
  j["input"] = cfg.input;
  j["input_sha"] = sha.empty() ? json(nullptr) : json(sha);
  j["field"] = to_string(cfg.mode);
  j["prime"] = cfg.mode == FieldMode::Prime ? json(Fp::kModulus) : json(nullptr);
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["strict"] = cfg.strict;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string mode = "prime";
  CLI::App app{"Face rings, Artinian reductions and Lefschetz checks on simplicial complexes", "facering"};
  app.require_subcommand(1);
  for (const auto& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", cfg.input, "complex file (JSON or facet list), or @name for a bundled complex")
        ->required();
    sub->add_option("--json", cfg.json_path, "write a JSON report");
    sub->add_option("--seed", cfg.seed, "root seed");
    sub->add_option("--trials", cfg.trials, "independent coordinate samples")->check(CLI::PositiveNumber);
    sub->add_option("--mode", mode, "scalar field")->check(CLI::IsMember({"prime", "rational"}));
    sub->add_flag("--strict,!--trust", cfg.strict, "verify topological preconditions");
    if (name == "biased" || name == "transversal") sub->add_option("--degree", cfg.degree, "a single degree k");
    if (name == "biased") sub->add_option("--subcomplex", cfg.subcomplex, "X ⊆ Σ for biased Poincaré duality");
    if (name == "transversal" || name == "cone-check") sub->add_option("--vertices", cfg.vertices, "vertex labels");
    if (name == "lefschetz") sub->add_flag("--weak", cfg.weak, "weak instead of hard Lefschetz");
    if (name == "decompose") {
      sub->add_option("--kind", cfg.kind, "A or B");
      sub->add_option("--order", cfg.order, "verify a C-decomposition order instead");
      sub->add_option("--budget", cfg.budget, "search node cap");
    }
    if (name == "contract") sub->add_option("--edge", cfg.edge, "contract one edge, e.g. 1,5");
  }

  std::vector<std::string> argv_store{"facering"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.mode = parse_field_mode(mode);

  std::string sha;
  Outcome o;
  bool failed = false;
  try {
    const Complex c = io::parse_complex(cfg.input);
    sha = io::canonical_sha256(c);
    print_header(out, cfg, c);
    o = dispatch(out, c, cfg);
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    o = {1, {{"error", std::string("parse error: ") + e.what()}}};
    failed = true;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    o = {1, {{"error", e.what()}}};
    failed = true;
  }
  if (!cfg.json_path.empty()) {
    try {
      if (cfg.command == "certify" && !failed) {
        write_json(cfg.json_path, o.result);
      } else {
        json j = envelope(cfg, sha);
        j["result"] = o.result;
        j["exit_code"] = o.code;
        write_json(cfg.json_path, j);
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return o.code;
}

}  // namespace facering::cli
