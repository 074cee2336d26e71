#include <algorithm>
#include <unordered_set>

#include "facering/decompose/decompose.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/operators.hpp"

namespace facering {
namespace {

std::string key_of(const Complex& c) {
  std::string key;
  for (const auto& f : c.facets()) {
    for (Vertex v : f) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

bool is_simplex(const Complex& c) { return c.facets().size() == 1; }

// Void and {∅} both count as empty.
bool is_empty_complex(const Complex& c) { return c.is_void() || c.dim() < 0; }

std::vector<Vertex> by_degree(const Complex& c) {
  std::vector<Vertex> verts = c.vertices();
  std::vector<std::size_t> degree(c.universe_size(), 0);
  for (const auto& e : c.faces(1)) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  std::sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) {
    if (degree[a] != degree[b]) return degree[a] < degree[b];
    return c.labels()[a] < c.labels()[b];
  });
  return verts;
}

bool ball_or_sphere(const Complex& c) { return is_homology_ball(c) || is_homology_sphere(c); }

class Search {
 public:
  Search(DecompositionKind kind, std::size_t cap) : kind_(kind), cap_(cap) {}

  std::size_t nodes() const { return nodes_; }
  bool over_budget() const { return over_; }

  std::optional<std::vector<DecompositionStep>> run(const Complex& delta, std::vector<std::string>* frontier) {
    if (++nodes_ > cap_) {
      over_ = true;
      return std::nullopt;
    }
    if (is_simplex(delta)) return std::vector<DecompositionStep>{};
    const std::string key = key_of(delta);
    if (failed_.count(key)) {
      if (frontier) frontier->push_back("already known to fail");
      return std::nullopt;
    }
    const Complex bd = kind_ == DecompositionKind::A ? boundary_complex(delta) : Complex();
    for (Vertex w : by_degree(delta)) {
      const std::string& label = delta.labels()[w];
      const Complex rest = deletion(delta, {w});
      if (rest.dim() != delta.dim()) {
        if (frontier) frontier->push_back(label + ": deletion drops dimension");
        continue;
      }
      if (!ball_or_sphere(rest)) {
        if (frontier) frontier->push_back(label + ": deletion is not a homology ball or sphere");
        continue;
      }
      DecompositionStep step{w, label, f_vector(rest), nullptr};
      if (kind_ == DecompositionKind::A && bd.contains({w})) {
        const Complex lk = link(bd, {w});
        if (!is_empty_complex(lk)) {
          auto sub = run(lk, nullptr);
          if (over_) return std::nullopt;
          if (!sub) {
            if (frontier) frontier->push_back(label + ": Lk_w ∂Δ is not A-decomposable");
            continue;
          }
          auto trace = std::make_shared<DecompositionTrace>();
          trace->kind = kind_;
          trace->outcome = SearchOutcome::Success;
          trace->input_f = f_vector(lk);
          trace->steps = std::move(*sub);
          step.link_trace = std::move(trace);
        }
      }
      auto tail = run(rest, nullptr);
      if (over_) return std::nullopt;
      if (tail) {
        tail->insert(tail->begin(), std::move(step));
        return tail;
      }
      if (frontier) frontier->push_back(label + ": no decomposition below");
    }
    failed_.insert(key);
    return std::nullopt;
  }

 private:
  DecompositionKind kind_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
  bool over_ = false;
  std::unordered_set<std::string> failed_;
};

DecompositionTrace find(const Complex& delta, DecompositionKind kind, const SearchOptions& options) {
  if (!ball_or_sphere(delta)) {
    throw PreconditionError("'" + delta.name() + "' is not a homology sphere or ball");
  }
  DecompositionTrace trace;
  trace.kind = kind;
  trace.input_f = f_vector(delta);
  Search search(kind, options.node_cap);
  auto steps = search.run(delta, &trace.frontier);
  trace.nodes = search.nodes();
  if (search.over_budget()) {
    trace.outcome = SearchOutcome::BudgetExceeded;
  } else if (steps) {
    trace.outcome = SearchOutcome::Success;
    trace.steps = std::move(*steps);
    trace.frontier.clear();
  }
  return trace;
}

ReplayCheck replay_steps(const Complex& delta, const std::vector<DecompositionStep>& steps, DecompositionKind as) {
  Complex cur = delta;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    const std::string at = "step " + std::to_string(i) + " (" + s.label + "): ";
    if (!cur.contains({s.vertex})) return {false, at + "vertex not present"};
    const Complex next = deletion(cur, {s.vertex});
    if (f_vector(next) != s.f) return {false, at + "f-vector differs"};
    if (next.dim() != cur.dim() || !ball_or_sphere(next)) return {false, at + "not a ball or sphere of the same dimension"};
    if (as == DecompositionKind::A) {
      const Complex bd = boundary_complex(cur);
      const Complex lk = bd.contains({s.vertex}) ? link(bd, {s.vertex}) : Complex::void_on(cur.labels());
      if (is_empty_complex(lk) != (s.link_trace == nullptr)) return {false, at + "link trace presence mismatch"};
      if (s.link_trace) {
        const ReplayCheck sub = replay_steps(lk, s.link_trace->steps, as);
        if (!sub.ok) return {false, at + "link: " + sub.detail};
      }
    }
    cur = next;
  }
  if (!is_simplex(cur)) return {false, "final complex is not a simplex"};
  return {true, "replayed " + std::to_string(steps.size()) + " deletion(s)"};
}

}  // namespace

std::string to_string(DecompositionKind k) { return k == DecompositionKind::A ? "A" : "B"; }

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Success:
      return "SUCCESS";
    case SearchOutcome::Failure:
      return "FAILURE";
    case SearchOutcome::BudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "FAILURE";
}

DecompositionTrace find_B_decomposition(const Complex& delta, const SearchOptions& options) {
  return find(delta, DecompositionKind::B, options);
}

DecompositionTrace find_A_decomposition(const Complex& delta, const SearchOptions& options) {
  return find(delta, DecompositionKind::A, options);
}

ReplayCheck replay_trace(const Complex& delta, const DecompositionTrace& trace, std::optional<DecompositionKind> as) {
  if (!trace.success()) return {false, "trace is not a success"};
  if (f_vector(delta) != trace.input_f) return {false, "input f-vector differs"};
  return replay_steps(delta, trace.steps, as.value_or(trace.kind));
}

nlohmann::json to_json(const DecompositionTrace& trace, const Complex& delta) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    nlohmann::json j = {{"vertex", s.vertex}, {"label", s.label}, {"f", s.f}};
    j["link_trace"] = s.link_trace ? to_json(*s.link_trace, delta) : nlohmann::json(nullptr);
    steps.push_back(std::move(j));
  }
  return {{"kind", to_string(trace.kind)}, {"outcome", to_string(trace.outcome)}, {"input_f", trace.input_f},
          {"nodes", trace.nodes},          {"steps", steps},                     {"frontier", trace.frontier}};
}

}  // namespace facering
