#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "facering/lefschetz/verdict.hpp"
#include "facering/simplicial/complex.hpp"
#include "facering/simplicial/vectors.hpp"

namespace facering {

// ---- A- and B-decompositions

enum class DecompositionKind { A, B };
enum class SearchOutcome { Success, Failure, BudgetExceeded };

std::string to_string(DecompositionKind k);
std::string to_string(SearchOutcome o);

struct DecompositionTrace;

/// One deletion Δ → Δ − w. `f` is the f-vector of Δ − w.
struct DecompositionStep {
  Vertex vertex = 0;
  std::string label;
  std::vector<Count> f;
  /// A only: the decomposition of Lk_w ∂Δ, absent when that link is empty.
  std::shared_ptr<const DecompositionTrace> link_trace;
};

struct DecompositionTrace {
  DecompositionKind kind = DecompositionKind::B;
  SearchOutcome outcome = SearchOutcome::Failure;
  std::vector<Count> input_f;
  /// Deletions leading down to a simplex (on success).
  std::vector<DecompositionStep> steps;
  /// Intermediate complexes visited, nested link searches included.
  std::size_t nodes = 0;
  /// On failure: every top-level candidate with the reason it was rejected.
  std::vector<std::string> frontier;

  bool success() const { return outcome == SearchOutcome::Success; }
};

struct SearchOptions {
  std::size_t node_cap = 100000;
};

/// Depth-first search for w_1, w_2, ... with every Δ − w_1 − ... − w_i a
/// homology ball or sphere of the same dimension, ending at a simplex.
/// Candidates are tried by ascending degree, ties by label. Throws
/// PreconditionError unless Δ is a homology sphere or ball.
DecompositionTrace find_B_decomposition(const Complex& delta, const SearchOptions& options = {});

/// As find_B_decomposition, and additionally Lk_w ∂Δ (when nonempty) must be
/// A-decomposable at every step.
DecompositionTrace find_A_decomposition(const Complex& delta, const SearchOptions& options = {});

struct ReplayCheck {
  bool ok = false;
  std::string detail;
};

/// Re-applies the recorded deletions, checking f-vectors, dimension, topology
/// and (for `as` = A) the nested link traces. An A-trace replays as B too.
ReplayCheck replay_trace(const Complex& delta, const DecompositionTrace& trace, std::optional<DecompositionKind> as = {});

nlohmann::json to_json(const DecompositionTrace& trace, const Complex& delta);

// ---- C-decomposition orders

struct COrderReport;

/// One of the two complexes of condition (3) at a step.
struct LinkDiagnostic {
  std::string which;
  bool empty = false;
  bool ok = false;
  std::string detail;
  std::vector<Count> f;
  std::vector<Vertex> nested_order;
  std::shared_ptr<const COrderReport> nested;
};

/// Step i has w = order[i] and W = order[0..i). `submanifold` is condition (1)
/// for the initial segment W ∪ {w}; `meet` and `link` are the complexes
/// Lk_w M ∩ (∂M ∪ U_W) and Lk_w U_W of condition (3), U_W = ∪_{v∈W} st_v M.
struct COrderStep {
  Vertex vertex = 0;
  std::string label;
  bool submanifold = false;
  std::string submanifold_detail;
  LinkDiagnostic meet;
  LinkDiagnostic link;
};

struct COrderReport {
  bool holds = false;
  /// Smallest violated condition number (1, 2 or 3), 0 if none.
  int first_violation = 0;
  std::string detail;
  /// Condition (2): the stars of the whole order cover M.
  bool covers = false;
  std::vector<COrderStep> steps;
  int dim = 0;
};

/// Chooses the order used for a nested complex of condition (3).
using NestedOrder = std::function<std::vector<Vertex>(const Complex&)>;

/// Vertices not on ∂M, ascending id.
std::vector<Vertex> interior_vertices(const Complex& m);

/// Checks conditions (1)-(3) for `order` on the homology manifold M. The
/// complexes of condition (3) must be empty or homology manifolds of
/// dimension dim M - 1 that are C-decomposable in turn, under `nested`
/// (default: all their interior vertices). Dimension 0 holds by default.
/// Throws PreconditionError for a non-manifold M, a repeated vertex or a
/// vertex that is not interior.
COrderReport verify_C_order(const Complex& m, const std::vector<Vertex>& order, const NestedOrder& nested = {});

nlohmann::json to_json(const COrderReport& report);

// ---- edge contraction

struct EdgeReport {
  Face edge;
  bool link_condition = false;
  std::optional<Face> violation;
  /// Only computed when the link condition holds.
  std::optional<bool> homology_preserved;
  std::vector<Count> f_after;
};

/// Every edge with its link-condition verdict, in lexicographic order.
std::vector<EdgeReport> contractible_edges(const Complex& delta);

nlohmann::json to_json(const EdgeReport& report, const Complex& delta);

struct EnvelopeStep {
  Face edge;
  bool contracted = false;
  std::size_t dim_e = 0;
  std::size_t dim_x = 0;
  bool contains = false;
  bool ok = false;
  std::string detail;
};

struct EnvelopeReport {
  bool ok = false;
  int degree = 0;
  /// Entry 0 is the input pair, entry i the pair after edges[i-1].
  std::vector<EnvelopeStep> steps;
  std::string detail;
};

/// Verifies a supplied contraction sequence on an envelope pair X ⊆ E: before
/// and after each contraction, X' ⊆ E' and dim A^d(E') = dim A^d(X'), both
/// taken modulo the same generic forms in R^{dim E + 1} (the smallest
/// dimension over options.trials samples). Stops early once dim X' < d - 1.
EnvelopeReport verify_envelope_contractions(const Complex& e, const Complex& x, const std::vector<Face>& edges,
                                            int degree, const CheckOptions& options = {});

}  // namespace facering
