#pragma once

#include <string>
#include <vector>

#include "facering/simplicial/complex.hpp"

namespace facering {

/// A monomial as the sorted multiset of its variables: x1^2 x3 is {1, 1, 3}.
using Monomial = std::vector<Vertex>;
using MonomialHash = FaceHash;

inline int degree(const Monomial& m) { return static_cast<int>(m.size()); }
Face support(const Monomial& m);
Monomial multiply(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, Vertex v);

/// Graded reverse lexicographic order with x_0 > x_1 > ... (vertex id order).
/// Only meaningful for monomials of equal degree.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Degree-k monomials supported on a face of Δ that is not a face of Γ,
/// sorted from grevlex-largest to grevlex-smallest.
std::vector<Monomial> monomial_basis(const RelativePair& pair, int k);

/// "x1^2*x3" using the complex's labels; "1" for the unit.
std::string monomial_to_string(const Complex& delta, const Monomial& m);

}  // namespace facering
