#pragma once

#include <cstddef>
#include <vector>

#include "facering/field/field.hpp"
#include "facering/simplicial/complex.hpp"

namespace facering {

/// Reduced Betti numbers in degrees 0..dim Δ, from boundary-matrix ranks.
/// Empty for the void complex and for {∅}.
std::vector<std::size_t> reduced_homology(const Complex& delta, FieldMode field = FieldMode::Prime);

/// Reduced Betti numbers in degrees -1..dim Δ (entry i+1 is degree i), so
/// {∅} reports (1).
std::vector<std::size_t> reduced_betti(const Complex& delta, FieldMode field = FieldMode::Prime);

/// Euler characteristic Σ_{i>=0} (-1)^i f_i.
long euler_characteristic(const Complex& delta);

// Topology gates. "Homology" sphere/ball here means: pure, pseudomanifold
// ridge counts, and the reduced homology of a sphere/ball (with a homology
// sphere as boundary for balls). PL type is not checked.

bool is_homology_sphere(const Complex& delta);
bool is_homology_ball(const Complex& delta);
/// Pure, and every vertex link is a homology sphere or ball of dimension dim-1.
bool is_homology_manifold(const Complex& delta);

}  // namespace facering
