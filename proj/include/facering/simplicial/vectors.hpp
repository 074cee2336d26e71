#pragma once

#include <cstdint>
#include <vector>

#include "facering/simplicial/complex.hpp"

namespace facering {

using Count = std::int64_t;

/// f_{-1}, f_0, ..., f_{dim}. Empty for the void complex.
std::vector<Count> f_vector(const Complex& delta);

/// h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, k = 0..d. Entries of f past
/// its length count as zero; throws std::invalid_argument if f is longer than d+1.
std::vector<Count> h_vector(const std::vector<Count>& f, int d);

/// g_0 = h_0, g_k = h_k - h_{k-1} for 1 <= k <= floor((len(h)-1)/2).
std::vector<Count> g_vector(const std::vector<Count>& h);

/// Macaulay's i-binomial representation bound a^{<i>} for a >= 0, i >= 1.
Count macaulay_bound(Count a, int i);

/// g_0 = 1, all entries nonnegative, and g_{i+1} <= g_i^{<i>} for i >= 1.
bool is_m_sequence(const std::vector<Count>& g);

/// h palindromic.
bool dehn_sommerville_check(const std::vector<Count>& h);

Count binomial(Count n, Count k);

}  // namespace facering
