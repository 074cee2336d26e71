#include "facering/simplicial/vectors.hpp"

#include <algorithm>
#include <stdexcept>

namespace facering {

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Count> f_vector(const Complex& delta) {
  std::vector<Count> f;
  if (delta.is_void()) return f;
  for (int k = -1; k <= delta.dim(); ++k) f.push_back(static_cast<Count>(delta.faces(k).size()));
  return f;
}

std::vector<Count> h_vector(const std::vector<Count>& f, int d) {
  if (d < 0 || f.size() > static_cast<std::size_t>(d) + 1) {
    throw std::invalid_argument("h_vector: f has " + std::to_string(f.size()) + " entries, too many for d = " +
                                std::to_string(d));
  }
  std::vector<Count> h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Count s = 0;
    for (int i = 0; i <= k; ++i) {
      const Count fi = static_cast<std::size_t>(i) < f.size() ? f[static_cast<std::size_t>(i)] : 0;
      const Count term = binomial(d - i, k - i) * fi;
      s += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = s;
  }
  return h;
}

std::vector<Count> g_vector(const std::vector<Count>& h) {
  if (h.empty()) return {};
  std::vector<Count> g{h[0]};
  const std::size_t half = (h.size() - 1) / 2;
  for (std::size_t k = 1; k <= half; ++k) g.push_back(h[k] - h[k - 1]);
  return g;
}

Count macaulay_bound(Count a, int i) {
  if (a <= 0) return 0;
  // a = C(n_i, i) + C(n_{i-1}, i-1) + ... with n_i > n_{i-1} > ... >= j >= 1.
  Count result = 0;
  for (int j = i; j >= 1 && a > 0; --j) {
    Count n = j;
    while (binomial(n + 1, j) <= a) ++n;
    a -= binomial(n, j);
    result += binomial(n + 1, j + 1);
  }
  return result;
}

bool is_m_sequence(const std::vector<Count>& g) {
  if (g.empty() || g[0] != 1) return false;
  for (Count x : g) {
    if (x < 0) return false;
  }
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    if (g[i + 1] > macaulay_bound(g[i], static_cast<int>(i))) return false;
  }
  return true;
}

bool dehn_sommerville_check(const std::vector<Count>& h) {
  return std::equal(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(h.size() / 2), h.rbegin());
}

}  // namespace facering
