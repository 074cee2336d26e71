#include "facering/artinian/monomial.hpp"

#include <algorithm>

namespace facering {

Face support(const Monomial& m) {
  Face f = m;
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Monomial multiply(const Monomial& a, Vertex v) {
  Monomial out = a;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  // Walk from the largest variable index down; at the first variable whose
  // exponents differ, the monomial with the smaller exponent is greater.
  auto i = a.rbegin(), j = b.rbegin();
  while (i != a.rend() && j != b.rend()) {
    if (*i == *j) {
      ++i;
      ++j;
      continue;
    }
    return *i < *j;
  }
  return false;
}

namespace {

void compositions(const Face& face, std::size_t pos, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == face.size()) {
    cur.insert(cur.end(), static_cast<std::size_t>(left), face[pos]);
    out.push_back(cur);
    cur.resize(cur.size() - static_cast<std::size_t>(left));
    return;
  }
  const int rest = static_cast<int>(face.size() - pos - 1);
  for (int e = 1; e <= left - rest; ++e) {
    cur.insert(cur.end(), static_cast<std::size_t>(e), face[pos]);
    compositions(face, pos + 1, left - e, cur, out);
    cur.resize(cur.size() - static_cast<std::size_t>(e));
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const RelativePair& pair, int k) {
  std::vector<Monomial> out;
  const Complex& delta = pair.total();
  const Complex& gamma = pair.sub();
  if (k < 0 || delta.is_void()) return out;
  if (k == 0) {
    if (gamma.is_void()) out.push_back({});
    return out;
  }
  for (int dim = 0; dim <= delta.dim() && dim < k; ++dim) {
    for (const auto& face : delta.faces(dim)) {
      if (gamma.contains(face)) continue;
      Monomial cur;
      compositions(face, 0, k, cur, out);
    }
  }
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

std::string monomial_to_string(const Complex& delta, const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += '*';
    out += "x" + delta.labels()[m[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace facering
