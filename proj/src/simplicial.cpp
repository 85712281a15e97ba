#include "tamcalc/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tamcalc {

namespace {

void push_unique(std::set<std::vector<int>>& set, std::vector<int> simplex) {
  std::sort(simplex.begin(), simplex.end());
  simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
  set.insert(std::move(simplex));
}

SimplicialComplex from_set(int n_vertices, const std::set<std::vector<int>>& set) {
  SimplicialComplex k;
  k.n_vertices = n_vertices;
  k.simplices.assign(set.begin(), set.end());
  std::sort(k.simplices.begin(), k.simplices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  k.validate();
  return k;
}

}  // namespace

SimplicialComplex SimplicialComplex::circle(int k) {
  if (k < 3) throw std::invalid_argument("circle needs at least 3 vertices");
  std::set<std::vector<int>> set;
  for (int i = 0; i < k; ++i) {
    push_unique(set, {i});
    push_unique(set, {i, (i + 1) % k});
  }
  return from_set(k, set);
}

SimplicialComplex SimplicialComplex::torus_grid(int m, int n) {
  if (m < 3 || n < 3) throw std::invalid_argument("torus grid needs m, n >= 3");
  auto id = [n](int i, int j) { return i * n + j; };
  std::set<std::vector<int>> set;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int a = id(i, j);
      int r = id(i, (j + 1) % n);
      int d = id((i + 1) % m, j);
      int dr = id((i + 1) % m, (j + 1) % n);
      push_unique(set, {a});
      push_unique(set, {a, r});
      push_unique(set, {a, d});
      push_unique(set, {a, dr});
      push_unique(set, {a, d, dr});
      push_unique(set, {a, r, dr});
    }
  return from_set(m * n, set);
}

SimplicialComplex SimplicialComplex::sphere3_join(int p, int q) {
  if (p < 3 || q < 3) throw std::invalid_argument("join of cycles needs p, q >= 3");
  std::set<std::vector<int>> set;
  std::vector<std::vector<int>> left, right;
  for (int i = 0; i < p; ++i) {
    left.push_back({i});
    left.push_back({i, (i + 1) % p});
  }
  for (int i = 0; i < q; ++i) {
    right.push_back({p + i});
    right.push_back({p + i, p + (i + 1) % q});
  }
  for (const auto& s : left) push_unique(set, s);
  for (const auto& s : right) push_unique(set, s);
  for (const auto& s : left)
    for (const auto& t : right) {
      std::vector<int> joined = s;
      joined.insert(joined.end(), t.begin(), t.end());
      push_unique(set, joined);
    }
  return from_set(p + q, set);
}

int SimplicialComplex::dimension() const {
  std::size_t d = 1;
  for (const auto& s : simplices) d = std::max(d, s.size());
  return static_cast<int>(d) - 1;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

void SimplicialComplex::validate() const {
  std::set<std::vector<int>> present(simplices.begin(), simplices.end());
  if (present.size() != simplices.size()) throw std::logic_error("duplicate simplices");
  for (const auto& s : simplices) {
    if (s.empty() || s.size() > 4) throw std::logic_error("simplex dimension out of range");
    if (!std::is_sorted(s.begin(), s.end())) throw std::logic_error("unsorted simplex");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::logic_error("repeated vertex in a simplex");
    for (int v : s)
      if (v < 0 || v >= n_vertices) throw std::logic_error("vertex out of range");
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        if (!present.count(face)) throw std::logic_error("complex is not closed under faces");
      }
  }
}

}  // namespace tamcalc
