#include "platkit/plat.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "platkit/errors.hpp"

namespace platkit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
  const int n = static_cast<int>(partner_.size());
  if (n % 2 != 0) throw DomainError("pairing on an odd number of points");
  for (int i = 1; i <= n; ++i) {
    int p = partner_[i - 1];
    if (p < 1 || p > n || p == i || partner_[p - 1] != i) {
      throw DomainError("pairing is not a fixed-point-free involution");
    }
  }
}

Pairing Pairing::standard(int m) {
  if (m < 0) throw DomainError("negative pairing size");
  std::vector<int> partner(2 * m);
  for (int k = 0; k < m; ++k) {
    partner[2 * k] = 2 * k + 2;
    partner[2 * k + 1] = 2 * k + 1;
  }
  return Pairing(std::move(partner));
}

bool Pairing::is_noncrossing() const {
  const int n = size();
  for (int a = 1; a <= n; ++a) {
    int b = (*this)(a);
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c) {
      int d = (*this)(c);
      if (d < a || d > b) return false;
    }
  }
  return true;
}

PlatDiagram plat_close(const BraidWord& w) {
  if (w.strands() % 2 != 0) {
    throw DomainError("plat closure needs an even strand count, got " + std::to_string(w.strands()));
  }
  const int m = w.strands() / 2;
  return PlatDiagram{w, Pairing::standard(m), Pairing::standard(m)};
}

int component_count(const PlatDiagram& d) {
  const int n = d.word.strands();
  if (d.bottom.size() != n || d.top.size() != n) throw DomainError("pairing size mismatch");
  const Permutation pi = permutation_of(d.word);
  const Permutation pi_inv = pi.inverse();
  UnionFind uf(n);
  for (int p = 1; p <= n; ++p) {
    uf.unite(p - 1, d.bottom(p) - 1);
    uf.unite(p - 1, pi_inv(d.top(pi(p))) - 1);
  }
  int orbits = 0;
  for (int p = 0; p < n; ++p) orbits += uf.find(p) == p;
  return orbits;
}

std::string to_string(TrivialityVerdict v) {
  return v == TrivialityVerdict::NotTrivial ? "NotTrivial" : "ConsistentWithTrivial";
}

TrivialityVerdict trivial_link_check(const PlatDiagram& d, const BracketOptions& options) {
  const LaurentPoly bracket = kauffman_bracket(d, options);
  const int c = component_count(d);
  const LaurentPoly expected = LaurentPoly::delta().pow(c - 1);
  return unit_ratio(bracket, expected) ? TrivialityVerdict::ConsistentWithTrivial
                                       : TrivialityVerdict::NotTrivial;
}

std::string export_pd(const PlatDiagram& d) {
  const int n = d.word.strands();
  const int crossings = d.crossings();
  const auto& letters = d.word.letters();
  auto seg = [n](int level, int pos) { return level * n + (pos - 1); };

  // Segments away from a crossing continue straight up.
  UnionFind uf((crossings + 1) * n);
  for (int k = 0; k < crossings; ++k) {
    const int i = std::abs(letters[k]);
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) uf.unite(seg(k, j), seg(k + 1, j));
    }
  }

  std::vector<int> label((crossings + 1) * n, 0);
  int next_label = 1;
  auto touch = [&](int level, int pos) {
    int root = uf.find(seg(level, pos));
    if (label[root] == 0) label[root] = next_label++;
  };

  std::vector<bool> started(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (started[start]) continue;
    int level = 0;
    int pos = start;
    bool up = true;
    do {
      if (level == 0 && up) started[pos] = true;
      touch(level, pos);
      if (up) {
        if (level == crossings) {
          pos = d.top(pos);
          up = false;
        } else {
          const int i = std::abs(letters[level]);
          if (pos == i) {
            pos = i + 1;
          } else if (pos == i + 1) {
            pos = i;
          }
          ++level;
        }
      } else {
        if (level == 0) {
          pos = d.bottom(pos);
          up = true;
        } else {
          const int i = std::abs(letters[level - 1]);
          if (pos == i) {
            pos = i + 1;
          } else if (pos == i + 1) {
            pos = i;
          }
          --level;
        }
      }
    } while (!(level == 0 && pos == start && up));
  }

  auto edge = [&](int level, int pos) { return label[uf.find(seg(level, pos))]; };
  std::ostringstream out;
  for (int k = 0; k < crossings; ++k) {
    const int i = std::abs(letters[k]);
    const int ll = edge(k, i), lr = edge(k, i + 1), ul = edge(k + 1, i), ur = edge(k + 1, i + 1);
    if (letters[k] > 0) {
      out << "X " << lr << ' ' << ur << ' ' << ul << ' ' << ll << '\n';
    } else {
      out << "X " << ll << ' ' << lr << ' ' << ur << ' ' << ul << '\n';
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (d.bottom(j) > j) out << "CUP " << edge(0, j) << ' ' << edge(0, d.bottom(j)) << '\n';
  }
  for (int j = 1; j <= n; ++j) {
    if (d.top(j) > j) out << "CAP " << edge(crossings, j) << ' ' << edge(crossings, d.top(j)) << '\n';
  }
  return out.str();
}

}  // namespace platkit
