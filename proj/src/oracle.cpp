#include "hamgrid/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "hamgrid/errors.hpp"

namespace hamgrid {

namespace {

using Mask = std::uint64_t;

struct Search {
  int m, n, V;
  std::vector<Mask> nbr;
  std::vector<int> path;
  Mask visited = 0;
  int target = 0;
  std::vector<CycleEdges> found;

  Vertex vertex(int id) const { return {id / n, id % n}; }

  // Every unvisited vertex still needs two usable neighbours (one for the
  // closing target), and the unvisited part must hang together through the head.
  bool feasible(int head) const {
    const Mask open = ~visited & ((V == 64 ? ~Mask(0) : (Mask(1) << V) - 1));
    const Mask usable = open | (Mask(1) << head);
    for (Mask rest = open; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int need = v == target ? 1 : 2;
      if (std::popcount(nbr[static_cast<std::size_t>(v)] & usable) < need) return false;
    }
    Mask seen = Mask(1) << head, frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
      next &= usable & ~seen;
      seen |= next;
      frontier = next;
    }
    return (open & ~seen) == 0;
  }

  void extend(int head) {
    if (static_cast<int>(path.size()) == V) {
      if (head == target) record();
      return;
    }
    if (head == target) return;
    if (!feasible(head)) return;
    for (Mask c = nbr[static_cast<std::size_t>(head)] & ~visited; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      visited |= Mask(1) << v;
      path.push_back(v);
      extend(v);
      path.pop_back();
      visited &= ~(Mask(1) << v);
    }
  }

  void record() {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const int a = path[k], b = path[(k + 1) % path.size()];
      edges.push_back(make_edge(vertex(a), vertex(b)));
    }
    found.emplace_back(m, n, std::move(edges));
  }
};

}  // namespace

std::vector<CycleEdges> enumerate_cycles_bruteforce(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("grid dimensions must be at least 2");
  if (m * n > kMaxOracleVertices) {
    throw ResourceError("brute force refuses " + std::to_string(m) + "x" + std::to_string(n) +
                        " (more than " + std::to_string(kMaxOracleVertices) + " vertices)");
  }
  Search s{m, n, m * n, {}, {}, 0, 0, {}};
  s.nbr.assign(static_cast<std::size_t>(s.V), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      Mask& b = s.nbr[static_cast<std::size_t>(i * n + j)];
      if (i > 0) b |= Mask(1) << ((i - 1) * n + j);
      if (i + 1 < m) b |= Mask(1) << ((i + 1) * n + j);
      if (j > 0) b |= Mask(1) << (i * n + j - 1);
      if (j + 1 < n) b |= Mask(1) << (i * n + j + 1);
    }
  }
  // The corner has exactly the two neighbours (0,1) and (1,0); leaving by
  // (0,1) and returning by (1,0) fixes the orientation.
  s.target = n;
  s.path = {0, 1};
  s.visited = Mask(1) | Mask(2);
  s.extend(1);
  std::sort(s.found.begin(), s.found.end());
  return std::move(s.found);
}

namespace {

// Flood fill on a (rows+2) x (cols+2) padded grid.
int flood(const std::vector<std::vector<int>>& g, int value, int r0, int c0, std::vector<std::vector<bool>>& seen) {
  const int R = static_cast<int>(g.size()), C = static_cast<int>(g[0].size());
  std::vector<std::pair<int, int>> stack{{r0, c0}};
  seen[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] = true;
  int count = 0;
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    ++count;
    const int dr[] = {1, -1, 0, 0}, dc[] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      const int rr = r + dr[k], cc = c + dc[k];
      if (rr < 0 || rr >= R || cc < 0 || cc >= C) continue;
      auto ur = static_cast<std::size_t>(rr), uc = static_cast<std::size_t>(cc);
      if (seen[ur][uc] || g[ur][uc] != value) continue;
      seen[ur][uc] = true;
      stack.push_back({rr, cc});
    }
  }
  return count;
}

}  // namespace

bool validate_matrix_global(const CellMatrix& a) {
  const int R = a.rows() + 2, C = a.cols() + 2;
  std::vector<std::vector<int>> g(static_cast<std::size_t>(R), std::vector<int>(static_cast<std::size_t>(C), 0));
  int ones = 0, first_r = -1, first_c = -1;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (!a.at(r, c)) continue;
      g[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c + 1)] = 1;
      if (ones++ == 0) first_r = r + 1, first_c = c + 1;
    }
  }
  if (ones == 0) return false;
  const int zeros = R * C - ones;

  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(R), std::vector<bool>(static_cast<std::size_t>(C), false));
  if (flood(g, 1, first_r, first_c, seen) != ones) return false;
  if (flood(g, 0, 0, 0, seen) != zeros) return false;

  // Lattice vertex (i, j) sits at the corner shared by padded cells
  // (i, j), (i, j+1), (i+1, j), (i+1, j+1).
  for (int i = 0; i <= a.rows(); ++i) {
    for (int j = 0; j <= a.cols(); ++j) {
      auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      const int tl = g[ui][uj], tr = g[ui][uj + 1], bl = g[ui + 1][uj], br = g[ui + 1][uj + 1];
      const int sum = tl + tr + bl + br;
      if (sum == 0 || sum == 4) return false;
      if (sum == 2 && tl == br) return false;
    }
  }
  return true;
}

std::vector<CellMatrix> enumerate_valid_matrices(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
  if (rows * cols > 24) throw ResourceError("matrix enumeration limited to 24 cells");
  std::vector<CellMatrix> out;
  const std::uint32_t total = 1u << (rows * cols);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    CellMatrix a(rows, cols);
    for (int k = 0; k < rows * cols; ++k) a.set(k / cols, k % cols, (bits >> k) & 1u);
    if (validate_matrix_global(a)) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hamgrid
