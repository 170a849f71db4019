#include "hamgrid/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hamgrid/errors.hpp"
#include "hamgrid/serialize.hpp"

namespace hamgrid {

// ---------------------------------------------------------------- Column

Column::Column(int width, std::uint32_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > kMaxWidth) {
    throw DomainError("column width must be in 1.." + std::to_string(kMaxWidth));
  }
  if (width < 32 && (bits >> width) != 0) throw DomainError("column bits exceed its width");
}

Column Column::parse(const std::string& text) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= 1u << i;
    } else if (text[i] != '0') {
      throw DomainError("column string must consist of 0/1: " + text);
    }
  }
  return Column(static_cast<int>(text.size()), bits);
}

int Column::ones() const { return std::popcount(bits_); }

std::string Column::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int r = 1; r <= width_; ++r) {
    if (at(r)) s[static_cast<std::size_t>(r - 1)] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const Column& a, const Column& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (int r = 1; r <= a.width_; ++r) {
    if (a.at(r) != b.at(r)) return a.at(r) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::vector<RowInterval> runs(const Column& c) {
  std::vector<RowInterval> out;
  int r = 1;
  while (r <= c.width()) {
    if (!c.at(r)) {
      ++r;
      continue;
    }
    int first = r;
    while (r <= c.width() && c.at(r)) ++r;
    out.push_back({first, r - 1});
  }
  return out;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw DomainError("partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

int Partition::block_of(int row) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), row)) return static_cast<int>(i);
  }
  return -1;
}

bool Partition::is_non_crossing() const {
  // Blocks x, y cross iff some pair a < b < c < d has a, c in x and b, d in y.
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (i == j) continue;
      const auto& x = blocks_[i];
      const auto& y = blocks_[j];
      for (std::size_t p = 0; p + 1 < x.size(); ++p) {
        // y has an element strictly inside (x[p], x[p+1]) and one outside.
        bool inside = false, outside = false;
        for (int v : y) {
          if (v > x[p] && v < x[p + 1]) {
            inside = true;
          } else {
            outside = true;
          }
        }
        if (inside && outside) return false;
      }
    }
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ",";
    os << "{";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ",";
      os << blocks_[i][j];
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  std::vector<int> ma, mb;
  for (const auto& x : a.blocks_) ma.push_back(x.front());
  for (const auto& x : b.blocks_) mb.push_back(x.front());
  if (auto c = ma <=> mb; c != 0) return c;
  return a.blocks_ <=> b.blocks_;
}

// ---------------------------------------------------------------- SSState

std::string SSState::to_string() const {
  return "[" + column.to_string() + "," + partition.to_string() + "]";
}

SSState SSState::parse(const std::string& text) {
  // [bits,{{a,b},{c}}]
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t.push_back(ch);
  }
  if (t.size() < 5 || t.front() != '[' || t.back() != ']') {
    throw DomainError("malformed state: " + text);
  }
  auto comma = t.find(',');
  if (comma == std::string::npos) throw DomainError("malformed state: " + text);
  Column col = Column::parse(t.substr(1, comma - 1));
  std::string rest = t.substr(comma + 1, t.size() - comma - 2);
  if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') {
    throw DomainError("malformed partition: " + text);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  std::string num;
  int depth = 0;
  for (char ch : rest) {
    if (ch == '{') {
      ++depth;
      if (depth == 2) cur.clear();
    } else if (ch == '}') {
      if (depth == 2) {
        if (!num.empty()) cur.push_back(std::stoi(num));
        num.clear();
        blocks.push_back(cur);
      }
      --depth;
    } else if (ch == ',') {
      if (depth == 2 && !num.empty()) {
        cur.push_back(std::stoi(num));
        num.clear();
      }
    } else if (ch >= '0' && ch <= '9') {
      num.push_back(ch);
    } else {
      throw DomainError("malformed partition: " + text);
    }
  }
  SSState s{col, Partition(std::move(blocks))};
  for (const auto& b : s.partition.blocks()) {
    for (int r : b) {
      if (r < 1 || r > col.width() || !col.at(r)) {
        throw DomainError("partition row outside the column support: " + text);
      }
    }
  }
  return s;
}

std::strong_ordering operator<=>(const SSState& a, const SSState& b) {
  if (auto c = a.column <=> b.column; c != 0) return c;
  return a.partition <=> b.partition;
}

// ---------------------------------------------------------------- rules

namespace {

Partition run_partition(const Column& c) {
  std::vector<std::vector<int>> blocks;
  for (const auto& run : runs(c)) {
    std::vector<int> b(static_cast<std::size_t>(run.last - run.first + 1));
    std::iota(b.begin(), b.end(), run.first);
    blocks.push_back(std::move(b));
  }
  return Partition(std::move(blocks));
}

// Column shape shared by starters and enders: it must cover every vertex on
// the side facing an all-zero boundary column.
bool boundary_compatible(const Column& c) {
  const int M = c.width();
  if (!c.at(1) || !c.at(M)) return false;
  for (int r = 1; r < M; ++r) {
    if (!c.at(r) && !c.at(r + 1)) return false;
  }
  return true;
}

}  // namespace

std::vector<Pocket> pockets(const SSState& s) {
  const Column& c = s.column;
  const int M = c.width();
  struct Arc {
    int lo, hi;
  };
  std::vector<Arc> arcs;
  for (const auto& b : s.partition.blocks()) {
    for (std::size_t i = 0; i + 1 < b.size(); ++i) arcs.push_back({b[i], b[i + 1]});
  }
  std::vector<Pocket> out;
  std::map<std::pair<int, int>, std::size_t> by_arc;
  int first_one = 0, last_one = 0;
  for (int r = 1; r <= M; ++r) {
    if (c.at(r)) {
      if (!first_one) first_one = r;
      last_one = r;
    }
  }
  if (!first_one) return out;
  int r = first_one;
  while (r <= last_one) {
    if (c.at(r)) {
      ++r;
      continue;
    }
    int lo = r;
    while (!c.at(r)) ++r;
    int hi = r - 1;
    // innermost arc spanning the flanks lo-1 and hi+1
    const Arc* best = nullptr;
    for (const auto& a : arcs) {
      if (a.lo <= lo - 1 && a.hi >= hi + 1) {
        if (!best || a.hi - a.lo < best->hi - best->lo) best = &a;
      }
    }
    std::vector<int> rows;
    for (int g = lo; g <= hi; ++g) rows.push_back(g);
    if (!best) {
      out.push_back({std::move(rows), true});
      continue;
    }
    auto key = std::make_pair(best->lo, best->hi);
    auto it = by_arc.find(key);
    if (it == by_arc.end()) {
      by_arc.emplace(key, out.size());
      out.push_back({std::move(rows), false});
    } else {
      auto& dst = out[it->second].rows;
      dst.insert(dst.end(), rows.begin(), rows.end());
    }
  }
  return out;
}

std::vector<SSState> starters(int width) {
  if (width < 1) throw DomainError("width must be at least 1");
  std::vector<SSState> out;
  for (std::uint32_t bits = 0; bits < (1u << width); ++bits) {
    Column c(width, bits);
    if (boundary_compatible(c)) out.push_back({c, run_partition(c)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_starter(const SSState& s) {
  return boundary_compatible(s.column) && s.partition == run_partition(s.column);
}

bool is_ender(const SSState& s) {
  return s.partition.size() == 1 && boundary_compatible(s.column);
}

std::optional<SSState> transition(const SSState& s, const Column& w) {
  const Column& u = s.column;
  const int M = u.width();
  if (w.width() != M) throw DomainError("transition: column widths differ");
  auto U = [&](int r) { return r >= 1 && r <= M && u.at(r); };
  auto W = [&](int r) { return r >= 1 && r <= M && w.at(r); };

  // Every lattice vertex between the two columns must sit on the cycle, and
  // the cycle may not touch itself at a vertex.
  if (!U(1) && !W(1)) return std::nullopt;
  if (!U(M) && !W(M)) return std::nullopt;
  for (int i = 1; i < M; ++i) {
    const int a = U(i), b = U(i + 1), c = W(i), d = W(i + 1);
    const int sum = a + b + c + d;
    if (sum == 0 || sum == 4) return std::nullopt;
    if (a == 1 && b == 0 && c == 0 && d == 1) return std::nullopt;
    if (a == 0 && b == 1 && c == 1 && d == 0) return std::nullopt;
  }
  // Every component must continue into the new column.
  for (const auto& block : s.partition.blocks()) {
    bool alive = false;
    for (int r : block) alive = alive || W(r);
    if (!alive) return std::nullopt;
  }
  // An enclosed zero region may not be closed off.
  for (const auto& p : pockets(s)) {
    if (p.outside_connected) continue;
    bool open = false;
    for (int r : p.rows) open = open || !W(r);
    if (!open) return std::nullopt;
  }

  // Union the runs of w through the blocks of s.
  auto wruns = runs(w);
  std::vector<std::size_t> parent(wruns.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> run_of_row(static_cast<std::size_t>(M) + 1, -1);
  for (std::size_t k = 0; k < wruns.size(); ++k) {
    for (int r = wruns[k].first; r <= wruns[k].last; ++r) run_of_row[static_cast<std::size_t>(r)] = static_cast<int>(k);
  }
  for (const auto& block : s.partition.blocks()) {
    int anchor = -1;
    for (int r : block) {
      int k = run_of_row[static_cast<std::size_t>(r)];
      if (k < 0) continue;
      if (anchor < 0) {
        anchor = k;
      } else {
        parent[find(static_cast<std::size_t>(k))] = find(static_cast<std::size_t>(anchor));
      }
    }
  }
  std::map<std::size_t, std::vector<int>> groups;
  for (std::size_t k = 0; k < wruns.size(); ++k) {
    auto& g = groups[find(k)];
    for (int r = wruns[k].first; r <= wruns[k].last; ++r) g.push_back(r);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [root, rows] : groups) blocks.push_back(std::move(rows));
  return SSState{w, Partition(std::move(blocks))};
}

std::vector<SSState> followers(const SSState& s) {
  const int M = s.column.width();
  std::vector<SSState> out;
  for (std::uint32_t bits = 1; bits < (1u << M); ++bits) {
    if (auto t = transition(s, Column(M, bits))) out.push_back(std::move(*t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- automaton

SSAutomaton::SSAutomaton(int width, std::vector<SSState> states,
                         std::vector<std::vector<std::size_t>> succ)
    : width_(width), states_(std::move(states)), succ_(std::move(succ)) {
  if (succ_.size() != states_.size() + 2) throw DomainError("automaton: successor table size");
  for (const auto& list : succ_) {
    for (std::size_t v : list) {
      if (v == 0 || v > states_.size() + 1) throw DomainError("automaton: successor out of range");
    }
  }
}

bool SSAutomaton::starter(std::size_t vertex) const {
  const auto& s = succ_.front();
  return std::binary_search(s.begin(), s.end(), vertex);
}

bool SSAutomaton::ender(std::size_t vertex) const {
  if (vertex == 0 || vertex > states_.size()) return false;
  const auto& s = succ_[vertex];
  return std::binary_search(s.begin(), s.end(), end_vertex());
}

std::optional<std::size_t> SSAutomaton::vertex_of(const SSState& s) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin()) + 1;
}

std::size_t SSAutomaton::edge_count() const {
  std::size_t e = 0;
  for (const auto& s : succ_) e += s.size();
  return e;
}

SSAutomaton build_automaton(int width) {
  if (width < 1 || width > Column::kMaxWidth) {
    throw DomainError("automaton width must be in 1.." + std::to_string(Column::kMaxWidth));
  }
  std::map<SSState, std::size_t> index;
  std::vector<SSState> found;
  std::vector<std::vector<std::size_t>> raw_succ;
  std::deque<std::size_t> queue;
  auto intern = [&](const SSState& s) {
    auto [it, inserted] = index.emplace(s, found.size());
    if (inserted) {
      found.push_back(s);
      raw_succ.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  std::vector<std::size_t> start_ids;
  for (const auto& s : starters(width)) start_ids.push_back(intern(s));
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    SSState s = found[id];
    for (std::uint32_t bits = 1; bits < (1u << width); ++bits) {
      if (auto t = transition(s, Column(width, bits))) {
        std::size_t tid = intern(*t);
        raw_succ[id].push_back(tid);
      }
    }
  }

  // Co-reachability to an ender.
  const std::size_t n = found.size();
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : raw_succ[i]) pred[j].push_back(i);
  }
  std::vector<bool> live(n, false);
  std::deque<std::size_t> back;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_ender(found[i])) {
      live[i] = true;
      back.push_back(i);
    }
  }
  while (!back.empty()) {
    std::size_t j = back.front();
    back.pop_front();
    for (std::size_t i : pred[j]) {
      if (!live[i]) {
        live[i] = true;
        back.push_back(i);
      }
    }
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (live[i]) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<std::size_t> vertex(n, 0);
  std::vector<SSState> states;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    vertex[kept[k]] = k + 1;
    states.push_back(found[kept[k]]);
  }
  const std::size_t end = states.size() + 1;
  std::vector<std::vector<std::size_t>> succ(states.size() + 2);
  for (std::size_t i : start_ids) {
    if (live[i]) succ[0].push_back(vertex[i]);
  }
  for (std::size_t i : kept) {
    auto& list = succ[vertex[i]];
    for (std::size_t j : raw_succ[i]) {
      if (live[j]) list.push_back(vertex[j]);
    }
    if (is_ender(found[i])) list.push_back(end);
  }
  for (auto& list : succ) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return SSAutomaton(width, std::move(states), std::move(succ));
}

const SSAutomaton& automaton_for(int width, const std::string& cache_dir) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SSAutomaton>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(width);
  if (it != memo.end()) return *it->second;
  std::optional<SSAutomaton> a;
  if (!cache_dir.empty()) a = load_automaton_cache(cache_dir, width);
  if (!a) {
    a = build_automaton(width);
    if (!cache_dir.empty()) store_automaton_cache(cache_dir, *a);
  }
  auto [pos, _] = memo.emplace(width, std::make_unique<SSAutomaton>(std::move(*a)));
  return *pos->second;
}

}  // namespace hamgrid
