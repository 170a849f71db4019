#include "hamgrid/sampler.hpp"

#include <deque>
#include <map>
#include <mutex>

#include "hamgrid/errors.hpp"
#include "hamgrid/grid_count.hpp"

namespace hamgrid {

CompletionTable::CompletionTable(int m, int n) : m_(m), n_(n) {
  if (m < 2 || n < 2) throw DomainError("grid dimensions must be at least 2");
  if (m - 1 > kMaxAutomatonWidth) {
    throw ResourceError("grid height m=" + std::to_string(m) + " exceeds the supported maximum " +
                        std::to_string(kMaxAutomatonWidth + 1));
  }
  automaton_ = &automaton_for(m - 1);
  const SSAutomaton& a = *automaton_;
  const std::size_t S = a.state_count(), end = a.end_vertex();
  const int L = n - 1;
  table_.assign(static_cast<std::size_t>(L), std::vector<Integer>(S));
  for (std::size_t v = 1; v <= S; ++v) table_[0][v - 1] = a.ender(v) ? 1 : 0;
  for (int k = 1; k < L; ++k) {
    auto& row = table_[static_cast<std::size_t>(k)];
    const auto& prev = table_[static_cast<std::size_t>(k - 1)];
    for (std::size_t v = 1; v <= S; ++v) {
      Integer& acc = row[v - 1];
      for (std::size_t t : a.successors(v)) {
        if (t != end) mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), prev[t - 1].get_mpz_t());
      }
      bytes_ += sizeof(Integer) + mpz_size(acc.get_mpz_t()) * sizeof(mp_limb_t);
    }
    if (bytes_ > kMaxCompletionTableBytes) {
      throw ResourceError("completion table for " + std::to_string(m) + "x" + std::to_string(n) +
                          " exceeds the memory guard");
    }
  }
  for (std::size_t v = 1; v <= S; ++v) {
    if (a.starter(v)) total_ += table_[static_cast<std::size_t>(L - 1)][v - 1];
  }
}

const Integer& CompletionTable::completions(std::size_t vertex, int k) const {
  if (k < 0 || k >= length() || vertex < 1 || vertex > automaton_->state_count()) {
    throw DomainError("completion table index out of range");
  }
  return table_[static_cast<std::size_t>(k)][vertex - 1];
}

std::shared_ptr<const CompletionTable> completion_table(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CompletionTable>> cache;
  static std::deque<std::pair<int, int>> order;
  constexpr std::size_t budget = std::size_t(256) << 20;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const CompletionTable>(m, n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(m, n), table);
  if (!inserted) return it->second;
  order.push_back({m, n});
  std::size_t used = 0;
  for (const auto& [key, t] : cache) used += t->bytes();
  while (used > budget && order.size() > 1) {
    auto victim = cache.find(order.front());
    used -= victim->second->bytes();
    cache.erase(victim);
    order.pop_front();
  }
  return table;
}

Integer uniform_below(const Integer& bound, std::mt19937_64& rng) {
  if (sgn(bound) <= 0) throw DomainError("uniform_below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    Integer x = 0;
    for (std::size_t i = 0; i < words; ++i) {
      const std::uint64_t r = rng();
      x <<= 64;
      Integer part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof r, 0, 0, &r);
      x += part;
    }
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    if (x < bound) return x;
  }
}

Sampler::Sampler(int m, int n, std::uint64_t seed) : table_(completion_table(m, n)), rng_(seed) {
  if (sgn(table_->total()) == 0) {
    throw DomainError("empty ensemble: P_" + std::to_string(m) + " x P_" + std::to_string(n) +
                      " has no Hamiltonian cycle");
  }
}

Sample Sampler::next() {
  const CompletionTable& t = *table_;
  const SSAutomaton& a = t.automaton();
  const std::size_t end = a.end_vertex();
  const int L = t.length();
  Sample s;
  s.probability = 1;

  // Pick among the candidates with weights N(c, k).
  auto choose = [&](const std::vector<std::size_t>& candidates, int k, const Integer& total) {
    Integer r = uniform_below(total, rng_);
    for (std::size_t c : candidates) {
      if (c == end || c == 0) continue;
      const Integer& w = t.completions(c, k);
      if (r < w) {
        s.probability *= Rational(w) / Rational(total);
        return c;
      }
      r -= w;
    }
    throw InternalError("completion counts do not add up");
  };

  std::size_t cur = choose(a.successors(a.start_vertex()), L - 1, t.total());
  s.word.push_back(cur);
  for (int k = L - 1; k > 0; --k) {
    cur = choose(a.successors(cur), k - 1, t.completions(cur, k));
    s.word.push_back(cur);
  }
  std::vector<Column> columns;
  for (std::size_t v : s.word) columns.push_back(a.state(v).column);
  s.matrix = CellMatrix::from_columns(columns);
  return s;
}

std::vector<Sample> sample_cycles(const SampleConfig& cfg) {
  if (cfg.count < 0) throw DomainError("sample count must be non-negative");
  Sampler sampler(cfg.m, cfg.n, cfg.seed);
  const Rational uniform = Rational(1) / Rational(sampler.table().total());
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    Sample s = sampler.next();
    if (s.probability != uniform) throw InternalError("sample probability differs from 1/count");
    out.push_back(std::move(s));
  }
  return out;
}

CellMatrix sample_cycle(const SampleConfig& cfg) {
  SampleConfig one = cfg;
  one.count = 1;
  return sample_cycles(one).front().matrix;
}

}  // namespace hamgrid
