#ifndef HAMGRID_SAMPLER_HPP
#define HAMGRID_SAMPLER_HPP

// Exactly uniform random Hamiltonian cycles by completion counts: each next
// column is chosen with probability proportional to the number of ways the
// word can still be finished.

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hamgrid/algebra.hpp"
#include "hamgrid/automaton.hpp"
#include "hamgrid/geometry.hpp"

namespace hamgrid {

class CompletionTable {
 public:
  CompletionTable(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  /// Word length n - 1.
  int length() const { return n_ - 1; }
  const SSAutomaton& automaton() const { return *automaton_; }

  /// Completions of k further letters after state vertex v (1..N), ending
  /// in an ender. N(v, 0) = 1 iff v is an ender.
  const Integer& completions(std::size_t vertex, int k) const;
  /// Number of accepted words of full length starting with starter v.
  const Integer& starter_total(std::size_t vertex) const { return completions(vertex, length() - 1); }
  /// Sum over starters; equals the number of Hamiltonian cycles.
  const Integer& total() const { return total_; }
  std::size_t bytes() const { return bytes_; }

 private:
  int m_, n_;
  const SSAutomaton* automaton_;
  // table_[k][v - 1]
  std::vector<std::vector<Integer>> table_;
  Integer total_;
  std::size_t bytes_ = 0;
};

/// Guard on the memory of one completion table.
inline constexpr std::size_t kMaxCompletionTableBytes = std::size_t(1) << 30;

/// Memoized table for (m, n); recently built tables are kept until their
/// combined size passes a budget.
std::shared_ptr<const CompletionTable> completion_table(int m, int n);

struct SampleConfig {
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int count = 1;
};

struct Sample {
  /// Automaton vertices of the word, first column first.
  std::vector<std::size_t> word;
  CellMatrix matrix;
  /// Product of the stepwise selection probabilities.
  Rational probability;
};

/// Uniform integer in [0, bound) by rejection from random bits.
Integer uniform_below(const Integer& bound, std::mt19937_64& rng);

class Sampler {
 public:
  Sampler(int m, int n, std::uint64_t seed);
  Sample next();
  const CompletionTable& table() const { return *table_; }

 private:
  std::shared_ptr<const CompletionTable> table_;
  std::mt19937_64 rng_;
};

/// cfg.count samples from one generator seeded with cfg.seed. Each sample's
/// probability is checked to equal 1 / (number of cycles); a mismatch throws
/// InternalError. Throws DomainError("empty ensemble") up front if the grid
/// has no Hamiltonian cycle.
std::vector<Sample> sample_cycles(const SampleConfig& cfg);
CellMatrix sample_cycle(const SampleConfig& cfg);

}  // namespace hamgrid

#endif  // HAMGRID_SAMPLER_HPP
