#include "doctest.h"

#include <cmath>
#include <map>

#include "hamgrid/errors.hpp"
#include "hamgrid/grid_count.hpp"
#include "hamgrid/oracle.hpp"
#include "hamgrid/sampler.hpp"
#include "hamgrid/statistics.hpp"

using namespace hamgrid;

TEST_CASE("completion table invariants") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 10; ++n) {
      CompletionTable t(m, n);
      CHECK(t.total() == count_cycles(m, n));
      const SSAutomaton& a = t.automaton();
      for (std::size_t v = 1; v <= a.state_count(); ++v) {
        CHECK(t.completions(v, 0) == (a.ender(v) ? 1 : 0));
        for (int k = 1; k < t.length(); ++k) {
          Integer sum = 0;
          for (std::size_t s : a.successors(v)) {
            if (s != a.end_vertex()) sum += t.completions(s, k - 1);
          }
          CHECK(t.completions(v, k) == sum);
        }
      }
    }
  }
  CHECK(completion_table(10, 10)->total() == Integer("467260456608"));
  CHECK_THROWS_AS(CompletionTable(4, 4).completions(0, 0), DomainError);
}

TEST_CASE("uniform_below is unbiased on a small range") {
  std::mt19937_64 rng(7);
  std::map<long, int> hist;
  for (int i = 0; i < 30000; ++i) hist[uniform_below(6, rng).get_si()]++;
  REQUIRE(hist.size() == 6);
  for (const auto& [k, c] : hist) {
    CHECK(k >= 0);
    CHECK(k < 6);
    CHECK(std::abs(c - 5000) < 300);
  }
  const Integer big("123456789012345678901234567890");
  for (int i = 0; i < 200; ++i) {
    Integer x = uniform_below(big, rng);
    CHECK(x >= 0);
    CHECK(x < big);
  }
  CHECK_THROWS_AS(uniform_below(0, rng), DomainError);
}

TEST_CASE("P_4 x P_4 samples cover the six cycles evenly") {
  auto cycles = enumerate_cycles_bruteforce(4, 4);
  std::map<CellMatrix, int> freq;
  for (const auto& c : cycles) freq[cycle_to_matrix(c)] = 0;
  auto samples = sample_cycles({4, 4, 2024, 6000});
  for (const auto& s : samples) {
    auto it = freq.find(s.matrix);
    REQUIRE(it != freq.end());
    ++it->second;
    CHECK(s.probability == Rational(1, 6));
  }
  for (const auto& [matrix, c] : freq) {
    CHECK(c > 850);
    CHECK(c < 1150);
  }
}

TEST_CASE("stepwise probabilities telescope to 1/count") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 6}, {4, 9}, {5, 8}, {6, 11}, {8, 20}}) {
    Sampler sampler(m, n, 99);
    const Rational uniform = Rational(1) / Rational(count_cycles(m, n));
    for (int i = 0; i < 20; ++i) {
      Sample s = sampler.next();
      CHECK(s.probability == uniform);
      CHECK(static_cast<int>(s.word.size()) == n - 1);
      CHECK(matrix_to_cycle(s.matrix).is_hamiltonian_cycle());
    }
  }
}

TEST_CASE("same seed, same samples") {
  auto a = sample_cycles({6, 9, 5, 25});
  auto b = sample_cycles({6, 9, 5, 25});
  auto c = sample_cycles({6, 9, 6, 25});
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].matrix == b[i].matrix);
    differs = differs || !(a[i].matrix == c[i].matrix);
  }
  CHECK(differs);
}

TEST_CASE("degenerate ensembles") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CellMatrix a = sample_cycle({2, 5, seed, 1});
    CHECK(a.to_string() == "1111");
  }
  CHECK_THROWS_AS(sample_cycle({5, 5, 1, 1}), DomainError);
  CHECK_THROWS_AS(sample_cycles({4, 4, 1, -1}), DomainError);
  CHECK_THROWS_AS(sample_cycle({13, 4, 1, 1}), ResourceError);
}

TEST_CASE("sample mean of the top row matches the exact expectation") {
  const int N = 10000;
  auto samples = sample_cycles({4, 10, 31337, N});
  double sum = 0;
  for (const auto& s : samples) sum += s.matrix.row_ones(0);
  StatReport r = moments(4, 10, {1});
  const double mean = sum / N;
  const double se = std::sqrt(r.variance.get_d() / N);
  CHECK(std::abs(mean - r.expectation.get_d()) < 5 * se);
}
