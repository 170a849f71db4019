#ifndef HAMGRID_ORACLE_HPP
#define HAMGRID_ORACLE_HPP

// Brute-force ground truth, written without the column automaton.

#include <vector>

#include "hamgrid/geometry.hpp"

namespace hamgrid {

inline constexpr int kMaxOracleVertices = 42;

/// Every Hamiltonian cycle of P_m x P_n exactly once, sorted. Throws
/// ResourceError when m*n exceeds kMaxOracleVertices.
std::vector<CycleEdges> enumerate_cycles_bruteforce(int m, int n);

/// Global validity of an interior-cell matrix: connected interior, no holes,
/// every lattice vertex touches both sides, no diagonal 2x2 pattern.
bool validate_matrix_global(const CellMatrix& a);

/// All rows x cols matrices passing validate_matrix_global, sorted.
/// Guarded at rows*cols <= 24.
std::vector<CellMatrix> enumerate_valid_matrices(int rows, int cols);

}  // namespace hamgrid

#endif  // HAMGRID_ORACLE_HPP
