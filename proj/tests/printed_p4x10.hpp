#ifndef HAMGRID_TESTS_PRINTED_P4X10_HPP
#define HAMGRID_TESTS_PRINTED_P4X10_HPP

// The weight enumerator of P_4 x P_10 as printed, term by term:
// {coefficient, a1, a2, a3} for coefficient * w1^a1 w2^a2 w3^a3.
// The seventh term is printed with coefficient 7; every consistency check
// (the total 1517 and the row reflection of w1^6 w2^5 w3^8, printed as 67)
// forces 67, so the table carries 67 and kTypoIndex marks the entry.

#include <array>

namespace printed {

struct Term {
  long coefficient;
  unsigned a1, a2, a3;
};

inline constexpr std::size_t kTypoIndex = 6;
inline constexpr long kTypoPrinted = 7;

inline constexpr std::array<Term, 25> kP4x10{{
    {1, 9, 5, 5},   {36, 9, 4, 6},  {126, 9, 3, 7}, {84, 9, 2, 8},  {9, 9, 1, 9},
    {4, 8, 6, 5},   {67, 8, 5, 6},  {178, 8, 4, 7}, {259, 8, 3, 8}, {84, 8, 2, 9},
    {6, 7, 7, 5},   {42, 7, 6, 6},  {137, 7, 5, 7}, {178, 7, 4, 8}, {126, 7, 3, 9},
    {4, 6, 8, 5},   {15, 6, 7, 6},  {42, 6, 6, 7},  {67, 6, 5, 8},  {36, 6, 4, 9},
    {1, 5, 9, 5},   {4, 5, 8, 6},   {6, 5, 7, 7},   {4, 5, 6, 8},   {1, 5, 5, 9},
}};

}  // namespace printed

#endif  // HAMGRID_TESTS_PRINTED_P4X10_HPP
