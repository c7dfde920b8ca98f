#include <algorithm>
#include <numeric>

#include "luroth/config7.hpp"

namespace luroth {

namespace {

// Lines of the Fano plane, 0-based: 142 253 361 175 276 374 456.
constexpr std::array<std::array<int, 3>, 7> kFanoLines{{
    {0, 3, 1}, {1, 4, 2}, {2, 5, 0}, {0, 6, 4}, {1, 6, 5}, {2, 6, 3}, {3, 4, 5}}};

int permutation_sign(const std::array<int, 7>& p) {
  int inversions = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Sums sgn(s) * prod_lines table[s(i)][s(j)][s(k)] over S7, divided by 168.
template <typename T, typename Table>
T fano_sum(const Table& table, T zero) {
  std::array<int, 7> p;
  std::iota(p.begin(), p.end(), 0);
  T total = zero;
  do {
    T term = table[p[kFanoLines[0][0]]][p[kFanoLines[0][1]]][p[kFanoLines[0][2]]];
    for (std::size_t l = 1; l < kFanoLines.size(); ++l) {
      term *= table[p[kFanoLines[l][0]]][p[kFanoLines[l][1]]][p[kFanoLines[l][2]]];
    }
    if (permutation_sign(p) > 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  total *= Rational(1, 168);
  return total;
}

template <typename T>
using Table7 = std::array<std::array<std::array<T, 7>, 7>, 7>;

}  // namespace

Rational morley_invariant_fano(std::span<const HomPoint> seven) {
  if (seven.size() != 7) throw std::invalid_argument("morley_invariant_fano: expected seven points");
  Table7<Rational> table;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) table[a][b][c] = bracket(seven[a], seven[b], seven[c]);
  return fano_sum(table, Rational(0));
}

Form morley_invariant_fano(std::span<const HomPoint> six, std::size_t symbolic_index) {
  if (six.size() != 6 || symbolic_index > 6) {
    throw std::invalid_argument("morley_invariant_fano: expected six points and an index below 7");
  }
  std::array<std::array<Form, 3>, 7> args;
  std::size_t next = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      args[i][k] = i == symbolic_index ? Form::variable(3, k) : Form::constant(3, six[next][k]);
    }
    if (i != symbolic_index) ++next;
  }
  Table7<Form> table;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        table[a][b][c] = det3({args[a][0], args[a][1], args[a][2], args[b][0], args[b][1],
                               args[b][2], args[c][0], args[c][1], args[c][2]});
      }
  return fano_sum(table, Form(3));
}

Form seventh_cubic(std::span<const HomPoint> six) {
  if (six.size() != 6) throw std::invalid_argument("seventh_cubic: expected six points");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (six[i] == six[j]) throw DegenerateInput("seventh_cubic: coincident points");
      for (std::size_t k = j + 1; k < 6; ++k)
        if (sgn(bracket(six[i], six[j], six[k])) == 0) {
          throw DegenerateInput("seventh_cubic: three collinear points");
        }
    }
  Form e = morley_invariant_fano(six, 6);
  if (e.is_zero()) throw DegenerateInput("seventh_cubic: cubic vanishes identically");
  return e;
}

Rational fano_to_quotient_ratio() { return Rational(6); }

}  // namespace luroth
