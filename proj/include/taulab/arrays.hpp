#pragma once

// Finite models of 0/1 arrays indexed by N x N whose rows are eventually
// constant: an R x C bit prefix plus one tail bit per row giving the value of
// every column >= C. Column quantifiers are exact under this representation:
// a row satisfies "all but finitely many columns are 1" (equivalently
// "infinitely many columns are 1") precisely when its tail bit is 1.

#include <cstdint>
#include <string>
#include <vector>

#include "taulab/search.hpp"

namespace taulab {

struct BinaryArray {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::uint8_t>> bits;  // rows x cols
  std::vector<std::uint8_t> tail;               // one bit per row

  static BinaryArray filled(int r, int c, std::uint8_t bit, std::uint8_t tail_bit);

  // Value of A(n,m) for any m >= 0; columns >= cols read the tail bit.
  std::uint8_t at(int n, int m) const {
    return m < cols ? bits[n][m] : tail[n];
  }
  void validate() const;  // shape consistency, 0/1 entries

  bool operator==(const BinaryArray&) const = default;
};

// Column index used by diagonalizers and windows to select "some column
// >= cols"; evaluates through the tail bit. Encoded as the value `cols`.
inline int tail_column(const BinaryArray& a) { return a.cols; }

struct ArrayFamily {
  std::vector<BinaryArray> members;  // uniform shape; repeats allowed

  int rows() const { return members.empty() ? 0 : members.front().rows; }
  int cols() const { return members.empty() ? 0 : members.front().cols; }
  void validate() const;  // uniform shape + member validity
};

// Finite restriction of a function N -> N.
using GrowthFunction = std::vector<int>;

// A_f(n,m) = 1 iff f(n) <= m. Requires cols >= max f so that the prefix keeps
// every threshold; all tails are 1.
BinaryArray make_af(const GrowthFunction& f, int cols);

// cmp(A,B)(n,m) = max{A(n,m), 1-B(n,m)}, pointwise on bits and tails.
BinaryArray cmp_array(const BinaryArray& a, const BinaryArray& b);

// A subset of N modeled as its finite part below the column horizon plus an
// implicit infinite tail [cols, inf). Rows built from such sets always carry
// tail bit 1.
struct InfiniteSetPrefix {
  std::vector<int> below_horizon;  // strictly increasing, values < cols
};

struct GeneratedArray {
  BinaryArray array;
  // Rows whose bit prefix came out all-zero (the set ran empty below the
  // horizon); surfaced as metadata instead of guessing a different encoding.
  std::vector<int> empty_prefix_rows;
};

// Tower arrays: for ell=0, even rows carry the characteristic bits of t \ n
// and odd rows are all-ones; ell=1 swaps the parities. All tails are 1.
GeneratedArray make_tower_arrays(const InfiniteSetPrefix& t, int rows, int cols, int ell);

// Splitting arrays: same as tower arrays with "n even" replaced by "n in s".
GeneratedArray make_split_arrays(const InfiniteSetPrefix& t, const std::vector<int>& s,
                                 int rows, int cols, int ell);

// JSON forms: {"rows":R,"cols":C,"bits":[[0/1],..],"tail":[0/1,..]}.
std::string array_to_json(const BinaryArray& a);
BinaryArray array_from_json(const std::string& text);
std::string family_to_json(const ArrayFamily& fam);
ArrayFamily family_from_json(const std::string& text);

}  // namespace taulab
