#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gysincalc/errors.hpp"

namespace gysincalc::gysin {

/// Permutation of {1..n} stored in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// n, n-1, ..., 1.
  static Permutation longest(int n);
  /// Reverses each consecutive block; block_sizes must sum to n.
  static Permutation longest_in_blocks(int n, std::span<const int> block_sizes);

  int size() const { return static_cast<int>(line_.size()); }
  int operator()(int i) const { return line_[i - 1]; }
  const std::vector<int>& one_line() const { return line_; }

  /// (v * w)(i) == v(w(i)).
  Permutation operator*(const Permutation& w) const;
  Permutation inverse() const;

  bool operator==(const Permutation& other) const { return line_ == other.line_; }
  bool is_identity() const;
  int inversions() const;
  /// Smallest i with w(i) > w(i+1), or 0 if none.
  int leftmost_descent() const;
  std::vector<int> descents() const;
  /// Right multiplication by the adjacent transposition s_i (swaps the
  /// entries at positions i and i+1).
  Permutation right_multiplied(int i) const;

 private:
  std::vector<int> line_;
};

/// A word in the adjacent transpositions; letters are 1-based indices, the
/// product reads left to right.
using Word = std::vector<int>;

/// Deterministic reduced word: repeatedly removes the leftmost descent.
/// The returned word has length == inversions(w) and multiplies out to w.
Word reduced_word(const Permutation& w);

/// Like reduced_word but picks descents with the given generator, producing
/// varied (still reduced) words for the same permutation.
Word reduced_word_random(const Permutation& w, std::uint64_t seed);

/// Product s_{a_1} * ... * s_{a_l} of the word's letters.
Permutation word_to_permutation(int n, const Word& word);

/// Distinct reduced words for the longest element of S_r.  Returns as many
/// distinct words as exist up to `want` (r = 2 has one word, r = 3 has two).
std::vector<Word> longest_element_words(int r, std::size_t want,
                                        std::uint64_t seed);

}  // namespace gysincalc::gysin
