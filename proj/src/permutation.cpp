#include "gysincalc/permutation.hpp"

#include <algorithm>
#include <set>

#include "gysincalc/rng.hpp"

namespace gysincalc::gysin {

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
  std::vector<bool> seen(line_.size(), false);
  for (int v : line_) {
    if (v < 1 || v > static_cast<int>(line_.size()) || seen[v - 1])
      throw dimension_error("not a permutation in one-line notation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  return Permutation(std::move(line));
}

Permutation Permutation::longest(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = n - i;
  return Permutation(std::move(line));
}

Permutation Permutation::longest_in_blocks(int n, std::span<const int> block_sizes) {
  std::vector<int> line;
  line.reserve(n);
  int offset = 0;
  for (int b : block_sizes) {
    if (b <= 0) throw dimension_error("block sizes must be positive");
    for (int i = 0; i < b; ++i) line.push_back(offset + b - i);
    offset += b;
  }
  if (offset != n) throw dimension_error("block sizes must sum to n");
  return Permutation(std::move(line));
}

Permutation Permutation::operator*(const Permutation& w) const {
  if (size() != w.size())
    throw dimension_error("permutations act on different sets");
  std::vector<int> line(line_.size());
  for (int i = 1; i <= size(); ++i) line[i - 1] = (*this)(w(i));
  return Permutation(std::move(line));
}

Permutation Permutation::inverse() const {
  std::vector<int> line(line_.size());
  for (int i = 1; i <= size(); ++i) line[line_[i - 1] - 1] = i;
  return Permutation(std::move(line));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if ((*this)(i) > (*this)(j)) ++count;
  return count;
}

int Permutation::leftmost_descent() const {
  for (int i = 1; i < size(); ++i)
    if ((*this)(i) > (*this)(i + 1)) return i;
  return 0;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i)
    if ((*this)(i) > (*this)(i + 1)) out.push_back(i);
  return out;
}

Permutation Permutation::right_multiplied(int i) const {
  if (i < 1 || i >= size())
    throw dimension_error("adjacent transposition index out of range");
  std::vector<int> line = line_;
  std::swap(line[i - 1], line[i]);
  return Permutation(std::move(line));
}

namespace {

// Peeling descents off w yields w * s_{a_1} * ... * s_{a_l} = identity, so
// the reduced word for w is the peeled letters reversed.
template <typename PickDescent>
Word peel_descents(Permutation w, PickDescent pick) {
  Word letters;
  while (true) {
    std::vector<int> ds = w.descents();
    if (ds.empty()) break;
    int i = pick(ds);
    letters.push_back(i);
    w = w.right_multiplied(i);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

}  // namespace

Word reduced_word(const Permutation& w) {
  return peel_descents(w, [](const std::vector<int>& ds) { return ds.front(); });
}

Word reduced_word_random(const Permutation& w, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return peel_descents(
      w, [&](const std::vector<int>& ds) { return ds[rng.below(ds.size())]; });
}

Permutation word_to_permutation(int n, const Word& word) {
  Permutation w = Permutation::identity(n);
  for (int a : word) w = w.right_multiplied(a);
  return w;
}

std::vector<Word> longest_element_words(int r, std::size_t want,
                                        std::uint64_t seed) {
  Permutation w0 = Permutation::longest(r);
  std::set<Word> unique;
  unique.insert(reduced_word(w0));
  unique.insert(peel_descents(
      w0, [](const std::vector<int>& ds) { return ds.back(); }));

  // Staircase words s_1 (s_2 s_1) (s_3 s_2 s_1) ... and its mirror.
  Word stair, mirror;
  for (int k = 1; k < r; ++k)
    for (int i = k; i >= 1; --i) stair.push_back(i);
  for (int k = r - 1; k >= 1; --k)
    for (int i = k; i < r; ++i) mirror.push_back(i);
  for (const Word& cand : {stair, mirror})
    if (word_to_permutation(r, cand) == w0 &&
        static_cast<int>(cand.size()) == w0.inversions())
      unique.insert(cand);

  std::uint64_t salt = seed;
  while (unique.size() < want && salt < seed + 512)
    unique.insert(reduced_word_random(w0, salt++));

  std::vector<Word> out(unique.begin(), unique.end());
  if (out.size() > want) out.resize(want);
  return out;
}

}  // namespace gysincalc::gysin
