#include <algorithm>
#include <set>

#include "doctest.h"

#include "gysincalc/permutation.hpp"

using gysincalc::gysin::Permutation;
using gysincalc::gysin::Word;
using gysincalc::gysin::longest_element_words;
using gysincalc::gysin::reduced_word;
using gysincalc::gysin::reduced_word_random;
using gysincalc::gysin::word_to_permutation;

TEST_CASE("identity and longest element") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(Permutation::identity(n).inversions() == 0);
    CHECK(Permutation::longest(n).inversions() ==
          static_cast<std::size_t>(n * (n - 1) / 2));
  }
  Permutation w0 = Permutation::longest(4);
  CHECK(w0 * w0 == Permutation::identity(4));
  CHECK(w0.inverse() == w0);
}

TEST_CASE("reduced words have length equal to inversions") {
  for (int n = 2; n <= 5; ++n) {
    Permutation w0 = Permutation::longest(n);
    Word word = reduced_word(w0);
    CHECK(word.size() == w0.inversions());
    CHECK(word_to_permutation(n, word) == w0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Word alt = reduced_word_random(w0, seed);
      CHECK(alt.size() == w0.inversions());
      CHECK(word_to_permutation(n, alt) == w0);
    }
  }
}

TEST_CASE("distinct reduced-word counts for the longest element") {
  CHECK(longest_element_words(2, 10, 1).size() == 1);
  auto r3 = longest_element_words(3, 10, 1);
  CHECK(r3.size() == 2);
  std::set<Word> r3_set(r3.begin(), r3.end());
  CHECK(r3_set.count(Word{1, 2, 1}) == 1);
  CHECK(r3_set.count(Word{2, 1, 2}) == 1);
  CHECK(longest_element_words(4, 100, 1).size() == 16);
  CHECK(longest_element_words(5, 3, 1).size() == 3);
  for (const Word& w : longest_element_words(4, 100, 1))
    CHECK(word_to_permutation(4, w) == Permutation::longest(4));
}

TEST_CASE("block longest elements") {
  std::vector<int> blocks = {2, 2};
  Permutation w0p = Permutation::longest_in_blocks(4, blocks);
  CHECK(w0p.inversions() == 2);
  CHECK(w0p * w0p == Permutation::identity(4));

  std::vector<int> blocks31 = {3, 1};
  CHECK(Permutation::longest_in_blocks(4, blocks31).inversions() == 3);

  Permutation u = Permutation::longest(4) * w0p;
  CHECK(u.inversions() == 6 - 2);
}

TEST_CASE("multiplication against inversion counts") {
  Permutation s1 = word_to_permutation(3, {1});
  Permutation s2 = word_to_permutation(3, {2});
  CHECK((s1 * s2).inversions() == 2);
  CHECK((s1 * s1).inversions() == 0);
  CHECK(word_to_permutation(3, {1, 2, 1}) == word_to_permutation(3, {2, 1, 2}));
  CHECK(word_to_permutation(3, {1, 2, 1}) == Permutation::longest(3));
}
