// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "lie_algebra.hpp"

namespace nabco {

struct FreeGenerator {
  std::string name;
  int weight = -1;  // must be negative
};

/// Word in the free monoid on the generators, as a sequence of generator
/// indices.  Lexicographic comparison of words uses generator declaration
/// order.
using Word = std::vector<unsigned>;

/// True iff w is nonempty and strictly smaller than every proper suffix.
bool is_lyndon(const Word& w);

/// All Lyndon words of length <= max_len in lexicographic order (Duval).
std::vector<Word> lyndon_words(unsigned alphabet, unsigned max_len);

/// Free Lie algebra on weighted generators, truncated below weight -depth.
/// Basis: standard bracketings of Lyndon words of weight >= -depth, ordered
/// by weight from -1 downward and lexicographically within a weight.  The
/// bracketing of a word uses the standard factorization w = u v with v the
/// longest proper Lyndon suffix.  Structure constants come from expanding
/// bracketings in the free associative algebra and rewriting: the smallest
/// word in the support of a homogeneous Lie element is Lyndon with
/// coefficient equal to the element's coefficient on that basis bracketing,
/// so repeated subtraction terminates.
class FreeLieTruncation {
 public:
  FreeLieTruncation(std::vector<FreeGenerator> generators, int depth);

  const GradedLieAlgebra& algebra() const { return algebra_; }
  int depth() const { return depth_; }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<Word>& basis_words() const { return words_; }
  /// Algebra basis index of the singleton word of a generator.
  std::size_t generator_index(unsigned gen) const;
  /// Basis dimension per weight.
  std::map<int, std::size_t> dimensions() const;

  /// Matrix of the graded endomorphism sending each generator to the given
  /// image (a vector of the generator's weight); brackets of basis words map
  /// to brackets of images.
  Matrix induced_endomorphism(const std::vector<Vec>& images) const;

 private:
  using Poly = std::map<Word, Rational>;

  std::size_t word_index(const Word& w) const;
  Poly expand(std::size_t basis_idx) const;
  Vec rewrite(Poly p) const;

  std::vector<FreeGenerator> generators_;
  int depth_ = 0;
  std::vector<Word> words_;                  // per basis element
  std::vector<std::pair<std::size_t, std::size_t>> children_;  // factorization, singletons self-paired
  std::map<Word, std::size_t> index_;
  std::vector<Poly> expansions_;
  GradedLieAlgebra algebra_;
};

}  // namespace nabco
