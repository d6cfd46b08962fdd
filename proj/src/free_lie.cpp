// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "free_lie.hpp"

#include <algorithm>

#include "error.hpp"

namespace nabco {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t p = 1; p < w.size(); ++p) {
    Word suffix(w.begin() + p, w.end());
    if (!(w < suffix)) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(unsigned alphabet, unsigned max_len) {
  std::vector<Word> out;
  if (alphabet == 0 || max_len == 0) return out;
  // Duval's generation: from w, extend periodically to full length, then
  // strip trailing maximal letters and increment.
  Word w{0};
  while (true) {
    if (w.size() <= max_len) out.push_back(w);
    Word ext;
    for (std::size_t i = 0; ext.size() < max_len; i = (i + 1) % w.size())
      ext.push_back(w[i]);
    while (!ext.empty() && ext.back() == alphabet - 1) ext.pop_back();
    if (ext.empty()) break;
    ++ext.back();
    w = std::move(ext);
  }
  return out;
}

namespace {

/// Standard factorization position: start of the longest proper Lyndon
/// suffix.
std::size_t standard_split(const Word& w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    Word suffix(w.begin() + p, w.end());
    if (is_lyndon(suffix)) return p;
  }
  throw ComputeError("standard factorization failed");
}

}  // namespace

FreeLieTruncation::FreeLieTruncation(std::vector<FreeGenerator> generators,
                                     int depth)
    : generators_(std::move(generators)), depth_(depth) {
  if (depth_ < 1) throw InputError("free Lie truncation depth must be >= 1");
  if (generators_.empty()) throw InputError("free Lie algebra needs generators");
  for (const FreeGenerator& g : generators_)
    if (g.weight >= 0)
      throw InputError("free generator '" + g.name +
                       "' must have negative weight");
  auto weight_of = [&](const Word& w) {
    int s = 0;
    for (unsigned c : w) s += generators_[c].weight;
    return s;
  };
  std::vector<Word> all = lyndon_words(
      static_cast<unsigned>(generators_.size()), static_cast<unsigned>(depth_));
  // Order: weight from -1 downward, then lexicographic.
  std::stable_sort(all.begin(), all.end(), [&](const Word& a, const Word& b) {
    int wa = weight_of(a), wb = weight_of(b);
    if (wa != wb) return wa > wb;
    return a < b;
  });
  for (const Word& w : all)
    if (weight_of(w) >= -depth_) {
      index_.emplace(w, words_.size());
      words_.push_back(w);
    }
  // Names, factorization children, and associative expansions.
  std::vector<BasisElement> basis(words_.size());
  children_.assign(words_.size(), {0, 0});
  expansions_.assign(words_.size(), Poly{});
  std::vector<std::string> names(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (w.size() == 1) {
      names[i] = generators_[w[0]].name;
      children_[i] = {i, i};
      expansions_[i] = Poly{{w, Rational(1)}};
    } else {
      std::size_t p = standard_split(w);
      Word left(w.begin(), w.begin() + p);
      Word right(w.begin() + p, w.end());
      std::size_t li = word_index(left);
      std::size_t ri = word_index(right);
      names[i] = "[" + names[li] + "," + names[ri] + "]";
      children_[i] = {li, ri};
      // [P, Q] in the free associative algebra.
      Poly result;
      for (const auto& [wp, cp] : expansions_[li])
        for (const auto& [wq, cq] : expansions_[ri]) {
          Word pq(wp);
          pq.insert(pq.end(), wq.begin(), wq.end());
          Word qp(wq);
          qp.insert(qp.end(), wp.begin(), wp.end());
          Rational c = cp * cq;
          result[pq] += c;
          result[qp] -= c;
        }
      for (auto it = result.begin(); it != result.end();)
        it = sgn(it->second) == 0 ? result.erase(it) : std::next(it);
      expansions_[i] = std::move(result);
    }
    basis[i] = BasisElement{names[i], weight_of(w)};
  }
  // Structure constants by rewriting commutators into the Lyndon basis.
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (std::size_t j = i + 1; j < words_.size(); ++j) {
      int w = weight_of(words_[i]) + weight_of(words_[j]);
      if (w < -depth_) continue;
      Poly comm;
      for (const auto& [wp, cp] : expansions_[i])
        for (const auto& [wq, cq] : expansions_[j]) {
          Word pq(wp);
          pq.insert(pq.end(), wq.begin(), wq.end());
          Word qp(wq);
          qp.insert(qp.end(), wp.begin(), wp.end());
          Rational c = cp * cq;
          comm[pq] += c;
          comm[qp] -= c;
        }
      Vec value = rewrite(std::move(comm));
      if (!vec_is_zero(value))
        entries.push_back({i, j, std::move(value)});
    }
  algebra_ = GradedLieAlgebra(GradedVectorSpace(std::move(basis)),
                              std::move(entries), std::nullopt);
}

std::size_t FreeLieTruncation::word_index(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw ComputeError("word missing from Lyndon basis");
  return it->second;
}

std::size_t FreeLieTruncation::generator_index(unsigned gen) const {
  return word_index(Word{gen});
}

std::map<int, std::size_t> FreeLieTruncation::dimensions() const {
  std::map<int, std::size_t> dims;
  for (std::size_t i = 0; i < words_.size(); ++i)
    ++dims[algebra_.space().weight(i)];
  return dims;
}

Vec FreeLieTruncation::rewrite(Poly p) const {
  for (auto it = p.begin(); it != p.end();)
    it = sgn(it->second) == 0 ? p.erase(it) : std::next(it);
  Vec out = vec_zero(words_.size());
  std::size_t guard = 0;
  while (!p.empty()) {
    if (++guard > 4 * words_.size() + 16)
      throw ComputeError("Lyndon rewriting did not terminate");
    auto [w, c] = *p.begin();
    std::size_t idx = word_index(w);  // smallest support word of a Lie element is Lyndon
    out[idx] += c;
    for (const auto& [ew, ec] : expansions_[idx]) {
      auto it = p.emplace(ew, Rational(0)).first;
      it->second -= c * ec;
      if (sgn(it->second) == 0) p.erase(it);
    }
  }
  return out;
}

Matrix FreeLieTruncation::induced_endomorphism(
    const std::vector<Vec>& images) const {
  if (images.size() != generators_.size())
    throw InputError("one image per generator required");
  std::size_t n = words_.size();
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g].size() != n)
      throw InputError("generator image dimension mismatch");
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(images[g][k]) != 0 &&
          algebra_.space().weight(k) != generators_[g].weight)
        throw InputError("image of generator '" + generators_[g].name +
                         "' is not homogeneous of the generator's weight");
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i].size() == 1) {
      m.set_column(i, images[words_[i][0]]);
    } else {
      auto [li, ri] = children_[i];
      // Children precede their bracket in the weight-major basis order.
      m.set_column(i, algebra_.bracket(m.column(li), m.column(ri)));
    }
  }
  return m;
}

}  // namespace nabco
