#pragma once

// Partitioned permutations: a finite set S = S_f ⊔ S_v with a permutation π,
// and the two-way dictionary with multisets of cyclic words.  Orbits spell
// words (u_j = tag of π^j(a)); words unroll into rotation orbits.

#include <cstdint>
#include <map>
#include <vector>

#include "bt1/word.hpp"

namespace bt1 {

class PartitionedPermutation {
 public:
  PartitionedPermutation() = default;

  // labels: distinct external names; tags[i] tags labels[i]; perm[i] is the
  // index (into labels) of the image of labels[i].  Shape is validated.
  static PartitionedPermutation make(std::vector<long long> labels,
                                     std::vector<Letter> tags,
                                     std::vector<std::uint32_t> perm);

  std::size_t size() const { return labels_.size(); }
  const std::vector<long long>& labels() const { return labels_; }
  Letter tag_at(std::size_t idx) const { return tags_[idx]; }
  std::uint32_t image_at(std::size_t idx) const { return perm_[idx]; }
  std::size_t index_of(long long label) const;  // UnknownElement when absent

  Word orbit_word(long long label) const;
  Word orbit_word_at(std::size_t idx) const;

  // Orbits as index cycles; each starts at its smallest member, orbits are
  // ordered by that smallest member.
  std::vector<std::vector<std::uint32_t>> orbits() const;

  WordMultiset to_words() const;  // one cyclic word per orbit
  bool admissible() const;        // every orbit word primitive

  // Self-duality two ways: the orbit-word multiset is fixed by complement,
  // or an explicit bijection ι with ι(S_f) = S_v and π∘ι = ι∘π exists (the
  // matching is constructed and then verified pointwise).
  bool self_dual_words() const;
  bool self_dual_matching() const;

  // Relabels elements 0..n-1 with orbits sorted by cyclic word and laid out
  // in cycle order; isomorphic inputs produce equal results.
  PartitionedPermutation canonical_form() const;

  bool operator==(const PartitionedPermutation&) const = default;

 private:
  std::vector<long long> labels_;
  std::vector<Letter> tags_;
  std::vector<std::uint32_t> perm_;
  std::map<long long, std::uint32_t> index_;
};

bool isomorphic(const PartitionedPermutation& a, const PartitionedPermutation& b);

// Unrolls each word copy into a rotation cycle; labels are sequential
// integers.  Length-n entries contribute n-cycles, so the orbit words of the
// result reproduce the input exactly (no primitivity requirement).
PartitionedPermutation words_to_perm(const WordMultiset& m);

}  // namespace bt1
