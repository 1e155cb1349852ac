#pragma once

// Explicit modules attached to word multisets: one basis vector per letter
// position, with F and V acting as partial monomial maps.  For a single
// word, F(e_j) = e_{j+1} exactly when u_j = f, and V(e_{j+1}) = e_j exactly
// when u_j = v; direct sums get copy indices.  All subspace work reduces to
// index-set operations.

#include <cstdint>
#include <string>
#include <vector>

#include "bt1/permdata.hpp"
#include "bt1/word.hpp"

namespace bt1 {

// Sorted, duplicate-free basis indices.
using Subspace = std::vector<std::uint32_t>;

struct BasisLabel {
  std::uint32_t word;  // 1-based position of the word in the source multiset
  std::uint32_t pos;   // letter position j within the word
  std::uint32_t copy;  // 1-based copy index
};

class KraftModule {
 public:
  static KraftModule build(const WordMultiset& m);

  // Free-form module from explicit partial maps; entry -1 means the map
  // sends that basis vector to zero.  Both maps must be injective where
  // defined; the chain condition is queryable, not enforced here.
  KraftModule(std::vector<int> fmap, std::vector<int> vmap);

  std::size_t dim() const { return fmap_.size(); }
  int f_of(std::size_t b) const { return fmap_[b]; }
  int v_of(std::size_t b) const { return vmap_[b]; }
  const WordMultiset& source() const { return source_; }
  const std::vector<BasisLabel>& basis_labels() const { return labels_; }

  // Ker F == Im V and Im F == Ker V, as index sets.
  bool chain_condition() const;

  Subspace f_image(const Subspace& n) const;
  Subspace v_preimage(const Subspace& n) const;
  Subspace full() const;

  // The permutation data the module induces on its own basis: tag by
  // whether F is defined, step by F or by the V-preimage.
  PartitionedPermutation induced_perm() const;

  std::string dump() const;  // one line per basis vector

 private:
  KraftModule() = default;
  std::vector<int> fmap_, vmap_;
  std::vector<BasisLabel> labels_;
  WordMultiset source_;
};

}  // namespace bt1
