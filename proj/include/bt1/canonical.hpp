#pragma once

// Canonical filtrations and canonical types (r, s, φ, ν, ρ): the subspace
// iteration oracle on explicit modules, the direct multiset → type map, the
// type → partitioned permutation construction, axiom validation and duality.

#include <vector>

#include "bt1/kraft.hpp"
#include "bt1/permdata.hpp"
#include "bt1/word.hpp"

namespace bt1 {

struct CanonicalType {
  long long s = 0;
  long long r = 0;
  std::vector<long long> phi;  // indices 0..s
  std::vector<long long> nu;   // indices 0..s
  std::vector<long long> rho;  // indices 0..s, rho[0] = 0

  // Block width of step i, 0 <= i < s.
  long long mu(long long i) const {
    return rho[static_cast<std::size_t>(i + 1)] -
           rho[static_cast<std::size_t>(i)];
  }
  long long dim() const { return rho.back(); }
  bool trivial() const { return s == 0; }  // degenerate genus-0 carrier

  static CanonicalType trivial_type();

  // Enforces the five structural axioms (monotone surjective phi/nu,
  // strictly increasing rho, complementary-advance, block-width transport,
  // reachability of every index from s); throws InvalidCanonicalType.
  void validate() const;

  bool self_dual() const;

  bool operator==(const CanonicalType&) const = default;
};

struct Filtration {
  std::vector<Subspace> steps;  // strictly increasing, from empty to full
};

// Independent oracle: closes {0, M} under N -> F(N) and N -> V^{-1}(N),
// sorts the collected subspaces by inclusion and reads the type off the
// chain.  ChainNotTotal if the collection is not totally ordered.
std::pair<Filtration, CanonicalType> canonical_filtration_oracle(
    const KraftModule& m);

struct WordsCanonicalResult {
  CanonicalType type;
  std::vector<Word> omega;        // distinct powered rotations, increasing
  std::vector<long long> counts;  // multiplicity of each omega
};

// Direct construction from a multiset (primitivity not required): power all
// rotations to the lcm length, sort, and read counts.
WordsCanonicalResult words_to_canonical(const WordMultiset& m);

// Step-set permutation of a valid type, expanded by block widths.
PartitionedPermutation canonical_to_perm(const CanonicalType& ct);

CanonicalType dual_canonical(const CanonicalType& ct);

bool is_self_dual(const WordMultiset& m);  // fixed under complement

}  // namespace bt1
