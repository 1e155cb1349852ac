#pragma once

// The four numeric invariants of a module given by a primitive word
// multiset — p-rank, a-number, alternating-summand multiplicity (s11) and
// the u11 count of Hom-generators — computed by independent routes: directly
// from the words, from a table of full-length pattern multiplicities, and
// (for the first two) from an elementary sequence.

#include <map>
#include <utility>

#include "bt1/eo.hpp"
#include "bt1/word.hpp"

namespace bt1 {

struct InvariantBundle {
  long long g = 0;
  long long p_rank = 0;
  long long a = 0;
  long long s11 = 0;
  long long u11 = 0;

  long long sel_dim() const { return a + u11 - s11; }

  bool operator==(const InvariantBundle&) const = default;
};

long long p_rank(const WordMultiset& m);    // multiplicity of the word f
long long a_number(const WordMultiset& m);  // rotations starting v, ending f
long long s11(const WordMultiset& m);       // multiplicity of the word fv
long long u11(const WordMultiset& m);

// The u count of a single primitive word (1 for fv, 0 for f and v).
long long u11_word(const Word& w);

// Dimension of the homomorphism space from the word's module to the
// two-dimensional alternating module: u plus the word's a-number.
long long hom_dim_to_M11(const Word& w);

// All four from the word routes; g is half the total dimension.
InvariantBundle invariants_from_words(const WordMultiset& m);

// Multiplicity table of full-length patterns (all keys the same length).
using PatternCounts = std::map<Word, long long>;

// Suffix count: total multiplicity of patterns whose last |t| letters
// equal t; zero when |t| exceeds the pattern length.
long long suffix_count(const PatternCounts& counts, const Word& t);

// Formula route on a pattern table: p-rank from the constant-f pattern,
// a-number from the two-letter suffixes (cross-checked against each other),
// s11 from the alternating pattern, u11 from the v v (fv)^j f f suffixes.
InvariantBundle invariants_from_multiplicities(const PatternCounts& counts,
                                               long long ell);

// p-rank (largest i with psi_i = i) and a-number (g - psi_g) from a
// sequence; the other two invariants are not determined by it.
std::pair<long long, long long> invariants_from_es(const ElementarySequence& es);

}  // namespace bt1
