#pragma once

// Cyclic words over the two-letter alphabet {f, v} and finite multisets of
// them.  A word of length L is the letter sequence u(L-1) ... u(1) u(0); the
// display string puts u(L-1) leftmost, so u(j) counts positions from the
// right end.  Rotation moves the last letter to the front, so the j-th
// rotation of a word ends with u(j).  Cyclic words are identified with their
// lexicographically least rotation (f < v).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bt1/error.hpp"

namespace bt1 {

enum class Letter : char { F = 'f', V = 'v' };

inline Letter flip(Letter a) { return a == Letter::F ? Letter::V : Letter::F; }

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Accepts a nonempty run of 'f'/'v' characters.
  static Word parse(std::string_view s);

  // Word whose letter u(j) is v when bit j of i is set, f otherwise; len
  // gives the number of letters (unused high bits of i must be clear).
  static Word from_bits(std::uint64_t i, int len);
  std::uint64_t bits() const;  // inverse of from_bits; requires size() <= 63

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Letter at cyclic position j, counted from the right end of the display
  // string: u(0) is the last character, u(size()-1) the first.
  Letter u(std::size_t j) const { return letters_[letters_.size() - 1 - j]; }

  std::string str() const;

  Word rotated(long long t) const;  // u'(j) = u(j + t mod size)
  std::vector<Word> all_rotations() const;
  Word complement() const;  // swap f and v
  Word power(long long e) const;

  bool mixed() const;  // contains both letters
  bool primitive() const;
  // Primitive word p with *this == p^e; e is stored through exponent when
  // the pointer is nonnull.
  Word primitive_root(long long* exponent = nullptr) const;

  // Cyclic break positions: j is a break when u(j+1 mod size) != u(j).
  std::vector<std::size_t> breaks() const;
  std::size_t break_count() const;
  bool wrap_break() const;  // u(0) != u(size()-1)

  Word least_rotation() const;  // lexicographically least cyclic rotation

  // True when the final |t| letters match t, i.e. u(j) == t.u(j) for j <
  // t.size().  False when t is longer than this word.
  bool ends_with(const Word& t) const;

  // Block decomposition of a mixed primitive word: rotate to the
  // lexicographically least rotation that begins with v and ends with f,
  // then read the resulting string v^{n_r} f^{m_r} ... v^{n_1} f^{m_1} into
  // the pair list [(m_1, n_1), ..., (m_r, n_r)].
  std::vector<std::pair<long long, long long>> exp_notation() const;

  const std::vector<Letter>& letters() const { return letters_; }

  // Shorter words compare before longer ones; equal lengths compare by the
  // display string with f < v.
  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_ <=> o.letters_;
  }
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Number of adjacent unequal bit pairs in the binary string of i padded with
// leading zeros, i.e. popcount(i ^ (i >> 1)).  Counting is insensitive to
// the pad width and ignores the wrap-around pair.
int flip_count(std::uint64_t i);

// Generators and relations of the module attached to a mixed word: with the
// rotation normalized as in exp_notation and blocks (m_i, n_i), generators
// are E_i = e_{I(i)} with I(i) = sum_{j<=i} (m_j + n_j), I(0) = 0, and the
// relations read F^{m_i} E_{i-1} = V^{n_i} E_i with indices mod r.
struct Presentation {
  Word normalized;
  std::vector<std::pair<long long, long long>> blocks;
  std::vector<long long> positions;  // I(i) for i = 0 .. r-1
};

Presentation presentation(const Word& w);

// Multiset of cyclic words, keyed by least rotations.  The text form lists
// entries in increasing (length, string) order as word or word^mult, joined
// by commas: "fv^2,ffvv".
class WordMultiset {
 public:
  WordMultiset() = default;

  static WordMultiset parse(std::string_view s);
  std::string str() const;

  void add(const Word& w, long long mult = 1);

  long long total_dim() const;  // sum of length * multiplicity
  bool all_primitive() const;
  void require_primitive() const;  // throws NotPrimitiveMultiset

  WordMultiset complement() const;
  bool self_dual() const;  // fixed by complement

  // Replace each entry p^e (p primitive) by p with e-fold multiplicity.
  WordMultiset retract_primitive() const;

  bool empty() const { return counts_.empty(); }
  std::size_t distinct_count() const { return counts_.size(); }
  const std::map<Word, long long>& counts() const { return counts_; }

  bool operator==(const WordMultiset&) const = default;

 private:
  std::map<Word, long long> counts_;
};

}  // namespace bt1
