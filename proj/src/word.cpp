#include "bt1/word.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace bt1 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::NotMixed: return "NotMixed";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::ChainNotTotal: return "ChainNotTotal";
    case Errc::InvalidCanonicalType: return "InvalidCanonicalType";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::NotPrimitiveMultiset: return "NotPrimitiveMultiset";
    case Errc::InconsistentMultiplicities: return "InconsistentMultiplicities";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotPrime: return "NotPrime";
    case Errc::UseP2Module: return "UseP2Module";
    case Errc::RationalCurve: return "RationalCurve";
  }
  return "UnknownError";
}

Word Word::parse(std::string_view s) {
  if (s.empty()) fail(Errc::EmptyWord, "word must have at least one letter");
  std::vector<Letter> letters;
  letters.reserve(s.size());
  for (char c : s) {
    if (c == 'f') {
      letters.push_back(Letter::F);
    } else if (c == 'v') {
      letters.push_back(Letter::V);
    } else {
      fail(Errc::ParseError,
           std::string("invalid character '") + c + "' in word \"" +
               std::string(s) + "\"");
    }
  }
  return Word(std::move(letters));
}

Word Word::from_bits(std::uint64_t i, int len) {
  std::vector<Letter> letters(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j)
    letters[static_cast<std::size_t>(len - 1 - j)] =
        (i >> j & 1) ? Letter::V : Letter::F;
  return Word(std::move(letters));
}

std::uint64_t Word::bits() const {
  std::uint64_t i = 0;
  for (std::size_t j = 0; j < size(); ++j)
    if (u(j) == Letter::V) i |= std::uint64_t{1} << j;
  return i;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(static_cast<char>(a));
  return s;
}

Word Word::rotated(long long t) const {
  const long long n = static_cast<long long>(size());
  if (n == 0) fail(Errc::EmptyWord, "cannot rotate the empty word");
  t = ((t % n) + n) % n;
  std::vector<Letter> out(letters_.size());
  // Moving the last letter to the front t times rotates the display string
  // right by t.
  for (long long i = 0; i < n; ++i)
    out[static_cast<std::size_t>((i + t) % n)] =
        letters_[static_cast<std::size_t>(i)];
  return Word(std::move(out));
}

std::vector<Word> Word::all_rotations() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::size_t t = 0; t < size(); ++t)
    out.push_back(rotated(static_cast<long long>(t)));
  return out;
}

Word Word::complement() const {
  std::vector<Letter> out(letters_);
  for (Letter& a : out) a = flip(a);
  return Word(std::move(out));
}

Word Word::power(long long e) const {
  std::vector<Letter> out;
  out.reserve(size() * static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i)
    out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

bool Word::mixed() const {
  bool has_f = false, has_v = false;
  for (Letter a : letters_) (a == Letter::F ? has_f : has_v) = true;
  return has_f && has_v;
}

bool Word::primitive() const {
  const std::size_t n = size();
  if (n == 0) return false;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + d < n && periodic; ++i)
      periodic = letters_[i] == letters_[i + d];
    if (periodic) return false;
  }
  return true;
}

Word Word::primitive_root(long long* exponent) const {
  const std::size_t n = size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + d < n && periodic; ++i)
      periodic = letters_[i] == letters_[i + d];
    if (periodic) {
      if (exponent) *exponent = static_cast<long long>(n / d);
      return Word(std::vector<Letter>(letters_.begin(),
                                      letters_.begin() + static_cast<long>(d)));
    }
  }
  fail(Errc::EmptyWord, "primitive root of the empty word");
}

std::vector<std::size_t> Word::breaks() const {
  std::vector<std::size_t> out;
  const std::size_t n = size();
  for (std::size_t j = 0; j < n; ++j)
    if (u((j + 1) % n) != u(j)) out.push_back(j);
  return out;
}

std::size_t Word::break_count() const { return breaks().size(); }

bool Word::wrap_break() const { return u(0) != u(size() - 1); }

// Booth's least-rotation scan over the doubled string; returns the start
// index of the least rotation read left to right.
static std::size_t booth_start(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  std::string t;
  t.reserve(2 * n);
  for (Letter a : w) t.push_back(static_cast<char>(a));
  t += t;
  std::vector<long long> fail_link(t.size(), -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < t.size(); ++j) {
    const char c = t[j];
    long long i = fail_link[j - k - 1];
    while (i != -1 && c != t[k + static_cast<std::size_t>(i) + 1]) {
      if (c < t[k + static_cast<std::size_t>(i) + 1])
        k = j - static_cast<std::size_t>(i) - 1;
      i = fail_link[static_cast<std::size_t>(i)];
    }
    if (i == -1 && c != t[k]) {
      if (c < t[k]) k = j;
      fail_link[j - k] = -1;
    } else {
      fail_link[j - k] = i + 1;
    }
  }
  return k;
}

Word Word::least_rotation() const {
  if (empty()) return *this;
  const std::size_t k = booth_start(letters_);
  std::vector<Letter> out;
  out.reserve(size());
  out.insert(out.end(), letters_.begin() + static_cast<long>(k),
             letters_.end());
  out.insert(out.end(), letters_.begin(),
             letters_.begin() + static_cast<long>(k));
  return Word(std::move(out));
}

bool Word::ends_with(const Word& t) const {
  if (t.size() > size()) return false;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (u(j) != t.u(j)) return false;
  return true;
}

// Lexicographically least rotation that begins with v and ends with f.
static Word normalized_vf(const Word& w) {
  if (w.empty()) fail(Errc::EmptyWord, "cannot normalize the empty word");
  if (!w.mixed())
    fail(Errc::NotMixed, "block decomposition needs both letters: " + w.str());
  if (!w.primitive())
    fail(Errc::NotPrimitive, "block decomposition needs a primitive word: " +
                                 w.str());
  const Word* best = nullptr;
  std::vector<Word> rots = w.all_rotations();
  for (const Word& x : rots) {
    if (x.letters().front() != Letter::V || x.letters().back() != Letter::F)
      continue;
    if (!best || x < *best) best = &x;
  }
  return *best;  // a mixed word always has a qualifying rotation
}

std::vector<std::pair<long long, long long>> Word::exp_notation() const {
  const Word x = normalized_vf(*this);
  // x reads v^{n_r} f^{m_r} ... v^{n_1} f^{m_1}; collect runs left to right,
  // then pair them from the right end.
  std::vector<long long> runs;
  for (std::size_t i = 0; i < x.size();) {
    std::size_t j = i;
    while (j < x.size() && x.letters()[j] == x.letters()[i]) ++j;
    runs.push_back(static_cast<long long>(j - i));
    i = j;
  }
  std::vector<std::pair<long long, long long>> pairs;
  for (std::size_t i = runs.size(); i >= 2; i -= 2)
    pairs.emplace_back(runs[i - 1], runs[i - 2]);
  return pairs;
}

int flip_count(std::uint64_t i) { return std::popcount(i ^ (i >> 1)); }

Presentation presentation(const Word& w) {
  Presentation out;
  out.blocks = w.exp_notation();
  out.normalized = normalized_vf(w);
  long long acc = 0;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    out.positions.push_back(acc);
    acc += out.blocks[i].first + out.blocks[i].second;
  }
  return out;
}

WordMultiset WordMultiset::parse(std::string_view s) {
  WordMultiset out;
  std::size_t pos = 0;
  bool saw_entry = false;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok =
        s.substr(pos, (comma == std::string_view::npos ? s.size() : comma) - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty())
      fail(Errc::ParseError, "empty entry in multiset \"" + std::string(s) + "\"");
    long long mult = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string_view::npos) {
      std::string_view digits = tok.substr(caret + 1);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string_view::npos)
        fail(Errc::ParseError,
             "bad multiplicity in \"" + std::string(tok) + "\"");
      mult = std::stoll(std::string(digits));
      if (mult <= 0)
        fail(Errc::ParseError,
             "multiplicity must be positive in \"" + std::string(tok) + "\"");
      tok = tok.substr(0, caret);
    }
    out.add(Word::parse(tok), mult);
    saw_entry = true;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!saw_entry) fail(Errc::ParseError, "empty multiset");
  return out;
}

std::string WordMultiset::str() const {
  std::string s;
  for (const auto& [w, m] : counts_) {
    if (!s.empty()) s.push_back(',');
    s += w.str();
    if (m != 1) {
      s.push_back('^');
      s += std::to_string(m);
    }
  }
  return s;
}

void WordMultiset::add(const Word& w, long long mult) {
  if (w.empty()) fail(Errc::EmptyWord, "cannot add the empty word");
  if (mult <= 0) fail(Errc::ParseError, "multiplicity must be positive");
  counts_[w.least_rotation()] += mult;
}

long long WordMultiset::total_dim() const {
  long long d = 0;
  for (const auto& [w, m] : counts_) d += static_cast<long long>(w.size()) * m;
  return d;
}

bool WordMultiset::all_primitive() const {
  for (const auto& [w, m] : counts_)
    if (!w.primitive()) return false;
  return true;
}

void WordMultiset::require_primitive() const {
  for (const auto& [w, m] : counts_)
    if (!w.primitive())
      fail(Errc::NotPrimitiveMultiset, "non-primitive entry " + w.str());
}

WordMultiset WordMultiset::complement() const {
  WordMultiset out;
  for (const auto& [w, m] : counts_) out.add(w.complement(), m);
  return out;
}

bool WordMultiset::self_dual() const { return complement() == *this; }

WordMultiset WordMultiset::retract_primitive() const {
  WordMultiset out;
  for (const auto& [w, m] : counts_) {
    long long e = 1;
    Word root = w.primitive_root(&e);
    out.add(root, e * m);
  }
  return out;
}

}  // namespace bt1
