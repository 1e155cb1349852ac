#include "bt1/invariants.hpp"

#include <algorithm>

namespace bt1 {

long long p_rank(const WordMultiset& m) {
  m.require_primitive();
  auto it = m.counts().find(Word::parse("f"));
  return it == m.counts().end() ? 0 : it->second;
}

// Rotations of w that start with v and end with f: positions j with
// u_j = f, u_{j-1} = v.
static long long ascent_count(const Word& w) {
  const std::size_t n = w.size();
  long long c = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (w.u(j) == Letter::F && w.u((j + n - 1) % n) == Letter::V) ++c;
  return c;
}

long long a_number(const WordMultiset& m) {
  m.require_primitive();
  long long a = 0;
  for (const auto& [w, mult] : m.counts()) a += ascent_count(w) * mult;
  return a;
}

long long s11(const WordMultiset& m) {
  m.require_primitive();
  auto it = m.counts().find(Word::parse("fv"));
  return it == m.counts().end() ? 0 : it->second;
}

long long u11_word(const Word& w) {
  if (!w.primitive())
    fail(Errc::NotPrimitive, "u count needs a primitive word: " + w.str());
  if (!w.mixed()) return 0;
  auto pairs = w.exp_notation();
  const std::size_t r = pairs.size();

  // Rotate the block list so the first m exceeds 1, or failing that so the
  // last n exceeds 1; the alternating word fv admits neither and scores 1.
  std::size_t shift = r;
  for (std::size_t k = 0; k < r; ++k)
    if (pairs[k].first > 1) {
      shift = k;
      break;
    }
  if (shift == r) {
    for (std::size_t k = 0; k < r; ++k)
      if (pairs[k].second > 1) {
        shift = (k + 1) % r;
        break;
      }
    if (shift == r) return 1;  // all blocks are single letters: w = fv
  }
  std::rotate(pairs.begin(), pairs.begin() + static_cast<long>(shift),
              pairs.end());

  long long u = 0;
  for (std::size_t i = 0; i < r; ++i)
    if (pairs[i].first > 1 && pairs[i].second > 1) ++u;
  // Chains m_i > 1, then only single letters, closed by some n_j > 1.
  for (std::size_t i = 0; i < r; ++i) {
    if (pairs[i].first <= 1 || pairs[i].second != 1) continue;
    for (std::size_t j = i + 1; j < r; ++j) {
      if (pairs[j].first != 1) break;
      if (pairs[j].second > 1) {
        ++u;
        break;
      }
    }
  }
  return u;
}

long long u11(const WordMultiset& m) {
  m.require_primitive();
  long long u = 0;
  for (const auto& [w, mult] : m.counts()) u += u11_word(w) * mult;
  return u;
}

long long hom_dim_to_M11(const Word& w) {
  if (!w.primitive())
    fail(Errc::NotPrimitive, "hom dimension needs a primitive word");
  return u11_word(w) + ascent_count(w);
}

InvariantBundle invariants_from_words(const WordMultiset& m) {
  InvariantBundle b;
  b.g = m.total_dim() / 2;
  b.p_rank = p_rank(m);
  b.a = a_number(m);
  b.s11 = s11(m);
  b.u11 = u11(m);
  return b;
}

long long suffix_count(const PatternCounts& counts, const Word& t) {
  long long total = 0;
  for (const auto& [w, mult] : counts)
    if (w.ends_with(t)) total += mult;
  return total;
}

InvariantBundle invariants_from_multiplicities(const PatternCounts& counts,
                                               long long ell) {
  long long total = 0;
  for (const auto& [w, mult] : counts) {
    if (static_cast<long long>(w.size()) != ell)
      fail(Errc::InconsistentMultiplicities,
           "pattern " + w.str() + " does not have the table length");
    if (mult <= 0)
      fail(Errc::InconsistentMultiplicities,
           "pattern " + w.str() + " has a non-positive count");
    total += mult;
  }
  InvariantBundle b;
  b.g = total / 2;

  auto count_of = [&](const Word& w) {
    auto it = counts.find(w);
    return it == counts.end() ? 0LL : it->second;
  };

  std::vector<Letter> constant_f(static_cast<std::size_t>(ell), Letter::F);
  b.p_rank = count_of(Word(std::move(constant_f)));

  if (ell >= 2) {
    const long long after_f = suffix_count(counts, Word::parse("fv"));
    const long long after_v = suffix_count(counts, Word::parse("vf"));
    if (after_f != after_v)
      fail(Errc::InconsistentMultiplicities,
           "the two-letter suffix counts disagree: " +
               std::to_string(after_f) + " vs " + std::to_string(after_v));
    b.a = after_f;
  }

  if (ell % 2 == 0) b.s11 = count_of(Word::parse("fv").power(ell / 2));

  b.u11 = b.s11;
  for (long long j = 0; 2 * j + 4 <= ell; ++j) {
    std::string t = "vv";
    for (long long i = 0; i < j; ++i) t += "fv";
    t += "ff";
    b.u11 += suffix_count(counts, Word::parse(t));
  }
  return b;
}

std::pair<long long, long long> invariants_from_es(
    const ElementarySequence& es) {
  es.validate();
  long long f = 0;
  for (long long i = 1; i <= es.g(); ++i)
    if (es.psi[static_cast<std::size_t>(i - 1)] == i) f = i;
  const long long a = es.g() - (es.psi.empty() ? 0 : es.psi.back());
  return {f, a};
}

}  // namespace bt1
