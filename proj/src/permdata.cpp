#include "bt1/permdata.hpp"

#include <algorithm>
#include <numeric>

namespace bt1 {

PartitionedPermutation PartitionedPermutation::make(
    std::vector<long long> labels, std::vector<Letter> tags,
    std::vector<std::uint32_t> perm) {
  const std::size_t n = labels.size();
  if (tags.size() != n || perm.size() != n)
    fail(Errc::ParseError, "labels, tags and perm must have equal sizes");
  PartitionedPermutation p;
  p.labels_ = std::move(labels);
  p.tags_ = std::move(tags);
  p.perm_ = std::move(perm);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.labels_[i], static_cast<std::uint32_t>(i)).second)
      fail(Errc::ParseError,
           "duplicate element label " + std::to_string(p.labels_[i]));
  }
  std::vector<bool> hit(n, false);
  for (std::uint32_t t : p.perm_) {
    if (t >= n || hit[t])
      fail(Errc::ParseError, "perm is not a bijection on the elements");
    hit[t] = true;
  }
  return p;
}

std::size_t PartitionedPermutation::index_of(long long label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    fail(Errc::UnknownElement, "no element " + std::to_string(label));
  return it->second;
}

Word PartitionedPermutation::orbit_word_at(std::size_t idx) const {
  std::vector<Letter> letters;
  std::size_t j = idx;
  do {
    letters.push_back(tags_[j]);
    j = perm_[j];
  } while (j != idx);
  // letters[t] = tag of π^t(a) = u_t; the display string wants u_{λ-1} first.
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

Word PartitionedPermutation::orbit_word(long long label) const {
  return orbit_word_at(index_of(label));
}

std::vector<std::vector<std::uint32_t>> PartitionedPermutation::orbits() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> cyc;
    std::uint32_t j = i;
    do {
      seen[j] = true;
      cyc.push_back(j);
      j = perm_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

WordMultiset PartitionedPermutation::to_words() const {
  WordMultiset m;
  for (const auto& cyc : orbits()) m.add(orbit_word_at(cyc[0]));
  return m;
}

bool PartitionedPermutation::admissible() const {
  for (const auto& cyc : orbits())
    if (!orbit_word_at(cyc[0]).primitive()) return false;
  return true;
}

bool PartitionedPermutation::self_dual_words() const {
  return to_words().self_dual();
}

bool PartitionedPermutation::self_dual_matching() const {
  // Group orbits by the cyclic word they spell, then try to pair every orbit
  // with word w against an orbit with word w^c, aligning base points so that
  // ι(π^j x) = π^j y transports tags to their complements.
  std::map<Word, std::vector<std::vector<std::uint32_t>>> groups;
  for (auto& cyc : orbits())
    groups[orbit_word_at(cyc[0]).least_rotation()].push_back(std::move(cyc));

  std::vector<std::uint32_t> iota(size());
  for (const auto& [rep, cycles] : groups) {
    const Word crep = rep.complement().least_rotation();
    auto it = groups.find(crep);
    if (it == groups.end() || it->second.size() != cycles.size()) return false;
    for (std::size_t t = 0; t < cycles.size(); ++t) {
      const auto& src = cycles[t];
      const auto& dst = it->second[t];
      if (dst.size() != src.size()) return false;
      // Find a base point in dst whose forward word is the complement of the
      // forward word from src[0].
      const Word want = orbit_word_at(src[0]).complement();
      std::size_t base = dst.size();
      for (std::size_t b = 0; b < dst.size(); ++b) {
        if (orbit_word_at(dst[b]) == want) {
          base = b;
          break;
        }
      }
      if (base == dst.size()) return false;
      for (std::size_t j = 0; j < src.size(); ++j)
        iota[src[j]] = dst[(base + j) % dst.size()];
    }
  }
  // Verify the constructed map really is a tag-swapping bijection commuting
  // with the permutation; this is the actual test.
  std::vector<bool> hit(size(), false);
  for (std::size_t x = 0; x < size(); ++x) {
    const std::uint32_t y = iota[x];
    if (hit[y]) return false;
    hit[y] = true;
    if (tags_[y] != flip(tags_[x])) return false;
    if (iota[perm_[x]] != perm_[y]) return false;
  }
  return true;
}

PartitionedPermutation PartitionedPermutation::canonical_form() const {
  // Sort orbits by (cyclic word, size); within an orbit start from the
  // element whose forward word is smallest, so relabeling is intrinsic.
  struct Item {
    Word key;
    std::vector<std::uint32_t> cyc;  // rotated to the chosen base point
  };
  std::vector<Item> items;
  for (const auto& cyc : orbits()) {
    std::size_t best = 0;
    Word best_word = orbit_word_at(cyc[0]);
    for (std::size_t b = 1; b < cyc.size(); ++b) {
      Word w = orbit_word_at(cyc[b]);
      if (w < best_word) {
        best_word = std::move(w);
        best = b;
      }
    }
    Item it;
    it.key = std::move(best_word);
    for (std::size_t j = 0; j < cyc.size(); ++j)
      it.cyc.push_back(cyc[(best + j) % cyc.size()]);
    items.push_back(std::move(it));
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.key < b.key; });

  std::vector<long long> labels;
  std::vector<Letter> tags;
  std::vector<std::uint32_t> perm;
  std::vector<std::uint32_t> newpos(size());
  std::uint32_t next = 0;
  for (const auto& it : items)
    for (std::uint32_t old : it.cyc) newpos[old] = next++;
  labels.resize(size());
  tags.resize(size());
  perm.resize(size());
  for (std::uint32_t old = 0; old < size(); ++old) {
    const std::uint32_t now = newpos[old];
    labels[now] = now;
    tags[now] = tags_[old];
    perm[now] = newpos[perm_[old]];
  }
  return make(std::move(labels), std::move(tags), std::move(perm));
}

bool isomorphic(const PartitionedPermutation& a,
                const PartitionedPermutation& b) {
  return a.canonical_form() == b.canonical_form();
}

PartitionedPermutation words_to_perm(const WordMultiset& m) {
  std::vector<long long> labels;
  std::vector<Letter> tags;
  std::vector<std::uint32_t> perm;
  std::uint32_t next = 0;
  for (const auto& [w, mult] : m.counts()) {
    const std::uint32_t n = static_cast<std::uint32_t>(w.size());
    for (long long c = 0; c < mult; ++c) {
      // Positions j = 0..n-1 of one copy; the forward word from position 0
      // is w itself, so tag(j) = u_j and π advances j by one.
      for (std::uint32_t j = 0; j < n; ++j) {
        labels.push_back(next + j);
        tags.push_back(w.u(j));
        perm.push_back(next + (j + 1) % n);
      }
      next += n;
    }
  }
  return PartitionedPermutation::make(std::move(labels), std::move(tags),
                                      std::move(perm));
}

}  // namespace bt1
