#include "bt1/kraft.hpp"

#include <algorithm>

namespace bt1 {

static void check_partial_injective(const std::vector<int>& map,
                                    const char* name) {
  std::vector<bool> hit(map.size(), false);
  for (int t : map) {
    if (t < 0) continue;
    if (static_cast<std::size_t>(t) >= map.size() || hit[t])
      fail(Errc::ParseError,
           std::string(name) + " map is not an injective partial map");
    hit[t] = true;
  }
}

KraftModule::KraftModule(std::vector<int> fmap, std::vector<int> vmap) {
  if (fmap.size() != vmap.size())
    fail(Errc::ParseError, "F and V maps must cover the same basis");
  fmap_ = std::move(fmap);
  vmap_ = std::move(vmap);
  check_partial_injective(fmap_, "F");
  check_partial_injective(vmap_, "V");
  labels_.reserve(dim());
  for (std::uint32_t b = 0; b < dim(); ++b) labels_.push_back({1, b, 1});
}

KraftModule KraftModule::build(const WordMultiset& m) {
  KraftModule mod;
  mod.source_ = m;
  const long long dim = m.total_dim();
  mod.fmap_.assign(static_cast<std::size_t>(dim), -1);
  mod.vmap_.assign(static_cast<std::size_t>(dim), -1);
  mod.labels_.reserve(static_cast<std::size_t>(dim));
  int base = 0;
  std::uint32_t word_idx = 0;
  for (const auto& [w, mult] : m.counts()) {
    ++word_idx;
    const int n = static_cast<int>(w.size());
    for (long long c = 1; c <= mult; ++c) {
      for (int j = 0; j < n; ++j) {
        mod.labels_.push_back(
            {word_idx, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(c)});
        if (w.u(static_cast<std::size_t>(j)) == Letter::F)
          mod.fmap_[static_cast<std::size_t>(base + j)] = base + (j + 1) % n;
        else
          mod.vmap_[static_cast<std::size_t>(base + (j + 1) % n)] = base + j;
      }
      base += n;
    }
  }
  return mod;
}

bool KraftModule::chain_condition() const {
  std::vector<bool> im_f(dim(), false), im_v(dim(), false);
  for (std::size_t b = 0; b < dim(); ++b) {
    if (fmap_[b] >= 0) im_f[static_cast<std::size_t>(fmap_[b])] = true;
    if (vmap_[b] >= 0) im_v[static_cast<std::size_t>(vmap_[b])] = true;
  }
  for (std::size_t b = 0; b < dim(); ++b) {
    if ((fmap_[b] < 0) != im_v[b]) return false;  // Ker F vs Im V
    if ((vmap_[b] < 0) != im_f[b]) return false;  // Ker V vs Im F
  }
  return true;
}

Subspace KraftModule::f_image(const Subspace& n) const {
  Subspace out;
  for (std::uint32_t b : n)
    if (fmap_[b] >= 0) out.push_back(static_cast<std::uint32_t>(fmap_[b]));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace KraftModule::v_preimage(const Subspace& n) const {
  Subspace out;
  for (std::uint32_t b = 0; b < dim(); ++b) {
    const int t = vmap_[b];
    if (t < 0 || std::binary_search(n.begin(), n.end(),
                                    static_cast<std::uint32_t>(t)))
      out.push_back(b);
  }
  return out;
}

Subspace KraftModule::full() const {
  Subspace out(dim());
  for (std::uint32_t b = 0; b < dim(); ++b) out[b] = b;
  return out;
}

PartitionedPermutation KraftModule::induced_perm() const {
  std::vector<int> v_preimg(dim(), -1);
  for (std::size_t b = 0; b < dim(); ++b)
    if (vmap_[b] >= 0) v_preimg[static_cast<std::size_t>(vmap_[b])] = static_cast<int>(b);
  std::vector<long long> labels;
  std::vector<Letter> tags;
  std::vector<std::uint32_t> perm;
  for (std::uint32_t b = 0; b < dim(); ++b) {
    labels.push_back(b);
    if (fmap_[b] >= 0) {
      tags.push_back(Letter::F);
      perm.push_back(static_cast<std::uint32_t>(fmap_[b]));
    } else {
      tags.push_back(Letter::V);
      if (v_preimg[b] < 0)
        fail(Errc::ChainNotTotal,
             "basis vector " + std::to_string(b) +
                 " is killed by F but not hit by V");
      perm.push_back(static_cast<std::uint32_t>(v_preimg[b]));
    }
  }
  return PartitionedPermutation::make(std::move(labels), std::move(tags),
                                      std::move(perm));
}

std::string KraftModule::dump() const {
  auto name = [&](int b) {
    if (b < 0) return std::string("0");
    const BasisLabel& l = labels_[static_cast<std::size_t>(b)];
    return "e(" + std::to_string(l.word) + "," + std::to_string(l.pos) + "," +
           std::to_string(l.copy) + ")";
  };
  std::string out;
  for (std::size_t b = 0; b < dim(); ++b)
    out += name(static_cast<int>(b)) + ": F-> " + name(fmap_[b]) + " ; V-> " +
           name(vmap_[b]) + "\n";
  return out;
}

}  // namespace bt1
