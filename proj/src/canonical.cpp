#include "bt1/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bt1 {

CanonicalType CanonicalType::trivial_type() {
  CanonicalType t;
  t.s = 0;
  t.r = 0;
  t.phi = {0};
  t.nu = {0};
  t.rho = {0};
  return t;
}

static void reject(const std::string& why) {
  fail(Errc::InvalidCanonicalType, why);
}

void CanonicalType::validate() const {
  const std::size_t n = static_cast<std::size_t>(s) + 1;
  if (s < 0 || r < 0 || r > s) reject("need 0 <= r <= s");
  if (phi.size() != n || nu.size() != n || rho.size() != n)
    reject("phi, nu, rho must have s+1 entries");
  if (phi[0] != 0 || phi[static_cast<std::size_t>(s)] != r)
    reject("phi must run from 0 to r");
  if (nu[0] != r || nu[static_cast<std::size_t>(s)] != s)
    reject("nu must run from r to s");
  if (rho[0] != 0) reject("rho(0) must be 0");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const long long dphi = phi[i + 1] - phi[i];
    const long long dnu = nu[i + 1] - nu[i];
    if (dphi != 0 && dphi != 1) reject("phi must advance by 0 or 1");
    if (dnu != 0 && dnu != 1) reject("nu must advance by 0 or 1");
    if ((dnu == 1) != (dphi == 0))
      reject("exactly one of phi, nu must advance at each step");
    if (rho[i + 1] <= rho[i]) reject("rho must be strictly increasing");
    if (nu[i] + phi[i] != r + static_cast<long long>(i))
      reject("nu(i) + phi(i) must equal r + i");
  }
  // Block-width transport: each step has the width of the step it maps to.
  for (long long i = 1; i <= s; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const long long target = nu[ii] > nu[ii - 1] ? nu[ii] : phi[ii];
    if (mu(i - 1) != mu(target - 1))
      reject("block widths must transport along phi/nu");
  }
  // Reachability: iterating phi and nu from s must visit every index 1..s.
  std::vector<bool> seen(n, false);
  std::vector<long long> todo{s};
  seen[static_cast<std::size_t>(s)] = true;
  while (!todo.empty()) {
    const std::size_t i = static_cast<std::size_t>(todo.back());
    todo.pop_back();
    for (long long t : {phi[i], nu[i]}) {
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        todo.push_back(t);
      }
    }
  }
  for (long long t = 1; t <= s; ++t)
    if (!seen[static_cast<std::size_t>(t)])
      reject("index " + std::to_string(t) + " unreachable from s");
}

std::pair<Filtration, CanonicalType> canonical_filtration_oracle(
    const KraftModule& m) {
  const std::size_t bound = 2 * m.dim() + 2;
  std::set<Subspace> pool{Subspace{}, m.full()};
  std::vector<Subspace> todo(pool.begin(), pool.end());
  while (!todo.empty()) {
    const Subspace n = std::move(todo.back());
    todo.pop_back();
    for (Subspace next : {m.f_image(n), m.v_preimage(n)}) {
      if (pool.insert(next).second) {
        if (pool.size() > bound)
          fail(Errc::ChainNotTotal, "subspace closure exceeded its bound");
        todo.push_back(std::move(next));
      }
    }
  }
  Filtration filt;
  filt.steps.assign(pool.begin(), pool.end());
  std::sort(filt.steps.begin(), filt.steps.end(),
            [](const Subspace& a, const Subspace& b) {
              return a.size() < b.size();
            });
  std::map<Subspace, long long> index;
  for (std::size_t i = 0; i < filt.steps.size(); ++i) {
    if (i + 1 < filt.steps.size()) {
      const Subspace& a = filt.steps[i];
      const Subspace& b = filt.steps[i + 1];
      if (a.size() == b.size() ||
          !std::includes(b.begin(), b.end(), a.begin(), a.end()))
        fail(Errc::ChainNotTotal,
             "collected subspaces do not form a single chain");
    }
    index[filt.steps[i]] = static_cast<long long>(i);
  }

  CanonicalType ct;
  ct.s = static_cast<long long>(filt.steps.size()) - 1;
  for (const Subspace& n : filt.steps) {
    ct.phi.push_back(index.at(m.f_image(n)));
    ct.nu.push_back(index.at(m.v_preimage(n)));
    ct.rho.push_back(static_cast<long long>(n.size()));
  }
  ct.r = ct.phi.back();
  ct.validate();
  return {std::move(filt), std::move(ct)};
}

WordsCanonicalResult words_to_canonical(const WordMultiset& m) {
  WordsCanonicalResult out;
  if (m.empty()) {
    out.type = CanonicalType::trivial_type();
    return out;
  }
  long long ell = 1;
  for (const auto& [w, mult] : m.counts()) {
    ell = std::lcm(ell, static_cast<long long>(w.size()));
    if (ell > 4'000'000)
      fail(Errc::ParseError, "common power length of the multiset is too large");
  }
  std::map<Word, long long> sigma;
  for (const auto& [w, mult] : m.counts()) {
    const long long e = ell / static_cast<long long>(w.size());
    for (const Word& rot : w.all_rotations()) sigma[rot.power(e)] += mult;
  }

  CanonicalType& ct = out.type;
  ct.s = static_cast<long long>(sigma.size());
  ct.r = 0;
  for (const auto& [w, cnt] : sigma)
    if (w.u(0) == Letter::F) ++ct.r;
  long long ends_f = 0, ends_v = 0, total = 0;
  ct.phi.push_back(0);
  ct.nu.push_back(ct.r);
  ct.rho.push_back(0);
  for (const auto& [w, cnt] : sigma) {
    out.omega.push_back(w);
    out.counts.push_back(cnt);
    (w.u(0) == Letter::F ? ends_f : ends_v) += 1;
    total += cnt;
    ct.phi.push_back(ends_f);
    ct.nu.push_back(ct.r + ends_v);
    ct.rho.push_back(total);
  }
  ct.validate();
  return out;
}

PartitionedPermutation canonical_to_perm(const CanonicalType& ct) {
  ct.validate();
  std::vector<long long> labels;
  std::vector<Letter> tags;
  std::vector<std::uint32_t> perm;
  for (long long i = 0; i < ct.s; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const bool f_step = ct.phi[ii + 1] > ct.phi[ii];
    const long long target = f_step ? ct.phi[ii] : ct.nu[ii];
    if (ct.mu(i) != ct.mu(target))
      fail(Errc::InvalidCanonicalType,
           "block widths are not constant along the step permutation");
    // Block i occupies labels rho(i) .. rho(i+1)-1; copy c maps to copy c.
    for (long long c = 0; c < ct.mu(i); ++c) {
      labels.push_back(ct.rho[ii] + c);
      tags.push_back(f_step ? Letter::F : Letter::V);
      perm.push_back(static_cast<std::uint32_t>(
          ct.rho[static_cast<std::size_t>(target)] + c));
    }
  }
  return PartitionedPermutation::make(std::move(labels), std::move(tags),
                                      std::move(perm));
}

CanonicalType dual_canonical(const CanonicalType& ct) {
  ct.validate();
  CanonicalType d;
  d.s = ct.s;
  d.r = ct.s - ct.r;
  for (long long i = 0; i <= ct.s; ++i) {
    const std::size_t m = static_cast<std::size_t>(ct.s - i);
    d.phi.push_back(ct.s - ct.nu[m]);
    d.nu.push_back(ct.s - ct.phi[m]);
    d.rho.push_back(ct.rho.back() - ct.rho[m]);
  }
  d.validate();
  return d;
}

bool CanonicalType::self_dual() const { return *this == dual_canonical(*this); }

bool is_self_dual(const WordMultiset& m) { return m.self_dual(); }

}  // namespace bt1
