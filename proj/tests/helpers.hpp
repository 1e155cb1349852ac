#pragma once

// Deliberately naive reference computations for the unit tests: everything
// here works on display strings with plain loops, so a library bug cannot
// hide behind shared code.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bt1/word.hpp"

namespace testutil {

// One right rotation of a display string: last letter to the front.
inline std::string rot1(const std::string& s) {
  if (s.size() < 2) return s;
  return s.back() + s.substr(0, s.size() - 1);
}

inline std::vector<std::string> all_rotation_strings(const std::string& s) {
  std::vector<std::string> out;
  std::string cur = s;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(cur);
    cur = rot1(cur);
  }
  return out;
}

inline std::string naive_least_rotation(const std::string& s) {
  const std::vector<std::string> rots = all_rotation_strings(s);
  return *std::min_element(rots.begin(), rots.end());
}

// A word is a proper power exactly when repeating a shorter prefix spells it.
inline bool naive_primitive(const std::string& s) {
  const std::size_t n = s.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (n % k != 0) continue;
    std::string rep;
    for (std::size_t i = 0; i < n / k; ++i) rep += s.substr(0, k);
    if (rep == s) return false;
  }
  return n > 0;
}

inline std::size_t naive_cyclic_breaks(const bt1::Word& w) {
  const std::size_t n = w.size();
  std::size_t c = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (w.u(j) != w.u((j + 1) % n)) ++c;
  return c;
}

// Ascents equal the cyclic occurrences of "fv" in the display string.
inline long long naive_ascents(const std::string& s) {
  const std::size_t n = s.size();
  long long c = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (s[k] == 'f' && s[(k + 1) % n] == 'v') ++c;
  return c;
}

// Block pairs of a mixed primitive word, straight from the documented rule:
// take the least rotation that begins with v and ends with f, split it into
// letter runs, and pair each f-run with the v-run before it, last run first.
inline std::vector<std::pair<long long, long long>> naive_exp_notation(
    const bt1::Word& w) {
  std::vector<std::string> candidates;
  for (const std::string& r : all_rotation_strings(w.str()))
    if (r.front() == 'v' && r.back() == 'f') candidates.push_back(r);
  const std::string s =
      *std::min_element(candidates.begin(), candidates.end());

  std::vector<std::pair<char, long long>> runs;
  for (char c : s) {
    if (!runs.empty() && runs.back().first == c)
      ++runs.back().second;
    else
      runs.emplace_back(c, 1);
  }
  std::vector<std::pair<long long, long long>> pairs;
  for (std::size_t i = runs.size(); i >= 2; i -= 2)
    pairs.emplace_back(runs[i - 1].second, runs[i - 2].second);
  return pairs;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace testutil
