#include "bt1/eo.hpp"

#include <algorithm>
#include <set>

namespace bt1 {

void ElementarySequence::validate() const {
  long long prev = 0;
  for (long long v : psi) {
    if (v != prev && v != prev + 1)
      fail(Errc::ParseError,
           "sequence must repeat or increment its previous value");
    prev = v;
  }
}

void RunLengthEO::normalize() {
  std::vector<Run> out;
  for (const Run& r : runs) {
    if (r.len == 0) continue;
    if (!out.empty() && out.back().up == r.up)
      out.back().len += r.len;
    else
      out.push_back(r);
  }
  runs = std::move(out);
}

RunLengthEO RunLengthEO::from_psi(const ElementarySequence& es) {
  es.validate();
  RunLengthEO rle;
  long long prev = 0;
  for (long long v : es.psi) {
    rle.runs.push_back({v == prev + 1, 1});
    prev = v;
  }
  rle.normalize();
  return rle;
}

ElementarySequence RunLengthEO::expand() const {
  ElementarySequence es;
  long long val = 0;
  for (const Run& r : runs)
    for (long long i = 0; i < r.len; ++i) {
      if (r.up) ++val;
      es.psi.push_back(val);
    }
  return es;
}

long long RunLengthEO::total() const {
  long long t = 0;
  for (const Run& r : runs) t += r.len;
  return t;
}

RunLengthEO RunLengthEO::parse(std::string_view s) {
  RunLengthEO rle;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char dir = s[pos];
    if (dir != 'u' && dir != 'c')
      fail(Errc::ParseError, "run must start with 'u' or 'c'");
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
    if (end == pos) fail(Errc::ParseError, "run is missing its length");
    rle.runs.push_back({dir == 'u', std::stoll(std::string(s.substr(pos, end - pos)))});
    pos = end;
    if (pos < s.size()) {
      if (s[pos] != ',') fail(Errc::ParseError, "runs must be comma-separated");
      ++pos;
      if (pos == s.size()) fail(Errc::ParseError, "trailing comma");
    }
  }
  rle.normalize();
  return rle;
}

std::string RunLengthEO::str() const {
  std::string out;
  for (const Run& r : runs) {
    if (!out.empty()) out.push_back(',');
    out.push_back(r.up ? 'u' : 'c');
    out += std::to_string(r.len);
  }
  return out;
}

static std::string superscript(long long n) {
  static const char* digits[10] = {"⁰", "¹", "²", "³",
                                   "⁴", "⁵", "⁶", "⁷",
                                   "⁸", "⁹"};
  std::string plain = std::to_string(n);
  std::string out;
  for (char c : plain) out += digits[c - '0'];
  return out;
}

std::string RunLengthEO::pretty() const {
  std::string out = "[";
  for (const Run& r : runs) {
    out += r.up ? "↗" : "→";
    out += superscript(r.len);
  }
  out += "]";
  return out;
}

ElementarySequence es_from_canonical(const CanonicalType& ct) {
  ct.validate();
  if (!ct.self_dual())
    fail(Errc::NotSelfDual,
         "only self-dual types define an elementary sequence");
  ElementarySequence es;
  long long val = 0;
  for (long long i = 1; i <= ct.r; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    const bool up = ct.phi[ii] > ct.phi[ii - 1];
    for (long long c = 0; c < ct.mu(i - 1); ++c) {
      if (up) ++val;
      es.psi.push_back(val);
    }
  }
  return es;
}

CanonicalType canonical_from_es(const ElementarySequence& es) {
  es.validate();
  const long long g = es.g();
  // Dimension maps on the full flag 0..2g: cap(j) is the image dimension
  // under F (the sequence extended by duality), and g + j - cap(j) is the
  // V-preimage dimension.
  auto cap = [&](long long j) {
    if (j <= g) return j == 0 ? 0LL : es.psi[static_cast<std::size_t>(j - 1)];
    const long long k = 2 * g - j;
    return (k == 0 ? 0LL : es.psi[static_cast<std::size_t>(k - 1)]) + j - g;
  };
  auto vpre = [&](long long j) { return g + j - cap(j); };

  std::set<long long> dims{0, 2 * g};
  std::vector<long long> todo{0, 2 * g};
  while (!todo.empty()) {
    const long long j = todo.back();
    todo.pop_back();
    for (long long t : {cap(j), vpre(j)})
      if (dims.insert(t).second) todo.push_back(t);
  }

  CanonicalType ct;
  ct.rho.assign(dims.begin(), dims.end());
  ct.s = static_cast<long long>(ct.rho.size()) - 1;
  std::map<long long, long long> index;
  for (long long i = 0; i <= ct.s; ++i) index[ct.rho[static_cast<std::size_t>(i)]] = i;
  for (long long i = 0; i <= ct.s; ++i) {
    const long long d = ct.rho[static_cast<std::size_t>(i)];
    ct.phi.push_back(index.at(cap(d)));
    ct.nu.push_back(index.at(vpre(d)));
  }
  ct.r = ct.phi.back();
  ct.validate();
  return ct;
}

}  // namespace bt1
