#include "bt1/fermat.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace bt1 {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long long multiplicative_order(long long p, long long d) {
  if (d <= 2) return 1;
  long long x = p % d, ord = 1;
  while (x != 1) {
    x = (x * p) % d;
    ++ord;
  }
  return ord;
}

mpz_class pow_mpz(long long base, long long exp) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return z;
}

static long long checked_ll(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p())
    fail(Errc::ParseError, std::string(what) + " exceeds the machine range");
  return z.get_si();
}

// gmpxx has no long long overloads; every value here fits a long.
static mpz_class mpz_of(long long v) {
  return mpz_class(static_cast<long>(v));
}

FermatSpec build_spec(long long p, long long d, CurveKind kind) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (d < 1) fail(Errc::ParseError, "degree must be a positive integer");
  if (d % p == 0)
    fail(Errc::NotCoprime, "characteristic " + std::to_string(p) +
                               " divides the degree " + std::to_string(d));
  FermatSpec spec;
  spec.p = p;
  spec.d = d;
  spec.kind = kind;
  spec.ell = multiplicative_order(p, d);
  spec.genus = kind == CurveKind::Quotient ? (d - 1) / 2
                                           : (d - 1) * (d - 2) / 2;
  return spec;
}

std::vector<long long> FermatSpec::elements() const {
  std::vector<long long> out;
  if (kind == CurveKind::Quotient) {
    for (long long a = 1; a < d; ++a)
      if (2 * a != d) out.push_back(a);
  } else {
    for (long long a = 1; a < d; ++a)
      for (long long b = 1; b < d; ++b)
        if (a + b != d) out.push_back(a * d + b);
  }
  return out;
}

bool FermatSpec::contains(long long x) const {
  if (kind == CurveKind::Quotient) return 0 < x && x < d && 2 * x != d;
  const long long a = x / d, b = x % d;
  return 0 < a && a < d && 0 < b && a + b != d;
}

bool FermatSpec::tag_f(long long x) const {
  if (kind == CurveKind::Quotient) return 2 * x > d;
  return x / d + x % d > d;
}

long long FermatSpec::step(long long x) const {
  if (kind == CurveKind::Quotient) return (p * x) % d;
  return (p * (x / d) % d) * d + (p * (x % d)) % d;
}

Word FermatSpec::pattern(long long x) const {
  if (!contains(x))
    fail(Errc::UnknownElement,
         std::to_string(x) + " is not a basis element for degree " +
             std::to_string(d));
  std::vector<Letter> letters(static_cast<std::size_t>(ell));
  long long cur = x;
  for (long long j = 0; j < ell; ++j) {
    letters[static_cast<std::size_t>(ell - 1 - j)] =
        tag_f(cur) ? Letter::F : Letter::V;
    cur = step(cur);
  }
  return Word(std::move(letters));
}

PartitionedPermutation perm_data(const FermatSpec& spec) {
  const auto labels = spec.elements();
  std::map<long long, std::uint32_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    index.emplace(labels[i], static_cast<std::uint32_t>(i));
  std::vector<Letter> tags;
  std::vector<std::uint32_t> perm;
  tags.reserve(labels.size());
  perm.reserve(labels.size());
  for (long long x : labels) {
    tags.push_back(spec.tag_f(x) ? Letter::F : Letter::V);
    perm.push_back(index.at(spec.step(x)));
  }
  return PartitionedPermutation::make(labels, std::move(tags),
                                      std::move(perm));
}

WordMultiset word_multiset(const FermatSpec& spec) {
  WordMultiset out;
  std::unordered_set<long long> seen;
  for (long long start : spec.elements()) {
    if (seen.count(start)) continue;
    std::vector<Letter> forward;
    long long cur = start;
    do {
      seen.insert(cur);
      forward.push_back(spec.tag_f(cur) ? Letter::F : Letter::V);
      cur = spec.step(cur);
    } while (cur != start);
    std::reverse(forward.begin(), forward.end());
    out.add(Word(std::move(forward)));
  }
  return out.retract_primitive();
}

PatternCounts pattern_table(const FermatSpec& spec) {
  PatternCounts table;
  for (long long x : spec.elements()) ++table[spec.pattern(x)];
  return table;
}

std::pair<RunLengthEO, PatternCounts> eo_type(const FermatSpec& spec) {
  PatternCounts table = pattern_table(spec);
  RunLengthEO eo;
  for (const auto& [w, mu] : table) {
    if (w.u(w.size() - 1) != Letter::F) continue;  // keep f-starting words
    eo.runs.push_back({w.u(0) == Letter::F, mu});
  }
  eo.normalize();
  return {std::move(eo), std::move(table)};
}

static void require_odd_prime(long long p) {
  if (p == 2) fail(Errc::UseP2Module, "characteristic 2 has its own formulas");
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
}

long long a_number_closed(long long p, long long d) {
  require_odd_prime(p);
  if (d <= 2) fail(Errc::RationalCurve, "degree <= 2 gives a rational curve");
  if (d % p == 0)
    fail(Errc::NotCoprime, "characteristic " + std::to_string(p) +
                               " divides the degree " + std::to_string(d));
  long long a = 0;
  for (long long j = 1; j <= (p - 1) / 2; ++j)
    a += 2 * j * d / (2 * p) - (2 * j - 1) * d / (2 * p);
  return a;
}

static void check_divisibility_args(long long p, long long d) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (d <= 2) fail(Errc::RationalCurve, "degree <= 2 gives a rational curve");
  if (d % p == 0)
    fail(Errc::NotCoprime, "characteristic " + std::to_string(p) +
                               " divides the degree " + std::to_string(d));
}

bool is_ordinary(long long p, long long d) {
  check_divisibility_args(p, d);
  return (p - 1) % d == 0;
}

bool is_superspecial(long long p, long long d) {
  check_divisibility_args(p, d);
  return (p + 1) % d == 0;
}

mpz_class encompassing_mu(long long p, long long ell, const Word& w) {
  require_odd_prime(p);
  if (ell < 1 || static_cast<long long>(w.size()) != ell)
    fail(Errc::ParseError, "pattern length must equal the word length");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  if (!w.mixed()) return pow_mpz(q, ell) - 2;
  const long long k = static_cast<long long>(w.break_count());
  return pow_mpz(r, k) * pow_mpz(q, ell - k);
}

// Maximal same-letter blocks of w, scanned left to right.
static long long block_count(const Word& w) {
  long long blocks = 1;
  const auto& s = w.letters();
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] != s[i - 1]) ++blocks;
  return blocks;
}

mpz_class encompassing_suffix_mu(long long p, long long ell, const Word& t) {
  require_odd_prime(p);
  const long long s = static_cast<long long>(t.size());
  if (s < 1 || s > ell)
    fail(Errc::ParseError, "suffix length must be between 1 and the pattern length");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  const long long K = block_count(t);
  if (K == 1)
    return pow_mpz(q, s - 1) * ((pow_mpz(p, ell + 1 - s) + 1) / 2) - 2;
  const mpz_class tail = K % 2 == 0
                             ? mpz_class((pow_mpz(p, ell + 1 - s) - 1) / 2)
                             : mpz_class((pow_mpz(p, ell + 1 - s) + 1) / 2);
  return pow_mpz(q, s - K) * pow_mpz(r, K - 1) * tail;
}

PatternCounts encompassing_digit_table(long long p, long long ell) {
  require_odd_prime(p);
  mpz_class total = pow_mpz(p, ell);
  if (ell < 1 || total > 10'000'000)
    fail(Errc::ParseError, "digit enumeration is limited to small cases");
  const long long n = total.get_si();
  const long long mid = (p - 1) / 2;

  PatternCounts table;
  std::vector<long long> digit(static_cast<std::size_t>(ell));
  for (long long value = 0; value < n; ++value) {
    long long v = value;
    bool all0 = true, allmax = true, allmid = true;
    for (long long m = 0; m < ell; ++m) {
      digit[static_cast<std::size_t>(m)] = v % p;
      v /= p;
      all0 = all0 && digit[static_cast<std::size_t>(m)] == 0;
      allmax = allmax && digit[static_cast<std::size_t>(m)] == p - 1;
      allmid = allmid && digit[static_cast<std::size_t>(m)] == mid;
    }
    if (all0 || allmax || allmid) continue;
    // Letter u_j of this element is the sign of the first digit != mid in
    // the cyclically descending scan from position ell-1-j.
    std::vector<Letter> letters(static_cast<std::size_t>(ell));
    for (long long j = 0; j < ell; ++j) {
      long long m = (ell - 1 - j) % ell;
      while (digit[static_cast<std::size_t>(m)] == mid) m = (m + ell - 1) % ell;
      letters[static_cast<std::size_t>(ell - 1 - j)] =
          digit[static_cast<std::size_t>(m)] > mid ? Letter::F : Letter::V;
    }
    ++table[Word(std::move(letters))];
  }
  return table;
}

RunLengthEO encompassing_eo(long long p, long long ell) {
  require_odd_prime(p);
  if (ell < 1 || ell > 24)
    fail(Errc::ParseError, "run enumeration is limited to length 24");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  RunLengthEO eo;
  for (std::uint64_t i = 0; i < (1ull << (ell - 1)); ++i) {
    const long long k = flip_count(i) + static_cast<long long>(i % 2);
    mpz_class len = pow_mpz(r, k) * pow_mpz(q, ell - k);
    if (i == 0) len -= 2;
    eo.runs.push_back({i % 2 == 0, checked_ll(len, "run length")});
  }
  eo.normalize();
  return eo;
}

ExactBundle encompassing_invariants(long long p, long long ell) {
  require_odd_prime(p);
  if (ell < 1) fail(Errc::ParseError, "the exponent must be positive");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  ExactBundle b;
  b.g = (pow_mpz(p, ell) - 3) / 2;
  b.p_rank = pow_mpz(q, ell) - 2;
  b.a = mpz_of(r) * ((pow_mpz(p, ell - 1) - 1) / 2);
  b.s11 = ell % 2 == 0 ? pow_mpz(r, ell) : 0;
  b.u11 = b.s11;
  for (long long j = 0; 2 * j + 4 <= ell; ++j)
    b.u11 += pow_mpz(q, 2) * pow_mpz(r, 2 * j + 1) *
             ((pow_mpz(p, ell - 3 - 2 * j) - 1) / 2);
  return b;
}

mpz_class hermitian_mu_half(long long p, long long lambda, const Word& t) {
  require_odd_prime(p);
  if (lambda < 1 || static_cast<long long>(t.size()) != lambda)
    fail(Errc::ParseError, "half-pattern length must equal the word length");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  const long long K = block_count(t);
  if (K % 2 == 1) return pow_mpz(q, lambda - K) * pow_mpz(r, K);
  return pow_mpz(q, lambda + 1 - K) * pow_mpz(r, K - 1);
}

mpz_class hermitian_suffix_mu(long long p, long long lambda, const Word& t) {
  require_odd_prime(p);
  const long long s = static_cast<long long>(t.size());
  if (s < 1 || s > lambda)
    fail(Errc::ParseError,
         "suffix length must be between 1 and the half-pattern length");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  const long long K = block_count(t);
  const mpz_class tail =
      K % 2 == 1 ? mpz_class((pow_mpz(p, lambda + 1 - s) - 1) / 2)
                 : mpz_class((pow_mpz(p, lambda + 1 - s) + 1) / 2);
  return pow_mpz(q, s - K) * pow_mpz(r, K - 1) * tail;
}

RunLengthEO hermitian_eo(long long p, long long lambda) {
  require_odd_prime(p);
  if (lambda < 1 || lambda > 24)
    fail(Errc::ParseError, "run enumeration is limited to length 24");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  RunLengthEO eo;
  for (std::uint64_t i = 0; i < (1ull << (lambda - 1)); ++i) {
    const long long k = flip_count(i);
    const mpz_class len = i % 2 == 0
                              ? pow_mpz(q, lambda - k - 1) * pow_mpz(r, k + 1)
                              : pow_mpz(q, lambda - k) * pow_mpz(r, k);
    eo.runs.push_back({i % 2 == 1, checked_ll(len, "run length")});
  }
  eo.normalize();
  return eo;
}

ExactBundle hermitian_invariants(long long p, long long lambda) {
  require_odd_prime(p);
  if (lambda < 1) fail(Errc::ParseError, "the exponent must be positive");
  const long long q = (p + 1) / 2, r = (p - 1) / 2;
  ExactBundle b;
  b.g = (pow_mpz(p, lambda) - 1) / 2;
  b.p_rank = 0;
  b.a = mpz_of(r) * ((pow_mpz(p, lambda - 1) + 1) / 2);
  b.s11 = lambda % 2 == 1 ? pow_mpz(r, lambda) : 0;
  b.u11 = b.s11;
  for (long long j = 0; 2 * j + 4 <= lambda; ++j)
    b.u11 += pow_mpz(q, 2) * pow_mpz(r, 2 * j + 1) *
             ((pow_mpz(p, lambda - 3 - 2 * j) + 1) / 2);
  if (lambda > 1)
    b.u11 += lambda % 2 == 1 ? mpz_class(pow_mpz(q, 2) * pow_mpz(r, lambda - 2))
                             : mpz_class(mpz_of(q) * pow_mpz(r, lambda - 1));
  return b;
}

std::pair<RunLengthEO, InvariantBundle> p2_eo(long long d) {
  if (d < 1 || d % 2 == 0)
    fail(Errc::NotCoprime, "the degree must be odd in characteristic 2");
  const long long g = (d - 1) / 2;
  ElementarySequence es;
  for (long long j = 1; j <= g; ++j) es.psi.push_back(j / 2);
  InvariantBundle b;
  b.g = g;
  b.p_rank = 0;
  b.a = d % 4 == 1 ? (d - 1) / 4 : (d + 1) / 4;
  b.s11 = d % 3 == 0 ? 1 : 0;
  b.u11 = u11(word_multiset(build_spec(2, d)));
  return {RunLengthEO::from_psi(es), b};
}

}  // namespace bt1
