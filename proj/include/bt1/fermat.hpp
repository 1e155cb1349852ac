#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "bt1/eo.hpp"
#include "bt1/invariants.hpp"
#include "bt1/permdata.hpp"
#include "bt1/word.hpp"

namespace bt1 {

// Index-set models for the mod-p Dieudonne data of two curve families:
//   quotient curve  y^d = x(1-x)   (genus floor((d-1)/2)), and
//   Fermat curve    x^d + y^d = 1  (genus (d-1)(d-2)/2).
//
// For the quotient curve the basis is S = Z/d minus {0} (and minus d/2 when
// d is even), tagged f on (d/2, d) and v on (0, d/2), permuted by a -> pa.
// For the Fermat curve the basis is the pairs (a, b) with a, b, a+b nonzero
// mod d, tagged f when a + b > d, permuted coordinatewise by p.

enum class CurveKind { Quotient, FullFermat };

struct FermatSpec {
  long long p = 0;
  long long d = 0;
  CurveKind kind = CurveKind::Quotient;
  long long ell = 0;    // multiplicative order of p mod d (1 when d <= 2)
  long long genus = 0;  // of the selected curve

  // Elements are residues a in (0, d) for the quotient curve and encoded
  // pairs a*d + b for the Fermat curve.
  std::vector<long long> elements() const;
  bool contains(long long x) const;
  bool tag_f(long long x) const;   // x lies in the f part
  long long step(long long x) const;  // multiply by p (coordinatewise)

  // Letter u_j = f iff p^j x lies in the f part, for j = 0..ell-1; the
  // result is the (ell / orbit size)-th power of the orbit word of x.
  Word pattern(long long x) const;
};

// Validates p prime (NotPrime) and p coprime to d (NotCoprime).  d in {1,2}
// gives an empty basis and genus 0 for the quotient curve.
FermatSpec build_spec(long long p, long long d,
                      CurveKind kind = CurveKind::Quotient);

// Tagged permutation on the element set, labels in increasing element order.
PartitionedPermutation perm_data(const FermatSpec& spec);

// Multiset of primitive orbit words (each orbit word retracted to its
// primitive root with multiplicity).  Always self-dual.
WordMultiset word_multiset(const FermatSpec& spec);

// Count of elements per length-ell pattern; total = basis size.
PatternCounts pattern_table(const FermatSpec& spec);

// Elementary sequence read straight off the pattern table: f-starting
// patterns in increasing lexicographic order give the runs, ascending when
// the pattern ends with f and constant when it ends with v, of length equal
// to the pattern's count.  Only live patterns are visited, so the cost is
// linear in the table even when 2^(ell-1) is astronomical.
std::pair<RunLengthEO, PatternCounts> eo_type(const FermatSpec& spec);

// ---- closed forms for the quotient curve ----

// a-number as a floor sum over j = 1..(p-1)/2 of
// floor(2jd/2p) - floor((2j-1)d/2p).  Requires p an odd prime not dividing
// d (p = 2 -> UseP2Module, d <= 2 -> RationalCurve, composite -> NotPrime,
// p | d -> NotCoprime).
long long a_number_closed(long long p, long long d);

// Divisibility criteria: ordinary iff d | p-1, a-number g iff d | p+1.
// Same preconditions as a_number_closed except p = 2 is allowed.
bool is_ordinary(long long p, long long d);
bool is_superspecial(long long p, long long d);

// Exact-integer invariant values for the closed-form families below.
struct ExactBundle {
  mpz_class g, p_rank, a, s11, u11;
  mpz_class sel_dim() const { return a + u11 - s11; }
};

// ---- d = p^ell - 1 (every prime-to-p degree divides one of these) ----

// Count of elements whose pattern is w (|w| = ell): the constant patterns
// get ((p+1)/2)^ell - 2 and a pattern with k cyclic breaks gets
// ((p-1)/2)^k ((p+1)/2)^(ell-k).  p odd (else UseP2Module).
mpz_class encompassing_mu(long long p, long long ell, const Word& w);

// Count of elements whose pattern ends with t (0 < |t| <= ell), by the
// block shape of t: with K maximal blocks and s = |t|,
//   K = 1:      ((p+1)/2)^(s-1) (p^(ell+1-s) + 1)/2 - 2
//   K even:     ((p+1)/2)^(s-K) ((p-1)/2)^(K-1) (p^(ell+1-s) - 1)/2
//   K odd >= 3: ((p+1)/2)^(s-K) ((p-1)/2)^(K-1) (p^(ell+1-s) + 1)/2
mpz_class encompassing_suffix_mu(long long p, long long ell, const Word& t);

// Pattern counts recomputed from per-digit inequalities on base-p
// expansions (digits of p^j a rotate, so each letter constrains one digit;
// the bound is strict exactly at cyclic breaks).  Independent of the orbit
// walk in pattern_table; exponential in ell, intended for small checks.
PatternCounts encompassing_digit_table(long long p, long long ell);

// The elementary sequence of the quotient curve of degree p^ell - 1,
// without building S: runs alternate ascending/constant from ascending,
// with lengths from encompassing_mu (the i-th f-starting pattern has
// k(i) + (i odd) cyclic breaks, k(i) = popcount(i ^ (i >> 1))).
// Materializes 2^(ell-1) runs, so ell is capped at 24.
RunLengthEO encompassing_eo(long long p, long long ell);

// p-rank ((p+1)/2)^ell - 2; a-number (p-1)(p^(ell-1)-1)/4; s11
// ((p-1)/2)^ell for even ell, else 0; u11 = s11 +
// sum_j ((p+1)/2)^2 ((p-1)/2)^(2j+1) (p^(ell-3-2j)-1)/2.
ExactBundle encompassing_invariants(long long p, long long ell);

// ---- d = p^lambda + 1 (quotients of Hermitian curves) ----

// Patterns have length 2*lambda and are determined by their right half t:
// the full pattern is complement(t)*t.  These count elements by half
// pattern (|t| = lambda) and by half-pattern suffix (0 < |t| <= lambda).
mpz_class hermitian_mu_half(long long p, long long lambda, const Word& t);
mpz_class hermitian_suffix_mu(long long p, long long lambda, const Word& t);

// Elementary sequence for degree p^lambda + 1: 2^(lambda-1) runs
// alternating constant/ascending from constant (lambda capped at 24).
RunLengthEO hermitian_eo(long long p, long long lambda);

// p-rank 0; a-number (p-1)(p^(lambda-1)+1)/4; s11 ((p-1)/2)^lambda for odd
// lambda, else 0; u11 = s11 + an analogous sum + a tail term.
ExactBundle hermitian_invariants(long long p, long long lambda);

// ---- p = 2, d odd ----

// Closed forms: psi_j = floor(j/2); p-rank 0; a-number (d-1)/4 or (d+1)/4
// per d mod 4; s11 = 1 iff 3 | d.  u11 has no closed form and is computed
// through the word-multiset route.  d even -> NotCoprime.
std::pair<RunLengthEO, InvariantBundle> p2_eo(long long d);

// ---- small arithmetic helpers ----

bool is_prime(long long n);
long long multiplicative_order(long long p, long long d);  // 1 when d <= 2
mpz_class pow_mpz(long long base, long long exp);

}  // namespace bt1
