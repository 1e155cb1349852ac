#pragma once

// Self-contained consistency suites cross-checking the library against
// independent computations: frozen small-genus tables, a subspace-lattice
// oracle run over every small module, curve families with closed-form
// answers, and randomized duality round-trips.  Each suite returns a
// CheckResult; the CLI `verify` subcommand and the acceptance tests are
// thin wrappers around these.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bt1/word.hpp"

namespace bt1 {

// Outcome of one suite: number of individual comparisons made, and a
// description of the first mismatch when one was found.
struct CheckResult {
  bool pass = true;
  long long cases = 0;
  std::string detail;  // empty on success, first counterexample otherwise

  // Record one comparison; on the first failure, capture the message.
  void check(bool ok, const std::string& message);
};

// Every primitive word of length 1..max_len, least rotation first,
// in increasing (length, lex) order.
std::vector<Word> primitive_necklaces_up_to(int max_len);

// Calls fn on every multiset of primitive words with total dimension
// between 1 and max_total_dim (each necklace may repeat).
void for_each_primitive_multiset(long long max_total_dim,
                                 const std::function<void(const WordMultiset&)>& fn);

// Small-genus catalogue: every elementary sequence of genus 1..4 against
// its word multiset and all four invariants, plus reconstruction of the
// multiset back from the sequence.
CheckResult verify_golden_tables();

// Three frozen end-to-end examples: the canonical type of {fv^2, fvv}
// (checked against the lattice oracle), the type of {fv, fvfv}, and the
// block permutation expanded from the first type.
CheckResult verify_worked_examples();

// For every primitive multiset with total dimension <= max_total_dim:
// the combinatorial canonical type equals the one read off the subspace
// lattice of the explicit module, and the expanded permutation data is
// admissible and recovers the multiset.
CheckResult verify_oracle_equivalence(long long max_total_dim = 10);

// Curve pipeline consistency for y^d = x(1-x): run-length output matches
// the elementary sequence, the three invariant routes agree, the multiset
// is self-dual, and the f-starting pattern multiplicities sum to the genus.
CheckResult verify_fermat_consistency(const std::vector<long long>& ps = {2, 3, 5, 7, 11, 13},
                                      long long d_max = 200);

// d = p^ell - 1 family: closed-form Ekedahl-Oort type, per-pattern and
// suffix multiplicity formulas, digit-model pattern table, and invariant
// formulas, all against the general pipeline.
CheckResult verify_encompassing(const std::vector<long long>& ps = {3, 5, 7},
                                long long ell_max = 4);

// d = p^lambda + 1 family: half-pattern structure, closed-form type,
// per-half-pattern and suffix formulas, and invariant formulas, all
// against the general pipeline.
CheckResult verify_hermitian(const std::vector<long long>& ps = {3, 5, 7, 11},
                             long long lambda_max = 3);

// p = 2, odd d: closed-form type and invariants against the pipeline.
CheckResult verify_p2(long long d_max = 201);

// Floor-sum a-number formula against a direct orbit count for all odd
// primes p <= p_max and d <= d_max with p coprime to d, together with
// the congruence special cases and the ordinary/superspecial divisibility
// criteria.
CheckResult verify_anumber(long long p_max = 13, long long d_max = 500);

// Randomized: duality of canonical types is an involution, matches
// complementing the words, and the three self-duality tests (multiset,
// permutation matching, type equality) agree.
CheckResult verify_duality(long long count = 1000, std::uint64_t seed = 20240815);

// Every elementary sequence of genus <= g_max round-trips through its
// canonical type.
CheckResult verify_es_inversion(long long g_max = 6);

}  // namespace bt1
