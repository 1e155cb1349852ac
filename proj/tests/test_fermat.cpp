// Tests for the curve-family models: the index-set spec for quotient and
// Fermat curves, orbit words and pattern tables, the closed-form families
// d = p^ell - 1 and d = p^lambda + 1, characteristic 2, and the closed
// a-number sum.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <string>
#include <vector>

#include "bt1/canonical.hpp"
#include "bt1/fermat.hpp"
#include "bt1/invariants.hpp"
#include "bt1/word.hpp"

namespace {

template <typename Fn>
std::optional<bt1::Errc> thrown(Fn&& fn) {
  try {
    fn();
  } catch (const bt1::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK(thrown([] { bt1::build_spec(9, 5); }) == bt1::Errc::NotPrime);
  CHECK(thrown([] { bt1::build_spec(3, 6); }) == bt1::Errc::NotCoprime);
  CHECK(thrown([] { bt1::build_spec(3, 0); }) == bt1::Errc::ParseError);

  // Degrees 1 and 2 are allowed but carry an empty basis.
  const auto degenerate = bt1::build_spec(3, 2);
  CHECK(degenerate.genus == 0);
  CHECK(degenerate.elements().empty());
  CHECK(bt1::word_multiset(degenerate).counts().empty());
}

TEST_CASE("quotient spec for p=3, d=8") {
  const auto spec = bt1::build_spec(3, 8);
  CHECK(spec.ell == 2);
  CHECK(spec.genus == 3);
  CHECK(spec.elements() == std::vector<long long>{1, 2, 3, 5, 6, 7});
  CHECK(spec.contains(7));
  CHECK_FALSE(spec.contains(0));
  CHECK_FALSE(spec.contains(4));  // d/2 drops out for even degree

  for (long long x : {5, 6, 7}) CHECK(spec.tag_f(x));
  for (long long x : {1, 2, 3}) CHECK_FALSE(spec.tag_f(x));

  CHECK(spec.step(5) == 7);
  CHECK(spec.step(7) == 5);
  CHECK(spec.pattern(5).str() == "ff");
  CHECK(spec.pattern(2).str() == "fv");
  CHECK(thrown([&] { spec.pattern(4); }) == bt1::Errc::UnknownElement);

  CHECK(bt1::word_multiset(spec).str() == "f^2,v^2,fv");

  const auto table = bt1::pattern_table(spec);
  CHECK(table.at(bt1::Word::parse("vv")) == 2);
  CHECK(table.at(bt1::Word::parse("fv")) == 1);
  CHECK(table.at(bt1::Word::parse("vf")) == 1);
  CHECK(table.at(bt1::Word::parse("ff")) == 2);
  CHECK(table.size() == 4);

  const auto [rle, live] = bt1::eo_type(spec);
  CHECK(rle.str() == "u2,c1");
  CHECK(rle.expand().psi == std::vector<long long>{1, 2, 2});
  CHECK(live == table);
}

TEST_CASE("orbit words of the permutation retract onto the multiset") {
  for (auto [p, d] : {std::pair{3LL, 8LL}, {2LL, 9LL}, {7LL, 8LL},
                      {5LL, 4LL}, {3LL, 11LL}}) {
    CAPTURE(p);
    CAPTURE(d);
    const auto spec = bt1::build_spec(p, d);
    const auto pp = bt1::perm_data(spec);
    CHECK(pp.to_words().retract_primitive() == bt1::word_multiset(spec));
    CHECK(pp.self_dual_words());
    CHECK(pp.self_dual_matching());
  }
}

TEST_CASE("known quotient curves") {
  CHECK(bt1::word_multiset(bt1::build_spec(2, 9)).str() == "fv,fffvvv");
  CHECK(bt1::eo_type(bt1::build_spec(2, 9)).first.str() == "c1,u1,c1,u1");

  CHECK(bt1::word_multiset(bt1::build_spec(7, 8)).str() == "fv^3");
  CHECK(bt1::eo_type(bt1::build_spec(7, 8)).first.str() == "c3");

  CHECK(bt1::word_multiset(bt1::build_spec(7, 3)).str() == "f,v");
  CHECK(bt1::word_multiset(bt1::build_spec(5, 4)).str() == "f,v");
  CHECK(bt1::eo_type(bt1::build_spec(5, 4)).first.str() == "u1");
  CHECK(bt1::build_spec(5, 4).ell == 1);
}

TEST_CASE("full Fermat curve for p=3, d=4") {
  const auto spec = bt1::build_spec(3, 4, bt1::CurveKind::FullFermat);
  CHECK(spec.genus == 3);
  CHECK(spec.ell == 2);

  // Pairs (a,b) with a, b, a+b nonzero mod 4, encoded as 4a+b.
  const auto elems = spec.elements();
  CHECK(elems.size() == 6);
  for (long long ab : {4 * 1 + 1, 4 * 1 + 2, 4 * 2 + 1, 4 * 2 + 3, 4 * 3 + 2,
                       4 * 3 + 3})
    CHECK(spec.contains(ab));
  CHECK_FALSE(spec.contains(4 * 1 + 3));  // a + b = 0 mod 4
  CHECK(spec.tag_f(4 * 2 + 3));
  CHECK_FALSE(spec.tag_f(4 * 1 + 2));
  CHECK(spec.step(4 * 1 + 2) == 4 * 3 + 2);

  CHECK(bt1::word_multiset(spec).str() == "fv^3");
  CHECK(bt1::perm_data(spec).self_dual_matching());
}

TEST_CASE("closed a-number sum") {
  CHECK(bt1::a_number_closed(3, 8) == 1);
  CHECK(bt1::a_number_closed(3, 7) == 1);
  CHECK(bt1::a_number_closed(3, 5) == 1);
  CHECK(bt1::a_number_closed(3, 4) == 1);
  CHECK(bt1::a_number_closed(5, 4) == 0);
  CHECK(bt1::a_number_closed(5, 6) == 2);

  CHECK(thrown([] { bt1::a_number_closed(2, 5); }) == bt1::Errc::UseP2Module);
  CHECK(thrown([] { bt1::a_number_closed(3, 2); }) ==
        bt1::Errc::RationalCurve);
  CHECK(thrown([] { bt1::a_number_closed(3, 6); }) == bt1::Errc::NotCoprime);
  CHECK(thrown([] { bt1::a_number_closed(9, 5); }) == bt1::Errc::NotPrime);

  // Against the word route.
  for (auto [p, d] : {std::pair{3LL, 8LL}, {5LL, 6LL}, {7LL, 9LL},
                      {11LL, 13LL}}) {
    CAPTURE(p);
    CAPTURE(d);
    CHECK(bt1::a_number_closed(p, d) ==
          bt1::a_number(bt1::word_multiset(bt1::build_spec(p, d))));
  }
}

TEST_CASE("ordinary and maximal a-number criteria") {
  CHECK(bt1::is_ordinary(7, 3));
  CHECK(bt1::is_ordinary(5, 4));
  CHECK_FALSE(bt1::is_ordinary(3, 8));
  CHECK(bt1::is_superspecial(5, 6));
  CHECK(bt1::is_superspecial(7, 8));
  CHECK(bt1::is_superspecial(2, 3));
  CHECK_FALSE(bt1::is_superspecial(3, 8));
}

TEST_CASE("element counts for degrees p^ell - 1") {
  using bt1::Word;
  CHECK(bt1::encompassing_mu(3, 2, Word::parse("ff")) == 2);
  CHECK(bt1::encompassing_mu(3, 2, Word::parse("vv")) == 2);
  CHECK(bt1::encompassing_mu(3, 2, Word::parse("fv")) == 1);
  CHECK(bt1::encompassing_mu(3, 2, Word::parse("vf")) == 1);
  CHECK(thrown([] { bt1::encompassing_mu(3, 2, Word::parse("f")); }) ==
        bt1::Errc::ParseError);
  CHECK(thrown([] { bt1::encompassing_mu(2, 2, Word::parse("fv")); }) ==
        bt1::Errc::UseP2Module);

  CHECK(bt1::encompassing_suffix_mu(3, 2, Word::parse("f")) == 3);
  CHECK(bt1::encompassing_suffix_mu(3, 2, Word::parse("v")) == 3);
  CHECK(bt1::encompassing_suffix_mu(3, 2, Word::parse("ff")) == 2);
  CHECK(bt1::encompassing_suffix_mu(3, 2, Word::parse("fv")) == 1);
  CHECK(bt1::encompassing_suffix_mu(3, 3, Word::parse("fvf")) == 2);

  // Every count against the orbit walk of the matching degree.
  for (auto [p, ell] : {std::pair{3LL, 2LL}, {3LL, 3LL}, {5LL, 2LL}}) {
    CAPTURE(p);
    CAPTURE(ell);
    const auto spec = bt1::build_spec(p, bt1::pow_mpz(p, ell).get_si() - 1);
    REQUIRE(spec.ell == ell);
    const auto table = bt1::pattern_table(spec);
    for (long long bits = 0; bits < (1LL << ell); ++bits) {
      const auto w = bt1::Word::from_bits(static_cast<std::uint64_t>(bits),
                                          static_cast<std::size_t>(ell));
      const auto it = table.find(w);
      CHECK(bt1::encompassing_mu(p, ell, w) ==
            static_cast<long>(it == table.end() ? 0 : it->second));
    }
    for (long long len = 1; len <= ell; ++len)
      for (long long bits = 0; bits < (1LL << len); ++bits) {
        const auto t = bt1::Word::from_bits(static_cast<std::uint64_t>(bits),
                                            static_cast<std::size_t>(len));
        CHECK(bt1::encompassing_suffix_mu(p, ell, t) ==
              static_cast<long>(bt1::suffix_count(table, t)));
      }
    CHECK(bt1::encompassing_digit_table(p, ell) == table);
  }
}

TEST_CASE("sequences and invariants for degrees p^ell - 1") {
  CHECK(bt1::encompassing_eo(3, 1).runs.empty());
  CHECK(bt1::encompassing_eo(3, 2).str() == "u2,c1");
  CHECK(bt1::encompassing_eo(3, 3).str() == "u6,c2,u2,c2");
  CHECK(bt1::encompassing_eo(3, 2) == bt1::eo_type(bt1::build_spec(3, 8)).first);
  CHECK(thrown([] { bt1::encompassing_eo(3, 25); }) == bt1::Errc::ParseError);
  CHECK(thrown([] { bt1::encompassing_digit_table(3, 15); }) ==
        bt1::Errc::ParseError);

  const auto b32 = bt1::encompassing_invariants(3, 2);
  CHECK(b32.g == 3);
  CHECK(b32.p_rank == 2);
  CHECK(b32.a == 1);
  CHECK(b32.s11 == 1);
  CHECK(b32.u11 == 1);
  CHECK(b32.sel_dim() == 1);

  const auto b33 = bt1::encompassing_invariants(3, 3);
  CHECK(b33.g == 12);
  CHECK(b33.p_rank == 6);
  CHECK(b33.a == 4);
  CHECK(b33.s11 == 0);
  CHECK(b33.u11 == 0);

  // Exact values against the word route for a not-covered case.  (gmpxx has
  // no long long comparisons, hence the casts.)
  const auto b52 = bt1::encompassing_invariants(5, 2);
  const auto words = bt1::invariants_from_words(
      bt1::word_multiset(bt1::build_spec(5, 24)));
  CHECK(b52.g == static_cast<long>(words.g));
  CHECK(b52.p_rank == static_cast<long>(words.p_rank));
  CHECK(b52.a == static_cast<long>(words.a));
  CHECK(b52.s11 == static_cast<long>(words.s11));
  CHECK(b52.u11 == static_cast<long>(words.u11));
}

TEST_CASE("element counts for degrees p^lambda + 1") {
  using bt1::Word;
  const auto spec = bt1::build_spec(3, 10);
  REQUIRE(spec.ell == 4);
  const auto table = bt1::pattern_table(spec);

  // Patterns are complement(t)t; the right display half determines all.
  for (const auto& [w, mult] : table) {
    const std::string s = w.str();
    const auto t = Word::parse(s.substr(2));
    CHECK(Word::parse(s.substr(0, 2)) == t.complement());
    CHECK(bt1::hermitian_mu_half(3, 2, t) == static_cast<long>(mult));
  }
  for (long long len = 1; len <= 2; ++len)
    for (long long bits = 0; bits < (1LL << len); ++bits) {
      const auto t = Word::from_bits(static_cast<std::uint64_t>(bits),
                                     static_cast<std::size_t>(len));
      CHECK(bt1::hermitian_suffix_mu(3, 2, t) ==
            static_cast<long>(bt1::suffix_count(table, t)));
    }

  CHECK(bt1::hermitian_mu_half(3, 2, Word::parse("fv")) == 2);
  CHECK(bt1::hermitian_suffix_mu(3, 2, Word::parse("f")) == 4);
  CHECK(thrown([] { bt1::hermitian_eo(2, 2); }) == bt1::Errc::UseP2Module);
}

TEST_CASE("sequences and invariants for degrees p^lambda + 1") {
  CHECK(bt1::hermitian_eo(3, 1).str() == "c1");
  CHECK(bt1::hermitian_eo(3, 2).str() == "c2,u2");
  CHECK(bt1::hermitian_eo(3, 3).str() == "c4,u4,c1,u4");
  CHECK(bt1::hermitian_eo(3, 2) == bt1::eo_type(bt1::build_spec(3, 10)).first);

  const auto b31 = bt1::hermitian_invariants(3, 1);
  CHECK(b31.g == 1);
  CHECK(b31.p_rank == 0);
  CHECK(b31.a == 1);
  CHECK(b31.s11 == 1);
  CHECK(b31.u11 == 1);

  const auto b32 = bt1::hermitian_invariants(3, 2);
  CHECK(b32.g == 4);
  CHECK(b32.a == 2);
  CHECK(b32.s11 == 0);
  CHECK(b32.u11 == 2);

  const auto b33 = bt1::hermitian_invariants(3, 3);
  CHECK(b33.g == 13);
  CHECK(b33.a == 5);
  CHECK(b33.s11 == 1);
  CHECK(b33.u11 == 5);

  const auto words = bt1::invariants_from_words(
      bt1::word_multiset(bt1::build_spec(3, 10)));
  CHECK(b32.g == static_cast<long>(words.g));
  CHECK(b32.p_rank == static_cast<long>(words.p_rank));
  CHECK(b32.a == static_cast<long>(words.a));
  CHECK(b32.s11 == static_cast<long>(words.s11));
  CHECK(b32.u11 == static_cast<long>(words.u11));
}

TEST_CASE("characteristic 2") {
  const auto [rle9, b9] = bt1::p2_eo(9);
  CHECK(rle9.str() == "c1,u1,c1,u1");
  CHECK(rle9.expand().psi == std::vector<long long>{0, 1, 1, 2});
  CHECK(b9 == bt1::InvariantBundle{4, 0, 2, 1, 2});

  const auto [rle5, b5] = bt1::p2_eo(5);
  CHECK(rle5.str() == "c1,u1");
  CHECK(b5 == bt1::InvariantBundle{2, 0, 1, 0, 1});

  const auto [rle3, b3] = bt1::p2_eo(3);
  CHECK(rle3.str() == "c1");
  CHECK(b3 == bt1::InvariantBundle{1, 0, 1, 1, 1});

  const auto [rle1, b1] = bt1::p2_eo(1);
  CHECK(rle1.runs.empty());
  CHECK(b1 == bt1::InvariantBundle{});

  CHECK(thrown([] { bt1::p2_eo(6); }) == bt1::Errc::NotCoprime);

  // The closed-form half-floor sequence agrees with the general pipeline for
  // small degrees but not in general: the pipeline's filtration is built from
  // F-images and V-preimages, while the half-floor form describes the
  // V-image/F-preimage filtration, and the two first diverge at d = 13
  // (genus 6), where the pipeline yields c2,u3,c1.  Numeric invariants are
  // convention-independent and must always agree.
  for (long long d : {3, 5, 7, 9, 11, 15, 17, 21})
    CHECK(bt1::p2_eo(d).first == bt1::eo_type(bt1::build_spec(2, d)).first);
  CHECK(bt1::eo_type(bt1::build_spec(2, 13)).first.str() == "c2,u3,c1");
  CHECK(bt1::p2_eo(13).first.str() == "c1,u1,c1,u1,c1,u1");
  for (long long d : {3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25}) {
    const auto [rle, bundle] = bt1::p2_eo(d);
    const auto words =
        bt1::invariants_from_words(bt1::word_multiset(bt1::build_spec(2, d)));
    CHECK(bundle == words);
    const auto [pr, an] = bt1::invariants_from_es(rle.expand());
    CHECK(pr == 0);
    CHECK(an == words.a);
  }
}

TEST_CASE("arithmetic helpers") {
  CHECK(bt1::multiplicative_order(3, 8) == 2);
  CHECK(bt1::multiplicative_order(2, 9) == 6);
  CHECK(bt1::multiplicative_order(3, 7) == 6);
  CHECK(bt1::multiplicative_order(5, 2) == 1);
  CHECK(bt1::multiplicative_order(5, 1) == 1);

  for (long long n : {2, 3, 5, 7, 11, 13, 101}) CHECK(bt1::is_prime(n));
  for (long long n : {-1, 0, 1, 4, 9, 15, 91}) CHECK_FALSE(bt1::is_prime(n));

  CHECK(bt1::pow_mpz(3, 3) == 27);
  CHECK(bt1::pow_mpz(10, 0) == 1);
}
