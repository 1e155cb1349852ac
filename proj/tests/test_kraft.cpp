#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "bt1/error.hpp"
#include "bt1/kraft.hpp"
#include "bt1/permdata.hpp"
#include "bt1/word.hpp"

using namespace bt1;

namespace {

template <typename Fn>
std::optional<Errc> thrown(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("single short word") {
  // fv has u_0 = v, u_1 = f: F maps e_1 -> e_0 (wrapping), V maps e_1 -> e_0.
  const KraftModule m = KraftModule::build(WordMultiset::parse("fv"));
  REQUIRE(m.dim() == 2);
  CHECK(m.f_of(0) == -1);
  CHECK(m.f_of(1) == 0);
  CHECK(m.v_of(0) == -1);
  CHECK(m.v_of(1) == 0);
  CHECK(m.chain_condition());
  CHECK(m.full() == Subspace{0, 1});
  CHECK(m.f_image({0, 1}) == Subspace{0});
  CHECK(m.f_image({0}) == Subspace{});
  CHECK(m.v_preimage({0}) == Subspace{0, 1});
  CHECK(m.v_preimage({}) == Subspace{0});
}

TEST_CASE("letters drive the partial maps") {
  // ffv: u_0 = v, u_1 = f, u_2 = f.  F: e_1 -> e_2, e_2 -> e_0; V: e_1 -> e_0.
  const KraftModule m = KraftModule::build(WordMultiset::parse("ffv"));
  REQUIRE(m.dim() == 3);
  CHECK(m.f_of(0) == -1);
  CHECK(m.f_of(1) == 2);
  CHECK(m.f_of(2) == 0);
  CHECK(m.v_of(0) == -1);
  CHECK(m.v_of(1) == 0);
  CHECK(m.v_of(2) == -1);
  CHECK(m.chain_condition());
}

TEST_CASE("direct sums and copies") {
  const WordMultiset words = WordMultiset::parse("fv^2,fvv");
  const KraftModule m = KraftModule::build(words);
  REQUIRE(m.dim() == 7);
  CHECK(m.chain_condition());
  CHECK(m.source() == words);

  // Labels: word index is 1-based in multiset order, copies 1-based, one
  // basis vector per letter position.
  const std::vector<BasisLabel>& labels = m.basis_labels();
  REQUIRE(labels.size() == 7);
  long long fv_copies[3] = {0, 0, 0};
  for (const BasisLabel& b : labels) {
    if (b.word == 1) {
      CHECK(b.pos < 2);
      CHECK((b.copy == 1 || b.copy == 2));
      if (b.pos == 0) ++fv_copies[b.copy];
    } else {
      CHECK(b.word == 2);
      CHECK(b.pos < 3);
      CHECK(b.copy == 1);
    }
  }
  CHECK(fv_copies[1] == 1);
  CHECK(fv_copies[2] == 1);

  // Every chain axiom check passes and the induced permutation matches the
  // direct unrolling of the words.
  CHECK(isomorphic(m.induced_perm(), words_to_perm(words)));
  CHECK(m.induced_perm().to_words() == words);
}

TEST_CASE("image and preimage are index maps") {
  const KraftModule m = KraftModule::build(WordMultiset::parse("fvv"));
  // fvv: u_0 = v, u_1 = v, u_2 = f.  F: e_2 -> e_0; V: e_1 -> e_0, e_2 -> e_1.
  CHECK(m.f_image(m.full()) == Subspace{0});
  CHECK(m.v_preimage({}) == Subspace{0});
  CHECK(m.v_preimage({0}) == Subspace{0, 1});
  CHECK(m.v_preimage({0, 1}) == Subspace{0, 1, 2});
  CHECK(m.chain_condition());
}

TEST_CASE("free-form modules can violate the chain condition") {
  // F: e0 -> e1; V: e1 -> e2.  Im F = {e1} but Ker V = {e0, e2}.
  const KraftModule m(std::vector<int>{1, -1, -1}, std::vector<int>{-1, 2, -1});
  CHECK(!m.chain_condition());
  CHECK(m.f_image(m.full()) == Subspace{1});
  CHECK(m.v_preimage({}) == Subspace{0, 2});

  CHECK(thrown([] {
          KraftModule(std::vector<int>{1, -1}, std::vector<int>{-1});
        }) == Errc::ParseError);
  // Non-injective F is rejected.
  CHECK(thrown([] {
          KraftModule(std::vector<int>{1, 1, -1},
                      std::vector<int>{-1, -1, -1});
        }) == Errc::ParseError);
}

TEST_CASE("induced permutation tags by whether F acts") {
  const KraftModule m = KraftModule::build(WordMultiset::parse("ffv"));
  const PartitionedPermutation pp = m.induced_perm();
  CHECK(pp.size() == 3);
  CHECK(pp.to_words().str() == "ffv");
  long long f_tags = 0;
  for (std::size_t i = 0; i < pp.size(); ++i)
    if (pp.tag_at(i) == Letter::F) ++f_tags;
  CHECK(f_tags == 2);
}

TEST_CASE("dump lists one basis vector per line") {
  const std::string text = KraftModule::build(WordMultiset::parse("fv")).dump();
  CHECK(text.find('\n') != std::string::npos);
  CHECK(!text.empty());
}
