#include <doctest.h>

#include <numeric>
#include <set>

#include "leewb/algebra.hpp"
#include "leewb/errors.hpp"
#include "leewb/lee.hpp"
#include "oracles.hpp"

using namespace leewb;

namespace {
  Word w(char const* s) {
    return parse_word(s);
  }
}  // namespace

TEST_CASE("element counts") {
  CHECK(lee_semigroup(2).size() == 4);
  CHECK(lee_semigroup(3).size() == 6);
  CHECK(lee_monoid(2).size() == 5);
  CHECK(lee_monoid(3).size() == 7);
  CHECK(lee_monoid(4).size() == 9);
  for (std::size_t ell = 2; ell <= 9; ++ell) {
    CHECK(lee_semigroup(ell).size() == 2 * ell);
    CHECK(lee_monoid(ell).size() == 2 * ell + 1);
  }
  CHECK_THROWS_AS((void)lee_semigroup(1), InvalidArgument);
  CHECK_THROWS_AS((void)lee_monoid(0), InvalidArgument);
}

TEST_CASE("L4 elements") {
  auto L = lee_semigroup(4);
  std::set<std::string> names(L.names().begin(), L.names().end());
  CHECK(names == std::set<std::string>{"0", "a", "b", "ab", "ba", "aba", "bab", "baba"});
  CHECK(L.name(*L.zero()) == "0");
  CHECK(L.kind() == AlgebraKind::Semigroup);
  CHECK(lee_forbidden_word(4) == "abab");
  CHECK(lee_nonzero_forms(4) ==
        std::vector<std::string>{"a", "b", "ab", "ba", "aba", "bab", "baba"});

  auto M = lee_monoid(4);
  CHECK(M.name(*M.identity()) == "1");
  CHECK(M.kind() == AlgebraKind::Monoid);
}

TEST_CASE("products agree with string rewriting") {
  for (std::size_t ell = 2; ell <= 7; ++ell) {
    for (auto const& M : {lee_semigroup(ell), lee_monoid(ell)}) {
      for (Element x = 0; x < M.size(); ++x) {
        for (Element y = 0; y < M.size(); ++y) {
          CAPTURE(ell);
          CAPTURE(M.name(x));
          CAPTURE(M.name(y));
          CHECK(M.name(M.product(x, y)) == oracle::lee_product(M.name(x), M.name(y), ell));
        }
      }
    }
  }
  auto L = lee_semigroup(4);
  auto p = [&](char const* x, char const* y) {
    return L.name(L.product(L.index_of(x), L.index_of(y)));
  };
  CHECK(p("ab", "ab") == "0");
  CHECK(p("aba", "ba") == "0");
  CHECK(p("ba", "ab") == "bab");
  CHECK(p("b", "aba") == "baba");
  CHECK(p("a", "a") == "a");
}

TEST_CASE("normal forms") {
  auto ab  = LeeNormalForm::letters("ab", 4);
  auto ba  = LeeNormalForm::letters("ba", 4);
  CHECK(ab.times(ab, 4).is_zero());
  CHECK(ba.times(ba, 4).name() == "baba");
  CHECK(ab.times(LeeNormalForm::one(), 4) == ab);
  CHECK(LeeNormalForm::zero().times(LeeNormalForm::one(), 4).is_zero());
  CHECK_THROWS_AS((void)LeeNormalForm::letters("aab", 4), InvalidArgument);
  CHECK_THROWS_AS((void)LeeNormalForm::letters("abab", 4), InvalidArgument);
  CHECK_THROWS_AS((void)LeeNormalForm::letters("", 4), InvalidArgument);
}

TEST_CASE("U_n and V_n") {
  auto one = make_un_vn(1);
  CHECK(one.lhs == w("x1^3"));
  CHECK(one.rhs == w("x1^3"));
  CHECK(one.kind == IdentityKind::Monoid);

  auto three = make_un_vn(3);
  CHECK(three.lhs == w("x1 x2 x3 x3 x2 x1 x1 x2 x3"));
  CHECK(three.rhs == w("x1 x2 x3 x1^2 x2^2 x3^2"));
  CHECK(type_normal_form(three.lhs) == w("x1 x2 x3 x2 x1 x2 x3"));
  CHECK(type_normal_form(three.rhs) == w("x1 x2 x3 x1 x2 x3"));
  CHECK_THROWS_AS((void)make_un_vn(0), InvalidArgument);

  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::uint32_t> ones(n == 1 ? 1 : 3 * n - 2, 1);
    CHECK(un_type_word(n, ones) == type_normal_form(make_un_vn(n).lhs));
  }
}

TEST_CASE("identity (1)") {
  auto id = make_el30(2, 2);
  CHECK(id.lhs == w("x^2 y1^2 y2^2 x^2"));
  CHECK(id.rhs == w("x^2 y2^2 y1^2 x^2"));
  CHECK(id.kind == IdentityKind::Semigroup);
  CHECK_THROWS_AS((void)make_el30(1, 2), InvalidArgument);
  CHECK_THROWS_AS((void)make_el30(2, 1), InvalidArgument);
}

TEST_CASE("identity (2)") {
  auto id = make_el3(1);
  CHECK(id.lhs.to_string() == "x1 y1 x1 y1");
  CHECK(id.rhs.to_string() == "y1 x1 y1 x1");
  CHECK(make_el3(2).lhs == w("x1 x2 y1 y2 x2 x1 y2 y1"));
}

TEST_CASE("the permutation family") {
  std::vector<std::size_t> id{1, 2, 3, 4};
  auto                     e = make_el5(2, 1, id);
  CHECK(e.lhs == w("x1 x2 x3 x4 x1 x2 x3 x4 x4 x3 x2 x1"));
  CHECK(e.rhs == w("x1 x2 x3 x4 x4 x3 x2 x1 x4 x3 x2 x1"));
  CHECK_FALSE(same_type(e.lhs, e.rhs));

  // Reversing the permutation swaps the two sides; it does not make them
  // equal.
  auto r = make_el5(2, 1, {4, 3, 2, 1});
  CHECK(r.lhs == e.rhs);
  CHECK(r.rhs == e.lhs);
  CHECK_FALSE(same_type(r.lhs, r.rhs));

  CHECK_THROWS_AS((void)make_el5(2, 1, {1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS((void)make_el5(2, 1, {1, 1, 3, 4}), InvalidArgument);
  // Evaluated only; the verdict is reported, not asserted.
  auto res = satisfies(lee_monoid(5), e);
  MESSAGE("L5^1 and the identity permutation family at n=2: "
          << (res.holds ? "holds" : "fails"));
}
