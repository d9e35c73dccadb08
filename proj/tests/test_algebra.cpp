#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "leewb/algebra.hpp"
#include "leewb/errors.hpp"
#include "leewb/json_io.hpp"
#include "leewb/lee.hpp"
#include "oracles.hpp"

using namespace leewb;

namespace {
  Word w(char const* s) {
    return parse_word(s);
  }
  Variable v(char const* s) {
    return Variable(s);
  }

  FiniteAlgebra z2_mult() {
    return FiniteAlgebra::from_table({"0", "1"}, {{0, 0}, {0, 1}}, 1, 0,
                                     std::vector<Element>{0});
  }
  FiniteAlgebra cyclic3() {
    return FiniteAlgebra::from_table({"e", "g", "h"},
                                     {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, {},
                                     std::vector<Element>{1});
  }
  // Left-zero band on two elements: xy = x. A semigroup with no identity.
  FiniteAlgebra left_zero() {
    return FiniteAlgebra::from_table({"p", "q"}, {{0, 0}, {1, 1}});
  }

  std::vector<Variable> oracle_vars(Identity const& id) {
    std::vector<Variable> out;
    for (auto const* side : {&id.lhs, &id.rhs}) {
      for (auto const& x : oracle::letters(*side)) {
        if (std::find(out.begin(), out.end(), x) == out.end()) {
          out.push_back(x);
        }
      }
    }
    return out;
  }

  // Index and period straight from the definition: the smallest i, then
  // the smallest p, with x^(i+p) = x^i for all x.
  Exponents direct_index_period(FiniteAlgebra const& M) {
    auto pw = [&](Element x, std::uint64_t k) {
      Element acc = x;
      for (std::uint64_t j = 1; j < k; ++j) {
        acc = M.product(acc, x);
      }
      return acc;
    };
    for (std::uint64_t i = 1;; ++i) {
      for (std::uint64_t p = 1; p <= M.size() + 1; ++p) {
        bool ok = true;
        for (Element x = 0; x < M.size() && ok; ++x) {
          ok = pw(x, i + p) == pw(x, i);
        }
        if (ok) {
          return {i, p};
        }
      }
    }
  }

  std::string id_key(Word const& a, Word const& b) {
    return a.to_string() + " == " + b.to_string();
  }

  // Every pair of distinct-type words within the caps with the same content
  // and the same values under every substitution, by a plain double loop.
  std::set<std::string> brute_identities(FiniteAlgebra const& M, std::size_t k,
                                         std::size_t runs, std::uint32_t e) {
    auto vars  = standard_variables(k);
    auto words = oracle::all_words(vars, runs, e);
    std::vector<std::vector<Element>> values;
    std::size_t                       total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= M.size();
    }
    for (auto const& u : words) {
      std::vector<Element> vals;
      for (std::size_t t = 0; t < total; ++t) {
        std::map<Variable, Element> s;
        std::size_t                 r = t;
        for (std::size_t i = k; i-- > 0;) {
          s[vars[i]] = static_cast<Element>(r % M.size());
          r /= M.size();
        }
        vals.push_back(oracle::eval(M, s, u));
      }
      values.push_back(std::move(vals));
    }
    std::set<std::string> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i == j || content(words[i]) != content(words[j])) {
          continue;
        }
        if (type_normal_form(words[i]) == type_normal_form(words[j])) {
          continue;
        }
        if (values[i] == values[j]) {
          out.insert(id_key(words[i], words[j]));
        }
      }
    }
    return out;
  }

  std::set<std::string> found_identities(FiniteAlgebra const& M, std::size_t k,
                                         std::size_t runs, std::uint32_t e) {
    std::set<std::string> out;
    for (auto const& id : find_identities(M, {k, runs, e})) {
      out.insert(id_key(id.lhs, id.rhs));
      out.insert(id_key(id.rhs, id.lhs));
    }
    return out;
  }
}  // namespace

TEST_CASE("from_table: valid tables") {
  auto t = FiniteAlgebra::from_table({"e"}, {{0}}, 0);
  CHECK(t.size() == 1);
  CHECK(t.kind() == AlgebraKind::Monoid);

  auto z = z2_mult();
  CHECK(z.identity() == Element{1});
  CHECK(z.zero() == Element{0});
  CHECK(z.index_of("1") == 1);
  CHECK_THROWS_AS((void)z.index_of("2"), InvalidArgument);
  CHECK(left_zero().kind() == AlgebraKind::Semigroup);
}

TEST_CASE("from_table: invalid tables") {
  // x*y = x+1 mod 3 is not associative.
  try {
    (void)FiniteAlgebra::from_table({"a", "b", "c"}, {{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
    FAIL("expected InvalidAlgebra");
  } catch (InvalidAlgebra const& e) {
    CHECK(std::string(e.what()).find("associative") != std::string::npos);
    CHECK(std::string(e.what()).find("(a a) a") != std::string::npos);
  }
  CHECK_THROWS_AS((void)FiniteAlgebra::from_table({"a", "b"}, {{0, 0}}), InvalidAlgebra);
  CHECK_THROWS_AS((void)FiniteAlgebra::from_table({"a", "b"}, {{0, 2}, {0, 0}}),
                  InvalidAlgebra);
  CHECK_THROWS_AS((void)FiniteAlgebra::from_table({"a", "a"}, {{0, 0}, {0, 0}}),
                  InvalidAlgebra);
  // Wrong identity and zero claims on Z2.
  CHECK_THROWS_AS((void)FiniteAlgebra::from_table({"0", "1"}, {{0, 0}, {0, 1}}, 0),
                  InvalidAlgebra);
  CHECK_THROWS_AS((void)FiniteAlgebra::from_table({"0", "1"}, {{0, 0}, {0, 1}}, 1, 1),
                  InvalidAlgebra);
  // {0} does not generate Z2 as a semigroup.
  CHECK_THROWS_AS((void)FiniteAlgebra::from_table({"0", "1"}, {{0, 0}, {0, 1}}, {}, {},
                                                  std::vector<Element>{0}),
                  InvalidAlgebra);
  CHECK_THROWS_AS((void)FiniteAlgebra::from_table({}, {}), InvalidAlgebra);
}

TEST_CASE("evaluate") {
  auto L = lee_monoid(4);
  auto ab = L.index_of("ab");
  auto a  = L.index_of("a");
  auto b  = L.index_of("b");
  CHECK(evaluate(L, {{v("x"), ab}, {v("y"), ab}}, w("x y")) == *L.zero());
  // (ba)(ab)(ba) with x1 -> b, x2 -> a.
  CHECK(L.name(evaluate(L, {{v("x1"), b}, {v("x2"), a}}, w("x1 x2 x2 x1 x1 x2"))) ==
        "baba");
  CHECK(evaluate(L, {}, Word()) == *L.identity());
  CHECK_THROWS_AS((void)evaluate(L, {{v("x"), a}}, w("x y")), InvalidArgument);
  CHECK_THROWS_AS((void)evaluate(lee_semigroup(3), {}, Word()), InvalidArgument);
}

TEST_CASE("evaluate agrees with letter-by-letter products") {
  std::mt19937_64 rng(21);
  auto            alpha = standard_variables(3);
  for (auto const& M : {lee_monoid(4), lee_monoid(5), cyclic3(), z2_mult()}) {
    std::uniform_int_distribution<int> el(0, static_cast<int>(M.size()) - 1);
    for (int i = 0; i < 300; ++i) {
      auto                        u = oracle::random_word(rng, alpha, 6, 9);
      std::map<Variable, Element> s;
      for (auto const& x : alpha) {
        s[x] = static_cast<Element>(el(rng));
      }
      CHECK(evaluate(M, s, u) == oracle::eval(M, s, u));
    }
  }
}

TEST_CASE("index and period") {
  CHECK(index_period(z2_mult()) == Exponents{1, 1});
  CHECK(index_period(cyclic3()) == Exponents{1, 3});
  CHECK(index_period(left_zero()) == Exponents{1, 1});
  // ba ba = baba is nonzero in L4 but (ba)^3 = 0, so the index is 3.
  auto L  = lee_monoid(4);
  auto ba = L.index_of("ba");
  CHECK(L.name(L.power(ba, 2)) == "baba");
  CHECK(L.power(ba, 3) == *L.zero());
  CHECK(index_period(L) == Exponents{3, 1});
  for (std::size_t ell = 2; ell <= 7; ++ell) {
    CAPTURE(ell);
    CHECK(index_period(lee_monoid(ell)) == direct_index_period(lee_monoid(ell)));
    CHECK(index_period(lee_semigroup(ell)) == direct_index_period(lee_semigroup(ell)));
  }
  CHECK(index_period(cyclic3()) == direct_index_period(cyclic3()));
}

TEST_CASE("satisfies: known facts about Lee monoids") {
  auto L4 = lee_monoid(4);
  auto L5 = lee_monoid(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(satisfies(L4, make_un_vn(n)).holds);
  }
  auto r = satisfies(L5, make_un_vn(3));
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(to_string(L5, *r.counterexample) == "{x1 -> b, x2 -> a, x3 -> b}");

  auto xy = parse_identity("x y x y^2 x == x y x y x y", IdentityKind::Monoid);
  auto s  = satisfies(L4, xy);
  CHECK(s.holds);
  CHECK(s.substitutions_checked == 81);

  auto el3 = satisfies(L4, make_el3(1));
  REQUIRE_FALSE(el3.holds);
  auto sigma = ElementSubstitution{{v("x1"), L4.index_of("a")}, {v("y1"), L4.index_of("b")}};
  CHECK(evaluate(L4, sigma, make_el3(1).lhs) == *L4.zero());
  CHECK(L4.name(evaluate(L4, sigma, make_el3(1).rhs)) == "baba");

  CHECK_THROWS_AS((void)satisfies(lee_semigroup(3), xy), InvalidArgument);
}

TEST_CASE("satisfies matches the naive oracle, for any thread count") {
  std::mt19937_64 rng(99);
  auto            alpha = standard_variables(3);
  std::vector<FiniteAlgebra> algebras{lee_monoid(3), lee_monoid(4), lee_semigroup(3),
                                      cyclic3(), left_zero()};
  std::size_t failures = 0;
  for (auto const& M : algebras) {
    auto kind = M.kind() == AlgebraKind::Monoid ? IdentityKind::Monoid
                                                : IdentityKind::Semigroup;
    for (int i = 0; i < 150; ++i) {
      auto     a = oracle::random_word(rng, alpha, 5, 3);
      auto     b = oracle::random_word(rng, alpha, 5, 3);
      Identity id(a, b, kind);
      auto     want = oracle::first_counterexample(M, oracle_vars(id), a, b);
      for (unsigned th : {1U, 2U, 3U, 8U}) {
        auto got = satisfies(M, id, th);
        CAPTURE(id.to_string());
        CAPTURE(th);
        CHECK(got.holds == !want.has_value());
        if (want) {
          REQUIRE(got.counterexample);
          CHECK(*got.counterexample == *want);
        }
      }
      failures += want.has_value();
    }
  }
  CHECK(failures > 100);
}

TEST_CASE("term functions") {
  auto L  = lee_monoid(4);
  auto tf = term_function(L, w("x"), {v("x")});
  for (Element e = 0; e < L.size(); ++e) {
    CHECK(tf({e}) == e);
  }
  auto sq = term_function(L, w("x^2"), {v("x")});
  CHECK(sq({L.index_of("ab")}) == *L.zero());
  CHECK(sq({L.index_of("a")}) == L.index_of("a"));
  CHECK_THROWS_AS((void)term_function(L, w("x y"), {v("x")}), InvalidArgument);

  // Mixed radix with the first variable most significant.
  auto xy = term_function(L, w("x y"), {v("x"), v("y")});
  CHECK(xy.table.size() == 81);
  CHECK(xy.table[L.index_of("a") * 9 + L.index_of("b")] == L.index_of("ab"));
  // An unused variable is allowed.
  auto xz = term_function(L, w("x"), {v("x"), v("z")});
  CHECK(xz({L.index_of("b"), L.index_of("a")}) == L.index_of("b"));
}

TEST_CASE("find_identities: L4^1 at (2,6,2)") {
  auto L   = lee_monoid(4);
  auto ids = find_identities(L, {2, 6, 2});
  bool has = false;
  for (auto const& id : ids) {
    CHECK_FALSE(same_type(id.lhs, id.rhs));
    auto key = id_key(id.lhs, id.rhs);
    has |= key == "x y x y^2 x == x y x y x y" || key == "x y x y x y == x y x y^2 x";
  }
  CHECK(has);
  // Soundness on a sample, completeness via the brute force.
  for (std::size_t i = 0; i < ids.size(); i += 97) {
    CHECK(satisfies(L, ids[i]).holds);
  }
  CHECK(found_identities(L, 2, 6, 2) == brute_identities(L, 2, 6, 2));
  CHECK(found_identities(L, 2, 4, 2) == brute_identities(L, 2, 4, 2));
}

TEST_CASE("find_identities matches brute force on other algebras") {
  CHECK(found_identities(lee_monoid(3), 2, 5, 2) == brute_identities(lee_monoid(3), 2, 5, 2));
  CHECK(found_identities(lee_semigroup(3), 2, 4, 3) ==
        brute_identities(lee_semigroup(3), 2, 4, 3));
  CHECK(found_identities(cyclic3(), 2, 3, 4) == brute_identities(cyclic3(), 2, 3, 4));
  CHECK_FALSE(brute_identities(cyclic3(), 2, 3, 4).empty());
  CHECK_FALSE(brute_identities(lee_monoid(3), 2, 5, 2).empty());
}

TEST_CASE("identity catalog") {
  auto            L = lee_monoid(4);
  IdentityCatalog cat(L, {2, 4, 2});
  CHECK(cat.num_words() == oracle::all_words(standard_variables(2), 4, 2).size());
  std::size_t listed = 0;
  for (auto const& b : cat.buckets()) {
    listed += b.size();
  }
  CHECK(listed == cat.num_words());
  std::uint64_t visited = cat.for_each_identity([](Word const&, Word const&) { return true; });
  CHECK(visited == cat.count_identities());

  CHECK_THROWS_AS((void)find_identities(L, {3, 8, 3, 1}), ResourceLimit);
}

TEST_CASE("variety membership") {
  auto L4 = lee_monoid(4);
  auto L5 = lee_monoid(5);
  CHECK(variety_contains(L4, L4).contains);
  CHECK(variety_contains(L5, L4).contains);

  auto no = variety_contains(L4, L5);
  REQUIRE_FALSE(no.contains);
  REQUIRE(no.certificate);
  CHECK(satisfies(L4, *no.certificate).holds);
  CHECK_FALSE(satisfies(L5, *no.certificate).holds);

  // Semigroups: L2 lies in var L3 but not conversely.
  auto L2 = lee_semigroup(2);
  auto L3 = lee_semigroup(3);
  CHECK(variety_contains(L3, L2).contains);
  auto back = variety_contains(L2, L3);
  REQUIRE_FALSE(back.contains);
  CHECK(satisfies(L2, *back.certificate).holds);
  CHECK_FALSE(satisfies(L3, *back.certificate).holds);

  // A variety of groups has no nontrivial semilattice in it.
  auto g = variety_contains(cyclic3(), z2_mult());
  CHECK_FALSE(g.contains);

  CHECK_THROWS_AS((void)variety_contains(L4, L3), InvalidArgument);
  // L4^1 is aperiodic, so no nontrivial group lies in its variety.
  CHECK_FALSE(variety_contains(L4, cyclic3()).contains);
}

TEST_CASE("JSON round trip") {
  for (auto const& M : {lee_monoid(4), lee_semigroup(3), z2_mult(), cyclic3(), left_zero()}) {
    auto doc  = algebra_to_json(M);
    auto back = algebra_from_json(doc);
    CHECK(back == M);
    CHECK(algebra_to_json(back).dump() == doc.dump());
  }
  auto path = std::filesystem::temp_directory_path() / "leewb_test_algebra.json";
  save_algebra(lee_monoid(4), path);
  CHECK(load_algebra(path) == lee_monoid(4));
  std::filesystem::remove(path);

  auto doc = algebra_to_json(lee_monoid(4));
  doc.erase("identity");
  CHECK_THROWS_AS((void)algebra_from_json(doc), InvalidAlgebra);
  CHECK_THROWS_AS((void)algebra_from_json(nlohmann::json::array()), InvalidAlgebra);
  auto bad = algebra_to_json(z2_mult());
  bad["table"][0][1] = 5;
  CHECK_THROWS_AS((void)algebra_from_json(bad), InvalidAlgebra);
  CHECK_THROWS_AS((void)load_algebra("/nonexistent/leewb.json"), Error);
}
