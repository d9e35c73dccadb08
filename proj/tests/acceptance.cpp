// Acceptance run: one PASS/FAIL line per criterion, each with its time
// limit. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leewb/algebra.hpp"
#include "leewb/conditions.hpp"
#include "leewb/harness.hpp"
#include "leewb/lee.hpp"
#include "oracles.hpp"

using namespace leewb;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  // Collects failed sub-checks into the detail line.
  struct Checker {
    Outcome            out;
    std::ostringstream notes;
    void               expect(bool cond, std::string const& what) {
      if (!cond) {
        out.ok = false;
        notes << "[failed: " << what << "] ";
      }
    }
    void note(std::string const& s) {
      notes << s << ' ';
    }
    Outcome done() {
      out.detail = notes.str();
      return out;
    }
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
  }

  Element el(FiniteAlgebra const& M, char const* name) {
    return M.index_of(name);
  }

  Outcome element_counts() {
    Checker c;
    c.expect(lee_semigroup(2).size() == 4, "|L2| = 4");
    c.expect(lee_semigroup(3).size() == 6, "|L3| = 6");
    c.expect(lee_monoid(2).size() == 5, "|L2^1| = 5");
    c.expect(lee_monoid(3).size() == 7, "|L3^1| = 7");
    c.expect(lee_monoid(4).size() == 9, "|L4^1| = 9");
    c.note("sizes 4 6 5 7 9");
    return c.done();
  }

  Outcome un_vn_holds() {
    Checker c;
    auto    L = lee_monoid(4);
    for (std::size_t n = 1; n <= 6; ++n) {
      auto t = Clock::now();
      auto r = satisfies(L, make_un_vn(n), 1);
      c.expect(r.holds, "n=" + std::to_string(n));
      std::uint64_t want = 1;
      for (std::size_t i = 0; i < n; ++i) {
        want *= 9;
      }
      c.expect(r.substitutions_checked == want, "9^n substitutions at n=" + std::to_string(n));
      double s = seconds_since(t);
      if (n == 6) {
        c.expect(s < 60, "n=6 within 60 s");
        char buf[64];
        std::snprintf(buf, sizeof buf, "n=6: %llu substitutions in %.2f s",
                      static_cast<unsigned long long>(r.substitutions_checked), s);
        c.note(buf);
      }
    }
    return c.done();
  }

  Outcome l51_fails() {
    Checker c;
    auto    L  = lee_monoid(5);
    auto    id = make_un_vn(3);
    auto    r  = satisfies(L, id);
    c.expect(!r.holds, "U3 == V3 fails on L5^1");
    ElementSubstitution witness{{Variable("x1"), el(L, "b")},
                              {Variable("x2"), el(L, "a")},
                              {Variable("x3"), el(L, "b")}};
    auto lhs = L.name(evaluate(L, witness, id.lhs));
    auto rhs = L.name(evaluate(L, witness, id.rhs));
    c.expect(lhs == "0" && rhs == "babab", "the witness gives (0, babab)");
    if (r.counterexample) {
      auto want = oracle::first_counterexample(L, identity_variables(id), id.lhs, id.rhs);
      c.expect(want && *want == *r.counterexample, "lexicographically first");
      c.expect(*r.counterexample == witness, "first counterexample is x1->b, x2->a, x3->b");
      c.note("first counterexample " + to_string(L, *r.counterexample));
    }
    c.note("witness values (" + lhs + ", " + rhs + ")");
    return c.done();
  }

  Outcome el3_fails() {
    Checker c;
    auto    L  = lee_monoid(4);
    auto    id = make_el3(1);
    c.expect(!satisfies(L, id).holds, "identity (2), n=1, fails");
    ElementSubstitution s{{Variable("x1"), el(L, "a")}, {Variable("y1"), el(L, "b")}};
    auto lhs = L.name(evaluate(L, s, id.lhs));
    auto rhs = L.name(evaluate(L, s, id.rhs));
    c.expect(lhs == "0" && rhs == "baba", "x->a, y->b gives 0 vs baba");
    c.note(id.to_string() + " at x->a, y->b: " + lhs + " vs " + rhs);
    return c.done();
  }

  Outcome xyxyyx_holds() {
    Checker c;
    auto    r = satisfies(lee_monoid(4),
                          parse_identity("x y x y y x == x y x y x y", IdentityKind::Monoid));
    c.expect(r.holds, "holds");
    c.expect(r.substitutions_checked == 81, "81 substitutions");
    c.note(std::to_string(r.substitutions_checked) + " substitutions");
    return c.done();
  }

  Outcome c_ell_exact() {
    Checker c;
    struct Case {
      FiniteAlgebra S;
      std::size_t   ell;
      bool          want;
      char const*   name;
    };
    std::vector<Case> cases{{lee_monoid(4), 4, true, "(L4^1,4)"},
                            {lee_monoid(4), 5, false, "(L4^1,5)"},
                            {lee_monoid(5), 4, true, "(L5^1,4)"},
                            {lee_semigroup(3), 3, true, "(L3,3)"}};
    for (auto const& k : cases) {
      auto   t = Clock::now();
      auto   r = check_c_ell_exact(k.S, k.ell, 2048);
      double s = seconds_since(t);
      c.expect(r.verdict == k.want, k.name);
      c.expect(s < 300, std::string(k.name) + " within 5 min");
      if (!r.verdict) {
        bool ok = r.certificate.has_value();
        if (ok) {
          auto L = k.S.kind() == AlgebraKind::Monoid ? lee_monoid(k.ell) : lee_semigroup(k.ell);
          ok     = satisfies(k.S, *r.certificate).holds && !satisfies(L, *r.certificate).holds;
          c.note(std::string(k.name) + " certificate " + r.certificate->to_string() + ";");
        }
        c.expect(ok, std::string(k.name) + " certificate holds on S and fails on L");
      } else {
        c.note(std::string(k.name) + " true;");
      }
    }
    return c.done();
  }

  Outcome el30_holds() {
    Checker c;
    auto    L = lee_semigroup(3);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto r = satisfies(L, make_el30(n, 2));
      c.expect(r.holds, "n=" + std::to_string(n));
      c.expect(r.substitutions_checked <= 6 * 6 * 6 * 6 * 6, "at most 6^5 substitutions");
    }
    c.note("k=2, n=2..4");
    return c.done();
  }

  Outcome un_properties() {
    Checker c;
    for (std::size_t n = 3; n <= 10; ++n) {
      c.expect(check_un_properties(make_un_vn(n).lhs, n).verdict, "n=" + std::to_string(n));
    }
    c.note("P1-P7 hold for n=3..10");
    return c.done();
  }

  Outcome type_separation() {
    Checker c;
    for (std::size_t n = 1; n <= 10; ++n) {
      auto id = make_un_vn(n);
      bool st = same_type(id.lhs, id.rhs);
      c.expect(st == (n <= 2), "n=" + std::to_string(n));
    }
    // For n <= 2 both sides normalize to the same word, so the identity
    // carries no type information there.
    c.note("same type exactly for n=1,2 (U2 and V2 both normalize to x1 x2 x1 x2)");
    return c.done();
  }

  Outcome property_suites() {
    Checker c;
    for (auto const& r : lemma_property_suites(1, 1000, IdentitySearchCaps{3, 8, 3})) {
      c.expect(r.passed(), r.claim);
      auto const& ev = r.evidence;
      auto size = ev.contains("cases") ? std::to_string(ev["cases"].get<std::uint64_t>()) + " cases"
                                       : std::to_string(ev["identities"].get<std::uint64_t>()) +
                                             " identities";
      c.note(r.claim + " " + (r.passed() ? "ok" : "FAILED") + " (" + size + ");");
    }
    return c.done();
  }

  Outcome tau_fuzz_claims() {
    Checker    c;
    FuzzConfig un;
    un.n                  = 5;
    un.trials             = 200000;
    un.stop_after_matches = 2000;
    auto a                = tau_fuzz(lee_monoid(4), un);
    auto am               = a.evidence.value("matched_instances", 0ULL);
    c.expect(a.passed() && a.evidence.value("violations", 1) == 0, "no violation on L4^1");
    c.expect(am >= 1000, "at least 1000 matched substitutions on L4^1");

    FuzzConfig el;
    el.target             = FuzzTarget::Lee30;
    el.n                  = 4;
    el.trials             = 200000;
    el.stop_after_matches = 2000;
    auto b                = tau_fuzz(lee_semigroup(3), el);
    auto bm               = b.evidence.value("matched_instances", 0ULL);
    c.expect(b.passed() && b.evidence.value("violations", 1) == 0, "no violation on L3");
    c.expect(bm >= 1000, "at least 1000 matched substitutions on L3");
    c.note("L4^1: " + std::to_string(am) + " matched, " +
           std::to_string(a.evidence.value("violations", 0)) + " violations; L3: " +
           std::to_string(bm) + " matched, " +
           std::to_string(b.evidence.value("violations", 0)) + " violations");
    return c.done();
  }

  // Unordered pairs of distinct-type words with equal content and equal
  // values everywhere, by direct evaluation.
  std::set<std::pair<std::string, std::string>> brute(FiniteAlgebra const& M, std::size_t k,
                                                      std::size_t runs, std::uint32_t e) {
    auto vars  = standard_variables(k);
    auto words = oracle::all_words(vars, runs, e);
    std::vector<std::vector<Element>> vals(words.size());
    std::size_t                       total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= M.size();
    }
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (std::size_t t = 0; t < total; ++t) {
        std::map<Variable, Element> s;
        std::size_t                 r = t;
        for (std::size_t i = k; i-- > 0;) {
          s[vars[i]] = static_cast<Element>(r % M.size());
          r /= M.size();
        }
        vals[w].push_back(oracle::eval(M, s, words[w]));
      }
    }
    std::set<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (content(words[i]) == content(words[j]) && vals[i] == vals[j] &&
            type_normal_form(words[i]) != type_normal_form(words[j])) {
          auto a = words[i].to_string(), b = words[j].to_string();
          out.emplace(std::min(a, b), std::max(a, b));
        }
      }
    }
    return out;
  }

  Outcome find_identities_claim() {
    Checker c;
    auto    L   = lee_monoid(4);
    auto    ids = find_identities(L, {2, 6, 2});
    bool    xy = false, x2 = false, sound = true;
    std::set<std::pair<std::string, std::string>> found;
    for (auto const& id : ids) {
      auto a = id.lhs.to_string(), b = id.rhs.to_string();
      found.emplace(std::min(a, b), std::max(a, b));
      xy |= (a == "x y x y^2 x" && b == "x y x y x y") || (b == "x y x y^2 x" && a == "x y x y x y");
      x2 |= (a == "x^2" && b == "x^3") || (a == "x^3" && b == "x^2");
      sound = sound && satisfies(L, id).holds;
    }
    std::set<std::pair<std::string, std::string>> small;
    for (auto const& id : find_identities(L, {2, 4, 2})) {
      auto a = id.lhs.to_string(), b = id.rhs.to_string();
      small.emplace(std::min(a, b), std::max(a, b));
    }
    bool complete_small = small == brute(L, 2, 4, 2);
    bool complete_full  = found == brute(L, 2, 6, 2);

    c.expect(xy, "contains x y x y y x == x y x y x y");
    c.expect(sound, "every identity re-passes satisfies");
    c.expect(complete_small, "matches brute force at (2,4,2)");
    c.expect(complete_full, "matches brute force at (2,6,2)");
    // x^2 == x^3 exceeds the exponent cap, is a single-type pair, and fails
    // on L4^1: x -> ba gives baba against 0.
    ElementSubstitution ba{{Variable("x"), el(L, "ba")}};
    auto v2 = L.name(evaluate(L, ba, parse_word("x^2")));
    auto v3 = L.name(evaluate(L, ba, parse_word("x^3")));
    c.expect(x2, "contains x^2 == x^3 (not an identity of L4^1: x->ba gives " + v2 + " vs " +
                     v3 + ")");
    c.note(std::to_string(ids.size()) + " identities; (2,4,2) search and brute force both " +
           std::to_string(small.size()));
    return c.done();
  }

  struct Criterion {
    int                      number;
    char const*              name;
    double                   limit_s;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "element counts", 1, element_counts},
      {2, "L4^1 satisfies U_n == V_n, n=1..6", 60 * 6, un_vn_holds},
      {3, "L5^1 fails U_3 == V_3 at x1->b, x2->a, x3->b", 1, l51_fails},
      {4, "L4^1 fails identity (2) at n=1", 1, el3_fails},
      {5, "L4^1 satisfies x y x y y x == x y x y x y", 1, xyxyyx_holds},
      {6, "exact height property through variety membership", 4 * 300, c_ell_exact},
      {7, "L3 satisfies identity (1), k=2, n=2..4", 10, el30_holds},
      {8, "P1-P7 for U_n, n=3..10", 1, un_properties},
      {9, "U_n and V_n differ in type exactly for n>=3", 1, type_separation},
      {10, "seeded property suites, 1000 cases each", 300, property_suites},
      {11, "type-preservation falsifier on L4^1 and L3", 600, tau_fuzz_claims},
      {12, "identity search on L4^1 at (2,6,2)", 300, find_identities_claim},
  };
  int failed = 0;
  for (auto const& k : all) {
    auto    t = Clock::now();
    Outcome o;
    try {
      o = k.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s  = seconds_since(t);
    bool   ok = o.ok && s < k.limit_s;
    if (s >= k.limit_s) {
      o.detail += "[over the time limit] ";
    }
    failed += ok ? 0 : 1;
    char head[160];
    std::snprintf(head, sizeof head, "%s %2d %s (%.2f s, limit %.0f s)", ok ? "PASS" : "FAIL",
                  k.number, k.name, s, k.limit_s);
    std::cout << head << " :: " << o.detail << std::endl;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
