#include "leewb/conditions.hpp"

#include <algorithm>

#include "leewb/errors.hpp"
#include "leewb/lee.hpp"

namespace leewb {

  void ConditionReport::add(std::string witness, std::string clause) {
    violations.push_back(Violation{std::move(witness), std::move(clause)});
    ++violation_count;
    verdict = false;
  }

  namespace {
    Word spell(std::initializer_list<Variable const*> vars) {
      Word w;
      for (auto const* x : vars) {
        w.append(*x);
      }
      return w;
    }

    std::string names(std::initializer_list<Variable const*> vars) {
      std::string out;
      for (auto const* x : vars) {
        if (!out.empty()) {
          out += ",";
        }
        out += x->name();
      }
      return out;
    }

    bool occurs_in(Word const& u, Variable const& x, std::size_t begin,
                   std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        if (u.runs()[i].var == x) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // (C_ell)
  ////////////////////////////////////////////////////////////////////////

  ConditionReport check_c_ell_exact(FiniteAlgebra const& S, std::size_t ell,
                                    std::size_t memory_mb) {
    if (ell < 2) {
      throw InvalidArgument("ell must be >= 2");
    }
    auto const lee = S.kind() == AlgebraKind::Monoid ? lee_monoid(ell)
                                                     : lee_semigroup(ell);
    auto const result = variety_contains(S, lee, memory_mb);
    ConditionReport out;
    out.bounds = "exact (closure size " + std::to_string(result.closure_size)
                 + ")";
    if (!result.contains) {
      out.certificate = result.certificate;
      out.add(result.certificate->to_string(),
              "C" + std::to_string(ell) + ": conflict certificate");
    }
    return out;
  }

  ConditionReport check_c_ell_bounded(FiniteAlgebra const& M, std::size_t ell,
                                      std::uint32_t exp_cap, std::size_t run_cap,
                                      std::size_t max_reported) {
    if (ell < 2 || exp_cap < 1 || run_cap < 1) {
      throw InvalidArgument("bounded check needs ell >= 2 and caps >= 1");
    }
    IdentitySearchCaps caps;
    caps.max_vars       = 2;
    caps.max_runs       = run_cap;
    caps.exp_cap        = exp_cap;
    caps.ignore_content = true;
    IdentityCatalog const catalog(M, caps);

    ConditionReport out;
    out.bounds = "exp_cap=" + std::to_string(exp_cap)
                 + ", run_cap=" + std::to_string(run_cap);
    auto record = [&](Word const& u, Word const& v) {
      ++out.violation_count;
      out.verdict = false;
      if (out.violations.size() < max_reported) {
        out.violations.push_back(Violation{u.to_string() + " == " + v.to_string(),
                                           "C" + std::to_string(ell)});
      }
    };

    auto const vars = standard_variables(2);
    std::optional<TermFunction> empty_tf;
    if (M.kind() == AlgebraKind::Monoid) {
      empty_tf = term_function(M, Word(), vars);
    }
    for (auto const& bucket : catalog.buckets()) {
      std::vector<Word> words;
      for (auto id : bucket) {
        words.push_back(catalog.word(id));
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (height(words[i]) > ell) {
          continue;
        }
        for (std::size_t j = 0; j < words.size(); ++j) {
          // Pairs of two short words are reported once.
          if (j == i || (j < i && height(words[j]) <= ell)) {
            continue;
          }
          if (!catalog.same_type(bucket[i], bucket[j])) {
            record(words[i], words[j]);
          }
        }
        if (empty_tf && term_function(M, words[i], vars) == *empty_tf) {
          record(words[i], Word());
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block conditions
  ////////////////////////////////////////////////////////////////////////

  bool check_2let(Word const& u) {
    auto const non = classify_vars(u).non_linear();
    if (non.size() != 2) {
      throw InvalidArgument("expected exactly two non-linear variables in "
                            + u.to_string());
    }
    if (height(project(u, non)) > 4) {
      return false;
    }
    for (auto const& b : blocks(u).blocks) {
      if (height(b) > 3) {
        return false;
      }
    }
    return true;
  }

  ConditionReport check_manylet(Word const& u) {
    ConditionReport out;
    auto const      con = content(u);
    std::vector<Variable> const all(con.begin(), con.end());

    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        auto h = height(project(u, {all[i], all[j]}));
        if (h > 4) {
          out.add(names({&all[i], &all[j]}) + " (height " + std::to_string(h) + ")",
                  "I");
        }
      }
    }

    auto const decomposition = blocks(u);
    for (std::size_t q = 0; q < decomposition.blocks.size(); ++q) {
      auto const& B    = decomposition.blocks[q];
      auto const  bcon = content(B);
      std::vector<Variable> const vs(bcon.begin(), bcon.end());
      std::string const where = "block " + std::to_string(q) + " (" + B.to_string()
                                + "): ";
      for (auto const& x : vs) {
        for (auto const& y : vs) {
          if (x == y) {
            continue;
          }
          if (type_normal_form(project(B, {x, y})) == spell({&x, &y, &x, &y})) {
            out.add(where + names({&x, &y}), "II");
          }
        }
      }
      for (auto const& x : vs) {
        for (auto const& y : vs) {
          for (auto const& z : vs) {
            if (x == y || y == z || x == z) {
              continue;
            }
            auto const t = type_normal_form(project(B, {x, y, z}));
            if (t == spell({&x, &y, &x, &z, &x})) {
              out.add(where + names({&x, &y, &z}), "III");
            }
            if (t == spell({&x, &y, &z, &x})) {
              auto [first, last] = decomposition.spans[q];
              bool y_left  = occurs_in(u, y, 0, first);
              bool z_left  = occurs_in(u, z, 0, first);
              bool y_right = occurs_in(u, y, last, u.num_runs());
              bool z_right = occurs_in(u, z, last, u.num_runs());
              if (y_left && z_right) {
                out.add(where + names({&x, &y, &z}), "IV(a)");
              }
              if (z_left && y_right) {
                out.add(where + names({&x, &y, &z}), "IV(b)");
              }
            }
          }
        }
      }
    }
    // Report clauses in order I, II, III, IV regardless of discovery order.
    std::stable_sort(out.violations.begin(), out.violations.end(),
                     [](Violation const& a, Violation const& b) {
                       auto rank = [](std::string const& c) {
                         return c == "I" ? 0 : c == "II" ? 1 : c == "III" ? 2 : 3;
                       };
                       return rank(a.clause) < rank(b.clause);
                     });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // P1 - P7
  ////////////////////////////////////////////////////////////////////////

  ConditionReport check_un_properties(Word const& u, std::size_t n) {
    auto const xs = indexed_variables("x", n);
    if (content(u) != VarSet(xs.begin(), xs.end())) {
      throw InvalidArgument("expected the variables x1, ..., x" + std::to_string(n)
                            + " in " + u.to_string());
    }
    ConditionReport out;
    auto x = [&](std::size_t i) -> Variable const& { return xs[i - 1]; };

    // Descending x_hi ... x_lo, in type normal form.
    auto descending = [&](std::size_t hi, std::size_t lo) {
      Word w;
      for (std::size_t i = hi; i >= lo && i >= 1; --i) {
        w.append(x(i));
      }
      return w;
    };

    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (type_normal_form(project(u, {x(i), x(j)}))
            != spell({&x(i), &x(j), &x(i), &x(j)})) {
          out.add(names({&x(i), &x(j)}), "P1");
        }
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        for (std::size_t k = j + 1; k <= n; ++k) {
          if (type_normal_form(project(u, {x(i), x(j), x(k)}))
              != spell({&x(i), &x(j), &x(k), &x(j), &x(i), &x(j), &x(k)})) {
            out.add(names({&x(i), &x(j), &x(k)}), "P2");
          }
        }
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        auto up   = island_pattern_count(u, spell({&x(i), &x(j)}));
        auto down = island_pattern_count(u, spell({&x(j), &x(i)}));
        if (up != 2 || down != 1) {
          out.add(names({&x(i), &x(j)}) + " (" + std::to_string(up) + ", "
                      + std::to_string(down) + ")",
                  "P3");
        }
      }
    }
    auto const full_descent = descending(n, 1);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        auto const pattern = spell({&x(i), &x(j)});
        auto const pos     = island_pattern_positions(u, pattern);
        bool       ok      = pos.size() == 2;
        if (ok) {
          auto const isl = projected_islands(u, content(pattern));
          // Strictly after the first letter of the first occurrence and
          // before the last letter of the second.
          std::size_t begin = isl[pos[0]].first_run + 1;
          std::size_t end   = isl[pos[1] + 1].last_run;
          ok = begin <= end
               && contains_island_factor(u, full_descent, RunRange{begin, end});
        }
        if (!ok) {
          out.add(names({&x(i), &x(j)}), "P4");
        }
      }
    }

    std::vector<std::vector<std::size_t>> island_runs(n + 1);
    for (std::size_t r = 0; r < u.num_runs(); ++r) {
      auto const& name = u.runs()[r].var;
      auto it = std::find(xs.begin(), xs.end(), name);
      island_runs[static_cast<std::size_t>(it - xs.begin()) + 1].push_back(r);
    }
    auto expected_islands = [&](std::size_t i) {
      return (i == 1 || i == n) ? std::size_t(n == 1 ? 1 : 2) : std::size_t(3);
    };
    for (std::size_t i = 1; i <= n; ++i) {
      if (island_runs[i].size() != expected_islands(i)) {
        out.add(x(i).name() + " (" + std::to_string(island_runs[i].size())
                    + " islands)",
                "P5");
      }
    }

    auto between = [&](std::size_t a, std::size_t b, Word const& pattern) {
      return pattern.empty()
             || (a + 1 <= b && contains_island_factor(u, pattern, RunRange{a + 1, b}));
    };
    for (std::size_t i = 1; i <= n && n >= 2; ++i) {
      auto const& r = island_runs[i];
      if (r.size() != expected_islands(i)) {
        out.add(x(i).name(), "P6");
        continue;
      }
      bool ok = true;
      if (i == 1) {
        ok = between(r[0], r[1], descending(n, 2));
      } else if (i == n) {
        ok = between(r[0], r[1], descending(n - 1, 1));
      } else {
        ok = between(r[0], r[1], descending(n, i + 1))
             && between(r[1], r[2], descending(i - 1, 1));
      }
      if (!ok) {
        out.add(x(i).name(), "P6");
      }
    }

    for (std::size_t i = 2; i < n; ++i) {
      auto const& r = island_runs[i];
      if (r.size() != 3) {
        out.add(x(i).name(), "P7");
        continue;
      }
      for (std::size_t j = 2; j < n; ++j) {
        if (j == i) {
          continue;
        }
        for (auto p : island_runs[j]) {
          bool const needs_smaller = p < r[0] || (r[1] < p && p < r[2]);
          bool const needs_larger  = (r[0] < p && p < r[1]) || p > r[2];
          if ((needs_smaller && !(j < i)) || (needs_larger && !(j > i))) {
            out.add(names({&x(i), &x(j)}) + " (run " + std::to_string(p) + ")",
                    "P7");
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup shapes, pairs and substitutions
  ////////////////////////////////////////////////////////////////////////

  std::string SemShape::to_string() const {
    switch (kind) {
      case Kind::OneIslandEach:
        return "OneIslandEach";
      case Kind::SandwichWithLinear:
        return "SandwichWithLinear(" + x->name() + ")";
      default:
        return "Other";
    }
  }

  SemShape check_sem_shape(Word const& u) {
    if (u.empty()) {
      throw InvalidArgument("shape classification needs a nonempty word");
    }
    auto const con = content(u);
    if (std::all_of(con.begin(), con.end(),
                    [&](Variable const& v) { return islands(u, v) == 1; })) {
      return {SemShape::Kind::OneIslandEach, std::nullopt};
    }
    auto const& x = u.runs().front().var;
    bool        sandwich
        = u.runs().back().var == x && islands(u, x) == 2
          && !classify_vars(u).linear.empty()
          && std::all_of(con.begin(), con.end(), [&](Variable const& v) {
               return v == x || islands(u, v) == 1;
             });
    if (sandwich) {
      return {SemShape::Kind::SandwichWithLinear, x};
    }
    return {SemShape::Kind::Other, std::nullopt};
  }

  bool check_fact_basic_pair(Word const& u, Word const& v) {
    auto const cu = classify_vars(u);
    auto const cv = classify_vars(v);
    if (cu.linear != cv.linear || cu.non_linear() != cv.non_linear()) {
      return false;
    }
    auto const bu = blocks(u);
    auto const bv = blocks(v);
    if (bu.linears != bv.linears) {
      return false;
    }
    for (std::size_t q = 0; q < bu.blocks.size(); ++q) {
      if (content(bu.blocks[q]) != content(bv.blocks[q])) {
        return false;
      }
    }
    return true;
  }

  bool check_redef_star(Word const& u, WordSubstitution const& theta,
                        RedefVariant variant) {
    auto const classes = classify_vars(u);
    for (auto const& x : classes.content) {
      if (content(theta.at(x)).size() <= 1) {
        continue;
      }
      bool allowed = classes.linear.contains(x)
                     || (variant == RedefVariant::Lemma52
                         && classes.occurring_twice.contains(x));
      if (!allowed) {
        return false;
      }
    }
    return true;
  }

}  // namespace leewb
