#include "leewb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "leewb/conditions.hpp"
#include "leewb/errors.hpp"
#include "leewb/json_io.hpp"
#include "leewb/lee.hpp"

namespace leewb {

  using nlohmann::json;

  namespace {
    using Clock = std::chrono::steady_clock;
    using Rng   = std::mt19937_64;

    double ms_since(Clock::time_point start) {
      return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    std::size_t below(Rng& rng, std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }

    std::uint32_t between(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
      return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    }

    ReproResult make_result(std::string claim, std::string anchor) {
      ReproResult r;
      r.claim  = std::move(claim);
      r.anchor = std::move(anchor);
      return r;
    }

    void conclude(ReproResult& r, bool ok, Clock::time_point start) {
      r.status     = ok ? ReproStatus::Pass : ReproStatus::Fail;
      r.elapsed_ms = ms_since(start);
    }

    json caps_json(IdentitySearchCaps const& caps) {
      return {{"max_vars", caps.max_vars},
              {"max_runs", caps.max_runs},
              {"exp_cap", caps.exp_cap}};
    }

    //! Runs fn(i) for i in [0, n) on `threads` workers.
    template <typename Fn>
    void parallel_for(std::size_t n, unsigned threads, Fn const& fn) {
      threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
      if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          fn(i);
        }
        return;
      }
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < n; i += threads) {
            fn(i);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Random words and substitutions
    ////////////////////////////////////////////////////////////////////////

    // Exponent 1 with probability 1/2, otherwise 2 or 3; keeps linear and
    // twice-occurring variables common.
    std::uint32_t random_exp(Rng& rng) {
      auto const r = below(rng, 4);
      return r < 2 ? 1 : static_cast<std::uint32_t>(r);
    }

    Word random_word(Rng& rng, std::vector<Variable> const& alphabet,
                     std::size_t max_runs) {
      std::size_t const runs = 1 + below(rng, max_runs);
      Word              w;
      std::size_t       last = alphabet.size();
      for (std::size_t i = 0; i < runs; ++i) {
        std::size_t v = below(rng, alphabet.size());
        if (alphabet.size() > 1) {
          while (v == last) {
            v = below(rng, alphabet.size());
          }
        }
        w.append(alphabet[v], random_exp(rng));
        last = v;
      }
      return w;
    }

    //! Same run sequence as u with fresh exponents.
    Word reexponent(Rng& rng, Word const& u, std::uint32_t max_exp) {
      std::vector<Run> runs = u.runs();
      for (auto& r : runs) {
        r.exp = between(rng, 1, max_exp);
      }
      return Word(std::move(runs));
    }

    //! A word of the same type as u whose variables fall in the same
    //! occurrence classes. If `split_non_linear` is set only the split into
    //! linear and non-linear variables is preserved.
    Word same_classes(Rng& rng, Word const& u, bool split_non_linear) {
      auto const cu = classify_vars(u);
      for (int attempt = 0; attempt < 32; ++attempt) {
        Word const v  = reexponent(rng, u, 4);
        auto const cv = classify_vars(v);
        bool const ok = cv.linear == cu.linear
                        && (split_non_linear
                            || (cv.occurring_twice == cu.occurring_twice
                                && cv.occurring_more == cu.occurring_more));
        if (ok) {
          return v;
        }
      }
      return u;
    }

    std::vector<Variable> const& image_alphabet() {
      static std::vector<Variable> const a{Variable("p"), Variable("q"), Variable("r")};
      return a;
    }

    Word random_power(Rng& rng) {
      auto const& a = image_alphabet();
      return Word::power(a[below(rng, a.size())], between(rng, 1, 3));
    }

    Word random_image(Rng& rng) {
      return random_word(rng, image_alphabet(), 3);
    }

    std::vector<Variable> alphabet_of_size(std::size_t k) {
      return standard_variables(k);
    }

    ////////////////////////////////////////////////////////////////////////
    // Property suites
    ////////////////////////////////////////////////////////////////////////

    void subsets(std::vector<Variable> const& vars, std::size_t k,
                 std::size_t from, VarSet& current,
                 std::vector<VarSet>& out) {
      if (current.size() == k) {
        out.push_back(current);
        return;
      }
      for (std::size_t i = from; i < vars.size(); ++i) {
        current.insert(vars[i]);
        subsets(vars, k, i + 1, current, out);
        current.erase(vars[i]);
      }
    }

    ReproResult projection_suite(std::uint64_t seed, std::size_t cases) {
      auto const start = Clock::now();
      auto r = make_result("prop-projection-criterion",
                           "two words have the same type iff they have the same "
                           "content and agree in type on every three-variable "
                           "projection");
      std::size_t same = 0, different = 0, violations = 0;
      json        witness;
      for (std::size_t c = 0; c < cases; ++c) {
        Rng        rng(split_seed(seed, c));
        auto const alphabet = alphabet_of_size(3 + below(rng, 3));
        Word const u        = random_word(rng, alphabet, 12);
        Word       v;
        switch (below(rng, 3)) {
          case 0:
            v = reexponent(rng, u, 3);
            break;
          case 1: {
            // Swap two adjacent runs, which usually changes the type.
            std::vector<Run> runs = u.runs();
            if (runs.size() > 1) {
              auto const i = below(rng, runs.size() - 1);
              std::swap(runs[i], runs[i + 1]);
            }
            v = Word(std::move(runs));
            break;
          }
          default: {
            auto const vars = variables_in_order(u);
            do {
              v = random_word(rng, vars, 12);
            } while (content(v) != content(u) && vars.size() <= 6);
          }
        }
        bool const expected = same_type(u, v);
        (expected ? same : different) += 1;

        bool       criterion = content(u) == content(v);
        auto const vars      = variables_in_order(u);
        if (criterion) {
          std::vector<VarSet> triples;
          VarSet              scratch;
          subsets(vars, std::min<std::size_t>(3, vars.size()), 0, scratch, triples);
          for (auto const& X : triples) {
            if (!same_type(project(u, X), project(v, X))) {
              criterion = false;
              break;
            }
          }
        }
        if (criterion != expected) {
          if (violations++ == 0) {
            witness = {{"u", u.to_string()}, {"v", v.to_string()}};
          }
        }
      }
      r.evidence = {{"cases", cases},
                    {"same_type_cases", same},
                    {"different_type_cases", different},
                    {"violations", violations}};
      if (violations > 0) {
        r.evidence["first_violation"] = witness;
      }
      conclude(r, violations == 0 && same > 0 && different > 0, start);
      return r;
    }

    ReproResult erasure_suite(std::uint64_t seed, std::size_t cases) {
      auto const start = Clock::now();
      auto r = make_result("prop-erasure",
                           "E(u) keeps content, keeps the type of the image, and "
                           "no two of its variables map to powers of one variable");
      std::size_t violations = 0, merged = 0;
      json        witness;
      for (std::size_t c = 0; c < cases; ++c) {
        Rng              rng(split_seed(seed, c));
        auto const       alphabet = alphabet_of_size(2 + below(rng, 4));
        Word const       u        = random_word(rng, alphabet, 12);
        WordSubstitution theta;
        for (auto const& x : variables_in_order(u)) {
          theta.set(x, below(rng, 3) < 2 ? random_power(rng) : random_image(rng));
        }
        auto const e = erase_merge(u, theta);
        if (!e.renaming.empty()) {
          ++merged;
        }
        std::string failed;
        auto const  con_e = content(e.word);
        auto const  con_u = content(u);
        if (!std::includes(con_u.begin(), con_u.end(), con_e.begin(), con_e.end())) {
          failed = "(i) content";
        } else if (!same_type(apply_substitution(theta, e.word),
                              apply_substitution(theta, u))) {
          failed = "(ii) type of image";
        } else {
          std::vector<Variable> const vars(con_e.begin(), con_e.end());
          for (std::size_t i = 0; i < vars.size() && failed.empty(); ++i) {
            for (std::size_t j = i + 1; j < vars.size(); ++j) {
              auto const& a = theta.at(vars[i]);
              auto const& b = theta.at(vars[j]);
              if (a.is_power() && b.is_power() && a.runs()[0].var == b.runs()[0].var) {
                failed = "(iii) " + vars[i].name() + " and " + vars[j].name();
                break;
              }
            }
          }
        }
        if (!failed.empty() && violations++ == 0) {
          witness = {{"u", u.to_string()},
                     {"theta", theta.to_string()},
                     {"erased", e.word.to_string()},
                     {"clause", failed}};
        }
      }
      r.evidence = {{"cases", cases},
                    {"cases_with_merges", merged},
                    {"violations", violations}};
      if (violations > 0) {
        r.evidence["first_violation"] = witness;
      }
      conclude(r, violations == 0 && merged > 0, start);
      return r;
    }

    ReproResult substitution_suite(std::uint64_t seed, std::size_t cases,
                                   RedefVariant variant) {
      auto const start     = Clock::now();
      bool const two_occ   = variant == RedefVariant::Lemma52;
      auto       r         = make_result(
          two_occ ? "prop-substitution-two-occurrence" : "prop-substitution-linear",
          two_occ ? "same-type words with equal lin, con_2 and con_>2 keep equal "
                    "types under substitutions that send only linear or "
                    "twice-occurring variables to multi-variable words"
                  : "same-type words with equal lin and non keep equal types "
                    "under substitutions that send only linear variables to "
                    "multi-variable words");
      std::size_t violations = 0, multi = 0, changed = 0;
      json        witness;
      for (std::size_t c = 0; c < cases; ++c) {
        Rng        rng(split_seed(seed, c));
        auto const alphabet = alphabet_of_size(2 + below(rng, 4));
        Word const u        = random_word(rng, alphabet, 12);
        Word const v        = same_classes(rng, u, !two_occ);
        if (!(v == u)) {
          ++changed;
        }
        auto const       cls = classify_vars(u);
        WordSubstitution theta;
        bool             any_multi = false;
        for (auto const& x : variables_in_order(u)) {
          bool const free_image = cls.linear.contains(x)
                                  || (two_occ && cls.occurring_twice.contains(x));
          Word img = free_image && below(rng, 3) > 0 ? random_image(rng)
                                                     : random_power(rng);
          any_multi = any_multi || content(img).size() > 1;
          theta.set(x, std::move(img));
        }
        multi += any_multi ? 1 : 0;
        std::string failed;
        if (!check_redef_star(u, theta, variant)) {
          failed = "generated substitution violates the hypothesis";
        } else if (!same_type(apply_substitution(theta, u),
                              apply_substitution(theta, v))) {
          failed = "images differ in type";
        }
        if (!failed.empty() && violations++ == 0) {
          witness = {{"u", u.to_string()},
                     {"v", v.to_string()},
                     {"theta", theta.to_string()},
                     {"problem", failed}};
        }
      }
      r.evidence = {{"cases", cases},
                    {"cases_with_multi_variable_images", multi},
                    {"cases_with_v_ne_u", changed},
                    {"violations", violations}};
      if (violations > 0) {
        r.evidence["first_violation"] = witness;
      }
      conclude(r, violations == 0 && multi > 0 && changed > 0, start);
      return r;
    }

    // check_fact_basic_pair compares a signature (linear sequence, non-linear
    // set, block contents), so it holds for all pairs of a bucket iff it
    // holds between the first word and every other word.
    ReproResult block_suite(IdentitySearchCaps const& caps) {
      auto const start = Clock::now();
      auto r = make_result("prop-identity-blocks",
                           "identities of L_4^1 keep linear letters in order and "
                           "block contents equal");
      auto const      M = lee_monoid(4);
      IdentityCatalog catalog(M, caps);
      std::uint64_t   words_checked = 0, violations = 0;
      json            witness;
      for (auto const& bucket : catalog.buckets()) {
        if (bucket.size() < 2) {
          continue;
        }
        Word const first = catalog.word(bucket[0]);
        for (std::size_t i = 1; i < bucket.size(); ++i) {
          Word const w = catalog.word(bucket[i]);
          ++words_checked;
          if (!check_fact_basic_pair(first, w) && violations++ == 0) {
            witness = Identity(first, w, IdentityKind::Monoid).to_string();
          }
        }
      }
      auto const identities = catalog.count_identities();
      r.evidence = {{"caps", caps_json(caps)},
                    {"words", catalog.num_words()},
                    {"identities", identities},
                    {"words_in_shared_buckets", words_checked},
                    {"violations", violations}};
      if (violations > 0) {
        r.evidence["first_violation"] = witness;
      }
      conclude(r, violations == 0 && identities > 0, start);
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // Fuzzing
    ////////////////////////////////////////////////////////////////////////

    struct TrialOutcome {
      bool                drawn     = false;  // an identity was drawn
      bool                retyping  = false;  // its sides differ in type
      std::uint64_t       matched   = 0;
      bool                truncated = false;
      std::optional<json> violation;
    };

    // Parses U left to right into factors, reusing an earlier factor when it
    // fits, so that the result is a word u with Theta(u) = U for some Theta.
    // Returns nothing if u leaves the caps.
    std::optional<Word> guided_left_side(Rng& rng, Word const& U,
                                         std::vector<Variable> const& vars,
                                         IdentitySearchCaps const&    caps) {
      std::vector<Variable> letters;
      for (auto const& r : U.runs()) {
        letters.insert(letters.end(), r.exp, r.var);
      }
      std::vector<std::pair<std::size_t, std::size_t>> images;  // (start, length)
      Word        u;
      std::size_t pos = 0;
      while (pos < letters.size()) {
        std::vector<std::size_t> fits;
        for (std::size_t k = 0; k < images.size(); ++k) {
          auto const [s, len] = images[k];
          if (pos + len <= letters.size()
              && std::equal(letters.begin() + static_cast<std::ptrdiff_t>(s),
                            letters.begin() + static_cast<std::ptrdiff_t>(s + len),
                            letters.begin() + static_cast<std::ptrdiff_t>(pos))) {
            fits.push_back(k);
          }
        }
        std::size_t k;
        if (!fits.empty() && (images.size() == vars.size() || below(rng, 4) > 0)) {
          k = fits[below(rng, fits.size())];
        } else if (images.size() < vars.size()) {
          std::size_t const room = letters.size() - pos;
          // Short factors feed powers; long ones absorb the rest of U.
          std::size_t const len =
              1 + below(rng, below(rng, 2) == 0 ? std::min<std::size_t>(room, 3) : room);
          k                      = images.size();
          images.emplace_back(pos, len);
        } else {
          return std::nullopt;
        }
        u.append(vars[k], 1);
        pos += images[k].second;
        if (u.num_runs() > caps.max_runs || u.runs().back().exp > caps.exp_cap) {
          return std::nullopt;
        }
      }
      return u;
    }
  }  // namespace

  json ReproResult::to_json() const {
    return {{"claim", claim},
            {"anchor", anchor},
            {"status", status == ReproStatus::Pass ? "pass" : "fail"},
            {"evidence", evidence},
            {"elapsed_ms", elapsed_ms}};
  }

  std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 over seed and stream.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
  }

  ReproResult tau_fuzz(FiniteAlgebra const& M, FuzzConfig const& cfg) {
    bool const un = cfg.target == FuzzTarget::UnVn;
    if (cfg.trials == 0) {
      throw InvalidArgument("tau_fuzz needs at least one trial");
    }
    if (cfg.n < (un ? 3U : 2U)) {
      throw InvalidArgument(std::string("tau_fuzz needs n >= ") + (un ? "3" : "2"));
    }
    auto const start = Clock::now();
    auto       r     = make_result(
        un ? "tau-fuzz-UnVn" : "tau-fuzz-el30",
        un ? "identities in fewer than n - 1 variables preserve the type of "
             "words of the type of U_n under every matching substitution"
           : "identities in fewer than n variables preserve the type of words "
             "of the type of x y1 ... yn x under every matching substitution");
    json&      ev = r.evidence;
    ev["mode"]    = "bounded randomized falsifier";
    ev["n"]       = cfg.n;
    ev["seed"]    = cfg.seed;
    ev["sampling"] = cfg.sampling == FuzzSampling::Guided ? "guided" : "uniform";

    std::size_t const ell = un ? 4 : 3;
    auto const        pre = check_c_ell_exact(M, ell, cfg.identity_caps.memory_mb);
    ev["precondition"]    = {{"property", "C" + std::to_string(ell)},
                             {"holds", pre.verdict},
                             {"bounds", pre.bounds}};

    IdentitySearchCaps caps = cfg.identity_caps;
    caps.max_vars           = std::min(caps.max_vars, un ? cfg.n - 2 : cfg.n - 1);
    ev["identity_caps"]     = caps_json(caps);

    IdentityCatalog const    catalog(M, caps);
    std::vector<std::size_t> pool;
    std::vector<std::uint64_t> cumulative;
    std::uint64_t            pairs = 0;
    for (std::size_t b = 0; b < catalog.buckets().size(); ++b) {
      std::uint64_t const k = catalog.buckets()[b].size();
      if (k >= 2) {
        pairs += k * (k - 1);
        pool.push_back(b);
        cumulative.push_back(pairs);
      }
    }
    ev["identity_pool"] = {{"words", catalog.num_words()},
                           {"buckets_with_identities", pool.size()},
                           {"ordered_pairs", pairs}};
    if (pool.empty()) {
      ev["note"]       = "0 nontrivial identities";
      ev["trials_run"] = 0;
      ev["matched_instances"] = 0;
      ev["violations"] = 0;
      conclude(r, true, start);
      return r;
    }

    std::uint32_t const exp_cap = [&] {
      if (cfg.exp_cap != 0) {
        return cfg.exp_cap;
      }
      auto const e = index_period(M);
      return static_cast<std::uint32_t>(e.index + e.period);
    }();
    ev["target_exp_cap"] = exp_cap;
    Word const shape = un ? type_normal_form(make_un_vn(cfg.n).lhs)
                          : type_normal_form(make_el30(cfg.n, 2).lhs);

    // Guided draws need to find a word's bucket.
    std::unordered_map<std::string, std::uint32_t> word_bucket;
    if (cfg.sampling == FuzzSampling::Guided) {
      for (std::size_t b = 0; b < catalog.buckets().size(); ++b) {
        if (catalog.buckets()[b].size() < 2) {
          continue;
        }
        for (auto id : catalog.buckets()[b]) {
          word_bucket.emplace(catalog.word(id).to_string(), static_cast<std::uint32_t>(b));
        }
      }
    }
    auto const vars = standard_variables(caps.max_vars);

    auto trial = [&](std::size_t t) {
      TrialOutcome out;
      Rng          rng(split_seed(cfg.seed, t));

      std::vector<Run> runs = shape.runs();
      for (auto& run : runs) {
        run.exp = between(rng, 1, exp_cap);
      }
      Word const U(std::move(runs));

      Word u, v;
      if (cfg.sampling == FuzzSampling::Uniform) {
        auto const pick = std::uniform_int_distribution<std::uint64_t>(0, pairs - 1)(rng);
        auto const slot = static_cast<std::size_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), pick)
            - cumulative.begin());
        auto const& bucket = catalog.buckets()[pool[slot]];
        std::size_t i      = below(rng, bucket.size());
        std::size_t j      = below(rng, bucket.size() - 1);
        j += j >= i ? 1 : 0;
        u = catalog.word(bucket[i]);
        v = catalog.word(bucket[j]);
      } else {
        auto found = guided_left_side(rng, U, vars, caps);
        if (!found) {
          return out;
        }
        auto const it = word_bucket.find(found->to_string());
        if (it == word_bucket.end()) {
          return out;
        }
        auto const& bucket = catalog.buckets()[it->second];
        std::size_t j      = below(rng, bucket.size());
        Word        cand   = catalog.word(bucket[j]);
        if (cand == *found) {
          cand = catalog.word(bucket[(j + 1) % bucket.size()]);
        }
        u = std::move(*found);
        v = std::move(cand);
      }
      out.drawn    = true;
      out.retyping = !same_type(u, v);

      std::size_t seen = 0;
      match_pattern(u, U, SubstitutionMode::IntoPlus, [&](WordSubstitution const& theta) {
        if (seen == cfg.solution_cap) {
          out.truncated = true;
          return false;
        }
        ++seen;
        Word const image = apply_substitution(theta, v);
        if (!same_type(U, image)) {
          out.violation = json{{"trial", t},
                               {"identity", Identity(u, v, catalog.identity_kind()).to_string()},
                               {"U", U.to_string()},
                               {"theta", theta.to_string()},
                               {"image", image.to_string()}};
          return false;
        }
        return true;
      });
      out.matched = seen;
      return out;
    };

    std::uint64_t matched = 0, trials_matched = 0, truncated = 0, drawn = 0,
                  retyping = 0;
    std::size_t   trials_run = 0;
    std::optional<json> violation;
    std::size_t const   batch = 64 * std::max(1U, cfg.threads);
    bool                done  = false;
    for (std::size_t base = 0; base < cfg.trials && !done; base += batch) {
      std::size_t const         count = std::min(batch, cfg.trials - base);
      std::vector<TrialOutcome> outcomes(count);
      parallel_for(count, cfg.threads,
                   [&](std::size_t i) { outcomes[i] = trial(base + i); });
      for (auto const& o : outcomes) {
        ++trials_run;
        drawn += o.drawn ? 1 : 0;
        retyping += o.retyping && o.matched > 0 ? 1 : 0;
        matched += o.matched;
        trials_matched += o.matched > 0 ? 1 : 0;
        truncated += o.truncated ? 1 : 0;
        if (o.violation) {
          violation = o.violation;
          done      = true;
          break;
        }
        if (cfg.stop_after_matches != 0 && matched >= cfg.stop_after_matches) {
          done = true;
          break;
        }
      }
    }
    ev["trials_run"]        = trials_run;
    ev["identities_drawn"]  = drawn;
    ev["trials_matched"]    = trials_matched;
    ev["matched_trials_with_different_types"] = retyping;
    ev["matched_instances"] = matched;
    ev["truncated_pairs"]   = truncated;
    ev["violations"]        = violation ? 1 : 0;
    if (violation) {
      ev["witness"] = *violation;
    }
    conclude(r, !violation, start);
    return r;
  }

  std::vector<ReproResult> lemma_property_suites(std::uint64_t seed, std::size_t cases,
                                                 std::optional<IdentitySearchCaps> fact_caps) {
    std::vector<ReproResult> out;
    out.push_back(projection_suite(split_seed(seed, 1), cases));
    out.push_back(erasure_suite(split_seed(seed, 2), cases));
    out.push_back(substitution_suite(split_seed(seed, 3), cases, RedefVariant::Lemma52));
    out.push_back(substitution_suite(split_seed(seed, 4), cases, RedefVariant::Lemma41));
    out.push_back(block_suite(fact_caps.value_or(IdentitySearchCaps{3, 8, 3})));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reproduction list
  ////////////////////////////////////////////////////////////////////////

  namespace {
    ReproResult claim_sizes() {
      auto const start = Clock::now();
      auto r = make_result("lee-element-counts",
                           "L_2 and L_3 have 4 and 6 elements; L_2^1, L_3^1 and "
                           "L_4^1 have 5, 7 and 9");
      bool ok = true;
      for (auto [ell, want] : {std::pair{2, 4}, {3, 6}}) {
        auto const got = lee_semigroup(ell).size();
        r.evidence["L" + std::to_string(ell)] = got;
        ok = ok && got == static_cast<std::size_t>(want);
      }
      for (auto [ell, want] : {std::pair{2, 5}, {3, 7}, {4, 9}}) {
        auto const got = lee_monoid(ell).size();
        r.evidence["L" + std::to_string(ell) + "^1"] = got;
        ok = ok && got == static_cast<std::size_t>(want);
      }
      conclude(r, ok, start);
      return r;
    }

    ReproResult claim_un_vn(std::size_t max_n, unsigned threads) {
      auto const start = Clock::now();
      auto r = make_result("L41-satisfies-UnVn n=1.." + std::to_string(max_n),
                           "L_4^1 satisfies U_n == V_n for every n");
      auto const M  = lee_monoid(4);
      bool       ok = true;
      for (std::size_t n = 1; n <= max_n; ++n) {
        auto const res = satisfies(M, make_un_vn(n), threads);
        r.evidence["n=" + std::to_string(n)] = {{"holds", res.holds},
                                               {"substitutions", res.substitutions_checked}};
        ok = ok && res.holds;
      }
      conclude(r, ok, start);
      return r;
    }

    ReproResult claim_l51_fails() {
      auto const start = Clock::now();
      auto r = make_result("L51-fails-U3V3",
                           "L_5^1 violates U_3 == V_3; x1 -> b, x2 -> a, x3 -> b "
                           "sends U_3 to 0 and V_3 to babab");
      auto const M   = lee_monoid(5);
      auto const id  = make_un_vn(3);
      auto const res = satisfies(M, id);
      ElementSubstitution witness;
      witness.emplace(Variable("x1"), M.index_of("b"));
      witness.emplace(Variable("x2"), M.index_of("a"));
      witness.emplace(Variable("x3"), M.index_of("b"));
      auto const lhs = M.name(evaluate(M, witness, id.lhs));
      auto const rhs = M.name(evaluate(M, witness, id.rhs));
      r.evidence     = {{"holds", res.holds},
                        {"witness_values", {{"lhs", lhs}, {"rhs", rhs}}}};
      bool first_ok = false;
      if (res.counterexample) {
        auto const& ce = *res.counterexample;
        r.evidence["first_counterexample"] = substitution_to_json(M, ce);
        r.evidence["first_counterexample_values"] = {
            {"lhs", M.name(evaluate(M, ce, id.lhs))},
            {"rhs", M.name(evaluate(M, ce, id.rhs))}};
        first_ok = evaluate(M, ce, id.lhs) != evaluate(M, ce, id.rhs);
      }
      conclude(r, !res.holds && first_ok && lhs == "0" && rhs == "babab", start);
      return r;
    }

    ReproResult claim_el3_n1() {
      auto const start = Clock::now();
      auto r = make_result("L41-fails-el3 n=1",
                           "for n = 1 the identity x y x y == y x y x fails on "
                           "L_4^1; x -> a, y -> b gives 0 and baba");
      auto const M   = lee_monoid(4);
      auto const id  = make_el3(1);
      auto const res = satisfies(M, id);
      ElementSubstitution sigma{{Variable("x1"), M.index_of("a")},
                                {Variable("y1"), M.index_of("b")}};
      auto const lhs = M.name(evaluate(M, sigma, id.lhs));
      auto const rhs = M.name(evaluate(M, sigma, id.rhs));
      r.evidence     = {{"identity", id.to_string()},
                        {"holds", res.holds},
                        {"witness_values", {{"lhs", lhs}, {"rhs", rhs}}}};
      if (res.counterexample) {
        r.evidence["first_counterexample"] = substitution_to_json(M, *res.counterexample);
      }
      conclude(r, !res.holds && lhs == "0" && rhs == "baba", start);
      return r;
    }

    ReproResult claim_xyxyyx() {
      auto const start = Clock::now();
      auto r = make_result("L41-satisfies-xyxyyx",
                           "L_4^1 satisfies x y x y y x == x y x y x y");
      auto const M   = lee_monoid(4);
      auto const res = satisfies(M, parse_identity("x y x y^2 x == x y x y x y",
                                                   IdentityKind::Monoid));
      r.evidence = {{"holds", res.holds}, {"substitutions", res.substitutions_checked}};
      conclude(r, res.holds && res.substitutions_checked == 81, start);
      return r;
    }

    ReproResult claim_c_ell() {
      auto const start = Clock::now();
      auto r = make_result("c-ell-exact",
                           "a semigroup or monoid has the height-l type-term "
                           "property iff its variety contains L_l or L_l^1; "
                           "L_4^1 has it for l = 4 but not l = 5");
      struct Case {
        char const*   name;
        FiniteAlgebra S;
        std::size_t   ell;
        bool          expected;
      };
      std::vector<Case> cases;
      cases.push_back({"L4^1,4", lee_monoid(4), 4, true});
      cases.push_back({"L4^1,5", lee_monoid(4), 5, false});
      cases.push_back({"L5^1,4", lee_monoid(5), 4, true});
      cases.push_back({"L3,3", lee_semigroup(3), 3, true});
      bool ok = true;
      for (auto const& c : cases) {
        auto const rep = check_c_ell_exact(c.S, c.ell);
        json       e   = {{"verdict", rep.verdict}, {"bounds", rep.bounds}};
        bool       good = rep.verdict == c.expected;
        if (!rep.verdict) {
          good = good && rep.certificate.has_value();
          if (rep.certificate) {
            auto const T         = c.S.kind() == AlgebraKind::Monoid ? lee_monoid(c.ell)
                                                                     : lee_semigroup(c.ell);
            bool const on_s      = satisfies(c.S, *rep.certificate).holds;
            bool const on_t      = satisfies(T, *rep.certificate).holds;
            e["certificate"]     = rep.certificate->to_string();
            e["certificate_on_S"] = on_s;
            e["certificate_on_Lee"] = on_t;
            good = good && on_s && !on_t;
          }
        }
        r.evidence[c.name] = std::move(e);
        ok = ok && good;
      }
      conclude(r, ok, start);
      return r;
    }

    ReproResult claim_el30() {
      auto const start = Clock::now();
      auto r = make_result("L3-satisfies-el30 k=2 n=2..4",
                           "L_3 satisfies x^k y1^k ... yn^k x^k == x^k yn^k ... "
                           "y1^k x^k");
      auto const M  = lee_semigroup(3);
      bool       ok = true;
      for (std::size_t n = 2; n <= 4; ++n) {
        auto const res = satisfies(M, make_el30(n, 2));
        r.evidence["n=" + std::to_string(n)] = {{"holds", res.holds},
                                               {"substitutions", res.substitutions_checked}};
        ok = ok && res.holds;
      }
      conclude(r, ok, start);
      return r;
    }

    ReproResult claim_un_properties() {
      auto const start = Clock::now();
      auto r = make_result("P1-P7 n=3..10",
                           "the seven structural properties of U_n hold for "
                           "every n > 2");
      bool ok = true;
      for (std::size_t n = 3; n <= 10; ++n) {
        auto const rep = check_un_properties(make_un_vn(n).lhs, n);
        json       e   = {{"verdict", rep.verdict}};
        if (!rep.violations.empty()) {
          e["first_violation"] = rep.violations.front().clause;
        }
        r.evidence["n=" + std::to_string(n)] = std::move(e);
        ok = ok && rep.verdict;
      }
      conclude(r, ok, start);
      return r;
    }

    ReproResult claim_type_separation() {
      auto const start = Clock::now();
      auto r = make_result("UnVn-type-separation",
                           "U_n and V_n differ in type for n > 2 since only U_n "
                           "contains x_n x_(n-1); for n <= 2 they coincide in type");
      bool ok = true;
      for (std::size_t n = 1; n <= 10; ++n) {
        auto const id   = make_un_vn(n);
        bool const same = same_type(id.lhs, id.rhs);
        r.evidence["n=" + std::to_string(n)] = same;
        ok = ok && same == (n <= 2);
      }
      conclude(r, ok, start);
      return r;
    }

    bool contains_identity(std::vector<Identity> const& ids, Word const& a,
                           Word const& b) {
      return std::any_of(ids.begin(), ids.end(), [&](Identity const& id) {
        return (id.lhs == a && id.rhs == b) || (id.lhs == b && id.rhs == a);
      });
    }

    // Independent of IdentityCatalog: list the words directly and test every
    // pair with satisfies.
    std::set<std::pair<std::string, std::string>>
    brute_force_identities(FiniteAlgebra const& M, IdentitySearchCaps const& caps) {
      auto const        vars = standard_variables(caps.max_vars);
      std::vector<Word> words;
      std::vector<Run>  runs;
      auto              extend = [&](auto&& self) -> void {
        if (!runs.empty()) {
          words.emplace_back(runs);
        }
        if (runs.size() == caps.max_runs) {
          return;
        }
        for (auto const& x : vars) {
          if (!runs.empty() && runs.back().var == x) {
            continue;
          }
          for (std::uint32_t e = 1; e <= caps.exp_cap; ++e) {
            runs.push_back(Run{x, e});
            self(self);
            runs.pop_back();
          }
        }
      };
      extend(extend);
      auto const kind = M.kind() == AlgebraKind::Monoid ? IdentityKind::Monoid
                                                        : IdentityKind::Semigroup;
      std::set<std::pair<std::string, std::string>> out;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          if (content(words[i]) != content(words[j]) || same_type(words[i], words[j])) {
            continue;
          }
          if (satisfies(M, Identity(words[i], words[j], kind)).holds) {
            auto a = words[i].to_string(), b = words[j].to_string();
            out.emplace(std::min(a, b), std::max(a, b));
          }
        }
      }
      return out;
    }

    ReproResult claim_find_identities() {
      auto const start = Clock::now();
      auto r = make_result("find-identities L41 (2,6,2)",
                           "the identity search over L_4^1 finds x y x y y x == "
                           "x y x y x y, is sound, and is complete at small caps");
      auto const M   = lee_monoid(4);
      auto const ids = find_identities(M, {2, 6, 2});
      Variable const x("x"), y("y");
      bool const has_xy = contains_identity(ids, parse_word("x y x y^2 x"),
                                            parse_word("x y x y x y"));
      bool const has_x2 = contains_identity(ids, Word::power(x, 2), Word::power(x, 3));
      std::optional<std::string> unsound;
      for (auto const& id : ids) {
        if (!satisfies(M, id).holds) {
          unsound = id.to_string();
          break;
        }
      }
      bool const sound = !unsound;

      auto as_pairs = [](std::vector<Identity> const& list) {
        std::set<std::pair<std::string, std::string>> out;
        for (auto const& id : list) {
          auto a = id.lhs.to_string(), b = id.rhs.to_string();
          out.emplace(std::min(a, b), std::max(a, b));
        }
        return out;
      };
      // The small caps hold no identity at all, so the cross-check is
      // repeated at the full caps.
      auto const small       = as_pairs(find_identities(M, {2, 4, 2}));
      auto const small_brute = brute_force_identities(M, {2, 4, 2});
      auto const full_brute  = brute_force_identities(M, {2, 6, 2});
      bool const complete    = small == small_brute && as_pairs(ids) == full_brute;

      // x^2 == x^3 is reported separately: it has exponent 3, the pair has a
      // single type, and on L_4^1 x -> ba separates the sides.
      ElementSubstitution sigma{{x, M.index_of("ba")}};
      auto const x2 = M.name(evaluate(M, sigma, Word::power(x, 2)));
      auto const x3 = M.name(evaluate(M, sigma, Word::power(x, 3)));

      r.evidence = {{"identities", ids.size()},
                    {"contains_xyxyyx", has_xy},
                    {"contains_x2_x3", has_x2},
                    {"x2_x3_at_x=ba", {{"lhs", x2}, {"rhs", x3}}},
                    {"sound", sound},
                    {"complete", complete},
                    {"search_count_at_2_4_2", small.size()},
                    {"brute_force_count_at_2_4_2", small_brute.size()},
                    {"brute_force_count_at_2_6_2", full_brute.size()}};
      if (unsound) {
        r.evidence["unsound"] = *unsound;
      }
      conclude(r, has_xy && has_x2 && sound && complete, start);
      return r;
    }

    // A fuzz claim also needs enough matched substitutions to mean something.
    ReproResult with_min_matches(ReproResult r, std::uint64_t need) {
      auto const got = r.evidence.value("matched_instances", std::uint64_t{0});
      r.evidence["required_matches"] = need;
      if (got < need) {
        r.status = ReproStatus::Fail;
      }
      return r;
    }
  }  // namespace

  std::vector<ReproResult> repro_suite(ReproOptions const& opts) {
    std::vector<ReproResult> out;
    out.push_back(claim_sizes());
    out.push_back(claim_un_vn(opts.quick ? 4 : 6, opts.threads));
    out.push_back(claim_l51_fails());
    out.push_back(claim_el3_n1());
    out.push_back(claim_xyxyyx());
    out.push_back(claim_c_ell());
    out.push_back(claim_el30());
    out.push_back(claim_un_properties());
    out.push_back(claim_type_separation());

    std::size_t const cases = opts.quick ? 200 : 1000;
    auto const fact_caps = opts.quick ? IdentitySearchCaps{3, 5, 3} : IdentitySearchCaps{3, 8, 3};
    for (auto& s : lemma_property_suites(opts.seed, cases, fact_caps)) {
      out.push_back(std::move(s));
    }

    FuzzConfig un;
    un.seed               = opts.seed;
    un.n                  = 5;
    un.trials             = opts.quick ? 2000 : 200000;
    un.stop_after_matches = opts.quick ? 100 : 2000;
    un.threads            = opts.threads;
    out.push_back(with_min_matches(tau_fuzz(lee_monoid(4), un), opts.quick ? 100 : 1000));
    FuzzConfig el;
    el.seed          = opts.seed;
    el.n             = 4;
    el.target        = FuzzTarget::Lee30;
    el.trials        = opts.quick ? 2000 : 200000;
    el.stop_after_matches = opts.quick ? 100 : 2000;
    el.threads       = opts.threads;
    out.push_back(with_min_matches(tau_fuzz(lee_semigroup(3), el), opts.quick ? 100 : 1000));

    out.push_back(claim_find_identities());
    return out;
  }

}  // namespace leewb
