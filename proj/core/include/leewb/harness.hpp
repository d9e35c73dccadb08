// Reproduction and falsification harness.
//
// tau_fuzz is a bounded, randomized falsifier: it samples identities of an
// algebra together with target words and substitutions matching the left
// side onto the target, and checks that the image of the right side keeps
// the target's type. It cannot prove anything; a violation would be a
// genuine counterexample.

#ifndef LEEWB_HARNESS_HPP_
#define LEEWB_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "leewb/algebra.hpp"
#include "leewb/words.hpp"

namespace leewb {

  enum class ReproStatus { Pass, Fail };

  struct ReproResult {
    std::string    claim;
    std::string    anchor;  // what is being reproduced, in one line
    ReproStatus    status = ReproStatus::Pass;
    nlohmann::json evidence = nlohmann::json::object();
    double         elapsed_ms = 0;

    [[nodiscard]] bool passed() const noexcept {
      return status == ReproStatus::Pass;
    }
    //! {"claim", "anchor", "status", "evidence", "elapsed_ms"}.
    [[nodiscard]] nlohmann::json to_json() const;
  };

  enum class FuzzTarget {
    //! Words of the type of (x1..xn)(xn..x1)(x1..xn); identities in fewer
    //! than n - 1 variables; needs the height-4 property.
    UnVn,
    //! Words of the type of x y1 ... yn x; identities in fewer than n
    //! variables; needs the height-3 property.
    Lee30
  };

  enum class FuzzSampling {
    //! Identity pairs uniformly from the catalog. Almost none match U.
    Uniform,
    //! Left sides built by factoring U and looked up in the catalog, so most
    //! draws have at least one matching substitution; right sides uniform
    //! within the left side's bucket.
    Guided
  };

  struct FuzzConfig {
    std::uint64_t      seed   = 1;
    std::size_t        trials = 1000;
    std::size_t        n      = 5;
    IdentitySearchCaps identity_caps{3, 6, 4};
    FuzzTarget         target = FuzzTarget::UnVn;
    //! Exponents of target words are drawn from [1, exp_cap]; 0 means
    //! index + period of the algebra.
    std::uint32_t exp_cap = 0;
    FuzzSampling  sampling = FuzzSampling::Guided;
    //! Substitutions enumerated per (identity, target) pair.
    std::size_t solution_cap = 10000;
    //! Stop once this many substitutions were checked; 0 runs every trial.
    std::size_t stop_after_matches = 0;
    //! Worker threads; results do not depend on it.
    unsigned threads = 1;
  };

  //! Throws InvalidArgument if trials == 0 or n is too small for the target.
  [[nodiscard]] ReproResult tau_fuzz(FiniteAlgebra const& M, FuzzConfig const& cfg);

  //! Seeded property suites with `cases` random inputs each: the
  //! three-variable projection criterion for types, the erasure renaming,
  //! type preservation under the two substitution conditions, and the block
  //! invariants of identities of L_4^1 (identity caps 3 variables, 8 runs,
  //! exponent 3, or `fact_caps` if given).
  [[nodiscard]] std::vector<ReproResult>
  lemma_property_suites(std::uint64_t seed, std::size_t cases = 1000,
                        std::optional<IdentitySearchCaps> fact_caps = {});

  struct ReproOptions {
    std::uint64_t seed = 1;
    //! Smaller fuzz and property budgets, for smoke tests.
    bool quick = false;
    unsigned threads = 1;
  };

  //! Every reproducible claim, in a fixed order.
  [[nodiscard]] std::vector<ReproResult> repro_suite(ReproOptions const& opts = {});

  //! Splits a seed into independent per-trial streams.
  [[nodiscard]] std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace leewb

#endif  // LEEWB_HARNESS_HPP_
