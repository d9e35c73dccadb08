// Checkers for word conditions and for the property that every two-letter
// word of bounded height forms identities only within its type.

#ifndef LEEWB_CONDITIONS_HPP_
#define LEEWB_CONDITIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leewb/algebra.hpp"
#include "leewb/words.hpp"

namespace leewb {

  struct Violation {
    std::string witness;  // an identity, a word, or the variables involved
    std::string clause;

    friend bool operator==(Violation const&, Violation const&) = default;
  };

  //! verdict is true iff violations is empty.
  struct ConditionReport {
    bool                   verdict = true;
    std::vector<Violation> violations;
    std::string            bounds = "exact";
    //! The certificate behind an exact negative answer, if any.
    std::optional<Identity> certificate;
    //! Violations found, including any not stored in `violations`.
    std::uint64_t violation_count = 0;

    void add(std::string witness, std::string clause);
  };

  //! "Every word over {x, y} of height at most ell is a type term", decided
  //! exactly: true iff L_ell (semigroup S) or L_ell^1 (monoid S) lies in
  //! var S. A negative answer carries the conflicting identity.
  [[nodiscard]] ConditionReport check_c_ell_exact(FiniteAlgebra const& S,
                                                  std::size_t          ell,
                                                  std::size_t memory_mb = 0);

  //! Refutes the same property within caps: every u over {x, y} of height
  //! at most ell (at most run_cap runs, exponents <= exp_cap) is compared
  //! with every v over {x, y} within the caps. A true verdict only means no
  //! violation was found. At most `max_reported` violations are stored.
  [[nodiscard]] ConditionReport
  check_c_ell_bounded(FiniteAlgebra const& M, std::size_t ell,
                      std::uint32_t exp_cap, std::size_t run_cap,
                      std::size_t max_reported = 256);

  //! Hypotheses for words with exactly two non-linear variables x, y:
  //! u(x, y) has height <= 4 and every block has height <= 3. Throws
  //! InvalidArgument if u does not have exactly two non-linear variables.
  [[nodiscard]] bool check_2let(Word const& u);

  //! Clauses I-IV for arbitrary words:
  //!   I    every u(x, y) has height <= 4;
  //!   II   no block deletes to x+ y+ x+ y+;
  //!   III  no block deletes to x+ y+ x+ z+ x+;
  //!   IV   if a block B deletes to x+ y+ z+ x+, then y left of B excludes z
  //!        right of B (a), and z left of B excludes y right of B (b).
  [[nodiscard]] ConditionReport check_manylet(Word const& u);

  //! The seven structural properties P1-P7 of the words of the same type as
  //! (x1..xn)(xn..x1)(x1..xn). Throws InvalidArgument unless
  //! con(u) = {x1, ..., xn}.
  [[nodiscard]] ConditionReport check_un_properties(Word const& u, std::size_t n);

  struct SemShape {
    enum class Kind { OneIslandEach, SandwichWithLinear, Other };
    Kind                    kind = Kind::Other;
    std::optional<Variable> x;  // the sandwiching variable

    [[nodiscard]] std::string to_string() const;
  };

  //! Classifies a nonempty word: every variable forms one island; or u
  //! begins and ends with x, x forms exactly two islands, u has a linear
  //! letter and every other variable forms one island; or neither.
  [[nodiscard]] SemShape check_sem_shape(Word const& u);

  //! Same linear and non-linear variables, same order of linear letters and
  //! corresponding blocks with equal content.
  [[nodiscard]] bool check_fact_basic_pair(Word const& u, Word const& v);

  enum class RedefVariant {
    Lemma52,  // multi-variable images only for x in lin(u) or con_2(u)
    Lemma41   // multi-variable images only for linear x
  };

  //! Throws InvalidArgument if a variable of u is unmapped.
  [[nodiscard]] bool check_redef_star(Word const&             u,
                                      WordSubstitution const& theta,
                                      RedefVariant            variant);

}  // namespace leewb

#endif  // LEEWB_CONDITIONS_HPP_
