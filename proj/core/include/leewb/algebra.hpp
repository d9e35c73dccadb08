// Finite semigroups and monoids given by multiplication tables: word
// evaluation, identity checking, term functions, identity search and
// membership of a finite algebra in the variety generated by another.

#ifndef LEEWB_ALGEBRA_HPP_
#define LEEWB_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leewb/words.hpp"

namespace leewb {

  using Element = std::uint16_t;

  enum class AlgebraKind { Semigroup, Monoid };

  //! A validated finite semigroup or monoid. Immutable once constructed.
  class FiniteAlgebra {
   public:
    //! Validates every invariant eagerly: squareness, range of entries,
    //! associativity (reporting a witnessing triple), identity and zero
    //! claims, and that the generators (with the identity, for monoids)
    //! generate everything. The kind is Monoid iff an identity is given.
    static FiniteAlgebra from_table(std::vector<std::string>          names,
                                    std::vector<std::vector<Element>> table,
                                    std::optional<Element> identity  = {},
                                    std::optional<Element> zero      = {},
                                    std::optional<std::vector<Element>> generators = {});

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] AlgebraKind kind() const noexcept {
      return _identity ? AlgebraKind::Monoid : AlgebraKind::Semigroup;
    }
    [[nodiscard]] Element product(Element x, Element y) const noexcept {
      return _table[static_cast<std::size_t>(x) * size() + y];
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::string const& name(Element x) const {
      return _names.at(x);
    }
    //! Throws InvalidArgument for an unknown name.
    [[nodiscard]] Element index_of(std::string const& name) const;

    [[nodiscard]] std::optional<Element> identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] std::optional<Element> zero() const noexcept {
      return _zero;
    }
    [[nodiscard]] std::optional<std::vector<Element>> const&
    generators() const noexcept {
      return _generators;
    }

    //! The table as rows, for serialization.
    [[nodiscard]] std::vector<std::vector<Element>> rows() const;

    //! x^k for k >= 1.
    [[nodiscard]] Element power(Element x, std::uint64_t k) const;

    friend bool operator==(FiniteAlgebra const&, FiniteAlgebra const&) = default;

   private:
    FiniteAlgebra() = default;

    std::vector<std::string>            _names;
    std::vector<Element>                _table;  // row-major, size() ^ 2
    std::optional<Element>              _identity;
    std::optional<Element>              _zero;
    std::optional<std::vector<Element>> _generators;
  };

  //! An assignment of elements to variables.
  using ElementSubstitution = std::map<Variable, Element>;

  [[nodiscard]] std::string to_string(FiniteAlgebra const&       M,
                                      ElementSubstitution const& sigma);

  //! The value of u under sigma; the empty word evaluates to the identity.
  //! Throws InvalidArgument for an unmapped variable, or for the empty word
  //! in a semigroup.
  [[nodiscard]] Element evaluate(FiniteAlgebra const&       M,
                                 ElementSubstitution const& sigma,
                                 Word const&                u);

  struct IdentityCheck {
    bool                               holds = true;
    std::optional<ElementSubstitution> counterexample;
    std::uint64_t                      substitutions_checked = 0;
  };

  struct Exponents {
    std::uint64_t index;
    std::uint64_t period;

    friend bool operator==(Exponents const&, Exponents const&) = default;
  };

  //! Smallest (i, p) with x^(i+p) = x^i for every element x.
  [[nodiscard]] Exponents index_period(FiniteAlgebra const& M);

  //! Variables of an identity in the order used to enumerate substitutions:
  //! first occurrence in lhs, then in rhs.
  [[nodiscard]] std::vector<Variable> identity_variables(Identity const& id);

  //! Checks u ~ v under all |M|^k substitutions, in lexicographic order of
  //! the element tuples over identity_variables(id). On failure reports the
  //! first failing substitution. `threads` partitions the search; the result
  //! does not depend on it. Throws InvalidArgument if a monoid identity is
  //! checked on a semigroup.
  [[nodiscard]] IdentityCheck satisfies(FiniteAlgebra const& M,
                                        Identity const&      id,
                                        unsigned             threads = 1);

  //! The function M^k -> M induced by a word over k ordered variables.
  //! Tuples are indexed in mixed radix with the first variable most
  //! significant.
  struct TermFunction {
    std::vector<Variable> vars;
    std::size_t           algebra_size = 0;
    std::vector<Element>  table;

    [[nodiscard]] std::size_t arity() const noexcept {
      return vars.size();
    }
    [[nodiscard]] Element operator()(std::vector<Element> const& args) const;

    friend bool operator==(TermFunction const&, TermFunction const&) = default;
  };

  //! Throws InvalidArgument if con(u) is not contained in vars.
  [[nodiscard]] TermFunction term_function(FiniteAlgebra const&         M,
                                           Word const&                  u,
                                           std::vector<Variable> const& vars);

  ////////////////////////////////////////////////////////////////////////
  // Identity search
  ////////////////////////////////////////////////////////////////////////

  struct IdentitySearchCaps {
    std::size_t   max_vars = 2;
    std::size_t   max_runs = 4;
    std::uint32_t exp_cap  = 2;
    //! Budget for words, buckets and emitted pairs; 0 means the
    //! WORKBENCH_MEM_MB environment variable, or 2048 MB if unset.
    std::size_t   memory_mb = 0;
    //! Bucket by term function alone instead of (variable set, term
    //! function).
    bool          ignore_content = false;
  };

  //! The standard variable names used by enumerations: x, y, z, w, then
  //! x5, x6, ...
  [[nodiscard]] std::vector<Variable> standard_variables(std::size_t k);

  //! All canonical words over standard_variables(max_vars) with at most
  //! max_runs runs and exponents in [1, exp_cap], grouped by their variable
  //! set and term function. Buckets and the words within them are listed in
  //! enumeration order: by number of runs, then lexicographically.
  //!
  //! Words are stored packed; word(id) materializes one.
  class IdentityCatalog {
   public:
    using WordId = std::uint32_t;

    IdentityCatalog(FiniteAlgebra const& M, IdentitySearchCaps caps);

    [[nodiscard]] std::vector<std::vector<WordId>> const& buckets() const noexcept {
      return _buckets;
    }
    [[nodiscard]] std::size_t num_words() const noexcept {
      return _offsets.size() - 1;
    }
    [[nodiscard]] Word word(WordId id) const;
    [[nodiscard]] IdentitySearchCaps const& caps() const noexcept {
      return _caps;
    }
    [[nodiscard]] IdentityKind identity_kind() const noexcept {
      return _kind;
    }
    //! Bytes held by the packed words, bucket keys and bucket lists.
    [[nodiscard]] std::size_t memory_used() const noexcept {
      return _memory;
    }

    //! True iff the words have the same type.
    [[nodiscard]] bool same_type(WordId a, WordId b) const noexcept;

    //! Calls visit(u, v) for every pair u before v within a bucket that are
    //! not of the same type; return false from visit to stop. Returns the
    //! number of pairs visited.
    std::uint64_t for_each_identity(
        std::function<bool(Word const&, Word const&)> const& visit) const;

    //! Number of pairs for_each_identity would visit.
    [[nodiscard]] std::uint64_t count_identities() const;

   private:
    IdentitySearchCaps                 _caps;
    IdentityKind                       _kind;
    std::vector<Variable>              _vars;
    std::vector<std::uint16_t>         _codes;    // (var << 8) | exp per run
    std::vector<std::uint32_t>         _offsets;  // into _codes, per word
    std::vector<std::vector<WordId>>   _buckets;
    std::size_t                        _memory = 0;
  };

  //! Every nontrivial identity found by IdentityCatalog, in deterministic
  //! order. Throws ResourceLimit if the memory budget is exceeded.
  [[nodiscard]] std::vector<Identity> find_identities(FiniteAlgebra const& M,
                                                      IdentitySearchCaps   caps);

  ////////////////////////////////////////////////////////////////////////
  // Variety membership
  ////////////////////////////////////////////////////////////////////////

  struct VarietyMembership {
    bool contains = true;
    //! On false: two words over standard_variables(k) with the same term
    //! function on S and different values on the generators of T.
    std::optional<Identity> certificate;
    //! Number of distinct (term function, value) pairs generated.
    std::size_t closure_size = 0;
  };

  //! Decides whether T lies in the variety generated by S, by closing
  //! {(projection_i, g_i)} inside S^(S^k) x T. `memory_mb` as in
  //! IdentitySearchCaps. Throws InvalidArgument if T has no generators or
  //! the kinds differ, and ResourceLimit if the closure exceeds the budget.
  [[nodiscard]] VarietyMembership variety_contains(FiniteAlgebra const& S,
                                                   FiniteAlgebra const& T,
                                                   std::size_t memory_mb = 0);

  //! Resolves a memory budget in megabytes (see IdentitySearchCaps).
  [[nodiscard]] std::size_t memory_budget_bytes(std::size_t memory_mb);

}  // namespace leewb

#endif  // LEEWB_ALGEBRA_HPP_
