// Words over a countable alphabet of variables, stored in run-length form,
// together with the combinatorial toolkit used throughout the workbench:
// types, islands, heights, blocks, projections, substitutions and pattern
// matching.

#ifndef LEEWB_WORDS_HPP_
#define LEEWB_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace leewb {

  //! A variable, identified by its name. Names match `[a-z][a-z0-9_]*`.
  //!
  //! Variables are ordered "naturally": names are split into an alphabetic
  //! stem and a trailing decimal index, so that `x2 < x10`.
  class Variable {
   public:
    explicit Variable(std::string name);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

    friend bool operator==(Variable const&, Variable const&) = default;
    friend std::strong_ordering operator<=>(Variable const& a,
                                            Variable const& b);

    [[nodiscard]] static bool valid_name(std::string_view name) noexcept;

   private:
    std::string _name;
  };

  using VarSet = std::set<Variable>;

  struct Run {
    Variable      var;
    std::uint32_t exp;

    friend bool operator==(Run const&, Run const&) = default;
  };

  //! A word in canonical run-length form: every exponent is positive and no
  //! two adjacent runs share a variable. The empty word is the monoid
  //! identity and prints as `1`.
  class Word {
   public:
    Word() = default;

    //! Canonicalizes `runs`: merges adjacent runs over the same variable.
    //! Throws InvalidArgument on a zero exponent.
    explicit Word(std::vector<Run> runs);

    static Word power(Variable const& x, std::uint32_t exp = 1);

    [[nodiscard]] std::vector<Run> const& runs() const noexcept {
      return _runs;
    }
    [[nodiscard]] bool empty() const noexcept {
      return _runs.empty();
    }
    //! Number of runs (islands).
    [[nodiscard]] std::size_t num_runs() const noexcept {
      return _runs.size();
    }
    //! Number of letters, i.e. the sum of the exponents.
    [[nodiscard]] std::size_t length() const noexcept;

    //! True iff the word is x^k for one variable x and k >= 1.
    [[nodiscard]] bool is_power() const noexcept {
      return _runs.size() == 1;
    }

    //! Appends x^exp, merging with the last run when possible.
    Word& append(Variable const& x, std::uint32_t exp = 1);
    Word& append(Word const& w);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend bool operator<(Word const& a, Word const& b);

   private:
    std::vector<Run> _runs;
  };

  [[nodiscard]] Word operator*(Word a, Word const& b);

  enum class IdentityKind { Semigroup, Monoid };

  //! u ~ v. In Semigroup kind both sides must be nonempty.
  struct Identity {
    Word         lhs;
    Word         rhs;
    IdentityKind kind = IdentityKind::Monoid;

    Identity() = default;
    Identity(Word l, Word r, IdentityKind k);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Identity const&, Identity const&) = default;
  };

  enum class SubstitutionMode {
    IntoPlus,  // every image nonempty
    IntoStar   // empty images allowed
  };

  //! A substitution of words for variables.
  class WordSubstitution {
   public:
    explicit WordSubstitution(SubstitutionMode mode = SubstitutionMode::IntoPlus)
        : _mode(mode) {}
    WordSubstitution(std::map<Variable, Word> images, SubstitutionMode mode);

    //! Throws InvalidArgument if `w` is empty in IntoPlus mode.
    WordSubstitution& set(Variable const& x, Word w);

    [[nodiscard]] Word const* find(Variable const& x) const;
    [[nodiscard]] Word const& at(Variable const& x) const;

    [[nodiscard]] std::map<Variable, Word> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] SubstitutionMode mode() const noexcept {
      return _mode;
    }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(WordSubstitution const&,
                           WordSubstitution const&) = default;

   private:
    std::map<Variable, Word> _images;
    SubstitutionMode         _mode;
  };

  //! u = a_0 t_1 a_1 ... t_m a_m where the t_i are the linear variables of
  //! u in order and the blocks a_q contain no linear variable.
  struct BlockDecomposition {
    std::vector<Word>     blocks;
    std::vector<Variable> linears;
    //! Index of the first run of u belonging to each block, and one past
    //! its last run. Empty blocks have first == last.
    std::vector<std::pair<std::size_t, std::size_t>> spans;

    [[nodiscard]] Word reassemble() const;
  };

  struct VarClasses {
    VarSet content;
    VarSet linear;           // occurring once
    VarSet occurring_twice;  // occurring exactly twice
    VarSet occurring_more;   // occurring at least three times

    [[nodiscard]] VarSet non_linear() const;
  };

  //! A run of a projected word, together with the span of runs of the
  //! source word that it was merged from.
  struct ProjectedIsland {
    Variable      var;
    std::uint32_t exp;
    std::size_t   first_run;  // index into the source word's runs
    std::size_t   last_run;   // inclusive
  };

  //! Half-open range [begin, end) of run indices.
  struct RunRange {
    std::size_t begin;
    std::size_t end;
  };

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  //! word := term (WS term)* ; term := VAR ("^" POSINT)? ; "1" is empty.
  [[nodiscard]] Word parse_word(std::string_view text);

  //! "<word> == <word>".
  [[nodiscard]] Identity parse_identity(std::string_view text,
                                        IdentityKind     kind);

  ////////////////////////////////////////////////////////////////////////
  // Content and type
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] VarSet content(Word const& u);

  //! Variables in order of first occurrence.
  [[nodiscard]] std::vector<Variable> variables_in_order(Word const& u);

  //! Total number of occurrences of x in u.
  [[nodiscard]] std::size_t occurrences(Word const& u, Variable const& x);

  [[nodiscard]] VarClasses classify_vars(Word const& u);

  //! Sets every exponent to 1.
  [[nodiscard]] Word type_normal_form(Word const& u);

  [[nodiscard]] bool same_type(Word const& u, Word const& v);

  //! Number of islands formed by x in u.
  [[nodiscard]] std::size_t islands(Word const& u, Variable const& x);

  //! Number of islands of u. On two-letter words this is the usual height.
  [[nodiscard]] std::size_t height(Word const& u);

  //! Deletes every variable not in X.
  [[nodiscard]] Word project(Word const& u, VarSet const& X);

  //! As project(), restricted to the runs in `window`, keeping track of
  //! where every surviving island came from.
  [[nodiscard]] std::vector<ProjectedIsland>
  projected_islands(Word const& u, VarSet const& X,
                    std::optional<RunRange> window = std::nullopt);

  [[nodiscard]] BlockDecomposition blocks(Word const& u);

  ////////////////////////////////////////////////////////////////////////
  // Subword counting
  ////////////////////////////////////////////////////////////////////////

  //! Number of occurrences of `pattern`, a word in type normal form, as a
  //! contiguous factor of type_normal_form(project(u, content(pattern))).
  //! This is the island-level occurrence count used by all checkers.
  [[nodiscard]] std::size_t island_pattern_count(Word const& u,
                                                 Word const& pattern);

  //! Start positions (indices into projected_islands(u, content(pattern)))
  //! of every island-level occurrence of `pattern`.
  [[nodiscard]] std::vector<std::size_t>
  island_pattern_positions(Word const& u, Word const& pattern);

  //! Number of ways to choose letter positions of u spelling `pattern`
  //! letter by letter (the classical scattered-subword count). Not used by
  //! the condition checkers.
  [[nodiscard]] std::uint64_t scattered_subword_count(Word const& u,
                                                      Word const& pattern);

  //! True iff the part of u inside `window` (all of u if absent), projected
  //! to content(pattern) and type-normalized, contains `pattern` as a
  //! factor. Throws InvalidArgument if the window is out of range.
  [[nodiscard]] bool
  contains_island_factor(Word const& u, Word const& pattern,
                         std::optional<RunRange> window = std::nullopt);

  ////////////////////////////////////////////////////////////////////////
  // Substitutions
  ////////////////////////////////////////////////////////////////////////

  //! Throws InvalidArgument if a variable of u has no image.
  [[nodiscard]] Word apply_substitution(WordSubstitution const& theta,
                                        Word const&             u);

  struct Erasure {
    Word                         word;
    std::map<Variable, Variable> renaming;  // only variables that moved
  };

  //! Renames variables of u whose images under theta are powers of a common
  //! variable to the earliest occurring one among them.
  [[nodiscard]] Erasure erase_merge(Word const&             u,
                                    WordSubstitution const& theta);

  //! Receives each solution; return false to stop the enumeration.
  using MatchVisitor = std::function<bool(WordSubstitution const&)>;

  //! Enumerates every substitution theta defined on content(u) with
  //! theta(u) == U, in lexicographic order of the split points. Returns the
  //! number of solutions visited.
  std::size_t match_pattern(Word const&      u,
                            Word const&      U,
                            SubstitutionMode mode,
                            MatchVisitor const& visit);

  //! Collects at most `limit` solutions of match_pattern.
  [[nodiscard]] std::vector<WordSubstitution>
  match_all(Word const& u, Word const& U, SubstitutionMode mode,
            std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace leewb

template <>
struct std::hash<leewb::Variable> {
  std::size_t operator()(leewb::Variable const& x) const noexcept {
    return std::hash<std::string>{}(x.name());
  }
};

template <>
struct std::hash<leewb::Word> {
  std::size_t operator()(leewb::Word const& w) const noexcept;
};

#endif  // LEEWB_WORDS_HPP_
