// The Lee semigroups L_l = <a, b | aa = a, bb = b, abab... (length l) = 0>,
// the monoids L_l^1, and generators for the identity families studied with
// them.

#ifndef LEEWB_LEE_HPP_
#define LEEWB_LEE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leewb/algebra.hpp"
#include "leewb/words.hpp"

namespace leewb {

  //! A normal form in L_l: an alternating string over {a, b}, or 0 or 1.
  class LeeNormalForm {
   public:
    static LeeNormalForm zero() {
      return LeeNormalForm(Tag::Zero, {});
    }
    static LeeNormalForm one() {
      return LeeNormalForm(Tag::One, {});
    }
    //! Throws InvalidArgument unless `letters` is a nonempty alternating
    //! string over {a, b} avoiding the forbidden factor of length `ell`.
    static LeeNormalForm letters(std::string letters, std::size_t ell);

    [[nodiscard]] bool is_zero() const noexcept {
      return _tag == Tag::Zero;
    }
    [[nodiscard]] bool is_one() const noexcept {
      return _tag == Tag::One;
    }
    //! "0", "1", or the letters.
    [[nodiscard]] std::string name() const;

    //! Concatenate, merge aa -> a and bb -> b, collapse to 0 when the
    //! forbidden factor appears.
    [[nodiscard]] LeeNormalForm times(LeeNormalForm const& other,
                                      std::size_t          ell) const;

    friend bool operator==(LeeNormalForm const&, LeeNormalForm const&) = default;

   private:
    enum class Tag { Zero, One, Letters };
    LeeNormalForm(Tag tag, std::string s) : _tag(tag), _letters(std::move(s)) {}

    Tag         _tag;
    std::string _letters;
  };

  //! The alternating word a b a b ... of length ell.
  [[nodiscard]] std::string lee_forbidden_word(std::size_t ell);

  //! The nonzero normal forms of L_ell, ordered by length then
  //! lexicographically.
  [[nodiscard]] std::vector<std::string> lee_nonzero_forms(std::size_t ell);

  //! L_ell: 2 ell elements named "0", "a", "b", "ab", ... in order of length
  //! then lexicographically; zero marked; generated by a and b. Throws
  //! InvalidArgument for ell < 2.
  [[nodiscard]] FiniteAlgebra lee_semigroup(std::size_t ell);

  //! L_ell^1: L_ell with an adjoined identity "1"; 2 ell + 1 elements.
  [[nodiscard]] FiniteAlgebra lee_monoid(std::size_t ell);

  ////////////////////////////////////////////////////////////////////////
  // Identity families
  ////////////////////////////////////////////////////////////////////////

  //! x_i for i = 1..n, named "x1", ..., "xn".
  [[nodiscard]] std::vector<Variable> indexed_variables(std::string const& stem,
                                                        std::size_t        n);

  //! (x1 ... xn)(xn ... x1)(x1 ... xn) == (x1 ... xn)(x1^2 ... xn^2), monoid
  //! kind. Throws InvalidArgument for n < 1.
  [[nodiscard]] Identity make_un_vn(std::size_t n);

  //! The word of the same type as the left side of make_un_vn(n), with the
  //! given exponents, one per run (3n - 2 of them).
  [[nodiscard]] Word un_type_word(std::size_t                       n,
                                  std::vector<std::uint32_t> const& exponents);

  //! x^k y1^k ... yn^k x^k == x^k yn^k ... y1^k x^k, semigroup kind.
  //! Throws InvalidArgument unless n >= 2 and k >= 2.
  [[nodiscard]] Identity make_el30(std::size_t n, std::uint32_t k);

  //! (x1..xn)(y1..yn)(xn..x1)(yn..y1) == (y1..yn)(x1..xn)(yn..y1)(xn..x1),
  //! monoid kind.
  [[nodiscard]] Identity make_el3(std::size_t n);

  //! (x1 .. x_{n^2})(x_{p1}^k .. x_{p(n^2)}^k)(x_{n^2} .. x1) ==
  //! (x1 .. x_{n^2})(x_{p(n^2)}^k .. x_{p1}^k)(x_{n^2} .. x1) for a
  //! permutation p of {1, ..., n^2} given 1-based. Monoid kind.
  [[nodiscard]] Identity make_el5(std::size_t n, std::uint32_t k,
                                  std::vector<std::size_t> const& perm);

}  // namespace leewb

#endif  // LEEWB_LEE_HPP_
