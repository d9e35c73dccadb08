#include "leewb/lee.hpp"

#include <algorithm>

#include "leewb/errors.hpp"

namespace leewb {

  namespace {
    void require_ell(std::size_t ell) {
      if (ell < 2) {
        throw InvalidArgument("Lee algebras need ell >= 2, got "
                              + std::to_string(ell));
      }
    }

    bool alternating(std::string const& s) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 'a' && s[i] != 'b') {
          return false;
        }
        if (i > 0 && s[i] == s[i - 1]) {
          return false;
        }
      }
      return !s.empty();
    }

    FiniteAlgebra build(std::size_t ell, bool monoid) {
      require_ell(ell);
      std::vector<LeeNormalForm> forms;
      std::vector<std::string>   names;
      forms.push_back(LeeNormalForm::zero());
      if (monoid) {
        forms.push_back(LeeNormalForm::one());
      }
      for (auto const& s : lee_nonzero_forms(ell)) {
        forms.push_back(LeeNormalForm::letters(s, ell));
      }
      for (auto const& f : forms) {
        names.push_back(f.name());
      }
      auto position = [&](LeeNormalForm const& f) {
        return static_cast<Element>(std::find(forms.begin(), forms.end(), f)
                                    - forms.begin());
      };
      std::vector<std::vector<Element>> table(forms.size());
      for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = 0; j < forms.size(); ++j) {
          table[i].push_back(position(forms[i].times(forms[j], ell)));
        }
      }
      std::optional<Element> identity;
      if (monoid) {
        identity = Element(1);
      }
      std::vector<Element> gens{position(LeeNormalForm::letters("a", ell)),
                                position(LeeNormalForm::letters("b", ell))};
      return FiniteAlgebra::from_table(std::move(names), std::move(table),
                                       identity, Element(0), std::move(gens));
    }

    Word sequence(std::vector<Variable> const& vars, bool reversed,
                  std::uint32_t exp = 1) {
      Word w;
      if (reversed) {
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
          w.append(*it, exp);
        }
      } else {
        for (auto const& x : vars) {
          w.append(x, exp);
        }
      }
      return w;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LeeNormalForm
  ////////////////////////////////////////////////////////////////////////

  std::string lee_forbidden_word(std::size_t ell) {
    std::string out;
    for (std::size_t i = 0; i < ell; ++i) {
      out.push_back(i % 2 == 0 ? 'a' : 'b');
    }
    return out;
  }

  LeeNormalForm LeeNormalForm::letters(std::string letters, std::size_t ell) {
    if (!alternating(letters)) {
      throw InvalidArgument("\"" + letters
                            + "\" is not an alternating word over {a, b}");
    }
    if (letters.find(lee_forbidden_word(ell)) != std::string::npos) {
      throw InvalidArgument("\"" + letters + "\" is zero in L_"
                            + std::to_string(ell));
    }
    return LeeNormalForm(Tag::Letters, std::move(letters));
  }

  std::string LeeNormalForm::name() const {
    switch (_tag) {
      case Tag::Zero:
        return "0";
      case Tag::One:
        return "1";
      default:
        return _letters;
    }
  }

  LeeNormalForm LeeNormalForm::times(LeeNormalForm const& other,
                                     std::size_t          ell) const {
    if (is_zero() || other.is_zero()) {
      return zero();
    }
    if (is_one()) {
      return other;
    }
    if (other.is_one()) {
      return *this;
    }
    std::string s = _letters;
    if (s.back() == other._letters.front()) {
      s.pop_back();
    }
    s += other._letters;
    if (s.find(lee_forbidden_word(ell)) != std::string::npos) {
      return zero();
    }
    return LeeNormalForm(Tag::Letters, std::move(s));
  }

  std::vector<std::string> lee_nonzero_forms(std::size_t ell) {
    require_ell(ell);
    auto const               forbidden = lee_forbidden_word(ell);
    std::vector<std::string> out;
    // Alternating words have length at most ell before they must contain
    // the forbidden factor: a-words of length < ell, b-words of length <= ell.
    for (std::size_t len = 1; len <= ell; ++len) {
      for (char first : {'a', 'b'}) {
        std::string s;
        for (std::size_t i = 0; i < len; ++i) {
          s.push_back(static_cast<char>(i % 2 == 0 ? first : 'a' + 'b' - first));
        }
        if (s.find(forbidden) == std::string::npos) {
          out.push_back(std::move(s));
        }
      }
    }
    return out;
  }

  FiniteAlgebra lee_semigroup(std::size_t ell) {
    return build(ell, false);
  }

  FiniteAlgebra lee_monoid(std::size_t ell) {
    return build(ell, true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity families
  ////////////////////////////////////////////////////////////////////////

  std::vector<Variable> indexed_variables(std::string const& stem,
                                          std::size_t        n) {
    std::vector<Variable> out;
    for (std::size_t i = 1; i <= n; ++i) {
      out.emplace_back(stem + std::to_string(i));
    }
    return out;
  }

  Identity make_un_vn(std::size_t n) {
    if (n < 1) {
      throw InvalidArgument("U_n needs n >= 1");
    }
    auto const xs  = indexed_variables("x", n);
    Word       lhs = sequence(xs, false) * sequence(xs, true) * sequence(xs, false);
    Word       rhs = sequence(xs, false) * sequence(xs, false, 2);
    return Identity(std::move(lhs), std::move(rhs), IdentityKind::Monoid);
  }

  Word un_type_word(std::size_t n, std::vector<std::uint32_t> const& exponents) {
    auto const shape = type_normal_form(make_un_vn(n).lhs);
    if (exponents.size() != shape.num_runs()) {
      throw InvalidArgument("expected " + std::to_string(shape.num_runs())
                            + " exponents, got "
                            + std::to_string(exponents.size()));
    }
    std::vector<Run> runs = shape.runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
      runs[i].exp = exponents[i];
    }
    return Word(std::move(runs));
  }

  Identity make_el30(std::size_t n, std::uint32_t k) {
    if (n < 2 || k < 2) {
      throw InvalidArgument("identity family needs n >= 2 and k >= 2");
    }
    Variable const x("x");
    auto const     ys  = indexed_variables("y", n);
    Word           lhs = Word::power(x, k) * sequence(ys, false, k) * Word::power(x, k);
    Word           rhs = Word::power(x, k) * sequence(ys, true, k) * Word::power(x, k);
    return Identity(std::move(lhs), std::move(rhs), IdentityKind::Semigroup);
  }

  Identity make_el3(std::size_t n) {
    if (n < 1) {
      throw InvalidArgument("identity family needs n >= 1");
    }
    auto const xs = indexed_variables("x", n);
    auto const ys = indexed_variables("y", n);
    Word lhs = sequence(xs, false) * sequence(ys, false) * sequence(xs, true)
               * sequence(ys, true);
    Word rhs = sequence(ys, false) * sequence(xs, false) * sequence(ys, true)
               * sequence(xs, true);
    return Identity(std::move(lhs), std::move(rhs), IdentityKind::Monoid);
  }

  Identity make_el5(std::size_t n, std::uint32_t k,
                    std::vector<std::size_t> const& perm) {
    if (n < 1 || k < 1) {
      throw InvalidArgument("identity family needs n >= 1 and k >= 1");
    }
    std::size_t const N = n * n;
    if (perm.size() != N) {
      throw InvalidArgument("permutation must have " + std::to_string(N)
                            + " entries");
    }
    std::vector<bool> seen(N + 1, false);
    for (auto p : perm) {
      if (p < 1 || p > N || seen[p]) {
        throw InvalidArgument("not a permutation of {1, ..., "
                              + std::to_string(N) + "}");
      }
      seen[p] = true;
    }
    auto const xs = indexed_variables("x", N);
    std::vector<Variable> permuted;
    for (auto p : perm) {
      permuted.push_back(xs[p - 1]);
    }
    Word lhs = sequence(xs, false) * sequence(permuted, false, k) * sequence(xs, true);
    Word rhs = sequence(xs, false) * sequence(permuted, true, k) * sequence(xs, true);
    return Identity(std::move(lhs), std::move(rhs), IdentityKind::Monoid);
  }

}  // namespace leewb
