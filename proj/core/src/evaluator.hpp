#ifndef LEEWB_SRC_EVALUATOR_HPP_
#define LEEWB_SRC_EVALUATOR_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "leewb/algebra.hpp"
#include "leewb/errors.hpp"

namespace leewb::detail {

  std::uint64_t checked_power(std::size_t m, std::size_t k);

  //! Evaluates words compiled against an ordered variable list. Exponents
  //! are reduced modulo the index and period of the algebra, so every power
  //! is a single table lookup.
  class Evaluator {
   public:
    struct Step {
      std::size_t   slot;
      std::uint32_t exp;  // reduced, in [1, index + period)
    };
    using Code = std::vector<Step>;

    explicit Evaluator(FiniteAlgebra const& M)
        : _M(M), _exps(index_period(M)) {
      _stride = static_cast<std::size_t>(_exps.index + _exps.period);
      _powers.resize(M.size() * _stride);
      for (std::size_t x = 0; x < M.size(); ++x) {
        Element p = static_cast<Element>(x);
        for (std::size_t e = 1; e < _stride; ++e) {
          _powers[x * _stride + e] = p;
          p = M.product(p, static_cast<Element>(x));
        }
      }
    }

    [[nodiscard]] std::uint32_t reduce(std::uint64_t e) const noexcept {
      if (e < _stride) {
        return static_cast<std::uint32_t>(e);
      }
      return static_cast<std::uint32_t>(_exps.index
                                        + (e - _exps.index) % _exps.period);
    }

    [[nodiscard]] Element pow(Element x, std::uint32_t reduced) const noexcept {
      return _powers[x * _stride + reduced];
    }

    [[nodiscard]] Code compile(Word const&                  u,
                               std::vector<Variable> const& vars) const {
      Code out;
      out.reserve(u.num_runs());
      for (auto const& r : u.runs()) {
        auto it = std::find(vars.begin(), vars.end(), r.var);
        if (it == vars.end()) {
          throw InvalidArgument("variable " + r.var.name() + " is not assigned");
        }
        out.push_back(Step{static_cast<std::size_t>(it - vars.begin()),
                           reduce(r.exp)});
      }
      return out;
    }

    //! The empty code evaluates to the identity, which the caller
    //! guarantees exists.
    [[nodiscard]] Element run(Code const&                 code,
                              std::vector<Element> const& tuple) const noexcept {
      if (code.empty()) {
        return *_M.identity();
      }
      Element acc = pow(tuple[code[0].slot], code[0].exp);
      for (std::size_t i = 1; i < code.size(); ++i) {
        acc = _M.product(acc, pow(tuple[code[i].slot], code[i].exp));
      }
      return acc;
    }

    [[nodiscard]] Exponents exponents() const noexcept {
      return _exps;
    }

   private:
    FiniteAlgebra const& _M;
    Exponents            _exps;
    std::size_t          _stride = 0;
    std::vector<Element> _powers;
  };

}  // namespace leewb::detail

#endif  // LEEWB_SRC_EVALUATOR_HPP_
