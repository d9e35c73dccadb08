#include "leewb/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

#include "leewb/errors.hpp"
#include "evaluator.hpp"

namespace leewb {

  ////////////////////////////////////////////////////////////////////////
  // FiniteAlgebra
  ////////////////////////////////////////////////////////////////////////

  FiniteAlgebra FiniteAlgebra::from_table(
      std::vector<std::string>            names,
      std::vector<std::vector<Element>>   table,
      std::optional<Element>              identity,
      std::optional<Element>              zero,
      std::optional<std::vector<Element>> generators) {
    std::size_t const m = names.size();
    if (m == 0) {
      throw InvalidAlgebra("an algebra needs at least one element");
    }
    if (m > std::numeric_limits<Element>::max()) {
      throw InvalidAlgebra("too many elements");
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (names[i] == names[j]) {
          throw InvalidAlgebra("duplicate element name \"" + names[i] + "\"");
        }
      }
    }
    if (table.size() != m) {
      throw InvalidAlgebra("table has " + std::to_string(table.size())
                           + " rows, expected " + std::to_string(m));
    }
    FiniteAlgebra out;
    out._table.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      if (table[i].size() != m) {
        throw InvalidAlgebra("row " + std::to_string(i) + " has "
                             + std::to_string(table[i].size())
                             + " entries, expected " + std::to_string(m));
      }
      for (auto e : table[i]) {
        if (e >= m) {
          throw InvalidAlgebra("table entry " + std::to_string(e)
                               + " out of range in row " + std::to_string(i));
        }
        out._table.push_back(e);
      }
    }
    out._names = std::move(names);

    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        Element ab = out.product(static_cast<Element>(a), static_cast<Element>(b));
        for (std::size_t c = 0; c < m; ++c) {
          auto bc = out.product(static_cast<Element>(b), static_cast<Element>(c));
          if (out.product(ab, static_cast<Element>(c))
              != out.product(static_cast<Element>(a), bc)) {
            throw InvalidAlgebra("table is not associative: (" + out._names[a]
                                 + " " + out._names[b] + ") " + out._names[c]
                                 + " != " + out._names[a] + " ("
                                 + out._names[b] + " " + out._names[c] + ")");
          }
        }
      }
    }

    if (identity) {
      if (*identity >= m) {
        throw InvalidAlgebra("identity index out of range");
      }
      for (std::size_t x = 0; x < m; ++x) {
        auto e = static_cast<Element>(x);
        if (out.product(*identity, e) != e || out.product(e, *identity) != e) {
          throw InvalidAlgebra("\"" + out._names[*identity]
                               + "\" is not an identity element (fails at \""
                               + out._names[x] + "\")");
        }
      }
      out._identity = identity;
    }
    if (zero) {
      if (*zero >= m) {
        throw InvalidAlgebra("zero index out of range");
      }
      for (std::size_t x = 0; x < m; ++x) {
        auto e = static_cast<Element>(x);
        if (out.product(*zero, e) != *zero || out.product(e, *zero) != *zero) {
          throw InvalidAlgebra("\"" + out._names[*zero]
                               + "\" is not a zero element (fails at \""
                               + out._names[x] + "\")");
        }
      }
      out._zero = zero;
    }
    if (generators) {
      std::vector<bool>    seen(m, false);
      std::vector<Element> frontier;
      for (auto g : *generators) {
        if (g >= m) {
          throw InvalidAlgebra("generator index out of range");
        }
        if (!seen[g]) {
          seen[g] = true;
          frontier.push_back(g);
        }
      }
      if (identity && !seen[*identity]) {
        seen[*identity] = true;
      }
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (auto g : *generators) {
          auto p = out.product(frontier[i], g);
          if (!seen[p]) {
            seen[p] = true;
            frontier.push_back(p);
          }
        }
      }
      for (std::size_t x = 0; x < m; ++x) {
        if (!seen[x]) {
          throw InvalidAlgebra("generators do not generate \"" + out._names[x]
                               + "\"");
        }
      }
      out._generators = std::move(generators);
    }
    return out;
  }

  Element FiniteAlgebra::index_of(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw InvalidArgument("unknown element \"" + name + "\"");
    }
    return static_cast<Element>(it - _names.begin());
  }

  std::vector<std::vector<Element>> FiniteAlgebra::rows() const {
    std::vector<std::vector<Element>> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out[i].assign(_table.begin() + static_cast<std::ptrdiff_t>(i * size()),
                    _table.begin() + static_cast<std::ptrdiff_t>((i + 1) * size()));
    }
    return out;
  }

  Element FiniteAlgebra::power(Element x, std::uint64_t k) const {
    if (k == 0) {
      throw InvalidArgument("power exponent must be >= 1");
    }
    // Square-and-multiply; products of powers of x commute.
    Element result = x;
    Element base   = x;
    --k;
    while (k > 0) {
      if (k & 1U) {
        result = product(result, base);
      }
      base = product(base, base);
      k >>= 1U;
    }
    return result;
  }

  std::string to_string(FiniteAlgebra const& M, ElementSubstitution const& sigma) {
    std::string out = "{";
    bool        first = true;
    for (auto const& [x, e] : sigma) {
      if (!first) {
        out += ", ";
      }
      first = false;
      out += x.name() + " -> " + M.name(e);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  Element evaluate(FiniteAlgebra const&       M,
                   ElementSubstitution const& sigma,
                   Word const&                u) {
    if (u.empty()) {
      if (!M.identity()) {
        throw InvalidArgument("the empty word has no value in a semigroup");
      }
      return *M.identity();
    }
    std::optional<Element> acc;
    for (auto const& r : u.runs()) {
      auto it = sigma.find(r.var);
      if (it == sigma.end()) {
        throw InvalidArgument("variable " + r.var.name() + " is not assigned");
      }
      auto p = M.power(it->second, r.exp);
      acc    = acc ? M.product(*acc, p) : p;
    }
    return *acc;
  }

  Exponents index_period(FiniteAlgebra const& M) {
    std::uint64_t index = 1, period = 1;
    for (std::size_t x = 0; x < M.size(); ++x) {
      // Walk x, x^2, ... until a power repeats.
      std::vector<Element> seq{static_cast<Element>(x)};
      std::vector<std::size_t> first_seen(M.size(), 0);
      first_seen[x] = 1;
      while (true) {
        auto next = M.product(seq.back(), static_cast<Element>(x));
        if (first_seen[next] != 0) {
          std::uint64_t i = first_seen[next];
          std::uint64_t p = seq.size() + 1 - i;
          index  = std::max(index, i);
          period = std::lcm(period, p);
          break;
        }
        seq.push_back(next);
        first_seen[next] = seq.size();
      }
    }
    return {index, period};
  }

  std::vector<Variable> identity_variables(Identity const& id) {
    auto vars = variables_in_order(id.lhs);
    for (auto const& x : variables_in_order(id.rhs)) {
      if (std::find(vars.begin(), vars.end(), x) == vars.end()) {
        vars.push_back(x);
      }
    }
    return vars;
  }

  ////////////////////////////////////////////////////////////////////////
  // satisfies
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    std::uint64_t checked_power(std::size_t m, std::size_t k) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / m) {
          throw ResourceLimit("substitution space " + std::to_string(m) + "^"
                              + std::to_string(k) + " is too large");
        }
        total *= m;
      }
      return total;
    }
  }  // namespace detail

  IdentityCheck satisfies(FiniteAlgebra const& M, Identity const& id,
                          unsigned threads) {
    if (id.kind == IdentityKind::Monoid && M.kind() != AlgebraKind::Monoid) {
      throw InvalidArgument("a monoid identity cannot be checked on a semigroup");
    }
    auto const vars  = identity_variables(id);
    std::size_t const m = M.size();
    std::uint64_t const total = detail::checked_power(m, vars.size());

    detail::Evaluator const ev(M);
    auto const lhs = ev.compile(id.lhs, vars);
    auto const rhs = ev.compile(id.rhs, vars);

    // Returns the first failing tuple index in [lo, hi), or hi.
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<Element> tuple(vars.size());
      std::uint64_t        rest = lo;
      for (std::size_t i = vars.size(); i > 0; --i) {
        tuple[i - 1] = static_cast<Element>(rest % m);
        rest /= m;
      }
      for (std::uint64_t t = lo; t < hi; ++t) {
        if (ev.run(lhs, tuple) != ev.run(rhs, tuple)) {
          return t;
        }
        for (std::size_t i = vars.size(); i > 0; --i) {
          if (++tuple[i - 1] < m) {
            break;
          }
          tuple[i - 1] = 0;
        }
      }
      return hi;
    };

    std::uint64_t first_failure = total;
    unsigned const workers = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(threads, 1U), total));
    if (workers <= 1) {
      first_failure = scan(0, total);
    } else {
      std::vector<std::uint64_t> found(workers, total);
      std::vector<std::thread>   pool;
      std::uint64_t const        chunk = (total + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min(total, w * chunk);
        std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
          auto r   = scan(lo, hi);
          found[w] = r == hi ? total : r;
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      first_failure = *std::min_element(found.begin(), found.end());
    }

    IdentityCheck out;
    if (first_failure == total) {
      out.substitutions_checked = total;
      return out;
    }
    out.holds                 = false;
    out.substitutions_checked = first_failure + 1;
    ElementSubstitution sigma;
    std::uint64_t       rest = first_failure;
    for (std::size_t i = vars.size(); i > 0; --i) {
      sigma[vars[i - 1]] = static_cast<Element>(rest % m);
      rest /= m;
    }
    out.counterexample = std::move(sigma);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Term functions
  ////////////////////////////////////////////////////////////////////////

  Element TermFunction::operator()(std::vector<Element> const& args) const {
    if (args.size() != vars.size()) {
      throw InvalidArgument("wrong number of arguments to a term function");
    }
    std::size_t idx = 0;
    for (auto a : args) {
      idx = idx * algebra_size + a;
    }
    return table.at(idx);
  }

  TermFunction term_function(FiniteAlgebra const&         M,
                             Word const&                  u,
                             std::vector<Variable> const& vars) {
    for (auto const& x : content(u)) {
      if (std::find(vars.begin(), vars.end(), x) == vars.end()) {
        throw InvalidArgument("variable " + x.name()
                              + " is not among the term function's variables");
      }
    }
    if (u.empty() && !M.identity()) {
      throw InvalidArgument("the empty word has no value in a semigroup");
    }
    auto const total = detail::checked_power(M.size(), vars.size());
    if (total > (std::uint64_t(1) << 32U)) {
      throw ResourceLimit("term function table too large");
    }
    detail::Evaluator const ev(M);
    auto const              code = ev.compile(u, vars);
    TermFunction            out{vars, M.size(), {}};
    out.table.resize(static_cast<std::size_t>(total));
    std::vector<Element> tuple(vars.size(), 0);
    for (std::uint64_t t = 0; t < total; ++t) {
      out.table[static_cast<std::size_t>(t)] = ev.run(code, tuple);
      for (std::size_t i = vars.size(); i > 0; --i) {
        if (++tuple[i - 1] < M.size()) {
          break;
        }
        tuple[i - 1] = 0;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Misc
  ////////////////////////////////////////////////////////////////////////

  std::vector<Variable> standard_variables(std::size_t k) {
    static char const* const first[] = {"x", "y", "z", "w"};
    std::vector<Variable>    out;
    for (std::size_t i = 0; i < k; ++i) {
      out.emplace_back(i < 4 ? std::string(first[i])
                             : "x" + std::to_string(i + 1));
    }
    return out;
  }

  std::size_t memory_budget_bytes(std::size_t memory_mb) {
    if (memory_mb == 0) {
      memory_mb = 2048;
      if (char const* env = std::getenv("WORKBENCH_MEM_MB")) {
        char*         end   = nullptr;
        unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
          memory_mb = value;
        }
      }
    }
    return memory_mb * std::size_t(1024) * 1024;
  }

}  // namespace leewb
