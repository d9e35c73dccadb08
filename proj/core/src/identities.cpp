#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "leewb/algebra.hpp"
#include "leewb/errors.hpp"
#include "evaluator.hpp"

namespace leewb {

  namespace {
    std::uint64_t hash_table(Element const* data, std::size_t n, unsigned mask) {
      std::uint64_t h = 0xcbf29ce484222325ULL ^ mask;
      for (std::size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
      }
      return h;
    }

    void over_budget(std::size_t used, std::size_t budget) {
      if (used > budget) {
        throw ResourceLimit("identity search needs more than "
                            + std::to_string(budget / (1024 * 1024))
                            + " MB (WORKBENCH_MEM_MB)");
      }
    }

    // Depth-first enumeration of the words with exactly `target` runs,
    // maintaining the term function of every prefix.
    class WordEnumerator {
     public:
      WordEnumerator(FiniteAlgebra const& M, std::size_t k, std::uint32_t exp_cap)
          : _M(M), _ev(M), _k(k), _exp_cap(exp_cap) {
        _tuples = static_cast<std::size_t>(detail::checked_power(M.size(), k));
        _digits.assign(k, std::vector<Element>(_tuples));
        for (std::size_t t = 0; t < _tuples; ++t) {
          std::size_t rest = t;
          for (std::size_t i = k; i > 0; --i) {
            _digits[i - 1][t] = static_cast<Element>(rest % M.size());
            rest /= M.size();
          }
        }
      }

      [[nodiscard]] std::size_t tuples() const noexcept {
        return _tuples;
      }

      template <typename Emit>
      void run(std::size_t target, Emit&& emit) {
        _target = target;
        _stack.assign(target + 1, std::vector<Element>(_tuples));
        _code.assign(target, 0);
        descend(0, _k, 0U, emit);
      }

     private:
      template <typename Emit>
      void descend(std::size_t depth, std::size_t last, unsigned mask, Emit& emit) {
        for (std::size_t v = 0; v < _k; ++v) {
          if (v == last) {
            continue;
          }
          for (std::uint32_t e = 1; e <= _exp_cap; ++e) {
            auto const  reduced = _ev.reduce(e);
            auto const& digits  = _digits[v];
            auto&       out     = _stack[depth + 1];
            if (depth == 0) {
              for (std::size_t t = 0; t < _tuples; ++t) {
                out[t] = _ev.pow(digits[t], reduced);
              }
            } else {
              auto const& in = _stack[depth];
              for (std::size_t t = 0; t < _tuples; ++t) {
                out[t] = _M.product(in[t], _ev.pow(digits[t], reduced));
              }
            }
            _code[depth] = static_cast<std::uint16_t>((v << 8U) | e);
            unsigned const m2 = mask | (1U << v);
            if (depth + 1 == _target) {
              emit(_code, out, m2);
            } else {
              descend(depth + 1, v, m2, emit);
            }
          }
        }
      }

      FiniteAlgebra const&              _M;
      detail::Evaluator                 _ev;
      std::size_t                       _k;
      std::uint32_t                     _exp_cap;
      std::size_t                       _tuples = 0;
      std::size_t                       _target = 0;
      std::vector<std::vector<Element>> _digits;
      std::vector<std::vector<Element>> _stack;
      std::vector<std::uint16_t>        _code;
    };
  }  // namespace

  IdentityCatalog::IdentityCatalog(FiniteAlgebra const& M, IdentitySearchCaps caps)
      : _caps(caps),
        _kind(M.kind() == AlgebraKind::Monoid ? IdentityKind::Monoid
                                              : IdentityKind::Semigroup),
        _vars(standard_variables(caps.max_vars)) {
    if (caps.max_vars < 1 || caps.max_runs < 1 || caps.exp_cap < 1) {
      throw InvalidArgument("identity search caps must be >= 1");
    }
    if (caps.max_vars > 16 || caps.exp_cap > 255) {
      throw InvalidArgument("identity search supports at most 16 variables "
                            "and exponents up to 255");
    }
    std::size_t const budget = memory_budget_bytes(caps.memory_mb);
    WordEnumerator    gen(M, caps.max_vars, caps.exp_cap);
    std::size_t const key_bytes = gen.tuples() * sizeof(Element);
    if (key_bytes > budget) {
      over_budget(key_bytes, budget);
    }

    std::vector<Element>                                       keys;
    std::vector<unsigned>                                      masks;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
    _offsets.push_back(0);

    for (std::size_t r = 1; r <= caps.max_runs; ++r) {
      gen.run(r, [&](std::vector<std::uint16_t> const& code,
                     std::vector<Element> const&       tf,
                     unsigned                          word_mask) {
        unsigned const mask = caps.ignore_content ? 0U : word_mask;
        auto const h   = hash_table(tf.data(), tf.size(), mask);
        auto&      ids = index[h];
        std::uint32_t bucket = static_cast<std::uint32_t>(-1);
        for (auto b : ids) {
          if (masks[b] == mask
              && std::equal(tf.begin(), tf.end(),
                            keys.begin() + static_cast<std::ptrdiff_t>(b * tf.size()))) {
            bucket = b;
            break;
          }
        }
        if (bucket == static_cast<std::uint32_t>(-1)) {
          bucket = static_cast<std::uint32_t>(_buckets.size());
          ids.push_back(bucket);
          masks.push_back(mask);
          keys.insert(keys.end(), tf.begin(), tf.end());
          _buckets.emplace_back();
          _memory += key_bytes + sizeof(std::vector<WordId>) + 32;
        }
        if (_offsets.size() > std::numeric_limits<WordId>::max()) {
          throw ResourceLimit("identity search produced too many words");
        }
        _buckets[bucket].push_back(static_cast<WordId>(_offsets.size() - 1));
        _codes.insert(_codes.end(), code.begin(), code.end());
        _offsets.push_back(static_cast<std::uint32_t>(_codes.size()));
        _memory += code.size() * sizeof(std::uint16_t) + sizeof(std::uint32_t)
                   + sizeof(WordId);
        over_budget(_memory, budget);
      });
    }
  }

  Word IdentityCatalog::word(WordId id) const {
    Word out;
    for (auto i = _offsets[id]; i < _offsets[id + 1]; ++i) {
      out.append(_vars[_codes[i] >> 8U], _codes[i] & 0xFFU);
    }
    return out;
  }

  bool IdentityCatalog::same_type(WordId a, WordId b) const noexcept {
    auto const la = _offsets[a + 1] - _offsets[a];
    if (la != _offsets[b + 1] - _offsets[b]) {
      return false;
    }
    for (std::uint32_t i = 0; i < la; ++i) {
      if ((_codes[_offsets[a] + i] >> 8U) != (_codes[_offsets[b] + i] >> 8U)) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t IdentityCatalog::for_each_identity(
      std::function<bool(Word const&, Word const&)> const& visit) const {
    std::uint64_t count = 0;
    for (auto const& bucket : _buckets) {
      if (bucket.size() < 2) {
        continue;
      }
      std::vector<Word> words;
      words.reserve(bucket.size());
      for (auto id : bucket) {
        words.push_back(word(id));
      }
      for (std::size_t i = 0; i < bucket.size(); ++i) {
        for (std::size_t j = i + 1; j < bucket.size(); ++j) {
          if (same_type(bucket[i], bucket[j])) {
            continue;
          }
          ++count;
          if (!visit(words[i], words[j])) {
            return count;
          }
        }
      }
    }
    return count;
  }

  std::uint64_t IdentityCatalog::count_identities() const {
    std::uint64_t count = 0;
    for (auto const& bucket : _buckets) {
      // All pairs, minus the pairs inside each type class.
      std::uint64_t const n = bucket.size();
      count += n * (n - 1) / 2;
      std::unordered_map<std::string, std::uint64_t> classes;
      for (auto id : bucket) {
        std::string key;
        for (auto i = _offsets[id]; i < _offsets[id + 1]; ++i) {
          key.push_back(static_cast<char>(_codes[i] >> 8U));
        }
        ++classes[key];
      }
      for (auto const& [key, c] : classes) {
        count -= c * (c - 1) / 2;
      }
    }
    return count;
  }

  std::vector<Identity> find_identities(FiniteAlgebra const& M,
                                        IdentitySearchCaps   caps) {
    IdentityCatalog const catalog(M, caps);
    std::size_t const     budget = memory_budget_bytes(caps.memory_mb);
    std::size_t           used   = catalog.memory_used();
    std::vector<Identity> out;
    catalog.for_each_identity([&](Word const& u, Word const& v) {
      used += sizeof(Identity) + (u.num_runs() + v.num_runs()) * sizeof(Run);
      over_budget(used, budget);
      out.emplace_back(u, v, catalog.identity_kind());
      return true;
    });
    return out;
  }

}  // namespace leewb
