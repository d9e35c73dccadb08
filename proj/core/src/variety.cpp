#include <algorithm>
#include <unordered_map>

#include "leewb/algebra.hpp"
#include "leewb/errors.hpp"
#include "evaluator.hpp"

namespace leewb {

  namespace {
    struct Member {
      std::uint32_t parent;     // index of the member this one extends
      std::uint32_t generator;  // generator appended to the parent's word
      Element       value;      // coordinate in T
    };

    constexpr std::uint32_t no_parent = static_cast<std::uint32_t>(-1);

    std::uint64_t hash_row(Element const* data, std::size_t n) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (std::size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
      }
      return h;
    }
  }  // namespace

  VarietyMembership variety_contains(FiniteAlgebra const& S,
                                     FiniteAlgebra const& T,
                                     std::size_t          memory_mb) {
    if (!T.generators() || T.generators()->empty()) {
      throw InvalidArgument("the candidate algebra needs a generating set");
    }
    if (S.kind() != T.kind()) {
      throw InvalidArgument("variety membership needs algebras of the same kind");
    }
    bool const  monoid = S.kind() == AlgebraKind::Monoid;
    auto const& gens   = *T.generators();
    std::size_t const k = gens.size();
    std::size_t const width =
        static_cast<std::size_t>(detail::checked_power(S.size(), k));
    std::size_t const budget = memory_budget_bytes(memory_mb);
    std::size_t const per_member =
        width * sizeof(Element) + sizeof(Member) + 2 * sizeof(std::uint64_t) + 48;

    // The projections S^k -> S, as rows of length |S|^k.
    std::vector<std::vector<Element>> projections(k, std::vector<Element>(width));
    for (std::size_t t = 0; t < width; ++t) {
      std::size_t rest = t;
      for (std::size_t i = k; i > 0; --i) {
        projections[i - 1][t] = static_cast<Element>(rest % S.size());
        rest /= S.size();
      }
    }

    std::vector<Element> rows;  // member i occupies [i * width, (i+1) * width)
    std::vector<Member>  members;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;

    auto word_of = [&](std::uint32_t id) {
      std::vector<std::uint32_t> letters;
      for (; id != no_parent && members[id].generator != no_parent;
           id = members[id].parent) {
        letters.push_back(members[id].generator);
      }
      auto const vars = standard_variables(k);
      Word       w;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        w.append(vars[*it]);
      }
      return w;
    };

    VarietyMembership out;
    // Returns false on the first conflict.
    auto insert = [&](std::vector<Element> const& row, Element value,
                      std::uint32_t parent, std::uint32_t generator) {
      auto  h   = hash_row(row.data(), width);
      auto& ids = index[h];
      for (auto id : ids) {
        if (std::equal(row.begin(), row.end(),
                       rows.begin() + static_cast<std::ptrdiff_t>(id * width))) {
          if (members[id].value != value) {
            members.push_back(Member{parent, generator, value});
            auto fresh = static_cast<std::uint32_t>(members.size() - 1);
            auto kind  = monoid ? IdentityKind::Monoid : IdentityKind::Semigroup;
            out.contains    = false;
            out.certificate = Identity(word_of(id), word_of(fresh), kind);
            members.pop_back();
            return false;
          }
          return true;
        }
      }
      if ((members.size() + 1) * per_member > budget) {
        throw ResourceLimit("variety closure needs more than "
                            + std::to_string(budget / (1024 * 1024))
                            + " MB (WORKBENCH_MEM_MB)");
      }
      ids.push_back(static_cast<std::uint32_t>(members.size()));
      members.push_back(Member{parent, generator, value});
      rows.insert(rows.end(), row.begin(), row.end());
      return true;
    };

    if (monoid) {
      std::vector<Element> one(width, *S.identity());
      insert(one, *T.identity(), no_parent, no_parent);
    }
    for (std::size_t g = 0; g < k; ++g) {
      if (!insert(projections[g], gens[g], no_parent,
                  static_cast<std::uint32_t>(g))) {
        out.closure_size = members.size();
        return out;
      }
    }
    // Breadth-first closure under right multiplication by the generators.
    std::vector<Element> next(width);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        auto const* row = rows.data() + i * width;
        for (std::size_t t = 0; t < width; ++t) {
          next[t] = S.product(row[t], projections[g][t]);
        }
        Element value = T.product(members[i].value, gens[g]);
        if (!insert(next, value, static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(g))) {
          out.closure_size = members.size();
          return out;
        }
      }
    }
    out.closure_size = members.size();
    return out;
  }

}  // namespace leewb
