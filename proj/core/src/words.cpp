#include "leewb/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "leewb/errors.hpp"

namespace leewb {

  namespace {
    // Splits "x12" into ("x", "12"); the index is empty without trailing
    // digits.
    std::pair<std::string_view, std::string_view>
    stem_and_index(std::string_view s) {
      std::size_t i = s.size();
      while (i > 1 && s[i - 1] >= '0' && s[i - 1] <= '9') {
        --i;
      }
      return {s.substr(0, i), s.substr(i)};
    }

    std::strong_ordering compare_decimal(std::string_view a,
                                         std::string_view b) {
      auto strip = [](std::string_view s) {
        while (s.size() > 1 && s.front() == '0') {
          s.remove_prefix(1);
        }
        return s;
      };
      a = strip(a);
      b = strip(b);
      if (a.size() != b.size()) {
        return a.size() <=> b.size();
      }
      return a.compare(b) <=> 0;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Variable
  ////////////////////////////////////////////////////////////////////////

  bool Variable::valid_name(std::string_view name) noexcept {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') {
      return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
  }

  Variable::Variable(std::string name) : _name(std::move(name)) {
    if (!valid_name(_name)) {
      throw InvalidArgument("invalid variable name \"" + _name + "\"");
    }
  }

  std::strong_ordering operator<=>(Variable const& a, Variable const& b) {
    auto [sa, ia] = stem_and_index(a._name);
    auto [sb, ib] = stem_and_index(b._name);
    if (auto c = sa.compare(sb) <=> 0; c != 0) {
      return c;
    }
    if (ia.empty() != ib.empty()) {
      return ia.empty() ? std::strong_ordering::less
                        : std::strong_ordering::greater;
    }
    if (auto c = compare_decimal(ia, ib); c != 0) {
      return c;
    }
    return a._name.compare(b._name) <=> 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<Run> runs) {
    _runs.reserve(runs.size());
    for (auto& r : runs) {
      if (r.exp == 0) {
        throw InvalidArgument("exponent of " + r.var.name() + " must be >= 1");
      }
      append(r.var, r.exp);
    }
  }

  Word Word::power(Variable const& x, std::uint32_t exp) {
    return Word({Run{x, exp}});
  }

  std::size_t Word::length() const noexcept {
    return std::accumulate(
        _runs.begin(), _runs.end(), std::size_t(0),
        [](std::size_t acc, Run const& r) { return acc + r.exp; });
  }

  Word& Word::append(Variable const& x, std::uint32_t exp) {
    if (exp == 0) {
      return *this;
    }
    if (!_runs.empty() && _runs.back().var == x) {
      _runs.back().exp += exp;
    } else {
      _runs.push_back(Run{x, exp});
    }
    return *this;
  }

  Word& Word::append(Word const& w) {
    for (auto const& r : w._runs) {
      append(r.var, r.exp);
    }
    return *this;
  }

  std::string Word::to_string() const {
    if (_runs.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& r : _runs) {
      if (!out.empty()) {
        out += ' ';
      }
      out += r.var.name();
      if (r.exp != 1) {
        out += '^';
        out += std::to_string(r.exp);
      }
    }
    return out;
  }

  bool operator<(Word const& a, Word const& b) {
    return std::lexicographical_compare(
        a._runs.begin(), a._runs.end(), b._runs.begin(), b._runs.end(),
        [](Run const& x, Run const& y) {
          if (x.var != y.var) {
            return x.var < y.var;
          }
          return x.exp < y.exp;
        });
  }

  Word operator*(Word a, Word const& b) {
    a.append(b);
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity, substitutions, blocks
  ////////////////////////////////////////////////////////////////////////

  Identity::Identity(Word l, Word r, IdentityKind k)
      : lhs(std::move(l)), rhs(std::move(r)), kind(k) {
    if (kind == IdentityKind::Semigroup && (lhs.empty() || rhs.empty())) {
      throw InvalidArgument("semigroup identities have nonempty sides");
    }
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " == " + rhs.to_string();
  }

  WordSubstitution::WordSubstitution(std::map<Variable, Word> images,
                                     SubstitutionMode         mode)
      : _mode(mode) {
    for (auto& [x, w] : images) {
      set(x, std::move(w));
    }
  }

  WordSubstitution& WordSubstitution::set(Variable const& x, Word w) {
    if (_mode == SubstitutionMode::IntoPlus && w.empty()) {
      throw InvalidArgument("empty image for " + x.name()
                            + " in a substitution into nonempty words");
    }
    _images.insert_or_assign(x, std::move(w));
    return *this;
  }

  Word const* WordSubstitution::find(Variable const& x) const {
    auto it = _images.find(x);
    return it == _images.end() ? nullptr : &it->second;
  }

  Word const& WordSubstitution::at(Variable const& x) const {
    if (auto const* w = find(x)) {
      return *w;
    }
    throw InvalidArgument("variable " + x.name() + " has no image");
  }

  std::string WordSubstitution::to_string() const {
    std::string out = "{";
    bool        first = true;
    for (auto const& [x, w] : _images) {
      if (!first) {
        out += ", ";
      }
      first = false;
      out += x.name() + " -> " + w.to_string();
    }
    return out + "}";
  }

  Word BlockDecomposition::reassemble() const {
    Word out;
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      out.append(blocks[q]);
      if (q < linears.size()) {
        out.append(linears[q]);
      }
    }
    return out;
  }

  VarSet VarClasses::non_linear() const {
    VarSet out = occurring_twice;
    out.insert(occurring_more.begin(), occurring_more.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Content and type
  ////////////////////////////////////////////////////////////////////////

  VarSet content(Word const& u) {
    VarSet out;
    for (auto const& r : u.runs()) {
      out.insert(r.var);
    }
    return out;
  }

  std::vector<Variable> variables_in_order(Word const& u) {
    std::vector<Variable> out;
    for (auto const& r : u.runs()) {
      if (std::find(out.begin(), out.end(), r.var) == out.end()) {
        out.push_back(r.var);
      }
    }
    return out;
  }

  std::size_t occurrences(Word const& u, Variable const& x) {
    std::size_t n = 0;
    for (auto const& r : u.runs()) {
      if (r.var == x) {
        n += r.exp;
      }
    }
    return n;
  }

  VarClasses classify_vars(Word const& u) {
    std::map<Variable, std::size_t> count;
    for (auto const& r : u.runs()) {
      count[r.var] += r.exp;
    }
    VarClasses out;
    for (auto const& [x, c] : count) {
      out.content.insert(x);
      if (c == 1) {
        out.linear.insert(x);
      } else if (c == 2) {
        out.occurring_twice.insert(x);
      } else {
        out.occurring_more.insert(x);
      }
    }
    return out;
  }

  Word type_normal_form(Word const& u) {
    std::vector<Run> runs = u.runs();
    for (auto& r : runs) {
      r.exp = 1;
    }
    return Word(std::move(runs));
  }

  bool same_type(Word const& u, Word const& v) {
    if (u.num_runs() != v.num_runs()) {
      return false;
    }
    return std::equal(
        u.runs().begin(), u.runs().end(), v.runs().begin(),
        [](Run const& a, Run const& b) { return a.var == b.var; });
  }

  std::size_t islands(Word const& u, Variable const& x) {
    return std::count_if(u.runs().begin(), u.runs().end(),
                         [&x](Run const& r) { return r.var == x; });
  }

  std::size_t height(Word const& u) {
    return u.num_runs();
  }

  std::vector<ProjectedIsland> projected_islands(Word const&             u,
                                                 VarSet const&           X,
                                                 std::optional<RunRange> window) {
    std::size_t begin = 0, end = u.num_runs();
    if (window) {
      if (window->begin > window->end || window->end > u.num_runs()) {
        throw InvalidArgument("run window [" + std::to_string(window->begin)
                              + ", " + std::to_string(window->end)
                              + ") out of range for a word with "
                              + std::to_string(u.num_runs()) + " runs");
      }
      begin = window->begin;
      end   = window->end;
    }
    std::vector<ProjectedIsland> out;
    for (std::size_t i = begin; i < end; ++i) {
      auto const& r = u.runs()[i];
      if (!X.contains(r.var)) {
        continue;
      }
      if (!out.empty() && out.back().var == r.var) {
        out.back().exp += r.exp;
        out.back().last_run = i;
      } else {
        out.push_back(ProjectedIsland{r.var, r.exp, i, i});
      }
    }
    return out;
  }

  Word project(Word const& u, VarSet const& X) {
    Word out;
    for (auto const& r : u.runs()) {
      if (X.contains(r.var)) {
        out.append(r.var, r.exp);
      }
    }
    return out;
  }

  BlockDecomposition blocks(Word const& u) {
    auto const         lin = classify_vars(u).linear;
    BlockDecomposition out;
    Word               current;
    std::size_t        start = 0;
    for (std::size_t i = 0; i < u.num_runs(); ++i) {
      auto const& r = u.runs()[i];
      if (lin.contains(r.var)) {
        out.blocks.push_back(std::move(current));
        out.spans.emplace_back(start, i);
        out.linears.push_back(r.var);
        current = Word();
        start   = i + 1;
      } else {
        current.append(r.var, r.exp);
      }
    }
    out.blocks.push_back(std::move(current));
    out.spans.emplace_back(start, u.num_runs());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subword counting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_type_normal(Word const& pattern) {
      for (auto const& r : pattern.runs()) {
        if (r.exp != 1) {
          throw InvalidArgument("pattern " + pattern.to_string()
                                + " is not in type normal form");
        }
      }
    }

    std::vector<std::size_t>
    factor_positions(std::vector<ProjectedIsland> const& hay,
                     Word const&                         pattern) {
      std::vector<std::size_t> out;
      auto const&              p = pattern.runs();
      if (p.empty()) {
        return out;
      }
      for (std::size_t i = 0; i + p.size() <= hay.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < p.size() && ok; ++j) {
          ok = hay[i + j].var == p[j].var;
        }
        if (ok) {
          out.push_back(i);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<std::size_t> island_pattern_positions(Word const& u,
                                                    Word const& pattern) {
    require_type_normal(pattern);
    return factor_positions(projected_islands(u, content(pattern)), pattern);
  }

  std::size_t island_pattern_count(Word const& u, Word const& pattern) {
    return island_pattern_positions(u, pattern).size();
  }

  std::uint64_t scattered_subword_count(Word const& u, Word const& pattern) {
    std::vector<Variable> letters;
    for (auto const& r : pattern.runs()) {
      letters.insert(letters.end(), r.exp, r.var);
    }
    // ways[j] = number of embeddings of the first j letters seen so far.
    std::vector<std::uint64_t> ways(letters.size() + 1, 0);
    ways[0] = 1;
    for (auto const& r : u.runs()) {
      for (std::uint32_t e = 0; e < r.exp; ++e) {
        for (std::size_t j = letters.size(); j > 0; --j) {
          if (letters[j - 1] == r.var) {
            ways[j] += ways[j - 1];
          }
        }
      }
    }
    return ways.back();
  }

  bool contains_island_factor(Word const&             u,
                              Word const&             pattern,
                              std::optional<RunRange> window) {
    require_type_normal(pattern);
    return !factor_positions(projected_islands(u, content(pattern), window),
                             pattern)
                .empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitutions
  ////////////////////////////////////////////////////////////////////////

  Word apply_substitution(WordSubstitution const& theta, Word const& u) {
    Word out;
    for (auto const& r : u.runs()) {
      auto const& image = theta.at(r.var);
      for (std::uint32_t e = 0; e < r.exp; ++e) {
        out.append(image);
      }
    }
    return out;
  }

  Erasure erase_merge(Word const& u, WordSubstitution const& theta) {
    std::map<Variable, Variable> representative;  // base variable -> rep
    Erasure                      out;
    for (auto const& x : variables_in_order(u)) {
      auto const& image = theta.at(x);
      if (!image.is_power()) {
        continue;
      }
      auto const& base = image.runs().front().var;
      auto [it, inserted] = representative.emplace(base, x);
      if (!inserted) {
        out.renaming.emplace(x, it->second);
      }
    }
    for (auto const& r : u.runs()) {
      auto it = out.renaming.find(r.var);
      out.word.append(it == out.renaming.end() ? r.var : it->second, r.exp);
    }
    return out;
  }

}  // namespace leewb

std::size_t std::hash<leewb::Word>::operator()(
    leewb::Word const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto const& r : w.runs()) {
    h ^= std::hash<leewb::Variable>{}(r.var) + 0x9e3779b97f4a7c15ULL + (h << 6)
         + (h >> 2);
    h ^= r.exp + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
