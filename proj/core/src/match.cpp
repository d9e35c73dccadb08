#include <algorithm>

#include "leewb/words.hpp"

namespace leewb {

  namespace {
    class Matcher {
     public:
      Matcher(Word const& u, Word const& U, SubstitutionMode mode,
              MatchVisitor const& visit)
          : _mode(mode), _visit(visit) {
        for (auto const& x : variables_in_order(u)) {
          _vars.push_back(x);
        }
        for (auto const& r : u.runs()) {
          auto slot = std::find(_vars.begin(), _vars.end(), r.var) - _vars.begin();
          _pattern.emplace_back(static_cast<std::size_t>(slot), r.exp);
        }
        for (auto const& r : U.runs()) {
          auto it = std::find(_alphabet.begin(), _alphabet.end(), r.var);
          auto id = static_cast<std::size_t>(it - _alphabet.begin());
          if (it == _alphabet.end()) {
            _alphabet.push_back(r.var);
          }
          _text.insert(_text.end(), r.exp, id);
        }
        // Lower bound on the number of letters still needed after run i.
        _rest.assign(_pattern.size() + 1, 0);
        if (_mode == SubstitutionMode::IntoPlus) {
          for (std::size_t i = _pattern.size(); i > 0; --i) {
            _rest[i - 1] = _rest[i] + _pattern[i - 1].second;
          }
        }
        _image.assign(_vars.size(), Span{0, 0, false});
      }

      std::size_t run() {
        _stopped = false;
        _count   = 0;
        search(0, 0);
        return _count;
      }

     private:
      struct Span {
        std::size_t start;
        std::size_t len;
        bool        assigned;
      };

      bool repeats(std::size_t pos, std::size_t start, std::size_t len,
                   std::uint32_t times) const {
        if (pos + len * times > _text.size()) {
          return false;
        }
        for (std::uint32_t t = 0; t < times; ++t) {
          if (!std::equal(_text.begin() + static_cast<std::ptrdiff_t>(start),
                          _text.begin() + static_cast<std::ptrdiff_t>(start + len),
                          _text.begin() + static_cast<std::ptrdiff_t>(pos + t * len))) {
            return false;
          }
        }
        return true;
      }

      void search(std::size_t i, std::size_t pos) {
        if (_stopped) {
          return;
        }
        if (i == _pattern.size()) {
          if (pos == _text.size()) {
            emit();
          }
          return;
        }
        auto [slot, exp] = _pattern[i];
        auto& img        = _image[slot];
        if (img.assigned) {
          if (repeats(pos, img.start, img.len, exp)) {
            search(i + 1, pos + img.len * exp);
          }
          return;
        }
        std::size_t const available = _text.size() - pos;
        if (available < _rest[i + 1]) {
          return;
        }
        std::size_t const max_len = (available - _rest[i + 1]) / exp;
        std::size_t const min_len = _mode == SubstitutionMode::IntoPlus ? 1 : 0;
        for (std::size_t len = min_len; len <= max_len && !_stopped; ++len) {
          if (!repeats(pos, pos, len, exp)) {
            continue;
          }
          img = Span{pos, len, true};
          search(i + 1, pos + len * exp);
        }
        img.assigned = false;
      }

      void emit() {
        WordSubstitution theta(_mode);
        for (std::size_t v = 0; v < _vars.size(); ++v) {
          Word w;
          for (std::size_t k = 0; k < _image[v].len; ++k) {
            w.append(_alphabet[_text[_image[v].start + k]]);
          }
          theta.set(_vars[v], std::move(w));
        }
        ++_count;
        if (!_visit(theta)) {
          _stopped = true;
        }
      }

      SubstitutionMode _mode;
      MatchVisitor const& _visit;
      std::vector<Variable> _vars;
      std::vector<std::pair<std::size_t, std::uint32_t>> _pattern;
      std::vector<Variable>    _alphabet;
      std::vector<std::size_t> _text;
      std::vector<std::size_t> _rest;
      std::vector<Span>        _image;
      std::size_t              _count   = 0;
      bool                     _stopped = false;
    };
  }  // namespace

  std::size_t match_pattern(Word const& u, Word const& U, SubstitutionMode mode,
                            MatchVisitor const& visit) {
    return Matcher(u, U, mode, visit).run();
  }

  std::vector<WordSubstitution> match_all(Word const& u, Word const& U,
                                          SubstitutionMode mode,
                                          std::size_t      limit) {
    std::vector<WordSubstitution> out;
    if (limit == 0) {
      return out;
    }
    match_pattern(u, U, mode, [&](WordSubstitution const& theta) {
      out.push_back(theta);
      return out.size() < limit;
    });
    return out;
  }

}  // namespace leewb
