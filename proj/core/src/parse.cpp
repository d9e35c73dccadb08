#include <cctype>
#include <limits>

#include "leewb/errors.hpp"
#include "leewb/words.hpp"

namespace leewb {

  namespace {
    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    class WordParser {
     public:
      WordParser(std::string_view text, std::size_t offset)
          : _text(text), _offset(offset) {}

      Word parse() {
        skip_space();
        if (at_end()) {
          fail("expected a word");
        }
        if (peek() == '1') {
          ++_pos;
          skip_space();
          if (!at_end()) {
            fail("unexpected input after the empty word \"1\"");
          }
          return Word();
        }
        Word out;
        while (true) {
          auto [var, exp] = term();
          out.append(var, exp);
          std::size_t before = _pos;
          skip_space();
          if (at_end()) {
            break;
          }
          if (_pos == before) {
            fail("expected whitespace between factors");
          }
        }
        return out;
      }

     private:
      std::pair<Variable, std::uint32_t> term() {
        std::size_t start = _pos;
        if (at_end() || peek() < 'a' || peek() > 'z') {
          fail("expected a variable");
        }
        ++_pos;
        while (!at_end()
               && (std::islower(static_cast<unsigned char>(peek()))
                   || std::isdigit(static_cast<unsigned char>(peek()))
                   || peek() == '_')) {
          ++_pos;
        }
        Variable      var(std::string(_text.substr(start, _pos - start)));
        std::uint32_t exp = 1;
        if (!at_end() && peek() == '^') {
          ++_pos;
          std::size_t num_start = _pos;
          std::uint64_t value   = 0;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
              fail("exponent too large", num_start);
            }
            ++_pos;
          }
          if (_pos == num_start) {
            fail("expected an exponent after '^'");
          }
          if (value == 0) {
            fail("exponent must be >= 1", num_start);
          }
          exp = static_cast<std::uint32_t>(value);
        }
        return {std::move(var), exp};
      }

      [[noreturn]] void fail(std::string const& msg) const {
        fail(msg, _pos);
      }
      [[noreturn]] void fail(std::string const& msg, std::size_t pos) const {
        throw ParseError(msg, _offset + pos);
      }

      void skip_space() {
        while (!at_end() && is_space(peek())) {
          ++_pos;
        }
      }
      [[nodiscard]] bool at_end() const {
        return _pos >= _text.size();
      }
      [[nodiscard]] char peek() const {
        return _text[_pos];
      }

      std::string_view _text;
      std::size_t      _offset;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Word parse_word(std::string_view text) {
    return WordParser(text, 0).parse();
  }

  Identity parse_identity(std::string_view text, IdentityKind kind) {
    auto sep = text.find("==");
    if (sep == std::string_view::npos) {
      throw ParseError("expected \"==\" in identity", text.size());
    }
    if (text.find("==", sep + 2) != std::string_view::npos) {
      throw ParseError("more than one \"==\" in identity",
                       text.find("==", sep + 2));
    }
    auto lhs = WordParser(text.substr(0, sep), 0).parse();
    auto rhs = WordParser(text.substr(sep + 2), sep + 2).parse();
    if (kind == IdentityKind::Semigroup && (lhs.empty() || rhs.empty())) {
      throw ParseError("empty side in a semigroup identity", sep);
    }
    return Identity(std::move(lhs), std::move(rhs), kind);
  }

}  // namespace leewb
