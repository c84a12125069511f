#include "cuntz/text.hpp"

#include <cctype>
#include <optional>
#include <ostream>

#include "cuntz/error.hpp"

namespace cuntz {

namespace {

void append_letter(std::string& out, Letter l, bool starred) {
  if (!out.empty()) out += ' ';
  out += 's';
  if (l <= 9) {
    out += static_cast<char>('0' + l);
  } else {
    out += '[' + std::to_string(l) + ']';
  }
  if (starred) out += '*';
}

class Parser {
 public:
  Parser(std::string_view text, unsigned d) : text_(text), d_(d) {}

  Element parse() {
    Element out(d_);
    skip_ws();
    if (at_end()) fail("empty element");
    bool first = true;
    while (!at_end()) {
      Coefficient sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += parse_term() * sign;
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  Element parse_term() {
    Coefficient c = 1;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_rational();
      any = true;
      skip_ws();
    }
    std::optional<Monomial> m = Monomial::identity();
    while (!at_end() && (peek() == 's' || peek() == 'I')) {
      any = true;
      if (peek() == 'I') {
        ++pos_;
      } else {
        ++pos_;
        const Letter l = parse_index();
        bool starred = false;
        if (!at_end() && peek() == '*') {
          starred = true;
          ++pos_;
        }
        const Monomial f = starred ? Monomial::generator_adjoint(l)
                                   : Monomial::generator(l);
        if (m) m = multiply(*m, f);
      }
      skip_ws();
    }
    if (!any) fail("expected a coefficient or a factor");
    Element out(d_);
    if (m) out.add_term(*m, c);
    return out;
  }

  Letter parse_index() {
    unsigned long v = 0;
    if (!at_end() && peek() == '[') {
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (pos_ == start || at_end() || peek() != ']')
        fail("malformed bracketed index");
      ++pos_;
    } else if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = static_cast<unsigned long>(text_[pos_++] - '0');
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        fail("indices above 9 must be bracketed, e.g. s[12]");
    } else {
      fail("expected generator index after 's'");
    }
    if (v < 1 || v > d_)
      throw IndexOutOfRange("generator index " + std::to_string(v) +
                            " outside {1.." + std::to_string(d_) + "}");
    return static_cast<Letter>(v);
  }

  Coefficient parse_rational() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '/'))
      ++pos_;
    return parse_coefficient(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  unsigned d_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Monomial& m) {
  if (m.is_identity()) return "I";
  std::string out;
  for (Letter l : m.create) append_letter(out, l, false);
  for (auto it = m.annihilate.rbegin(); it != m.annihilate.rend(); ++it)
    append_letter(out, *it, true);
  return out;
}

std::string to_string(const Coefficient& c) {
  return c.get_str();
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = sgn(c) < 0;
    const Coefficient mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + ' ';
    out += to_string(m);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) {
  return os << to_string(x);
}

Element parse_element(std::string_view text, unsigned d) {
  return Parser(text, d).parse();
}

Coefficient parse_coefficient(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    const std::size_t slash = t.find('/');
    const std::string num = t.substr(i, slash == std::string::npos
                                            ? std::string::npos
                                            : slash - i);
    const std::string den =
        slash == std::string::npos ? "1" : t.substr(slash + 1);
    auto digits = [](const std::string& u) {
      return !u.empty() &&
             std::all_of(u.begin(), u.end(),
                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    return digits(num) && digits(den) && den.find_first_not_of('0') != std::string::npos;
  };
  if (!valid(s)) throw ParseError("malformed rational '" + s + "'");
  Coefficient c(s, 10);
  c.canonicalize();
  return c;
}

}  // namespace cuntz
