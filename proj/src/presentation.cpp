#include "mlaw/presentation.hpp"

#include <cctype>

#include "mlaw/errors.hpp"

namespace mlaw {

void Word::append(int gen, int exponent) {
  if (exponent == 0) return;
  if (!factors.empty() && factors.back().first == gen) {
    factors.back().second += exponent;
    if (factors.back().second == 0) factors.pop_back();
    return;
  }
  factors.emplace_back(gen, exponent);
}

Word Word::inverse() const {
  Word w;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    w.append(it->first, -it->second);
  return w;
}

namespace {

constexpr int kMaxExponent = 1'000'000;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse() {
    expect('<');
    parse_generator_list();
    expect('|');
    parse_relator_list();
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after '>'");
    return std::move(result_);
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void parse_generator_list() {
    if (peek() == '|') return;
    while (true) {
      char c = peek();
      if (!std::isalpha(static_cast<unsigned char>(c)))
        fail("expected a generator letter");
      std::string sym(1, c);
      for (const auto& g : result_.generators)
        if (g == sym) fail("generator '" + sym + "' declared twice");
      result_.generators.push_back(sym);
      ++pos_;
      if (peek() != ',') break;
      ++pos_;
    }
  }

  void parse_relator_list() {
    if (peek() == '>') return;
    while (true) {
      parse_relator();
      if (peek() != ',') break;
      ++pos_;
    }
  }

  // word ('=' word)* ; each adjacent pair u = v contributes u v^-1
  void parse_relator() {
    Word first = parse_word();
    if (peek() != '=') {
      result_.relators.push_back(std::move(first));
      return;
    }
    Word prev = std::move(first);
    while (peek() == '=') {
      ++pos_;
      Word next = parse_word();
      Word rel = prev;
      for (auto [g, e] : next.inverse().factors) rel.append(g, e);
      result_.relators.push_back(std::move(rel));
      prev = std::move(next);
    }
  }

  Word parse_word() {
    Word w;
    while (true) {
      char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c))) {
        int gen = lookup_generator(c);
        ++pos_;
        int e = parse_optional_exponent();
        w.append(gen, e);
      } else if (c == '1') {
        ++pos_;
        parse_optional_exponent();  // 1^n is still the empty word
      } else if (c == '(') {
        ++pos_;
        Word inner = parse_word();
        expect(')');
        int e = parse_optional_exponent();
        const Word& block = e >= 0 ? inner : inner.inverse();
        for (int rep = 0; rep < (e >= 0 ? e : -e); ++rep)
          for (auto [g, k] : block.factors) w.append(g, k);
      } else {
        break;
      }
    }
    return w;
  }

  int lookup_generator(char c) {
    std::string sym(1, c);
    for (size_t i = 0; i < result_.generators.size(); ++i)
      if (result_.generators[i] == sym) return static_cast<int>(i);
    fail("undeclared generator '" + sym + "'");
  }

  int parse_optional_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer exponent");
    long e = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > kMaxExponent) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(neg ? -e : e);
  }

  std::string_view text_;
  size_t pos_ = 0;
  Presentation result_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).parse();
}

std::string print_word(const Presentation& p, const Word& w) {
  if (w.factors.empty()) return "1";
  std::string s;
  for (auto [g, e] : w.factors) {
    s += p.generators[g];
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string print_presentation(const Presentation& p) {
  std::string s = "<";
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) s += ",";
    s += p.generators[i];
  }
  s += " | ";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (i) s += ", ";
    s += print_word(p, p.relators[i]);
  }
  s += ">";
  return s;
}

}  // namespace mlaw
