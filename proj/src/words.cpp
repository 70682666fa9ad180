#include "garside/words.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "garside/errors.hpp"

namespace garside {

namespace {

struct Token {
  enum Kind { kName, kLParen, kRParen, kComma, kEnd } kind;
  std::string text;
  std::int64_t exp = 1;
  std::size_t pos = 0;
};

std::int64_t lex_exponent(std::string_view text, std::size_t& i) {
  // caller consumed '^'
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + i, text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() + i)
    throw ParseError("expected an integer exponent at offset " +
                         std::to_string(i),
                     i);
  i = static_cast<std::size_t>(ptr - text.data());
  return value;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::kLParen, "(", 1, i});
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back({Token::kComma, ",", 1, i});
      ++i;
      continue;
    }
    if (c == ')') {
      Token t{Token::kRParen, ")", 1, i};
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        t.exp = lex_exponent(text, i);
      }
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[i])))
        ++i;
      Token t{Token::kName, std::string(text.substr(start, i - start)), 1,
              start};
      if (i < text.size() && text[i] == '^') {
        ++i;
        t.exp = lex_exponent(text, i);
      }
      out.push_back(t);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at offset " + std::to_string(i),
                     i);
  }
  out.push_back({Token::kEnd, "", 1, text.size()});
  return out;
}

enum class StopAt { kEnd, kComma, kRParen };

Element parse_seq(const std::vector<Token>& toks, std::size_t& idx,
                  const GarsideStructure& st, StopAt stop);

Element parse_group(const std::vector<Token>& toks, std::size_t& idx,
                    const GarsideStructure& st) {
  const Token& open = toks[idx];
  const GarsideStructure* left_st = st.component(0);
  const GarsideStructure* right_st = st.component(1);
  if (left_st == nullptr)
    throw ParseError("'(' at offset " + std::to_string(open.pos) +
                         " is only valid in product structures ('" + st.spec() +
                         "')",
                     open.pos);
  ++idx;  // '('
  Element left = parse_seq(toks, idx, *left_st, StopAt::kComma);
  ++idx;  // ','
  Element right = parse_seq(toks, idx, *right_st, StopAt::kRParen);
  const Token& close = toks[idx];
  ++idx;  // ')'
  Element pair = product_element(st, left, right);
  return close.exp == 1 ? pair : pair.pow(close.exp);
}

Element parse_seq(const std::vector<Token>& toks, std::size_t& idx,
                  const GarsideStructure& st, StopAt stop) {
  Element acc = Element::identity(st);
  for (;;) {
    const Token& tok = toks[idx];
    switch (tok.kind) {
      case Token::kEnd:
        if (stop == StopAt::kEnd) return acc;
        throw ParseError("unexpected end of word at offset " +
                             std::to_string(tok.pos),
                         tok.pos);
      case Token::kComma:
        if (stop == StopAt::kComma) return acc;
        throw ParseError("unexpected ',' at offset " + std::to_string(tok.pos),
                         tok.pos);
      case Token::kRParen:
        if (stop == StopAt::kRParen) return acc;
        throw ParseError("unexpected ')' at offset " + std::to_string(tok.pos),
                         tok.pos);
      case Token::kLParen:
        acc = acc * parse_group(toks, idx, st);
        break;
      case Token::kName: {
        Element base = Element::identity(st);
        if (tok.text == "D") {
          base = Element::delta_power(st, 1);
        } else if (std::optional<Simple> atom = st.parse_atom(tok.text)) {
          base = Element::from_simple(st, *atom);
        } else {
          throw ParseError("unknown atom '" + tok.text + "' at offset " +
                               std::to_string(tok.pos) + " for structure '" +
                               st.spec() + "'",
                           tok.pos);
        }
        acc = acc * (tok.exp == 1 ? base : base.pow(tok.exp));
        ++idx;
        break;
      }
    }
  }
}

}  // namespace

Element parse_element(const GarsideStructure& st, std::string_view text) {
  std::vector<Token> toks = lex(text);
  std::size_t idx = 0;
  return parse_seq(toks, idx, st, StopAt::kEnd);
}

Element product_element(const GarsideStructure& product_st, const Element& left,
                        const Element& right) {
  const GarsideStructure* lst = product_st.component(0);
  const GarsideStructure* rst = product_st.component(1);
  if (lst == nullptr || &left.structure() != lst || &right.structure() != rst)
    throw StructureMismatchError(
        "component elements do not match product structure '" +
        product_st.spec() + "'");

  auto embed = [&](const Element& comp, bool first) {
    auto wrap = [&](const Simple& s) {
      return first ? make_product_simple(product_st.id(), s, rst->one())
                   : make_product_simple(product_st.id(), lst->one(), s);
    };
    const Simple comp_delta = wrap(first ? lst->delta() : rst->delta());
    Element acc = Element::from_simple(product_st, comp_delta).pow(comp.inf());
    std::vector<Simple> fs;
    fs.reserve(comp.factors().size());
    for (const Simple& f : comp.factors()) fs.push_back(wrap(f));
    return acc * Element::make(product_st, 0, std::move(fs));
  };
  return embed(left, true) * embed(right, false);
}

namespace {

std::string braid_word(const Perm& p) {
  // Greedy leftmost-descent factorization gives a deterministic reduced word.
  Perm cur = p;
  std::string out;
  for (;;) {
    int i = -1;
    for (int k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] > cur[k + 1]) {
        i = k;
        break;
      }
    }
    if (i < 0) break;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i + 1);
    std::uint8_t tmp = cur[i];
    cur.set(i, cur[i + 1]);
    cur.set(i + 1, tmp);
  }
  return out;
}

}  // namespace

std::string word_of_simple(const GarsideStructure& st, const Simple& s) {
  if (st.is_one(s)) return "D^0";
  if (st.is_delta(s)) return "D";
  if (const Perm* p = std::get_if<Perm>(&s.payload())) return braid_word(*p);
  if (const CyclicPow* c = std::get_if<CyclicPow>(&s.payload())) {
    std::string base = c->axis == 1 ? "x" : "y";
    return c->exp == 1 ? base : base + "^" + std::to_string(c->exp);
  }
  return "( " + word_of_simple(*st.component(0), s.left()) + " , " +
         word_of_simple(*st.component(1), s.right()) + " )";
}

std::string to_word(const Element& g) {
  std::string out = "D^" + std::to_string(g.inf());
  for (const Simple& f : g.factors())
    out += " . " + word_of_simple(g.structure(), f);
  return out;
}

}  // namespace garside
