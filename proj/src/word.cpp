#include "gn/word.hpp"

#include <cctype>

namespace gn {

namespace {

size_t skip_ws(const std::string& s, size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

ElementWord parse_element_word(const std::string& text) {
  ElementWord w;
  size_t i = skip_ws(text, 0);
  if (i == text.size()) return w;  // empty word = identity

  while (true) {
    // one factor: letter [ '^' integer ]
    if (i == text.size())
      throw WordParseError("expected a generator letter, found end of input",
                           i);
    const char letter = text[i];
    if (letter != 's' && letter != 't' && letter != 'r')
      throw WordParseError(std::string("unknown generator letter '") + letter +
                               "' (expected s, t or r)",
                           i);
    ++i;
    int64_t exp = 1;
    size_t j = skip_ws(text, i);
    if (j < text.size() && text[j] == '^') {
      i = skip_ws(text, j + 1);
      const size_t exp_start = i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw WordParseError("malformed exponent", exp_start);
      int64_t value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > (int64_t{1} << 40))
          throw WordParseError("exponent too large", exp_start);
        ++i;
      }
      exp = neg ? -value : value;
    }
    w.factors.push_back(WordFactor{letter, exp});

    i = skip_ws(text, i);
    if (i == text.size()) break;
    if (text[i] != '*')
      throw WordParseError(std::string("unexpected character '") + text[i] +
                               "' (expected '*' or end of word)",
                           i);
    i = skip_ws(text, i + 1);
    if (i == text.size())
      throw WordParseError("empty operand after '*'", i);
  }
  return w;
}

namespace {

std::string render(const ElementWord& w, const char* s_name, const char* t_name,
                   const char* r_name, const char* sep) {
  std::string out;
  for (size_t i = 0; i < w.factors.size(); ++i) {
    if (i > 0) out += sep;
    const WordFactor& f = w.factors[i];
    out += f.gen == 's' ? s_name : (f.gen == 't' ? t_name : r_name);
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

}  // namespace

std::string render_word(const ElementWord& w) {
  return render(w, "s", "t", "r", "*");
}

std::string render_word_unicode(const ElementWord& w) {
  return render(w, "σ", "τ", "ρ", "");
}

Element eval_word(const GroupParams& g, const ElementWord& w) {
  Element acc = identity();
  for (const WordFactor& f : w.factors) {
    const Element base = f.gen == 's'   ? gen_sigma()
                         : f.gen == 't' ? gen_tau()
                                        : gen_rho();
    acc = mul(g, acc, pow(g, base, f.exp));
  }
  return acc;
}

ElementWord element_to_word(Element x) {
  ElementWord w;
  if (x.a != 0) w.factors.push_back(WordFactor{'s', x.a});
  if (x.b != 0) w.factors.push_back(WordFactor{'t', x.b});
  if (x.c != 0) w.factors.push_back(WordFactor{'r', x.c});
  return w;
}

ElementWord word(const std::string& text) { return parse_element_word(text); }

}  // namespace gn
