#include <doctest.h>

#include "gn/group.hpp"
#include "gn/word.hpp"

using namespace gn;

namespace {

size_t parse_offset(const std::string& text) {
  try {
    parse_element_word(text);
  } catch (const WordParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for: ", text);
  return SIZE_MAX;
}

}  // namespace

TEST_CASE("parse_element_word accepts the word grammar") {
  const ElementWord w = parse_element_word("s*t^3");
  REQUIRE(w.factors.size() == 2);
  CHECK(w.factors[0] == WordFactor{'s', 1});
  CHECK(w.factors[1] == WordFactor{'t', 3});

  CHECK(parse_element_word("").factors.empty());
  CHECK(parse_element_word("   ").factors.empty());
  CHECK(parse_element_word(" s ^ 2 * t ^ -3 * r ").factors ==
        std::vector<WordFactor>{{'s', 2}, {'t', -3}, {'r', 1}});
  CHECK(parse_element_word("r^+4").factors ==
        std::vector<WordFactor>{{'r', 4}});
  CHECK(parse_element_word("t^0").factors == std::vector<WordFactor>{{'t', 0}});
}

TEST_CASE("parse_element_word reports positions for malformed input") {
  CHECK(parse_offset("s*x") == 2);       // unknown letter
  CHECK(parse_offset("q") == 0);         // unknown letter at the start
  CHECK(parse_offset("s^") == 2);        // missing exponent
  CHECK(parse_offset("s^-") == 2);       // sign without digits
  CHECK(parse_offset("s^t") == 2);       // non-numeric exponent
  CHECK(parse_offset("s**t") == 2);      // empty operand
  CHECK(parse_offset("s*") == 2);        // trailing operand
  CHECK(parse_offset("s t") == 2);       // missing '*'
  CHECK(parse_offset("*s") == 0);        // leading '*'
}

TEST_CASE("eval_word folds over mul and pow") {
  for (int n : {1, 2, 3}) {
    const GroupParams g = make_group(n);
    // rho^-1 sigma rho = sigma^3
    CHECK(eval_word(g, parse_element_word("r^-1*s*r")) ==
          pow(g, gen_sigma(), 3));
    CHECK(eval_word(g, parse_element_word("")) == identity());
    CHECK(eval_word(g, parse_element_word("s^8")) == identity());
    CHECK(eval_word(g, parse_element_word("t^2*t^-2")) == identity());
  }
  // at n = 1, sigma^4 tau^4 collapses: (sigma tau)^4 = 1
  const GroupParams g1 = make_group(1);
  CHECK(eval_word(g1, parse_element_word("s^4*t^4")) == identity());
  CHECK(eval_word(g1, parse_element_word("s*t*s*t*s*t*s*t")) == identity());
}

TEST_CASE("render and parse round-trip") {
  for (const char* text : {"s", "t^2", "s*t", "s^2*t^2", "r^-1*s*r",
                           "s*t*r", "t^-5", "s^4"}) {
    const ElementWord w = parse_element_word(text);
    CHECK(parse_element_word(render_word(w)) == w);
  }
  CHECK(render_word(parse_element_word("s * t ^ 3")) == "s*t^3");
  CHECK(render_word(ElementWord{}) == "");
  CHECK(render_word_unicode(parse_element_word("s^2*t^2")) ==
        "σ^2τ^2");
}

TEST_CASE("element_to_word inverts evaluation on normal forms") {
  const GroupParams g = make_group(2);
  for (const Element& x : enumerate_elements(g)) {
    const ElementWord w = element_to_word(x);
    CHECK(eval_word(g, w) == x);
    CHECK(parse_element_word(render_word(w)) == w);
  }
}
