#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "wormlab/collapse.hpp"
#include "wormlab/notation.hpp"
#include "wormlab/ordinal.hpp"
#include "wormlab/spider.hpp"
#include "wormlab/worm.hpp"

using namespace wormlab;

static TermPtr P(const std::string& s) { return parse_ordinal(s); }
static Worm W(const std::string& s) { return parse_worm(s); }
static Spider S(const std::string& s) { return parse_spider(s); }

TEST_CASE("spiders print, parse, and respect cardinal bands") {
  CHECK(print_spider(spider_top()) == "T");
  CHECK(print_spider(S("<1/0><0/0><1+1/0>T")) == "<1/0><0/0><1+1/0>T");
  CHECK(print_spider(S(" < 1 / 1 > T ")) == "<1/1>T");
  CHECK_THROWS_WITH_AS(parse_spider("<O[1]/0>T"),
                       "spider entry 0 = <O[1]/0> exceeds its cardinal band",
                       DomainError);
  auto pos_of = [](const std::string& s) {
    try {
      parse_spider(s);
    } catch (const ParseError& e) {
      return (int)e.pos;
    }
    return -1;
  };
  CHECK(pos_of("<1/0>") == 5);
  CHECK(pos_of("<1>T") == 1);
  CHECK_THROWS_WITH_AS(parse_spider("<1>T"),
                       "expected '<lambda/mu>' entry at position 1",
                       ParseError);
}

TEST_CASE("flatten and sharpen are mutually inverse") {
  CHECK(print_worm(flatten(S("<0/1>T"))) == "<O[1]>T");
  CHECK(print_spider(sharpen(W("<w>T"))) == "<w/0>T");
  std::vector<Worm> pool = enumerate_worms({zero(), one(), omega(), P("O[1]"),
                                            P("O[1]+w")},
                                           3);
  for (const auto& w : pool) {
    Spider s = sharpen(w);
    CHECK(worm_eq_syntactic(flatten(s), w));
    Spider again = sharpen(flatten(s));
    CHECK(print_spider(again) == print_spider(s));
  }
}

TEST_CASE("spider order types and comparison") {
  CHECK(render(spider_order(spider_top())) == "0");
  CHECK(render(spider_order(S("<0/0>T"))) == "1");
  CHECK(render(spider_order(S("<0/1>T"))) == "O[1]");
  std::vector<Worm> pool = enumerate_worms({zero(), one(), P("O[1]")}, 3);
  for (const auto& v : pool)
    for (const auto& w : pool) {
      WormCmp want = cmp_worm(v, w);
      CHECK(cmp_spider(sharpen(v), sharpen(w)) == want);
      Cmp oc = cmp(spider_order(sharpen(v)), spider_order(sharpen(w)));
      CHECK((want == WormCmp::Below) == (oc == Cmp::Less));
    }
}

TEST_CASE("spider head and body") {
  Spider sp = S("<1/0><0/0><1+1/0>T");
  CHECK(print_spider(spider_head(sp)) == "<1/0>T");
  CHECK(print_spider(spider_body(sp)) == "<1+1/0>T");
  CHECK(is_spider_top(spider_top()));
  CHECK(!is_spider_top(sp));
}

TEST_CASE("bracket strings evaluate to their ordinals") {
  auto ev = [](const std::string& s) {
    return render(eval_worm_notation(parse_worm_notation(s)));
  };
  CHECK(ev("") == "0");
  CHECK(ev("()") == "1");
  CHECK(ev("(())") == "w");
  CHECK(ev("((()))") == "e(w,1)");
  CHECK(ev("((()))((()))") == "e(w,1+1)");
  CHECK(ev("((()))()(()(()))") == "e(w+1,1)+e(w,1)");
  CHECK(ev("((((()))))") == "e(e(e(w,1),1),1)");
}

TEST_CASE("bracket notation round trips and rejects with positions") {
  CHECK(print_worm(notation_worm(parse_worm_notation("(())()"))) == "<1><0>T");
  CHECK(print_worm_notation(parse_worm_notation(" ( ( ) ) ( ) ")) == "(())()");
  for (const std::string s :
       {"()", "(())", "((()))((()))", "(()())", "((()))()(()(()))"})
    CHECK(print_worm_notation(parse_worm_notation(s)) == s);
  auto pos_of = [](const std::string& s, bool omega = false) {
    try {
      parse_worm_notation(s, omega);
    } catch (const ParseError& e) {
      return (int)e.pos;
    }
    return -1;
  };
  CHECK(pos_of("x") == 0);
  CHECK(pos_of("(") == 1);
  CHECK(pos_of("()x") == 2);
  CHECK(pos_of(")") == 0);
  CHECK(pos_of("W") == 0);
  CHECK(pos_of("(W", true) == 2);
  CHECK_THROWS_WITH_AS(parse_worm_notation("()x"),
                       "expected '(' at position 2", ParseError);
}

TEST_CASE("the uncountable leaf unlocks collapse values") {
  auto ev = [](const std::string& s) {
    return render(eval_worm_notation(parse_worm_notation(s, true)));
  };
  CHECK(ev("W") == "p[0](0)");
  CHECK(ev("(W)") == "p[0](0)");
  CHECK(ev("W()") == "p[0](0)");
  CHECK(ev("WW") == "p[0](e(O[1],1+1))");
  CHECK(print_worm_notation(parse_worm_notation("W(W)", true)) == "W(W)");
}

TEST_CASE("spider notation evaluates through projections") {
  auto ev = [](const std::string& s) {
    return render(eval_spider_notation(parse_spider_notation(s)));
  };
  CHECK(ev("T") == "0");
  CHECK(ev("[T|T]T") == "1");
  CHECK(ev("[[T|T]T|T]T") == "w");
  CHECK(ev("[[[T|T]T|T]T|T]T") == "e(w,1)");
  CHECK(ev("[[T|[T|T]T]T|T]T") == "p[0](0)");
  CHECK(print_spider(notation_spider(parse_spider_notation("[T|T]T"))) ==
        "<0/0>T");
  CHECK(print_spider_notation(parse_spider_notation(" [ T | T ] T ")) ==
        "[T|T]T");
  for (const std::string s : {"T", "[T|T]T", "[[T|T]T|[T|T]T][T|T]T"})
    CHECK(print_spider_notation(parse_spider_notation(s)) == s);
  auto pos_of = [](const std::string& s) {
    try {
      parse_spider_notation(s);
    } catch (const ParseError& e) {
      return (int)e.pos;
    }
    return -1;
  };
  CHECK(pos_of("T T") == 2);
  CHECK(pos_of("[T|T") == 4);
  CHECK(pos_of("[T|T]") == 5);
  CHECK(pos_of("X") == 0);
  CHECK(pos_of("") == 0);
}
