#include "wormlab/notation.hpp"

#include <cctype>
#include <sstream>

namespace wormlab {

namespace {

struct NCursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

WormNotationPtr parse_items(NCursor& c, bool allow_omega, bool nested) {
  auto node = std::make_shared<WormNotation>();
  for (;;) {
    char ch = c.peek();
    if (ch == '(') {
      ++c.i;
      WormNotationPtr group = parse_items(c, allow_omega, true);
      if (c.peek() != ')') throw ParseError("expected ')'", c.i);
      ++c.i;
      node->items.push_back({false, group});
    } else if (ch == 'W' && allow_omega) {
      ++c.i;
      node->items.push_back({true, nullptr});
    } else if (ch == ')' && nested) {
      return node;
    } else if (ch == '\0' && !nested) {
      return node;
    } else if (nested) {
      throw ParseError(allow_omega ? "expected '(', 'W', or ')'"
                                   : "expected '(' or ')'",
                       c.i);
    } else {
      throw ParseError(allow_omega ? "expected '(' or 'W'" : "expected '('",
                       c.i);
    }
  }
}

}  // namespace

WormNotationPtr parse_worm_notation(const std::string& s, bool allow_omega) {
  NCursor c{s};
  WormNotationPtr ast = parse_items(c, allow_omega, false);
  return ast;
}

std::string print_worm_notation(const WormNotationPtr& ast) {
  std::string out;
  for (const auto& item : ast->items) {
    if (item.omega_leaf)
      out += 'W';
    else
      out += "(" + print_worm_notation(item.group) + ")";
  }
  return out;
}

Worm notation_worm(const WormNotationPtr& ast) {
  Worm w;
  for (const auto& item : ast->items) {
    if (item.omega_leaf)
      w.entries.push_back(aleph(one()));
    else
      w.entries.push_back(eval_worm_notation(item.group));
  }
  return w;
}

TermPtr eval_worm_notation(const WormNotationPtr& ast) {
  return project(notation_worm(ast));
}

namespace {

SpiderNotationPtr spider_leaf() {
  static const SpiderNotationPtr t = std::make_shared<SpiderNotation>();
  return t;
}

SpiderNotationPtr parse_spider_expr(NCursor& c) {
  char ch = c.peek();
  if (ch == 'T') {
    ++c.i;
    return spider_leaf();
  }
  if (ch != '[') throw ParseError("expected 'T' or '['", c.i);
  ++c.i;
  auto node = std::make_shared<SpiderNotation>();
  node->x = parse_spider_expr(c);
  if (c.peek() != '|') throw ParseError("expected '|'", c.i);
  ++c.i;
  node->y = parse_spider_expr(c);
  if (c.peek() != ']') throw ParseError("expected ']'", c.i);
  ++c.i;
  node->z = parse_spider_expr(c);
  return node;
}

}  // namespace

SpiderNotationPtr parse_spider_notation(const std::string& s) {
  NCursor c{s};
  SpiderNotationPtr ast = parse_spider_expr(c);
  c.skip_ws();
  if (c.i < s.size()) throw ParseError("trailing input", c.i);
  return ast;
}

std::string print_spider_notation(const SpiderNotationPtr& ast) {
  if (ast->is_leaf()) return "T";
  return "[" + print_spider_notation(ast->x) + "|" +
         print_spider_notation(ast->y) + "]" + print_spider_notation(ast->z);
}

Spider notation_spider(const SpiderNotationPtr& ast) {
  if (ast->is_leaf()) return spider_top();
  Spider xs = notation_spider(ast->x);
  Spider ys = notation_spider(ast->y);
  Spider zs = notation_spider(ast->z);
  TermPtr lambda = project_spider(ys, xs);
  TermPtr mu = spider_order(ys);
  std::vector<std::pair<TermPtr, TermPtr>> entries;
  entries.emplace_back(lambda, mu);
  for (const auto& e : zs.entries) entries.push_back(e);
  return make_spider(std::move(entries));
}

TermPtr eval_spider_notation(const SpiderNotationPtr& ast) {
  return spider_order(notation_spider(ast));
}

}  // namespace wormlab
