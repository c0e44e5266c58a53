#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wormlab/collapse.hpp"
#include "wormlab/ordinal.hpp"
#include "wormlab/spider.hpp"
#include "wormlab/worm.hpp"

namespace wormlab {

// Nested-bracket notation for self-generating worms. A node is a
// sequence of items: each item is either a bracketed subworm or the
// uncountable leaf W (only when the impredicative alphabet is on).
struct WormNotation;
using WormNotationPtr = std::shared_ptr<const WormNotation>;

struct WormNotation {
  struct Item {
    bool omega_leaf;
    WormNotationPtr group;  // null iff omega_leaf
  };
  std::vector<Item> items;
};

WormNotationPtr parse_worm_notation(const std::string& s,
                                    bool allow_omega = false);
std::string print_worm_notation(const WormNotationPtr& ast);

// Entries: each group contributes the projection of its own worm,
// each W leaf contributes Omega.
Worm notation_worm(const WormNotationPtr& ast);
TermPtr eval_worm_notation(const WormNotationPtr& ast);

// Bracket notation [X|Y]Z for self-generating spiders.
struct SpiderNotation;
using SpiderNotationPtr = std::shared_ptr<const SpiderNotation>;

struct SpiderNotation {
  SpiderNotationPtr x, y, z;  // all null = the leaf T
  bool is_leaf() const { return !x; }
};

SpiderNotationPtr parse_spider_notation(const std::string& s);
std::string print_spider_notation(const SpiderNotationPtr& ast);

// [X|Y]Z denotes the spider <project_spider(Y,X) / order(Y)> :: Z.
Spider notation_spider(const SpiderNotationPtr& ast);
TermPtr eval_spider_notation(const SpiderNotationPtr& ast);

}  // namespace wormlab
