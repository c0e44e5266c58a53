#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wormlab/ordinal.hpp"
#include "wormlab/worm.hpp"

namespace wormlab {

// A spider is a worm whose entries are written in split form
// (lambda, mu), standing for the entry Omega_mu + lambda. Each pair
// must satisfy Omega_mu + lambda < Omega_{mu+1}.
struct Spider {
  std::vector<std::pair<TermPtr, TermPtr>> entries;
};

Spider spider_top();
bool is_spider_top(const Spider& s);
Spider make_spider(std::vector<std::pair<TermPtr, TermPtr>> entries);

Worm flatten(const Spider& s);
Spider sharpen(const Worm& w);

TermPtr spider_order(const Spider& s);
Spider spider_head(const Spider& s);
Spider spider_body(const Spider& s);
WormCmp cmp_spider(const Spider& a, const Spider& b);

std::string print_spider(const Spider& s);
Spider parse_spider(const std::string& s);

}  // namespace wormlab
