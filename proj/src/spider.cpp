#include "wormlab/spider.hpp"

#include <cctype>
#include <sstream>

namespace wormlab {

Spider spider_top() { return {}; }

bool is_spider_top(const Spider& s) { return s.entries.empty(); }

Spider make_spider(std::vector<std::pair<TermPtr, TermPtr>> entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& [lambda, mu] = entries[i];
    TermPtr bound = aleph(add(mu, one()));
    if (!lt(add(aleph(mu), lambda), bound))
      throw DomainError("spider entry " + std::to_string(i) + " = <" +
                        render(lambda) + "/" + render(mu) +
                        "> exceeds its cardinal band");
  }
  Spider s;
  s.entries = std::move(entries);
  return s;
}

Worm flatten(const Spider& s) {
  Worm w;
  w.entries.reserve(s.entries.size());
  for (const auto& [lambda, mu] : s.entries)
    w.entries.push_back(add(aleph(mu), lambda));
  return w;
}

Spider sharpen(const Worm& w) {
  std::vector<std::pair<TermPtr, TermPtr>> entries;
  entries.reserve(w.entries.size());
  for (const TermPtr& e : w.entries) {
    auto [iota, dot] = cardinal_index(e);
    entries.emplace_back(dot, iota);
  }
  return make_spider(std::move(entries));
}

TermPtr spider_order(const Spider& s) { return order_type(flatten(s)); }

Spider spider_head(const Spider& s) {
  if (is_spider_top(s)) return s;
  Worm w = flatten(s);
  return sharpen(head(min_entry(w), w));
}

Spider spider_body(const Spider& s) {
  if (is_spider_top(s)) return s;
  Worm w = flatten(s);
  return sharpen(body(min_entry(w), w));
}

WormCmp cmp_spider(const Spider& a, const Spider& b) {
  return cmp_worm(flatten(a), flatten(b));
}

std::string print_spider(const Spider& s) {
  std::ostringstream os;
  for (const auto& [lambda, mu] : s.entries)
    os << '<' << render(lambda) << '/' << render(mu) << '>';
  os << 'T';
  return os.str();
}

Spider parse_spider(const std::string& s) {
  std::vector<std::pair<TermPtr, TermPtr>> entries;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  for (;;) {
    skip_ws();
    if (i >= s.size()) throw ParseError("expected spider", i);
    if (s[i] == 'T') {
      ++i;
      skip_ws();
      if (i < s.size()) throw ParseError("trailing input", i);
      return make_spider(std::move(entries));
    }
    if (s[i] != '<') throw ParseError("expected '<' or 'T'", i);
    size_t open = ++i;
    size_t slash = s.find('/', i);
    size_t close = s.find('>', i);
    if (close == std::string::npos || slash == std::string::npos ||
        slash > close)
      throw ParseError("expected '<lambda/mu>' entry", open);
    try {
      TermPtr lambda = parse_ordinal(s.substr(open, slash - open));
      TermPtr mu = parse_ordinal(s.substr(slash + 1, close - slash - 1));
      entries.emplace_back(lambda, mu);
    } catch (const ParseError& e) {
      throw ParseError("bad entry: " + std::string(e.what()), open);
    }
    i = close + 1;
  }
}

}  // namespace wormlab
