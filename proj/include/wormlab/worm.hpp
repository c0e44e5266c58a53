#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wormlab/ordinal.hpp"

namespace wormlab {

// A worm is a finite sequence of ordinal entries, leftmost first.
// The empty sequence is the top worm T.
struct Worm {
  std::vector<TermPtr> entries;
};

Worm top();
bool is_top(const Worm& w);
Worm cons(const TermPtr& e, const Worm& w);       // <e>w
Worm concat(const Worm& v, const Worm& w);        // vw
Worm concat0(const Worm& v, const Worm& w);       // v<0>w
TermPtr min_entry(const Worm& w);                 // requires non-top

// Entrywise shift by lambda: entries e become lambda+e.
Worm promote(const TermPtr& lambda, const Worm& w);

// Entrywise left subtraction -lambda+e. Every entry must be >= lambda;
// otherwise DomainError naming the offending position.
Worm demote(const TermPtr& lambda, const Worm& w);

// Maximal initial segment whose entries all exceed lambda.
Worm head(const TermPtr& lambda, const Worm& w);

// Remainder after the head and the first lambda entry; top if the
// entry right after the head is not lambda.
Worm body(const TermPtr& lambda, const Worm& w);

enum class WormCmp { Below, Equiv, Above };

WormCmp cmp_worm(const Worm& v, const Worm& w);
bool worm_eq_syntactic(const Worm& v, const Worm& w);

// Structural recursion depth; strictly decreases under head, body
// and demotion by the minimum.
uint64_t norm(const Worm& w);

// Order type of the interval a worm names.
TermPtr order_type(const Worm& w);

// Order type by the finite-entry recursion; requires every entry to
// be a natural number.
TermPtr order_type_finite(const Worm& w);

// A worm whose order type is xi.
Worm worm_of(const TermPtr& xi);

// A worm equivalent to the conjunction of two worms.
Worm conj_worm(const Worm& u, const Worm& v);

std::string print_worm(const Worm& w);
Worm parse_worm(const std::string& s);

}  // namespace wormlab
