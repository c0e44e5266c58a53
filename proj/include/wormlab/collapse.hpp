#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "wormlab/ordinal.hpp"
#include "wormlab/spider.hpp"
#include "wormlab/worm.hpp"

namespace wormlab {

// Iterative closure of ordinal term sets under generator rules, and the
// collapsing projections built on top of it.
//
// All sets are explicit finite approximations: a Budget bounds how many
// rounds run, how large admitted terms may be, and how long candidate
// worms for the collapse rule may grow. Results therefore distinguish
// "converged" (a round added nothing) from "budget exhausted".

struct Budget {
  unsigned depth = 6;     // maximum closure rounds
  size_t term_size = 7;   // admit only terms with size() <= term_size
  // Collapse-rule candidate worms have at most this many entries. Keep
  // worm_len >= term_size - 3: the natural number k has size k and is
  // reachable only as the collapse of a worm of length k - 1.
  size_t worm_len = 4;
  size_t seed_size = 3;   // size cap for closure_C seed enumeration
  TermPtr value_bound;    // optional strict upper bound on admitted values
};

// Reads WORMLAB_BUDGET ("depth=N,size=N,len=N,seed=N") on top of defaults.
Budget default_budget();

using TermSet = std::set<TermPtr, TermLess>;

struct Closure {
  TermSet terms;
  bool converged = false;
};

// A generator maps the current set plus the elements admitted in the
// previous round to new candidate terms. Producing candidates for every
// operand combination that touches at least one fresh element suffices:
// stale combinations were already offered in earlier rounds.
using Generator = std::function<std::vector<TermPtr>(
    const std::vector<TermPtr>& all, const std::vector<TermPtr>& fresh,
    const Budget&)>;

struct ClosureSpec {
  std::vector<TermPtr> seed;
  std::vector<Generator> generators;
  Budget budget;
};

// Least fixpoint approximation: applies generators round by round until
// nothing new is admitted or budget.depth rounds have run.
Closure closure(const ClosureSpec& spec);

Generator gen_add();
Generator gen_hyperexp();
// Collapses psi_lvl(arg) for set members lvl, arg with arg < cutoff.
Generator gen_psi_below(const TermPtr& cutoff);

// All canonical terms with size() <= max_size.
std::vector<TermPtr> enumerate_terms(size_t max_size);

// All worms with entries drawn from alphabet and at most max_len of
// them, including the top worm.
std::vector<Worm> enumerate_worms(const std::vector<TermPtr>& alphabet,
                                  size_t max_len);

// The indexed closure set C_eta(xi): ordinals below 2 + Omega_eta seeded
// up to budget.seed_size, closed under addition, hyperexponentials and
// collapses with argument below xi.
Closure closure_C(const TermPtr& eta, const TermPtr& xi, const Budget& b);

// Exclusive ceiling e(O[1]+1,1) on first-level collapse arguments.
TermPtr psi_arg_ceiling();

// First-level collapse psi(xi); RangeError above the ceiling.
TermPtr psi(const TermPtr& xi);

// Indexed collapse psi_eta(xi), accepted below e(O[eta+1]+1,1).
TermPtr psi_eta(const TermPtr& eta, const TermPtr& xi);

// Order type for worms with countable entries; the collapse of the
// order type once uncountable entries occur.
TermPtr project(const Worm& w);

// Collapses the order type of x into the cardinal band selected by the
// order type of y.
TermPtr project_spider(const Spider& y, const Spider& x);

struct VerifyResult {
  enum class Status { Match, Mismatch, Inconclusive };
  Status status;
  std::string detail;
};

// Compares two presentations of the collapse of a worm's order type:
// the set generated from {Omega} by collapsing candidate worms below w
// against the set generated from {0, 1, Omega} by the cutoff psi rule.
// Elements are compared up to a shared size window; Mismatch is only
// reported when the side missing an element has converged.
VerifyResult verify_psi_cond_equivalence(const Worm& w, const Budget& b);

}  // namespace wormlab
