#include "wormlab/collapse.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace wormlab {

Budget default_budget() {
  Budget b;
  const char* env = std::getenv("WORMLAB_BUDGET");
  if (!env) return b;
  std::string s(env);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string kv = s.substr(pos, comma - pos);
    size_t eqp = kv.find('=');
    if (eqp != std::string::npos) {
      std::string key = kv.substr(0, eqp);
      unsigned long val = std::strtoul(kv.c_str() + eqp + 1, nullptr, 10);
      if (key == "depth")
        b.depth = static_cast<unsigned>(val);
      else if (key == "size")
        b.term_size = val;
      else if (key == "len")
        b.worm_len = val;
      else if (key == "seed")
        b.seed_size = val;
    }
    pos = comma + 1;
  }
  return b;
}

Closure closure(const ClosureSpec& spec) {
  TermSet set;
  auto admit = [&](const TermPtr& t) {
    if (t->size() > spec.budget.term_size) return false;
    if (spec.budget.value_bound && !lt(t, spec.budget.value_bound))
      return false;
    return set.insert(t).second;
  };
  std::vector<TermPtr> fresh;
  for (const TermPtr& t : spec.seed)
    if (admit(t)) fresh.push_back(t);
  bool converged = false;
  for (unsigned round = 0; round < spec.budget.depth; ++round) {
    std::vector<TermPtr> all(set.begin(), set.end());
    std::vector<TermPtr> next;
    for (const Generator& g : spec.generators)
      for (const TermPtr& t : g(all, fresh, spec.budget))
        if (admit(t)) next.push_back(t);
    if (next.empty()) {
      converged = true;
      break;
    }
    fresh = std::move(next);
  }
  return {std::move(set), converged};
}

namespace {

// Calls f on every ordered operand pair with at least one fresh side.
// Pairs of two stale elements were offered in an earlier round.
template <typename F>
void semi_pairs(const std::vector<TermPtr>& all,
                const std::vector<TermPtr>& fresh, F&& f) {
  for (const TermPtr& a : all)
    for (const TermPtr& b : fresh) {
      f(a, b);
      f(b, a);
    }
}

}  // namespace

Generator gen_add() {
  return [](const std::vector<TermPtr>& all, const std::vector<TermPtr>& fresh,
            const Budget&) {
    std::vector<TermPtr> out;
    semi_pairs(all, fresh, [&](const TermPtr& a, const TermPtr& b) {
      if (a->is_zero() || b->is_zero()) return;
      out.push_back(add(a, b));
    });
    return out;
  };
}

Generator gen_hyperexp() {
  return [](const std::vector<TermPtr>& all, const std::vector<TermPtr>& fresh,
            const Budget& b) {
    std::vector<TermPtr> out;
    semi_pairs(all, fresh, [&](const TermPtr& x, const TermPtr& y) {
      if (x->is_zero() || y->is_zero()) return;
      // A decomposable base always yields a raw node of exactly this size;
      // singleton bases can shrink by absorption, so always compute those.
      if (y->parts().size() >= 2 && x->size() + y->size() + 1 > b.term_size)
        return;
      out.push_back(hyperexp(x, y));
    });
    return out;
  };
}

Generator gen_psi_below(const TermPtr& cutoff) {
  return [cutoff](const std::vector<TermPtr>& all,
                  const std::vector<TermPtr>& fresh, const Budget& bud) {
    std::vector<TermPtr> out;
    semi_pairs(all, fresh, [&](const TermPtr& lvl, const TermPtr& arg) {
      if (!lt(arg, cutoff)) return;
      if (1 + lvl->size() + arg->size() > bud.term_size + 2) return;
      // psi_lvl(arg) >= Omega_lvl for positive levels
      if (!lvl->is_zero() && bud.value_bound &&
          !lt(aleph(lvl), bud.value_bound))
        return;
      if (!psi_arg_admissible(lvl, arg)) return;
      out.push_back(psi_term(lvl, arg));
    });
    return out;
  };
}

namespace {

TermPtr sum_of(const std::vector<Part>& parts) {
  return std::make_shared<const Term>(std::vector<Part>(parts));
}

// Non-increasing part sequences drawn from pool (descending), total
// node count within max_size, at least min_parts parts.
void build_sums(const std::vector<TermPtr>& pool, size_t first, size_t left,
                std::vector<Part>& acc, size_t min_parts,
                std::vector<TermPtr>& out) {
  if (acc.size() >= min_parts) out.push_back(sum_of(acc));
  for (size_t i = first; i < pool.size(); ++i) {
    const TermPtr& p = pool[i];
    if (p->size() > left) continue;
    acc.push_back(p->parts()[0]);
    build_sums(pool, i, left - p->size(), acc, min_parts, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<TermPtr> enumerate_terms(size_t max_size) {
  static std::mutex cache_mutex;
  static std::map<size_t, std::vector<TermPtr>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (auto it = cache.find(max_size); it != cache.end()) return it->second;
  // parts[k]: indecomposable terms of node count exactly k
  std::vector<std::vector<TermPtr>> parts(max_size + 1);
  std::vector<std::vector<TermPtr>> terms(max_size + 1);
  if (max_size == 0) return {};
  parts[1] = {one()};
  terms[1] = {zero(), one()};
  for (size_t k = 2; k <= max_size; ++k) {
    TermSet fresh;
    for (size_t i = 1; i + 2 <= k; ++i) {
      size_t j = k - 1 - i;
      for (const TermPtr& a : terms[i]) {
        if (a->is_zero()) continue;
        for (const TermPtr& b : terms[j]) {
          bool base_ok = b->is_one() || b->parts().size() >= 2;
          if (!base_ok) continue;
          TermPtr t = hyperexp(a, b);
          if (t->size() == k && t->is_indecomposable() &&
              t->parts()[0].kind == PartKind::HExp)
            fresh.insert(t);
        }
      }
    }
    for (const TermPtr& idx : terms[k - 1]) {
      if (idx->is_zero()) continue;
      fresh.insert(aleph(idx));
    }
    for (size_t i = 1; i + 2 <= k; ++i) {
      size_t j = k - 1 - i;
      for (const TermPtr& lvl : terms[i])
        for (const TermPtr& arg : terms[j]) {
          if (arg->is_zero() && !lvl->is_zero()) continue;
          if (!psi_arg_admissible(lvl, arg)) continue;
          TermPtr t = psi_term(lvl, arg);
          if (t->size() == k) fresh.insert(t);
        }
    }
    parts[k].assign(fresh.begin(), fresh.end());
    // decomposable terms: sums of two or more parts totalling k
    std::vector<TermPtr> pool;
    for (size_t i = k; i >= 1; --i)
      for (const TermPtr& p : parts[i]) pool.push_back(p);
    std::sort(pool.begin(), pool.end(),
              [](const TermPtr& a, const TermPtr& b) {
                return cmp(a, b) == Cmp::Greater;
              });
    std::vector<TermPtr> sums;
    std::vector<Part> acc;
    build_sums(pool, 0, k, acc, 2, sums);
    TermSet at_k(parts[k].begin(), parts[k].end());
    for (const TermPtr& s : sums)
      if (s->size() == k) at_k.insert(s);
    terms[k].assign(at_k.begin(), at_k.end());
  }
  TermSet all;
  for (size_t k = 1; k <= max_size; ++k)
    all.insert(terms[k].begin(), terms[k].end());
  cache[max_size] = {all.begin(), all.end()};
  return cache[max_size];
}

std::vector<Worm> enumerate_worms(const std::vector<TermPtr>& alphabet,
                                  size_t max_len) {
  std::vector<Worm> out;
  out.push_back(top());
  std::vector<Worm> layer = {top()};
  for (size_t len = 1; len <= max_len; ++len) {
    std::vector<Worm> next;
    for (const Worm& w : layer)
      for (const TermPtr& e : alphabet) {
        next.push_back(cons(e, w));
        out.push_back(next.back());
      }
    layer = std::move(next);
  }
  return out;
}

Closure closure_C(const TermPtr& eta, const TermPtr& xi, const Budget& b) {
  ClosureSpec spec;
  TermPtr seed_bound = add(nat(2), aleph(eta));
  size_t seed_size = std::min(b.seed_size, b.term_size);
  for (const TermPtr& t : enumerate_terms(seed_size))
    if (lt(t, seed_bound)) spec.seed.push_back(t);
  spec.generators = {gen_add(), gen_hyperexp(), gen_psi_below(xi)};
  spec.budget = b;
  return closure(spec);
}

TermPtr psi_arg_ceiling() {
  static const TermPtr t = hyperexp(add(aleph(one()), one()), one());
  return t;
}

TermPtr psi(const TermPtr& xi) {
  if (lt(psi_arg_ceiling(), xi))
    throw RangeError("collapse argument " + render(xi) +
                     " exceeds the supported range e(O[1]+1,1)");
  return psi_term(zero(), xi);
}

TermPtr psi_eta(const TermPtr& eta, const TermPtr& xi) {
  if (!eta->is_zero()) {
    TermPtr ceiling = hyperexp(add(aleph(add(eta, one())), one()), one());
    if (lt(ceiling, xi))
      throw RangeError("collapse argument " + render(xi) +
                       " exceeds the supported range at level " + render(eta));
  } else if (lt(psi_arg_ceiling(), xi)) {
    throw RangeError("collapse argument " + render(xi) +
                     " exceeds the supported range e(O[1]+1,1)");
  }
  return psi_term(eta, xi);
}

TermPtr project(const Worm& w) {
  TermPtr om = aleph(one());
  bool below = true;
  for (const TermPtr& e : w.entries)
    if (!lt(e, om)) below = false;
  TermPtr o = order_type(w);
  if (below) return o;
  if (lt(psi_arg_ceiling(), o))
    throw RangeError("worm order type " + render(o) +
                     " exceeds the supported collapse range");
  return psi(left_sub(om, o));
}

TermPtr project_spider(const Spider& y, const Spider& x) {
  TermPtr nu = spider_order(y);
  TermPtr band = aleph(add(nu, one()));
  TermPtr ox = spider_order(x);
  if (lt(ox, band)) return ox;
  TermPtr ceiling = hyperexp(add(band, one()), one());
  if (lt(ceiling, ox))
    throw RangeError("spider order " + render(ox) +
                     " exceeds the supported collapse range at level " +
                     render(nu));
  TermPtr delta = left_sub(band, ox);
  if (!nu->is_zero()) delta = add(one(), delta);
  return psi_eta(nu, delta);
}

namespace {

// Collapse candidates: projections of worms strictly below w whose
// entries were already produced. Entries are capped at Omega, which
// covers the supported verification targets, and at a node count that
// keeps every projection within the comparison window reachable.
// Candidate worms depend only on the eligible alphabet, so rounds that
// add no eligible entry are skipped wholesale.
Generator gen_project_candidates(const Worm& w) {
  struct State {
    size_t alphabet_seen = 0;
    TermSet projected;
  };
  auto st = std::make_shared<State>();
  TermPtr ow = order_type(w);
  return [st, ow](const std::vector<TermPtr>& all,
                  const std::vector<TermPtr>&, const Budget& b) {
    TermPtr om = aleph(one());
    size_t entry_cap = b.term_size >= 4 ? b.term_size - 3 : 1;
    std::vector<TermPtr> alphabet;
    for (const TermPtr& t : all)
      if (t->size() <= entry_cap && leq(t, om)) alphabet.push_back(t);
    std::vector<TermPtr> out;
    if (alphabet.size() == st->alphabet_seen) return out;
    st->alphabet_seen = alphabet.size();
    for (const Worm& u : enumerate_worms(alphabet, b.worm_len)) {
      TermPtr ou = order_type(u);
      if (!lt(ou, ow)) continue;
      if (!st->projected.insert(ou).second) continue;
      // A collapse argument that is not constructible below its own
      // collapse stagnates to a value other candidates already deliver.
      if (!lt(ou, om) && !psi_arg_admissible(zero(), left_sub(om, ou)))
        continue;
      out.push_back(project(u));
    }
    return out;
  };
}

std::string list_terms(const std::vector<TermPtr>& ts, size_t limit) {
  std::string s;
  for (size_t i = 0; i < ts.size() && i < limit; ++i) {
    if (!s.empty()) s += ", ";
    s += render(ts[i]);
  }
  if (ts.size() > limit) s += ", ...";
  return s;
}

}  // namespace

VerifyResult verify_psi_cond_equivalence(const Worm& w, const Budget& budget) {
  TermPtr bound = psi_arg_ceiling();
  TermPtr ow = order_type(w);
  if (lt(bound, ow))
    throw RangeError("worm order type " + render(ow) +
                     " exceeds the supported collapse range");
  TermPtr om = aleph(one());
  TermPtr cutoff = lt(ow, om) ? zero() : left_sub(om, ow);

  Budget b = budget;
  b.value_bound = bound;

  ClosureSpec side_a;
  side_a.seed = {om};
  side_a.generators = {gen_add(), gen_hyperexp(), gen_project_candidates(w)};
  side_a.budget = b;
  Closure a = closure(side_a);

  ClosureSpec side_b;
  side_b.seed = {zero(), one(), om};
  side_b.generators = {gen_add(), gen_hyperexp(), gen_psi_below(cutoff)};
  side_b.budget = b;
  Closure cb = closure(side_b);

  size_t window = b.term_size >= 2 ? b.term_size - 2 : b.term_size;
  window = std::min(window, b.worm_len + 1);
  TermSet in_a, in_b;
  for (const TermPtr& t : a.terms)
    if (t->size() <= window) in_a.insert(t);
  for (const TermPtr& t : cb.terms)
    if (t->size() <= window) in_b.insert(t);

  std::vector<TermPtr> a_only, b_only;
  for (const TermPtr& t : in_a)
    if (!in_b.count(t)) a_only.push_back(t);
  for (const TermPtr& t : in_b)
    if (!in_a.count(t)) b_only.push_back(t);

  std::ostringstream os;
  os << "worm=" << print_worm(w) << " window<=" << window << " left=|"
     << in_a.size() << "| right=|" << in_b.size() << "|";
  if (a_only.empty() && b_only.empty()) {
    os << " equal";
    return {VerifyResult::Status::Match, os.str()};
  }
  bool provable = (!a_only.empty() && cb.converged) ||
                  (!b_only.empty() && a.converged);
  if (!a_only.empty()) os << " left-only: " << list_terms(a_only, 5);
  if (!b_only.empty()) os << " right-only: " << list_terms(b_only, 5);
  if (provable) return {VerifyResult::Status::Mismatch, os.str()};
  os << " (budget exhausted before saturation)";
  return {VerifyResult::Status::Inconclusive, os.str()};
}

}  // namespace wormlab
