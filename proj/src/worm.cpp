#include "wormlab/worm.hpp"

#include <cctype>
#include <sstream>

namespace wormlab {

Worm top() { return {}; }

bool is_top(const Worm& w) { return w.entries.empty(); }

Worm cons(const TermPtr& e, const Worm& w) {
  Worm out;
  out.entries.reserve(w.entries.size() + 1);
  out.entries.push_back(e);
  out.entries.insert(out.entries.end(), w.entries.begin(), w.entries.end());
  return out;
}

Worm concat(const Worm& v, const Worm& w) {
  Worm out = v;
  out.entries.insert(out.entries.end(), w.entries.begin(), w.entries.end());
  return out;
}

Worm concat0(const Worm& v, const Worm& w) {
  Worm out = v;
  out.entries.push_back(zero());
  out.entries.insert(out.entries.end(), w.entries.begin(), w.entries.end());
  return out;
}

TermPtr min_entry(const Worm& w) {
  if (is_top(w)) throw DomainError("min_entry of the top worm");
  TermPtr m = w.entries[0];
  for (const TermPtr& e : w.entries)
    if (lt(e, m)) m = e;
  return m;
}

Worm promote(const TermPtr& lambda, const Worm& w) {
  Worm out;
  out.entries.reserve(w.entries.size());
  for (const TermPtr& e : w.entries) out.entries.push_back(add(lambda, e));
  return out;
}

Worm demote(const TermPtr& lambda, const Worm& w) {
  Worm out;
  out.entries.reserve(w.entries.size());
  for (size_t i = 0; i < w.entries.size(); ++i) {
    if (lt(w.entries[i], lambda))
      throw DomainError("cannot demote entry " + std::to_string(i) + " = " +
                        render(w.entries[i]) + " below " + render(lambda));
    out.entries.push_back(left_sub(lambda, w.entries[i]));
  }
  return out;
}

Worm head(const TermPtr& lambda, const Worm& w) {
  Worm out;
  for (const TermPtr& e : w.entries) {
    if (!lt(lambda, e)) break;
    out.entries.push_back(e);
  }
  return out;
}

Worm body(const TermPtr& lambda, const Worm& w) {
  size_t i = 0;
  while (i < w.entries.size() && lt(lambda, w.entries[i])) ++i;
  if (i < w.entries.size() && eq(w.entries[i], lambda)) {
    Worm out;
    out.entries.assign(w.entries.begin() + i + 1, w.entries.end());
    return out;
  }
  return top();
}

WormCmp cmp_worm(const Worm& v, const Worm& w) {
  if (is_top(v) && is_top(w)) return WormCmp::Equiv;
  if (is_top(v)) return WormCmp::Below;
  if (is_top(w)) return WormCmp::Above;
  TermPtr mv = min_entry(v);
  TermPtr mw = min_entry(w);
  TermPtr lambda = lt(mv, mw) ? mv : mw;
  if (cmp_worm(v, body(lambda, w)) != WormCmp::Above) return WormCmp::Below;
  if (cmp_worm(w, body(lambda, v)) != WormCmp::Above) return WormCmp::Above;
  return cmp_worm(head(lambda, v), head(lambda, w));
}

bool worm_eq_syntactic(const Worm& v, const Worm& w) {
  if (v.entries.size() != w.entries.size()) return false;
  for (size_t i = 0; i < v.entries.size(); ++i)
    if (!eq(v.entries[i], w.entries[i])) return false;
  return true;
}

uint64_t norm(const Worm& w) {
  if (is_top(w)) return 0;
  TermPtr mu = min_entry(w);
  if (mu->is_zero())
    return norm(head(mu, w)) + norm(body(mu, w)) + 1;
  return norm(demote(mu, w)) + 1;
}

TermPtr order_type(const Worm& w) {
  if (is_top(w)) return zero();
  TermPtr mu = min_entry(w);
  if (mu->is_zero()) {
    TermPtr ob = order_type(body(mu, w));
    TermPtr oh = order_type(head(mu, w));
    return add(add(ob, one()), oh);
  }
  return hyperexp(mu, order_type(demote(mu, w)));
}

namespace {

bool is_finite(const TermPtr& t) {
  for (const Part& p : t->parts())
    if (p.kind != PartKind::One) return false;
  return true;
}

}  // namespace

TermPtr order_type_finite(const Worm& w) {
  if (is_top(w)) return zero();
  for (const TermPtr& e : w.entries)
    if (!is_finite(e))
      throw DomainError("finite order type needs natural entries, got " +
                        render(e));
  Worm h = head(zero(), w);
  Worm b = body(zero(), w);
  return add(order_type_finite(b),
             omega_pow(order_type_finite(demote(one(), h))));
}

namespace {

// For an indecomposable q, the delta with q = w^delta.
TermPtr log_omega(const TermPtr& q) {
  const Part& p = q->parts()[0];
  switch (p.kind) {
    case PartKind::One:
      return zero();
    case PartKind::HExp:
      // e^c(d) = w^{e^{-1+c}(d)}
      return hyperexp(left_sub(one(), p.a), p.b);
    case PartKind::Omega:
    case PartKind::Psi:
      return q;
  }
  return zero();
}

TermPtr drop_last_part(const TermPtr& t) {
  std::vector<Part> parts(t->parts().begin(), t->parts().end() - 1);
  return std::make_shared<const Term>(std::move(parts));
}

TermPtr last_part(const TermPtr& t) {
  return std::make_shared<const Term>(std::vector<Part>{t->parts().back()});
}

}  // namespace

Worm worm_of(const TermPtr& xi) {
  if (xi->is_zero()) return top();
  auto [alpha, beta] = hexp_normal_form(xi);
  if (beta->is_one()) {
    Worm w;
    w.entries.push_back(alpha);
    return w;
  }
  // beta = gamma + w^delta, peeling the final summand
  TermPtr gamma = drop_last_part(beta);
  TermPtr delta = log_omega(last_part(beta));
  Worm u = worm_of(gamma);
  Worm v = worm_of(delta);
  return promote(alpha, concat0(promote(one(), v), u));
}

Worm conj_worm(const Worm& u, const Worm& v) {
  if (is_top(u)) return v;
  if (is_top(v)) return u;
  TermPtr mu = min_entry(u);
  TermPtr mv = min_entry(v);
  TermPtr lambda = lt(mu, mv) ? mu : mv;
  Worm bu = body(lambda, u);
  Worm bv = body(lambda, v);
  const Worm& b = cmp_worm(bu, bv) == WormCmp::Above ? bu : bv;
  Worm h = conj_worm(head(lambda, u), head(lambda, v));
  return concat(h, cons(lambda, b));
}

std::string print_worm(const Worm& w) {
  std::ostringstream os;
  for (const TermPtr& e : w.entries) os << '<' << render(e) << '>';
  os << 'T';
  return os.str();
}

Worm parse_worm(const std::string& s) {
  Worm w;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  for (;;) {
    skip_ws();
    if (i >= s.size()) throw ParseError("expected worm", i);
    if (s[i] == 'T') {
      ++i;
      skip_ws();
      if (i < s.size()) throw ParseError("trailing input", i);
      return w;
    }
    if (s[i] != '<') throw ParseError("expected '<' or 'T'", i);
    size_t open = ++i;
    size_t close = s.find('>', i);
    if (close == std::string::npos)
      throw ParseError("unterminated entry", open);
    try {
      w.entries.push_back(parse_ordinal(s.substr(open, close - open)));
    } catch (const ParseError& e) {
      throw ParseError("bad entry: " + std::string(e.what()), open + e.pos);
    }
    i = close + 1;
  }
}

}  // namespace wormlab
