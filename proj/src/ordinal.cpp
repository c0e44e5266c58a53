#include "wormlab/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wormlab {

ParseError::ParseError(const std::string& msg, size_t at)
    : Error(msg + " at position " + std::to_string(at)), pos(at) {}

namespace {

size_t part_size(const Part& p) {
  switch (p.kind) {
    case PartKind::One:
      return 1;
    case PartKind::HExp:
    case PartKind::Psi:
      return 1 + p.a->size() + p.b->size();
    case PartKind::Omega:
      return 1 + p.a->size();
  }
  return 1;
}

TermPtr make(std::vector<Part> parts) {
  return std::make_shared<const Term>(std::move(parts));
}

TermPtr part_term(const Part& p) { return make({p}); }

TermPtr drop_leading(const TermPtr& t) {
  return make(std::vector<Part>(t->parts().begin() + 1, t->parts().end()));
}

Cmp cmp_part(const Part& p, const Part& q);

Cmp invert(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return Cmp::Equal;
}

bool atom_kind(PartKind k) {
  return k == PartKind::Omega || k == PartKind::Psi;
}

// e^c(d) against an additively indecomposable e-fixed point P:
// below it exactly when both components are.
Cmp cmp_hexp_vs_fixed(const Part& h, const TermPtr& P) {
  if (lt(h.a, P) && lt(h.b, P)) return Cmp::Less;
  return Cmp::Greater;
}

Cmp cmp_part(const Part& p, const Part& q) {
  if (p.kind == PartKind::One || q.kind == PartKind::One) {
    if (p.kind == q.kind) return Cmp::Equal;
    return p.kind == PartKind::One ? Cmp::Less : Cmp::Greater;
  }
  if (p.kind == PartKind::HExp && q.kind == PartKind::HExp) {
    // Compare e^{a1}(b1) with e^{a2}(b2) by stripping the common
    // exponent prefix: for a1 <= a2 this is b1 vs e^{-a1+a2}(b2).
    Cmp ce = cmp(p.a, q.a);
    if (ce == Cmp::Greater) return invert(cmp_part(q, p));
    TermPtr c = left_sub(p.a, q.a);
    return cmp(p.b, hyperexp(c, q.b));
  }
  if (p.kind == PartKind::HExp && atom_kind(q.kind))
    return cmp_hexp_vs_fixed(p, part_term(q));
  if (atom_kind(p.kind) && q.kind == PartKind::HExp)
    return invert(cmp_hexp_vs_fixed(q, part_term(p)));
  if (p.kind == PartKind::Omega && q.kind == PartKind::Omega)
    return cmp(p.a, q.a);
  if (p.kind == PartKind::Omega && q.kind == PartKind::Psi) {
    // Omega_n vs psi_u(x): the collapse value lies in [Omega_u, Omega_{u+1}).
    return lt(p.a, q.a) || eq(p.a, q.a) ? Cmp::Less : Cmp::Greater;
  }
  if (p.kind == PartKind::Psi && q.kind == PartKind::Omega)
    return invert(cmp_part(q, p));
  // Psi vs Psi
  Cmp cl = cmp(p.a, q.a);
  if (cl != Cmp::Equal) return cl;
  return cmp(p.b, q.b);
}

TermPtr hexp_base_one(const TermPtr& a) {
  // e^a(1); a > 0
  if (a->is_indecomposable() && atom_kind(a->parts()[0].kind)) return a;
  return make({Part{PartKind::HExp, a, one()}});
}

void scan_admissible(const TermPtr& t, const TermPtr& level, const TermPtr& arg,
                     bool& ok) {
  if (!ok) return;
  for (const Part& p : t->parts()) {
    switch (p.kind) {
      case PartKind::One:
        break;
      case PartKind::HExp:
        scan_admissible(p.a, level, arg, ok);
        scan_admissible(p.b, level, arg, ok);
        break;
      case PartKind::Omega:
        if (!lt(p.a, level) && arg->is_zero()) ok = false;
        scan_admissible(p.a, level, arg, ok);
        break;
      case PartKind::Psi:
        if (!lt(p.a, level) && !lt(p.b, arg)) ok = false;
        scan_admissible(p.a, level, arg, ok);
        scan_admissible(p.b, level, arg, ok);
        break;
    }
  }
}

}  // namespace

Term::Term(std::vector<Part> parts) : parts_(std::move(parts)) {
  size_ = 0;
  for (const Part& p : parts_) size_ += part_size(p);
  if (size_ == 0) size_ = 1;
}

TermPtr zero() {
  static const TermPtr t = make({});
  return t;
}

TermPtr one() {
  static const TermPtr t = make({Part{PartKind::One, nullptr, nullptr}});
  return t;
}

TermPtr omega() {
  static const TermPtr t = make({Part{PartKind::HExp, one(), one()}});
  return t;
}

TermPtr nat(unsigned n) {
  std::vector<Part> parts(n, Part{PartKind::One, nullptr, nullptr});
  return make(std::move(parts));
}

Cmp cmp(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return Cmp::Equal;
  const auto& pa = a->parts();
  const auto& pb = b->parts();
  size_t n = std::min(pa.size(), pb.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp c = cmp_part(pa[i], pb[i]);
    if (c != Cmp::Equal) return c;
  }
  if (pa.size() == pb.size()) return Cmp::Equal;
  return pa.size() < pb.size() ? Cmp::Less : Cmp::Greater;
}

bool eq(const TermPtr& a, const TermPtr& b) { return cmp(a, b) == Cmp::Equal; }
bool lt(const TermPtr& a, const TermPtr& b) { return cmp(a, b) == Cmp::Less; }
bool leq(const TermPtr& a, const TermPtr& b) { return cmp(a, b) != Cmp::Greater; }

TermPtr add(const TermPtr& a, const TermPtr& b) {
  if (b->is_zero()) return a;
  if (a->is_zero()) return b;
  const Part& lead = b->parts()[0];
  std::vector<Part> out;
  for (const Part& p : a->parts()) {
    if (cmp_part(p, lead) == Cmp::Less) break;
    out.push_back(p);
  }
  out.insert(out.end(), b->parts().begin(), b->parts().end());
  return make(std::move(out));
}

TermPtr left_sub(const TermPtr& a, const TermPtr& b) {
  const auto& pa = a->parts();
  const auto& pb = b->parts();
  size_t i = 0;
  while (i < pa.size() && i < pb.size() &&
         cmp_part(pa[i], pb[i]) == Cmp::Equal)
    ++i;
  if (i == pa.size())
    return make(std::vector<Part>(pb.begin() + i, pb.end()));
  if (i < pb.size() && cmp_part(pa[i], pb[i]) == Cmp::Less)
    return make(std::vector<Part>(pb.begin() + i, pb.end()));
  throw DomainError("left_sub requires " + render(a) + " <= " + render(b));
}

TermPtr hyperexp(const TermPtr& a, const TermPtr& b) {
  if (b->is_zero()) return zero();
  if (a->is_zero()) return b;
  if (b->is_indecomposable()) {
    const Part& p = b->parts()[0];
    switch (p.kind) {
      case PartKind::One:
        return hexp_base_one(a);
      case PartKind::HExp:
        return hyperexp(add(a, p.a), p.b);
      case PartKind::Omega:
      case PartKind::Psi:
        return hexp_base_one(add(a, part_term(p)));
    }
  }
  return make({Part{PartKind::HExp, a, b}});
}

TermPtr omega_pow(const TermPtr& x) {
  if (x->is_zero()) return one();
  return hyperexp(one(), x);
}

std::pair<TermPtr, TermPtr> hexp_normal_form(const TermPtr& x) {
  if (x->is_zero())
    throw DomainError("hexp_normal_form requires a positive term");
  if (!x->is_indecomposable()) return {zero(), x};
  const Part& p = x->parts()[0];
  switch (p.kind) {
    case PartKind::One:
      return {zero(), one()};
    case PartKind::HExp:
      return {p.a, p.b};
    case PartKind::Omega:
    case PartKind::Psi:
      return {x, one()};
  }
  return {zero(), x};
}

TermPtr aleph(const TermPtr& idx) {
  if (idx->is_zero()) return zero();
  return make({Part{PartKind::Omega, idx, nullptr}});
}

bool psi_arg_admissible(const TermPtr& level, const TermPtr& arg) {
  bool ok = true;
  scan_admissible(arg, level, arg, ok);
  return ok;
}

TermPtr psi_term(const TermPtr& level, const TermPtr& arg) {
  if (arg->is_zero() && !level->is_zero()) return aleph(level);
  if (!psi_arg_admissible(level, arg))
    throw DomainError("inadmissible collapse argument p[" + render(level) +
                      "](" + render(arg) + ")");
  return make({Part{PartKind::Psi, level, arg}});
}

TermPtr iota_level(const TermPtr& a) {
  if (a->is_zero()) return zero();
  const Part& p = a->parts()[0];
  switch (p.kind) {
    case PartKind::One:
      return zero();
    case PartKind::HExp: {
      TermPtr ia = iota_level(p.a);
      TermPtr ib = iota_level(p.b);
      return lt(ia, ib) ? ib : ia;
    }
    case PartKind::Omega:
    case PartKind::Psi:
      return p.a;
  }
  return zero();
}

std::pair<TermPtr, TermPtr> cardinal_index(const TermPtr& a) {
  TermPtr iota = iota_level(a);
  return {iota, left_sub(aleph(iota), a)};
}

bool is_countable(const TermPtr& a) { return iota_level(a)->is_zero(); }

TermPtr veblen(const TermPtr& sub, const TermPtr& arg) {
  if (sub->is_zero()) return omega_pow(arg);
  return hyperexp(omega_pow(sub), add(one(), arg));
}

namespace {

void render_term(std::ostream& os, const TermPtr& t, bool sugar);

void render_part(std::ostream& os, const Part& p, bool sugar) {
  switch (p.kind) {
    case PartKind::One:
      os << '1';
      break;
    case PartKind::HExp:
      if (sugar && p.a->is_one() && p.b->is_one()) {
        os << 'w';
      } else {
        os << "e(";
        render_term(os, p.a, sugar);
        os << ',';
        render_term(os, p.b, sugar);
        os << ')';
      }
      break;
    case PartKind::Omega:
      os << "O[";
      render_term(os, p.a, sugar);
      os << ']';
      break;
    case PartKind::Psi:
      os << "p[";
      render_term(os, p.a, sugar);
      os << "](";
      render_term(os, p.b, sugar);
      os << ')';
      break;
  }
}

void render_term(std::ostream& os, const TermPtr& t, bool sugar) {
  if (t->is_zero()) {
    os << '0';
    return;
  }
  bool first = true;
  for (const Part& p : t->parts()) {
    if (!first) os << '+';
    first = false;
    render_part(os, p, sugar);
  }
}

}  // namespace

std::string render(const TermPtr& a) {
  std::ostringstream os;
  render_term(os, a, true);
  return os.str();
}

std::string render_explicit(const TermPtr& a) {
  std::ostringstream os;
  render_term(os, a, false);
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected ") + what, i);
    ++i;
  }
};

TermPtr parse_expr(Cursor& c);

TermPtr parse_atom(Cursor& c) {
  char ch = c.peek();
  switch (ch) {
    case '0':
      ++c.i;
      return zero();
    case '1':
      ++c.i;
      return one();
    case 'w':
      ++c.i;
      return omega();
    case 'e': {
      ++c.i;
      c.expect('(', "'('");
      TermPtr x = parse_expr(c);
      c.expect(',', "','");
      TermPtr y = parse_expr(c);
      c.expect(')', "')'");
      return hyperexp(x, y);
    }
    case 'O': {
      ++c.i;
      c.expect('[', "'['");
      size_t at = c.i;
      TermPtr idx = parse_expr(c);
      c.expect(']', "']'");
      if (idx->is_zero())
        throw ParseError("cardinal index must be positive", at);
      return aleph(idx);
    }
    case 'p': {
      ++c.i;
      c.expect('[', "'['");
      TermPtr lvl = parse_expr(c);
      c.expect(']', "']'");
      c.expect('(', "'('");
      TermPtr arg = parse_expr(c);
      c.expect(')', "')'");
      return psi_term(lvl, arg);
    }
    default:
      throw ParseError("expected ordinal term", c.i);
  }
}

TermPtr parse_expr(Cursor& c) {
  TermPtr t = parse_atom(c);
  while (c.peek() == '+') {
    ++c.i;
    t = add(t, parse_atom(c));
  }
  return t;
}

}  // namespace

TermPtr parse_ordinal(const std::string& s) {
  Cursor c{s};
  TermPtr t = parse_expr(c);
  if (!c.at_end()) throw ParseError("trailing input", c.i);
  return t;
}

namespace {

void check_veblen_domain(const TermPtr& t) {
  for (const Part& p : t->parts()) {
    switch (p.kind) {
      case PartKind::One:
        break;
      case PartKind::HExp:
        check_veblen_domain(p.a);
        check_veblen_domain(p.b);
        break;
      case PartKind::Omega:
      case PartKind::Psi:
        throw DomainError("no Veblen form below Gamma_0 for " + render(t));
    }
  }
}

std::string veblen_str(const TermPtr& t);

std::string veblen_part(const Part& p) {
  if (p.kind == PartKind::One) return "1";
  // p is e^a(b); peel the leading part q of the exponent a, so the
  // value is e^q(inner) with inner = e^{a minus q}(b).
  const Part& q = p.a->parts()[0];
  TermPtr inner = hyperexp(drop_leading(p.a), p.b);
  if (q.kind == PartKind::One) return "phi0(" + veblen_str(inner) + ")";
  // q = w^gamma with gamma = e^{-1+c}(d) for q = e^c(d)
  TermPtr gamma = hyperexp(left_sub(one(), q.a), q.b);
  TermPtr beta = left_sub(one(), inner);
  return "phi" + veblen_str(gamma) + "(" + veblen_str(beta) + ")";
}

std::string veblen_str(const TermPtr& t) {
  if (t->is_zero()) return "0";
  std::string out;
  for (const Part& p : t->parts()) {
    if (!out.empty()) out += '+';
    out += veblen_part(p);
  }
  return out;
}

TermPtr parse_veblen_expr(Cursor& c);

TermPtr parse_veblen_atom(Cursor& c) {
  char ch = c.peek();
  if (ch == '0') {
    ++c.i;
    return zero();
  }
  if (ch == '1') {
    ++c.i;
    return one();
  }
  if (ch == 'p') {
    if (c.s.compare(c.i, 3, "phi") != 0)
      throw ParseError("expected 'phi'", c.i);
    c.i += 3;
    TermPtr sub = parse_veblen_expr(c);
    c.expect('(', "'('");
    TermPtr arg = parse_veblen_expr(c);
    c.expect(')', "')'");
    return veblen(sub, arg);
  }
  throw ParseError("expected Veblen term", c.i);
}

TermPtr parse_veblen_expr(Cursor& c) {
  TermPtr t = parse_veblen_atom(c);
  while (c.peek() == '+') {
    ++c.i;
    t = add(t, parse_veblen_atom(c));
  }
  return t;
}

}  // namespace

std::string to_veblen(const TermPtr& a) {
  check_veblen_domain(a);
  return veblen_str(a);
}

TermPtr from_veblen(const std::string& s) {
  Cursor c{s};
  TermPtr t = parse_veblen_expr(c);
  if (!c.at_end()) throw ParseError("trailing input", c.i);
  return t;
}

}  // namespace wormlab
