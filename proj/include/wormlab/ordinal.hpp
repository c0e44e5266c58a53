#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wormlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input rejected because it lies outside an operation's domain
// (e.g. subtracting a larger term from a smaller one).
struct DomainError : Error {
  using Error::Error;
};

// Input is well formed but exceeds the supported range of the
// collapsing machinery.
struct RangeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  size_t pos;
  ParseError(const std::string& msg, size_t at);
};

enum class Cmp { Less, Equal, Greater };

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class PartKind { One, HExp, Omega, Psi };

// One additively indecomposable summand. Fields by kind:
//   One:   no fields
//   HExp:  a = exponent (> 0), b = base (One or a sum of >= 2 parts)
//   Omega: a = cardinal index (> 0)
//   Psi:   a = collapse level, b = argument
struct Part {
  PartKind kind;
  TermPtr a;
  TermPtr b;
};

// Immutable ordinal term in normal form: a (possibly empty) sum of
// indecomposable parts in non-increasing order. Empty sum = 0.
// Terms are canonical by construction: build them with the factory
// functions below, never with raw part lists. Structural equality of
// canonical terms coincides with cmp() == Equal.
class Term {
public:
  explicit Term(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool is_one() const {
    return parts_.size() == 1 && parts_[0].kind == PartKind::One;
  }
  bool is_indecomposable() const { return parts_.size() == 1; }
  size_t size() const { return size_; }  // node count, min 1

private:
  std::vector<Part> parts_;
  size_t size_;
};

TermPtr zero();
TermPtr one();
TermPtr omega();             // e(1,1)
TermPtr nat(unsigned n);     // 1+1+...+1

Cmp cmp(const TermPtr& a, const TermPtr& b);
bool eq(const TermPtr& a, const TermPtr& b);
bool lt(const TermPtr& a, const TermPtr& b);
bool leq(const TermPtr& a, const TermPtr& b);

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return cmp(a, b) == Cmp::Less;
  }
};

TermPtr add(const TermPtr& a, const TermPtr& b);

// -a+b: the unique x with a+x = b. Requires a <= b, else DomainError.
TermPtr left_sub(const TermPtr& a, const TermPtr& b);

// Iterated base-omega exponential e^a(b).
TermPtr hyperexp(const TermPtr& a, const TermPtr& b);

TermPtr omega_pow(const TermPtr& x);  // w^x = e(1,x) for x > 0

// Unique (a, b) with x = e^a(b) and b either One or decomposable.
// Requires x > 0.
std::pair<TermPtr, TermPtr> hexp_normal_form(const TermPtr& x);

// Omega_idx. aleph(zero()) is 0 by convention.
TermPtr aleph(const TermPtr& idx);

// Canonical collapse term psi_level(arg). Collapses psi_v(0) to
// Omega_v for v > 0; rejects inadmissible arguments with DomainError.
TermPtr psi_term(const TermPtr& level, const TermPtr& arg);
bool psi_arg_admissible(const TermPtr& level, const TermPtr& arg);

// Greatest iota with Omega_iota <= a, plus the remainder -Omega_iota+a.
std::pair<TermPtr, TermPtr> cardinal_index(const TermPtr& a);
TermPtr iota_level(const TermPtr& a);
bool is_countable(const TermPtr& a);

// Binary Veblen function phi_sub(arg).
TermPtr veblen(const TermPtr& sub, const TermPtr& arg);

std::string render(const TermPtr& a);           // canonical, w sugar
std::string render_explicit(const TermPtr& a);  // no w sugar
std::string to_veblen(const TermPtr& a);        // countable a below Gamma_0
TermPtr from_veblen(const std::string& s);
TermPtr parse_ordinal(const std::string& s);

}  // namespace wormlab
