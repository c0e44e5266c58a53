#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "oracle_cnf.hpp"
#include "wormlab/collapse.hpp"
#include "wormlab/ordinal.hpp"

using namespace wormlab;

static TermPtr P(const std::string& s) { return parse_ordinal(s); }

// Size-bounded canonical terms, plus the countable fragment the reference
// model can represent (paired with its model value).
static const std::vector<TermPtr>& pool() {
  static std::vector<TermPtr> v = enumerate_terms(6);
  return v;
}

static const std::vector<std::pair<TermPtr, cnf::O>>& cnf_pool() {
  static std::vector<std::pair<TermPtr, cnf::O>> v = [] {
    std::vector<std::pair<TermPtr, cnf::O>> r;
    for (const auto& t : pool())
      if (auto o = cnf::of_term(t)) r.emplace_back(t, *o);
    return r;
  }();
  return v;
}

TEST_CASE("rendering round trips") {
  CHECK(render(zero()) == "0");
  CHECK(render(one()) == "1");
  CHECK(render(omega()) == "w");
  CHECK(render(nat(3)) == "1+1+1");
  CHECK(render(P("w+1")) == "w+1");
  CHECK(render(P("e(w,1)")) == "e(w,1)");
  CHECK(render(P("O[1+1]")) == "O[1+1]");
  CHECK(render(P("p[0](0)")) == "p[0](0)");
  CHECK(render_explicit(omega()) == "e(1,1)");
  CHECK(render_explicit(P("w+1")) == "e(1,1)+1");
  for (const auto& t : pool()) {
    CHECK(eq(parse_ordinal(render(t)), t));
    CHECK(eq(parse_ordinal(render_explicit(t)), t));
  }
}

TEST_CASE("parser rejects with positions") {
  auto pos_of = [](const std::string& s) {
    try {
      parse_ordinal(s);
    } catch (const ParseError& e) {
      return (int)e.pos;
    }
    return -1;
  };
  CHECK(pos_of("2") == 0);
  CHECK(pos_of("") == 0);
  CHECK(pos_of("w+") == 2);
  CHECK(pos_of("e(w)") == 3);
  CHECK(pos_of("w w") == 2);
  CHECK(pos_of("O[0]") == 2);
  CHECK_THROWS_WITH_AS(parse_ordinal("O[0]"),
                       "cardinal index must be positive at position 2",
                       ParseError);
}

TEST_CASE("comparison pins and order laws") {
  CHECK(cmp(omega(), P("e(1+1,1)")) == Cmp::Less);
  CHECK(cmp(P("p[0](0)"), P("O[1]")) == Cmp::Less);
  CHECK(cmp(P("O[1]"), P("p[1](0)")) == Cmp::Equal);
  for (const auto& t : pool()) CHECK(cmp(t, t) == Cmp::Equal);
  const auto& cp = cnf_pool();
  for (const auto& [a, oa] : cp)
    for (const auto& [b, ob] : cp) {
      int want = cnf::cmp(oa, ob);
      Cmp got = cmp(a, b);
      CHECK((got == Cmp::Less ? -1 : got == Cmp::Equal ? 0 : 1) == want);
    }
}

TEST_CASE("addition absorbs against the reference model") {
  CHECK(render(add(one(), omega())) == "w");
  CHECK(render(add(omega(), one())) == "w+1");
  const auto& cp = cnf_pool();
  for (const auto& [a, oa] : cp)
    for (const auto& [b, ob] : cp) {
      auto got = cnf::of_term(add(a, b));
      REQUIRE(got.has_value());
      CHECK(*got == cnf::add(oa, ob));
    }
  for (size_t i = 0; i < cp.size(); i += 7)
    for (size_t j = 0; j < cp.size(); j += 11)
      for (size_t k = 0; k < cp.size(); k += 13) {
        const auto &a = cp[i].first, &b = cp[j].first, &c = cp[k].first;
        CHECK(eq(add(add(a, b), c), add(a, add(b, c))));
      }
}

TEST_CASE("left subtraction inverts addition") {
  CHECK(render(left_sub(one(), omega())) == "w");
  CHECK(render(left_sub(omega(), P("w+w"))) == "w");
  CHECK(render(left_sub(P("e(w,1)"), P("e(w,1)"))) == "0");
  CHECK_THROWS_AS(left_sub(omega(), one()), DomainError);
  const auto& cp = cnf_pool();
  for (const auto& [a, oa] : cp)
    for (const auto& [b, ob] : cp) {
      auto want = cnf::lsub(oa, ob);
      if (!want) {
        CHECK_THROWS_AS(left_sub(a, b), DomainError);
        continue;
      }
      TermPtr d = left_sub(a, b);
      CHECK(*cnf::of_term(d) == *want);
      CHECK(eq(add(a, d), b));
    }
}

TEST_CASE("hyperexponential pins") {
  CHECK(render(hyperexp(zero(), P("w+1"))) == "w+1");
  CHECK(render(hyperexp(omega(), zero())) == "0");
  CHECK(render(hyperexp(one(), one())) == "w");
  CHECK(render(hyperexp(omega(), one())) == "e(w,1)");
  CHECK(render(hyperexp(omega(), nat(2))) == "e(w,1+1)");
  CHECK(eq(omega_pow(zero()), one()));
  CHECK(eq(omega_pow(one()), omega()));
}

TEST_CASE("hyperexponential matches the reference model on finite stages") {
  const auto& cp = cnf_pool();
  for (unsigned n = 0; n <= 3; ++n)
    for (const auto& [b, ob] : cp) {
      auto got = cnf::of_term(hyperexp(nat(n), b));
      REQUIRE(got.has_value());
      CHECK(*got == cnf::hexpn(n, ob));
    }
}

TEST_CASE("hyperexponential composition and monotonicity") {
  CHECK(cmp(hyperexp(one(), hyperexp(one(), one())), hyperexp(nat(2), one())) ==
        Cmp::Equal);
  std::vector<TermPtr> exps = {zero(), one(), nat(2), omega(), P("w+1"),
                               P("e(w,1)"), P("O[1]")};
  std::vector<TermPtr> args = {one(), nat(2), omega(), P("w+1"), P("e(w,1)")};
  for (const auto& a : exps)
    for (const auto& b : exps)
      for (const auto& x : args)
        CHECK(eq(hyperexp(a, hyperexp(b, x)), hyperexp(add(a, b), x)));
  for (const auto& a : exps) {
    for (size_t i = 0; i + 1 < args.size(); ++i)
      CHECK(lt(hyperexp(a, args[i]), hyperexp(a, args[i + 1])));
  }
}

TEST_CASE("hyperexponential normal form splits and recombines") {
  auto [a0, b0] = hexp_normal_form(P("e(w,1)"));
  CHECK(render(a0) == "w");
  CHECK(render(b0) == "1");
  auto [a1, b1] = hexp_normal_form(P("w+1"));
  CHECK(render(a1) == "0");
  CHECK(render(b1) == "w+1");
  auto [a2, b2] = hexp_normal_form(P("e(1+1,1)"));
  CHECK(render(a2) == "1+1");
  CHECK(render(b2) == "1");
  for (const auto& t : pool()) {
    if (t->is_zero()) continue;
    auto [a, b] = hexp_normal_form(t);
    CHECK(eq(hyperexp(a, b), t));
  }
}

TEST_CASE("veblen views") {
  CHECK(to_veblen(P("e(w,1)")) == "phi1(0)");
  CHECK(to_veblen(P("w")) == "phi0(1)");
  CHECK(render(from_veblen("phi1(0)")) == "e(w,1)");
  CHECK(eq(veblen(zero(), zero()), one()));
  CHECK(eq(veblen(zero(), one()), omega()));
  CHECK(eq(veblen(one(), zero()), P("e(w,1)")));
  for (const auto& t : pool()) {
    if (!lt(t, P("p[0](0)"))) continue;
    CHECK(eq(from_veblen(to_veblen(t)), t));
  }
  CHECK_THROWS_WITH_AS(to_veblen(P("p[0](0)")),
                       "no Veblen form below Gamma_0 for p[0](0)", DomainError);
  CHECK_THROWS_AS(to_veblen(P("O[1]")), DomainError);
}

TEST_CASE("cardinal structure") {
  CHECK(render(aleph(zero())) == "0");
  CHECK(render(aleph(one())) == "O[1]");
  CHECK(render(aleph(nat(2))) == "O[1+1]");
  auto [i0, d0] = cardinal_index(P("w"));
  CHECK(render(i0) == "0");
  CHECK(render(d0) == "w");
  auto [i1, d1] = cardinal_index(P("O[1]+w"));
  CHECK(render(i1) == "1");
  CHECK(render(d1) == "w");
  auto [i2, d2] = cardinal_index(P("O[1+1]"));
  CHECK(render(i2) == "1+1");
  CHECK(render(d2) == "0");
  CHECK(is_countable(P("e(w,1)")));
  CHECK(is_countable(P("p[0](O[1])")));
  CHECK(!is_countable(P("O[1]")));
  CHECK(!is_countable(P("e(O[1]+1,1)")));
  for (const auto& t : pool()) {
    auto [i, d] = cardinal_index(t);
    CHECK(eq(add(aleph(i), d), t));
    CHECK(eq(iota_level(t), i));
    CHECK(lt(d, i->is_zero() ? aleph(one()) : aleph(add(i, one()))));
  }
}

TEST_CASE("collapse atoms and the admissibility guard") {
  CHECK(render(psi_term(zero(), P("O[1]"))) == "p[0](O[1])");
  CHECK(eq(psi_term(one(), zero()), P("O[1]")));
  CHECK(eq(psi_term(nat(2), zero()), P("O[1+1]")));
  CHECK(psi_arg_admissible(zero(), P("O[1]")));
  CHECK(!psi_arg_admissible(zero(), P("p[0](O[1])")));
  CHECK(!psi_arg_admissible(zero(), P("p[0](O[1])+1")));
  CHECK_THROWS_WITH_AS(psi_term(zero(), P("p[0](O[1])")),
                       "inadmissible collapse argument p[0](p[0](O[1]))",
                       DomainError);
  CHECK_THROWS_AS(psi_term(zero(), P("p[0](O[1])+1")), DomainError);
}

TEST_CASE("term enumeration is canonical and stable") {
  CHECK(enumerate_terms(1).size() == 2);
  CHECK(enumerate_terms(5).size() == 128);
  CHECK(enumerate_terms(6).size() == 486);
  size_t dupes = 0;
  for (size_t i = 0; i < pool().size(); ++i) {
    CHECK(pool()[i]->size() <= 6);
    for (size_t j = i + 1; j < pool().size(); ++j)
      if (eq(pool()[i], pool()[j])) ++dupes;
  }
  CHECK(dupes == 0);
}
