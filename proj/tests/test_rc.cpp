#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "wormlab/collapse.hpp"
#include "wormlab/ordinal.hpp"
#include "wormlab/rc.hpp"
#include "wormlab/worm.hpp"

using namespace wormlab;

static Worm W(const std::string& s) { return parse_worm(s); }

static const std::vector<Worm>& suite40() {
  static std::vector<Worm> v = enumerate_worms({zero(), one(), nat(2)}, 3);
  return v;
}

TEST_CASE("formulas print and convert back to worms") {
  CHECK(print_formula(rc_top()) == "T");
  CHECK(print_formula(worm_formula(W("<1><0>T"))) == "<1><0>T");
  CHECK(print_formula(rc_conj(worm_formula(W("<1>T")), worm_formula(W("<0>T")))) ==
        "(<1>T&<0>T)");
  auto f = rc_conj(worm_formula(W("<1>T")), worm_formula(W("<0>T")));
  CHECK(print_worm(formula_to_worm(f)) == "<1><0>T");
  CHECK(print_worm(formula_to_worm(rc_diamond(nat(2), f))) == "<1+1><1><0>T");
  for (const auto& w : suite40())
    CHECK(worm_eq_syntactic(formula_to_worm(worm_formula(w)), w));
}

TEST_CASE("frames reverse the worm and pad with a floor label") {
  RCFrame fr = frame_of(W("<1+1><0>T"));
  CHECK(fr.points() == 3);
  CHECK(render(fr.label_at(0)) == "0");
  CHECK(render(fr.label_at(1)) == "1+1");
  CHECK(render(fr.label_at(2)) == "0");
  CHECK(print_worm(fr.source()) == "<1+1><0>T");
  RCFrame fr2 = frame_of(top());
  CHECK(fr2.points() == 2);
}

TEST_CASE("accessibility scans labels between points") {
  RCFrame fr = frame_of(W("<0>T"));
  CHECK(fr.points() == 2);
  CHECK(fr.accessible(zero(), 1, 0));
  CHECK(!fr.accessible(zero(), 0, 1));
  CHECK(model_check(fr, 1, worm_formula(W("<0>T"))));
  CHECK(!model_check(fr, 0, worm_formula(W("<0>T"))));
  RCFrame fb = frame_of(W("<1><0><1>T"));
  for (size_t x = 0; x < fb.points(); ++x)
    for (size_t y = 0; y < x; ++y) {
      bool want = true;
      for (size_t i = y; i < x; ++i)
        if (lt(fb.label_at(i), one())) want = false;
      CHECK(fb.accessible(one(), x, y) == want);
    }
}

TEST_CASE("frame conditions hold across the suite") {
  std::vector<TermPtr> stages = {zero(), one(), nat(2), nat(3)};
  for (const auto& w : suite40()) {
    RCFrame f = frame_of(w);
    size_t n = f.points();
    for (const auto& eta : stages)
      for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
          if (!f.accessible(eta, x, y)) continue;
          for (size_t z = 0; z < n; ++z)
            if (f.accessible(eta, y, z)) CHECK(f.accessible(eta, x, z));
        }
    for (size_t si = 0; si + 1 < stages.size(); ++si)
      for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
          if (f.accessible(stages[si + 1], x, y))
            CHECK(f.accessible(stages[si], x, y));
  }
}

TEST_CASE("each frame satisfies its own worm at the right point") {
  CHECK(frame_sat_suite(W("<1><0><1>T")).pass);
  CHECK(frame_sat_suite(W("<1><0><1>T")).report == "PASS");
  CHECK(frame_sat_suite(top()).pass);
  for (const auto& w : suite40()) CHECK(frame_sat_suite(w).pass);
}

TEST_CASE("refutation agrees with the worm order") {
  CHECK(refute_sequent(W("<1>T"), W("<1>T")));
  CHECK(!refute_sequent(top(), W("<0>T")));
  CHECK(refute_sequent(W("<1>T"), W("<0>T")));
  std::vector<Worm> small = enumerate_worms({zero(), one()}, 3);
  for (const auto& v : small)
    for (const auto& w : small)
      CHECK(refute_sequent(v, w) == (cmp_worm(v, w) != WormCmp::Below));
}
