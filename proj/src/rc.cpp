#include "wormlab/rc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wormlab {

RCFormulaPtr rc_top() {
  static const RCFormulaPtr t = std::make_shared<const RCFormula>(
      RCFormula{RCFormula::Kind::Top, nullptr, nullptr, nullptr, nullptr});
  return t;
}

RCFormulaPtr rc_conj(const RCFormulaPtr& l, const RCFormulaPtr& r) {
  return std::make_shared<const RCFormula>(
      RCFormula{RCFormula::Kind::Conj, l, r, nullptr, nullptr});
}

RCFormulaPtr rc_diamond(const TermPtr& label, const RCFormulaPtr& body) {
  return std::make_shared<const RCFormula>(
      RCFormula{RCFormula::Kind::Diamond, nullptr, nullptr, label, body});
}

RCFormulaPtr worm_formula(const Worm& w) {
  RCFormulaPtr f = rc_top();
  for (auto it = w.entries.rbegin(); it != w.entries.rend(); ++it)
    f = rc_diamond(*it, f);
  return f;
}

std::string print_formula(const RCFormulaPtr& f) {
  switch (f->kind) {
    case RCFormula::Kind::Top:
      return "T";
    case RCFormula::Kind::Conj:
      return "(" + print_formula(f->left) + "&" + print_formula(f->right) +
             ")";
    case RCFormula::Kind::Diamond:
      return "<" + render(f->label) + ">" + print_formula(f->body);
  }
  return "T";
}

Worm formula_to_worm(const RCFormulaPtr& f) {
  switch (f->kind) {
    case RCFormula::Kind::Top:
      return top();
    case RCFormula::Kind::Conj:
      return conj_worm(formula_to_worm(f->left), formula_to_worm(f->right));
    case RCFormula::Kind::Diamond:
      return cons(f->label, formula_to_worm(f->body));
  }
  return top();
}

RCFrame::RCFrame(const Worm& w) : src_(w) {
  lambda_.assign(w.entries.rbegin(), w.entries.rend());
  lambda_.push_back(zero());
  points_ = std::max<size_t>(w.entries.size() + 1, 2);

  std::vector<TermPtr> labels(lambda_);
  std::sort(labels.begin(), labels.end(), TermLess{});
  labels.erase(std::unique(labels.begin(), labels.end(),
                           [](const TermPtr& a, const TermPtr& b) {
                             return eq(a, b);
                           }),
               labels.end());

  size_t n = points_;
  auto acc = [&](const TermPtr& eta, size_t x, size_t y) {
    return accessible(eta, x, y);
  };
  for (const TermPtr& eta : labels)
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        for (size_t z = 0; z < n; ++z)
          if (acc(eta, x, y) && acc(eta, y, z) && !acc(eta, x, z))
            throw Error("frame not transitive at stage " + render(eta));
  for (const TermPtr& mu : labels)
    for (const TermPtr& eta : labels) {
      if (!lt(mu, eta)) continue;
      for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
          if (acc(eta, x, y) && !acc(mu, x, y))
            throw Error("stage " + render(eta) + " not included in stage " +
                        render(mu));
          for (size_t z = 0; z < n; ++z)
            if (acc(mu, z, x) && acc(eta, z, y) && !acc(mu, y, x))
              throw Error("stage mixing condition fails between " +
                          render(mu) + " and " + render(eta));
        }
    }
}

TermPtr RCFrame::label_at(size_t i) const {
  return i < lambda_.size() ? lambda_[i] : zero();
}

bool RCFrame::accessible(const TermPtr& eta, size_t x, size_t y) const {
  if (x > y) {
    for (size_t i = y; i < x; ++i)
      if (lt(label_at(i), eta)) return false;
    return true;
  }
  for (size_t i = x; i <= y; ++i)
    if (!lt(eta, label_at(i))) return false;
  return true;
}

RCFrame frame_of(const Worm& w) { return RCFrame(w); }

bool model_check(const RCFrame& f, size_t point, const RCFormulaPtr& phi) {
  switch (phi->kind) {
    case RCFormula::Kind::Top:
      return true;
    case RCFormula::Kind::Conj:
      return model_check(f, point, phi->left) &&
             model_check(f, point, phi->right);
    case RCFormula::Kind::Diamond:
      for (size_t y = 0; y < f.points(); ++y)
        if (f.accessible(phi->label, point, y) &&
            model_check(f, y, phi->body))
          return true;
      return false;
  }
  return false;
}

namespace {

Worm suffix_worm(const Worm& w, size_t k) {
  Worm out;
  out.entries.assign(w.entries.end() - k, w.entries.end());
  return out;
}

}  // namespace

SuiteResult frame_sat_suite(const Worm& w) {
  RCFrame f(w);
  size_t len = w.entries.size();
  std::ostringstream os;
  for (size_t i = 0; i <= len; ++i) {
    RCFormulaPtr phi = worm_formula(suffix_worm(w, i));
    if (!model_check(f, i, phi)) {
      os << "FAIL worm=" << print_worm(w) << " i=" << i << " x=" << i;
      return {false, os.str()};
    }
    for (size_t x = 0; x < i; ++x)
      if (model_check(f, x, phi)) {
        os << "FAIL worm=" << print_worm(w) << " i=" << i << " x=" << x;
        return {false, os.str()};
      }
  }
  return {true, "PASS"};
}

bool refute_sequent(const Worm& v, const Worm& w) {
  std::vector<Worm> pool = {cons(zero(), v), cons(zero(), w), concat(w, v),
                            concat(v, w),    concat0(w, v),   concat0(v, w),
                            v,               w};
  RCFormulaPtr goal = worm_formula(w);
  RCFormulaPtr avoid = rc_diamond(zero(), worm_formula(v));
  for (const Worm& u : pool) {
    RCFrame f(u);
    for (size_t x = 0; x < f.points(); ++x)
      if (model_check(f, x, goal) && !model_check(f, x, avoid)) return true;
  }
  return false;
}

}  // namespace wormlab
