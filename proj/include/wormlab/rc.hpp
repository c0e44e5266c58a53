#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wormlab/ordinal.hpp"
#include "wormlab/worm.hpp"

namespace wormlab {

// Strictly positive modal formula: verum, conjunction, or a diamond
// labelled by an ordinal term.
struct RCFormula;
using RCFormulaPtr = std::shared_ptr<const RCFormula>;

struct RCFormula {
  enum class Kind { Top, Conj, Diamond };
  Kind kind;
  RCFormulaPtr left, right;  // Conj
  TermPtr label;             // Diamond
  RCFormulaPtr body;         // Diamond
};

RCFormulaPtr rc_top();
RCFormulaPtr rc_conj(const RCFormulaPtr& l, const RCFormulaPtr& r);
RCFormulaPtr rc_diamond(const TermPtr& label, const RCFormulaPtr& body);
RCFormulaPtr worm_formula(const Worm& w);
std::string print_formula(const RCFormulaPtr& f);

// A worm equivalent to the given formula.
Worm formula_to_worm(const RCFormulaPtr& f);

// Finite relational model canonically attached to a worm: points
// 0..n over the reversed entry list padded with a trailing 0 label.
// x sees y at stage eta either from above across labels >= eta, or
// from below across labels > eta. Construction checks the polyframe
// conditions over all occurring labels and throws Error on violation.
class RCFrame {
 public:
  explicit RCFrame(const Worm& w);

  size_t points() const { return points_; }
  TermPtr label_at(size_t i) const;
  bool accessible(const TermPtr& eta, size_t x, size_t y) const;
  const Worm& source() const { return src_; }

 private:
  Worm src_;
  std::vector<TermPtr> lambda_;
  size_t points_;
};

RCFrame frame_of(const Worm& w);
bool model_check(const RCFrame& f, size_t point, const RCFormulaPtr& phi);

struct SuiteResult {
  bool pass;
  std::string report;
};

// Each suffix of w must hold exactly from its own depth upward.
SuiteResult frame_sat_suite(const Worm& w);

// True when a countermodel in the canonical frame pool shows that
// "w implies <0>v" is not derivable, i.e. refutes v < w at stage 0.
bool refute_sequent(const Worm& v, const Worm& w);

}  // namespace wormlab
