#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wormlab/collapse.hpp"
#include "wormlab/notation.hpp"
#include "wormlab/ordinal.hpp"
#include "wormlab/rc.hpp"
#include "wormlab/spider.hpp"
#include "wormlab/worm.hpp"

using namespace wormlab;

namespace {

std::string fmt_term(const TermPtr& t, const std::string& format) {
  if (format == "veblen") return to_veblen(t);
  if (format == "psi") return render_explicit(t);
  return render(t);
}

std::string worm_cmp_name(WormCmp c) {
  switch (c) {
    case WormCmp::Below:
      return "Below";
    case WormCmp::Equiv:
      return "Equiv";
    case WormCmp::Above:
      return "Above";
  }
  return "";
}

std::string term_cmp_name(Cmp c) {
  switch (c) {
    case Cmp::Less:
      return "Less";
    case Cmp::Equal:
      return "Equal";
    case Cmp::Greater:
      return "Greater";
  }
  return "";
}

std::vector<TermPtr> parse_alphabet(const std::string& csv) {
  std::vector<TermPtr> r;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    r.push_back(parse_ordinal(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return r;
}

const std::vector<Worm>& suite121() {
  static std::vector<Worm> v = enumerate_worms({zero(), one(), nat(2)}, 4);
  return v;
}

int oracle_frames() {
  size_t bad = 0;
  for (const Worm& w : suite121()) {
    RCFrame f = frame_of(w);
    (void)f;
    if (!frame_sat_suite(w).pass) {
      std::cout << "FAIL suite worm=" << print_worm(w) << "\n";
      ++bad;
    }
  }
  std::cout << "frames: " << suite121().size() << " worms checked\n";
  for (const Worm& v : suite121())
    for (const Worm& w : suite121())
      if (refute_sequent(v, w) != (cmp_worm(v, w) != WormCmp::Below)) {
        std::cout << "FAIL refute v=" << print_worm(v)
                  << " w=" << print_worm(w) << "\n";
        ++bad;
      }
  std::cout << "refutation: " << suite121().size() * suite121().size()
            << " sequents checked\n";
  std::cout << (bad ? "oracle frames: FAIL\n" : "oracle frames: pass\n");
  return bad ? 1 : 0;
}

int oracle_dualcalc() {
  size_t bad = 0;
  const auto& s = suite121();
  for (const Worm& w : s)
    if (!eq(order_type_finite(w), order_type(w))) {
      std::cout << "FAIL dual worm=" << print_worm(w) << "\n";
      ++bad;
    }
  for (const Worm& v : s)
    for (const Worm& w : s) {
      WormCmp c = cmp_worm(v, w);
      Cmp oc = cmp(order_type(v), order_type(w));
      if ((c == WormCmp::Below) != (oc == Cmp::Less) ||
          (c == WormCmp::Equiv) != (oc == Cmp::Equal)) {
        std::cout << "FAIL monotone v=" << print_worm(v)
                  << " w=" << print_worm(w) << "\n";
        ++bad;
      }
    }
  std::cout << "dual calculi: " << s.size() << " worms, " << s.size() * s.size()
            << " pairs checked\n";
  std::cout << (bad ? "oracle dualcalc: FAIL\n" : "oracle dualcalc: pass\n");
  return bad ? 1 : 0;
}

int oracle_closure() {
  size_t bad = 0;
  Budget b = default_budget();
  for (const char* s : {"<1>T", "<O[1]>T", "<O[1]+1>T"}) {
    VerifyResult r = verify_psi_cond_equivalence(parse_worm(s), b);
    const char* name = r.status == VerifyResult::Status::Match ? "match"
                       : r.status == VerifyResult::Status::Mismatch
                           ? "MISMATCH"
                           : "inconclusive";
    std::cout << "verify " << s << ": " << name << " " << r.detail << "\n";
    if (r.status == VerifyResult::Status::Mismatch) ++bad;
  }
  Closure c0 = closure_C(zero(), zero(), b);
  Closure c1 = closure_C(zero(), one(), b);
  TermPtr g0 = psi(zero());
  if (c0.terms.count(g0) || !c1.terms.count(g0)) {
    std::cout << "FAIL stage membership for " << render(g0) << "\n";
    ++bad;
  }
  std::cout << "closure stages: |C(0)|=" << c0.terms.size()
            << " |C(1)|=" << c1.terms.size() << "\n";
  std::cout << (bad ? "oracle closure: FAIL\n" : "oracle closure: pass\n");
  return bad ? 1 : 0;
}

int selftest() {
  size_t bad = 0;
  auto check = [&bad](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++bad;
  };
  auto evw = [](const char* s) {
    return render(eval_worm_notation(parse_worm_notation(s)));
  };
  auto evs = [](const char* s) {
    return render(eval_spider_notation(parse_spider_notation(s)));
  };
  check("bracket ()", evw("()") == "1");
  check("bracket (())", evw("(())") == "w");
  check("bracket ((()))", evw("((()))") == "e(w,1)");
  check("bracket ((()))((()))", evw("((()))((()))") == "e(w,1+1)");
  check("bracket ((()))()(()(()))",
        evw("((()))()(()(()))") == "e(w+1,1)+e(w,1)");
  check("bracket ((((()))))", evw("((((()))))") == "e(e(e(w,1),1),1)");
  check("spider w", evs("[[T|T]T|T]T") == "w");
  check("spider eps0", evs("[[[T|T]T|T]T|T]T") == "e(w,1)");
  check("spider Gamma0", evs("[[T|[T|T]T]T|T]T") == "p[0](0)");
  check("otype <w>T", render(order_type(parse_worm("<w>T"))) == "e(w,1)");
  check("cmp worms", cmp_worm(parse_worm("<1><0><1>T"), parse_worm("<1><1>T")) ==
                         WormCmp::Below);
  check("veblen eps0", to_veblen(parse_ordinal("e(w,1)")) == "phi1(0)");
  check("psi(0)", render(psi(zero())) == "p[0](0)");
  check("project <O[1]>T", render(project(parse_worm("<O[1]>T"))) == "p[0](0)");
  check("project <O[1]+1>T",
        render(project(parse_worm("<O[1]+1>T"))) == "p[0](e(O[1]+1,1))");
  check("psi_eta(2,0)", render(psi_eta(nat(2), zero())) == "O[1+1]");
  check("frame suite", frame_sat_suite(parse_worm("<1><0><1>T")).pass);
  check("refute", refute_sequent(parse_worm("<1>T"), parse_worm("<0>T")));
  check("flatten", print_worm(flatten(parse_spider("<0/1>T"))) == "<O[1]>T");
  std::cout << (bad ? "selftest: FAIL\n" : "selftest: pass\n");
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic workbench for worm and spider ordinal notations"};
  app.require_subcommand(1);
  std::string format = "ascii";
  app.add_option("--format", format, "Term output rendering")
      ->check(CLI::IsMember({"ascii", "veblen", "psi"}));

  int rc = 0;

  auto* parse_cmd =
      app.add_subcommand("parse", "Parse a notation and echo its canonical form");
  std::string parse_kind = "worm";
  std::string parse_text;
  parse_cmd->add_option("--kind,-k", parse_kind, "Input grammar")
      ->check(CLI::IsMember(
          {"term", "worm", "spider", "autworm", "impworm", "autspider"}));
  parse_cmd->add_option("text", parse_text, "Input text")->required();
  parse_cmd->callback([&] {
    if (parse_kind == "term")
      std::cout << fmt_term(parse_ordinal(parse_text), format) << "\n";
    else if (parse_kind == "worm")
      std::cout << print_worm(parse_worm(parse_text)) << "\n";
    else if (parse_kind == "spider")
      std::cout << print_spider(parse_spider(parse_text)) << "\n";
    else if (parse_kind == "autworm")
      std::cout << print_worm_notation(parse_worm_notation(parse_text)) << "\n";
    else if (parse_kind == "impworm")
      std::cout << print_worm_notation(parse_worm_notation(parse_text, true))
                << "\n";
    else
      std::cout << print_spider_notation(parse_spider_notation(parse_text))
                << "\n";
  });

  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two notations");
  std::string cmp_kind = "worm";
  std::string cmp_a, cmp_b;
  cmp_cmd->add_option("--kind,-k", cmp_kind, "Input grammar")
      ->check(CLI::IsMember({"term", "worm", "spider"}));
  cmp_cmd->add_option("a", cmp_a, "Left input")->required();
  cmp_cmd->add_option("b", cmp_b, "Right input")->required();
  cmp_cmd->callback([&] {
    if (cmp_kind == "term")
      std::cout << term_cmp_name(cmp(parse_ordinal(cmp_a), parse_ordinal(cmp_b)))
                << "\n";
    else if (cmp_kind == "worm")
      std::cout << worm_cmp_name(cmp_worm(parse_worm(cmp_a), parse_worm(cmp_b)))
                << "\n";
    else
      std::cout << worm_cmp_name(
                       cmp_spider(parse_spider(cmp_a), parse_spider(cmp_b)))
                << "\n";
  });

  auto* otype_cmd =
      app.add_subcommand("otype", "Order type of a worm, spider, or notation");
  std::string otype_kind = "worm";
  std::string otype_text;
  bool otype_veblen = false;
  otype_cmd->add_option("--kind,-k", otype_kind, "Input grammar")
      ->check(CLI::IsMember({"worm", "spider", "autworm", "impworm",
                             "autspider"}));
  otype_cmd->add_option("text", otype_text, "Input text")->required();
  otype_cmd->add_flag("--veblen", otype_veblen, "Render as a Veblen value");
  otype_cmd->callback([&] {
    TermPtr t;
    if (otype_kind == "worm")
      t = order_type(parse_worm(otype_text));
    else if (otype_kind == "spider")
      t = spider_order(parse_spider(otype_text));
    else if (otype_kind == "autworm")
      t = eval_worm_notation(parse_worm_notation(otype_text));
    else if (otype_kind == "impworm")
      t = eval_worm_notation(parse_worm_notation(otype_text, true));
    else
      t = eval_spider_notation(parse_spider_notation(otype_text));
    std::cout << fmt_term(t, otype_veblen ? "veblen" : format) << "\n";
  });

  auto* norm_cmd =
      app.add_subcommand("normalize", "Canonical form of an ordinal term");
  std::string norm_text;
  bool norm_veblen = false;
  norm_cmd->add_option("term", norm_text, "Ordinal term")->required();
  norm_cmd->add_flag("--veblen", norm_veblen, "Render as a Veblen value");
  norm_cmd->callback([&] {
    std::cout << fmt_term(parse_ordinal(norm_text),
                          norm_veblen ? "veblen" : format)
              << "\n";
  });

  auto* veblen_cmd = app.add_subcommand(
      "veblen", "Convert between canonical terms and Veblen values");
  std::string veblen_text;
  veblen_cmd->add_option("value", veblen_text, "Term, or phiA(B) value")
      ->required();
  veblen_cmd->callback([&] {
    if (veblen_text.rfind("phi", 0) == 0)
      std::cout << render(from_veblen(veblen_text)) << "\n";
    else
      std::cout << to_veblen(parse_ordinal(veblen_text)) << "\n";
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "List worms over an alphabet");
  std::string enum_alphabet = "0,1";
  size_t enum_len = 2;
  enum_cmd->add_option("--alphabet", enum_alphabet,
                       "Comma-separated entry terms");
  enum_cmd->add_option("--max-len", enum_len, "Maximum worm length");
  enum_cmd->callback([&] {
    std::vector<Worm> worms =
        enumerate_worms(parse_alphabet(enum_alphabet), enum_len);
    std::sort(worms.begin(), worms.end(), [](const Worm& a, const Worm& b) {
      WormCmp c = cmp_worm(a, b);
      if (c == WormCmp::Below) return true;
      if (c == WormCmp::Above) return false;
      return print_worm(a) < print_worm(b);
    });
    for (const Worm& w : worms) std::cout << print_worm(w) << "\n";
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Run a reference oracle suite");
  std::string oracle_suite;
  oracle_cmd->add_option("--suite", oracle_suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"frames", "dualcalc", "closure"}));
  oracle_cmd->callback([&] {
    if (oracle_suite == "frames")
      rc = oracle_frames();
    else if (oracle_suite == "dualcalc")
      rc = oracle_dualcalc();
    else
      rc = oracle_closure();
  });

  auto* self_cmd = app.add_subcommand("selftest", "Run the built-in checks");
  self_cmd->callback([&] { rc = selftest(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
