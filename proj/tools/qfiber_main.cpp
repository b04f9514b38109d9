// Command-line front end. Links the C API only; every computation happens
// behind qfiber.h and all values travel as text.

#include "qfiber.h"

#include "CLI11.hpp"

#include <cstdio>
#include <string>

namespace {

// Prints primary output (if any) to stdout and an error message (if any) to
// stderr, frees both, and converts the status into the process exit code:
// 0 ok, 1 semantic failure, 2 parse error.
int finish(qf_status status, char* out, char* err) {
  if (out) {
    std::printf("%s\n", out);
    qf_free(out);
  }
  if (err) {
    std::fprintf(stderr, "error: %s\n", err);
    qf_free(err);
  }
  return static_cast<int>(status);
}

struct TermHandle {
  qf_term* t = nullptr;
  ~TermHandle() { qf_term_free(t); }
};

struct FormulaHandle {
  qf_formula* f = nullptr;
  ~FormulaHandle() { qf_formula_free(f); }
};

struct ProfileHandle {
  qf_profile* p = nullptr;
  ~ProfileHandle() { qf_profile_free(p); }
};

int run_eval(const std::string& structure, const std::string& term, const std::string& assign) {
  TermHandle handle;
  char* err = nullptr;
  qf_status status = qf_term_parse(term.c_str(), &handle.t, &err);
  if (status != QF_OK) return finish(status, nullptr, err);
  char* out = nullptr;
  status = qf_eval_term(handle.t, structure.c_str(), assign.c_str(), &out, &err);
  return finish(status, out, err);
}

int run_normalize(const std::string& term) {
  TermHandle handle;
  char* err = nullptr;
  qf_status status = qf_term_parse(term.c_str(), &handle.t, &err);
  if (status != QF_OK) return finish(status, nullptr, err);
  char* out = nullptr;
  status = qf_normalize_term(handle.t, &out, &err);
  return finish(status, out, err);
}

int run_classify(const std::string& formula, const std::string& target,
                 const std::string& params) {
  FormulaHandle handle;
  char* err = nullptr;
  qf_status status = qf_formula_parse(formula.c_str(), &handle.f, &err);
  if (status != QF_OK) return finish(status, nullptr, err);
  char* out = nullptr;
  status = qf_classify(handle.f, target.c_str(), params.c_str(), &out, &err);
  return finish(status, out, err);
}

int run_define(const std::string& rational, const std::string& integer) {
  char* err = nullptr;
  char* line = nullptr;
  qf_status status = !rational.empty() ? qf_define_rational(rational.c_str(), &line, &err)
                                       : qf_define_integer(integer.c_str(), &line, &err);
  if (status != QF_OK) return finish(status, nullptr, err);
  char* out = nullptr;
  status = qf_certificate_describe(line, &out, &err);
  qf_free(line);
  return finish(status, out, err);
}

int run_autocheck(const std::string& profile, const std::string& extra) {
  ProfileHandle handle;
  char* err = nullptr;
  qf_status status = qf_profile_parse(profile.c_str(), &handle.p, &err);
  if (status != QF_OK) return finish(status, nullptr, err);
  char* report = nullptr;
  status = qf_check_automorphism(handle.p, extra.c_str(), &report, &err);
  return finish(status, report, err);
}

int run_compose(const std::string& left, const std::string& right) {
  ProfileHandle lhs, rhs;
  char* err = nullptr;
  qf_status status = qf_profile_parse(left.c_str(), &lhs.p, &err);
  if (status != QF_OK) return finish(status, nullptr, err);
  status = qf_profile_parse(right.c_str(), &rhs.p, &err);
  if (status != QF_OK) return finish(status, nullptr, err);
  // left ∘ right: right acts first
  ProfileHandle composed;
  qf_profile_compose(rhs.p, lhs.p, &composed.p);
  char* out = nullptr;
  qf_profile_print(composed.p, &out);
  return finish(QF_OK, out, nullptr);
}

int run_escape(const std::string& support, const std::string& coset, const std::string& bound) {
  char* err = nullptr;
  char* out = nullptr;
  const qf_status status =
      qf_escape_witness(support.c_str(), coset.c_str(), bound.c_str(), &out, &err);
  return finish(status, out, err);
}

int run_extend_iso(const std::string& slope, const std::string& intercept,
                   const std::string& basepoint) {
  char* err = nullptr;
  char* report = nullptr;
  const qf_status status =
      qf_check_reduct_iso(slope.c_str(), intercept.c_str(), basepoint.c_str(), &report, &err);
  return finish(status, report, err);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in a fibered rational structure"};
  app.require_subcommand(1);

  std::string structure = "M", term, assign;
  auto* eval = app.add_subcommand("eval", "evaluate a term over M or the reduct Q");
  eval->add_option("--structure", structure, "M (full structure) or Q (parent-line reduct)")
      ->check(CLI::IsMember({"M", "Q"}));
  eval->add_option("--term", term, "term text")->required();
  eval->add_option("--assign", assign, "variable assignment, e.g. \"x=P(0),y=C(0,1)\"");

  std::string norm_term;
  auto* normalize = app.add_subcommand("normalize", "affine normal form of a term");
  normalize->add_option("--term", norm_term, "term text")->required();

  std::string formula, target, params;
  auto* classify =
      app.add_subcommand("classify", "exact solution set of a formula in one variable");
  classify->add_option("--formula", formula, "quantifier-free R-free formula")->required();
  classify->add_option("--target", target, "variable to solve for")->required();
  classify->add_option("--params", params, "bindings for the remaining variables");

  std::string def_rational, def_integer;
  auto* define = app.add_subcommand("define", "definability certificate over {0,1}");
  auto* opt_rational = define->add_option("--rational", def_rational, "target as k/n, verbatim");
  define->add_option("--integer", def_integer, "integer target")->excludes(opt_rational);

  std::string profile, grid_extra;
  auto* autocheck = app.add_subcommand("autocheck", "grid-check a fiber translation profile");
  autocheck->add_option("--profile", profile, "profile text \"p:t, p:t\"")->required();
  autocheck->add_option("--grid-extra", grid_extra, "extra parent points for the grid");

  std::string left, right;
  auto* compose = app.add_subcommand("compose", "compose two profiles (left after right)");
  compose->add_option("--left", left, "profile applied second")->required();
  compose->add_option("--right", right, "profile applied first")->required();

  std::string support, coset, bound;
  auto* escape =
      app.add_subcommand("escape", "unboundedness witness inside a basic open set");
  escape->add_option("--support", support, "parent points stabilized pointwise");
  escape->add_option("--coset", coset, "required translations \"p:t, p:t\"");
  escape->add_option("--bound", bound, "distance to exceed")->required();

  std::string slope, intercept, basepoint = "0";
  auto* extend = app.add_subcommand("extend-iso",
                                    "extend a parent-line automorphism and grid-check it");
  extend->add_option("--slope", slope, "nonzero rational slope")->required();
  extend->add_option("--intercept", intercept, "rational intercept")->required();
  extend->add_option("--basepoint", basepoint, "constant fiber basepoint offset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {  // --help and friends
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  if (eval->parsed()) return run_eval(structure, term, assign);
  if (normalize->parsed()) return run_normalize(norm_term);
  if (classify->parsed()) return run_classify(formula, target, params);
  if (define->parsed()) {
    if (def_rational.empty() && def_integer.empty()) {
      std::fprintf(stderr, "error: define needs --rational or --integer\n");
      return 2;
    }
    return run_define(def_rational, def_integer);
  }
  if (autocheck->parsed()) return run_autocheck(profile, grid_extra);
  if (compose->parsed()) return run_compose(left, right);
  if (escape->parsed()) return run_escape(support, coset, bound);
  if (extend->parsed()) return run_extend_iso(slope, intercept, basepoint);
  return 2;
}
