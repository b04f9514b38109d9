// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every expected value is recomputed here through an independent route
// (direct evaluation, brute-force sampling, explicit reconstruction) before
// being compared with the library's answer.

#include "affine.hpp"
#include "automorphism.hpp"
#include "definability.hpp"
#include "eval.hpp"
#include "metric.hpp"
#include "model_iso.hpp"
#include "parser.hpp"
#include "qenum.hpp"
#include "term.hpp"
#include "test_util.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace qfiber;
using testutil::Rng;

namespace {

int g_failures = 0;

struct Criterion {
  std::string name;
  std::function<std::string()> body;  // returns detail text, throws on failure

  void run() const {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::printf("[%s] %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
                elapsed.count());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

[[noreturn]] void fail(const std::string& message) { throw std::runtime_error(message); }

void enforce(bool condition, const std::string& message) {
  if (!condition) fail(message);
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// -- criterion 1: normalization against direct evaluation -------------------

std::string normalization_oracle() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1001);
  const std::vector<std::string> vars = {"x", "y", "z", "w"};
  for (int i = 0; i < 1000; ++i) {
    const Term t = testutil::random_term(rng, 6, vars);
    const AffineForm form = normalize_term(t);
    enforce(form.coefficient_sum() == 1,
            "coefficient sum is not 1 for " + t.str() + ": " + form.str());
    for (int k = 0; k < 20; ++k) {
      RationalAssignment v;
      for (const auto& name : vars)
        v.emplace(name, testutil::random_rational(rng, 1000000, 1000000));
      const Rational direct = eval_term_q(t, v);
      const Rational through_form = affine_eval(form, v);
      enforce(direct == through_form, "evaluation mismatch for " + t.str());
    }
  }
  const double elapsed = seconds_since(start);
  enforce(elapsed < 10.0, "runtime over budget");
  return "1000 terms x 20 assignments agree exactly, all coefficient sums 1";
}

// -- criterion 2: classification against pointwise brute force --------------

std::string strong_minimality_bound() {
  Rng rng(2002);
  const std::vector<std::string> vars = {"x"};
  for (int i = 0; i < 500; ++i) {
    const int atoms = 1 + i % 6;
    const Formula f = testutil::random_eq_formula(rng, atoms, vars);
    const SolutionSet set = classify_solutions(f, "x", {});
    enforce(set.listed().size() <= static_cast<std::size_t>(atoms),
            "listed side exceeds the atom count for " + f.str());
    for (long long n = -100; n <= 100; ++n) {
      const Rational point(n);
      const bool brute = testutil::eval_formula_q(f, {{"x", point}});
      enforce(set.contains(point) == brute,
              "membership mismatch at " + point.str() + " for " + f.str());
    }
  }
  return "500 formulas match brute force on 201 points, listed side within atom count";
}

// -- criterion 3: definability grid ------------------------------------------

std::string definability_grid() {
  const auto start = std::chrono::steady_clock::now();
  int verified = 0;
  for (long long n = -50; n <= 50; ++n) {
    const Certificate c = integer_certificate(n);
    const VerifyResult result = verify_certificate(c);
    enforce(result.ok, "integer certificate " + std::to_string(n) + ": " + result.diagnostic);
    enforce(c.target == Rational(n), "integer target mismatch");
    ++verified;
  }
  int rational_count = 0;
  for (long long k = -20; k <= 20; ++k) {
    for (long long n = 1; n <= 20; ++n) {
      const Certificate c = rational_certificate(k, n);
      const VerifyResult result = verify_certificate(c);
      enforce(result.ok, "rational certificate " + std::to_string(k) + "/" +
                             std::to_string(n) + ": " + result.diagnostic);
      enforce(c.target == Rational(Int(k), Int(n)), "rational target mismatch");
      const auto& witness = std::get<UniqueSolutionWitness>(c.witness);
      const SolutionSet set = classify_solutions(witness.formula, witness.variable, {});
      enforce(set == SolutionSet::finite({Rational(Int(k), Int(n))}),
              "unique solution differs from k/n");
      ++rational_count;
      ++verified;
    }
  }
  enforce(rational_count == 820, "expected 820 rational certificates");
  const double elapsed = seconds_since(start);
  enforce(elapsed < 5.0, "runtime over budget");
  return std::to_string(verified) + " certificates verified, unique solutions exact";
}

// -- criterion 4: automorphism suite -----------------------------------------

std::string automorphism_suite() {
  Rng rng(4004);
  const auto pool = testutil::small_index_pool(24);
  std::vector<AutomorphismProfile> profiles;
  profiles.reserve(200);
  for (int i = 0; i < 200; ++i)
    profiles.push_back(testutil::random_profile(rng, pool, 8, 100, 100));

  for (const AutomorphismProfile& h : profiles) {
    const CheckReport report = check_automorphism(h, standard_grid(h));
    enforce(report.ok, "grid check failed for " + h.str() + ": " + report.detail);
  }

  std::uniform_int_distribution<std::size_t> pick(0, profiles.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const AutomorphismProfile& a = profiles[pick(rng)];
    const AutomorphismProfile& b = profiles[pick(rng)];
    const AutomorphismProfile& c = profiles[pick(rng)];
    enforce(a.compose(b).compose(c) == a.compose(b.compose(c)), "associativity");
    enforce(a.compose(AutomorphismProfile()) == a &&
                AutomorphismProfile().compose(a) == a,
            "identity law");
    enforce(a.compose(a.inverse()) == AutomorphismProfile() &&
                a.inverse().compose(a) == AutomorphismProfile(),
            "inverse law");
  }

  for (const AutomorphismProfile& h : profiles) {
    std::vector<Rational> probes;
    for (const auto& [p, t] : h.shifts()) probes.push_back(p);
    probes.push_back(Rational(Int(9), Int(7)));
    const AutomorphismProfile extracted =
        extract_profile([&h](const Element& e) { return h.apply(e); }, probes);
    enforce(extracted == h, "extract after apply is not the identity for " + h.str());
  }

  return "200 profiles: grid checks, group axioms on 200 triples, extract round trips";
}

// -- criterion 5: metric suite ------------------------------------------------

std::string metric_suite() {
  Rng rng(5005);
  const auto pool = testutil::small_index_pool(16);
  const std::vector<Rational> js = {Rational(0), Rational(1), Rational(-1),
                                    Rational(Int(1), Int(2))};
  for (int i = 0; i < 500; ++i) {
    const AutomorphismProfile a = testutil::random_profile(rng, pool, 6, 100, 100);
    const AutomorphismProfile b = testutil::random_profile(rng, pool, 6, 100, 100);
    const AutomorphismProfile c = testutil::random_profile(rng, pool, 6, 100, 100);
    const AutomorphismProfile k = testutil::random_profile(rng, pool, 6, 100, 100);

    const Rational dab = product_metric(a, b);
    enforce(dab >= Rational(0), "nonnegativity");
    enforce((dab == Rational(0)) == (a == b), "identity of indiscernibles");
    enforce(dab == product_metric(b, a), "symmetry");
    enforce(product_metric(a, c) <= dab + product_metric(b, c), "triangle inequality");
    enforce(product_metric(k.compose(a), k.compose(b)) == dab, "left invariance");

    for (const Rational& j : js) {
      const Rational aug = augmented_metric(j, a, b);
      enforce(aug >= Rational(0), "augmented nonnegativity");
      enforce((aug == Rational(0)) == (a == b), "augmented identity of indiscernibles");
      enforce(aug == augmented_metric(j, b, a), "augmented symmetry");
      enforce(augmented_metric(j, a, c) <= aug + augmented_metric(j, b, c),
              "augmented triangle inequality");
      enforce(augmented_metric(j, k.compose(a), k.compose(b)) == aug,
              "augmented left invariance");
    }
  }
  return "500 triples: axioms and left invariance exact for product and augmented metrics";
}

// -- criterion 6: escape unboundedness ----------------------------------------

std::string escape_unboundedness() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(6006);
  const auto pool = testutil::small_index_pool(14);
  std::uniform_int_distribution<int> count_pick(0, 10);
  std::uniform_int_distribution<std::size_t> point_pick(0, pool.size() - 1);
  const std::array<Rational, 4> bounds = {Rational(1), Rational(10), Rational(1000),
                                          Rational(1000000)};
  for (int i = 0; i < 20; ++i) {
    BasicOpenSet u;
    const int constraints = count_pick(rng);
    for (int k = 0; k < constraints; ++k) {
      const Rational point = pool[point_pick(rng)];
      const Rational value = testutil::random_rational(rng, 50, 10);
      if (!u.constraints().count(point)) u.require(point, value);
    }
    for (const Rational& bound : bounds) {
      const EscapeWitness w = escape_witness(u, bound);
      enforce(u.contains(w.g) && u.contains(w.h), "witnesses must lie in the set");
      // independent recomputation of the distance from the returned pieces
      const Rational recomputed =
          product_metric(w.g, w.h) + factor_metric(w.g.shift_at(w.j), w.h.shift_at(w.j));
      enforce(recomputed == w.distance, "distance recomputation differs");
      enforce(recomputed > bound, "distance does not exceed the bound");
    }
  }
  const double elapsed = seconds_since(start);
  enforce(elapsed < 1.0, "runtime over budget");
  return "20 open sets x 4 bounds: members verified, recomputed distances exceed bounds";
}

// -- criterion 7: isomorphism extension ---------------------------------------

std::string isomorphism_extension() {
  Rng rng(7007);
  const BasepointChoice zero = constant_basepoint(Rational(0));
  const std::vector<Element> grid = default_iso_grid();
  for (int i = 0; i < 50; ++i) {
    Rational slope = testutil::random_rational(rng, 20, 6);
    if (slope.is_zero()) slope = Rational(1);
    const ParentAffineMap sigma(slope, testutil::random_rational(rng, 20, 6));
    const CheckReport report = check_reduct_iso(sigma, zero, zero, grid);
    enforce(report.ok, "extension check failed: " + report.detail);
  }
  const ParentAffineMap id = ParentAffineMap::identity();
  for (int i = 0; i < 100; ++i) {
    const Element e = i % 2 ? Element::parent(testutil::random_rational(rng, 100, 10))
                            : Element::child(testutil::random_rational(rng, 100, 10),
                                             testutil::random_rational(rng, 100, 10));
    enforce(extend_iso(id, zero, zero, e) == e, "identity extension moved " + e.str());
  }
  return "50 parent maps pass the all-cases grid, identity extends to the identity";
}

// -- criterion 8: CLI golden files --------------------------------------------

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string command = std::string(QFIBER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  enforce(pipe != nullptr, "popen failed");
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

std::string cli_golden() {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"eval.txt", "eval --structure M --term \"f(0,1,1)\""},
      {"normalize.txt", "normalize --term \"f(f(x,y,z),x,y)\""},
      {"classify.txt", "classify --formula \"!(x = 0) & !(x = 1)\" --target x"},
      {"define.txt", "define --rational 5/7"},
      {"autocheck.txt", "autocheck --profile \"0:1\""},
      {"compose.txt", "compose --left \"0:1\" --right \"0:2, 1:-1\""},
      {"escape.txt", "escape --support \"0,1\" --bound 10"},
      {"extend-iso.txt", "extend-iso --slope 1 --intercept 1"},
  };
  for (const auto& [golden_name, args] : cases) {
    std::ifstream in(std::string(QFIBER_GOLDEN_DIR) + "/" + golden_name, std::ios::binary);
    enforce(in.good(), "missing golden file " + golden_name);
    std::ostringstream expected;
    expected << in.rdbuf();
    int exit_code = -1;
    const std::string first = run_cli(args, exit_code);
    enforce(exit_code == 0, golden_name + ": nonzero exit");
    enforce(first == expected.str(), golden_name + ": output differs from golden file");
    const std::string second = run_cli(args, exit_code);
    enforce(second == first, golden_name + ": output differs between runs");
  }
  return "8 subcommands byte-exact against golden files across two runs";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"normalization-oracle", normalization_oracle},
      {"strong-minimality-bound", strong_minimality_bound},
      {"definability-grid", definability_grid},
      {"automorphism-suite", automorphism_suite},
      {"metric-suite", metric_suite},
      {"escape-unboundedness", escape_unboundedness},
      {"isomorphism-extension", isomorphism_extension},
      {"cli-golden", cli_golden},
  };
  for (const Criterion& criterion : criteria) criterion.run();
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
