// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hyperwalk/fixtures.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/linalg.hpp"
#include "hyperwalk/rankagg.hpp"
#include "hyperwalk/reduction.hpp"
#include "hyperwalk/spectral.hpp"
#include "hyperwalk/stationary.hpp"
#include "oracles.hpp"
#include "random_hypergraph.hpp"

using namespace hyperwalk;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(4);
  s << x;
  return s.str();
}

double inf_dist(const Vector& a, const Vector& b) { return (a - b).lpNorm<Eigen::Infinity>(); }

const std::vector<Hypergraph>& general_sweep() {
  static const auto instances = testkit::sweep(2001, 200, {});
  return instances;
}

const std::vector<Hypergraph>& small_sweep() {
  static const auto instances = testkit::sweep(5001, 50, {});
  return instances;
}

Outcome h3_fixture() {
  Outcome o;
  const auto h = fixtures::h3();
  const auto P = transition_matrix(h);
  o.require(P(1, 0) == 0.5, "p(v2,v1) != 1/2");
  Matrix rows(4, 4);
  rows << 5.0 / 12, 1.0 / 8, 7.0 / 24, 1.0 / 6,  //
      1.0 / 2, 1.0 / 4, 1.0 / 4, 0,              //
      5.0 / 12, 1.0 / 8, 7.0 / 24, 1.0 / 6,      //
      1.0 / 3, 0, 1.0 / 3, 1.0 / 3;
  o.require(testkit::max_abs_diff(P.matrix(), rows) <= 1e-12, "P differs from hand rows");
  const Vector pi = (Vector(4) << 7, 2, 5, 3).finished() / 17.0;
  const auto rho = stationary_rho(h);
  o.require(inf_dist(rho.pi, pi) <= 1e-10, "rho-path pi off");
  o.require(inf_dist(stationary_direct(P).pi, pi) <= 1e-10, "direct pi off");
  const auto verdict = reversibility(P, rho.pi);
  bool has_pair = false;
  for (const auto& [pair, gap] : verdict.violations) has_pair = has_pair || pair == std::pair<std::size_t, std::size_t>{0, 1};
  o.require(!verdict.reversible, "H3 reported reversible");
  o.require(has_pair, "(v1,v2) not among the violating pairs");
  if (o.pass) o.detail = "pi=(7,2,5,3)/17, (v1,v2) violates detailed balance";
  return o;
}

Outcome rho_vs_direct() {
  Outcome o;
  double worst_pi = 0.0, worst_fixed = 0.0;
  for (const auto& h : general_sweep()) {
    const auto r = stationary_rho(h);
    worst_pi = std::max(worst_pi, inf_dist(r.pi, stationary_direct(transition_matrix(h)).pi));
    worst_fixed = std::max(worst_fixed, testkit::rho_fixed_point_residual(h, r.rho));
  }
  o.require(worst_pi <= 1e-8, "pi gap " + fmt(worst_pi));
  o.require(worst_fixed <= 1e-10, "fixed-point residual " + fmt(worst_fixed));
  if (o.pass) o.detail = "200 instances, max pi gap " + fmt(worst_pi) + ", fixed-point " + fmt(worst_fixed);
  return o;
}

Outcome edge_independent_graph() {
  Outcome o;
  double worst = 0.0;
  std::size_t kolmogorov_failures = 0;
  for (const auto& h : testkit::sweep(3001, 200, {.edge_independent = true})) {
    const auto P = transition_matrix(h);
    worst = std::max(worst, testkit::max_abs_diff(P.matrix(), graph_random_walk(edge_independent_to_graph(h)).matrix()));
    if (!kolmogorov_check(P, 5).holds) ++kolmogorov_failures;
  }
  o.require(worst <= 1e-12, "walk gap " + fmt(worst));
  o.require(kolmogorov_failures == 0, std::to_string(kolmogorov_failures) + " Kolmogorov failures");
  if (o.pass) o.detail = "200 instances, max walk gap " + fmt(worst);
  return o;
}

Outcome laplacian_properties() {
  Outcome o;
  double sym = 0.0, kernel = 0.0, min_eig = 0.0, ident = 0.0;
  for (const auto& h : general_sweep()) {
    const auto lap = laplacian(h);
    sym = std::max(sym, testkit::max_abs_diff(lap.L, lap.L.transpose()));
    kernel = std::max(kernel, (lap.L * Vector::Ones(lap.L.rows())).cwiseAbs().maxCoeff());
    min_eig = std::min(min_eig, eigenvalues_symmetric(lap.L).front());
    ident = std::max(ident, testkit::max_abs_diff(lap.L, testkit::reversibilized_laplacian(transition_matrix(h), lap.pi)));
  }
  o.require(sym <= 1e-12, "asymmetry " + fmt(sym));
  o.require(kernel <= 1e-10, "L1 " + fmt(kernel));
  o.require(min_eig >= -1e-10, "min eigenvalue " + fmt(min_eig));
  o.require(ident <= 1e-10, "reversibilization gap " + fmt(ident));
  if (o.pass) o.detail = "200 instances, |L1| " + fmt(kernel) + ", min eigenvalue " + fmt(min_eig);
  return o;
}

Outcome cheeger() {
  Outcome o;
  std::size_t violations = 0, disagreements = 0;
  for (const auto& h : small_sweep()) {
    const auto check = check_cheeger(h);
    if (!check.holds) ++violations;
    const auto P = transition_matrix(h);
    const auto pi = stationary_rho(h).pi;
    const auto a = cheeger_constant(P, pi);
    const auto b = testkit::cheeger_recursive(P, pi);
    if (a.phi != b.phi || a.subset != b.subset || a.phi != check.phi) ++disagreements;
  }
  o.require(violations == 0, std::to_string(violations) + " inequality violations");
  o.require(disagreements == 0, std::to_string(disagreements) + " enumeration disagreements");
  if (o.pass) o.detail = "50 instances, both enumerations agree exactly";
  return o;
}

Outcome mixing() {
  Outcome o;
  std::size_t checked = 0, below = 0, corrected_below = 0, unmixed = 0;
  for (const auto& h : small_sweep()) {
    const auto pi = stationary_rho(h).pi;
    const auto P = transition_matrix(rho_normalized(h, stationary_rho(h)));
    for (double eps : {0.25, 0.1}) {
      const auto bound = mixing_time_bound(h, eps);
      o.require(!bound.vacuous, "vacuous bound");
      const auto t = empirical_mixing_time(P, pi, eps, 100000);
      ++checked;
      if (!t.steps) {
        ++unmixed;
        continue;
      }
      if (static_cast<double>(*t.steps) > bound.bound) ++below;
      if (static_cast<double>(*t.steps) > bound.corrected_bound) ++corrected_below;
    }
  }
  const std::string tally = std::to_string(below) + "/" + std::to_string(checked) +
                            " cases mix slower than the 8*beta1/phi^2 bound; 2/(beta1*phi^2) form undercut in " +
                            std::to_string(corrected_below);
  o.require(unmixed == 0, std::to_string(unmixed) + " cases did not mix within 100000 steps");
  o.require(below == 0, tally);
  if (o.pass) o.detail = "50 instances x 2 eps; " + tally;
  return o;
}

Outcome sandwich() {
  Outcome o;
  double worst_pi = 0.0, worst_eq = 0.0;
  std::size_t failures = 0;
  for (const auto& h : testkit::sweep(7001, 50, {})) {
    const auto s = sandwich_check(h);
    if (!s.holds) ++failures;
    worst_pi = std::max(worst_pi, s.pi_gap);
  }
  for (const auto& h : testkit::sweep(7002, 50, {.edge_independent = true})) {
    const auto s = sandwich_check(h);
    worst_eq = std::max(worst_eq, std::abs(s.lambda1_G - s.lambda1_H));
  }
  o.require(failures == 0, std::to_string(failures) + " sandwich violations");
  o.require(worst_pi <= 1e-9, "pi gap " + fmt(worst_pi));
  o.require(worst_eq <= 1e-9, "edge-independent lambda gap " + fmt(worst_eq));
  if (o.pass) o.detail = "50 + 50 instances, pi gap " + fmt(worst_pi) + ", c=1 gap " + fmt(worst_eq);
  return o;
}

Outcome nonlazy() {
  Outcome o;
  double worst = 0.0;
  for (const auto& h : testkit::sweep(8001, 100, {.min_edge_size = 2, .trivial = true}))
    worst = std::max(worst, nonlazy_trivial_equivalence(h).max_dev);
  o.require(worst <= 1e-12, "walk gap " + fmt(worst));
  if (o.pass) o.detail = "100 instances, max gap " + fmt(worst);
  return o;
}

Outcome naive_counterexample() {
  Outcome o;
  const auto h = fixtures::h3();
  const Vector naive = naive_stationary(h);
  const double gap = inf_dist(naive, stationary_rho(h).pi);
  o.require(gap > 0.05, "naive formula too close: " + fmt(gap));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> factor(0.1, 10.0);
  for (int t = 0; t < 20; ++t) {
    auto spec = fixtures::h3_spec();
    for (auto& e : spec.edges)
      for (auto& m : e.members) m.second *= factor(rng);
    o.require(naive_stationary(Hypergraph::build(spec)) == naive, "naive formula moved with gamma");
  }
  if (o.pass) o.detail = "distance " + fmt(gap) + ", unchanged under 20 gamma perturbations";
  return o;
}

Outcome ranking_experiment() {
  using namespace rankagg;
  Outcome o;
  const auto result = experiment({.n = 100, .sigma = 1.0, .ps = {0.03, 0.05, 0.07}, .trials = 30, .seed = 42});
  double best_gap = -1.0, best_p = 0.0;
  std::ostringstream gaps;
  for (double p : {0.03, 0.05, 0.07}) {
    const double hg = result.find(Method::HypergraphRWR, p).mean_weighted;
    const double mc3 = result.find(Method::MC3, p).mean_weighted;
    const double clique = result.find(Method::CliqueRWR, p).mean_weighted;
    o.require(hg > mc3, "hypergraph <= mc3 at p=" + fmt(p));
    o.require(hg > clique, "hypergraph <= clique at p=" + fmt(p));
    gaps << (p == 0.03 ? "" : ", ") << "p=" << fmt(p) << ": " << fmt(hg - mc3);
    if (hg - mc3 > best_gap) {
      best_gap = hg - mc3;
      best_p = p;
    }
  }
  o.require(best_p == 0.03, "largest hypergraph-mc3 gap at p=" + fmt(best_p) + " (" + gaps.str() + ")");
  if (o.pass) o.detail = "hypergraph-mc3 gaps " + gaps.str();
  return o;
}

std::pair<int, std::string> cli_run(const std::vector<std::string>& args) {
  std::vector<std::string> full{"hyperwalk"};
  full.insert(full.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::dispatch(full, out, err);
  return {code, out.str()};
}

Outcome determinism() {
  Outcome o;
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("hyperwalk_acceptance_" + std::to_string(rd()));
  fs::create_directories(dir);
  const auto h3 = (dir / "h3.json").string();
  std::ofstream(h3) << io::emit_json(fixtures::h3());

  const auto file = [&](const std::string& name, int round) { return (dir / (name + std::to_string(round))).string(); };
  std::size_t compared = 0;
  std::vector<std::vector<std::string>> outputs(2);
  for (int round = 0; round < 2; ++round) {
    const std::vector<std::vector<std::string>> commands = {
        {"rankagg", "--n", "40", "--p", "0.05,0.1", "--trials", "3", "--seed", "42", "--out", file("trials.csv", round),
         "--summary", file("summary.csv", round), "--emit-matches", file("matches.json", round)},
        {"--json", "rankagg", "--n", "40", "--p", "0.1", "--trials", "2", "--seed", "7"},
        {"simulate", "-i", h3, "--start", "v1", "--steps", "200", "--seed", "11", "-o", file("walk", round)},
        {"stationary", "-i", h3, "-o", file("pi.json", round)},
        {"spectral", "-i", h3, "--check-cheeger"},
        {"reduce", "-i", h3},
        {"--json", "transition", "-i", h3, "--kind", "restart"},
    };
    for (const auto& args : commands) {
      const auto [code, out] = cli_run(args);
      o.require(code == 0, "command failed in round " + std::to_string(round));
      outputs[round].push_back(out);
    }
    for (const char* name : {"trials.csv", "summary.csv", "matches.json", "walk", "pi.json"})
      outputs[round].push_back(io::read_file(file(name, round)));
  }
  for (std::size_t k = 0; k < outputs[0].size(); ++k) {
    o.require(outputs[0][k] == outputs[1][k], "output " + std::to_string(k) + " differs between runs");
    ++compared;
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(compared) + " outputs byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "H3 golden fixture", 1.0, h3_fixture},
      {2, "rho path equals direct solve", 10.0, rho_vs_direct},
      {3, "edge-independent walks are graph walks", 30.0, edge_independent_graph},
      {4, "Laplacian properties", 10.0, laplacian_properties},
      {5, "Cheeger inequality", 60.0, cheeger},
      {6, "mixing-time bound", 60.0, mixing},
      {7, "sandwich graph spectral bounds", 60.0, sandwich},
      {8, "non-lazy trivial-weight equivalence", 10.0, nonlazy},
      {9, "degree-only formula is wrong on H3", 1.0, naive_counterexample},
      {10, "rank aggregation ordering", 300.0, ranking_experiment},
      {11, "seeded runs are byte-identical", 60.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail = "took " + fmt(seconds) + " s, budget " + fmt(c.budget_seconds) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-42s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
