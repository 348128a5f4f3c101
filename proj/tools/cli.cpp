#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperwalk/fixtures.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/linalg.hpp"
#include "hyperwalk/rankagg.hpp"
#include "hyperwalk/reduction.hpp"
#include "hyperwalk/spectral.hpp"
#include "hyperwalk/stationary.hpp"
#include "hyperwalk/walk.hpp"
#include "manifest.hpp"

#ifndef HYPERWALK_VERSION
#define HYPERWALK_VERSION "0.0.0"
#endif

namespace hyperwalk::cli {

namespace {

using nlohmann::ordered_json;

/// Bad option values discovered after parsing (config merges, enumerations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::vector<std::string> argv;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

struct Sink {
  std::string path;  ///< empty: stdout
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
};

void deliver(const Context& ctx, const Sink& sink, const std::string& text) {
  if (sink.path.empty()) {
    ctx.out << text;
    return;
  }
  {
    std::ofstream file(sink.path, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + sink.path + "'");
    file << text;
  }
  RunManifest manifest;
  manifest.command_line = ctx.argv;
  for (const auto& input : sink.inputs) manifest.input_digests.emplace_back(input, sha256_file(input));
  manifest.seed = sink.seed;
  manifest.version = HYPERWALK_VERSION;
  manifest.timestamp = utc_timestamp();
  manifest.prng = std::string(kPrngAlgorithm);
  manifest.output = sink.path;
  manifest.output_digest = sha256_hex(text);
  const auto manifest_path = write_manifest(manifest);
  ctx.err << "wrote " << sink.path << " and " << manifest_path.string() << '\n';
}

std::string choose(const std::string& value, std::initializer_list<const char*> allowed, const char* option) {
  for (const char* a : allowed)
    if (value == a) return value;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError(std::string(option) + ": '" + value + "' is not one of {" + list + "}");
}

ordered_json by_vertex(const std::vector<std::string>& names, const Vector& values) {
  ordered_json obj = ordered_json::object();
  for (std::size_t v = 0; v < names.size(); ++v) obj[names[v]] = values(static_cast<Eigen::Index>(v));
  return obj;
}

ordered_json matrix_rows(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string config_value(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number()) return value.dump();
  throw UsageError("config value " + value.dump() + " is not a scalar");
}

/// Fills options of `sub` that were not given on the command line. Keys in a
/// section named after the subcommand take precedence over top-level keys;
/// top-level keys that `sub` does not know are ignored.
void apply_config(const std::string& path, CLI::App& sub) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(io::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config '" + path + "' must hold a JSON object");

  auto merge = [&sub](const nlohmann::json& section, bool strict) {
    for (const auto& [key, value] : section.items()) {
      if (value.is_object()) continue;
      CLI::Option* opt = sub.get_option_no_throw("--" + key);
      if (opt == nullptr) {
        if (strict) throw UsageError("config key '" + key + "' is not an option of '" + sub.get_name() + "'");
        continue;
      }
      if (opt->count() > 0) continue;
      std::vector<std::string> values;
      if (value.is_array())
        for (const auto& item : value) values.push_back(config_value(item));
      else
        values.push_back(config_value(value));
      opt->add_result(values);
      opt->run_callback();
    }
  };
  if (auto it = doc.find(sub.get_name()); it != doc.end()) {
    if (!it->is_object()) throw UsageError("config section '" + sub.get_name() + "' must be an object");
    merge(*it, true);
  }
  merge(doc, false);
}

// --- transition -------------------------------------------------------------

struct TransitionArgs {
  std::string input;
  std::string kind = "lazy";
  double beta = 0.4;
  std::string restart_vertex;
  std::string out;
};

void run_transition(const Context& ctx, const TransitionArgs& a) {
  const auto kind = choose(a.kind, {"lazy", "nonlazy", "restart"}, "--kind");
  const Hypergraph h = io::load_hypergraph(a.input);
  std::optional<TransitionMatrix> P;
  if (kind == "nonlazy") {
    P = nonlazy_transition_matrix(h);
  } else if (kind == "lazy") {
    P = transition_matrix(h);
  } else if (a.restart_vertex.empty()) {
    P = restart_matrix(transition_matrix(h), a.beta);
  } else {
    const auto v = h.find_vertex(a.restart_vertex);
    if (!v) throw Error(ErrorKind::UnknownVertex, "restart vertex '" + a.restart_vertex + "' is not declared");
    P = restart_matrix(transition_matrix(h), a.beta, point_distribution(h.num_vertices(), *v));
  }

  std::string text;
  if (ctx.json) {
    ordered_json doc;
    doc["kind"] = kind;
    if (kind == "restart") {
      doc["beta"] = a.beta;
      doc["restart"] = a.restart_vertex.empty() ? ordered_json("uniform") : ordered_json(a.restart_vertex);
    }
    doc["vertices"] = h.vertex_names();
    doc["matrix"] = matrix_rows(P->matrix());
    text = dump(doc);
  } else {
    std::ostringstream csv;
    csv << "vertex";
    for (const auto& name : h.vertex_names()) csv << ',' << name;
    csv << '\n';
    for (std::size_t r = 0; r < P->size(); ++r) {
      csv << h.vertex_name(r);
      for (std::size_t c = 0; c < P->size(); ++c) csv << ',' << io::format_double((*P)(r, c));
      csv << '\n';
    }
    text = csv.str();
  }
  deliver(ctx, {a.out, {a.input}, std::nullopt}, text);
}

// --- stationary -------------------------------------------------------------

struct StationaryArgs {
  std::string input;
  std::string method = "auto";
  std::string out;
};

void run_stationary(const Context& ctx, const StationaryArgs& a) {
  const auto method = choose(a.method, {"rho", "direct", "auto"}, "--method");
  const Hypergraph h = io::load_hypergraph(a.input);
  StationaryResult result;
  if (method == "rho")
    result = stationary_rho(h);
  else if (method == "direct")
    result = stationary_direct(transition_matrix(h));
  else
    result = h.edge_independent() ? stationary_edge_independent(h) : stationary_rho(h);

  ordered_json doc;
  doc["method"] = to_string(result.method);
  doc["pi"] = by_vertex(h.vertex_names(), result.pi);
  ordered_json rho = ordered_json::object();
  for (Eigen::Index e = 0; e < result.rho.size(); ++e) rho["e" + std::to_string(e + 1)] = result.rho(e);
  doc["rho"] = std::move(rho);
  doc["residual"] = result.residual;
  if (result.method == StationaryMethod::RhoEigenvector) {
    doc["iterations"] = result.iterations;
    doc["fallback"] = result.used_fallback;
  }
  deliver(ctx, {a.out, {a.input}, std::nullopt}, dump(doc));
}

// --- spectral ---------------------------------------------------------------

struct SpectralArgs {
  std::string input;
  double eps = 0.25;
  bool check_cheeger = false;
  std::string out;
};

void run_spectral(const Context& ctx, const SpectralArgs& a) {
  const Hypergraph h = io::load_hypergraph(a.input);
  const auto report = spectral_report(h, a.eps);

  ordered_json doc;
  doc["vertices"] = h.vertex_names();
  doc["pi"] = by_vertex(h.vertex_names(), report.pi);
  doc["eigenvalues"] = report.eigenvalues;
  doc["lambda"] = report.lambda;
  doc["lambda_unnormalized"] = report.lambda_unnormalized;
  if (report.cheeger) {
    std::vector<std::string> subset;
    for (std::size_t v : report.cheeger->subset) subset.push_back(h.vertex_name(v));
    doc["cheeger"] = {{"phi", report.cheeger->phi}, {"subset", subset}};
  } else {
    doc["cheeger"] = nullptr;
  }
  if (report.mixing) {
    const auto& m = *report.mixing;
    doc["mixing_bound"] = {{"eps", a.eps},         {"bound", m.bound},   {"corrected_bound", m.corrected_bound},
                           {"vacuous", m.vacuous}, {"beta1", m.beta1},   {"beta2", m.beta2},
                           {"d_min", m.d_min},     {"log_term", m.log_term}};
  } else {
    doc["mixing_bound"] = nullptr;
  }
  if (a.check_cheeger) {
    const auto check = check_cheeger(h);
    doc["cheeger_check"] = {{"lambda", check.lambda},
                            {"lambda_unnormalized", check.lambda_unnormalized},
                            {"phi", check.phi},
                            {"lower", check.phi * check.phi / 2.0},
                            {"upper", 2.0 * check.phi},
                            {"holds", check.holds}};
  }
  deliver(ctx, {a.out, {a.input}, std::nullopt}, dump(doc));
}

// --- reduce -----------------------------------------------------------------

struct ReduceArgs {
  std::string input;
  std::string mode = "sandwich";
  std::string out;
};

ordered_json graph_json(const WeightedGraph& g) {
  ordered_json doc;
  doc["vertices"] = g.vertex_names();
  ordered_json edges = ordered_json::array();
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t v = u; v < g.num_vertices(); ++v) {
      if (g.weight(u, v) == 0.0) continue;
      ordered_json members = ordered_json::object();
      members[g.vertex_names()[u]] = 1.0;
      members[g.vertex_names()[v]] = 1.0;
      edges.push_back({{"weight", g.weight(u, v)}, {"members", std::move(members)}});
    }
  }
  doc["edges"] = std::move(edges);
  return doc;
}

void run_reduce(const Context& ctx, const ReduceArgs& a) {
  const auto mode = choose(a.mode, {"eqind", "sandwich", "nonlazy"}, "--mode");
  const Hypergraph h = io::load_hypergraph(a.input);

  ordered_json doc;
  ordered_json verdict;
  verdict["mode"] = mode;
  if (mode == "eqind") {
    const auto g = edge_independent_to_graph(h);
    const auto P_h = transition_matrix(h);
    verdict["max_dev"] = (P_h.matrix() - graph_random_walk(g).matrix()).cwiseAbs().maxCoeff();
    verdict["reversible"] = reversibility(P_h, stationary_rho(h).pi).reversible;
    doc = graph_json(g);
  } else if (mode == "sandwich") {
    const auto check = sandwich_check(h);
    verdict["lambda1_H"] = check.lambda1_H;
    verdict["lambda1_G"] = check.lambda1_G;
    verdict["c"] = check.c;
    verdict["c_raw"] = check.c_raw;
    verdict["pi_gap"] = check.pi_gap;
    verdict["holds"] = check.holds;
    doc = graph_json(sandwich_weights(h));
  } else {
    const auto eq = nonlazy_trivial_equivalence(h);
    verdict["max_dev"] = eq.max_dev;
    doc = graph_json(eq.graph);
  }
  doc["verdict"] = std::move(verdict);
  deliver(ctx, {a.out, {a.input}, std::nullopt}, dump(doc));
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string input;
  std::string start;
  std::size_t steps = 100;
  std::uint64_t seed = 0;
  std::string out;
};

void run_simulate(const Context& ctx, const SimulateArgs& a) {
  const Hypergraph h = io::load_hypergraph(a.input);
  const auto path = simulate(transition_matrix(h), a.start, a.steps, a.seed);
  std::string text;
  if (ctx.json) {
    std::vector<std::string> names;
    for (std::size_t v : path) names.push_back(h.vertex_name(v));
    ordered_json doc;
    doc["start"] = a.start;
    doc["steps"] = a.steps;
    doc["seed"] = a.seed;
    doc["prng"] = kPrngAlgorithm;
    doc["trajectory"] = names;
    text = dump(doc);
  } else {
    for (std::size_t v : path) text += h.vertex_name(v) + '\n';
  }
  deliver(ctx, {a.out, {a.input}, a.seed}, text);
}

// --- rankagg ----------------------------------------------------------------

struct RankaggArgs {
  std::size_t n = 100;
  double sigma = 1.0;
  std::vector<double> ps{0.03, 0.05, 0.07};
  std::size_t trials = 30;
  std::uint64_t seed = 42;
  double beta = rankagg::kDefaultRestart;
  std::string out;
  std::string summary;
  std::string matches;
  std::string emit_matches;
};

void rank_matches(const Context& ctx, const RankaggArgs& a) {
  const auto data = rankagg::parse_matches(io::read_file(a.matches));
  constexpr rankagg::Method kMethods[] = {rankagg::Method::HypergraphRWR, rankagg::Method::CliqueRWR,
                                          rankagg::Method::MC3};
  ordered_json doc;
  doc["n"] = data.n;
  doc["matches"] = data.matches.size();
  doc["beta"] = a.beta;
  ordered_json methods = ordered_json::object();
  std::ostringstream table;
  for (auto method : kMethods) {
    const auto r = rankagg::rank(method, data, a.beta);
    ordered_json entry;
    entry["order"] = r.order;
    entry["scores"] = r.scores;
    entry["residual"] = r.residual;
    table << std::left << std::setw(11) << rankagg::to_string(method);
    const std::size_t shown = std::min<std::size_t>(r.order.size(), 10);
    for (std::size_t k = 0; k < shown; ++k) table << ' ' << r.order[k];
    if (shown < r.order.size()) table << " ...";
    if (data.truth) {
      entry["tau_weighted"] = rankagg::kendall_tau(r.order, *data.truth, true);
      entry["tau_unweighted"] = rankagg::kendall_tau(r.order, *data.truth, false);
      table << "  (tau_w " << std::fixed << std::setprecision(4) << entry["tau_weighted"].get<double>() << ')';
      table << std::defaultfloat;
    }
    table << '\n';
    methods[std::string(rankagg::to_string(method))] = std::move(entry);
  }
  doc["methods"] = std::move(methods);
  const std::string json_text = dump(doc);
  if (!a.out.empty()) deliver(ctx, {a.out, {a.matches}, std::nullopt}, json_text);
  if (ctx.json)
    ctx.out << json_text;
  else
    ctx.out << "top of each ranking (best first)\n" << table.str();
}

void run_rankagg(const Context& ctx, const RankaggArgs& a) {
  if (!a.matches.empty()) {
    rank_matches(ctx, a);
    return;
  }
  if (a.ps.empty()) throw UsageError("--p: need at least one probability");
  if (!a.emit_matches.empty())
    deliver(ctx, {a.emit_matches, {}, a.seed},
            rankagg::emit_matches(rankagg::generate(a.n, a.sigma, a.ps.front(), a.seed)));

  rankagg::ExperimentParams params;
  params.n = a.n;
  params.sigma = a.sigma;
  params.ps = a.ps;
  params.trials = a.trials;
  params.seed = a.seed;
  params.beta = a.beta;
  const auto result = rankagg::experiment(params);

  if (!a.out.empty()) deliver(ctx, {a.out, {}, a.seed}, rankagg::trials_csv(result));
  if (!a.summary.empty()) deliver(ctx, {a.summary, {}, a.seed}, rankagg::summary_csv(result));

  if (ctx.json) {
    ordered_json doc;
    doc["n"] = a.n;
    doc["sigma"] = a.sigma;
    doc["trials"] = a.trials;
    doc["seed"] = a.seed;
    doc["beta"] = a.beta;
    ordered_json rows = ordered_json::array();
    for (const auto& r : result.summary)
      rows.push_back({{"method", rankagg::to_string(r.method)},
                      {"p", r.p},
                      {"mean_tau_weighted", r.mean_weighted},
                      {"std_tau_weighted", r.std_weighted},
                      {"mean_tau_unweighted", r.mean_unweighted},
                      {"std_tau_unweighted", r.std_unweighted}});
    doc["summary"] = std::move(rows);
    ctx.out << dump(doc);
    return;
  }
  ctx.out << "n=" << a.n << " sigma=" << io::format_double(a.sigma) << " trials=" << a.trials
          << " seed=" << a.seed << " beta=" << io::format_double(a.beta) << '\n';
  ctx.out << std::left << std::setw(11) << "method" << std::setw(7) << "p" << std::right << std::setw(12)
          << "tau_w mean" << std::setw(10) << "std" << std::setw(12) << "tau mean" << std::setw(10) << "std"
          << '\n';
  ctx.out << std::fixed << std::setprecision(4);
  for (const auto& r : result.summary)
    ctx.out << std::left << std::setw(11) << rankagg::to_string(r.method) << std::setw(7) << io::format_double(r.p)
            << std::right << std::setw(12) << r.mean_weighted << std::setw(10) << r.std_weighted << std::setw(12)
            << r.mean_unweighted << std::setw(10) << r.std_unweighted << '\n';
  ctx.out << std::defaultfloat;
}

// --- validate ---------------------------------------------------------------

struct ValidateArgs {
  std::string input;
};

void run_validate(const Context& ctx, const ValidateArgs& a) {
  const Hypergraph h = io::load_hypergraph(a.input);
  const bool independent = h.edge_independent();
  const bool trivial = h.trivial_weights();
  if (ctx.json) {
    ordered_json doc;
    doc["valid"] = true;
    doc["vertices"] = h.num_vertices();
    doc["edges"] = h.num_edges();
    doc["edge_independent"] = independent;
    doc["trivial_weights"] = trivial;
    ctx.out << dump(doc);
    return;
  }
  ctx.out << "valid: " << h.num_vertices() << " vertices, " << h.num_edges() << " edges, "
          << (trivial ? "trivial" : independent ? "edge-independent" : "edge-dependent") << " vertex weights\n";
}

// --- demo -------------------------------------------------------------------

std::string fraction_tuple(const Vector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_fraction(v(i));
  return s + ")";
}

void run_demo(const Context& ctx) {
  const Hypergraph h = fixtures::h3();
  const auto& names = h.vertex_names();
  const auto P = transition_matrix(h);
  const auto rho = stationary_rho(h);
  const auto verdict = reversibility(P, rho.pi);
  const auto kolmogorov = kolmogorov_check(P, 6);
  const auto lap = laplacian(P, rho.pi);
  const auto spectrum = eigenvalues_symmetric(lap.L);
  const auto cheeger = check_cheeger(h);
  const auto cut = cheeger_constant(P, rho.pi);
  const auto pair_name = [&names](std::pair<std::size_t, std::size_t> p) {
    return "(" + names[p.first] + ", " + names[p.second] + ")";
  };

  if (ctx.json) {
    ordered_json doc;
    doc["vertices"] = names;
    doc["P"] = matrix_rows(P.matrix());
    doc["pi"] = by_vertex(names, rho.pi);
    doc["pi_fractions"] = ordered_json::object();
    for (std::size_t v = 0; v < names.size(); ++v)
      doc["pi_fractions"][names[v]] = to_fraction(rho.pi(static_cast<Eigen::Index>(v)));
    doc["rho"] = std::vector<double>(rho.rho.data(), rho.rho.data() + rho.rho.size());
    doc["naive"] = by_vertex(names, naive_stationary(h));
    doc["reversible"] = verdict.reversible;
    doc["worst_pair"] = {names[verdict.worst_pair.first], names[verdict.worst_pair.second]};
    doc["violation"] = verdict.violation;
    std::vector<std::string> cycle;
    if (kolmogorov.witness)
      for (std::size_t v : *kolmogorov.witness) cycle.push_back(names[v]);
    doc["kolmogorov_witness"] = cycle;
    doc["laplacian_eigenvalues"] = spectrum;
    doc["cheeger"] = {{"phi", cheeger.phi}, {"lambda", cheeger.lambda}, {"holds", cheeger.holds}};
    ctx.out << dump(doc);
    return;
  }

  auto& out = ctx.out;
  out << "H3: e1 = {v1:2, v2:1, v3:1}, e2 = {v1:1, v3:1, v4:1}, omega = 1\n\n";
  out << "transition matrix P\n" << std::setw(6) << "";
  for (const auto& n : names) out << std::setw(8) << n;
  out << '\n';
  for (std::size_t r = 0; r < P.size(); ++r) {
    out << std::setw(6) << names[r];
    for (std::size_t c = 0; c < P.size(); ++c) out << std::setw(8) << to_fraction(P(r, c));
    out << '\n';
  }
  out << "\nstationary distribution (" << to_string(rho.method) << ", residual " << rho.residual << ")\n";
  out << "pi = " << fraction_tuple(rho.pi) << '\n';
  out << "rho = " << fraction_tuple(rho.rho) << '\n';
  out << "d(v)/sum d = " << fraction_tuple(naive_stationary(h)) << "  (ignores vertex weights)\n\n";

  out << "reversible: " << (verdict.reversible ? "yes" : "no") << "; worst pair " << pair_name(verdict.worst_pair)
      << " off by " << to_fraction(verdict.violation) << '\n';
  for (const auto& [pair, gap] : verdict.violations)
    out << "  " << pair_name(pair) << "  |pi_u p_uv - pi_v p_vu| = " << to_fraction(gap) << '\n';
  if (kolmogorov.witness) {
    out << "Kolmogorov witness cycle:";
    for (std::size_t v : *kolmogorov.witness) out << ' ' << names[v];
    out << '\n';
  }

  out << "\nLaplacian spectrum:";
  for (double ev : spectrum) out << ' ' << std::setprecision(6) << (std::abs(ev) < 1e-12 ? 0.0 : ev);
  out << "\nCheeger: phi = " << cheeger.phi << " at S = {";
  for (std::size_t k = 0; k < cut.subset.size(); ++k) out << (k ? ", " : "") << names[cut.subset[k]];
  out << "}, lambda = " << cheeger.lambda << "; phi^2/2 <= lambda <= 2 phi "
      << (cheeger.holds ? "holds" : "fails") << '\n'
      << std::setprecision(6);
}

int run(CLI::App& app, Context& ctx, const std::string& config_path,
        const std::vector<std::pair<CLI::App*, std::function<void()>>>& commands) {
  for (const auto& [sub, action] : commands) {
    if (!sub->parsed()) continue;
    if (!config_path.empty()) apply_config(config_path, *sub);
    action();
    return kExitOk;
  }
  ctx.err << app.help();
  return kExitUsage;
}

}  // namespace

std::string to_fraction(double x, long max_den) {
  if (!std::isfinite(x)) return std::to_string(x);
  const bool negative = x < 0.0;
  const double target = std::abs(x);
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = target;
  for (int i = 0; i < 64; ++i) {
    const double a = std::floor(r);
    if (a > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - a;
    if (frac < 1e-12 || std::abs(target - static_cast<double>(h1) / static_cast<double>(k1)) <= 1e-12 * std::max(1.0, target))
      break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return io::format_double(x);
  std::string s = (negative && h1 != 0 ? "-" : "") + std::to_string(h1);
  if (k1 != 1) s += "/" + std::to_string(k1);
  return s;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx{std::vector<std::string>(argv, argv + argc), out, err};

  CLI::App app{"Random walks, stationary distributions and spectral bounds for hypergraphs with edge-dependent "
               "vertex weights",
               "hyperwalk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", HYPERWALK_VERSION);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file of option defaults; command-line flags win")
      ->check(CLI::ExistingFile);
  app.add_flag("--json", ctx.json, "Machine-readable JSON on stdout");

  TransitionArgs ta;
  auto* transition = app.add_subcommand("transition", "Transition matrix as CSV (JSON with --json)");
  transition->add_option("--input,-i", ta.input, "Hypergraph file (JSON or text)")->check(CLI::ExistingFile);
  transition->add_option("--kind", ta.kind, "lazy, nonlazy or restart")->capture_default_str();
  transition->add_option("--beta", ta.beta, "Restart probability")->capture_default_str();
  transition->add_option("--restart-vertex", ta.restart_vertex, "Restart to this vertex instead of uniformly");
  transition->add_option("--out,-o", ta.out, "Write to FILE (plus FILE.manifest.json)");

  StationaryArgs sa;
  auto* stationary = app.add_subcommand("stationary", "Stationary distribution as JSON");
  stationary->add_option("--input,-i", sa.input, "Hypergraph file")->check(CLI::ExistingFile);
  stationary->add_option("--method", sa.method, "rho, direct or auto")->capture_default_str();
  stationary->add_option("--out,-o", sa.out, "Write to FILE (plus FILE.manifest.json)");

  SpectralArgs pa;
  auto* spectral = app.add_subcommand("spectral", "Laplacian spectrum, Cheeger constant and mixing bound as JSON");
  spectral->add_option("--input,-i", pa.input, "Hypergraph file")->check(CLI::ExistingFile);
  spectral->add_option("--eps", pa.eps, "Mixing-time accuracy, in (0, 1/2)")->capture_default_str();
  spectral->add_flag("--check-cheeger", pa.check_cheeger, "Add the Cheeger inequality verdict");
  spectral->add_option("--out,-o", pa.out, "Write to FILE (plus FILE.manifest.json)");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Clique-graph reductions with a verdict block, as JSON");
  reduce->add_option("--input,-i", ra.input, "Hypergraph file")->check(CLI::ExistingFile);
  reduce->add_option("--mode", ra.mode, "eqind, sandwich or nonlazy")->capture_default_str();
  reduce->add_option("--out,-o", ra.out, "Write to FILE (plus FILE.manifest.json)");

  SimulateArgs ma;
  auto* sim = app.add_subcommand("simulate", "Sample a lazy-walk trajectory");
  sim->add_option("--input,-i", ma.input, "Hypergraph file")->check(CLI::ExistingFile);
  sim->add_option("--start", ma.start, "Start vertex");
  sim->add_option("--steps", ma.steps, "Number of moves")->capture_default_str();
  sim->add_option("--seed", ma.seed, "PRNG seed (mt19937_64)")->capture_default_str();
  sim->add_option("--out,-o", ma.out, "Write to FILE (plus FILE.manifest.json)");

  RankaggArgs ka;
  auto* rank = app.add_subcommand("rankagg", "Synthetic rank-aggregation experiment, or rank supplied matches");
  rank->add_option("--n", ka.n, "Number of players")->capture_default_str();
  rank->add_option("--sigma", ka.sigma, "Score noise")->capture_default_str();
  rank->add_option("--p", ka.ps, "Inclusion probabilities, comma separated")->delimiter(',');
  rank->add_option("--trials", ka.trials, "Trials per p")->capture_default_str();
  rank->add_option("--seed", ka.seed, "Base seed; trial t uses seed + t")->capture_default_str();
  rank->add_option("--beta", ka.beta, "Restart probability")->capture_default_str();
  rank->add_option("--out,-o", ka.out, "Per-trial CSV (or rankings JSON with --matches)");
  rank->add_option("--summary", ka.summary, "Per-(method, p) summary CSV");
  rank->add_option("--matches", ka.matches, "Rank the matches in this JSON file instead")->check(CLI::ExistingFile);
  rank->add_option("--emit-matches", ka.emit_matches, "Also write the generated matches for the first p");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check a hypergraph file");
  validate->add_option("--input,-i", va.input, "Hypergraph file")->check(CLI::ExistingFile);

  auto* demo = app.add_subcommand("demo", "Walk through the four-vertex H3 example");

  const auto need_input = [](const std::string& input) {
    if (input.empty()) throw UsageError("--input is required");
  };

  try {
    app.parse(argc, argv);
    return run(app, ctx, config_path,
               {{transition, [&] { need_input(ta.input); run_transition(ctx, ta); }},
                {stationary, [&] { need_input(sa.input); run_stationary(ctx, sa); }},
                {spectral, [&] { need_input(pa.input); run_spectral(ctx, pa); }},
                {reduce, [&] { need_input(ra.input); run_reduce(ctx, ra); }},
                {sim,
                 [&] {
                   need_input(ma.input);
                   if (ma.start.empty()) throw UsageError("--start is required");
                   run_simulate(ctx, ma);
                 }},
                {rank, [&] { run_rankagg(ctx, ka); }},
                {validate, [&] { need_input(va.input); run_validate(ctx, va); }},
                {demo, [&] { run_demo(ctx); }}});
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hyperwalk::cli
