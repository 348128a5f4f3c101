#include "hyperwalk/rankagg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hyperwalk/io.hpp"
#include "hyperwalk/reduction.hpp"
#include "hyperwalk/stationary.hpp"
#include "hyperwalk/walk.hpp"

namespace hyperwalk::rankagg {

namespace {

constexpr double kMaxScoreMagnitude = 700.0;
constexpr double kSkillStep = 0.2;

std::string player_name(PlayerId id) { return std::to_string(id); }

RankingResult ranked(Method method, const TransitionMatrix& walk, double beta) {
  const auto restarted = restart_matrix(walk, beta);
  const auto stationary = stationary_direct(restarted);

  RankingResult out{method, {}, {}, stationary.residual};
  const auto n = static_cast<std::size_t>(stationary.pi.size());
  out.scores.assign(stationary.pi.data(), stationary.pi.data() + n);
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), PlayerId{1});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&out](PlayerId a, PlayerId b) { return out.scores[a - 1] > out.scores[b - 1]; });
  return out;
}

double population_std(std::span<const double> xs) {
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::HypergraphRWR: return "hypergraph";
    case Method::CliqueRWR: return "clique";
    case Method::MC3: return "mc3";
  }
  return "unknown";
}

MatchData generate(std::size_t n, double sigma, double p, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "need at least two players (n = " + std::to_string(n) + ")");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw Error(ErrorKind::InvalidArgument, "sigma must be positive (got " + std::to_string(sigma) + ")");
  if (!(p > 0.0 && p < 1.0))
    throw Error(ErrorKind::InvalidArgument, "p must lie in (0, 1) (got " + std::to_string(p) + ")");

  MatchData data;
  data.n = n;
  data.generator = GeneratorParams{sigma, p, seed, 1.0 / 3.0, 3.0};

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution include(p);
  std::uniform_real_distribution<double> scale(data.generator->scale_min, data.generator->scale_max);
  std::normal_distribution<double> noise(0.0, sigma);

  std::vector<bool> covered(n + 1, false);
  std::size_t uncovered = n;
  std::vector<PlayerId> chosen;
  while (uncovered > 0) {
    chosen.clear();
    for (PlayerId i = 1; i <= n; ++i)
      if (include(rng)) chosen.push_back(i);
    if (chosen.size() < 2) continue;

    const double c = scale(rng);
    Match match;
    match.participants = chosen;
    match.scores.reserve(chosen.size());
    for (PlayerId i : chosen) match.scores.push_back(c * (kSkillStep * static_cast<double>(i) + noise(rng)));
    for (PlayerId i : chosen) {
      if (!covered[i]) {
        covered[i] = true;
        --uncovered;
      }
    }
    data.matches.push_back(std::move(match));
  }
  return data;
}

void validate(const MatchData& data) {
  if (data.n < 2) throw Error(ErrorKind::InvalidArgument, "need at least two players");
  std::vector<bool> seen(data.n + 1, false);
  for (std::size_t m = 0; m < data.matches.size(); ++m) {
    const auto& match = data.matches[m];
    const std::string label = "match " + std::to_string(m);
    if (match.participants.size() < 2) throw Error(ErrorKind::InvalidArgument, label + " has fewer than two players");
    if (match.participants.size() != match.scores.size())
      throw Error(ErrorKind::InvalidArgument, label + " has " + std::to_string(match.scores.size()) + " scores for " +
                                                  std::to_string(match.participants.size()) + " players");
    std::vector<PlayerId> sorted = match.participants;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidArgument, label + " lists a player twice");
    for (PlayerId id : sorted) {
      if (id < 1 || id > data.n)
        throw Error(ErrorKind::InvalidArgument, label + " has player " + std::to_string(id) + " outside 1.." +
                                                    std::to_string(data.n));
      seen[id] = true;
    }
    for (double s : match.scores)
      if (!std::isfinite(s)) throw Error(ErrorKind::InvalidArgument, label + " has a non-finite score");
  }
  for (PlayerId id = 1; id <= data.n; ++id)
    if (!seen[id]) throw Error(ErrorKind::InvalidArgument, "player " + std::to_string(id) + " appears in no match");
}

Hypergraph match_hypergraph(const MatchData& data) {
  validate(data);
  HypergraphSpec spec;
  spec.vertices.reserve(data.n);
  for (PlayerId id = 1; id <= data.n; ++id) spec.vertices.push_back(player_name(id));
  for (std::size_t m = 0; m < data.matches.size(); ++m) {
    const auto& match = data.matches[m];
    EdgeSpec edge;
    edge.weight = population_std(match.scores) + 1.0;
    for (std::size_t k = 0; k < match.participants.size(); ++k) {
      const double score = match.scores[k];
      if (std::abs(score) > kMaxScoreMagnitude)
        throw Error(ErrorKind::ScoreOverflow, "match " + std::to_string(m) + ", player " +
                                                  std::to_string(match.participants[k]) + ": score " +
                                                  std::to_string(score) + " exceeds +/-700");
      edge.members.emplace_back(player_name(match.participants[k]), std::exp(score));
    }
    spec.edges.push_back(std::move(edge));
  }
  return Hypergraph::build(spec, Hypergraph::Options{.require_connected = false});
}

RankingResult rank_hypergraph(const MatchData& data, double beta) {
  return ranked(Method::HypergraphRWR, transition_matrix(match_hypergraph(data)), beta);
}

RankingResult rank_clique(const MatchData& data, double beta) {
  const Hypergraph h = match_hypergraph(data);
  std::vector<double> unit(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) unit[e] = 1.0 / h.edge_degree(e);
  const auto graph = clique_product_weights(h.rescale_edges(unit));
  return ranked(Method::CliqueRWR, graph_random_walk(graph), beta);
}

RankingResult rank_mc3(const MatchData& data, double beta) {
  validate(data);
  const auto n = static_cast<Eigen::Index>(data.n);
  std::vector<std::size_t> appearances(data.n + 1, 0);
  for (const auto& match : data.matches)
    for (PlayerId id : match.participants) ++appearances[id];

  Matrix P = Matrix::Zero(n, n);
  for (const auto& match : data.matches) {
    const double pick_player = 1.0 / static_cast<double>(match.participants.size());
    for (std::size_t a = 0; a < match.participants.size(); ++a) {
      const PlayerId i = match.participants[a];
      const double pick_match = 1.0 / static_cast<double>(appearances[i]);
      for (std::size_t b = 0; b < match.participants.size(); ++b) {
        const PlayerId j = match.participants[b];
        // Ties and self-picks keep the walker in place.
        const PlayerId target = match.scores[b] > match.scores[a] ? j : i;
        P(i - 1, target - 1) += pick_match * pick_player;
      }
    }
  }
  std::vector<std::string> names;
  for (PlayerId id = 1; id <= data.n; ++id) names.push_back(player_name(id));
  TransitionMatrix walk(std::make_shared<const std::vector<std::string>>(std::move(names)), std::move(P));
  return ranked(Method::MC3, walk, beta);
}

RankingResult rank(Method method, const MatchData& data, double beta) {
  switch (method) {
    case Method::HypergraphRWR: return rank_hypergraph(data, beta);
    case Method::CliqueRWR: return rank_clique(data, beta);
    case Method::MC3: return rank_mc3(data, beta);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown ranking method");
}

std::vector<PlayerId> true_order(std::size_t n) {
  std::vector<PlayerId> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = n - k;
  return order;
}

double kendall_tau(std::span<const PlayerId> order, std::span<const PlayerId> truth, bool weighted) {
  const std::size_t n = order.size();
  if (truth.size() != n)
    throw Error(ErrorKind::ElementMismatch, "rankings have " + std::to_string(n) + " and " +
                                                std::to_string(truth.size()) + " items");
  if (n < 2) throw Error(ErrorKind::ElementMismatch, "need at least two items");

  // Dense position maps keyed by item id.
  const PlayerId max_id = std::max(*std::max_element(order.begin(), order.end()),
                                   *std::max_element(truth.begin(), truth.end()));
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos_a(max_id + 1, kAbsent);
  std::vector<std::size_t> pos_b(max_id + 1, kAbsent);
  for (std::size_t k = 0; k < n; ++k) {
    if (pos_a[order[k]] != kAbsent) throw Error(ErrorKind::ElementMismatch, "item " + std::to_string(order[k]) + " repeated");
    pos_a[order[k]] = k;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (pos_b[truth[k]] != kAbsent) throw Error(ErrorKind::ElementMismatch, "item " + std::to_string(truth[k]) + " repeated");
    if (pos_a[truth[k]] == kAbsent)
      throw Error(ErrorKind::ElementMismatch, "item " + std::to_string(truth[k]) + " missing from the first ranking");
    pos_b[truth[k]] = k;
  }

  // Pairs are visited in ascending id order so that swapping the arguments
  // reproduces the same sums bit for bit.
  std::vector<PlayerId> ids(truth.begin(), truth.end());
  std::sort(ids.begin(), ids.end());
  const auto weight = [](std::size_t i, std::size_t j) {
    return 1.0 / static_cast<double>(i + 1) + 1.0 / static_cast<double>(j + 1);
  };
  double agree = 0.0, total = 0.0;
  double agree_a = 0.0, total_a = 0.0;  // weights from positions in `order`
  double agree_b = 0.0, total_b = 0.0;  // weights from positions in `truth`
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PlayerId x = ids[i];
      const PlayerId y = ids[j];
      const double sign = (pos_a[x] < pos_a[y]) == (pos_b[x] < pos_b[y]) ? 1.0 : -1.0;
      agree += sign;
      total += 1.0;
      const double w_a = weight(pos_a[x], pos_a[y]);
      const double w_b = weight(pos_b[x], pos_b[y]);
      agree_a += sign * w_a;
      total_a += w_a;
      agree_b += sign * w_b;
      total_b += w_b;
    }
  }
  if (!weighted) return agree / total;
  return 0.5 * (agree_a / total_a + agree_b / total_b);
}

const SummaryRow& ExperimentResult::find(Method method, double p) const {
  for (const auto& row : summary)
    if (row.method == method && row.p == p) return row;
  throw Error(ErrorKind::InvalidArgument, "no summary row for " + std::string(to_string(method)) + " at p = " +
                                              io::format_double(p));
}

ExperimentResult experiment(const ExperimentParams& params) {
  if (params.trials == 0) throw Error(ErrorKind::InvalidArgument, "need at least one trial");
  constexpr Method kMethods[] = {Method::HypergraphRWR, Method::CliqueRWR, Method::MC3};
  const auto truth = true_order(params.n);

  ExperimentResult result;
  for (double p : params.ps) {
    for (std::size_t t = 0; t < params.trials; ++t) {
      const MatchData data = generate(params.n, params.sigma, p, params.seed + t);
      for (Method method : kMethods) {
        const auto ranking = rank(method, data, params.beta);
        result.trials.push_back({method, p, t, kendall_tau(ranking.order, truth, true),
                                 kendall_tau(ranking.order, truth, false), data.matches.size()});
      }
    }
    for (Method method : kMethods) {
      SummaryRow row{method, p, params.trials, 0.0, 0.0, 0.0, 0.0};
      std::vector<double> w, u;
      for (const auto& tr : result.trials) {
        if (tr.method != method || tr.p != p) continue;
        w.push_back(tr.tau_weighted);
        u.push_back(tr.tau_unweighted);
      }
      const auto mean = [](const std::vector<double>& xs) {
        return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
      };
      row.mean_weighted = mean(w);
      row.std_weighted = population_std(w);
      row.mean_unweighted = mean(u);
      row.std_unweighted = population_std(u);
      result.summary.push_back(row);
    }
  }
  return result;
}

std::string trials_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "method,p,trial,tau_weighted,tau_unweighted\n";
  for (const auto& r : result.trials)
    out << to_string(r.method) << ',' << io::format_double(r.p) << ',' << r.trial << ','
        << io::format_double(r.tau_weighted) << ',' << io::format_double(r.tau_unweighted) << '\n';
  return out.str();
}

std::string summary_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "method,p,trials,mean_tau_weighted,std_tau_weighted,mean_tau_unweighted,std_tau_unweighted\n";
  for (const auto& r : result.summary)
    out << to_string(r.method) << ',' << io::format_double(r.p) << ',' << r.trials << ','
        << io::format_double(r.mean_weighted) << ',' << io::format_double(r.std_weighted) << ','
        << io::format_double(r.mean_unweighted) << ',' << io::format_double(r.std_unweighted) << '\n';
  return out.str();
}

MatchData parse_matches(std::string_view json_text) {
  using nlohmann::json;
  MatchData data;
  try {
    const json doc = json::parse(json_text);
    data.n = doc.at("n").get<std::size_t>();
    for (const auto& m : doc.at("matches")) {
      Match match;
      match.participants = m.at("participants").get<std::vector<PlayerId>>();
      match.scores = m.at("scores").get<std::vector<double>>();
      data.matches.push_back(std::move(match));
    }
    if (doc.contains("generator")) {
      const auto& g = doc.at("generator");
      data.generator = GeneratorParams{g.at("sigma").get<double>(), g.at("p").get<double>(),
                                       g.at("seed").get<std::uint64_t>(), g.at("scale_min").get<double>(),
                                       g.at("scale_max").get<double>()};
    }
    if (doc.contains("truth")) data.truth = doc.at("truth").get<std::vector<PlayerId>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  validate(data);
  if (data.truth && data.truth->size() != data.n)
    throw Error(ErrorKind::ElementMismatch, "truth ordering must list all " + std::to_string(data.n) + " players");
  return data;
}

std::string emit_matches(const MatchData& data) {
  nlohmann::ordered_json doc;
  doc["n"] = data.n;
  auto matches = nlohmann::ordered_json::array();
  for (const auto& m : data.matches)
    matches.push_back({{"participants", m.participants}, {"scores", m.scores}});
  doc["matches"] = std::move(matches);
  if (data.generator) {
    const auto& g = *data.generator;
    doc["generator"] = {{"sigma", g.sigma}, {"p", g.p}, {"seed", g.seed}, {"scale_min", g.scale_min},
                        {"scale_max", g.scale_max}};
  }
  if (data.truth) doc["truth"] = *data.truth;
  return doc.dump(2) + "\n";
}

}  // namespace hyperwalk::rankagg
