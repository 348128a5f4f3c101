#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk::rankagg {

/// Players are numbered 1..n; player i has intrinsic skill i, so the true
/// ranking (best first) is n, n-1, ..., 1.
using PlayerId = std::size_t;

struct Match {
  std::vector<PlayerId> participants;
  std::vector<double> scores;  ///< parallel to participants; higher is better

  friend bool operator==(const Match&, const Match&) = default;
};

struct GeneratorParams {
  double sigma = 1.0;
  double p = 0.05;
  std::uint64_t seed = 0;
  double scale_min = 1.0 / 3.0;
  double scale_max = 3.0;

  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

struct MatchData {
  std::size_t n = 0;
  std::vector<Match> matches;
  std::optional<GeneratorParams> generator;
  /// Known best-first ordering, when available (external data only).
  std::optional<std::vector<PlayerId>> truth;

  friend bool operator==(const MatchData&, const MatchData&) = default;
};

/// Draws matches until every player has appeared at least once. Each match
/// includes every player independently with probability p (draws with fewer
/// than two players are discarded), picks a scale c uniformly in
/// [scale_min, scale_max], and scores player i as c * N(0.2 i, sigma).
MatchData generate(std::size_t n, double sigma, double p, std::uint64_t seed);

/// Throws InvalidArgument describing the first structural problem.
void validate(const MatchData& data);

/// One hyperedge per match: omega = population std of the scores + 1,
/// gamma = exp(score). Throws ScoreOverflow when |score| > 700. The result may
/// be disconnected; the restart walk does not need irreducibility.
Hypergraph match_hypergraph(const MatchData& data);

enum class Method { HypergraphRWR, CliqueRWR, MC3 };

std::string_view to_string(Method method);

struct RankingResult {
  Method method;
  std::vector<double> scores;   ///< stationary mass, indexed by player id - 1
  std::vector<PlayerId> order;  ///< descending score, ties by ascending id
  double residual;              ///< stationary solve residual
};

inline constexpr double kDefaultRestart = 0.4;

/// Restart walk (uniform restart) on match_hypergraph().
RankingResult rank_hypergraph(const MatchData& data, double beta = kDefaultRestart);
/// Restart walk on the clique graph with weights sum omega gamma_e(u) gamma_e(v),
/// after scaling every edge to delta(e) = 1.
RankingResult rank_clique(const MatchData& data, double beta = kDefaultRestart);
/// MC3: from i pick a match containing i uniformly, then a participant j of it
/// uniformly; move to j if j outscored i in that match, otherwise stay.
RankingResult rank_mc3(const MatchData& data, double beta = kDefaultRestart);

RankingResult rank(Method method, const MatchData& data, double beta = kDefaultRestart);

/// n, n-1, ..., 1.
std::vector<PlayerId> true_order(std::size_t n);

/// Kendall tau between two orderings of the same items (best first).
/// Unweighted: (concordant - discordant) / (n choose 2).
/// Weighted: a discordant or concordant pair at positions i, j (0-based) of a
/// reference ranking counts 1/(i+1) + 1/(j+1); the result is normalized by the
/// total weight and averaged over using each argument as the reference, which
/// keeps it symmetric. Throws ElementMismatch.
double kendall_tau(std::span<const PlayerId> order, std::span<const PlayerId> truth, bool weighted);

struct ExperimentParams {
  std::size_t n = 100;
  double sigma = 1.0;
  std::vector<double> ps{0.03, 0.05, 0.07};
  std::size_t trials = 30;
  std::uint64_t seed = 42;
  double beta = kDefaultRestart;
};

struct TrialRow {
  Method method;
  double p;
  std::size_t trial;
  double tau_weighted;
  double tau_unweighted;
  std::size_t matches;
};

struct SummaryRow {
  Method method;
  double p;
  std::size_t trials;
  double mean_weighted;
  double std_weighted;  ///< population standard deviation
  double mean_unweighted;
  double std_unweighted;
};

struct ExperimentResult {
  std::vector<TrialRow> trials;
  std::vector<SummaryRow> summary;

  const SummaryRow& find(Method method, double p) const;
};

/// Trial t of every p uses seed + t.
ExperimentResult experiment(const ExperimentParams& params);

/// method,p,trial,tau_weighted,tau_unweighted
std::string trials_csv(const ExperimentResult& result);
std::string summary_csv(const ExperimentResult& result);

MatchData parse_matches(std::string_view json_text);
std::string emit_matches(const MatchData& data);

}  // namespace hyperwalk::rankagg
