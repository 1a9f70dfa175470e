#ifndef ARENA_ENGINE_HPP_
#define ARENA_ENGINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arena/agents.hpp"
#include "arena/game.hpp"
#include "arena/gt.hpp"

namespace arena {

// One match: an ordered agent pair on a game instance. File references are
// paths relative to the experiment output root, so editing a referenced agent
// or game file affects every job that points at it.
struct JobSpec {
  std::string match_id;
  std::string row_agent_file;
  std::string col_agent_file;
  std::string game_file;
  std::string solution_file;
  std::uint64_t master_seed = 0;
  long total_iterations = 100000;
  long recorded_iterations = 10000;
};

struct IterationRow {
  long t = 0;
  Strategy s1;
  int a1 = 0;
  double r1 = 0.0;
  Strategy s2;
  int a2 = 0;
  double r2 = 0.0;
  std::string beliefs1, beliefs2;
};

struct RunRecord {
  std::string match_id;
  std::uint64_t master_seed = 0;
  int rows = 0, cols = 0;  // game dimensions, for rebuilding distributions
  std::vector<IterationRow> iterations;
};

// Equilibria (with Pareto flags) plus both maxmin solutions for a game.
SolutionFile precompute_solutions(const Game& g);

// Drives both agents for total_iterations, sampling one action per player
// per iteration from independent derived streams, and keeps the last
// recorded_iterations. A pure function of its inputs.
RunRecord run_match(const JobSpec& job, const Game& game, const AgentConfig& row_cfg,
                    const AgentConfig& col_cfg, const SolutionFile* solutions);

// Loads the referenced files (relative to base_dir) and runs the match.
RunRecord run_match_files(const JobSpec& job, const std::string& base_dir);

// One job per ordered algorithm pair per game id: |A|^2 * |G| jobs. Agent
// config refs follow the "agents/<id>.agent" convention under the output
// root; game/solution refs likewise.
std::vector<JobSpec> make_jobs(const std::vector<std::string>& algorithms,
                               const std::vector<std::string>& game_ids,
                               std::uint64_t master_seed, long total_iterations,
                               long recorded_iterations);

enum class JobStatus { kDone, kSkipped, kFailed };

struct JobOutcome {
  std::string match_id;
  JobStatus status = JobStatus::kDone;
  double wall_seconds = 0.0;
  std::string error;
};

struct ExecutionReport {
  std::vector<JobOutcome> outcomes;  // sorted by match id
  int failures = 0;
};

// Runs jobs on a local worker pool. Outputs land in <base_dir>/runs. Every
// job is isolated: a failure produces a .error file and a failed outcome
// without disturbing the others. Run files are a pure function of the job,
// so worker count and scheduling order never change the results. With
// skip_existing, jobs whose run file is already present are not re-run.
ExecutionReport execute_jobs(const std::vector<JobSpec>& jobs, int workers,
                             const std::string& base_dir, bool skip_existing);

void write_job(const JobSpec& job, std::ostream& out);
JobSpec read_job(std::istream& in);
void save_job(const JobSpec& job, const std::string& path);
JobSpec load_job(const std::string& path);

// Run record CSV: schema line, then
//   iter,p1_strategy,p1_action,p1_reward,p2_strategy,p2_action,p2_reward
// with strategies as semicolon-joined decimals. Beliefs go to a sidecar file
// (<run>.beliefs) with lines iter,player,beliefs.
void write_run_record(const RunRecord& rec, std::ostream& out);
void write_run_beliefs(const RunRecord& rec, std::ostream& out);
RunRecord read_run_record(std::istream& in);
void save_run_record(const RunRecord& rec, const std::string& csv_path);
RunRecord load_run_record(const std::string& csv_path);

void write_report(const ExecutionReport& report, std::ostream& out);

inline constexpr const char* kRunSchema = "# schema arena.run v1";
inline constexpr const char* kBeliefSchema = "# schema arena.beliefs v1";
inline constexpr const char* kReportSchema = "# schema arena.report v1";

}  // namespace arena

#endif  // ARENA_ENGINE_HPP_
