#include "arena/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "arena/rng.hpp"
#include "arena/text_io.hpp"

namespace arena {

namespace fs = std::filesystem;

SolutionFile precompute_solutions(const Game& g) { return solve_game(g); }

RunRecord run_match(const JobSpec& job, const Game& game, const AgentConfig& row_cfg,
                    const AgentConfig& col_cfg, const SolutionFile* solutions) {
  if (job.recorded_iterations > job.total_iterations || job.recorded_iterations < 0)
    throw InvalidInputError("job " + job.match_id + ": recorded > total iterations");

  AgentView row_view{1, game.rows, game.cols, &game, solutions};
  AgentView col_view{2, game.cols, game.rows, &game, solutions};
  const auto row_agent = make_agent(row_cfg, row_view, rng::derive_seed(job.master_seed, "row-agent"));
  const auto col_agent = make_agent(col_cfg, col_view, rng::derive_seed(job.master_seed, "column-agent"));
  rng::Stream row_sampler = rng::Stream::derived(job.master_seed, "row-sampler");
  rng::Stream col_sampler = rng::Stream::derived(job.master_seed, "column-sampler");

  RunRecord rec;
  rec.match_id = job.match_id;
  rec.master_seed = job.master_seed;
  rec.rows = game.rows;
  rec.cols = game.cols;
  rec.iterations.reserve(static_cast<std::size_t>(job.recorded_iterations));

  const long first_recorded = job.total_iterations - job.recorded_iterations;
  for (long t = 0; t < job.total_iterations; ++t) {
    Strategy s1 = row_agent->act(t);
    Strategy s2 = col_agent->act(t);
    if (!is_strategy(s1) || !is_strategy(s2))
      throw InvalidInputError("job " + job.match_id + ": agent submitted an invalid strategy at t=" +
                              std::to_string(t));
    const int a1 = row_sampler.categorical(s1);
    const int a2 = col_sampler.categorical(s2);
    const double r1 = game.u1(a1, a2);
    const double r2 = game.u2(a1, a2);
    row_agent->observe({t, a1, a2, r1});
    col_agent->observe({t, a2, a1, r2});

    if (t >= first_recorded) {
      IterationRow row;
      row.t = t;
      row.s1 = std::move(s1);
      row.a1 = a1;
      row.r1 = r1;
      row.s2 = std::move(s2);
      row.a2 = a2;
      row.r2 = r2;
      row.beliefs1 = row_agent->beliefs();
      row.beliefs2 = col_agent->beliefs();
      rec.iterations.push_back(std::move(row));
    }
  }
  return rec;
}

RunRecord run_match_files(const JobSpec& job, const std::string& base_dir) {
  const auto resolve = [&](const std::string& ref) { return (fs::path(base_dir) / ref).string(); };
  const Game game = load_game(resolve(job.game_file));
  const AgentConfig row_cfg = load_agent_config(resolve(job.row_agent_file));
  const AgentConfig col_cfg = load_agent_config(resolve(job.col_agent_file));

  SolutionFile solutions;
  const SolutionFile* sol_ptr = nullptr;
  if (!job.solution_file.empty() &&
      (info_model(row_cfg.algorithm).solutions_access ||
       info_model(col_cfg.algorithm).solutions_access)) {
    solutions = load_solution(resolve(job.solution_file));
    sol_ptr = &solutions;
  }
  return run_match(job, game, row_cfg, col_cfg, sol_ptr);
}

std::vector<JobSpec> make_jobs(const std::vector<std::string>& algorithms,
                               const std::vector<std::string>& game_ids,
                               std::uint64_t master_seed, long total_iterations,
                               long recorded_iterations) {
  std::vector<JobSpec> jobs;
  jobs.reserve(algorithms.size() * algorithms.size() * game_ids.size());
  for (const auto& row : algorithms)
    for (const auto& col : algorithms)
      for (const auto& gid : game_ids) {
        JobSpec job;
        job.match_id = row + "--" + col + "--" + gid;
        job.row_agent_file = "agents/" + row + ".agent";
        job.col_agent_file = "agents/" + col + ".agent";
        job.game_file = "games/" + gid + ".game";
        job.solution_file = "solutions/" + gid + ".sol";
        job.master_seed = rng::derive_seed(master_seed, "job/" + job.match_id);
        job.total_iterations = total_iterations;
        job.recorded_iterations = recorded_iterations;
        jobs.push_back(std::move(job));
      }
  return jobs;
}

ExecutionReport execute_jobs(const std::vector<JobSpec>& jobs, int workers,
                             const std::string& base_dir, bool skip_existing) {
  const fs::path runs_dir = fs::path(base_dir) / "runs";
  fs::create_directories(runs_dir);

  std::vector<JobOutcome> outcomes(jobs.size());
  std::atomic<std::size_t> cursor{0};

  auto work = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= jobs.size()) return;
      const JobSpec& job = jobs[i];
      JobOutcome& outcome = outcomes[i];
      outcome.match_id = job.match_id;
      const fs::path csv_path = runs_dir / (job.match_id + ".csv");
      if (skip_existing && fs::exists(csv_path)) {
        outcome.status = JobStatus::kSkipped;
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      try {
        const RunRecord rec = run_match_files(job, base_dir);
        save_run_record(rec, csv_path.string());
      } catch (const std::exception& e) {
        outcome.status = JobStatus::kFailed;
        outcome.error = e.what();
        write_text_file((runs_dir / (job.match_id + ".error")).string(),
                        "match_id: " + job.match_id + "\nerror: " + e.what() + "\n");
      }
      outcome.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  const int n_threads = std::max(1, workers);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  ExecutionReport report;
  report.outcomes = std::move(outcomes);
  std::sort(report.outcomes.begin(), report.outcomes.end(),
            [](const JobOutcome& a, const JobOutcome& b) { return a.match_id < b.match_id; });
  for (const auto& o : report.outcomes)
    if (o.status == JobStatus::kFailed) ++report.failures;
  return report;
}

void write_job(const JobSpec& job, std::ostream& out) {
  out << "match_id " << job.match_id << '\n'
      << "row_agent " << job.row_agent_file << '\n'
      << "col_agent " << job.col_agent_file << '\n'
      << "game " << job.game_file << '\n'
      << "solutions " << job.solution_file << '\n'
      << "seed " << job.master_seed << '\n'
      << "total_iterations " << job.total_iterations << '\n'
      << "recorded_iterations " << job.recorded_iterations << '\n';
}

JobSpec read_job(std::istream& in) {
  JobSpec job;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto space = line.find(' ');
    if (space == std::string::npos) throw InvalidInputError("bad job line: " + line);
    const std::string key = line.substr(0, space);
    const std::string value = line.substr(space + 1);
    if (key == "match_id") job.match_id = value;
    else if (key == "row_agent") job.row_agent_file = value;
    else if (key == "col_agent") job.col_agent_file = value;
    else if (key == "game") job.game_file = value;
    else if (key == "solutions") job.solution_file = value;
    else if (key == "seed") job.master_seed = std::stoull(value);
    else if (key == "total_iterations") job.total_iterations = std::stol(value);
    else if (key == "recorded_iterations") job.recorded_iterations = std::stol(value);
    else throw InvalidInputError("unknown job key: " + key);
  }
  return job;
}

void save_job(const JobSpec& job, const std::string& path) {
  std::ostringstream ss;
  write_job(job, ss);
  write_text_file(path, ss.str());
}

JobSpec load_job(const std::string& path) {
  std::istringstream ss(read_text_file(path));
  return read_job(ss);
}

void write_run_record(const RunRecord& rec, std::ostream& out) {
  out << kRunSchema << '\n';
  out << "# match " << rec.match_id << " seed " << rec.master_seed << " actions " << rec.rows
      << ' ' << rec.cols << '\n';
  out << "iter,p1_strategy,p1_action,p1_reward,p2_strategy,p2_action,p2_reward\n";
  for (const auto& row : rec.iterations) {
    out << row.t << ',' << join_doubles(row.s1, ';') << ',' << row.a1 << ','
        << format_double(row.r1) << ',' << join_doubles(row.s2, ';') << ',' << row.a2 << ','
        << format_double(row.r2) << '\n';
  }
}

void write_run_beliefs(const RunRecord& rec, std::ostream& out) {
  out << kBeliefSchema << '\n';
  out << "iter,player,beliefs\n";
  for (const auto& row : rec.iterations) {
    out << row.t << ",1," << row.beliefs1 << '\n';
    out << row.t << ",2," << row.beliefs2 << '\n';
  }
}

RunRecord read_run_record(std::istream& in) {
  RunRecord rec;
  std::string line;
  if (!std::getline(in, line) || line != kRunSchema)
    throw InvalidInputError("run record: bad schema line");
  if (!std::getline(in, line) || line.rfind("# match ", 0) != 0)
    throw InvalidInputError("run record: bad match line");
  {
    std::istringstream ls(line);
    std::string hash, word;
    ls >> hash >> word >> rec.match_id >> word >> rec.master_seed >> word >> rec.rows >> rec.cols;
  }
  if (!std::getline(in, line))
    throw InvalidInputError("run record: missing header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 7) throw InvalidInputError("run record: bad row: " + line);
    IterationRow row;
    row.t = std::stol(cells[0]);
    row.s1 = parse_doubles(cells[1], ';');
    row.a1 = std::stoi(cells[2]);
    row.r1 = std::stod(cells[3]);
    row.s2 = parse_doubles(cells[4], ';');
    row.a2 = std::stoi(cells[5]);
    row.r2 = std::stod(cells[6]);
    rec.iterations.push_back(std::move(row));
  }
  return rec;
}

void save_run_record(const RunRecord& rec, const std::string& csv_path) {
  std::ostringstream main_ss;
  write_run_record(rec, main_ss);
  write_text_file(csv_path, main_ss.str());
  std::ostringstream belief_ss;
  write_run_beliefs(rec, belief_ss);
  write_text_file(csv_path + ".beliefs", belief_ss.str());
}

RunRecord load_run_record(const std::string& csv_path) {
  std::istringstream ss(read_text_file(csv_path));
  return read_run_record(ss);
}

void write_report(const ExecutionReport& report, std::ostream& out) {
  out << kReportSchema << '\n';
  out << "match_id,status,wall_seconds,error\n";
  for (const auto& o : report.outcomes) {
    const char* status = o.status == JobStatus::kDone     ? "done"
                         : o.status == JobStatus::kSkipped ? "skipped"
                                                           : "failed";
    std::string err = o.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    out << o.match_id << ',' << status << ',' << format_double(o.wall_seconds) << ',' << err
        << '\n';
  }
}

}  // namespace arena
