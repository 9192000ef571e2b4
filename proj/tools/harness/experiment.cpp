#include "harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cctype>
#include <functional>
#include <mutex>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "quasi/errors.hpp"
#include "quasi/exact.hpp"
#include "quasi/farness.hpp"
#include "quasi/random.hpp"
#include "quasi/streaming.hpp"
#include "quasi/tester.hpp"

namespace quasi::cli {
namespace {

using json = nlohmann::json;

struct Experiment {
  std::string id;
  std::string kind;
  std::size_t q = 2;
  std::size_t n = 4096;
  Letter sigma = 2;
  double epsilon = 0.1;
  std::size_t trials = 1;
  std::size_t instances = 1;
  std::vector<std::size_t> qs;
};

Experiment parse_experiment(const json& j, std::size_t index) {
  if (!j.is_object()) throw ParameterError("experiment entry must be an object");
  Experiment e;
  e.kind = j.value("kind", std::string());
  const auto& kinds = experiment_kinds();
  if (std::find(kinds.begin(), kinds.end(), e.kind) == kinds.end()) {
    std::string valid;
    for (const auto& k : kinds) valid += (valid.empty() ? "" : ", ") + k;
    throw ParameterError("unknown experiment kind '" + e.kind +
                         "'; valid kinds: " + valid);
  }
  e.id = j.value("id", e.kind + "-" + std::to_string(index));
  if (e.id.find_first_of(",\n\r") != std::string::npos) {
    throw ParameterError("experiment id may not contain commas or newlines");
  }
  e.q = j.value("q", e.q);
  e.n = j.value("n", e.n);
  e.sigma = j.value("sigma", e.sigma);
  e.epsilon = j.value("epsilon", e.epsilon);
  e.trials = j.value("trials", e.trials);
  e.instances = j.value("instances", e.instances);
  e.qs = j.value("qs", std::vector<std::size_t>{});
  if (e.qs.empty()) e.qs.push_back(e.q);
  if (e.sigma < 1) throw ParameterError("sigma must be positive");
  return e;
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(
                                                   std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

// Runs `trial(i, row)` for every trial; fills the shared columns and timing.
void run_trials(const Experiment& e, std::size_t count, std::uint64_t master,
                std::size_t exp_index, const RunOptions& options,
                const std::function<void(std::size_t, ExperimentRow&)>& trial,
                std::vector<ExperimentRow>& out) {
  std::vector<ExperimentRow> rows(count);
  parallel_for(count, options.jobs, [&](std::size_t i) {
    ExperimentRow& row = rows[i];
    row.experiment_id = e.id;
    row.q = e.q;
    row.n = e.n;
    row.sigma = e.sigma;
    row.epsilon = e.epsilon;
    row.trial = i;
    row.seed = derive_seed(master, 2 * exp_index, i);
    const auto start = std::chrono::steady_clock::now();
    trial(i, row);
    const auto stop = std::chrono::steady_clock::now();
    row.wall_time_us =
        options.timing
            ? std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
                  .count()
            : 0;
  });
  out.insert(out.end(), rows.begin(), rows.end());
}

std::string verdict_of(const Verdict& v) { return to_string(v.answer); }

}  // namespace

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds{
      "soundness", "seed_soundness", "completeness", "queries", "stream"};
  return kinds;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    char eps[64];
    const auto res = std::to_chars(eps, eps + sizeof eps, r.epsilon);
    out << r.experiment_id << ',' << r.q << ',' << r.n << ',' << r.sigma << ','
        << std::string_view(eps, static_cast<std::size_t>(res.ptr - eps)) << ','
        << r.trial << ',' << r.seed << ',' << r.verdict << ',' << r.queries_used
        << ',' << r.wall_time_us << '\n';
  }
}

std::vector<ExperimentRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParameterError("missing or unexpected CSV header");
  }
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 10) throw ParameterError("malformed CSV row: " + line);
    auto number = [&](const std::string& s, auto& value) {
      const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParameterError("malformed CSV field '" + s + "'");
      }
    };
    ExperimentRow r;
    r.experiment_id = cells[0];
    number(cells[1], r.q);
    number(cells[2], r.n);
    number(cells[3], r.sigma);
    number(cells[4], r.epsilon);
    number(cells[5], r.trial);
    number(cells[6], r.seed);
    r.verdict = cells[7];
    number(cells[8], r.queries_used);
    number(cells[9], r.wall_time_us);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ExperimentRow> run_experiments(const std::string& spec_json,
                                           const RunOptions& options) {
  std::vector<ExperimentRow> out;
  if (std::all_of(spec_json.begin(), spec_json.end(),
                  [](unsigned char c) { return std::isspace(c); })) {
    return out;
  }
  json spec;
  try {
    spec = json::parse(spec_json);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("experiment spec is not valid JSON: ") +
                         e.what());
  }
  if (!spec.is_object()) throw ParameterError("experiment spec must be an object");
  const std::uint64_t master = spec.value("master_seed", std::uint64_t{0});
  const json experiments = spec.value("experiments", json::array());
  if (!experiments.is_array()) throw ParameterError("'experiments' must be an array");

  for (std::size_t k = 0; k < experiments.size(); ++k) {
    const Experiment e = parse_experiment(experiments[k], k);
    auto instance_rng = [&](std::size_t i) {
      return Rng(derive_seed(master, 2 * k + 1, i));
    };

    if (e.kind == "soundness" || e.kind == "seed_soundness") {
      const bool seeds = e.kind == "seed_soundness";
      std::vector<Text> texts(e.instances);
      parallel_for(e.instances, options.jobs, [&](std::size_t i) {
        Rng rng = instance_rng(i);
        texts[i] = seeds ? gen_seed_far(e.q, e.sigma, e.n, e.epsilon, rng).text
                         : gen_far(e.q, e.sigma, e.n, e.epsilon, rng).text;
      });
      run_trials(e, e.instances * e.trials, master, k, options,
                 [&](std::size_t i, ExperimentRow& row) {
                   QueryOracle oracle(texts[i / e.trials]);
                   const TesterConfig config{e.q, e.n, e.epsilon, row.seed};
                   const Verdict v = seeds ? run_seed_tester(config, oracle)
                                           : run_cover_tester(config, oracle);
                   row.verdict = verdict_of(v);
                   row.queries_used = v.queries_used;
                 },
                 out);
    } else if (e.kind == "completeness") {
      run_trials(e, e.trials, master, k, options,
                 [&](std::size_t, ExperimentRow& row) {
                   Rng rng(row.seed);
                   const std::size_t c = 1 + uniform_below(rng, e.q);
                   const Text pattern = gen_uniform(c, e.sigma, rng);
                   const std::size_t target = std::max(e.n, e.q + 1);
                   const std::size_t length = c * ((target + c - 1) / c);
                   QueryOracle oracle(gen_coverable(pattern, length, rng));
                   const Verdict v = run_cover_tester(
                       {e.q, length, e.epsilon, rng()}, oracle);
                   row.n = length;
                   row.verdict = verdict_of(v);
                   row.queries_used = v.queries_used;
                 },
                 out);
    } else if (e.kind == "queries") {
      run_trials(e, e.qs.size() * e.trials, master, k, options,
                 [&](std::size_t i, ExperimentRow& row) {
                   Rng rng(row.seed);
                   row.q = e.qs[i / e.trials];
                   QueryOracle oracle(gen_uniform(e.n, e.sigma, rng));
                   const Verdict v = run_cover_tester(
                       {row.q, e.n, e.epsilon, rng()}, oracle);
                   row.verdict = verdict_of(v);
                   row.queries_used = v.queries_used;
                 },
                 out);
    } else {  // stream
      run_trials(e, e.trials, master, k, options,
                 [&](std::size_t i, ExperimentRow& row) {
                   Rng rng(row.seed);
                   Text s;
                   if (i % 2 == 0) {
                     s = gen_uniform(e.n, e.sigma, rng);
                   } else {
                     const std::size_t c = 1 + uniform_below(rng, e.q);
                     const Text pattern = gen_uniform(c, e.sigma, rng);
                     s = gen_coverable(pattern, c * ((e.n + c - 1) / c), rng);
                   }
                   CoverStream stream(e.q);
                   for (Letter l : s) stream.push(l);
                   const auto streamed = stream.finalize();
                   const std::size_t exact = shortest_cover(s);
                   const auto expected = exact <= e.q
                                             ? std::optional<std::size_t>(exact)
                                             : std::nullopt;
                   row.n = s.size();
                   row.verdict = streamed == expected ? "AGREE" : "DISAGREE";
                   row.queries_used = stream.peak_buffered();
                 },
                 out);
    }
  }
  return out;
}

}  // namespace quasi::cli
