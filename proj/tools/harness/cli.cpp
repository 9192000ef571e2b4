#include "harness/cli.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "harness/experiment.hpp"
#include "json.hpp"
#include "quasi/errors.hpp"
#include "quasi/exact.hpp"
#include "quasi/farness.hpp"
#include "quasi/io.hpp"
#include "quasi/streaming.hpp"
#include "quasi/tester.hpp"

namespace quasi::cli {
namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::istream& open_input(const std::string& path, std::istream& stdin_,
                         std::ifstream& file) {
  if (path == "-") return stdin_;
  file.open(path, std::ios::binary);
  if (!file) throw ParameterError("cannot open input '" + path + "'");
  return file;
}

Text load_text(const std::string& path, Format format, std::istream& stdin_) {
  std::ifstream file;
  return read_text(open_input(path, stdin_, file), format);
}

// Serves letters straight from a file in bytes format, one seek per query.
QueryOracle file_oracle(const std::string& path) {
  auto file = std::make_shared<std::ifstream>(path, std::ios::binary);
  if (!*file) throw ParameterError("cannot open input '" + path + "'");
  file->seekg(0, std::ios::end);
  std::size_t length = static_cast<std::size_t>(file->tellg());
  if (length > 0) {
    file->seekg(static_cast<std::streamoff>(length - 1));
    if (file->get() == '\n') --length;
  }
  return QueryOracle(length, [file](std::size_t pos) {
    file->clear();
    file->seekg(static_cast<std::streamoff>(pos - 1));
    const int c = file->get();
    if (c == std::char_traits<char>::eof()) {
      throw ParameterError("input file changed while testing");
    }
    return static_cast<Letter>(static_cast<unsigned char>(c)) + 1;
  });
}

QueryOracle make_oracle(const std::string& path, Format format,
                        std::istream& stdin_) {
  if (path != "-" && format == Format::kBytes) return file_oracle(path);
  return QueryOracle(load_text(path, format, stdin_));
}

std::ostream& open_output(const std::string& path, std::ostream& stdout_,
                          std::ofstream& file) {
  if (path.empty() || path == "-") return stdout_;
  file.open(path, std::ios::binary);
  if (!file) throw ParameterError("cannot open output '" + path + "'");
  return file;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Covers, seeds and quasiperiodicity testing"};
  app.require_subcommand(1);

  std::string format_name = "bytes";
  std::string input = "-";
  std::string out_path;
  std::size_t q = 0;
  std::size_t n = 0;
  Letter sigma = 2;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  unsigned jobs = 1;
  bool stats = false;
  std::function<int()> action;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Input format")
        ->check(CLI::IsMember({"bytes", "ints"}));
  };

  // exact
  auto* exact = app.add_subcommand("exact", "Exact baselines on a text");
  exact->add_option("input", input, "Text file ('-' for stdin)");
  add_format(exact);
  bool want_all = false, want_shortest = false;
  std::optional<std::string> period_of, seed_of, cover_of;
  exact->add_option("--q", q, "Bound for --borders");
  auto* borders_flag = exact->add_flag("--borders", "Border lengths <= q");
  exact->add_flag("--all-covers", want_all, "All cover lengths");
  exact->add_flag("--shortest-cover", want_shortest, "Shortest cover length");
  exact->add_option("--period-set", period_of, "Period set of a pattern");
  exact->add_option("--is-seed", seed_of, "Is the pattern a seed of the text");
  exact->add_option("--is-cover", cover_of, "Is the pattern a cover of the text");
  exact->callback([&] {
    action = [&] {
      const Format format = parse_format(format_name);
      const Text s = load_text(input, format, in);
      auto pattern = [&](const std::string& p) {
        return parse_text(p, format, format == Format::kInts ? s.sigma() : 0);
      };
      bool any = false;
      if (*borders_flag) {
        out << join(borders_up_to(s, q == 0 ? s.size() : q)) << '\n';
        any = true;
      }
      if (period_of) {
        const auto ps = period_set(pattern(*period_of));
        out << join(ps.periods()) << "; gcd " << ps.gcd() << '\n';
        any = true;
      }
      if (want_all) {
        out << join(all_covers(s)) << '\n';
        any = true;
      }
      if (want_shortest) {
        out << shortest_cover(s) << '\n';
        any = true;
      }
      if (seed_of) {
        out << (is_seed(pattern(*seed_of), s) ? "true" : "false") << '\n';
        any = true;
      }
      if (cover_of) {
        out << (is_cover(pattern(*cover_of), s) ? "true" : "false") << '\n';
        any = true;
      }
      if (!any) throw ParameterError("exact: select at least one query flag");
      return int{kExitYes};
    };
  });

  // test / seed-test
  auto add_tester = [&](const std::string& name, const std::string& help,
                        bool seeds) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Text file ('-' for stdin)");
    add_format(sub);
    sub->add_option("--q", q, "Length bound")->required();
    sub->add_option("--epsilon", epsilon, "Distance parameter in (0, 1]");
    sub->add_option("--seed", seed, "RNG seed");
    sub->callback([&, seeds] {
      action = [&, seeds] {
        QueryOracle oracle = make_oracle(input, parse_format(format_name), in);
        const TesterConfig config{q, oracle.size(), epsilon, seed};
        const Verdict v = seeds ? run_seed_tester(config, oracle)
                                : run_cover_tester(config, oracle);
        out << "verdict: " << to_string(v.answer) << '\n'
            << "queries_used: " << v.queries_used << '\n'
            << "query_bound: " << config.query_bound() << '\n'
            << "sample_count: " << config.sample_count() << '\n'
            << "exhaustive: " << (v.exhaustive ? "true" : "false") << '\n'
            << "surviving_candidates: " << join(v.surviving_candidates) << '\n';
        if (seeds) {
          out << "surviving_seeds:";
          for (const Text& t : v.surviving_seeds) out << ' ' << t.to_ints();
          out << '\n';
        }
        return int{v.answer == Answer::kYes ? kExitYes : kExitNo};
      };
    });
  };
  add_tester("test", "Sublinear q-cover tester", false);
  add_tester("seed-test", "Sublinear q-seed tester", true);

  // stream
  auto* stream = app.add_subcommand("stream", "One-pass shortest cover <= q");
  stream->add_option("input", input, "Text file ('-' for stdin)");
  add_format(stream);
  stream->add_option("--q", q, "Length bound")->required();
  stream->add_flag("--stats", stats, "Print buffer statistics");
  stream->callback([&] {
    action = [&] {
      std::ifstream file;
      LetterReader reader(open_input(input, in, file), parse_format(format_name));
      CoverStream s(q);
      while (auto l = reader.next()) s.push(*l);
      const auto result = s.finalize();
      out << (result ? std::to_string(*result) : std::string("none")) << '\n';
      if (stats) {
        out << "letters: " << s.letters_seen() << '\n'
            << "peak_buffer: " << s.peak_buffered() << '\n'
            << "fragments_checked: " << s.fragments_checked() << '\n';
      }
      return int{kExitYes};
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  std::string kind;
  std::string cover_pattern;
  std::string cert_path;
  gen->add_option("kind", kind, "coverable | far | seed-far | uniform")
      ->required()
      ->check(CLI::IsMember({"coverable", "far", "seed-far", "uniform"}));
  add_format(gen);
  gen->add_option("--q", q, "Length bound (far, seed-far)");
  gen->add_option("--n", n, "Text length")->required();
  gen->add_option("--sigma", sigma, "Alphabet size");
  gen->add_option("--epsilon", epsilon, "Required distance fraction");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--cover", cover_pattern,
                  "Pattern for 'coverable', as lowercase letters");
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--cert", cert_path, "Write the farness certificate here");
  gen->callback([&] {
    action = [&] {
      Rng rng(seed);
      const Format format = parse_format(format_name);
      Text text;
      std::optional<FarnessCertificate> cert;
      if (kind == "coverable") {
        if (cover_pattern.empty()) throw ParameterError("gen coverable needs --cover");
        text = gen_coverable(Text::from_alpha(cover_pattern), n, rng);
      } else if (kind == "uniform") {
        text = gen_uniform(n, sigma, rng);
      } else {
        if (q == 0) throw ParameterError("gen " + kind + " needs --q");
        cert = kind == "far" ? gen_far(q, sigma, n, epsilon, rng)
                             : gen_seed_far(q, sigma, n, epsilon, rng);
        text = cert->text;
      }
      std::ofstream file;
      write_text(open_output(out_path, out, file), text, format);
      if (cert && !cert_path.empty()) {
        std::ofstream cert_file(cert_path);
        if (!cert_file) throw ParameterError("cannot open '" + cert_path + "'");
        write_certificate(cert_file, *cert);
      }
      return int{kExitYes};
    };
  });

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a JSON sweep spec");
  std::string spec_path;
  bool no_timing = false;
  experiment->add_option("spec", spec_path, "Spec file ('-' for stdin)")->required();
  experiment->add_option("--out", out_path, "CSV output (default stdout)");
  experiment->add_option("--jobs", jobs, "Worker threads");
  experiment->add_option("--trials", trials,
                         "Override every experiment's trial count");
  experiment->add_flag("--no-timing", no_timing, "Write 0 for wall time");
  experiment->callback([&] {
    action = [&] {
      std::ifstream file;
      std::stringstream buf;
      buf << open_input(spec_path, in, file).rdbuf();
      std::string spec = buf.str();
      if (experiment->count("--trials") > 0) {
        auto j = nlohmann::json::parse(spec.empty() ? "{}" : spec);
        for (auto& e : j["experiments"]) e["trials"] = trials;
        spec = j.dump();
      }
      const auto rows = run_experiments(spec, {std::max(1u, jobs), !no_timing});
      std::ofstream csv;
      write_csv(open_output(out_path, out, csv), rows);
      return int{kExitYes};
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kExitYes} : int{kExitUsage};
  }

  try {
    return action();
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotReachableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace quasi::cli
