// Copyright 2026 The hamparity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hamparity command-line driver: gen, count, verify, sweep.
//
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage or
// precondition error, 3 scale refusal.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamparity/hamparity.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;

struct GraphDeleter {
  void operator()(hp_graph* g) const { hp_graph_free(g); }
};
using GraphPtr = std::unique_ptr<hp_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hp_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(hp_status status) {
  switch (status) {
    case HP_OK: return kExitPass;
    case HP_ERROR_SCALE: return kExitScale;
    case HP_ERROR_ENGINE_MISMATCH: return kExitFail;
    default: return kExitUsage;
  }
}

int report_error(hp_status status) {
  std::cerr << "hamparity: " << hp_status_name(status) << ": "
            << hp_last_error_message() << '\n';
  return exit_code_for(status);
}

std::optional<hp_engine> engine_from(const std::string& name) {
  if (name == "oracle") return HP_ENGINE_ORACLE;
  if (name == "dp") return HP_ENGINE_DP;
  if (name == "both") return HP_ENGINE_BOTH;
  return std::nullopt;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "0-1,2-3" -> {0,1,2,3}
std::optional<std::vector<uint32_t>> parse_pairs(const std::string& text) {
  std::vector<uint32_t> ids;
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) return std::nullopt;
    try {
      ids.push_back(static_cast<uint32_t>(std::stoul(item.substr(0, dash))));
      ids.push_back(static_cast<uint32_t>(std::stoul(item.substr(dash + 1))));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return ids;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedGraph {
  GraphPtr graph;
  uint32_t t_count = 0;
};

// Returns an exit code on failure.
std::optional<int> load_graph(const std::string& path, LoadedGraph& out) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "hamparity: cannot read " << path << '\n';
    return kExitUsage;
  }
  hp_graph* g = nullptr;
  const hp_status st = hp_graph_parse(text->c_str(), &g, &out.t_count);
  if (st != HP_OK) return report_error(st);
  out.graph.reset(g);
  return std::nullopt;
}

uint64_t splitmix64(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::optional<uint32_t> transitive;
  std::optional<uint32_t> tournament_random;
  std::optional<uint32_t> mixed_random;
  std::optional<uint32_t> extension_random;
  uint32_t w_count = 1;
  std::string weights = "1,1,1";
  uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
  const int chosen = opt.transitive.has_value() + opt.tournament_random.has_value() +
                     opt.mixed_random.has_value() + opt.extension_random.has_value();
  if (chosen != 1) {
    std::cerr << "hamparity gen: choose exactly one generator\n";
    return kExitUsage;
  }
  hp_graph* g = nullptr;
  hp_status st = HP_OK;
  uint32_t t_count = 0;
  if (opt.transitive) {
    st = hp_graph_transitive(*opt.transitive, &g);
  } else if (opt.tournament_random) {
    st = hp_graph_random_tournament(*opt.tournament_random, opt.seed, &g);
  } else if (opt.mixed_random) {
    const auto parts = split(opt.weights, ',');
    double w[3] = {0, 0, 0};
    try {
      if (parts.size() != 3) throw std::invalid_argument("weights");
      for (int k = 0; k < 3; ++k) w[k] = std::stod(parts[k]);
    } catch (const std::exception&) {
      std::cerr << "hamparity gen: --weights expects three numbers a,b,c\n";
      return kExitUsage;
    }
    st = hp_graph_random_mixed(*opt.mixed_random, w[0], w[1], w[2], opt.seed, &g);
  } else {
    t_count = *opt.extension_random;
    st = hp_graph_random_extension(t_count, opt.w_count, opt.seed, &g);
  }
  if (st != HP_OK) return report_error(st);
  GraphPtr owned(g);

  char* text = nullptr;
  st = hp_graph_serialize_split(owned.get(), t_count, &text);
  if (st != HP_OK) return report_error(st);
  OwnedString out(text);
  std::cout << out.get();
  return kExitPass;
}

// ---------------------------------------------------------------- count

struct CountOptions {
  std::string file;
  bool hamilton = false;
  std::string classes;
  std::string na;
  bool na_given = false;
  bool exact = false;
  std::string engine = "dp";
};

int run_count(const CountOptions& opt) {
  const auto engine = engine_from(opt.engine);
  if (!engine) {
    std::cerr << "hamparity count: unknown engine '" << opt.engine << "'\n";
    return kExitUsage;
  }
  const int chosen = opt.hamilton + !opt.classes.empty() + opt.na_given;
  if (chosen != 1) {
    std::cerr << "hamparity count: choose one of --hamilton, --class, --NA\n";
    return kExitUsage;
  }
  LoadedGraph loaded;
  if (auto code = load_graph(opt.file, loaded)) return *code;
  const hp_graph* g = loaded.graph.get();

  nlohmann::ordered_json out;
  char* decimal = nullptr;
  if (opt.hamilton) {
    const hp_status st = hp_count_hamilton(g, *engine, &decimal);
    if (st != HP_OK) return report_error(st);
    out["count"] = OwnedString(decimal).get();
  } else if (opt.na_given) {
    const auto ids = parse_pairs(opt.na);
    if (!ids) {
      std::cerr << "hamparity count: --NA expects pairs like 0-1,2-3\n";
      return kExitUsage;
    }
    const hp_status st =
        hp_count_na(g, ids->data(), ids->size() / 2, opt.exact, *engine, &decimal);
    if (st != HP_OK) return report_error(st);
    out["count"] = OwnedString(decimal).get();
  } else {
    const auto names = split(opt.classes, ',');
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& name : names) {
      hp_class c;
      if (name == "P0") c = HP_P0;
      else if (name == "P1") c = HP_P1;
      else if (name == "P2") c = HP_P2;
      else if (name == "P3") c = HP_P3;
      else {
        std::cerr << "hamparity count: unknown class '" << name << "'\n";
        return kExitUsage;
      }
      const hp_status st = hp_count_class(g, c, *engine, &decimal);
      if (st != HP_OK) return report_error(st);
      counts[name] = OwnedString(decimal).get();
    }
    if (names.size() == 1) out["count"] = counts[names.front()];
    else out["counts"] = counts;
  }
  std::cout << out.dump() << '\n';
  return kExitPass;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string file;
  std::string theorem;
  std::string engine = "dp";
  std::string a;
  std::optional<uint32_t> t_count;
};

int run_verify(const VerifyOptions& opt) {
  const auto engine = engine_from(opt.engine);
  if (!engine) {
    std::cerr << "hamparity verify: unknown engine '" << opt.engine << "'\n";
    return kExitUsage;
  }
  LoadedGraph loaded;
  if (auto code = load_graph(opt.file, loaded)) return *code;

  const auto ids = parse_pairs(opt.a);
  if (!ids) {
    std::cerr << "hamparity verify: --A expects pairs like 0-1,2-3\n";
    return kExitUsage;
  }
  hp_verify_options vo{opt.t_count.value_or(loaded.t_count), ids->data(),
                       ids->size() / 2};
  char* json = nullptr;
  int pass = 0;
  const hp_status st = hp_verify(loaded.graph.get(), opt.theorem.c_str(),
                                 *engine, &vo, &json, &pass);
  if (st != HP_OK) return report_error(st);
  std::cout << OwnedString(json).get() << '\n';
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  std::string family;
  std::optional<uint32_t> n;
  std::optional<uint32_t> n_min;
  std::optional<uint32_t> n_max;
  uint64_t samples = 100;
  uint64_t seed = 0;
  std::string theorems;
  std::string engine = "dp";
  std::string weights = "1,1,1";
  unsigned threads = 0;
};

struct Instance {
  uint32_t n = 0;
  uint64_t index = 0;  // tournament index or per-instance seed
};

struct InstanceResult {
  std::vector<std::string> lines;
  uint64_t passed = 0;
  uint64_t failed = 0;
  uint64_t skipped = 0;
  uint64_t scale_errors = 0;
  uint64_t other_errors = 0;
};

class Sweep {
 public:
  Sweep(const SweepOptions& opt, hp_engine engine, std::vector<std::string> theorems,
        double weights[3])
      : opt_(opt), engine_(engine), theorems_(std::move(theorems)) {
    std::copy(weights, weights + 3, weights_);
  }

  InstanceResult run(const Instance& inst) const {
    InstanceResult res;
    hp_graph* raw = nullptr;
    hp_status st = HP_OK;
    uint32_t t_count = 0;
    if (opt_.family == "tournaments-exhaustive") {
      st = hp_graph_tournament_from_index(inst.n, inst.index, &raw);
    } else if (opt_.family == "tournaments-random") {
      st = hp_graph_random_tournament(inst.n, inst.index, &raw);
    } else if (opt_.family == "mixed-random") {
      st = hp_graph_random_mixed(inst.n, weights_[0], weights_[1], weights_[2],
                                 inst.index, &raw);
    } else {
      // W takes between 1 and n - 2 vertices, so |T| >= 2.
      const uint32_t w = 1 + static_cast<uint32_t>(inst.index % (inst.n - 2));
      t_count = inst.n - w;
      st = hp_graph_random_extension(t_count, w, inst.index, &raw);
    }
    if (st != HP_OK) {
      ++res.other_errors;
      std::cerr << "hamparity sweep: " << hp_last_error_message() << '\n';
      return res;
    }
    GraphPtr g(raw);

    std::vector<uint32_t> a(2 * inst.n, 0);
    size_t a_count = 0;
    if (hp_sample_requirement(g.get(), inst.index, a.data(), &a_count) != HP_OK) {
      a_count = 0;
    }

    for (const auto& theorem : theorems_) {
      hp_verify_options vo{t_count, a.data(), a_count};
      char* json = nullptr;
      int pass = 0;
      st = hp_verify(g.get(), theorem.c_str(), engine_, &vo, &json, &pass);
      if (st == HP_ERROR_PRECONDITION) {
        ++res.skipped;
        continue;
      }
      if (st == HP_ERROR_SCALE) {
        ++res.scale_errors;
        std::cerr << "hamparity sweep: " << hp_last_error_message() << '\n';
        continue;
      }
      if (st != HP_OK) {
        ++res.other_errors;
        std::cerr << "hamparity sweep: " << hp_last_error_message() << '\n';
        continue;
      }
      res.lines.emplace_back(OwnedString(json).get());
      if (pass) ++res.passed;
      else ++res.failed;
    }
    return res;
  }

 private:
  const SweepOptions& opt_;
  hp_engine engine_;
  std::vector<std::string> theorems_;
  double weights_[3] = {1, 1, 1};
};

int run_sweep(const SweepOptions& opt) {
  static const std::vector<std::string> kFamilies = {
      "tournaments-exhaustive", "tournaments-random", "mixed-random",
      "extensions-random"};
  if (std::find(kFamilies.begin(), kFamilies.end(), opt.family) == kFamilies.end()) {
    std::cerr << "hamparity sweep: unknown family '" << opt.family << "'\n";
    return kExitUsage;
  }
  const auto engine = engine_from(opt.engine);
  if (!engine) {
    std::cerr << "hamparity sweep: unknown engine '" << opt.engine << "'\n";
    return kExitUsage;
  }
  const auto theorems = split(opt.theorems, ',');
  if (theorems.empty()) {
    std::cerr << "hamparity sweep: --theorems is required\n";
    return kExitUsage;
  }
  double weights[3] = {1, 1, 1};
  {
    const auto parts = split(opt.weights, ',');
    try {
      if (parts.size() != 3) throw std::invalid_argument("weights");
      for (int k = 0; k < 3; ++k) weights[k] = std::stod(parts[k]);
    } catch (const std::exception&) {
      std::cerr << "hamparity sweep: --weights expects three numbers a,b,c\n";
      return kExitUsage;
    }
  }

  uint32_t lo = 0;
  uint32_t hi = 0;
  if (opt.n) {
    lo = hi = *opt.n;
  } else if (opt.n_min && opt.n_max) {
    lo = *opt.n_min;
    hi = *opt.n_max;
  } else {
    std::cerr << "hamparity sweep: give --n or both --n-min and --n-max\n";
    return kExitUsage;
  }
  const uint32_t min_n = opt.family == "extensions-random" ? 3 : 2;
  if (lo < min_n || lo > hi) {
    std::cerr << "hamparity sweep: bad vertex range\n";
    return kExitUsage;
  }
  if (opt.family == "tournaments-exhaustive" && hi > 6) {
    std::cerr << "hamparity sweep: exhaustive tournaments are limited to n <= 6\n";
    return kExitScale;
  }
  if (*engine != HP_ENGINE_DP && hi > hp_oracle_cap()) {
    std::cerr << "hamparity sweep: n = " << hi << " exceeds the oracle cap "
              << hp_oracle_cap() << '\n';
    return kExitScale;
  }

  std::vector<Instance> instances;
  for (uint32_t n = lo; n <= hi; ++n) {
    if (opt.family == "tournaments-exhaustive") {
      const uint64_t total = uint64_t{1} << (n * (n - 1) / 2);
      for (uint64_t i = 0; i < total; ++i) instances.push_back({n, i});
    } else {
      for (uint64_t s = 0; s < opt.samples; ++s) {
        instances.push_back({n, splitmix64(opt.seed, instances.size())});
      }
    }
  }

  const Sweep sweep(opt, *engine, theorems, weights);
  std::vector<InstanceResult> results(instances.size());
  std::atomic<size_t> next{0};
  unsigned workers = opt.threads != 0 ? opt.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, instances.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < instances.size(); i = next++) {
        results[i] = sweep.run(instances[i]);
      }
    });
  }
  for (auto& th : pool) th.join();

  uint64_t passed = 0, failed = 0, skipped = 0, scale = 0, errors = 0;
  for (const auto& r : results) {
    for (const auto& line : r.lines) std::cout << line << '\n';
    passed += r.passed;
    failed += r.failed;
    skipped += r.skipped;
    scale += r.scale_errors;
    errors += r.other_errors;
  }
  nlohmann::ordered_json summary;
  summary["summary"] = true;
  summary["family"] = opt.family;
  summary["instances"] = instances.size();
  summary["total"] = passed + failed;
  summary["passed"] = passed;
  summary["failures"] = failed;
  summary["skipped"] = skipped;
  summary["scale_refusals"] = scale;
  summary["errors"] = errors;
  summary["engine"] = opt.engine;
  std::cout << summary.dump() << '\n';

  if (scale > 0) return kExitScale;
  if (errors > 0) return kExitUsage;
  return failed > 0 ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hamilton-path counting and parity verification"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph to stdout");
  gen_cmd->add_option("--transitive", gen.transitive, "Transitive tournament on N vertices");
  gen_cmd->add_option("--tournament-random", gen.tournament_random, "Random tournament on N vertices");
  gen_cmd->add_option("--mixed-random", gen.mixed_random, "Random mixed graph on N vertices");
  gen_cmd->add_option("--extension-random", gen.extension_random,
                      "Random tournament on T vertices extended by --w-count W vertices");
  gen_cmd->add_option("--w-count", gen.w_count, "Number of W vertices")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--weights", gen.weights, "Relative weights of non-edge,undirected,directed");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Exact counts for a graph file");
  count_cmd->add_option("file", count.file, "Graph file")->required();
  count_cmd->add_flag("--hamilton", count.hamilton, "Hamilton-path permutations");
  count_cmd->add_option("--class", count.classes, "Comma-separated classes among P0,P1,P2,P3");
  auto* na_opt = count_cmd->add_option("--NA", count.na, "N_A for pairs like 0-1,2-3 (may be empty)");
  count_cmd->add_flag("--exact", count.exact, "Count N_=A instead of N_A");
  count_cmd->add_option("--engine", count.engine, "oracle, dp or both");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check one theorem on a graph file");
  verify_cmd->add_option("file", verify.file, "Graph file")->required();
  verify_cmd->add_option("--theorem", verify.theorem, "Theorem id")->required();
  verify_cmd->add_option("--engine", verify.engine, "oracle, dp or both");
  verify_cmd->add_option("--A", verify.a, "A for dirac-stronger, pairs like 0-1,2-3");
  verify_cmd->add_option("--T", verify.t_count, "T is 0..k-1 (defaults to the file's # T header)");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify theorems over a graph family");
  sweep_cmd->add_option("--family", sweep.family,
                        "tournaments-exhaustive, tournaments-random, mixed-random, extensions-random")
      ->required();
  sweep_cmd->add_option("--n", sweep.n, "Vertex count");
  sweep_cmd->add_option("--n-min", sweep.n_min, "Smallest vertex count");
  sweep_cmd->add_option("--n-max", sweep.n_max, "Largest vertex count");
  sweep_cmd->add_option("--samples", sweep.samples, "Random instances per vertex count");
  sweep_cmd->add_option("--seed", sweep.seed, "Sweep seed");
  sweep_cmd->add_option("--theorems", sweep.theorems, "Comma-separated theorem ids")->required();
  sweep_cmd->add_option("--engine", sweep.engine, "oracle, dp or both");
  sweep_cmd->add_option("--weights", sweep.weights, "Mixed-random kind weights a,b,c");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (*gen_cmd) return run_gen(gen);
  if (*count_cmd) {
    count.na_given = na_opt->count() > 0;
    return run_count(count);
  }
  if (*verify_cmd) return run_verify(verify);
  return run_sweep(sweep);
}
