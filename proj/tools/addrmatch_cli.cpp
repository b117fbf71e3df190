// Copyright 2026 The addrmatch Authors
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

// Command-line front end over the C API.
//
//   addrmatch generate --n-base N --seed S [--cities PATH] --out PATH
//   addrmatch eval --data PATH --algorithm NAME|all [--split test]
//                  [--report PATH] [--parallelism K]
//   addrmatch match --a1 S --a2 S --algorithm NAME [--data PATH --split S]
//
// Exit status: 0 success, 1 runtime error, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "addrmatch/addrmatch.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct ResourcesDeleter {
  void operator()(am_resources* r) const { am_resources_free(r); }
};
struct DatasetDeleter {
  void operator()(am_dataset* d) const { am_dataset_free(d); }
};
struct MatcherDeleter {
  void operator()(am_matcher* m) const { am_matcher_free(m); }
};
struct ReportDeleter {
  void operator()(am_report* r) const { am_report_free(r); }
};

using ResourcesPtr = std::unique_ptr<am_resources, ResourcesDeleter>;
using DatasetPtr = std::unique_ptr<am_dataset, DatasetDeleter>;
using MatcherPtr = std::unique_ptr<am_matcher, MatcherDeleter>;
using ReportPtr = std::unique_ptr<am_report, ReportDeleter>;

int report_failure(am_status status) {
  std::cerr << "addrmatch: " << am_status_string(status) << ": "
            << am_last_error() << "\n";
  return status == AM_ERR_CONFIG_REJECTED ? kExitUsage : kExitRuntime;
}

const char* c_str_or_null(const std::optional<std::string>& s) {
  return s ? s->c_str() : nullptr;
}

std::vector<std::string> algorithm_names() {
  std::vector<std::string> names;
  for (size_t i = 0; i < am_algorithm_count(); ++i) {
    names.emplace_back(am_algorithm_name(i));
  }
  return names;
}

// Unknown names are a usage error, reported with the valid choices.
bool check_algorithm(const std::string& name, bool allow_all) {
  const auto names = algorithm_names();
  if (allow_all && name == "all") return true;
  if (std::find(names.begin(), names.end(), name) != names.end()) return true;
  std::cerr << "addrmatch: unknown algorithm \"" << name
            << "\"; valid names:" << (allow_all ? " all" : "");
  for (const auto& n : names) std::cerr << " " << n;
  std::cerr << "\n";
  return false;
}

ResourcesPtr load_resources(const std::optional<std::string>& lexicon,
                            const std::optional<std::string>& cities,
                            am_status& status) {
  am_resources* raw = nullptr;
  status = am_resources_load(c_str_or_null(lexicon), c_str_or_null(cities),
                             &raw);
  return ResourcesPtr(raw);
}

struct GenerateArgs {
  std::uint64_t n_base = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> cities;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  am_dataset* raw = nullptr;
  am_status status =
      am_generate(args.n_base, args.seed, c_str_or_null(args.cities), &raw);
  DatasetPtr dataset(raw);
  if (status != AM_OK) return report_failure(status);
  status = am_dataset_save(dataset.get(), args.out.c_str());
  if (status != AM_OK) return report_failure(status);
  std::cerr << "wrote " << am_dataset_size(dataset.get()) << " pairs to "
            << args.out << "\n";
  return kExitOk;
}

struct EvalArgs {
  std::string data;
  std::string algorithm;
  std::string split = "test";
  std::optional<std::string> report;
  std::optional<std::string> cities;
  std::optional<std::string> lexicon;
  unsigned parallelism = 1;
};

int run_eval(const EvalArgs& args) {
  if (!check_algorithm(args.algorithm, true)) return kExitUsage;
  am_status status = AM_OK;
  ResourcesPtr resources = load_resources(args.lexicon, args.cities, status);
  if (status != AM_OK) return report_failure(status);

  am_dataset* raw = nullptr;
  status = am_dataset_load(args.data.c_str(), &raw);
  DatasetPtr dataset(raw);
  if (status != AM_OK) return report_failure(status);

  const std::vector<std::string> names =
      args.algorithm == "all" ? algorithm_names()
                              : std::vector<std::string>{args.algorithm};
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const std::string& name : names) {
    am_report* raw_report = nullptr;
    status = am_evaluate(resources.get(), dataset.get(), name.c_str(),
                         args.split.c_str(), args.parallelism, &raw_report);
    ReportPtr report(raw_report);
    if (status != AM_OK) return report_failure(status);
    double precision = 0, recall = 0, accuracy = 0, elapsed = 0;
    am_report_metrics(report.get(), &precision, &recall, &accuracy, &elapsed);
    std::fprintf(stderr, "%-26s P=%.3f R=%.3f A=%.3f  %.2fs\n", name.c_str(),
                 precision, recall, accuracy, elapsed);
    reports.push_back(nlohmann::ordered_json::parse(am_report_json(report.get())));
  }

  const std::string text =
      (args.algorithm == "all" ? reports : reports.front()).dump(2) + "\n";
  if (!args.report) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(*args.report, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "addrmatch: cannot write report " << *args.report << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

struct MatchArgs {
  std::string a1;
  std::string a2;
  std::string algorithm;
  std::optional<std::string> data;
  std::string split = "test";
  std::optional<std::string> cities;
  std::optional<std::string> lexicon;
};

int run_match(const MatchArgs& args) {
  if (!check_algorithm(args.algorithm, false)) return kExitUsage;
  am_status status = AM_OK;
  ResourcesPtr resources = load_resources(args.lexicon, args.cities, status);
  if (status != AM_OK) return report_failure(status);

  am_matcher* raw = nullptr;
  if (args.data) {
    am_dataset* raw_data = nullptr;
    status = am_dataset_load(args.data->c_str(), &raw_data);
    DatasetPtr dataset(raw_data);
    if (status != AM_OK) return report_failure(status);
    status = am_matcher_create_for_split(resources.get(),
                                         args.algorithm.c_str(), dataset.get(),
                                         args.split.c_str(), &raw);
  } else {
    // Without a dataset, tf-idf is fitted on the two inputs themselves.
    const char* corpus[] = {args.a1.c_str(), args.a2.c_str()};
    status = am_matcher_create(resources.get(), args.algorithm.c_str(), corpus,
                               2, &raw);
  }
  MatcherPtr matcher(raw);
  if (status != AM_OK) return report_failure(status);

  int is_match = 0;
  status = am_matcher_match(matcher.get(), args.a1.c_str(), args.a2.c_str(),
                            &is_match);
  if (status != AM_OK) return report_failure(status);
  std::cout << (is_match ? "MATCH" : "NO-MATCH") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic address pairs and baseline address matchers"};
  app.require_subcommand(1);
  const std::vector<std::string> splits = {"train", "valid", "test"};

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a labeled dataset");
  generate->add_option("--n-base", gen.n_base, "Number of base addresses")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--cities", gen.cities,
                       "City,State CSV (default: bundled table)");
  generate->add_option("--out", gen.out, "Output JSONL path")->required();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate algorithms on a split");
  eval->add_option("--data", ev.data, "Dataset JSONL")->required();
  eval->add_option("--algorithm", ev.algorithm, "Algorithm name or 'all'")
      ->required();
  eval->add_option("--split", ev.split, "train, valid or test")
      ->check(CLI::IsMember(splits));
  eval->add_option("--report", ev.report, "Report JSON path (default stdout)");
  eval->add_option("--parallelism", ev.parallelism, "Worker threads")
      ->check(CLI::Range(1u, 1024u));
  eval->add_option("--cities", ev.cities, "City,State CSV for segmentation");
  eval->add_option("--lexicon", ev.lexicon, "Lexicon TSV for normalization");

  MatchArgs mt;
  auto* match = app.add_subcommand("match", "Decide whether two addresses match");
  match->add_option("--a1", mt.a1, "First address")->required();
  match->add_option("--a2", mt.a2, "Second address")->required();
  match->add_option("--algorithm", mt.algorithm, "Algorithm name")->required();
  match->add_option("--data", mt.data, "Dataset to fit tf-idf on");
  match->add_option("--split", mt.split, "Split of --data to fit on")
      ->check(CLI::IsMember(splits));
  match->add_option("--cities", mt.cities, "City,State CSV for segmentation");
  match->add_option("--lexicon", mt.lexicon, "Lexicon TSV for normalization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*eval) return run_eval(ev);
    return run_match(mt);
  } catch (const std::exception& e) {
    std::cerr << "addrmatch: " << e.what() << "\n";
    return kExitRuntime;
  }
}
