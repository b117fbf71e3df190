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

#include "addrmatch/addrmatch.h"

#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "addrmatch/error.hpp"
#include "addrmatch/evaluation.hpp"
#include "addrmatch/generator.hpp"
#include "addrmatch/pipeline.hpp"

struct am_resources {
  std::shared_ptr<const addrmatch::Resources> impl;
};

struct am_dataset {
  addrmatch::Dataset impl;
};

struct am_matcher {
  addrmatch::Matcher impl;
};

struct am_report {
  addrmatch::EvalReport impl;
  std::string json;
};

namespace {

thread_local std::string last_error;

am_status fail(am_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Fn>
am_status guarded(Fn&& body) {
  try {
    body();
    last_error.clear();
    return AM_OK;
  } catch (const addrmatch::ConfigRejectedError& e) {
    return fail(AM_ERR_CONFIG_REJECTED, e.what());
  } catch (const addrmatch::InvalidInputError& e) {
    return fail(AM_ERR_INVALID_INPUT, e.what());
  } catch (const addrmatch::IngestionError& e) {
    return fail(AM_ERR_INGESTION, e.what());
  } catch (const std::exception& e) {
    return fail(AM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AM_ERR_INTERNAL, "unknown error");
  }
}

std::shared_ptr<const addrmatch::Resources> resources_of(
    const am_resources* resources) {
  return resources != nullptr ? resources->impl
                              : addrmatch::Resources::bundled();
}

addrmatch::AlgorithmConfig algorithm_of(const char* name) {
  return addrmatch::resolve_algorithms(name == nullptr ? "" : name).front();
}

bool parse_split(const char* name, addrmatch::Split& out) {
  if (name == nullptr) return false;
  const auto split = addrmatch::parse_split(name);
  if (!split) return false;
  out = *split;
  return true;
}

}  // namespace

extern "C" {

const char* am_status_string(am_status status) {
  switch (status) {
    case AM_OK:
      return "ok";
    case AM_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case AM_ERR_INVALID_INPUT:
      return "invalid input";
    case AM_ERR_INGESTION:
      return "ingestion error";
    case AM_ERR_CONFIG_REJECTED:
      return "configuration rejected";
    case AM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* am_last_error(void) { return last_error.c_str(); }

am_status am_resources_load(const char* lexicon_path, const char* cities_path,
                            am_resources** out) {
  if (out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    addrmatch::Lexicon lexicon = lexicon_path != nullptr
                                     ? addrmatch::Lexicon::load(lexicon_path)
                                     : addrmatch::Lexicon::bundled();
    addrmatch::CityTable cities = cities_path != nullptr
                                      ? addrmatch::CityTable::load(cities_path)
                                      : addrmatch::CityTable::bundled();
    auto handle = std::make_unique<am_resources>();
    handle->impl = std::make_shared<const addrmatch::Resources>(
        std::move(lexicon), std::move(cities));
    *out = handle.release();
  });
}

void am_resources_free(am_resources* resources) { delete resources; }

am_status am_generate(uint64_t n_base, uint64_t seed, const char* cities_path,
                      am_dataset** out) {
  if (out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    addrmatch::GeneratorConfig config;
    config.n_base = n_base;
    config.seed = seed;
    if (cities_path != nullptr) config.city_table_path = cities_path;
    auto handle = std::make_unique<am_dataset>();
    handle->impl = addrmatch::build_dataset(config);
    *out = handle.release();
  });
}

am_status am_dataset_load(const char* path, am_dataset** out) {
  if (out == nullptr || path == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "path or out is NULL");
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<am_dataset>();
    handle->impl = addrmatch::load_jsonl(path);
    *out = handle.release();
  });
}

am_status am_dataset_save(const am_dataset* dataset, const char* path) {
  if (dataset == nullptr || path == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "dataset or path is NULL");
  }
  return guarded([&] { addrmatch::save_jsonl(dataset->impl, path); });
}

size_t am_dataset_size(const am_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->impl.pairs.size();
}

am_status am_dataset_pair(const am_dataset* dataset, size_t index,
                          const char** a1, const char** a2, int* label,
                          const char** split) {
  if (dataset == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "dataset is NULL");
  if (index >= dataset->impl.pairs.size()) {
    return fail(AM_ERR_INVALID_ARGUMENT, "pair index out of range");
  }
  const addrmatch::LabeledPair& pair = dataset->impl.pairs[index];
  if (a1 != nullptr) *a1 = pair.a1.c_str();
  if (a2 != nullptr) *a2 = pair.a2.c_str();
  if (label != nullptr) *label = pair.label;
  if (split != nullptr) *split = addrmatch::split_name(pair.split).data();
  last_error.clear();
  return AM_OK;
}

void am_dataset_free(am_dataset* dataset) { delete dataset; }

size_t am_algorithm_count(void) {
  return addrmatch::builtin_algorithms().size();
}

const char* am_algorithm_name(size_t index) {
  const auto all = addrmatch::builtin_algorithms();
  return index < all.size() ? all[index].name.c_str() : nullptr;
}

am_status am_matcher_create(const am_resources* resources,
                            const char* algorithm,
                            const char* const* fit_corpus,
                            size_t fit_corpus_size, am_matcher** out) {
  if (out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (fit_corpus == nullptr && fit_corpus_size > 0) {
    return fail(AM_ERR_INVALID_ARGUMENT, "fit_corpus is NULL");
  }
  return guarded([&] {
    const addrmatch::AlgorithmConfig config = algorithm_of(algorithm);
    std::vector<std::string> corpus;
    if (config.tfidf) {
      for (size_t i = 0; i < fit_corpus_size; ++i) {
        if (fit_corpus[i] != nullptr) corpus.emplace_back(fit_corpus[i]);
      }
    }
    auto handle = std::make_unique<am_matcher>(am_matcher{
        addrmatch::compile(config, resources_of(resources), corpus)});
    *out = handle.release();
  });
}

am_status am_matcher_create_for_split(const am_resources* resources,
                                      const char* algorithm,
                                      const am_dataset* dataset,
                                      const char* split, am_matcher** out) {
  if (out == nullptr || dataset == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "dataset or out is NULL");
  }
  *out = nullptr;
  addrmatch::Split which;
  if (!parse_split(split, which)) {
    return fail(AM_ERR_INVALID_ARGUMENT, "split must be train, valid or test");
  }
  return guarded([&] {
    const addrmatch::AlgorithmConfig config = algorithm_of(algorithm);
    std::vector<std::string> corpus;
    if (config.tfidf) {
      corpus = addrmatch::addresses_of(dataset->impl.split(which));
    }
    auto handle = std::make_unique<am_matcher>(am_matcher{
        addrmatch::compile(config, resources_of(resources), corpus)});
    *out = handle.release();
  });
}

am_status am_matcher_match(const am_matcher* matcher, const char* a1,
                           const char* a2, int* is_match) {
  if (matcher == nullptr || a1 == nullptr || a2 == nullptr ||
      is_match == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "NULL argument");
  }
  return guarded([&] { *is_match = matcher->impl.match(a1, a2) ? 1 : 0; });
}

void am_matcher_free(am_matcher* matcher) { delete matcher; }

am_status am_evaluate(const am_resources* resources, const am_dataset* dataset,
                      const char* algorithm, const char* split,
                      unsigned parallelism, am_report** out) {
  if (out == nullptr || dataset == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "dataset or out is NULL");
  }
  *out = nullptr;
  addrmatch::Split which;
  if (!parse_split(split, which)) {
    return fail(AM_ERR_INVALID_ARGUMENT, "split must be train, valid or test");
  }
  return guarded([&] {
    auto handle = std::make_unique<am_report>();
    handle->impl = addrmatch::evaluate_algorithm(
        algorithm_of(algorithm), resources_of(resources), dataset->impl, which,
        parallelism);
    handle->json = addrmatch::report_to_json(handle->impl);
    *out = handle.release();
  });
}

const char* am_report_json(const am_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

am_status am_report_counts(const am_report* report, uint64_t* tp, uint64_t* fp,
                           uint64_t* tn, uint64_t* fn) {
  if (report == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "report is NULL");
  const auto& c = report->impl.counts;
  if (tp != nullptr) *tp = c.tp;
  if (fp != nullptr) *fp = c.fp;
  if (tn != nullptr) *tn = c.tn;
  if (fn != nullptr) *fn = c.fn;
  last_error.clear();
  return AM_OK;
}

am_status am_report_metrics(const am_report* report, double* precision,
                            double* recall, double* accuracy,
                            double* elapsed_seconds) {
  if (report == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "report is NULL");
  const auto& r = report->impl;
  if (precision != nullptr) *precision = r.precision;
  if (recall != nullptr) *recall = r.recall;
  if (accuracy != nullptr) *accuracy = r.accuracy;
  if (elapsed_seconds != nullptr) *elapsed_seconds = r.elapsed_seconds;
  last_error.clear();
  return AM_OK;
}

void am_report_free(am_report* report) { delete report; }

}  // extern "C"
