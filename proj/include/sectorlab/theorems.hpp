#pragma once

// Registry of checkable statements: a default sampler and an evaluator per
// stable theorem id.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sectorlab/inequalities.hpp"
#include "sectorlab/instance.hpp"
#include "sectorlab/sector.hpp"

namespace sectorlab {

struct SampleSpec {
  GeneratorConfig generator;
  std::string map_id;
  std::string function_id;
  std::vector<std::string> mean_ids;
};

struct TheoremEntry {
  std::string id;
  std::string title;
  bool sector_inputs = false;   // inputs are certified sector matrices
  bool control = false;         // negative control, excluded from the suite
  int default_dim = 3;
  double default_theta = 0.5;
  std::optional<std::pair<double, double>> default_bounds;
  std::string default_map;
  std::string default_function;
  std::vector<std::string> default_means;

  std::function<Instance(const SampleSpec&, Rng&)> sample;
  std::function<CheckOutcome(const Instance&, const TolerancePolicy&)> evaluate;
};

const std::vector<TheoremEntry>& theorem_registry();

/// Throws InvalidArgument listing the known ids.
const TheoremEntry& find_theorem(std::string_view id);

std::vector<std::string> theorem_ids(bool include_controls = false);

/// Runs the evaluator, maps library errors onto filter reasons and attaches
/// the instance as witness.
CheckOutcome evaluate_instance(const TheoremEntry& entry, const Instance& inst, const TolerancePolicy& tol = {});

const char* filter_reason_for(ErrorKind kind) noexcept;

}  // namespace sectorlab
