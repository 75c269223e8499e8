#pragma once

#include "commtop/cocycle.hpp"
#include "commtop/group.hpp"
#include "commtop/report.hpp"
#include "commtop/torus.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commtop {

struct CommandInputs {
  std::optional<FiniteGroup> group;
  std::optional<TorusExtension> extension;
  std::optional<PatchCocycle> cocycle;
  std::size_t max_dim = 2;
  std::size_t denominator = 12;        // N for single-comm
  std::size_t search_denominator = 0;  // M for single-comm, 0 = N|F|
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;                // verify-all workers, 0 = hardware
  std::string fixtures;                // fixture document text, empty = none
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Throws the library errors for bad input or budget;
/// a failed check (verify-all criterion, fixture mismatch, winding outside
/// its lattice) is reported through Report::ok = false.
Report run_command(std::string_view command, const CommandInputs& in);

/// Compares every row of `r` with the pins for "<command> <subject>" in the
/// fixture document {"version": 1, "pins": {"<command> <subject>": {"<key>": value}}}.
/// Matching rows become "pinned", mismatches "fail".
void apply_fixtures(Report& r, std::string_view fixtures);

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string ref;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

/// Criterion `id` in 1..12.
CriterionResult run_criterion(int id, std::uint64_t budget = kDefaultBudget);
/// All criteria, run on a worker pool; results in id order.
std::vector<CriterionResult> verify_all(std::uint64_t budget = kDefaultBudget, unsigned threads = 0);

}  // namespace commtop
