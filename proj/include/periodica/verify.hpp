#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "periodica/shift_oracle.hpp"
#include "periodica/subgroup_lattice.hpp"

namespace periodica {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view check_status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::uint64_t cases = 0;
  std::string detail;  // first counterexample, or why the check was skipped
};

struct VerifyOptions {
  std::vector<std::uint64_t> qs{2};
  std::vector<std::string> checks;  // empty = all
  OracleOptions oracle;
};

/// Names accepted in VerifyOptions::checks, in the order checks run.
const std::vector<std::string>& verify_check_names();

/// Runs the lattice, counting and shift-space invariants on one group.
/// Checks that must walk all of A^G are skipped when q^|G| exceeds the
/// oracle budget. Throws InvalidInput for an unknown check name.
std::vector<CheckResult> verify_group(const SubgroupLattice& lattice, const VerifyOptions& options);

}  // namespace periodica
