#pragma once

#include <string>
#include <vector>

#include "cpvi/report.hpp"

namespace cpvi {

struct SuiteOptions {
  unsigned deg_phase = 3;
  unsigned deg_t = 4;
  std::size_t alpha_samples = 3;
};

/// Backlund generators (symbolic, with the dX/dt negative control), the
/// exponential formula, divisor preservation and numeric round trips.
std::vector<VerificationReport> symmetry_suite();
/// Involutions and the ten Coxeter pairs.
std::vector<VerificationReport> coxeter_suite();
/// Charts r_0..r_4 (round trip, symplectic, polynomial), the uncorrected r_2
/// control and (A1).
std::vector<VerificationReport> holomorphy_suite();
/// Both pipelines, their beta relations, step symplecticity and controls.
std::vector<VerificationReport> reduction_suite();
/// Symbolic invariant divisors plus numeric drift on each divisor.
std::vector<VerificationReport> divisor_suite();
/// Bounded-degree first-integral search and non-conservation of H.
std::vector<VerificationReport> integrals_suite(const SuiteOptions& opts = {});

/// Suite names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// "all" concatenates every suite. Reports are sorted by check id.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opts = {});

/// A negative control: passes iff `r` failed.
VerificationReport expect_failure(VerificationReport r);

}  // namespace cpvi
