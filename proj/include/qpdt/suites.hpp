#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpdt/analysis.hpp"

namespace qpdt {

/// parseval, plancherel, roundtrip, heisenberg, young, kernel-bounds,
/// reductions, translation, all.
const std::vector<std::string>& suite_names();

/// Runs one suite with the seeded case generator. "all" runs every suite and
/// prefixes case names with the suite name. Throws DomainError for an
/// unknown name. Numerical failures inside a case are recorded as failing
/// cases rather than thrown.
VerificationReport run_suite(std::string_view name, std::uint64_t seed);

}  // namespace qpdt
