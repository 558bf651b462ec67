#pragma once

// Identity harness: each suite checks a family of relations between the
// polynomials on one input graph.

#include "topotutte/expansions.hpp"
#include "topotutte/ribbon_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace topotutte {

struct VerifyOptions {
  int points = 20;
  std::uint64_t seed = 1;
  EnumerationOptions enumeration;
};

struct SuiteResult {
  std::string suite;
  int checks = 0;
  int skipped = 0;  // checks that do not apply to this input
  std::vector<std::string> failures;
  std::vector<std::string> details;  // per-point lines where the suite has them

  bool ok() const { return failures.empty(); }
};

// br-rec, krushkal-rec, specializations, duality, butler, buch.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws std::invalid_argument for
// an unknown name.
std::vector<SuiteResult> run_suites(const std::string& name, const RibbonGraph& g, const VerifyOptions& opts = {});

// Individual suites.
SuiteResult verify_br_recurrence(const RibbonGraph& g, const VerifyOptions& opts = {});
SuiteResult verify_krushkal_recurrence(const RibbonGraph& parent, const VerifyOptions& opts = {});
SuiteResult verify_specializations(const RibbonGraph& g, const VerifyOptions& opts = {});
SuiteResult verify_duality(const RibbonGraph& g, const VerifyOptions& opts = {});
SuiteResult verify_butler(const RibbonGraph& g, const VerifyOptions& opts = {});
SuiteResult verify_buch_suite(const RibbonGraph& g, const VerifyOptions& opts = {});

// LV(x, y, z) = z^{s/2} K(x-1, y-1, z^-1, z) and the other Krushkal
// specializations, exposed for reuse.
Poly krushkal_to_br(const Poly& k, int s);  // Y^{s/2} K(X, Y, YZ^2, Y^-1)
Poly krushkal_dual_swap(const Poly& k);     // K(Y, X, B, A)

}  // namespace topotutte
