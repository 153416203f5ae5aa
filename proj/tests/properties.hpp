#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each runs `cases` instances from a fixed seed.

#include <string>

namespace props {

struct Report {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

Report smith_identity(int cases = 150);
Report saturation_idempotence(int cases = 100);
Report umbrella_chart_independence(int cases = 120);
Report conormal_dimension(int cases = 100);
Report discriminant_shift(int cases = 100);
Report deformation_dimension(int cases = 100);
// Degrees of standard monomials up to total degree 20 lie in qdeg.
Report quasidegree_containment(int cases = 100);

}  // namespace props
