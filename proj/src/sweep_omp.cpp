#include <algorithm>
#include <cstddef>
#include <utility>

#include <omp.h>

#include "ringfill/sweep.hpp"

namespace ringfill {

SweepReport sweep(const SweepDomain& domain, int threads) {
  const auto instances = enumerate_domain(domain);
  const auto n = static_cast<std::ptrdiff_t>(instances.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

  // Failing instances keyed by their position in sweep order.
  std::vector<std::pair<std::ptrdiff_t, InstanceResult>> found;

#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::pair<std::ptrdiff_t, InstanceResult>> local;

#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      auto r = evaluate_instance(instances[static_cast<std::size_t>(i)]);
      if (r.violated()) {
        local.emplace_back(i, std::move(r));
      }
    }

#pragma omp critical
    std::move(local.begin(), local.end(), std::back_inserter(found));
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<InstanceResult> violations;
  violations.reserve(found.size());
  for (auto& [i, r] : found) {
    violations.push_back(std::move(r));
  }
  return summarize(domain, instances.size(), std::move(violations));
}

}  // namespace ringfill
