#include "mdqd/sweep.hpp"

#include <cstdint>

#include <omp.h>

namespace mdqd {

SweepResult run_sweep_parallel(const GridSpec& spec, int threads)
{
    spec.validate();
    SweepResult result;
    result.spec = spec;
    result.cells.resize(spec.cell_count());

    const auto n_str = static_cast<std::int64_t>(spec.strength.steps);
    const auto n_total = static_cast<std::int64_t>(spec.cell_count());
    const int team = threads > 0 ? threads : omp_get_max_threads();
    SweepCell* cells = result.cells.data();

    // Each iteration writes only its own slot; placement fixes the order.
#pragma omp parallel for schedule(static) num_threads(team)
    for (std::int64_t idx = 0; idx < n_total; ++idx)
        cells[idx] = evaluate_cell(spec, static_cast<std::size_t>(idx / n_str),
                                   static_cast<std::size_t>(idx % n_str));

    result.summary = summarize(result.cells);
    return result;
}

} // namespace mdqd
