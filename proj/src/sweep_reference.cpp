#include "mdqd/sweep.hpp"

namespace mdqd {

SweepResult run_sweep_serial(const GridSpec& spec)
{
    spec.validate();
    SweepResult result;
    result.spec = spec;
    result.cells.reserve(spec.cell_count());
    for (std::size_t ie = 0; ie < spec.epsilon.steps; ++ie)
        for (std::size_t is = 0; is < spec.strength.steps; ++is)
            result.cells.push_back(evaluate_cell(spec, ie, is));
    result.summary = summarize(result.cells);
    return result;
}

} // namespace mdqd
