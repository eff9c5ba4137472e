#pragma once

// Serial reference transforms: one node and one basis function at a time,
// no factorization, no threading. Slow but transparently correct; the unit
// tests and the benchmark target compare the production kernels against
// these.

#include "quermass/harmonic.hpp"

namespace quermass::reference {

HarmonicSpectrum forward_direct(const GridFunction& f, int band_limit);
GridFunction inverse_direct(const HarmonicSpectrum& s, const QuadratureGrid& grid);

}  // namespace quermass::reference
