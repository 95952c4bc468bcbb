#pragma once

#include "blowup/graph.hpp"

namespace blowup {

struct HoffmanBound {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double value = 0.0;    ///< (lambda_max - lambda_min) / (-lambda_min)
    bool edgeless = false; ///< value fixed to 1 by convention
};

/// Extreme adjacency eigenvalues from a dense symmetric eigensolver. Throws
/// InvalidParameter for the empty graph; an edgeless graph reports 1.
HoffmanBound hoffman_bound(const Graph& g);

} // namespace blowup
