#pragma once

#include "wect/complex.hpp"
#include "wect/wecf_types.hpp"

namespace wect::oracle {

/// Brute-force WECFs: for every filter p and grid index q, walk every cell and
/// add its signed weight when the max of its vertex filter values is at most
/// grid.beta(q). Runs in Theta(numvals * m * cells); a reference only.
WecfMatrix naive_wecfs(const WeightedComplex& c, const FilterSet& fs,
                       const DiscretizationGrid& grid);

/// Same, with height filters computed one dot product at a time.
WecfMatrix naive_wect(const WeightedComplex& c, const DirectionSet& dirs,
                      const DiscretizationGrid& grid);

}  // namespace wect::oracle
