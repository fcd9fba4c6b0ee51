#pragma once

#include <string>

#include "ratcurve/ideal.hpp"
#include "ratcurve/partition.hpp"

namespace ratcurve {

// Prime ideal in K[x0..xk] of the closure of the forms L_1^l_1 ... L_m^l_m,
// where x_i is the coefficient of s^(k-i) t^i. (1,...,1) gives the zero ideal.
// Results are memoized and, when a cache directory is set, stored on disk.
Ideal rlambda_ideal(int k, const Partition& lambda);

// Directory of the on-disk stratum cache; empty disables it. Defaults to the
// RATCURVE_STRATUM_CACHE environment variable.
void set_stratum_cache_dir(const std::string& dir);
std::string stratum_cache_dir();

// Homogeneous discriminant of the generic binary form of degree k in K[x0..xk].
MultiPoly generic_discriminant(int k);

}  // namespace ratcurve
