#pragma once

#include <string>
#include <vector>

#include "ratcurve/rational.hpp"

namespace ratcurve {

// Partition of k, parts weakly decreasing and zero-padded to length k.
struct Partition {
  int k = 0;
  std::vector<int> parts;

  // Sorts, pads with zeros to length k (k = sum when negative); throws BadPartition.
  static Partition make(std::vector<int> parts, int k = -1);
  std::vector<int> nonzero() const;
  int length() const;  // number of nonzero parts
  std::string to_string() const;  // "(3,1,1)", zeros omitted
  bool operator==(const Partition& o) const { return k == o.k && parts == o.parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const;  // k, then reverse lexicographic: (k) first
};

// All partitions of k, from (k) down to (1,...,1).
std::vector<Partition> partitions_of(int k);

// lambda <= mu iff mu refines lambda (mu splits parts of lambda); throws SizeMismatch.
bool preceq(const Partition& lambda, const Partition& mu);
// The partitions covered by lambda: merge exactly two of its nonzero parts.
std::vector<Partition> covers_below(const Partition& lambda);

// Number of positions i with lambda_i > 0 whose decrement re-sorts to sigma.
int ancestor_multiplicity(const Partition& lambda, const Partition& sigma);
// Number of tuples nu with 0 <= nu_i <= mu_i and sorted(nu) = sigma: the
// sub-multisets of shape sigma inside a fiber of shape mu.
Int sub_shape_count(const Partition& mu, const Partition& sigma);

// Independent enumerations used as oracles.
int ancestor_multiplicity_bruteforce(const Partition& lambda, const Partition& sigma);
bool preceq_bruteforce(const Partition& lambda, const Partition& mu);

}  // namespace ratcurve
