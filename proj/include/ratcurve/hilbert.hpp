#pragma once

#include <vector>

#include "ratcurve/monomial.hpp"
#include "ratcurve/upoly.hpp"

namespace ratcurve {

// Hilbert data of K[x_0..x_{n-1}]/J for a monomial ideal J (graded by total degree).
struct HilbertData {
  int nvars = 0;
  int krull_dim = 0;   // projective dimension + 1
  Int degree = 0;      // multiplicity; the constant when krull_dim == 1
  UPoly numerator;     // Q(t) with HS(t) = Q(t)/(1-t)^krull_dim, Q(1) != 0
  UPoly polynomial;    // Hilbert polynomial in the degree variable
  Int value(int d) const;  // Hilbert function at degree d
};

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of K[x]/(gens).
UPoly hilbert_numerator(std::vector<Mono> gens, int nvars);
HilbertData hilbert_data(const std::vector<Mono>& gens, int nvars);

}  // namespace ratcurve
