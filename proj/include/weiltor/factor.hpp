#pragma once

#include <utility>
#include <vector>

#include "weiltor/fq.hpp"
#include "weiltor/intpoly.hpp"

namespace weiltor {

/// Factorization over Q of a nonzero integer polynomial: returns pairs
/// (irreducible primitive factor with positive leading coefficient,
/// multiplicity). The product of factor^multiplicity equals the input up to
/// a rational scalar. Constant input yields an empty list.
std::vector<std::pair<int_poly, int>> factor_rational(const int_poly& p);

/// Convenience: irreducibility over Q.
bool is_irreducible_q(const int_poly& p);

/// Quadratic Hensel lifting of a coprime pair: f monic over Z, f = g0*h0
/// (mod p) with g0, h0 monic and coprime mod p. Returns monic (G, H) with
/// f = G*H (mod p^k), p^k >= target, G = g0 and H = h0 (mod p).
/// Coefficients are reduced symmetrically around 0. Shared with the p-adic
/// module's slope splitting.
std::pair<int_poly, int_poly> hensel_lift_pair(const int_poly& f, const zpoly& g0,
                                               const zpoly& h0, const Int& p,
                                               const Int& target);

}  // namespace weiltor
