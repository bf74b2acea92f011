#pragma once

#include <map>
#include <string>

#include "weylchi/factored_rational.hpp"
#include "weylchi/partition.hpp"

namespace weylchi {

/**
 * chi between members of the Weyl (V), dual Weyl (H) and torsion quotient
 * (Q = H/V) families, all derived from the two Weyl-pair values
 * c1 = chi(V(mu), V(lambda)) and c2 = chi(V(lambda), V(mu)).
 *
 * Keys name the families of the two arguments. The argument order for each
 * key is:
 *
 *     "V,H" chi(V(mu), H(lambda))     "Q,Q" chi(Q(mu), Q(lambda))
 *     "V,V" chi(V(mu), V(lambda))     "H,H" chi(H(lambda), H(mu))
 *     "V,Q" chi(V(mu), Q(lambda))     "Q,H" chi(Q(lambda), H(mu))
 *     "H,Q" chi(H(mu), Q(lambda))     "Q,V" chi(Q(lambda), V(mu))
 *     "H,V" chi(H(mu), V(lambda))
 */
using NineTable = std::map<std::string, FactoredRational>;

/// Uses the closed form for c1 and c2.
NineTable chi_nine_table(const Partition& mu, const Partition& lambda);

/// Checks the chain V,V = H,H = 1/(V,Q) = Q,H = 1/(H,Q) = Q,V, the units
/// V,H and Q,Q, and that H,V is symmetric under swapping the pair. Returns
/// a description of the first broken link, empty if none.
std::string nine_table_inconsistency(const Partition& mu, const Partition& lambda);

}  // namespace weylchi
