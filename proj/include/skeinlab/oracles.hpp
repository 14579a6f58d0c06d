#pragma once

// Slow, independent reference computations used to cross-check the
// production code paths.  Nothing in the main library depends on these.

#include <cstdint>
#include <vector>

#include "skeinlab/combinatorics.hpp"
#include "skeinlab/invariants.hpp"
#include "skeinlab/ring.hpp"

namespace skeinlab::oracle {

// All partitions of n by filtering every composition of n.
std::vector<Partition> partitions_brute(int n);

// chi_lambda(mu) as the coefficient of x^{lambda + delta} in a_delta p_mu,
// expanded explicitly over the symmetric group.
int64_t character_brute(const Partition& lambda, const Partition& mu);

// c^nu_{lambda mu} from the character sum
// sum chi_lambda(rho) chi_mu(tau) chi_nu(rho u tau) / (z_rho z_tau).
int64_t lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu);

// Membership in Z[(q - q^-1)^2, a^{+-1}] by greedy rewriting of each
// a-coefficient in powers of z^2.
bool zsq_greedy(const LaurentPoly& p);

// Exhaustive combinatorial identity checks for sizes up to the given bounds.
VerificationReport combinatorics_suite(int character_n = 5, int orthogonality_n = 6, int lr_size = 4,
                                       int sign_size = 8, int rectangle = 3);

}  // namespace skeinlab::oracle
