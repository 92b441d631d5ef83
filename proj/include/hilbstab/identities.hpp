#pragma once

#include <cstdint>
#include <random>

#include "hilbstab/chow.hpp"

namespace hilbstab {

// Deterministic random cycle classes with small rational-polynomial
// coefficients, shared by the identity suite and the property tests.
Poly random_poly(std::mt19937_64& rng, int max_degree = 2);
CycleX random_cycle_x(std::mt19937_64& rng, int rho);
CycleD random_cycle_d(std::mt19937_64& rng, int rho);
CycleProduct random_product(std::mt19937_64& rng, int rho);
CycleBlowup random_blowup(std::mt19937_64& rng, const SurfaceData& s);

// The pieces of u of pure codimension k (0..4), on the normalized
// representation. Summing over k recovers u.
CycleBlowup codim_part(const CycleBlowup& u, int k);

struct IdentityCheckResult {
    std::string name;
    int trials = 0;
    int failures = 0;

    bool passed() const { return failures == 0; }
};

struct IdentitySuiteResult {
    std::string surface_name;
    std::uint64_t seed = 0;
    std::vector<IdentityCheckResult> checks;

    bool all_passed() const;
    std::string to_text() const;
};

// Exercises every ring law the calculus is built on, with `trials` random
// inputs per law: the pushforward/pullback identities along the exceptional
// divisor, the three exceptional-class product rules, commutativity,
// associativity, distributivity, degree additivity, and integrate's support.
IdentitySuiteResult run_identity_suite(const SurfaceData& s, std::uint64_t seed,
                                       int trials = 100);

} // namespace hilbstab
