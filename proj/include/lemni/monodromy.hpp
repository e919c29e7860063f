#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lemni/polynomial.hpp"

namespace lemni {

/// Fiber of the z-projection of {P(z)Q(w) = 1}: the deg Q solutions of
/// Q(w) = 1/P(base_z).
struct FiberData {
    std::complex<double> base_z;
    std::vector<std::complex<double>> roots_w;
};

/// Result of tracking the fiber once around a closed loop.
struct LoopResult {
    std::vector<int> permutation;   // permutation[i] = index the i-th root returns to
    double return_residual = 0.0;   // max |Q(w) - 1/P(base_z)| over returned roots
};

/// Orbit decomposition of the monodromy action on one fiber; orbits are in
/// bijection with the absolutely irreducible components of the affine curve.
struct MonodromyCertificate {
    std::vector<std::complex<double>> branch_points; // sorted by (re, im)
    std::vector<std::vector<int>> permutations;      // one per branch point loop
    int orbit_count = 0;
    std::vector<std::vector<int>> orbits; // partition of {0, ..., deg Q - 1}
};

/// All deg(p) roots with multiplicity. Companion-matrix eigenvalues followed
/// by Newton polishing; throws ConvergenceFailure if a residual stays large.
std::vector<std::complex<double>> univariate_roots(const NumPoly& p);

/// Exact input: roots are taken per squarefree part (each simple there) and
/// repeated by exponent, which keeps clustered multiple roots exact.
std::vector<std::complex<double>> univariate_roots(const ExactPoly& p);

/// One location per distinct complex root of p.
std::vector<std::complex<double>> distinct_roots(const ExactPoly& p);

/// Fiber degeneracy locus of the z-projection: roots of P (the fiber escapes
/// to infinity) plus all z with P(z) = 1/v for each nonzero critical value v
/// of Q (colliding fiber roots). Deduplicated within 1e-8, sorted.
std::vector<std::complex<double>> branch_points(const ExactPoly& p, const ExactPoly& q);

/// Fiber of Q(w) = 1/P(z0) at z0 = base. Throws DegenerateBasepoint if the
/// roots come closer than `min_separation`.
FiberData fiber_at(const ExactPoly& p, const ExactPoly& q, std::complex<double> base,
                   double min_separation = 1e-4);

/// Analytic continuation of the fiber along segment-circle-segment around
/// `center`: out from the basepoint to the loop circle, once around
/// counterclockwise, and back. One internal retry at doubled step count on
/// path collision.
LoopResult track_loop(const ExactPoly& p, const ExactPoly& q, const FiberData& fiber,
                      std::complex<double> center, double radius, int steps = 256);

/// Cycle count of the fiber monodromy around a circle |z - center| = radius
/// traversed once; the basepoint is taken on the circle itself.
int local_monodromy_cycles(const ExactPoly& p, const ExactPoly& q, std::complex<double> center,
                           double radius, int steps = 256);

/// Orbit count of the subgroup generated by `perms` acting on {0..n-1}.
std::vector<std::vector<int>> permutation_orbits(const std::vector<std::vector<int>>& perms, int n);

/// Count absolutely irreducible components of {P(z)Q(w) = 1} by numerical
/// monodromy. Deterministic for a fixed seed: the basepoint angle and retry
/// sequence derive from it.
MonodromyCertificate component_count(const ExactPoly& p, const ExactPoly& q, std::uint64_t seed);

} // namespace lemni
