#pragma once

#include "lagcut/coring.hpp"

#include <span>
#include <vector>

namespace lagcut {

/// Cohomology regraded by Z/N: dims[j] = sum of b_k over k ≡ j (mod N).
struct FoldedProfile {
    int modulus = 1;
    std::vector<BigInt> dims;

    BigInt total() const;
    bool operator==(const FoldedProfile&) const = default;
};

/// Fold an arbitrary graded dimension vector (index = degree).
FoldedProfile fold_graded(std::span<const BigInt> graded, int modulus);
FoldedProfile fold_mod(const CohomologyRing& ring, int modulus);

/// S_j == S_{j+2 mod N} for every j.
bool is_two_periodic(const FoldedProfile& profile);

/// S_j = Σ_k C(d, j + kN), exact.
BigInt binomial_fold_sum(int d, int modulus, int j);

struct TorusIdentityReport {
    bool holds = false;
    BigInt n_times_s0;
    BigInt two_pow_d;
    std::vector<BigInt> sums;  ///< S_0 .. S_{N-1}
};

/// Tests "all S_j equal and N·S_j = 2^d" for the d-torus folded mod an even N.
TorusIdentityReport torus_identity_check(int d, int modulus);

/**
 * Floating cross-check of N·S_0 - 2^d against the cosine closed form
 * Σ_{k=1}^{N-1} (2cos(kπ/N))^d cos(kdπ/N), relative to max(1, 2^d).
 */
double roots_of_unity_residual(int d, int modulus);

/// Σ_{k=1}^{N-1} (2cos(kπ/N))^d cos(kdπ/N).
long double cosine_excess(int d, int modulus);
/// The same sum with cos(kπ/N)^d in place of (2cos(kπ/N))^d. Kept only to
/// report how far that unscaled form is from the exact excess.
long double unscaled_cosine_excess(int d, int modulus);

/// True iff the profile equals the fold of CP^{d/2} mod d+2.
bool cp_profile_match(const FoldedProfile& profile, int d);

}  // namespace lagcut
