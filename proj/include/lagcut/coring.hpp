#pragma once

#include "lagcut/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lagcut {

/**
 * Z/2 cohomology of a closed connected candidate manifold, kept as its
 * Betti vector plus the degrees of a generating set of the cup-product
 * ring. No multiplication table is stored: the obstruction arguments only
 * ever need generator degrees and the Leibniz rule.
 *
 * Invariants (checked by `make`):
 *   - b_0 = 1,
 *   - b_k = b_{d-k},
 *   - every k > 0 with b_k > 0 lies in the additive monoid spanned by the
 *     generator degrees (each generator may be used repeatedly, as for
 *     powers of the hyperplane class of CP^n).
 */
class CohomologyRing {
public:
    /// Validated constructor for arbitrary rings. Throws Error(InvalidRing).
    static CohomologyRing make(std::string label, std::vector<BigInt> betti,
                               std::vector<int> generator_degrees);

    const std::string& label() const noexcept { return label_; }
    /// Candidate specifier that `parse_candidate` maps back to this ring.
    const std::string& spec() const noexcept { return spec_; }
    int dim() const noexcept { return static_cast<int>(betti_.size()) - 1; }
    const std::vector<BigInt>& betti() const noexcept { return betti_; }
    /// b_k, or 0 when k is outside [0, dim].
    BigInt betti_at(int k) const;
    /// Sorted multiset of generator degrees.
    const std::vector<int>& generator_degrees() const noexcept { return generators_; }
    /// Distinct generator degrees, ascending.
    std::vector<int> distinct_generator_degrees() const;
    BigInt total_dimension() const;

    bool same_betti(const CohomologyRing& other) const { return betti_ == other.betti_; }

private:
    CohomologyRing(std::string label, std::vector<BigInt> betti, std::vector<int> generators);
    CohomologyRing with_spec(std::string label, std::string spec) &&;

    friend CohomologyRing make_point();
    friend CohomologyRing make_sphere(int);
    friend CohomologyRing make_torus(int);
    friend CohomologyRing make_product_spheres(int, int);
    friend CohomologyRing make_complex_projective(int);

    std::string label_;
    std::string spec_;
    std::vector<BigInt> betti_;
    std::vector<int> generators_;
};

/// The one-point ring (1); the unit for `tensor`.
CohomologyRing make_point();
CohomologyRing make_sphere(int d);
CohomologyRing make_torus(int d);
CohomologyRing make_product_spheres(int l, int m);
CohomologyRing make_complex_projective(int n);

/// Künneth product: Betti vectors convolve, generator multisets join.
CohomologyRing tensor(const CohomologyRing& a, const CohomologyRing& b);

/**
 * Parse a candidate specifier:
 *   sphere:d=7, torus:d=5, prodsph:l=4,m=6, cp:n=3,
 *   custom:betti=[1,0,1],gens=[2]   (optional label=name)
 */
CohomologyRing parse_candidate(std::string_view spec);

}  // namespace lagcut
