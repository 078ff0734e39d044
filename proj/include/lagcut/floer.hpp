#pragma once

#include "lagcut/charnum.hpp"
#include "lagcut/coring.hpp"
#include "lagcut/fold.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace lagcut {

enum class HFKind {
    EqualsCohomology,     ///< HF ≅ H*(L; Z/2)
    CohomologyMinusEnds,  ///< HF ≅ ⊕_{k≠0,n} H^k(L; Z/2)
    Trivial,              ///< HF = 0
};

std::string_view to_string(HFKind kind);

/// An admissible shape for HF(L, L), as a graded dimension vector derived
/// from the candidate's cohomology.
struct HFProfile {
    HFKind kind;
    CohomologyRing source;

    /// Graded dimensions, indexed by cohomological degree 0..dim.
    std::vector<BigInt> graded_dims() const;
    FoldedProfile fold(int modulus) const;
};

/// One degree check in the collapse argument: δ_r sends generator degree g to
/// degree g + 1 - r·N_L, and vanishes on that generator if the target is empty.
struct PageCheck {
    int page;
    int generator_degree;
    int target_degree;
    BigInt target_betti;
};

struct CollapseCertificate {
    int maslov_number;
    int nu;  ///< floor((dim L + 1) / N_L)
    std::vector<PageCheck> per_page;

    bool valid() const;
};

/// All degree checks for pages 1..nu, whether or not they pass.
CollapseCertificate collapse_checks(const CohomologyRing& ring, int maslov_number);

/// The certificate when every target degree is empty (forcing E_1 = E_∞ and
/// HF ≅ H*), none otherwise. Throws Error(FloerUndefined) for N_L < 2.
std::optional<CollapseCertificate> ss_collapse_certificate(const CohomologyRing& ring, int maslov_number);

/// Oh's theorem: {H*} when N_L >= n+2, {H*, H* minus ends} when N_L = n+1,
/// and nothing otherwise.
std::vector<HFProfile> oh_profiles(const CohomologyRing& ring, int maslov_number);

/// HF(S^d) = H*(S^d) whenever 2 N_W does not divide d + 1.
std::optional<HFProfile> sphere_local_rule(int d, long chern_number);

struct SeidelCandidate {
    bool exact_or_simply_connected = false;
    long maslov_number = 0;
};

/// Whether Z/N-graded 2-periodicity applies: N | 2N_W, N_L >= 2, and the mod-N
/// Maslov class vanishes (automatic for exact or simply connected candidates,
/// otherwise N | N_L in a simply connected cut).
bool seidel_applicable(const CutContext& ctx, int modulus, const SeidelCandidate& candidate);

enum class Feasibility { Feasible, Infeasible, Indeterminate };

std::string_view to_string(Feasibility f);

struct FeasibilityReport {
    Feasibility status = Feasibility::Indeterminate;
    std::vector<HFProfile> witnesses;   ///< profiles whose fold is 2-periodic
    std::vector<FoldedProfile> folds;   ///< one per input profile, same order
};

/// Feasible iff some profile's Z/N fold is 2-periodic; Indeterminate when no
/// profile was pinned down.
FeasibilityReport hf_feasible(const std::vector<HFProfile>& profiles, int modulus);

}  // namespace lagcut
