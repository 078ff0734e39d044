#include "lagcut/floer.hpp"

#include "lagcut/error.hpp"

namespace lagcut {

std::string_view to_string(HFKind kind)
{
    switch (kind) {
    case HFKind::EqualsCohomology: return "EqualsCohomology";
    case HFKind::CohomologyMinusEnds: return "CohomologyMinusEnds";
    case HFKind::Trivial: return "Trivial";
    }
    return "?";
}

std::string_view to_string(Feasibility f)
{
    switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::vector<BigInt> HFProfile::graded_dims() const
{
    std::vector<BigInt> dims = source.betti();
    switch (kind) {
    case HFKind::EqualsCohomology:
        break;
    case HFKind::CohomologyMinusEnds:
        dims.front() = 0;
        dims.back() = 0;
        break;
    case HFKind::Trivial:
        for (auto& b : dims)
            b = 0;
        break;
    }
    return dims;
}

FoldedProfile HFProfile::fold(int modulus) const
{
    const auto dims = graded_dims();
    return fold_graded(dims, modulus);
}

bool CollapseCertificate::valid() const
{
    for (const auto& check : per_page)
        if (check.target_betti != 0)
            return false;
    return true;
}

CollapseCertificate collapse_checks(const CohomologyRing& ring, int maslov_number)
{
    if (maslov_number < 2)
        throw Error(ErrorKind::FloerUndefined,
                    "Floer homology needs Maslov number >= 2, got " + std::to_string(maslov_number), "oh-hypothesis");
    CollapseCertificate cert{maslov_number, (ring.dim() + 1) / maslov_number, {}};
    const auto gens = ring.distinct_generator_degrees();
    for (int r = 1; r <= cert.nu; ++r)
        for (int g : gens) {
            const int target = g + 1 - r * maslov_number;
            cert.per_page.push_back(PageCheck{r, g, target, ring.betti_at(target)});
        }
    return cert;
}

std::optional<CollapseCertificate> ss_collapse_certificate(const CohomologyRing& ring, int maslov_number)
{
    auto cert = collapse_checks(ring, maslov_number);
    if (!cert.valid())
        return std::nullopt;
    return cert;
}

std::vector<HFProfile> oh_profiles(const CohomologyRing& ring, int maslov_number)
{
    if (maslov_number < 2)
        throw Error(ErrorKind::FloerUndefined,
                    "Floer homology needs Maslov number >= 2, got " + std::to_string(maslov_number), "oh-hypothesis");
    const int n = ring.dim();
    if (maslov_number >= n + 2)
        return {HFProfile{HFKind::EqualsCohomology, ring}};
    if (maslov_number == n + 1)
        return {HFProfile{HFKind::EqualsCohomology, ring}, HFProfile{HFKind::CohomologyMinusEnds, ring}};
    return {};
}

std::optional<HFProfile> sphere_local_rule(int d, long chern_number)
{
    if (d < 2)
        throw Error(ErrorKind::InvalidDimension, "the sphere rule needs d >= 2, got " + std::to_string(d));
    if (chern_number < 1)
        throw Error(ErrorKind::InvalidArgument, "the sphere rule needs N_W >= 1");
    if ((d + 1) % (2 * chern_number) == 0)
        return std::nullopt;
    return HFProfile{HFKind::EqualsCohomology, make_sphere(d)};
}

bool seidel_applicable(const CutContext& ctx, int modulus, const SeidelCandidate& candidate)
{
    if (modulus < 1)
        return false;
    if ((2 * ctx.chern_number) % modulus != 0)
        return false;
    if (candidate.maslov_number < 2)
        return false;
    if (candidate.exact_or_simply_connected)
        return true;
    return ctx.bundle.base_simply_connected && candidate.maslov_number % modulus == 0;
}

FeasibilityReport hf_feasible(const std::vector<HFProfile>& profiles, int modulus)
{
    if (modulus < 1)
        throw Error(ErrorKind::InvalidModulus, "grading modulus must be >= 1, got " + std::to_string(modulus));
    FeasibilityReport report;
    if (profiles.empty())
        return report;
    for (const auto& profile : profiles) {
        auto folded = profile.fold(modulus);
        if (is_two_periodic(folded))
            report.witnesses.push_back(profile);
        report.folds.push_back(std::move(folded));
    }
    report.status = report.witnesses.empty() ? Feasibility::Infeasible : Feasibility::Feasible;
    return report;
}

}  // namespace lagcut
