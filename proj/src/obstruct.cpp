#include "lagcut/obstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lagcut {

namespace {

std::string show(const std::vector<BigInt>& values)
{
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ",";
        out += values[i].str();
    }
    return out + ")";
}

std::string show(const std::vector<long>& values)
{
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

std::string s(long v) { return std::to_string(v); }

void require(bool ok, const std::string& cite, const std::string& message)
{
    if (!ok)
        throw Error(ErrorKind::HypothesisViolation, message, cite);
}

FoldWitness witness_for(const CohomologyRing& ring, int modulus)
{
    auto fold = fold_mod(ring, modulus);
    const bool periodic = is_two_periodic(fold);
    return FoldWitness{ring.spec(), std::move(fold), periodic};
}

std::vector<long> divisors(long n)
{
    std::vector<long> out;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0)
            out.push_back(k);
    return out;
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long k = 2; k * k <= n; ++k)
        if (n % k == 0)
            return false;
    return true;
}

CutContext gate(const CircleBundle& bundle, const CheckOptions& opts, std::vector<TraceStep>& trace)
{
    auto ctx = build_cut(bundle, opts.level);
    trace.push_back({"monotone-cut",
                     "level ξ = " + to_string(ctx.level) + " < 0: W is monotone with N_W = N_e = " +
                         s(ctx.chern_number) + ", K_W = " + pi_multiple(ctx.k_w),
                     std::nullopt});
    return ctx;
}

CircleBundle simply_connected_base_bundle(int d, long euler)
{
    return CircleBundle::make(d, euler, true, euler > 0);
}

/**
 * Z/N-graded 2-periodicity for a closed connected d-manifold whose HF equals
 * H* and whose degrees do not wrap (N > d). Residues d+1..N-1 are empty and
 * residue 0 carries b_0 = 1; every 2-shift orbit is constant.
 *
 * Returns the residue in the orbit of 0 that is forced empty when the two
 * clash, otherwise the forced Betti pattern (1 on the orbit of 0, 0 on
 * orbits meeting an empty residue, -1 where nothing is forced).
 */
struct UnwrappedAnalysis {
    std::optional<int> clash_residue;
    std::vector<int> forced;  // indexed by degree 0..d
};

UnwrappedAnalysis analyse_unwrapped(int d, int modulus)
{
    UnwrappedAnalysis out;
    out.forced.assign(static_cast<std::size_t>(d) + 1, -1);
    std::vector<int> orbit_of(static_cast<std::size_t>(modulus), -1);
    int orbits = 0;
    for (int start = 0; start < modulus; ++start) {
        if (orbit_of[static_cast<std::size_t>(start)] >= 0)
            continue;
        for (int r = start; orbit_of[static_cast<std::size_t>(r)] < 0; r = (r + 2) % modulus)
            orbit_of[static_cast<std::size_t>(r)] = orbits;
        ++orbits;
    }
    std::vector<int> value(static_cast<std::size_t>(orbits), -1);
    value[static_cast<std::size_t>(orbit_of[0])] = 1;
    for (int r = d + 1; r < modulus; ++r) {
        auto& v = value[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(r)])];
        if (v == 1) {
            out.clash_residue = r;
            return out;
        }
        v = 0;
    }
    for (int k = 0; k <= d; ++k)
        out.forced[static_cast<std::size_t>(k)] = value[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(k)])];
    return out;
}

}  // namespace

std::string_view to_string(Status status)
{
    switch (status) {
    case Status::Obstructed: return "Obstructed";
    case Status::Constrained: return "Constrained";
    case Status::Inconclusive: return "Inconclusive";
    }
    return "?";
}

bool Constraints::empty() const
{
    return !index && !maslov && !maslov_upper_bound && !retained_above_bound && !cohomology &&
           !h1_nonzero_mod_euler && !surjectivity_rule_applied && !discrepancy;
}

long minimal_euler_for(int grading)
{
    if (grading < 1)
        throw Error(ErrorKind::InvalidModulus, "grading must be >= 1");
    return grading % 2 == 0 ? grading / 2 : grading;
}

// ---------------------------------------------------------------------------

Verdict check_simply_connected_in_cut(int d, long euler, int grading, const CheckOptions& opts)
{
    require(d >= 2, "dimension", "d >= 2 required, got " + s(d));
    require(euler >= 1, "euler-nontrivial", "e must be nontrivial on π2(B) (N_e >= 1)");
    require(grading > 2, "grading", "an integer N > 2 is required, got " + s(grading));
    require((2 * euler) % grading == 0, "seidel-hypothesis",
            "2e = 0 mod N needs N | 2N_e, but " + s(grading) + " ∤ " + s(2 * euler));

    Verdict v;
    v.trace.push_back({"seidel-hypothesis", "N = " + s(grading) + " divides 2N_e = " + s(2 * euler), std::nullopt});
    const auto ctx = gate(simply_connected_base_bundle(d, euler), opts, v.trace);
    const long maslov = maslov_simply_connected(ctx.chern_number);
    v.trace.push_back({"maslov-simply-connected",
                       "π2(W) -> π2(W,L) is onto, so N_L = 2N_W = " + s(maslov) + " >= N = " + s(grading),
                       std::nullopt});
    require(seidel_applicable(ctx, grading, {true, maslov}), "seidel-hypothesis",
            "periodicity theorem does not apply");
    v.trace.push_back({"seidel-periodicity",
                       "weight sum 1 at every fixed point: HF(L,L) graded by Z/" + s(grading) + " is 2-periodic",
                       std::nullopt});

    if (grading < d + 2) {
        v.trace.push_back({"oh-i",
                           "N = " + s(grading) + " < d+2 = " + s(d + 2) +
                               ": no degree-free identification of the Z/N grading; periodicity alone forces nothing",
                           std::nullopt});
        v.status = Status::Inconclusive;
        return v;
    }

    v.trace.push_back({"oh-i", "N_L = " + s(maslov) + " >= d+2 = " + s(d + 2) + ": HF(L,L) ≅ H*(L;Z/2)",
                       std::nullopt});
    const auto analysis = analyse_unwrapped(d, grading);
    if (analysis.clash_residue) {
        v.status = Status::Obstructed;
        v.trace.push_back({"fold",
                           "degrees 0.." + s(d) + " do not wrap mod " + s(grading) + "; residues " + s(d + 1) +
                               ".." + s(grading - 1) + " are empty",
                           std::nullopt});
        v.trace.push_back({"periodicity-contradiction",
                           "residue 0 (b_0 = 1) and empty residue " + s(*analysis.clash_residue) +
                               " share a 2-shift orbit; H^0 ⊕ H^d alone already breaks periodicity",
                           witness_for(make_sphere(d), grading)});
        return v;
    }

    // N = d + 2 with d even: evens forced to 1, odds to 0.
    std::vector<BigInt> betti;
    for (int b : analysis.forced)
        betti.emplace_back(b < 0 ? 0 : b);
    const auto shape_fold = fold_graded(betti, grading);
    const bool cp = d % 2 == 0 && cp_profile_match(shape_fold, d);
    v.status = Status::Constrained;
    v.constraints.cohomology = CohomologyShape{cp ? "CP^" + s(d / 2) : "forced", betti};
    v.trace.push_back({"cp-shape",
                       "2-periodicity forces b_even = 1 and b_odd = 0, Betti " + show(betti) +
                           (cp ? ", the Z/2-cohomology groups of CP^" + s(d / 2) : ""),
                       witness_for(make_complex_projective(d / 2), grading)});
    return v;
}

// ---------------------------------------------------------------------------

IndexConstraints check_exact_in_cotangent(int d, long euler, bool use_surjectivity)
{
    require(d >= 2, "dimension", "d >= 2 required, got " + s(d));
    require(euler >= 1, "euler-nonzero", "the Euler class must be nonzero (N_e >= 1)");

    IndexConstraints ic;
    ic.divisor_bound = euler;
    ic.size_bound = d + 2;
    for (long m : divisors(euler)) {
        // N_L = 2m; if N_L >= d+2 then HF ≅ H* graded by Z/2m, which must be
        // 2-periodic. The unwrapped analysis is contradictory iff 2m >= d+3.
        const long maslov = maslov_exact(m);
        if (maslov >= d + 2 && analyse_unwrapped(d, static_cast<int>(maslov)).clash_residue)
            continue;
        ic.admissible.push_back(m);
    }
    if (use_surjectivity) {
        ic.surjectivity_rule_applied = true;
        std::erase_if(ic.admissible, [](long m) { return m != 1; });
    }
    ic.h1_nonzero_mod_euler = 2 * euler > d + 2;
    return ic;
}

namespace {

void append_exact_trace(int d, long euler, const IndexConstraints& ic, std::vector<TraceStep>& trace)
{
    trace.push_back({"maslov-exact", "N_L = 2m where m is the index of f*(π1 L) in π1(V) = Z/" + s(euler),
                     std::nullopt});
    trace.push_back({"maslov-divides", "N_L | 2N_W = " + s(2 * euler) + ", so m | N_e = " + s(euler),
                     std::nullopt});
    trace.push_back({"oh-i-periodicity",
                     "if 2m >= d+3 = " + s(d + 3) +
                         " then HF ≅ H* graded by Z/2m cannot be 2-periodic, so 2m <= " + s(ic.size_bound),
                     std::nullopt});
    if (ic.surjectivity_rule_applied)
        trace.push_back({"surjectivity", "f*: π1(L) -> π1(V) is onto, so m = 1", std::nullopt});
    trace.push_back({"index-bounds", "admissible m = " + show(ic.admissible), std::nullopt});
    if (ic.h1_nonzero_mod_euler)
        trace.push_back({"h1-nonzero", "2N_e = " + s(2 * euler) + " > d+2 = " + s(d + 2) +
                                           ": m < N_e, so H^1(L;Z/" + s(euler) + ") ≠ 0 and L is not simply connected",
                         std::nullopt});
}

Constraints exact_constraints(const IndexConstraints& ic)
{
    Constraints c;
    c.index = ic.admissible;
    std::vector<long> maslov;
    for (long m : ic.admissible)
        maslov.push_back(maslov_exact(m));
    c.maslov = maslov;
    c.h1_nonzero_mod_euler = ic.h1_nonzero_mod_euler;
    c.surjectivity_rule_applied = ic.surjectivity_rule_applied;
    return c;
}

}  // namespace

Verdict check_exact(int d, long euler, bool use_surjectivity, const CheckOptions& opts)
{
    Verdict v;
    auto ic = check_exact_in_cotangent(d, euler, use_surjectivity);
    gate(simply_connected_base_bundle(d, euler), opts, v.trace);
    append_exact_trace(d, euler, ic, v.trace);
    v.status = Status::Constrained;
    v.constraints = exact_constraints(ic);
    return v;
}

// ---------------------------------------------------------------------------

Verdict check_sphere(int d, long euler, int grading, const CheckOptions& opts)
{
    require(d >= 2, "dimension", "d >= 2 required, got " + s(d));
    require(euler >= 1, "euler-nontrivial", "e must be nontrivial on π2(B) (N_e >= 1)");
    require(grading > 2, "grading", "an integer N > 2 is required, got " + s(grading));
    require((2 * euler) % grading == 0, "seidel-hypothesis",
            "2e = 0 mod N needs N | 2N_e, but " + s(grading) + " ∤ " + s(2 * euler));

    Verdict v;
    v.trace.push_back({"seidel-hypothesis", "N = " + s(grading) + " divides 2N_e = " + s(2 * euler), std::nullopt});
    const auto ctx = gate(simply_connected_base_bundle(d, euler), opts, v.trace);
    const long maslov = maslov_simply_connected(ctx.chern_number);
    v.trace.push_back({"maslov-simply-connected", "S^" + s(d) + " is simply connected: N_L = 2N_W = " + s(maslov),
                       std::nullopt});
    require(seidel_applicable(ctx, grading, {true, maslov}), "seidel-hypothesis",
            "periodicity theorem does not apply");
    v.trace.push_back({"seidel-periodicity", "HF graded by Z/" + s(grading) + " is 2-periodic", std::nullopt});

    const auto sphere = make_sphere(d);
    const auto oh = oh_profiles(sphere, static_cast<int>(maslov));
    const auto local = sphere_local_rule(d, ctx.chern_number);

    std::optional<std::string> pinned_by;
    if (oh.size() == 1)
        pinned_by = "oh-i";
    else if (local)
        pinned_by = "sphere-local-floer";

    if (oh.size() == 1)
        v.trace.push_back({"oh-i", "N_L = " + s(maslov) + " >= d+2 = " + s(d + 2) + ": HF ≅ H*", std::nullopt});
    v.trace.push_back({"sphere-local-floer",
                       local ? "2N_W = " + s(maslov) + " ∤ d+1 = " + s(d + 1) + ": HF ≅ H*"
                             : "2N_W = " + s(maslov) + " | d+1 = " + s(d + 1) + ": local rule silent",
                       std::nullopt});

    if (pinned_by) {
        auto w = witness_for(sphere, grading);
        if (!w.two_periodic) {
            v.status = Status::Obstructed;
            v.trace.push_back({"periodicity-contradiction",
                               "fold of H*(S^" + s(d) + ") mod " + s(grading) + " is " + show(w.fold.dims) +
                                   ", not 2-periodic",
                               std::move(w)});
            return v;
        }
        v.status = Status::Inconclusive;
        const bool exception = grading == 4 && d % 4 == 2;
        v.trace.push_back({exception ? "n4-exception" : "fold-periodic",
                           "fold of H*(S^" + s(d) + ") mod " + s(grading) + " is " + show(w.fold.dims) +
                               ", which is 2-periodic" +
                               (exception ? " (N = 4, d ≡ 2 mod 4)" : ""),
                           std::move(w)});
        return v;
    }

    v.status = Status::Inconclusive;
    if (oh.size() == 2) {
        auto report = hf_feasible(oh, grading);
        v.trace.push_back({"oh-ii",
                           "N_L = d+1: HF ≅ H* or H* without degrees 0 and d; the second is 0 for a sphere and is "
                           "trivially periodic (" + std::string(to_string(report.status)) + ")",
                           std::nullopt});
    } else {
        v.trace.push_back({"no-forcing-rule",
                           "N_L = " + s(maslov) + " < d+1 and 2N_W | d+1: HF is not pinned down", std::nullopt});
    }
    return v;
}

// ---------------------------------------------------------------------------

Verdict check_torus(int d, long euler, const CheckOptions& opts)
{
    require(d >= 1, "dimension", "d >= 1 required, got " + s(d));
    require(euler >= 1, "euler-nonzero", "the Euler class must be nonzero (N_e >= 1)");

    Verdict v;
    const auto ctx = gate(simply_connected_base_bundle(d, euler), opts, v.trace);
    const auto torus = make_torus(d);
    v.trace.push_back({"maslov-parity", "T^" + s(d) + " is orientable: its Maslov number N is even", std::nullopt});

    std::vector<long> candidates;
    for (long n = 2; n <= 2 * euler; n += 2)
        if ((2 * euler) % n == 0)
            candidates.push_back(n);
    v.trace.push_back({"maslov-divides", "N | 2N_W = " + s(2 * euler) + ": candidates " + show(candidates),
                       std::nullopt});

    std::vector<long> retained;
    for (long n : candidates) {
        const int N = static_cast<int>(n);
        if (N == 2) {
            retained.push_back(n);
            v.trace.push_back({"seidel-periodicity", "N = 2: a shift by 2 is the identity on Z/2, no constraint",
                               std::nullopt});
            continue;
        }
        if (!seidel_applicable(ctx, N, {false, n})) {
            retained.push_back(n);
            v.trace.push_back({"seidel-hypothesis", "N = " + s(n) + ": periodicity does not apply", std::nullopt});
            continue;
        }
        auto cert = ss_collapse_certificate(torus, N);
        if (!cert) {
            retained.push_back(n);
            v.trace.push_back({"biran-collapse", "N = " + s(n) + ": collapse not forced by degrees", std::nullopt});
            continue;
        }
        v.trace.push_back({"biran-collapse",
                           "N = " + s(n) + ": δ_1 vanishes on H^1 (target degree " + s(2 - N) +
                               " < 0) and H* is generated by H^1, so E_1 = E_∞ and HF ≅ H*",
                           std::nullopt});
        auto w = witness_for(torus, N);
        const auto identity = torus_identity_check(d, N);
        if (w.two_periodic) {
            retained.push_back(n);
            v.trace.push_back({"fold-periodic", "N = " + s(n) + ": fold " + show(w.fold.dims) + " is 2-periodic",
                               std::move(w)});
            continue;
        }
        v.trace.push_back({"periodicity-contradiction",
                           "N = " + s(n) + ": S = " + show(identity.sums) + ", N·S_0 = " + identity.n_times_s0.str() +
                               " vs 2^d = " + identity.two_pow_d.str() + "; not 2-periodic",
                           std::move(w)});
        // At a multiple of 2N every term of the cosine sum is positive.
        const int witness_d = static_cast<int>(2 * n * ((std::max(d, 2) + 2 * n - 1) / (2 * n)));
        const auto far = torus_identity_check(witness_d, N);
        v.trace.push_back({"identity-witness",
                           "at d' = " + s(witness_d) + ": N·S_0 = " + far.n_times_s0.str() + " > 2^d' = " +
                               far.two_pow_d.str(),
                           std::nullopt});
    }

    v.status = Status::Constrained;
    v.constraints.maslov = retained;
    v.trace.push_back({"forced-maslov", "surviving Maslov numbers " + show(retained), std::nullopt});
    return v;
}

// ---------------------------------------------------------------------------

namespace {

enum class AtOutcome { BelowBound, Excluded, Retained, Discrepancy, NotCollapsed };

AtOutcome product_spheres_at(int l, int m, int N, const CutContext& ctx, std::vector<TraceStep>& trace)
{
    const auto ring = make_product_spheres(l, m);
    if (N <= m + 1) {
        trace.push_back({"below-bound", "N = " + s(N) + " <= m+1 = " + s(m + 1) + ": no constraint", std::nullopt});
        return AtOutcome::BelowBound;
    }
    if (!seidel_applicable(ctx, N, {false, N})) {
        trace.push_back({"seidel-hypothesis", "N = " + s(N) + ": periodicity does not apply", std::nullopt});
        return AtOutcome::NotCollapsed;
    }
    auto cert = ss_collapse_certificate(ring, N);
    if (!cert) {
        trace.push_back({"biran-collapse", "N = " + s(N) + ": collapse not forced by degrees", std::nullopt});
        return AtOutcome::NotCollapsed;
    }
    trace.push_back({"biran-collapse",
                     "N = " + s(N) + " >= m+2: δ_1 vanishes on H^" + s(l) + " and H^" + s(m) + " (targets " +
                         s(l + 1 - N) + ", " + s(m + 1 - N) + " < 0); H^" + s(l + m) +
                         " is assumed generated by them, so HF ≅ H*",
                     std::nullopt});
    auto w = witness_for(ring, N);
    if (!w.two_periodic) {
        trace.push_back({"periodicity-contradiction",
                         "N = " + s(N) + ": fold " + show(w.fold.dims) + " is not 2-periodic", std::move(w)});
        return AtOutcome::Excluded;
    }
    if (l == m) {
        trace.push_back({"discrepancy",
                         "N = " + s(N) + ": fold " + show(w.fold.dims) +
                             " is 2-periodic as a dimension vector although the l = m case is expected to be "
                             "obstructed; reported, not overridden",
                         std::move(w)});
        return AtOutcome::Discrepancy;
    }
    const bool listed = (l == 1 && m == 2 && N == 4) || (l == 4 && m == 6 && N == 8);
    if (!listed) {
        trace.push_back({"discrepancy",
                         "N = " + s(N) + ": fold " + show(w.fold.dims) +
                             " is 2-periodic although only (l,m) = (1,2) and (4,6) are expected to exceed m+1; "
                             "N retained and flagged",
                         std::move(w)});
        return AtOutcome::Discrepancy;
    }
    trace.push_back({"fold-periodic", "N = " + s(N) + ": fold " + show(w.fold.dims) + " is 2-periodic; N retained",
                     std::move(w)});
    return AtOutcome::Retained;
}

}  // namespace

Verdict check_product_spheres(int l, int m, long euler, const CheckOptions& opts)
{
    make_product_spheres(l, m);  // validates 1 <= l <= m
    require(euler >= 1, "euler-nonzero", "the Euler class must be nonzero (N_e >= 1)");

    Verdict v;
    const auto ctx = gate(simply_connected_base_bundle(l + m, euler), opts, v.trace);
    v.trace.push_back({"even-maslov-only", "only even Maslov numbers are enumerated", std::nullopt});
    std::vector<long> candidates;
    for (long n = 2; n <= 2 * euler; n += 2)
        if ((2 * euler) % n == 0)
            candidates.push_back(n);
    v.trace.push_back({"maslov-divides", "N | 2N_W = " + s(2 * euler) + ": candidates " + show(candidates),
                       std::nullopt});

    std::vector<long> surviving, above;
    for (long n : candidates) {
        switch (product_spheres_at(l, m, static_cast<int>(n), ctx, v.trace)) {
        case AtOutcome::Excluded:
            break;
        case AtOutcome::Discrepancy:
            v.constraints.discrepancy = true;
            [[fallthrough]];
        case AtOutcome::Retained:
        case AtOutcome::NotCollapsed:
            above.push_back(n);
            [[fallthrough]];
        case AtOutcome::BelowBound:
            surviving.push_back(n);
            break;
        }
    }
    v.status = Status::Constrained;
    v.constraints.maslov = surviving;
    v.constraints.maslov_upper_bound = m + 1;
    v.constraints.retained_above_bound = above;
    v.trace.push_back({"maslov-bound",
                       "N <= m+1 = " + s(m + 1) + " except " + show(above) + "; surviving " + show(surviving),
                       std::nullopt});
    return v;
}

Verdict check_product_spheres_at(int l, int m, int maslov, long euler, const CheckOptions& opts)
{
    make_product_spheres(l, m);
    require(euler >= 1, "euler-nonzero", "the Euler class must be nonzero (N_e >= 1)");
    if (maslov < 2)
        throw Error(ErrorKind::FloerUndefined, "Floer homology needs Maslov number >= 2", "oh-hypothesis");
    require((2 * euler) % maslov == 0, "maslov-divides",
            "the Maslov number divides 2N_W, but " + s(maslov) + " ∤ " + s(2 * euler));

    Verdict v;
    const auto ctx = gate(simply_connected_base_bundle(l + m, euler), opts, v.trace);
    if (maslov % 2 != 0)
        v.trace.push_back({"even-maslov-only", "odd N evaluated by its fold only", std::nullopt});
    switch (product_spheres_at(l, m, maslov, ctx, v.trace)) {
    case AtOutcome::Excluded:
        v.status = Status::Obstructed;
        break;
    case AtOutcome::Retained:
        v.status = Status::Inconclusive;
        v.constraints.retained_above_bound = std::vector<long>{maslov};
        break;
    case AtOutcome::Discrepancy:
        v.status = Status::Inconclusive;
        v.constraints.discrepancy = true;
        v.constraints.retained_above_bound = std::vector<long>{maslov};
        break;
    case AtOutcome::BelowBound:
    case AtOutcome::NotCollapsed:
        v.status = Status::Inconclusive;
        break;
    }
    return v;
}

// ---------------------------------------------------------------------------

Verdict check_lens(int p, int n, const CheckOptions& opts)
{
    if (p < 2 || n < 1)
        throw Error(ErrorKind::InvalidArgument, "lens space needs p >= 2 and n >= 1");
    const auto bundle = lens_bundle(p, n);
    const int d = bundle.total_dim;

    Verdict v;
    auto ic = check_exact_in_cotangent(d, p, false);
    gate(bundle, opts, v.trace);
    v.trace.push_back({"pi1-total-space", "π1(L_p) = " + pi1_total(bundle).to_string(), std::nullopt});
    append_exact_trace(d, p, ic, v.trace);
    v.trace.push_back({"lens-parity", "2m = 2n+3 = " + s(2 * n + 3) + " is odd, so m <= n+1 = " + s(n + 1),
                       std::nullopt});
    if (is_prime(p) && p > n + 1)
        v.trace.push_back({"lens-prime", "p = " + s(p) + " prime and > n+1: m ∈ {1, p} and p is excluded, so m = 1",
                           std::nullopt});
    v.status = Status::Constrained;
    v.constraints = exact_constraints(ic);
    return v;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::Sphere: return "sphere";
    case Family::Torus: return "torus";
    case Family::ProductSpheres: return "prodsph";
    case Family::Lens: return "lens";
    case Family::Exact: return "exact";
    case Family::SimplyConnected: return "sc";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    for (auto f : {Family::Sphere, Family::Torus, Family::ProductSpheres, Family::Lens, Family::Exact,
                   Family::SimplyConnected})
        if (to_string(f) == name)
            return f;
    throw Error(ErrorKind::Parse, "unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_parameters(Family family)
{
    switch (family) {
    case Family::Sphere:
    case Family::SimplyConnected: return {"d", "euler", "grading"};
    case Family::Torus:
    case Family::Exact: return {"d", "euler"};
    case Family::ProductSpheres: return {"l", "m", "euler", "maslov"};
    case Family::Lens: return {"p", "n"};
    }
    return {};
}

ScanTable scan(Family family, const std::vector<ParamRange>& ranges, const CheckOptions& opts)
{
    const auto allowed = family_parameters(family);
    std::map<std::string, ParamRange> given;
    for (const auto& r : ranges) {
        if (std::find(allowed.begin(), allowed.end(), r.name) == allowed.end())
            throw Error(ErrorKind::InvalidArgument,
                        "family " + std::string(to_string(family)) + " has no parameter '" + r.name + "'");
        if (!given.emplace(r.name, r).second)
            throw Error(ErrorKind::InvalidArgument, "parameter '" + r.name + "' given twice");
    }

    auto need = [&](const std::string& name) {
        if (!given.count(name))
            throw Error(ErrorKind::InvalidArgument,
                        "family " + std::string(to_string(family)) + " needs a range for '" + name + "'");
    };
    const bool graded = family == Family::Sphere || family == Family::SimplyConnected;
    if (graded) {
        need("d");
        if (!given.count("euler") && !given.count("grading"))
            throw Error(ErrorKind::InvalidArgument, "give a range for 'euler', 'grading', or both");
    } else if (family == Family::ProductSpheres) {
        need("l");
        need("m");
        if (!given.count("euler") && !given.count("maslov"))
            throw Error(ErrorKind::InvalidArgument, "give a range for 'euler', 'maslov', or both");
    } else {
        for (const auto& name : allowed)
            need(name);
    }

    ScanTable table{family, {}, {}};
    for (const auto& name : allowed)
        if (given.count(name))
            table.columns.push_back(name);

    // Odometer over the given columns, first column most significant.
    std::vector<long> current;
    for (const auto& name : table.columns) {
        const auto& r = given.at(name);
        if (r.hi < r.lo)
            return table;
        current.push_back(r.lo);
    }

    auto evaluate = [&](const std::map<std::string, long>& p) -> Verdict {
        auto get = [&](const char* key) { return p.at(key); };
        switch (family) {
        case Family::Sphere:
        case Family::SimplyConnected: {
            const long grading = p.count("grading") ? get("grading") : 2 * get("euler");
            const long euler = p.count("euler") ? get("euler") : minimal_euler_for(static_cast<int>(grading));
            return family == Family::Sphere
                       ? check_sphere(static_cast<int>(get("d")), euler, static_cast<int>(grading), opts)
                       : check_simply_connected_in_cut(static_cast<int>(get("d")), euler, static_cast<int>(grading),
                                                       opts);
        }
        case Family::Torus:
            return check_torus(static_cast<int>(get("d")), get("euler"), opts);
        case Family::Exact:
            return check_exact(static_cast<int>(get("d")), get("euler"), false, opts);
        case Family::Lens:
            return check_lens(static_cast<int>(get("p")), static_cast<int>(get("n")), opts);
        case Family::ProductSpheres: {
            const int l = static_cast<int>(get("l"));
            const int m = static_cast<int>(get("m"));
            if (!p.count("maslov"))
                return check_product_spheres(l, m, get("euler"), opts);
            const int maslov = static_cast<int>(get("maslov"));
            const long euler = p.count("euler") ? get("euler") : minimal_euler_for(maslov);
            return check_product_spheres_at(l, m, maslov, euler, opts);
        }
        }
        throw Error(ErrorKind::InvalidArgument, "unsupported family");
    };

    while (true) {
        std::map<std::string, long> params;
        ScanRow row;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            params[table.columns[i]] = current[i];
            row.params.emplace_back(table.columns[i], current[i]);
        }
        const bool skip = family == Family::ProductSpheres && params.at("l") > params.at("m");
        if (!skip) {
            try {
                row.verdict = evaluate(params);
            } catch (const Error& e) {
                row.error = e;
            }
            table.rows.push_back(std::move(row));
        }

        std::size_t i = current.size();
        while (i > 0) {
            --i;
            if (current[i] < given.at(table.columns[i]).hi) {
                ++current[i];
                break;
            }
            current[i] = given.at(table.columns[i]).lo;
            if (i == 0)
                return table;
        }
        if (current.empty())
            return table;
    }
}

}  // namespace lagcut
