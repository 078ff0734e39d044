#include "lagcut/fold.hpp"

#include "lagcut/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace lagcut {

namespace {

void require_modulus(int modulus)
{
    if (modulus < 1)
        throw Error(ErrorKind::InvalidModulus, "grading modulus must be >= 1, got " + std::to_string(modulus));
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

}  // namespace

BigInt FoldedProfile::total() const
{
    return std::accumulate(dims.begin(), dims.end(), BigInt(0));
}

FoldedProfile fold_graded(std::span<const BigInt> graded, int modulus)
{
    require_modulus(modulus);
    FoldedProfile out{modulus, std::vector<BigInt>(static_cast<std::size_t>(modulus), 0)};
    for (std::size_t k = 0; k < graded.size(); ++k)
        out.dims[k % static_cast<std::size_t>(modulus)] += graded[k];
    return out;
}

FoldedProfile fold_mod(const CohomologyRing& ring, int modulus)
{
    return fold_graded(ring.betti(), modulus);
}

bool is_two_periodic(const FoldedProfile& profile)
{
    const auto n = profile.dims.size();
    for (std::size_t j = 0; j < n; ++j)
        if (profile.dims[j] != profile.dims[(j + 2) % n])
            return false;
    return true;
}

BigInt binomial_fold_sum(int d, int modulus, int j)
{
    require_modulus(modulus);
    if (d < 0)
        throw Error(ErrorKind::InvalidDimension, "d must be >= 0, got " + std::to_string(d));
    if (j < 0 || j >= modulus)
        throw Error(ErrorKind::InvalidArgument,
                    "residue j=" + std::to_string(j) + " outside [0, " + std::to_string(modulus) + ")");
    BigInt sum = 0;
    for (int k = j; k <= d; k += modulus)
        sum += binomial(d, k);
    return sum;
}

TorusIdentityReport torus_identity_check(int d, int modulus)
{
    if (d < 1)
        throw Error(ErrorKind::InvalidDimension, "torus dimension must be >= 1, got " + std::to_string(d));
    if (modulus < 2 || modulus % 2 != 0)
        throw Error(ErrorKind::InvalidModulus,
                    "the torus identity needs an even modulus >= 2, got " + std::to_string(modulus));
    TorusIdentityReport report;
    report.sums.reserve(static_cast<std::size_t>(modulus));
    for (int j = 0; j < modulus; ++j)
        report.sums.push_back(binomial_fold_sum(d, modulus, j));
    report.two_pow_d = BigInt(1) << d;
    report.n_times_s0 = report.sums.front() * modulus;
    const bool all_equal = std::all_of(report.sums.begin(), report.sums.end(),
                                       [&](const BigInt& s) { return s == report.sums.front(); });
    report.holds = all_equal && report.n_times_s0 == report.two_pow_d;
    return report;
}

long double cosine_excess(int d, int modulus)
{
    constexpr long double pi = std::numbers::pi_v<long double>;
    long double sum = 0;
    for (int k = 1; k < modulus; ++k) {
        const long double base = 2.0L * std::cos(k * pi / modulus);
        sum += std::pow(base, d) * std::cos(static_cast<long double>(k) * d * pi / modulus);
    }
    return sum;
}

long double unscaled_cosine_excess(int d, int modulus)
{
    constexpr long double pi = std::numbers::pi_v<long double>;
    long double sum = 0;
    for (int k = 1; k < modulus; ++k)
        sum += std::pow(std::cos(k * pi / modulus), d) * std::cos(static_cast<long double>(k) * d * pi / modulus);
    return sum;
}

double roots_of_unity_residual(int d, int modulus)
{
    if (d < 0)
        throw Error(ErrorKind::InvalidDimension, "d must be >= 0, got " + std::to_string(d));
    if (modulus < 2)
        throw Error(ErrorKind::InvalidModulus, "modulus must be >= 2, got " + std::to_string(modulus));
    const BigInt exact = binomial_fold_sum(d, modulus, 0) * modulus - (BigInt(1) << d);
    const long double exact_f = exact.convert_to<long double>();
    const long double scale = std::max(1.0L, std::ldexp(1.0L, d));
    return static_cast<double>(std::fabs(exact_f - cosine_excess(d, modulus)) / scale);
}

bool cp_profile_match(const FoldedProfile& profile, int d)
{
    if (d < 2 || d % 2 != 0)
        throw Error(ErrorKind::InvalidDimension, "CP comparison needs an even d >= 2, got " + std::to_string(d));
    if (profile.modulus != d + 2)
        throw Error(ErrorKind::InvalidModulus, "CP comparison needs modulus d+2 = " + std::to_string(d + 2) +
                                                   ", got " + std::to_string(profile.modulus));
    return profile == fold_mod(make_complex_projective(d / 2), d + 2);
}

}  // namespace lagcut
