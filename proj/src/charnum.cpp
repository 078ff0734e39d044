#include "lagcut/charnum.hpp"

#include "lagcut/error.hpp"

#include <charconv>
#include <numeric>

namespace lagcut {

CircleBundle CircleBundle::make(int total_dim, long euler_number, bool base_simply_connected,
                                bool euler_nontrivial_on_pi2, std::string name)
{
    if (total_dim < 2)
        throw Error(ErrorKind::InvalidArgument, "bundle total space needs dim >= 2, got " + std::to_string(total_dim));
    if (euler_number < 0)
        throw Error(ErrorKind::InvalidArgument,
                    "Euler number is a nonnegative generator, got " + std::to_string(euler_number));
    if (euler_nontrivial_on_pi2 && euler_number == 0)
        throw Error(ErrorKind::InvalidArgument, "an Euler class nontrivial on π2(B) needs N_e >= 1");
    if (name.empty())
        name = "bundle(d=" + std::to_string(total_dim) + ",N_e=" + std::to_string(euler_number) + ")";
    return CircleBundle{total_dim, euler_number, base_simply_connected, euler_nontrivial_on_pi2, std::move(name)};
}

CircleBundle hopf_bundle(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "Hopf bundle needs n >= 1");
    return CircleBundle::make(2 * n + 1, 1, true, true, "S^" + std::to_string(2 * n + 1) + " -> CP^" + std::to_string(n));
}

CircleBundle lens_bundle(int p, int n)
{
    if (p < 1 || n < 1)
        throw Error(ErrorKind::InvalidArgument, "lens space needs p >= 1 and n >= 1");
    return CircleBundle::make(2 * n + 1, p, true, true,
                              "L_" + std::to_string(p) + "^" + std::to_string(2 * n + 1) + " -> CP^" + std::to_string(n));
}

CircleBundle stiefel_bundle(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "Stiefel bundle needs n >= 1");
    // Base is S^2 for n = 1, S^2 x S^2 for n = 2, a quadric for n >= 3.
    const long euler = n == 1 ? 2 : 1;
    return CircleBundle::make(2 * n + 1, euler, true, true,
                              "V_2(R^" + std::to_string(n + 2) + ") -> G~_2(R^" + std::to_string(n + 2) + ")");
}

CircleBundle trivial_bundle(int d)
{
    if (d < 2)
        throw Error(ErrorKind::InvalidArgument, "trivial bundle needs d >= 2");
    return CircleBundle::make(d, 0, d >= 3, false, "S^" + std::to_string(d - 1) + " x S^1");
}

CircleBundle parse_bundle(std::string_view spec)
{
    auto fail = [&](const std::string& why) -> CircleBundle {
        throw Error(ErrorKind::Parse, "bad bundle specifier '" + std::string(spec) + "': " + why);
    };
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        return fail("expected <kind>:<fields>");
    auto kind = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);

    std::vector<std::pair<std::string, int>> fields;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            return fail("field '" + std::string(item) + "' lacks '='");
        auto text = item.substr(eq + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size())
            return fail("'" + std::string(text) + "' is not an integer");
        fields.emplace_back(std::string(item.substr(0, eq)), value);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    auto get = [&](std::string_view key) {
        for (const auto& [k, v] : fields)
            if (k == key)
                return v;
        fail("missing field '" + std::string(key) + "'");
        return 0;
    };
    auto expect_count = [&](std::size_t n) {
        if (fields.size() != n)
            fail("unexpected fields");
    };

    if (kind == "hopf") {
        expect_count(1);
        return hopf_bundle(get("n"));
    }
    if (kind == "lens") {
        expect_count(2);
        return lens_bundle(get("p"), get("n"));
    }
    if (kind == "stiefel") {
        expect_count(1);
        return stiefel_bundle(get("n"));
    }
    if (kind == "trivial") {
        expect_count(1);
        return trivial_bundle(get("d"));
    }
    return fail("unknown kind '" + std::string(kind) + "'");
}

Rational CutContext::omega_on_pi2_generator() const
{
    return omega_coeff * chern_number;
}

CutContext build_cut(const CircleBundle& bundle, const Rational& level)
{
    if (level >= 0)
        throw Error(ErrorKind::NotMonotoneLevel,
                    "the cut at level " + to_string(level) + " is not monotone; a negative level is required",
                    "monotone-cut");
    CutContext ctx;
    ctx.bundle = bundle;
    ctx.level = level;
    ctx.chern_number = bundle.euler_number;
    ctx.omega_coeff = -2 * level;
    ctx.reduced_form_coeff = -2 * level;
    ctx.chern_q_real = 0;
    ctx.k_w = -2 * level;
    ctx.k_l = -level;
    return ctx;
}

std::string CyclicGroup::to_string() const
{
    if (order == 0)
        return "Z";
    if (order == 1)
        return "trivial";
    return "Z/" + std::to_string(order);
}

CyclicGroup pi1_total(const CircleBundle& bundle)
{
    if (!bundle.base_simply_connected)
        throw Error(ErrorKind::Undeterminable,
                    "π1(V) is only determined here for a simply connected base", "pi1-total-space");
    return CyclicGroup{bundle.euler_number};
}

ZeroSectionMaslov maslov_zero_section(const CutContext& ctx)
{
    ZeroSectionMaslov out;
    out.generator_area = -2 * ctx.level;
    out.monotone_constant = out.generator_area / out.generator_maslov;
    return out;
}

long maslov_simply_connected(long chern_number)
{
    if (chern_number < 0)
        throw Error(ErrorKind::InvalidArgument, "Chern number must be >= 0");
    return 2 * chern_number;
}

bool TorsionMaslovConstraint::admits(long maslov_number) const
{
    const long modulus = 2 * chern_number;
    const long value = torsion * maslov_number;
    if (modulus == 0)
        return value == 0;
    return value % modulus == 0;
}

long TorsionMaslovConstraint::reduced_modulus() const
{
    const long modulus = 2 * chern_number;
    return modulus / std::gcd(modulus, torsion);
}

TorsionMaslovConstraint maslov_torsion_constraint(long chern_number, long torsion)
{
    if (torsion == 0)
        throw Error(ErrorKind::InvalidArgument, "torsion exponent q must be nonzero");
    if (chern_number < 0)
        throw Error(ErrorKind::InvalidArgument, "Chern number must be >= 0");
    return TorsionMaslovConstraint{chern_number, torsion < 0 ? -torsion : torsion};
}

long maslov_exact(long index)
{
    if (index < 1)
        throw Error(ErrorKind::InvalidArgument, "index m must be >= 1, got " + std::to_string(index));
    return 2 * index;
}

WeightData::WeightData(std::vector<long> w)
    : weights(std::move(w)), sum(std::accumulate(weights.begin(), weights.end(), 0L))
{
}

WeightData cut_fixed_point_weights(int complex_dim)
{
    if (complex_dim < 1)
        throw Error(ErrorKind::InvalidArgument, "complex dimension must be >= 1");
    std::vector<long> w(static_cast<std::size_t>(complex_dim), 0);
    w.back() = 1;
    return WeightData(std::move(w));
}

WeightData semifree_zero_section_weights(int complex_dim)
{
    if (complex_dim < 2)
        throw Error(ErrorKind::InvalidArgument, "a rotation plane needs complex dimension >= 2");
    std::vector<long> w(static_cast<std::size_t>(complex_dim), 0);
    w[0] = 1;
    w[1] = -1;
    return WeightData(std::move(w));
}

bool gradient_sphere_check(const WeightData& source, const WeightData& sink, long c1, long chern_number)
{
    if (c1 != source.sum - sink.sum)
        return false;
    if (chern_number > 0 && (source.sum - sink.sum) % chern_number != 0)
        return false;
    return true;
}

SemifreeMonotonicityReport semifree_monotonicity_cases(const Rational& level)
{
    if (level >= 0)
        throw Error(ErrorKind::NotMonotoneLevel, "semi-free monotonicity needs a negative level", "monotone-cut");

    SemifreeMonotonicityReport report;
    report.level = level;
    report.k_w = -2 * level;

    // Classes from the open piece of T*V: the form is exact there and c1 vanishes.
    MonotonicityCase open_part{"open-cotangent-part", 0, 0, std::nullopt, true};

    // Disc bundle over Q_ξ: [ω] = -2πξ c1, checked on a class with c1 = 1.
    MonotonicityCase disc_bundle{"disc-bundle", -2 * level, 1, std::nullopt, false};
    disc_bundle.ratio = disc_bundle.omega / disc_bundle.c1;
    disc_bundle.consistent = *disc_bundle.ratio == report.k_w;

    // Gradient sphere from a zero-section fixed point x0 to a fixed point q on
    // Q_ξ. Area is 2π times the drop of h = |z|^2/2, which is H(x0) - ξ = -ξ
    // at x0 and 0 on Q_ξ. Chern number is w(q) - w(x0).
    const Rational h_at_zero_section = Rational(0) - level;
    const Rational h_at_q = 0;
    const auto w_q = cut_fixed_point_weights(2);
    const auto w_x0 = semifree_zero_section_weights(2);
    const long sphere_c1 = w_q.sum - w_x0.sum;
    MonotonicityCase gradient{"gradient-sphere", 2 * (h_at_zero_section - h_at_q), sphere_c1, std::nullopt, false};
    gradient.ratio = gradient.omega / gradient.c1;
    gradient.consistent = *gradient.ratio == report.k_w && gradient_sphere_check(w_q, w_x0, sphere_c1, 1);

    report.cases = {open_part, disc_bundle, gradient};
    report.monotone = open_part.consistent && disc_bundle.consistent && gradient.consistent;
    return report;
}

}  // namespace lagcut
