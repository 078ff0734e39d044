#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagcut/charnum.hpp"
#include "lagcut/error.hpp"

#include <numeric>
#include <random>

using namespace lagcut;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("bundles")
{
    CHECK(hopf_bundle(2).total_dim == 5);
    CHECK(hopf_bundle(2).euler_number == 1);
    CHECK(lens_bundle(5, 1).euler_number == 5);
    CHECK(lens_bundle(5, 1).total_dim == 3);
    CHECK(stiefel_bundle(1).euler_number == 2);
    CHECK(stiefel_bundle(3).euler_number == 1);
    CHECK(trivial_bundle(3).euler_number == 0);
    CHECK(parse_bundle("lens:p=5,n=1").euler_number == 5);
    CHECK(parse_bundle("hopf:n=2").total_dim == 5);
    CHECK(kind_of([] { CircleBundle::make(1, 1, true, true); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { CircleBundle::make(3, 0, true, true); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { CircleBundle::make(3, -1, true, false); }) == ErrorKind::InvalidArgument);
    CHECK_THROWS_AS(parse_bundle("hopf:k=2"), Error);
}

TEST_CASE("build_cut")
{
    auto ctx = build_cut(hopf_bundle(1), q(-1, 2));
    CHECK(ctx.chern_number == 1);
    CHECK(ctx.omega_coeff == 1);
    CHECK(ctx.k_w == 1);
    CHECK(ctx.k_l == q(1, 2));
    CHECK(ctx.reduced_form_coeff == 1);
    CHECK(ctx.chern_q_real == 0);
    CHECK(pi_multiple(ctx.k_l) == "1/2·π");

    CHECK(build_cut(lens_bundle(7, 3), -1).chern_number == 7);

    auto trivial = build_cut(trivial_bundle(3), -1);
    CHECK(trivial.chern_number == 0);
    CHECK(trivial.omega_on_pi2_generator() == 0);
    CHECK(trivial.omega_class_vanishes());

    CHECK(kind_of([] { build_cut(hopf_bundle(1), 0); }) == ErrorKind::NotMonotoneLevel);
    CHECK(kind_of([] { build_cut(hopf_bundle(1), q(1, 3)); }) == ErrorKind::NotMonotoneLevel);
}

TEST_CASE("K_W = 2 K_L and the class coefficients are exact")
{
    for (long n = -40; n <= -1; ++n)
        for (long d = 1; d <= 7; ++d) {
            const auto ctx = build_cut(lens_bundle(3, 2), q(n, d));
            CHECK(ctx.k_w == 2 * ctx.k_l);
            CHECK(ctx.omega_coeff == -2 * q(n, d));
            CHECK(ctx.k_l == -q(n, d));
            CHECK(ctx.omega_on_pi2_generator() == ctx.omega_coeff * 3);
        }
}

TEST_CASE("pi1 of the total space")
{
    CHECK(pi1_total(hopf_bundle(1)).to_string() == "trivial");
    CHECK(pi1_total(lens_bundle(7, 2)).to_string() == "Z/7");
    CHECK(pi1_total(CircleBundle::make(4, 0, true, false)).to_string() == "Z");
    CHECK(kind_of([] { pi1_total(CircleBundle::make(3, 2, false, true)); }) == ErrorKind::Undeterminable);
}

TEST_CASE("zero section Maslov data")
{
    auto z = maslov_zero_section(build_cut(hopf_bundle(1), q(-1, 2)));
    CHECK(z.maslov_number == 2);
    CHECK(z.pi2_relative == "Z");
    CHECK(z.generator_maslov == 2);
    CHECK(z.generator_area == 1);
    CHECK(z.monotone_constant == q(1, 2));
    CHECK(maslov_zero_section(build_cut(hopf_bundle(1), -1)).generator_area == 2);
    for (long n = 1; n <= 9; ++n)
        CHECK(maslov_zero_section(build_cut(hopf_bundle(1), q(-n, 3))).maslov_number == 2);
}

TEST_CASE("Maslov numbers")
{
    CHECK(maslov_simply_connected(1) == 2);
    CHECK(maslov_simply_connected(4) == 8);
    CHECK(maslov_simply_connected(0) == 0);
    for (long nw = 1; nw <= 20; ++nw)
        CHECK((2 * nw) % maslov_simply_connected(nw) == 0);

    auto lens = maslov_torsion_constraint(5, 5);
    CHECK(lens.reduced_modulus() == 2);
    CHECK(lens.admits(2));
    CHECK_FALSE(lens.admits(3));
    auto q1 = maslov_torsion_constraint(3, 1);
    CHECK(q1.reduced_modulus() == 6);
    auto t = maslov_torsion_constraint(3, 2);
    CHECK(t.reduced_modulus() == 3);
    for (long nl = 1; nl <= 30; ++nl)
        CHECK(t.admits(nl) == (nl % 3 == 0));
    CHECK(kind_of([] { maslov_torsion_constraint(3, 0); }) == ErrorKind::InvalidArgument);

    CHECK(maslov_exact(1) == 2);
    CHECK(maslov_exact(4) == 8);
    CHECK(kind_of([] { maslov_exact(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("weights and the gradient sphere")
{
    CHECK(cut_fixed_point_weights(4).sum == 1);
    CHECK(semifree_zero_section_weights(4).sum == 0);
    CHECK(gradient_sphere_check(WeightData({1}), WeightData({0}), 1, 1));
    CHECK(gradient_sphere_check(cut_fixed_point_weights(3), semifree_zero_section_weights(3), 1, 1));
    CHECK(gradient_sphere_check(WeightData({2, 1}), WeightData({3}), 0, 5));
    CHECK_FALSE(gradient_sphere_check(WeightData({2}), WeightData({0}), 1, 1));
    CHECK_FALSE(gradient_sphere_check(WeightData({3}), WeightData({1}), 2, 3));
}

TEST_CASE("gradient sphere check on random triples")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> weight(-20, 20), chern(1, 12), count(1, 6), shift(-5, 5);
    auto random_weights = [&] {
        std::vector<long> w(static_cast<std::size_t>(count(rng)));
        for (auto& x : w)
            x = weight(rng);
        return w;
    };
    for (int i = 0; i < 10000; ++i) {
        const long nw = chern(rng);
        WeightData source(random_weights());
        auto sink_weights = random_weights();
        // Move the sink sum into the source class mod N_W.
        const long gap = source.sum - std::accumulate(sink_weights.begin(), sink_weights.end(), 0L);
        const long r = ((gap % nw) + nw) % nw;
        sink_weights.push_back(r + nw * shift(rng));
        WeightData sink(sink_weights);
        const long c1 = source.sum - sink.sum;
        REQUIRE(c1 % nw == 0);
        CHECK(gradient_sphere_check(source, sink, c1, nw));

        long delta = 0;
        while (delta == 0)
            delta = shift(rng);
        CHECK_FALSE(gradient_sphere_check(source, sink, c1 + delta, nw));
        if (nw > 1) {
            // Sink sum off the class mod N_W, c1 kept consistent with the sums.
            long off = 0;
            while (off % nw == 0)
                off = shift(rng);
            auto w = sink_weights;
            w.push_back(off);
            WeightData moved(w);
            CHECK_FALSE(gradient_sphere_check(source, moved, source.sum - moved.sum, nw));
        }
    }
}

TEST_CASE("semi-free monotonicity cases")
{
    auto r = semifree_monotonicity_cases(-1);
    CHECK(r.monotone);
    CHECK(r.k_w == 2);
    CHECK(r.cases[0].omega == 0);
    CHECK(r.cases[0].c1 == 0);
    CHECK_FALSE(r.cases[0].ratio.has_value());
    CHECK(*r.cases[1].ratio == 2);
    CHECK(r.cases[2].omega == 2);
    CHECK(r.cases[2].c1 == 1);
    CHECK(*r.cases[2].ratio == r.k_w);

    auto half = semifree_monotonicity_cases(q(-1, 2));
    CHECK(half.cases[2].omega == 1);
    CHECK(*half.cases[2].ratio == 1);
    CHECK(half.monotone);
    CHECK(kind_of([] { semifree_monotonicity_cases(0); }) == ErrorKind::NotMonotoneLevel);
}

TEST_CASE("rational literals")
{
    CHECK(parse_rational("-1/2") == q(-1, 2));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-0.25") == q(-1, 4));
    CHECK(parse_rational(".5") == q(1, 2));
    CHECK(parse_rational("-0.1") == q(-1, 10));
    CHECK(parse_rational("010/020") == q(1, 2));
    CHECK(parse_rational("007") == 7);
    CHECK(parse_rational("0.0") == 0);
    CHECK(parse_rational("4/6") == q(2, 3));
    for (const char* bad : {"", "-", "1/0", "a", "1/2/3", "1.2.3", "1e3", "--1", "1/-2"})
        CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::Parse);
    CHECK(to_string(q(-3, 4)) == "-3/4");
    CHECK(to_string(q(5)) == "5");
    CHECK(pi_multiple(q(0)) == "0");
    CHECK(pi_multiple(q(2)) == "2·π");
}
