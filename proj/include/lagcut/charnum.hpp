#pragma once

#include "lagcut/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lagcut {

/// Principal circle bundle V^d -> B^{d-1}, described by the data the
/// obstruction calculus consumes.
struct CircleBundle {
    int total_dim = 2;        ///< d = dim V, >= 2
    long euler_number = 0;    ///< N_e >= 0, generator of <e, π2(B)>
    bool base_simply_connected = false;
    bool euler_nontrivial_on_pi2 = false;
    std::string name;

    /// Validated constructor. Throws Error(InvalidArgument).
    static CircleBundle make(int total_dim, long euler_number, bool base_simply_connected,
                             bool euler_nontrivial_on_pi2, std::string name = {});
};

/// Hopf bundle S^{2n+1} -> CP^n.
CircleBundle hopf_bundle(int n);
/// Lens space L_p^{2n+1} -> CP^n.
CircleBundle lens_bundle(int p, int n);
/// Stiefel manifold V_2(R^{n+2}) -> oriented Grassmannian of 2-planes.
CircleBundle stiefel_bundle(int n);
/// Trivial bundle S^{d-1} x S^1 -> S^{d-1}.
CircleBundle trivial_bundle(int d);
/// hopf:n=2, lens:p=5,n=1, stiefel:n=3, trivial:d=3.
CircleBundle parse_bundle(std::string_view spec);

/**
 * The monotone symplectic cut W_ξ at a negative level, with every
 * cohomology class stored as its coefficient on the pulled-back Euler
 * generator (q∘p)*e, in units of π.
 */
struct CutContext {
    CircleBundle bundle;
    Rational level;               ///< ξ < 0
    long chern_number = 0;        ///< N_W = N_e
    Rational omega_coeff;         ///< [ω^W] = omega_coeff·π·(q∘p)*e, equals -2ξ
    Rational reduced_form_coeff;  ///< [ω on Q_ξ] = coeff·π·q*e, equals -2ξ
    Rational chern_q_real;        ///< c1(Q_ξ) in real coefficients, always 0
    Rational k_w;                 ///< monotonicity constant of W, π units
    Rational k_l;                 ///< monotonicity constant of V in W, π units

    /// [ω^W] evaluated on a generator of π2: omega_coeff·N_e (π units).
    Rational omega_on_pi2_generator() const;
    bool omega_class_vanishes() const { return chern_number == 0; }
};

/// Throws Error(NotMonotoneLevel) unless ξ < 0.
CutContext build_cut(const CircleBundle& bundle, const Rational& level);

/// π1(V) for a simply connected base. order == 0 means Z.
struct CyclicGroup {
    long order = 0;
    std::string to_string() const;
};

/// Throws Error(Undeterminable) when the base is not simply connected.
CyclicGroup pi1_total(const CircleBundle& bundle);

struct ZeroSectionMaslov {
    int maslov_number = 2;            ///< N_V
    std::string pi2_relative = "Z";   ///< π2(W, V)
    int generator_maslov = 2;
    Rational generator_area;          ///< π units, -2ξ
    Rational monotone_constant;       ///< π units, -ξ
};

ZeroSectionMaslov maslov_zero_section(const CutContext& ctx);

/// N_L = 2 N_W for a simply connected candidate in a monotone ambient.
long maslov_simply_connected(long chern_number);

/// The predicate 2N_W | q·N_L for a candidate whose π1 is q-torsion.
struct TorsionMaslovConstraint {
    long chern_number;
    long torsion;

    bool admits(long maslov_number) const;
    /// Smallest M with (2N_W | q·N_L) <=> (M | N_L).
    long reduced_modulus() const;
};

TorsionMaslovConstraint maslov_torsion_constraint(long chern_number, long torsion);

/// N_L = 2m for an exact Lagrangian with vanishing Maslov class in T*V.
long maslov_exact(long index);

struct WeightData {
    std::vector<long> weights;
    long sum = 0;

    explicit WeightData(std::vector<long> w);
};

/// Weights at a fixed point on Q_ξ: identity on T Q_ξ, u on the normal line.
WeightData cut_fixed_point_weights(int complex_dim);
/// Weights at a fixed point of the zero section for a semi-free action with
/// a codimension-two fixed locus: one rotation plane, weights u and ū.
WeightData semifree_zero_section_weights(int complex_dim);

/// c1 of the gradient sphere equals w(source) - w(sink), and the two weight
/// sums agree mod N_W when N_W > 0.
bool gradient_sphere_check(const WeightData& source, const WeightData& sink, long c1, long chern_number);

struct MonotonicityCase {
    std::string name;
    Rational omega;                  ///< π units
    Rational c1;
    std::optional<Rational> ratio;   ///< ω / c1 in π units; none when c1 = 0
    bool consistent = false;
};

struct SemifreeMonotonicityReport {
    Rational level;
    Rational k_w;                    ///< -2ξ
    std::array<MonotonicityCase, 3> cases;
    bool monotone = false;
};

SemifreeMonotonicityReport semifree_monotonicity_cases(const Rational& level);

}  // namespace lagcut
