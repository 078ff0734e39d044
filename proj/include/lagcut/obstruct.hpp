#pragma once

#include "lagcut/charnum.hpp"
#include "lagcut/coring.hpp"
#include "lagcut/error.hpp"
#include "lagcut/floer.hpp"
#include "lagcut/fold.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lagcut {

enum class Status { Obstructed, Constrained, Inconclusive };

std::string_view to_string(Status status);

/// A fold that an obstruction step rests on, reproducible as
/// fold_mod(parse_candidate(candidate), fold.modulus).
struct FoldWitness {
    std::string candidate;
    FoldedProfile fold;
    bool two_periodic = false;
};

struct TraceStep {
    std::string cite;    ///< rule tag, e.g. "oh-i", "seidel-periodicity"
    std::string detail;
    std::optional<FoldWitness> witness;
};

struct CohomologyShape {
    std::string model;          ///< e.g. "CP^3"
    std::vector<BigInt> betti;
};

struct Constraints {
    std::optional<std::vector<long>> index;              ///< admissible m
    std::optional<std::vector<long>> maslov;             ///< admissible Maslov numbers
    std::optional<long> maslov_upper_bound;
    std::optional<std::vector<long>> retained_above_bound;
    std::optional<CohomologyShape> cohomology;
    std::optional<bool> h1_nonzero_mod_euler;
    std::optional<bool> surjectivity_rule_applied;
    bool discrepancy = false;

    bool empty() const;
};

/**
 * Outcome of a theorem pipeline. Never claims existence: when no rule forces
 * a contradiction the status is Inconclusive.
 */
struct Verdict {
    Status status = Status::Inconclusive;
    Constraints constraints;
    std::vector<TraceStep> trace;
};

struct IndexConstraints {
    long divisor_bound = 0;   ///< m | N_e
    long size_bound = 0;      ///< 2m <= d + 2
    std::vector<long> admissible;
    bool surjectivity_rule_applied = false;
    bool h1_nonzero_mod_euler = false;  ///< 2N_e > d + 2
};

struct CheckOptions {
    Rational level = -1;  ///< cut level ξ; checks refuse ξ >= 0
};

/// Simply connected monotone Lagrangians in the cut, graded mod N | 2N_e.
Verdict check_simply_connected_in_cut(int d, long euler, int grading, const CheckOptions& opts = {});

/// Index of f*(π1 L) in π1(V) for exact L ⊂ T*V with zero Maslov class.
IndexConstraints check_exact_in_cotangent(int d, long euler, bool use_surjectivity);
Verdict check_exact(int d, long euler, bool use_surjectivity, const CheckOptions& opts = {});

Verdict check_sphere(int d, long euler, int grading, const CheckOptions& opts = {});
Verdict check_torus(int d, long euler, const CheckOptions& opts = {});

/// All even Maslov numbers N | 2N_e for S^l x S^m.
Verdict check_product_spheres(int l, int m, long euler, const CheckOptions& opts = {});
/// A single Maslov number N for S^l x S^m (N | 2N_e required).
Verdict check_product_spheres_at(int l, int m, int maslov, long euler, const CheckOptions& opts = {});

Verdict check_lens(int p, int n, const CheckOptions& opts = {});

/// Smallest N_e >= 1 with N | 2N_e.
long minimal_euler_for(int grading);

enum class Family { Sphere, Torus, ProductSpheres, Lens, Exact, SimplyConnected };

std::string_view to_string(Family family);
/// "sphere", "torus", "prodsph", "lens", "exact", "sc". Throws Error(Parse).
Family parse_family(std::string_view name);
/// Parameter names a family accepts, in row-ordering precedence.
std::vector<std::string> family_parameters(Family family);

struct ParamRange {
    std::string name;
    long lo = 0;
    long hi = -1;  ///< inclusive; hi < lo is an empty range
};

struct ScanRow {
    std::vector<std::pair<std::string, long>> params;
    std::optional<Verdict> verdict;
    std::optional<Error> error;
};

struct ScanTable {
    Family family;
    std::vector<std::string> columns;
    std::vector<ScanRow> rows;
};

/**
 * Evaluate one check per parameter tuple. Rows are ordered
 * lexicographically by the family's parameter order. Per-row hypothesis
 * failures are recorded on the row; they do not abort the scan.
 *
 *   sphere: d, euler, grading   (grading defaults to 2·euler; euler to the
 *                                smallest value with grading | 2·euler)
 *   sc:     d, euler, grading   (same defaults)
 *   torus:  d, euler
 *   prodsph: l, m, euler, maslov (maslov optional; rows with l > m skipped)
 *   lens:   p, n
 *   exact:  d, euler
 */
ScanTable scan(Family family, const std::vector<ParamRange>& ranges, const CheckOptions& opts = {});

}  // namespace lagcut
