#pragma once

#include "lagcut/charnum.hpp"
#include "lagcut/error.hpp"
#include "lagcut/fold.hpp"
#include "lagcut/obstruct.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace lagcut {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json big_json(const BigInt& value);
/// {num, den, unit: "pi"}.
Json pi_json(const Rational& coefficient);
/// Nine significant digits.
double round9(double value);
std::string format9(double value);

Json to_json(const FoldedProfile& profile);
Json to_json(const FoldWitness& witness);
Json to_json(const Constraints& constraints);
Json to_json(const Verdict& verdict);
Json to_json(const ScanTable& table);
Json to_json(const Error& error);

std::string render_text(const Verdict& verdict);
std::string render_text(const ScanTable& table);
std::string render_text(const Error& error);

/// Characteristic classes and Maslov data of a cut.
struct ClassReport {
    CutContext ctx;
    ZeroSectionMaslov zero_section;
    std::optional<CyclicGroup> pi1;
    std::string pi1_note;  ///< reason when pi1 is unknown
};

ClassReport class_report(const CircleBundle& bundle, const Rational& level);
Json to_json(const ClassReport& report);
std::string render_text(const ClassReport& report);

struct IdentityReport {
    int d;
    int modulus;
    std::vector<BigInt> sums;
    BigInt n_times_s0;
    BigInt two_pow_d;
    BigInt exact_excess;    ///< N·S_0 - 2^d
    long double trig_sum;   ///< closed-form cosine sum
    double residual;        ///< |exact - trig| / max(1, 2^d)
    double unscaled_residual;
    bool identity_holds;    ///< only meaningful for even N
};

IdentityReport identity_report(int d, int modulus);
Json to_json(const IdentityReport& report);
std::string render_text(const IdentityReport& report);

struct FoldReport {
    std::string candidate;
    std::string label;
    std::vector<BigInt> betti;
    FoldedProfile fold;
    bool two_periodic;
};

FoldReport fold_report(const std::string& candidate, int modulus);
Json to_json(const FoldReport& report);
std::string render_text(const FoldReport& report);

/// Left-aligned columns separated by two spaces.
std::string align_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace lagcut
