#include "lagcut/render.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace lagcut {

namespace {

std::string join(const std::vector<BigInt>& values, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += values[i].str();
    }
    return out;
}

std::string join(const std::vector<long>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

Json big_array(const std::vector<BigInt>& values)
{
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(big_json(v));
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json big_json(const BigInt& value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(value));
    return Json(value.str());
}

Json pi_json(const Rational& coefficient)
{
    return Json{{"num", big_json(numerator(coefficient))},
                {"den", big_json(denominator(coefficient))},
                {"unit", "pi"}};
}

double round9(double value)
{
    if (value == 0.0 || !std::isfinite(value))
        return value;
    return std::stod(format9(value));
}

std::string format9(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::string align_table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    auto display_width = [](const std::string& s) {
        // Count code points, not bytes, so "π" and "ξ" occupy one column.
        std::size_t n = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80)
                ++n;
        return n;
    };
    for (const auto& row : rows) {
        if (width.size() < row.size())
            width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], display_width(row[i]));
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - display_width(row[i]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------

Json to_json(const FoldedProfile& profile)
{
    return Json{{"modulus", profile.modulus}, {"dims", big_array(profile.dims)}};
}

Json to_json(const FoldWitness& witness)
{
    return Json{{"candidate", witness.candidate},
                {"modulus", witness.fold.modulus},
                {"dims", big_array(witness.fold.dims)},
                {"two_periodic", witness.two_periodic}};
}

Json to_json(const Constraints& c)
{
    Json out = Json::object();
    if (c.index)
        out["m"] = *c.index;
    if (c.maslov)
        out["maslov_number"] = *c.maslov;
    if (c.maslov_upper_bound)
        out["maslov_upper_bound"] = *c.maslov_upper_bound;
    if (c.retained_above_bound)
        out["retained_above_bound"] = *c.retained_above_bound;
    if (c.cohomology)
        out["cohomology"] = Json{{"model", c.cohomology->model}, {"betti", big_array(c.cohomology->betti)}};
    if (c.h1_nonzero_mod_euler)
        out["h1_nonzero_mod_euler"] = *c.h1_nonzero_mod_euler;
    if (c.surjectivity_rule_applied)
        out["surjectivity_rule_applied"] = *c.surjectivity_rule_applied;
    if (c.discrepancy)
        out["discrepancy"] = true;
    return out;
}

Json to_json(const Verdict& verdict)
{
    Json trace = Json::array();
    for (const auto& step : verdict.trace) {
        Json s{{"cite", step.cite}, {"detail", step.detail}};
        if (step.witness)
            s["fold"] = to_json(*step.witness);
        trace.push_back(std::move(s));
    }
    return Json{{"status", std::string(to_string(verdict.status))},
                {"constraints", to_json(verdict.constraints)},
                {"trace", std::move(trace)}};
}

Json to_json(const Error& error)
{
    Json out{{"kind", std::string(to_string(error.kind()))}, {"message", error.what()}};
    if (!error.cite().empty())
        out["cite"] = error.cite();
    out["exit_code"] = exit_code_for(error.kind());
    return out;
}

Json to_json(const ScanTable& table)
{
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json params = Json::object();
        for (const auto& [name, value] : row.params)
            params[name] = value;
        Json r{{"params", std::move(params)}};
        if (row.verdict)
            r["verdict"] = to_json(*row.verdict);
        if (row.error)
            r["error"] = to_json(*row.error);
        rows.push_back(std::move(r));
    }
    return Json{{"family", std::string(to_string(table.family))},
                {"columns", table.columns},
                {"rows", std::move(rows)}};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<std::string, std::string>> constraint_lines(const Constraints& c)
{
    std::vector<std::pair<std::string, std::string>> out;
    if (c.index)
        out.emplace_back("m", "{" + join(*c.index) + "}");
    if (c.maslov)
        out.emplace_back("maslov_number", "{" + join(*c.maslov) + "}");
    if (c.maslov_upper_bound)
        out.emplace_back("maslov_upper_bound", std::to_string(*c.maslov_upper_bound));
    if (c.retained_above_bound)
        out.emplace_back("retained_above_bound", "{" + join(*c.retained_above_bound) + "}");
    if (c.cohomology)
        out.emplace_back("cohomology", c.cohomology->model + " betti=(" + join(c.cohomology->betti) + ")");
    if (c.h1_nonzero_mod_euler)
        out.emplace_back("h1_nonzero_mod_euler", yes_no(*c.h1_nonzero_mod_euler));
    if (c.surjectivity_rule_applied)
        out.emplace_back("surjectivity_rule_applied", yes_no(*c.surjectivity_rule_applied));
    if (c.discrepancy)
        out.emplace_back("discrepancy", "yes");
    return out;
}

std::string summary(const Verdict& v)
{
    std::string out(to_string(v.status));
    for (const auto& [key, value] : constraint_lines(v.constraints))
        out += " " + key + "=" + value;
    return out;
}

}  // namespace

std::string render_text(const Verdict& verdict)
{
    std::string out = "status: " + std::string(to_string(verdict.status)) + "\n";
    const auto lines = constraint_lines(verdict.constraints);
    if (!lines.empty()) {
        out += "constraints:\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : lines)
            rows.push_back({"  " + k, v});
        out += align_table(rows);
    }
    out += "trace:\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& step : verdict.trace) {
        rows.push_back({"  " + step.cite, step.detail});
        if (step.witness)
            rows.push_back({"", "fold " + step.witness->candidate + " mod " +
                                    std::to_string(step.witness->fold.modulus) + " = (" +
                                    join(step.witness->fold.dims) + ")" +
                                    (step.witness->two_periodic ? " periodic" : " not periodic")});
    }
    out += align_table(rows);
    return out;
}

std::string render_text(const Error& error)
{
    std::string out = "error[" + std::string(to_string(error.kind())) + "]";
    if (!error.cite().empty())
        out += " (" + error.cite() + ")";
    return out + ": " + error.what() + "\n";
}

std::string render_text(const ScanTable& table)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = table.columns;
    header.push_back("result");
    rows.push_back(header);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        for (const auto& [name, value] : row.params)
            cells.push_back(std::to_string(value));
        if (row.verdict)
            cells.push_back(summary(*row.verdict));
        else if (row.error)
            cells.push_back("error[" + std::string(to_string(row.error->kind())) + "] " + row.error->what());
        rows.push_back(std::move(cells));
    }
    return "family: " + std::string(to_string(table.family)) + "\n" + align_table(rows);
}

// ---------------------------------------------------------------------------

ClassReport class_report(const CircleBundle& bundle, const Rational& level)
{
    ClassReport r{build_cut(bundle, level), {}, std::nullopt, {}};
    r.zero_section = maslov_zero_section(r.ctx);
    try {
        r.pi1 = pi1_total(bundle);
    } catch (const Error& e) {
        r.pi1_note = e.what();
    }
    return r;
}

Json to_json(const ClassReport& r)
{
    const auto& c = r.ctx;
    Json out{{"bundle", c.bundle.name},
             {"dimension", c.bundle.total_dim},
             {"level", Json{{"num", big_json(numerator(c.level))}, {"den", big_json(denominator(c.level))}}},
             {"N_W", c.chern_number},
             {"omega_W", pi_json(c.omega_coeff)},
             {"omega_on_pi2_generator", pi_json(c.omega_on_pi2_generator())},
             {"K_W", pi_json(c.k_w)},
             {"K_L", pi_json(c.k_l)},
             {"N_V", r.zero_section.maslov_number},
             {"pi2_W_V", r.zero_section.pi2_relative},
             {"generator_maslov", r.zero_section.generator_maslov},
             {"generator_area", pi_json(r.zero_section.generator_area)},
             {"reduced_form", pi_json(c.reduced_form_coeff)},
             {"c1_Q_real", big_json(numerator(c.chern_q_real))},
             {"monotone", true}};
    if (r.pi1)
        out["pi1_V"] = r.pi1->to_string();
    else
        out["pi1_V"] = nullptr;
    return out;
}

std::string render_text(const ClassReport& r)
{
    const auto& c = r.ctx;
    std::vector<std::vector<std::string>> rows{
        {"bundle", c.bundle.name},
        {"dimension", std::to_string(c.bundle.total_dim)},
        {"level ξ", to_string(c.level)},
        {"N_W", std::to_string(c.chern_number)},
        {"[ω^W]", pi_multiple(c.omega_coeff) + " (q∘p)*e"},
        {"[ω^W] on π2 generator", pi_multiple(c.omega_on_pi2_generator())},
        {"K_W", pi_multiple(c.k_w)},
        {"K_L", pi_multiple(c.k_l)},
        {"N_V", std::to_string(r.zero_section.maslov_number)},
        {"π2(W,V)", r.zero_section.pi2_relative},
        {"generator Maslov", std::to_string(r.zero_section.generator_maslov)},
        {"generator area", pi_multiple(r.zero_section.generator_area)},
        {"[ω on Q_ξ]", pi_multiple(c.reduced_form_coeff) + " q*e"},
        {"c1(Q_ξ) over R", to_string(c.chern_q_real)},
        {"monotone", "yes"},
        {"π1(V)", r.pi1 ? r.pi1->to_string() : "undetermined (" + r.pi1_note + ")"},
    };
    return align_table(rows);
}

// ---------------------------------------------------------------------------

IdentityReport identity_report(int d, int modulus)
{
    if (modulus < 2)
        throw Error(ErrorKind::InvalidModulus, "modulus must be >= 2, got " + std::to_string(modulus));
    if (d < 0)
        throw Error(ErrorKind::InvalidDimension, "d must be >= 0, got " + std::to_string(d));
    IdentityReport r{d, modulus, {}, {}, {}, {}, 0, 0, 0, false};
    for (int j = 0; j < modulus; ++j)
        r.sums.push_back(binomial_fold_sum(d, modulus, j));
    r.n_times_s0 = BigInt(modulus) * r.sums[0];
    r.two_pow_d = BigInt(1) << d;
    r.exact_excess = r.n_times_s0 - r.two_pow_d;
    r.trig_sum = cosine_excess(d, modulus);
    r.residual = roots_of_unity_residual(d, modulus);
    const long double scale = std::max<long double>(1.0L, std::ldexp(1.0L, d));
    r.unscaled_residual = static_cast<double>(
        std::fabs(r.exact_excess.convert_to<long double>() - unscaled_cosine_excess(d, modulus)) / scale);
    bool equal = true;
    for (const auto& s : r.sums)
        equal = equal && s == r.sums[0];
    r.identity_holds = modulus % 2 == 0 && equal && r.n_times_s0 == r.two_pow_d;
    return r;
}

Json to_json(const IdentityReport& r)
{
    return Json{{"d", r.d},
                {"modulus", r.modulus},
                {"S", big_array(r.sums)},
                {"N_S0", big_json(r.n_times_s0)},
                {"two_pow_d", big_json(r.two_pow_d)},
                {"excess", big_json(r.exact_excess)},
                {"trig_sum", round9(static_cast<double>(r.trig_sum))},
                {"residual", round9(r.residual)},
                {"unscaled_residual", round9(r.unscaled_residual)},
                {"identity_holds", r.identity_holds}};
}

std::string render_text(const IdentityReport& r)
{
    std::vector<std::vector<std::string>> table{{"j", "S_j"}};
    for (std::size_t j = 0; j < r.sums.size(); ++j)
        table.push_back({std::to_string(j), r.sums[j].str()});
    std::vector<std::vector<std::string>> summary{
        {"d", std::to_string(r.d)},
        {"N", std::to_string(r.modulus)},
        {"N·S_0", r.n_times_s0.str()},
        {"2^d", r.two_pow_d.str()},
        {"N·S_0 - 2^d", r.exact_excess.str()},
        {"cosine sum", format9(static_cast<double>(r.trig_sum))},
        {"residual", format9(r.residual)},
        {"unscaled residual", format9(r.unscaled_residual)},
        {"identity holds", yes_no(r.identity_holds)},
    };
    return align_table(table) + "\n" + align_table(summary);
}

// ---------------------------------------------------------------------------

FoldReport fold_report(const std::string& candidate, int modulus)
{
    const auto ring = parse_candidate(candidate);
    auto fold = fold_mod(ring, modulus);
    const bool periodic = is_two_periodic(fold);
    return FoldReport{ring.spec(), ring.label(), ring.betti(), std::move(fold), periodic};
}

Json to_json(const FoldReport& r)
{
    return Json{{"candidate", r.candidate},
                {"label", r.label},
                {"betti", big_array(r.betti)},
                {"modulus", r.fold.modulus},
                {"dims", big_array(r.fold.dims)},
                {"two_periodic", r.two_periodic}};
}

std::string render_text(const FoldReport& r)
{
    std::vector<std::vector<std::string>> rows{
        {"candidate", r.candidate},
        {"label", r.label},
        {"betti", "(" + join(r.betti) + ")"},
        {"modulus", std::to_string(r.fold.modulus)},
        {"fold", "(" + join(r.fold.dims) + ")"},
        {"2-periodic", yes_no(r.two_periodic)},
    };
    return align_table(rows);
}

}  // namespace lagcut
