#include "lagcut/cli.hpp"

#include "lagcut/obstruct.hpp"
#include "lagcut/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

namespace lagcut::cli {

namespace {

struct Output {
    Json json;
    std::string text;
};

/// A parsed command waiting to run.
struct Invocation {
    bool json = false;
    std::optional<std::string> batch;
    std::optional<std::string> help;
    std::function<Output()> execute;
};

template <class T>
Output both(const T& value)
{
    return Output{to_json(value), render_text(value)};
}

ParamRange parse_range(const std::string& name, const std::string& text)
{
    auto to_long = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size())
            throw Error(ErrorKind::Parse, "--" + name + ": expected <int> or <lo>..<hi>, got '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = to_long(text);
        return ParamRange{name, v, v};
    }
    return ParamRange{name, to_long(text.substr(0, dots)), to_long(text.substr(dots + 2))};
}

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shared state the CLI11 callbacks write into.
struct Flags {
    std::string format = "text";
    std::string batch;
    std::string level = "-1";
    std::string bundle;
    std::string candidate;
    std::string family;
    long euler = 0, d = 0, grading = 0, l = 0, m = 0, p = 0, n = 0, maslov = 0, modulus = 0;
    bool surjectivity = false;
    std::map<std::string, std::string> ranges;
};

Invocation parse(const std::vector<std::string>& args)
{
    auto flags = std::make_shared<Flags>();
    CLI::App app{"Obstruction calculus for monotone Lagrangians in symplectic cuts", "lagcut"};
    app.set_help_all_flag("--help-all", "Expand all help");
    app.require_subcommand(0, 1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", flags->format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_level = [&](CLI::App* sub) {
        sub->add_option("--level", flags->level, "Cut level ξ < 0 (p/q or decimal)")->capture_default_str();
    };
    add_format(&app);
    app.add_option("--batch", flags->batch, "Run a JSON batch file");

    auto* classes = app.add_subcommand("classes", "Characteristic classes and Maslov data of a cut");
    auto* cl_euler = classes->add_option("--euler", flags->euler, "Euler number N_e of V -> B");
    auto* cl_d = classes->add_option("--d", flags->d, "dim V (default 3)");
    auto* cl_bundle = classes->add_option("--bundle", flags->bundle, "hopf:n=.., lens:p=..,n=.., stiefel:n=.., trivial:d=..");
    cl_bundle->excludes(cl_euler)->excludes(cl_d);
    classes->add_option("--level", flags->level, "Cut level ξ < 0 (p/q or decimal)")->required();
    add_format(classes);

    auto* identity = app.add_subcommand("identity", "Binomial fold sums of the d-torus and the cosine identity");
    identity->add_option("--d", flags->d, "Dimension")->required();
    identity->add_option("--modulus", flags->modulus, "Grading N >= 2")->required();
    add_format(identity);

    auto* fold = app.add_subcommand("fold", "Fold a candidate cohomology ring mod N");
    fold->add_option("--candidate", flags->candidate, "sphere:d=7, torus:d=5, prodsph:l=4,m=6, cp:n=3, custom:...")
        ->required();
    fold->add_option("--modulus", flags->modulus, "Grading N >= 1")->required();
    add_format(fold);

    auto* check = app.add_subcommand("check", "Run one obstruction pipeline");
    check->require_subcommand(1);
    auto* sphere = check->add_subcommand("sphere", "Spheres S^d");
    sphere->add_option("--d", flags->d)->required();
    sphere->add_option("--euler", flags->euler)->required();
    sphere->add_option("--grading", flags->grading, "N with N | 2N_e (default 2N_e)");
    auto* torus = check->add_subcommand("torus", "Tori T^d");
    torus->add_option("--d", flags->d)->required();
    torus->add_option("--euler", flags->euler)->required();
    auto* prodsph = check->add_subcommand("prodsph", "Products S^l x S^m");
    prodsph->add_option("--l", flags->l)->required();
    prodsph->add_option("--m", flags->m)->required();
    prodsph->add_option("--euler", flags->euler)->required();
    prodsph->add_option("--maslov", flags->maslov, "Evaluate a single Maslov number");
    auto* lens = check->add_subcommand("lens", "Lens spaces L_p^{2n+1}");
    lens->add_option("--p", flags->p)->required();
    lens->add_option("--n", flags->n)->required();
    auto* exact = check->add_subcommand("exact", "Exact Lagrangians in T*V");
    exact->add_option("--d", flags->d)->required();
    exact->add_option("--euler", flags->euler)->required();
    exact->add_flag("--surjectivity", flags->surjectivity, "Assume π1(L) -> π1(V) is onto");
    auto* sc = check->add_subcommand("sc", "Simply connected Lagrangians in the cut");
    sc->add_option("--d", flags->d)->required();
    sc->add_option("--euler", flags->euler)->required();
    sc->add_option("--grading", flags->grading, "N with N | 2N_e")->required();
    for (auto* sub : {sphere, torus, prodsph, lens, exact, sc}) {
        add_level(sub);
        add_format(sub);
    }
    add_format(check);

    auto* scan_cmd = app.add_subcommand("scan", "Sweep a family over parameter ranges");
    scan_cmd->add_option("--family", flags->family, "sphere, torus, prodsph, lens, exact, sc")->required();
    for (const char* name : {"d", "euler", "grading", "l", "m", "maslov", "p", "n"})
        scan_cmd->add_option(std::string("--") + name, flags->ranges[name], "<int> or <lo>..<hi>");
    add_level(scan_cmd);
    add_format(scan_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    Invocation inv;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0)
            throw Usage(e.what());
        std::ostringstream out, err;
        app.exit(e, out, err);
        inv.help = out.str();
        return inv;
    }

    inv.json = flags->format == "json";
    if (!flags->batch.empty()) {
        if (!app.get_subcommands().empty())
            throw Usage("--batch cannot be combined with a subcommand");
        inv.batch = flags->batch;
        return inv;
    }
    if (app.get_subcommands().empty())
        throw Usage("a subcommand is required (classes, identity, fold, check, scan); see --help");

    const auto level = [flags] { return CheckOptions{parse_rational(flags->level)}; };
    auto narrow = [](long v, const char* what) {
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            throw Error(ErrorKind::InvalidArgument, std::string(what) + " out of range");
        return static_cast<int>(v);
    };

    auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "classes") {
        const bool has_bundle = cl_bundle->count() > 0;
        const bool has_euler = cl_euler->count() > 0;
        if (!has_bundle && !has_euler)
            throw Usage("classes: give --euler or --bundle");
        const bool has_d = cl_d->count() > 0;
        inv.execute = [flags, has_bundle, has_d, narrow] {
            const auto bundle =
                has_bundle ? parse_bundle(flags->bundle)
                           : CircleBundle::make(has_d ? narrow(flags->d, "--d") : 3, flags->euler,
                                                true, flags->euler > 0);
            return both(class_report(bundle, parse_rational(flags->level)));
        };
    } else if (name == "identity") {
        inv.execute = [flags, narrow] {
            return both(identity_report(narrow(flags->d, "--d"), narrow(flags->modulus, "--modulus")));
        };
    } else if (name == "fold") {
        inv.execute = [flags, narrow] { return both(fold_report(flags->candidate, narrow(flags->modulus, "--modulus"))); };
    } else if (name == "check") {
        auto* leaf = cmd->get_subcommands().front();
        const std::string kind = leaf->get_name();
        const bool has_grading = leaf->get_option_no_throw("--grading") && leaf->get_option("--grading")->count() > 0;
        const bool has_maslov = leaf->get_option_no_throw("--maslov") && leaf->get_option("--maslov")->count() > 0;
        inv.execute = [flags, kind, has_grading, has_maslov, level, narrow]() -> Output {
            const auto opts = level();
            if (kind == "sphere") {
                const int grading = has_grading ? narrow(flags->grading, "--grading")
                                                : narrow(2 * flags->euler, "--euler");
                return both(check_sphere(narrow(flags->d, "--d"), flags->euler, grading, opts));
            }
            if (kind == "torus")
                return both(check_torus(narrow(flags->d, "--d"), flags->euler, opts));
            if (kind == "prodsph") {
                const int l = narrow(flags->l, "--l"), m = narrow(flags->m, "--m");
                if (has_maslov)
                    return both(check_product_spheres_at(l, m, narrow(flags->maslov, "--maslov"), flags->euler, opts));
                return both(check_product_spheres(l, m, flags->euler, opts));
            }
            if (kind == "lens")
                return both(check_lens(narrow(flags->p, "--p"), narrow(flags->n, "--n"), opts));
            if (kind == "exact")
                return both(check_exact(narrow(flags->d, "--d"), flags->euler, flags->surjectivity, opts));
            return both(check_simply_connected_in_cut(narrow(flags->d, "--d"), flags->euler,
                                                      narrow(flags->grading, "--grading"), opts));
        };
    } else if (name == "scan") {
        const auto family = parse_family(flags->family);
        std::vector<ParamRange> ranges;
        for (const auto& param : family_parameters(family))
            if (!flags->ranges[param].empty())
                ranges.push_back(parse_range(param, flags->ranges[param]));
        for (const auto& [param, text] : flags->ranges) {
            const auto allowed = family_parameters(family);
            if (!text.empty() && std::find(allowed.begin(), allowed.end(), param) == allowed.end())
                throw Usage("scan: family " + flags->family + " has no parameter --" + param);
        }
        inv.execute = [family, ranges, level] { return both(scan(family, ranges, level())); };
    }
    // Reject bad levels during parsing so batches fail before running.
    parse_rational(flags->level);
    return inv;
}

RunResult usage_error(const std::string& message, bool json)
{
    RunResult r{1, {}, {}};
    if (json)
        r.out = Json{{"error", Json{{"kind", "usage"}, {"message", message}, {"exit_code", 1}}}}.dump(2) + "\n";
    else
        r.err = "usage: " + message + "\n";
    return r;
}

bool wants_json(const std::vector<std::string>& args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format=json")
            return true;
        if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json")
            return true;
    }
    return false;
}

struct Entry {
    std::string command;
    std::vector<std::string> args;
};

std::vector<std::string> split_words(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

std::string scalar_arg(const Json& value, const std::string& key)
{
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_number_integer())
        return std::to_string(value.get<long long>());
    throw Usage("batch: argument '" + key + "' must be a string or integer");
}

std::vector<Entry> load_batch(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Usage("batch: cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Usage(std::string("batch: ") + e.what());
    }
    if (!doc.is_array())
        throw Usage("batch: top level must be a JSON array");
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        const std::string where = "batch entry " + std::to_string(i);
        if (!item.is_object() || !item.contains("command") || !item["command"].is_string())
            throw Usage(where + ": expected an object with a string 'command'");
        for (const auto& [key, _] : item.items())
            if (key != "command" && key != "args")
                throw Usage(where + ": unknown field '" + key + "'");
        Entry e{item["command"].get<std::string>(), split_words(item["command"].get<std::string>())};
        if (item.contains("args")) {
            const auto& a = item["args"];
            if (a.is_array()) {
                for (const auto& v : a)
                    e.args.push_back(scalar_arg(v, where));
            } else if (a.is_object()) {
                for (const auto& [key, v] : a.items()) {
                    const std::string flag = (key.rfind("--", 0) == 0 ? "" : "--") + key;
                    if (v.is_boolean()) {
                        if (v.get<bool>())
                            e.args.push_back(flag);
                    } else {
                        e.args.push_back(flag);
                        e.args.push_back(scalar_arg(v, key));
                    }
                }
            } else {
                throw Usage(where + ": 'args' must be an array or an object");
            }
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

RunResult run(const std::vector<std::string>& args)
{
    const bool json_hint = wants_json(args);
    Invocation inv;
    try {
        inv = parse(args);
    } catch (const Usage& e) {
        return usage_error(e.what(), json_hint);
    } catch (const Error& e) {
        RunResult r{1, {}, {}};
        if (json_hint)
            r.out = Json{{"error", to_json(e)}}.dump(2) + "\n";
        else
            r.err = render_text(e);
        return r;
    }
    if (inv.help)
        return RunResult{0, *inv.help, {}};
    if (inv.batch)
        return run_batch(*inv.batch, inv.json);
    try {
        auto out = inv.execute();
        return RunResult{0, inv.json ? out.json.dump(2) + "\n" : out.text, {}};
    } catch (const Error& e) {
        RunResult r{exit_code_for(e.kind()), {}, {}};
        if (inv.json)
            r.out = Json{{"error", to_json(e)}}.dump(2) + "\n";
        else
            r.err = render_text(e);
        return r;
    }
}

RunResult run_batch(const std::string& path, bool json)
{
    std::vector<Entry> entries;
    std::vector<Invocation> parsed;
    try {
        entries = load_batch(path);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            try {
                parsed.push_back(parse(entries[i].args));
            } catch (const std::exception& e) {
                throw Usage("batch entry " + std::to_string(i) + " (" + entries[i].command + "): " + e.what());
            }
            if (parsed.back().batch || parsed.back().help || !parsed.back().execute)
                throw Usage("batch entry " + std::to_string(i) + ": not a runnable subcommand");
        }
    } catch (const Usage& e) {
        return usage_error(e.what(), json);
    }

    RunResult result{0, {}, {}};
    Json report = Json::array();
    std::string text;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Json item{{"command", entries[i].command}};
        text += "== [" + std::to_string(i) + "] " + entries[i].command + "\n";
        try {
            auto out = parsed[i].execute();
            item["exit_code"] = 0;
            item["result"] = std::move(out.json);
            text += out.text;
        } catch (const Error& e) {
            const int code = exit_code_for(e.kind());
            result.exit_code = std::max(result.exit_code, code);
            item["exit_code"] = code;
            item["error"] = to_json(e);
            text += render_text(e);
        }
        report.push_back(std::move(item));
    }
    result.out = json ? report.dump(2) + "\n" : text;
    return result;
}

}  // namespace lagcut::cli
