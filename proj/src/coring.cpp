#include "lagcut/coring.hpp"

#include "lagcut/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace lagcut {

namespace {

std::string join(const std::vector<BigInt>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += values[i].str();
    }
    return out;
}

std::string join(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string custom_spec(const std::vector<BigInt>& betti, const std::vector<int>& gens)
{
    return "custom:betti=[" + join(betti) + "],gens=[" + join(gens) + "]";
}

// Degrees in [0, d] reachable as sums of generator degrees (with repetition).
std::vector<bool> reachable_degrees(int d, const std::vector<int>& gens)
{
    std::vector<bool> reach(static_cast<std::size_t>(d) + 1, false);
    reach[0] = true;
    for (int k = 1; k <= d; ++k)
        for (int g : gens)
            if (g <= k && reach[static_cast<std::size_t>(k - g)]) {
                reach[static_cast<std::size_t>(k)] = true;
                break;
            }
    return reach;
}

}  // namespace

CohomologyRing::CohomologyRing(std::string label, std::vector<BigInt> betti, std::vector<int> generators)
    : label_(std::move(label)), betti_(std::move(betti)), generators_(std::move(generators))
{
    std::sort(generators_.begin(), generators_.end());
    spec_ = custom_spec(betti_, generators_);
}

CohomologyRing CohomologyRing::with_spec(std::string label, std::string spec) &&
{
    label_ = std::move(label);
    spec_ = std::move(spec);
    return std::move(*this);
}

CohomologyRing CohomologyRing::make(std::string label, std::vector<BigInt> betti,
                                    std::vector<int> generator_degrees)
{
    if (betti.empty())
        throw Error(ErrorKind::InvalidRing, "Betti vector is empty");
    const int d = static_cast<int>(betti.size()) - 1;
    if (betti[0] != 1)
        throw Error(ErrorKind::InvalidRing, "b_0 must be 1 for a connected candidate");
    for (int k = 0; k <= d; ++k) {
        if (betti[static_cast<std::size_t>(k)] < 0)
            throw Error(ErrorKind::InvalidRing, "negative Betti number at degree " + std::to_string(k));
        if (betti[static_cast<std::size_t>(k)] != betti[static_cast<std::size_t>(d - k)])
            throw Error(ErrorKind::InvalidRing,
                        "Poincaré duality fails: b_" + std::to_string(k) + " != b_" + std::to_string(d - k));
    }
    for (int g : generator_degrees)
        if (g < 1 || g > d)
            throw Error(ErrorKind::InvalidRing,
                        "generator degree " + std::to_string(g) + " outside [1, " + std::to_string(d) + "]");
    const auto reach = reachable_degrees(d, generator_degrees);
    for (int k = 1; k <= d; ++k)
        if (betti[static_cast<std::size_t>(k)] > 0 && !reach[static_cast<std::size_t>(k)])
            throw Error(ErrorKind::InvalidRing,
                        "degree " + std::to_string(k) + " carries cohomology but is not generated");

    CohomologyRing ring(std::move(label), std::move(betti), std::move(generator_degrees));
    if (ring.label_.empty())
        ring.label_ = "custom";
    return ring;
}

BigInt CohomologyRing::betti_at(int k) const
{
    if (k < 0 || k > dim())
        return 0;
    return betti_[static_cast<std::size_t>(k)];
}

std::vector<int> CohomologyRing::distinct_generator_degrees() const
{
    std::vector<int> out = generators_;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigInt CohomologyRing::total_dimension() const
{
    return std::accumulate(betti_.begin(), betti_.end(), BigInt(0));
}

CohomologyRing make_point()
{
    return CohomologyRing("pt", {1}, {}).with_spec("pt", "point");
}

CohomologyRing make_sphere(int d)
{
    if (d < 1)
        throw Error(ErrorKind::InvalidDimension, "sphere dimension must be >= 1, got " + std::to_string(d));
    std::vector<BigInt> betti(static_cast<std::size_t>(d) + 1, 0);
    betti.front() = 1;
    betti.back() = 1;
    return CohomologyRing("", std::move(betti), {d})
        .with_spec("S^" + std::to_string(d), "sphere:d=" + std::to_string(d));
}

CohomologyRing make_torus(int d)
{
    if (d < 1)
        throw Error(ErrorKind::InvalidDimension, "torus dimension must be >= 1, got " + std::to_string(d));
    // Pascal row d.
    std::vector<BigInt> row{1};
    for (int i = 0; i < d; ++i) {
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k];
            next[k + 1] += row[k];
        }
        row = std::move(next);
    }
    return CohomologyRing("", std::move(row), std::vector<int>(static_cast<std::size_t>(d), 1))
        .with_spec("T^" + std::to_string(d), "torus:d=" + std::to_string(d));
}

CohomologyRing make_product_spheres(int l, int m)
{
    if (l < 1 || m < l)
        throw Error(ErrorKind::InvalidDimension,
                    "product of spheres needs 1 <= l <= m, got l=" + std::to_string(l) + ", m=" + std::to_string(m));
    std::vector<BigInt> betti(static_cast<std::size_t>(l + m) + 1, 0);
    for (int k : {0, l, m, l + m})
        betti[static_cast<std::size_t>(k)] += 1;
    return CohomologyRing("", std::move(betti), {l, m})
        .with_spec("S^" + std::to_string(l) + "xS^" + std::to_string(m),
                   "prodsph:l=" + std::to_string(l) + ",m=" + std::to_string(m));
}

CohomologyRing make_complex_projective(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidDimension, "CP^n needs n >= 1, got " + std::to_string(n));
    std::vector<BigInt> betti(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int k = 0; k <= 2 * n; k += 2)
        betti[static_cast<std::size_t>(k)] = 1;
    return CohomologyRing("", std::move(betti), {2})
        .with_spec("CP^" + std::to_string(n), "cp:n=" + std::to_string(n));
}

CohomologyRing tensor(const CohomologyRing& a, const CohomologyRing& b)
{
    std::vector<BigInt> betti(static_cast<std::size_t>(a.dim() + b.dim()) + 1, 0);
    for (int i = 0; i <= a.dim(); ++i)
        for (int j = 0; j <= b.dim(); ++j)
            betti[static_cast<std::size_t>(i + j)] += a.betti()[static_cast<std::size_t>(i)] * b.betti()[static_cast<std::size_t>(j)];
    std::vector<int> gens = a.generator_degrees();
    gens.insert(gens.end(), b.generator_degrees().begin(), b.generator_degrees().end());
    std::string label = a.label() + "x" + b.label();
    return CohomologyRing::make(std::move(label), std::move(betti), std::move(gens));
}

// ---------------------------------------------------------------------------
// Candidate specifiers

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why)
{
    throw Error(ErrorKind::Parse, "bad candidate specifier '" + std::string(spec) + "': " + why);
}

int parse_int(std::string_view spec, std::string_view text)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        bad_spec(spec, "'" + std::string(text) + "' is not an integer");
    return value;
}

// Splits "a=1,b=[1,2],c=3" on commas outside brackets.
std::map<std::string, std::string, std::less<>> parse_fields(std::string_view spec, std::string_view body)
{
    std::map<std::string, std::string, std::less<>> fields;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto item = body.substr(start, end - start);
        if (item.empty())
            return;
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            bad_spec(spec, "field '" + std::string(item) + "' lacks '='");
        auto key = std::string(item.substr(0, eq));
        if (fields.count(key))
            bad_spec(spec, "duplicate field '" + key + "'");
        fields.emplace(std::move(key), std::string(item.substr(eq + 1)));
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '[')
            ++depth;
        else if (body[i] == ']')
            --depth;
        else if (body[i] == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    if (depth != 0)
        bad_spec(spec, "unbalanced brackets");
    flush(body.size());
    return fields;
}

std::vector<std::string_view> split_list(std::string_view spec, std::string_view text)
{
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        bad_spec(spec, "expected a bracketed list, got '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::vector<std::string_view> items;
    while (!text.empty()) {
        auto comma = text.find(',');
        items.push_back(text.substr(0, comma));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return items;
}

int require_int(std::string_view spec, const std::map<std::string, std::string, std::less<>>& fields,
                std::string_view key)
{
    auto it = fields.find(key);
    if (it == fields.end())
        bad_spec(spec, "missing field '" + std::string(key) + "'");
    return parse_int(spec, it->second);
}

void expect_only(std::string_view spec, const std::map<std::string, std::string, std::less<>>& fields,
                 std::initializer_list<std::string_view> allowed)
{
    for (const auto& [key, value] : fields)
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            bad_spec(spec, "unknown field '" + key + "'");
}

}  // namespace

CohomologyRing parse_candidate(std::string_view spec)
{
    if (spec == "point" || spec == "pt")
        return make_point();
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        bad_spec(spec, "expected <kind>:<fields>");
    auto kind = spec.substr(0, colon);
    auto fields = parse_fields(spec, spec.substr(colon + 1));

    if (kind == "sphere") {
        expect_only(spec, fields, {"d"});
        return make_sphere(require_int(spec, fields, "d"));
    }
    if (kind == "torus") {
        expect_only(spec, fields, {"d"});
        return make_torus(require_int(spec, fields, "d"));
    }
    if (kind == "prodsph") {
        expect_only(spec, fields, {"l", "m"});
        return make_product_spheres(require_int(spec, fields, "l"), require_int(spec, fields, "m"));
    }
    if (kind == "cp") {
        expect_only(spec, fields, {"n"});
        return make_complex_projective(require_int(spec, fields, "n"));
    }
    if (kind == "custom") {
        expect_only(spec, fields, {"betti", "gens", "label"});
        auto betti_it = fields.find("betti");
        auto gens_it = fields.find("gens");
        if (betti_it == fields.end() || gens_it == fields.end())
            bad_spec(spec, "custom rings need betti=[...] and gens=[...]");
        std::vector<BigInt> betti;
        for (auto item : split_list(spec, betti_it->second)) {
            int value = parse_int(spec, item);
            betti.emplace_back(value);
        }
        std::vector<int> gens;
        for (auto item : split_list(spec, gens_it->second))
            gens.push_back(parse_int(spec, item));
        auto label_it = fields.find("label");
        return CohomologyRing::make(label_it == fields.end() ? "custom" : label_it->second,
                                    std::move(betti), std::move(gens));
    }
    bad_spec(spec, "unknown kind '" + std::string(kind) + "'");
}

}  // namespace lagcut
