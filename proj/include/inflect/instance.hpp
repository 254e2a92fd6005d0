#pragma once

// Instance files and run reports as JSON.

#include "inflect/chow.hpp"
#include "inflect/curve.hpp"
#include "inflect/error.hpp"
#include "inflect/family.hpp"
#include "inflect/parse.hpp"
#include "inflect/report.hpp"
#include "inflect/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace inflect {

using Json = nlohmann::json;

inline constexpr const char* engine_version = "inflect 0.1.0";

inline const std::vector<std::string>& mode_names()
{
    static const std::vector<std::string> names{"verify",           "inflect",          "rhs",
                                                "wronskian",        "degenerate-check", "rh-hyperelliptic",
                                                "functoriality-test"};
    return names;
}

inline bool is_mode(const std::string& m)
{
    const auto& n = mode_names();
    return std::find(n.begin(), n.end(), m) != n.end();
}

struct MapSpec {
    std::vector<std::string> coords; ///< affine coordinates in t
    std::optional<int> degree;

    friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

/// Either `named` (a constructor) or `poly` (a raw form with arities).
struct FamilySpec {
    std::optional<std::string> named;
    std::optional<int> m;                 ///< hyperplane_family
    std::vector<std::string> generators;  ///< linear_series_family, in x0..x{m}
    std::optional<MapSpec> of;            ///< tangent_line_family; defaults to the instance map
    std::optional<std::string> poly;
    std::optional<int> x_arity;
    std::optional<int> z_arity;
    std::optional<MapSpec> reparametrize; ///< applied to z afterwards

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct RhsParams {
    long a = 1, b = 1, n = 1, d = 1, g = 0;

    friend bool operator==(const RhsParams&, const RhsParams&) = default;
};

struct InstanceSpec {
    std::optional<std::string> mode;
    std::optional<MapSpec> map;
    std::optional<FamilySpec> family;
    long genus = 0;
    std::optional<std::uint64_t> seed;
    std::optional<RhsParams> rhs;
    std::optional<std::string> curve;          ///< h(x) of y^2 = h(x)
    std::optional<MapSpec> reparametrization;  ///< functoriality-test; random when absent

    friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

namespace detail {

inline void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where)
{
    if (!j.is_object())
        throw InvalidInput(where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw InvalidInput("unknown field '" + key + "' in " + where);
    }
}

template <class T>
T get_as(const Json& j, const std::string& what)
{
    try {
        return j.get<T>();
    } catch (const Json::exception&) {
        throw InvalidInput("field '" + what + "' has the wrong type");
    }
}

template <class T>
std::optional<T> opt(const Json& j, const char* key)
{
    if (!j.contains(key))
        return std::nullopt;
    return get_as<T>(j.at(key), key);
}

inline MapSpec map_from_json(const Json& j, const std::string& where)
{
    MapSpec m;
    if (j.is_array()) {
        m.coords = get_as<std::vector<std::string>>(j, where);
        return m;
    }
    only_keys(j, {"coords", "degree"}, where);
    if (!j.contains("coords"))
        throw InvalidInput(where + " needs 'coords'");
    m.coords = get_as<std::vector<std::string>>(j.at("coords"), "coords");
    m.degree = opt<int>(j, "degree");
    return m;
}

inline Json map_to_json(const MapSpec& m)
{
    Json j;
    j["coords"] = m.coords;
    if (m.degree)
        j["degree"] = *m.degree;
    return j;
}

} // namespace detail

inline FamilySpec family_spec_from_json(const Json& j)
{
    detail::only_keys(j, {"named", "m", "generators", "of", "poly", "x_arity", "z_arity", "reparametrize"}, "family");
    FamilySpec f;
    f.named = detail::opt<std::string>(j, "named");
    f.m = detail::opt<int>(j, "m");
    if (j.contains("generators"))
        f.generators = detail::get_as<std::vector<std::string>>(j.at("generators"), "generators");
    if (j.contains("of"))
        f.of = detail::map_from_json(j.at("of"), "family.of");
    f.poly = detail::opt<std::string>(j, "poly");
    f.x_arity = detail::opt<int>(j, "x_arity");
    f.z_arity = detail::opt<int>(j, "z_arity");
    if (j.contains("reparametrize"))
        f.reparametrize = detail::map_from_json(j.at("reparametrize"), "family.reparametrize");
    if (f.named.has_value() == f.poly.has_value())
        throw InvalidInput("family needs exactly one of 'named' and 'poly'");
    return f;
}

inline Json to_json(const FamilySpec& f)
{
    Json j = Json::object();
    if (f.named)
        j["named"] = *f.named;
    if (f.m)
        j["m"] = *f.m;
    if (!f.generators.empty())
        j["generators"] = f.generators;
    if (f.of)
        j["of"] = detail::map_to_json(*f.of);
    if (f.poly)
        j["poly"] = *f.poly;
    if (f.x_arity)
        j["x_arity"] = *f.x_arity;
    if (f.z_arity)
        j["z_arity"] = *f.z_arity;
    if (f.reparametrize)
        j["reparametrize"] = detail::map_to_json(*f.reparametrize);
    return j;
}

inline InstanceSpec instance_from_json(const Json& j)
{
    detail::only_keys(j, {"mode", "map", "family", "genus", "seed", "rhs", "curve", "reparametrization"}, "instance");
    InstanceSpec s;
    s.mode = detail::opt<std::string>(j, "mode");
    if (s.mode && !is_mode(*s.mode))
        throw InvalidInput("unknown mode '" + *s.mode + "'");
    if (j.contains("map"))
        s.map = detail::map_from_json(j.at("map"), "map");
    if (j.contains("family"))
        s.family = family_spec_from_json(j.at("family"));
    s.genus = detail::opt<long>(j, "genus").value_or(0);
    s.seed = detail::opt<std::uint64_t>(j, "seed");
    if (j.contains("rhs")) {
        const Json& r = j.at("rhs");
        detail::only_keys(r, {"a", "b", "n", "d", "g"}, "rhs");
        for (const char* k : {"a", "b", "n", "d"})
            if (!r.contains(k))
                throw InvalidInput(std::string("rhs needs '") + k + "'");
        s.rhs = RhsParams{detail::get_as<long>(r.at("a"), "a"), detail::get_as<long>(r.at("b"), "b"),
                          detail::get_as<long>(r.at("n"), "n"), detail::get_as<long>(r.at("d"), "d"),
                          detail::opt<long>(r, "g").value_or(s.genus)};
    }
    s.curve = detail::opt<std::string>(j, "curve");
    if (j.contains("reparametrization"))
        s.reparametrization = detail::map_from_json(j.at("reparametrization"), "reparametrization");
    return s;
}

inline Json to_json(const InstanceSpec& s)
{
    Json j = Json::object();
    if (s.mode)
        j["mode"] = *s.mode;
    if (s.map)
        j["map"] = detail::map_to_json(*s.map);
    if (s.family)
        j["family"] = to_json(*s.family);
    j["genus"] = s.genus;
    if (s.seed)
        j["seed"] = *s.seed;
    if (s.rhs)
        j["rhs"] = {{"a", s.rhs->a}, {"b", s.rhs->b}, {"n", s.rhs->n}, {"d", s.rhs->d}, {"g", s.rhs->g}};
    if (s.curve)
        j["curve"] = *s.curve;
    if (s.reparametrization)
        j["reparametrization"] = detail::map_to_json(*s.reparametrization);
    return j;
}

inline InstanceSpec parse_instance(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("instance is not valid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

inline InstanceSpec read_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read instance file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

// Building the objects an instance describes.

inline RationalMap build_map(const MapSpec& m, const std::string& var = "t")
{
    std::vector<UniPoly> coords;
    for (const auto& c : m.coords)
        coords.push_back(parse_unipoly(c, var));
    return make_rational_map(std::move(coords), m.degree);
}

inline DivisorFamily build_family(const FamilySpec& f, const std::optional<MapSpec>& instance_map)
{
    auto base = [&]() -> DivisorFamily {
        if (f.poly) {
            if (!f.x_arity || !f.z_arity)
                throw InvalidInput("a raw family needs 'x_arity' and 'z_arity'");
            if (*f.x_arity < 1 || *f.z_arity < 1)
                throw InvalidInput("arities must be positive");
            return parse_family(*f.poly, static_cast<std::size_t>(*f.x_arity), static_cast<std::size_t>(*f.z_arity));
        }
        const std::string& name = *f.named;
        if (name == "point_family")
            return point_family();
        if (name == "hyperplane_family") {
            if (!f.m)
                throw InvalidInput("hyperplane_family needs 'm'");
            return hyperplane_family(*f.m);
        }
        if (name == "linear_series_family") {
            if (f.generators.empty())
                throw InvalidInput("linear_series_family needs 'generators'");
            const std::size_t xa = f.x_arity ? static_cast<std::size_t>(*f.x_arity) : 2;
            std::vector<MPoly> gens;
            for (const auto& g : f.generators)
                gens.push_back(parse_polynomial(g, indexed_names("x", xa)));
            return linear_series_family(gens);
        }
        if (name == "tangent_line_family") {
            const auto& src = f.of ? f.of : instance_map;
            if (!src)
                throw InvalidInput("tangent_line_family needs 'of' or an instance map");
            return tangent_line_family(build_map(*src)).family;
        }
        throw InvalidInput("unknown family constructor '" + name + "'");
    }();
    if (f.reparametrize)
        return reparametrize_z(base, build_map(*f.reparametrize));
    return base;
}

// Outcome payloads. Integers that fit in 64 bits are JSON numbers, larger
// ones decimal strings.

inline Json int_to_json(const Int& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

inline Int int_from_json(const Json& j)
{
    if (j.is_string())
        return Int(j.get<std::string>());
    return Int(j.get<long>());
}

inline Json to_json(const PointCluster& c)
{
    Json j;
    j["at"] = c.at_infinity ? "infinity" : c.defining_poly.to_string();
    j["multiplicity"] = c.multiplicity;
    j["points"] = c.point_count();
    return j;
}

inline PointCluster cluster_from_json(const Json& j)
{
    const std::string at = j.at("at").get<std::string>();
    const int m = j.at("multiplicity").get<int>();
    return at == "infinity" ? PointCluster::infinity(m) : PointCluster::finite(parse_unipoly(at), m);
}

inline Json to_json(const InflectionReport& r)
{
    Json j;
    j["method"] = r.method;
    j["total"] = r.total;
    if (r.degenerate) {
        j["degenerate"] = *r.degenerate;
        j["detail"] = r.detail;
    }
    Json cl = Json::array();
    for (const auto& c : r.clusters) {
        Json e = to_json(c.cluster);
        e["chart"] = chart_name(c.chart);
        if (c.vertical)
            e["vertical"] = *c.vertical;
        if (c.proper)
            e["proper"] = *c.proper;
        cl.push_back(e);
    }
    j["clusters"] = cl;
    Json ch = Json::array();
    for (const auto& d : r.charts)
        ch.push_back({{"chart", chart_name(d.chart)},
                      {"content", d.content.to_string()},
                      {"discriminant", d.discriminant.to_string()}});
    j["charts"] = ch;
    return j;
}

inline Chart chart_from_name(const std::string& s)
{
    if (s == chart_name(Chart::affine))
        return Chart::affine;
    if (s == chart_name(Chart::infinity))
        return Chart::infinity;
    throw InvalidInput("unknown chart '" + s + "'");
}

inline InflectionReport report_from_json(const Json& j)
{
    InflectionReport r;
    r.method = j.at("method").get<std::string>();
    r.total = j.at("total").get<long>();
    if (j.contains("degenerate")) {
        r.degenerate = j.at("degenerate").get<std::string>();
        r.detail = j.at("detail").get<std::string>();
    }
    for (const auto& e : j.at("clusters")) {
        ReportCluster c{cluster_from_json(e), chart_from_name(e.at("chart").get<std::string>()), {}, {}};
        if (e.contains("vertical"))
            c.vertical = e.at("vertical").get<int>();
        if (e.contains("proper"))
            c.proper = e.at("proper").get<int>();
        r.clusters.push_back(std::move(c));
    }
    for (const auto& d : j.at("charts"))
        r.charts.push_back({chart_from_name(d.at("chart").get<std::string>()),
                            parse_unipoly(d.at("content").get<std::string>()),
                            parse_unipoly(d.at("discriminant").get<std::string>())});
    return r;
}

inline Json to_json(const RhsSummary& s)
{
    return {{"N", int_to_json(s.N)}, {"H_coeff", int_to_json(s.H_coeff)}, {"rhs_total", int_to_json(s.rhs_total)}};
}

inline RhsSummary rhs_from_json(const Json& j)
{
    return {int_from_json(j.at("N")), int_from_json(j.at("H_coeff")), int_from_json(j.at("rhs_total"))};
}

inline Json to_json(const VerificationResult& v)
{
    return {{"lhs_total", int_to_json(v.lhs_total)},
            {"rhs", to_json(v.rhs)},
            {"matched", v.matched},
            {"report", to_json(v.report)}};
}

inline VerificationResult verification_from_json(const Json& j)
{
    VerificationResult v;
    v.lhs_total = int_from_json(j.at("lhs_total"));
    v.rhs = rhs_from_json(j.at("rhs"));
    v.matched = j.at("matched").get<bool>();
    v.report = report_from_json(j.at("report"));
    return v;
}

inline Json to_json(const DegeneracyVerdict& d)
{
    return {{"verdict", verdict_name(d.verdict)}, {"reason", d.reason}, {"detail", d.detail}};
}

inline Json to_json(const RamificationSummary& s)
{
    Json cl = Json::array();
    for (const auto& c : s.clusters) {
        Json e = to_json(c.base);
        e["sheets"] = c.sheets;
        cl.push_back(e);
    }
    return {{"clusters", cl}, {"total", s.total}, {"expected", s.expected}, {"matched", s.matched}};
}

/// Everything a run produced. `outcome` holds one of the payloads above.
struct RunReport {
    std::string engine = engine_version;
    std::string mode;
    InstanceSpec instance;
    int exit_code = 0;
    std::string status;
    std::string message;
    Json outcome;
    std::optional<double> seconds; ///< only with --timing, so default output is byte-stable

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline Json to_json(const RunReport& r)
{
    Json j;
    j["engine"] = r.engine;
    j["mode"] = r.mode;
    j["instance"] = to_json(r.instance);
    j["exit_code"] = r.exit_code;
    j["status"] = r.status;
    j["message"] = r.message;
    j["outcome"] = r.outcome;
    if (r.seconds)
        j["seconds"] = *r.seconds;
    return j;
}

inline RunReport run_report_from_json(const Json& j)
{
    RunReport r;
    r.engine = j.at("engine").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.instance = instance_from_json(j.at("instance"));
    r.exit_code = j.at("exit_code").get<int>();
    r.status = j.at("status").get<std::string>();
    r.message = j.at("message").get<std::string>();
    r.outcome = j.at("outcome");
    if (j.contains("seconds"))
        r.seconds = j.at("seconds").get<double>();
    return r;
}

/// Sorted keys, two-space indent, trailing newline.
inline std::string dump(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

} // namespace inflect
