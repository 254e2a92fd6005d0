#pragma once

// Executes one instance in one mode; shared by the CLI and the tests.

#include "inflect/instance.hpp"
#include "inflect/random.hpp"

#include <chrono>
#include <exception>
#include <sstream>
#include <string>

namespace inflect {

enum ExitCode : int {
    exit_ok = 0,
    exit_degenerate = 2,
    exit_invalid = 3,
    exit_mismatch = 4,
    exit_internal = 5,
};

struct RunOptions {
    std::optional<std::uint64_t> seed; ///< overrides the instance seed
    bool timing = false;
};

struct RunResult {
    RunReport report;
    std::string table; ///< human-readable summary
};

namespace detail {

inline const MapSpec& need_map(const InstanceSpec& s)
{
    if (!s.map)
        throw InvalidInput("this mode needs 'map'");
    return *s.map;
}

inline DivisorFamily need_family(const InstanceSpec& s)
{
    if (!s.family)
        throw InvalidInput("this mode needs 'family'");
    return build_family(*s.family, s.map);
}

inline void need_rational(const InstanceSpec& s)
{
    if (s.genus != 0)
        throw InvalidInput("maps are from P^1, so genus must be 0 (use rh-hyperelliptic for curves of higher genus)");
}

inline void table_clusters(std::ostringstream& out, const InflectionReport& r)
{
    out << "method      " << r.method << "\n";
    if (r.degenerate) {
        out << "degenerate  " << *r.degenerate << "\n";
        if (!r.detail.empty())
            out << "detail      " << r.detail << "\n";
        return;
    }
    out << "clusters\n";
    for (const auto& c : r.clusters) {
        out << "  " << c.cluster.label() << "  points " << c.cluster.point_count() << "  chart " << chart_name(c.chart);
        if (c.vertical)
            out << "  vertical " << *c.vertical << "  proper " << c.proper.value_or(0);
        out << "\n";
    }
    if (r.clusters.empty())
        out << "  (none)\n";
    out << "total       " << r.total << "\n";
}

inline void degenerate_outcome(RunReport& rep, std::ostringstream& out, const DegeneracyVerdict& v)
{
    rep.exit_code = exit_degenerate;
    rep.status = "degenerate";
    rep.message = verdict_name(v.verdict) + " (" + v.reason + ")";
    out << "verdict     " << verdict_name(v.verdict) << "\n";
}

/// Degree-e map P^1 -> P^1 with coprime coordinates.
inline RationalMap random_reparametrization(Rng& rng)
{
    const int e = static_cast<int>(uniform_int(rng, 2, 3));
    for (;;) {
        try {
            return make_rational_map({random_poly(rng, e, 4), random_poly(rng, static_cast<int>(uniform_int(rng, 0, e)), 4)}, e);
        } catch (const InvalidInput&) {
        }
    }
}

inline void run_mode(const InstanceSpec& spec, const std::string& mode, const RunOptions& opts, RunReport& rep,
                     std::ostringstream& out)
{
    rep.exit_code = exit_ok;
    rep.status = "ok";
    if (mode == "rhs") {
        if (!spec.rhs)
            throw InvalidInput("rhs mode needs 'rhs' with a, b, n, d");
        const auto& p = *spec.rhs;
        const RhsSummary s = rhs_summary(p.a, p.b, p.n, p.d, p.g);
        rep.outcome = to_json(s);
        out << "N           " << s.N << "\nH_coeff     " << s.H_coeff << "\nrhs_total   " << s.rhs_total << "\n";
        return;
    }
    if (mode == "rh-hyperelliptic") {
        if (!spec.curve)
            throw InvalidInput("rh-hyperelliptic needs 'curve' (h in x)");
        const HyperellipticCurve C(parse_unipoly(*spec.curve, "x"));
        const RationalMap phi = build_map(need_map(spec), "x");
        const RamificationSummary s = hyperelliptic_ramification(C, phi);
        rep.outcome = to_json(s);
        out << "genus       " << C.genus() << "\nclusters\n";
        for (const auto& c : s.clusters)
            out << "  " << c.base.label("x") << "  sheets " << c.sheets << "\n";
        out << "total       " << s.total << "\nexpected    " << s.expected << "\n";
        if (!s.matched) {
            rep.exit_code = exit_mismatch;
            rep.status = "theorem-mismatch";
            rep.message = "ramification total differs from 2 deg f + 2g - 2";
        }
        return;
    }

    need_rational(spec);
    const RationalMap f = build_map(need_map(spec));
    const DivisorFamily fam = need_family(spec);
    out << "map         " << f.to_string() << "\nfamily      " << fam.to_string() << "  bidegree (" << fam.bidegree().x
        << "," << fam.bidegree().z << ")  n " << fam.n() << "\n";

    if (mode == "verify") {
        const VerificationResult v = verify(f, fam, spec.genus);
        rep.outcome = to_json(v);
        table_clusters(out, v.report);
        if (v.report.is_degenerate())
            return degenerate_outcome(rep, out, classify(v.report));
        out << "lhs         " << v.lhs_total << "\nrhs         " << v.rhs.rhs_total << "\n";
        if (!v.matched) {
            rep.exit_code = exit_mismatch;
            rep.status = "theorem-mismatch";
            rep.message = "lhs " + v.lhs_total.get_str() + " != rhs " + v.rhs.rhs_total.get_str();
        }
        return;
    }
    if (mode == "inflect" || mode == "wronskian") {
        const InflectionReport r = mode == "inflect" ? inflection_divisor(f, fam) : wronskian_inflection(f, fam);
        rep.outcome = to_json(r);
        table_clusters(out, r);
        if (r.is_degenerate())
            degenerate_outcome(rep, out, classify(r));
        return;
    }
    if (mode == "degenerate-check") {
        const DegeneracyVerdict v = degeneracy_check(f, fam);
        rep.outcome = to_json(v);
        if (v.verdict != Verdict::nondegenerate_finite)
            return degenerate_outcome(rep, out, v);
        out << "verdict     " << verdict_name(v.verdict) << "\n";
        return;
    }
    if (mode == "functoriality-test") {
        if (fam.n() != 1)
            throw InvalidInput("functoriality-test needs a one-parameter family");
        std::optional<RationalMap> h;
        if (spec.reparametrization) {
            h = build_map(*spec.reparametrization);
        } else {
            Rng rng = make_rng(opts.seed.value_or(spec.seed.value_or(0)), 0);
            h = random_reparametrization(rng);
        }
        if (h->target_dim() != 1)
            throw InvalidInput("the reparametrization must map to P^1");
        const int e = h->degree();
        const InflectionReport base = inflection_divisor_n1(f, fam);
        const InflectionReport pulled = inflection_divisor_n1(f, reparametrize_z(fam, *h));
        Json j;
        j["reparametrization"] = h->to_string();
        j["degree"] = e;
        j["base"] = to_json(base);
        j["reparametrized"] = to_json(pulled);
        out << "h           " << h->to_string() << "  degree " << e << "\n";
        table_clusters(out, base);
        if (base.is_degenerate()) {
            j["scaled"] = false;
            rep.outcome = j;
            return degenerate_outcome(rep, out, classify(base));
        }
        std::vector<PointCluster> expected;
        for (auto c : base.point_clusters()) {
            c.multiplicity *= e;
            expected.push_back(c);
        }
        const bool ok = !pulled.is_degenerate() && profile_of(expected) == profile_of(pulled.point_clusters()) &&
                        pulled.total == e * base.total;
        j["scaled"] = ok;
        rep.outcome = j;
        out << "reparametrized total " << pulled.total << " (expected " << e * base.total << ")\n";
        if (!ok) {
            rep.exit_code = exit_mismatch;
            rep.status = "theorem-mismatch";
            rep.message = "multiplicities are not scaled by " + std::to_string(e);
        }
        return;
    }
    throw InvalidInput("unknown mode '" + mode + "'");
}

} // namespace detail

/// Runs `mode` on `spec`. Never throws: failures become exit codes.
inline RunResult run(const InstanceSpec& spec, const std::string& mode, const RunOptions& opts = {})
{
    RunResult res;
    RunReport& rep = res.report;
    rep.mode = mode;
    rep.instance = spec;
    rep.outcome = Json::object();
    std::ostringstream out;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (spec.mode && *spec.mode != mode)
            throw InvalidInput("instance declares mode '" + *spec.mode + "' but '" + mode + "' was requested");
        detail::run_mode(spec, mode, opts, rep, out);
    } catch (const Degenerate& e) {
        rep.exit_code = exit_degenerate;
        rep.status = "degenerate";
        rep.message = verdict_name(Verdict::degenerate_image) + " (" + e.reason() + ")";
        rep.outcome = to_json(DegeneracyVerdict{Verdict::degenerate_image, e.reason(), e.what()});
        out << "verdict     " << verdict_name(Verdict::degenerate_image) << "\n";
    } catch (const NotImplemented& e) {
        rep.exit_code = exit_invalid;
        rep.status = "not-implemented";
        rep.message = e.what();
    } catch (const InvalidInput& e) {
        rep.exit_code = exit_invalid;
        rep.status = "invalid-input";
        rep.message = e.what();
    } catch (const std::exception& e) {
        rep.exit_code = exit_internal;
        rep.status = "internal-error";
        rep.message = e.what();
    }
    if (opts.timing)
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.table = out.str();
    res.table += "status      " + rep.status + (rep.message.empty() ? "" : ": " + rep.message) + "\n";
    return res;
}

} // namespace inflect
