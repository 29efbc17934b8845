#include "incpoly/harness/verify.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <map>

#include "incpoly/companion.hpp"
#include "incpoly/harness/rng.hpp"

namespace incpoly::harness {

namespace {

    constexpr double inf = std::numeric_limits<double>::infinity();

    using Clock = std::chrono::steady_clock;

    // Lazily computed quantities shared between checks of one instance.
    struct Context {
        const InstanceSpec& spec;
        RootList<double> roots;
        Weights<double> gamma;
        double scale;
        std::optional<Hull<double>> hull_;
        std::optional<SortedRoots<double>> zeros_;

        explicit Context(const InstanceSpec& s)
            : spec(s), roots(s.root_list()), gamma(s.weights()), scale(scale_of(roots))
        {
        }

        const Hull<double>& hull()
        {
            if (!hull_)
                hull_ = convex_hull(roots);
            return *hull_;
        }

        const SortedRoots<double>& zeros()
        {
            if (!zeros_)
                zeros_ = zeros_of_combination(roots, gamma, spec.pivot_or_last());
            return *zeros_;
        }

        Index n() const { return roots.size(); }
    };

    CheckResult not_applicable(std::string id, std::string why)
    {
        CheckResult c;
        c.id = std::move(id);
        c.margin = inf;
        c.detail = std::move(why);
        return c;
    }

    CheckResult hull_containment(Context& c)
    {
        return containment_check("hull-containment", c.hull(), c.zeros().roots, containment_tolerance * c.scale);
    }

    CheckResult derivative_containment(Context& c)
    {
        if (c.n() < 2)
            return not_applicable("derivative-containment", "n < 2");
        CheckResult worst;
        for (Index k = 1; k < c.n(); ++k) {
            CheckResult r = containment_check("derivative-containment", c.hull(), derivative_zeros(c.roots, k).roots,
                                              containment_tolerance * c.scale);
            if (k == 1 || r.margin < worst.margin) {
                worst = r;
                worst.detail = "worst derivative order " + std::to_string(k);
            }
        }
        return worst;
    }

    CheckResult second_order_containment(Context& c)
    {
        if (c.n() < 3)
            return not_applicable("second-order-containment", "n < 3");
        return containment_check("second-order-containment", c.hull(), second_order_zeros(c.roots, c.gamma).roots,
                                 containment_tolerance * c.scale);
    }

    CheckResult product_check(Context& c)
    {
        return majorization_check("product-majorization", {product_majorization(c.zeros(), sort_desc_modulus(c.roots))});
    }

    CheckResult power_check(Context& c)
    {
        std::vector<MajorizationReport<double>> reps;
        const SortedRoots<double> z = sort_desc_modulus(c.roots);
        for (double p : majorization_powers)
            reps.push_back(phi_sum_majorization(c.zeros(), z, ScalarTransform<double>::power(p)));
        return majorization_check("power-majorization", reps);
    }

    CheckResult absolute_check(Context& c)
    {
        return majorization_check("absolute-majorization", {compare_with_absolute(c.roots, c.gamma)});
    }

    CheckResult absolute_power_check(Context& c)
    {
        std::vector<MajorizationReport<double>> reps;
        for (double p : majorization_powers)
            reps.push_back(compare_with_absolute(c.roots, c.gamma, ScalarTransform<double>::power(p)));
        return majorization_check("absolute-power-majorization", reps);
    }

    CheckResult full_companion(Context& c)
    {
        const Polynomial<double> expected = Polynomial<double>{0.0, 1.0} * convex_combination(c.roots, c.gamma);
        return identity_check("full-companion", char_poly(build_full(c.roots, c.gamma)), expected, identity_tolerance);
    }

    CheckResult reduced_companion(Context& c)
    {
        const Polynomial<double> expected = convex_combination(c.roots, c.gamma);
        CheckResult worst;
        for (Index p = 0; p < c.n(); ++p) {
            CheckResult r = identity_check("reduced-companion", char_poly(build_reduced(c.roots, c.gamma, p)), expected,
                                           identity_tolerance);
            if (p == 0 || r.margin < worst.margin) {
                worst = r;
                worst.detail = "worst pivot " + std::to_string(p + 1);
            }
        }
        return worst;
    }

    CheckResult trace_disc_check(Context& c)
    {
        std::vector<ContainmentResult<double>> results;
        for (Index p = 0; p < c.n(); ++p)
            results.push_back(disc_contains_all(trace_disc(c.roots, c.gamma, p), c.zeros().roots,
                                                containment_tolerance * c.scale));
        return disc_check("trace-disc", results, containment_tolerance * c.scale);
    }

    CheckResult trace_radius_check(Context& c)
    {
        CheckResult r;
        r.id = "trace-radius";
        r.tolerance = radius_tolerance;
        double worst = 0;
        for (Index p = 0; p < c.n(); ++p) {
            const double closed = trace_disc(c.roots, c.gamma, p).radius;
            const double entrywise = trace_radius(build_reduced(c.roots, c.gamma, p).entries);
            const double gap = std::abs(closed - entrywise);
            worst = std::max(worst, gap == 0 ? 0.0 : gap / std::max(entrywise, std::numeric_limits<double>::min()));
        }
        r.margin = -worst;
        r.holds = within_tolerance(r.margin, r.tolerance);
        return r;
    }

    CheckResult corollary_center(Context& c)
    {
        CheckResult r;
        r.id = "corollary-center";
        r.tolerance = 0;
        const std::complex<double> mean = c.roots.sum() / double(c.n());
        double worst = std::abs(derivative_disc(c.roots).center - mean);
        for (Index p = 0; p < c.n(); ++p)
            worst = std::max(worst, std::abs(trace_disc(c.roots, Weights<double>::uniform(c.n()), p).center - mean));
        r.margin = -worst;
        r.holds = within_tolerance(r.margin, r.tolerance);
        return r;
    }

    CheckResult gershgorin_check(Context& c)
    {
        std::vector<ContainmentResult<double>> results;
        for (Index p = 0; p < c.n(); ++p)
            results.push_back(disc_contains_all(gershgorin_union(c.roots, c.gamma, p), c.zeros().roots,
                                                containment_tolerance * c.scale));
        return disc_check("gershgorin-union", results, containment_tolerance * c.scale);
    }

    CheckResult hull_recovery(Context& c)
    {
        CheckResult r;
        r.id = "hull-recovery";
        r.tolerance = recovery_tolerance;
        const std::complex<double> a = c.spec.point.value_or(c.roots.sum() / double(c.n()));
        const Weights<double> g = recover_gamma(c.roots, a);
        std::complex<double> value = 0;
        for (Index k = 0; k < c.n(); ++k) {
            std::complex<double> term = g[k];
            for (Index j = 0; j < c.n(); ++j)
                if (j != k)
                    term *= a - c.roots[j];
            value += term;
        }
        r.margin = -std::abs(value) / std::pow(1 + c.scale, double(c.n() - 1));
        r.holds = within_tolerance(r.margin, r.tolerance);
        return r;
    }

    using CheckFn = CheckResult (*)(Context&);

    const std::vector<std::pair<std::string, CheckFn>>& registry()
    {
        static const std::vector<std::pair<std::string, CheckFn>> checks{
            {"hull-containment", hull_containment},
            {"derivative-containment", derivative_containment},
            {"second-order-containment", second_order_containment},
            {"product-majorization", product_check},
            {"power-majorization", power_check},
            {"absolute-majorization", absolute_check},
            {"absolute-power-majorization", absolute_power_check},
            {"full-companion", full_companion},
            {"reduced-companion", reduced_companion},
            {"trace-disc", trace_disc_check},
            {"trace-radius", trace_radius_check},
            {"corollary-center", corollary_center},
            {"gershgorin-union", gershgorin_check},
            {"hull-recovery", hull_recovery},
        };
        return checks;
    }

    bool selected(const std::vector<std::string>& ids, const std::string& id)
    {
        return ids.empty() || std::find(ids.begin(), ids.end(), id) != ids.end();
    }

} // namespace

const std::vector<std::string>& check_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry())
            v.push_back(id);
        return v;
    }();
    return ids;
}

std::vector<std::string> parse_check_selection(std::string_view csv)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', start), csv.size());
        std::string id(csv.substr(start, comma - start));
        id.erase(0, id.find_first_not_of(' '));
        id.erase(id.find_last_not_of(' ') + 1);
        if (id == "all")
            return {};
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
            throw ParseError("unknown check '" + id + "'");
        out.push_back(id);
        start = comma + 1;
    }
    return out;
}

CheckResult containment_check(std::string id, const Hull<double>& hull, const RootList<double>& zeros, double tol)
{
    CheckResult r;
    r.id = std::move(id);
    r.tolerance = tol;
    r.margin = inf;
    for (Index i = 0; i < zeros.size(); ++i)
        r.margin = std::min(r.margin, signed_distance(hull, zeros[i]));
    r.holds = within_tolerance(r.margin, tol);
    return r;
}

CheckResult majorization_check(std::string id, const std::vector<MajorizationReport<double>>& reports)
{
    CheckResult r;
    r.id = std::move(id);
    r.tolerance = majorization_tolerance;
    r.margin = inf;
    for (const auto& rep : reports) {
        r.margin = std::min(r.margin, rep.worst_margin());
        if (!rep.holds()) {
            r.holds = false;
            if (r.detail.empty())
                r.detail = (rep.phi_name.empty() ? std::string("product") : rep.phi_name) + " fails at k = " +
                           std::to_string(*rep.violated_at);
        }
    }
    r.holds = r.holds && within_tolerance(r.margin, r.tolerance);
    return r;
}

CheckResult identity_check(std::string id, const Polynomial<double>& computed, const Polynomial<double>& expected,
                           double tol)
{
    CheckResult r;
    r.id = std::move(id);
    r.tolerance = tol;
    const double size = std::max(expected.max_abs_coeff(), std::numeric_limits<double>::min());
    r.margin = -coefficient_distance(computed, expected) / size;
    r.holds = within_tolerance(r.margin, tol);
    return r;
}

CheckResult disc_check(std::string id, const std::vector<ContainmentResult<double>>& results, double tol)
{
    CheckResult r;
    r.id = std::move(id);
    r.tolerance = tol;
    double worst = 0;
    for (const auto& c : results) {
        worst = std::max(worst, c.max_violation);
        if (!c.contained)
            r.holds = false;
    }
    r.margin = -worst;
    r.holds = r.holds && within_tolerance(r.margin, tol);
    return r;
}

VerificationReport verify_instance(const InstanceSpec& spec, const std::vector<std::string>& ids)
{
    VerificationReport report;
    report.seed = spec.seed;
    report.instance = spec;
    Context ctx(spec);
    for (const auto& [id, fn] : registry()) {
        if (!selected(ids, id))
            continue;
        const auto start = Clock::now();
        CheckResult r;
        try {
            r = fn(ctx);
        } catch (const Error& e) {
            r.id = id;
            r.holds = false;
            r.margin = -inf;
            r.detail = e.what();
        }
        r.runtime_s = std::chrono::duration<double>(Clock::now() - start).count();
        report.checks.push_back(std::move(r));
    }
    return report;
}

VerificationReport self_test_report()
{
    const auto sorted = [](std::initializer_list<std::complex<double>> v) {
        RootList<double> r(static_cast<Index>(v.size()));
        Index i = 0;
        for (const auto& z : v)
            r[i++] = z;
        return sort_desc_modulus(r);
    };
    RootList<double> triangle(3);
    triangle << 0.0, 1.0, std::complex<double>(0, 1);
    RootList<double> outside(1);
    outside << 2.0;

    VerificationReport report;
    report.checks.push_back(containment_check("hull-containment", convex_hull(triangle), outside, 1e-9));
    report.checks.push_back(majorization_check("product-majorization", {product_majorization(sorted({2.0}), sorted({1.0}))}));
    report.checks.push_back(majorization_check(
        "power-majorization",
        {phi_sum_majorization(sorted({3.0, 1.0}), sorted({2.0, 2.0}), ScalarTransform<double>::power(1.5))}));
    report.checks.push_back(majorization_check(
        "absolute-majorization", {product_majorization(sorted({1.0, 0.5}), sorted({2.0, 0.0}), 2)}));
    const Polynomial<double> target = convex_combination(triangle, Weights<double>::uniform(3));
    report.checks.push_back(identity_check("full-companion", target + Polynomial<double>{1e-6}, target, 1e-10));
    report.checks.push_back(
        disc_check("trace-disc", {disc_contains_all(Disc<double>{0.0, 1.0}, outside, 1e-9)}, 1e-9));
    DiscUnion<double> u;
    u.discs.push_back({0.0, 1.0});
    u.discs.push_back({std::complex<double>(0, 3), 0.5});
    report.checks.push_back(disc_check("gershgorin-union", {disc_contains_all(u, outside, 1e-9)}, 1e-9));
    for (CheckResult& c : report.checks)
        c.detail = "fabricated violation";
    return report;
}

std::size_t FuzzSummary::violations() const
{
    std::size_t v = 0;
    for (const auto& c : checks)
        v += c.violations;
    return v;
}

InstanceSpec shrink_instance(const InstanceSpec& spec, const std::vector<std::string>& failing)
{
    const auto still_fails = [&](const InstanceSpec& s) {
        try {
            const VerificationReport r = verify_instance(s, failing);
            return !r.all_hold();
        } catch (const Error&) {
            return false;
        }
    };
    InstanceSpec best = spec;
    best.pivot.reset();
    if (!still_fails(best))
        best = spec;
    bool progress = true;
    while (progress && best.size() > 2) {
        progress = false;
        for (std::size_t drop = 0; drop < best.roots.size(); ++drop) {
            InstanceSpec trial = best;
            trial.roots.erase(trial.roots.begin() + static_cast<long>(drop));
            trial.pivot.reset();
            trial.point.reset();
            if (trial.gamma) {
                trial.gamma->erase(trial.gamma->begin() + static_cast<long>(drop));
                double sum = 0;
                for (double g : *trial.gamma)
                    sum += g;
                if (sum <= 0)
                    continue;
                for (double& g : *trial.gamma)
                    g /= sum;
            }
            if (still_fails(trial)) {
                best = std::move(trial);
                progress = true;
                break;
            }
        }
    }
    return best;
}

FuzzSummary run_fuzz(std::uint64_t seed, std::size_t trials, std::optional<Family> family)
{
    if (trials < 1)
        throw InvalidArgument("fuzz: trials must be at least 1");
    FuzzSummary s;
    s.seed = seed;
    s.family = family ? std::string(family_name(*family)) : "all";
    s.trials = trials;
    for (const std::string& id : check_ids())
        s.checks.push_back({id, 0, 0, inf});

    for (std::size_t i = 0; i < trials; ++i) {
        const Family f = family ? *family : all_families[i % all_families.size()];
        const std::size_t round = family ? i : i / all_families.size();
        const InstanceSpec spec = generate_instance(f, gamma_family_for(f, round), derive_seed(seed, i));
        const VerificationReport r = verify_instance(spec);
        std::vector<std::string> failing;
        for (std::size_t k = 0; k < r.checks.size(); ++k) {
            const CheckResult& c = r.checks[k];
            CheckAggregate& agg = s.checks[k];
            if (c.detail == "n < 2" || c.detail == "n < 3")
                continue;
            ++agg.evaluated;
            agg.worst_margin = std::min(agg.worst_margin, c.margin);
            if (!c.holds) {
                ++agg.violations;
                failing.push_back(c.id);
            }
        }
        if (!failing.empty()) {
            InstanceSpec repro = shrink_instance(spec, failing);
            std::string label = "trial " + std::to_string(i) + " fails";
            for (const auto& id : failing)
                label += " " + id;
            repro.label = label;
            s.reproducers.push_back(std::move(repro));
        }
    }
    return s;
}

Json to_json(const FuzzSummary& s)
{
    Json j = Json::object();
    j["version"] = artifact_version();
    j["seed"] = s.seed;
    j["family"] = s.family;
    j["trials"] = s.trials;
    j["violations"] = s.violations();
    j["holds"] = s.violations() == 0;
    Json checks = Json::array();
    for (const auto& c : s.checks) {
        Json e = Json::object();
        e["id"] = c.id;
        e["evaluated"] = c.evaluated;
        e["violations"] = c.violations;
        e["worst_margin"] = number_json(c.worst_margin);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    Json repro = Json::array();
    for (const auto& r : s.reproducers)
        repro.push_back(to_json(r));
    j["reproducers"] = std::move(repro);
    return j;
}

} // namespace incpoly::harness
