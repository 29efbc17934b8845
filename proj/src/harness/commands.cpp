#include "incpoly/harness/commands.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>

#include "incpoly/harness/svg.hpp"
#include "incpoly/harness/verify.hpp"

namespace incpoly::harness {

namespace {

    std::string dump(const Json& j) { return j.dump(2) + "\n"; }

    Json complex_array(const RootList<double>& z)
    {
        Json a = Json::array();
        for (Index i = 0; i < z.size(); ++i)
            a.push_back(complex_json(z[i]));
        return a;
    }

    bool wants_best_pivot(const CommandOptions& opt) { return opt.pivot && *opt.pivot == "best"; }

    Index resolve_pivot(const CommandOptions& opt, const InstanceSpec& spec)
    {
        if (wants_best_pivot(opt))
            return best_pivot(spec.root_list(), spec.weights(), PivotCriterion::min_total_area);
        return spec.pivot_or_last();
    }

    // Zeros of the instance's combination: the pairwise g_ij sum when asked,
    // otherwise A_n^gamma.
    struct Evaluated {
        SortedRoots<double> zeros;
        Polynomial<double> poly;
    };

    Evaluated evaluate_instance(const CommandOptions& opt, const InstanceSpec& spec)
    {
        const RootList<double> r = spec.root_list();
        if (opt.pairwise) {
            if (spec.pairs.empty())
                throw ParseError("roots --pairwise needs 'pairs' in the instance");
            return {pairwise_zeros(r, spec.pairs), pairwise_combination(r, spec.pairs)};
        }
        return {zeros_of_combination(r, spec.weights(), spec.pivot_or_last()), convex_combination(r, spec.weights())};
    }

} // namespace

InstanceSpec assemble_instance(const CommandOptions& opt)
{
    InstanceSpec s;
    if (opt.instance_path)
        s = read_instance(*opt.instance_path);
    if (opt.roots) {
        s.roots = parse_complex_list(*opt.roots);
        if (s.gamma && static_cast<Index>(s.gamma->size()) != s.size() && !opt.gamma)
            throw ParseError("--roots changes n; give --gamma as well");
    }
    if (s.roots.empty())
        throw ParseError("no roots: pass --instance <file> or --roots <csv>");
    if (opt.gamma)
        s.gamma = parse_real_list(*opt.gamma);
    if (s.gamma) {
        try {
            s.weights();
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }
    if (opt.pivot && !wants_best_pivot(opt)) {
        const std::vector<double> v = parse_real_list(*opt.pivot);
        if (v.size() != 1 || v[0] != std::floor(v[0]) || v[0] < 1 || v[0] > double(s.size()))
            throw ParseError("--pivot must be an index in 1.." + std::to_string(s.size()) + " or 'best'");
        s.pivot = static_cast<Index>(v[0]) - 1;
    }
    if (opt.target)
        s.target = parse_complex_list(*opt.target);
    if (opt.point)
        s.point = parse_complex(*opt.point);
    return s;
}

int cmd_roots(const CommandOptions& opt, std::ostream& out)
{
    const InstanceSpec spec = assemble_instance(opt);
    const Evaluated e = evaluate_instance(opt, spec);
    const Hull<double> hull = convex_hull(spec.root_list());
    const double tol = default_tolerance(spec.root_list());
    Json zeros = Json::array();
    for (Index i = 0; i < e.zeros.size(); ++i) {
        const std::complex<double> z = e.zeros[i];
        const double residual = std::abs(e.poly(z));
        const double sd = signed_distance(hull, z);
        if (opt.json) {
            Json item = Json::object();
            item["zero"] = complex_json(z);
            item["residual"] = number_json(residual);
            item["in_hull"] = sd >= -tol;
            item["hull_distance"] = number_json(sd < -tol ? -sd : 0.0);
            zeros.push_back(std::move(item));
            continue;
        }
        out << format_complex(z) << "  residual " << format_number(residual);
        if (sd < -tol)
            out << "  outside hull by " << format_number(-sd);
        out << "\n";
    }
    if (opt.json) {
        Json j = Json::object();
        j["mode"] = opt.pairwise ? "pairwise" : "convex";
        j["zeros"] = std::move(zeros);
        out << dump(j);
    }
    return exit_ok;
}

int cmd_verify(const CommandOptions& opt, std::ostream& out)
{
    VerificationReport r;
    if (opt.self_test) {
        r = self_test_report();
    } else if (opt.report_path) {
        Json j;
        try {
            j = Json::parse(read_file(*opt.report_path));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(*opt.report_path + ": " + e.what());
        }
        r = recheck(report_from_json(j));
    } else {
        const std::vector<std::string> ids = opt.theorems ? parse_check_selection(*opt.theorems) : std::vector<std::string>{};
        r = verify_instance(assemble_instance(opt), ids);
    }
    out << dump(to_json(r, opt.timing));
    return r.all_hold() ? exit_ok : exit_violation;
}

int cmd_recover(const CommandOptions& opt, std::ostream& out, std::ostream& err)
{
    const InstanceSpec spec = assemble_instance(opt);
    if (!spec.point)
        throw ParseError("recover needs --point or 'point' in the instance");
    const RootList<double> r = spec.root_list();
    const std::complex<double> a = *spec.point;
    Json j = Json::object();
    j["point"] = complex_json(a);
    try {
        const Weights<double> g = recover_gamma(r, a);
        const double residual = std::abs(convex_combination(r, g)(a));
        Json gamma = Json::array();
        for (Index k = 0; k < g.size(); ++k)
            gamma.push_back(number_json(g[k]));
        j["gamma"] = std::move(gamma);
        j["residual"] = number_json(residual);
        j["bound"] = number_json(1e-9 * std::pow(1 + scale_of(r), double(r.size() - 1)));
        out << dump(j);
        return exit_ok;
    } catch (const OutsideHull& e) {
        j["outside_hull_distance"] = number_json(e.distance());
        out << dump(j);
        err << "point lies outside the hull by " << format_number(e.distance()) << "\n";
        return exit_violation;
    }
}

int cmd_decompose(const CommandOptions& opt, std::ostream& out)
{
    const InstanceSpec spec = assemble_instance(opt);
    const auto d = lagrange_decompose(spec.root_list(), spec.target_polynomial());
    Json j = Json::object();
    j["feasible"] = d.feasible();
    j["lambda"] = complex_array(d.coefficients);
    if (d.weights) {
        Json g = Json::array();
        for (Index k = 0; k < d.weights->size(); ++k)
            g.push_back(number_json((*d.weights)[k]));
        j["gamma"] = std::move(g);
    }
    Json offenses = Json::array();
    for (const auto& o : d.offenses) {
        Json e = Json::object();
        e["index"] = o.index + 1;
        e["lambda"] = complex_json(o.coefficient);
        Json reasons = Json::array();
        for (auto reason : o.reasons)
            reasons.push_back(reason == DecompositionResult<double>::Reason::nonreal ? "nonreal" : "negative-real");
        e["reasons"] = std::move(reasons);
        offenses.push_back(std::move(e));
    }
    j["offenses"] = std::move(offenses);
    out << dump(j);
    return exit_ok;
}

int cmd_discs(const CommandOptions& opt, std::ostream& out)
{
    const InstanceSpec spec = assemble_instance(opt);
    const RootList<double> r = spec.root_list();
    const Weights<double> g = spec.weights();
    const Index pivot = resolve_pivot(opt, spec);
    const SortedRoots<double> zeros = zeros_of_combination(r, g, pivot);
    const double tol = default_tolerance(r);

    const Disc<double> td = trace_disc(r, g, pivot);
    const DiscUnion<double> u = gershgorin_union(r, g, pivot);
    const auto tc = disc_contains_all(td, zeros.roots, tol);
    const auto uc = disc_contains_all(u, zeros.roots, tol);

    Json j = Json::object();
    j["pivot"] = pivot + 1;
    j["zeros"] = complex_array(zeros.roots);
    Json t = Json::object();
    t["center"] = complex_json(td.center);
    t["radius"] = number_json(td.radius);
    t["contains_all"] = tc.contained;
    t["max_violation"] = number_json(tc.max_violation);
    j["trace_disc"] = std::move(t);
    Json discs = Json::array();
    for (std::size_t k = 0; k < u.discs.size(); ++k) {
        Json d = Json::object();
        d["row"] = u.rows[k] + 1;
        d["center"] = complex_json(u.discs[k].center);
        d["radius"] = number_json(u.discs[k].radius);
        discs.push_back(std::move(d));
    }
    Json gu = Json::object();
    gu["discs"] = std::move(discs);
    gu["contains_all"] = uc.contained;
    gu["max_violation"] = number_json(uc.max_violation);
    j["gershgorin_union"] = std::move(gu);
    out << dump(j);

    if (opt.svg_path) {
        Scene scene{r, zeros.roots, {td}};
        scene.discs.insert(scene.discs.end(), u.discs.begin(), u.discs.end());
        write_file(*opt.svg_path, render_svg(scene));
    }
    return tc.contained && uc.contained ? exit_ok : exit_violation;
}

int cmd_fuzz(const CommandOptions& opt, std::ostream& out)
{
    if (opt.trials < 1)
        throw ParseError("--trials must be at least 1");
    const std::optional<Family> family =
        opt.family == "all" ? std::nullopt : std::optional<Family>(parse_family(opt.family));
    const FuzzSummary s = run_fuzz(opt.seed, opt.trials, family);
    if (opt.dump_dir && !s.reproducers.empty()) {
        std::filesystem::create_directories(*opt.dump_dir);
        for (std::size_t i = 0; i < s.reproducers.size(); ++i)
            write_file((std::filesystem::path(*opt.dump_dir) / ("reproducer-" + std::to_string(i) + ".json")).string(),
                       dump(to_json(s.reproducers[i])));
    }
    out << dump(to_json(s));
    return s.violations() == 0 ? exit_ok : exit_violation;
}

int cmd_counterexamples(std::ostream& out)
{
    const std::complex<double> i(0, 1);
    Json j = Json::object();

    // Equal-weight g_ij sum over the double roots 0 and i escapes H(0, i).
    RootList<double> r(4);
    r << 0.0, 0.0, i, i;
    const std::vector<PairWeight> pairs{{0, 1, 1.0 / 3}, {0, 3, 1.0 / 3}, {2, 3, 1.0 / 3}};
    const SortedRoots<double> z = pairwise_zeros(r, pairs);
    const double half_width = 1 / (2 * std::sqrt(3.0));
    RootList<double> expected(2);
    expected << 0.5 * i + half_width, 0.5 * i - half_width;
    const double zero_error = multiset_distance(z.roots, expected);
    const Hull<double> h = convex_hull(r);
    double escape = 0;
    for (Index k = 0; k < z.size(); ++k)
        escape = std::max(escape, -signed_distance(h, z[k]));
    const bool first = zero_error <= 1e-9 && std::abs(escape - half_width) <= 1e-9;
    Json e = Json::object();
    e["roots"] = complex_array(r);
    e["zeros"] = complex_array(z.roots);
    e["zero_error"] = number_json(zero_error);
    e["hull_distance"] = number_json(escape);
    e["expected_distance"] = number_json(half_width);
    e["reproduced"] = first;
    j["pairwise_escape"] = std::move(e);

    // z(z - 1/2) over {0, 1, i} needs complex coefficients.
    RootList<double> t(3);
    t << 0.0, 1.0, i;
    const auto d = lagrange_decompose(t, Polynomial<double>{0.0, -0.5, 1.0});
    ComplexVector<double> lambda(3);
    lambda << 0.0, 0.25 + 0.25 * i, 0.75 - 0.25 * i;
    const double lambda_error = (d.coefficients - lambda).cwiseAbs().maxCoeff();
    const bool second = !d.feasible() && lambda_error <= 1e-12;
    Json dj = Json::object();
    dj["roots"] = complex_array(t);
    dj["target"] = Json::array({complex_json(0.0), complex_json(-0.5), complex_json(1.0)});
    dj["lambda"] = complex_array(d.coefficients);
    dj["lambda_error"] = number_json(lambda_error);
    dj["feasible"] = d.feasible();
    dj["reproduced"] = second;
    j["infeasible_decomposition"] = std::move(dj);
    j["holds"] = first && second;
    out << dump(j);
    return first && second ? exit_ok : exit_violation;
}

int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        if (opt.command == "roots")
            return cmd_roots(opt, out);
        if (opt.command == "verify")
            return cmd_verify(opt, out);
        if (opt.command == "recover")
            return cmd_recover(opt, out, err);
        if (opt.command == "decompose")
            return cmd_decompose(opt, out);
        if (opt.command == "discs")
            return cmd_discs(opt, out);
        if (opt.command == "fuzz")
            return cmd_fuzz(opt, out);
        if (opt.command == "counterexamples")
            return cmd_counterexamples(out);
        err << "unknown command '" << opt.command << "'\n";
        return exit_usage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_violation;
    }
}

} // namespace incpoly::harness
