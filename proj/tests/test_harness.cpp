#include <gtest/gtest.h>

#include <sstream>

#include "incpoly/harness/commands.hpp"
#include "incpoly/harness/corpus.hpp"
#include "incpoly/harness/io.hpp"
#include "incpoly/harness/report.hpp"
#include "incpoly/harness/rng.hpp"
#include "incpoly/harness/svg.hpp"
#include "incpoly/harness/verify.hpp"

using namespace incpoly;
using namespace incpoly::harness;
using cd = std::complex<double>;

namespace {

const cd I(0, 1);

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(CommandOptions opt)
{
    std::ostringstream out, err;
    const int code = run_command(opt, out, err);
    return {code, out.str(), err.str()};
}

CommandOptions command(std::string name, std::string roots = {})
{
    CommandOptions opt;
    opt.command = std::move(name);
    if (!roots.empty())
        opt.roots = std::move(roots);
    return opt;
}

} // namespace

// Reference values from an independent xoshiro256** / splitmix64 implementation.
TEST(Rng, MatchesReferenceStream)
{
    Rng a(0);
    EXPECT_EQ(a.next(), 0x99ec5f36cb75f2b4ULL);
    EXPECT_EQ(a.next(), 0xbf6e1f784956452aULL);
    EXPECT_EQ(a.next(), 0x1a5f849d4933e6e0ULL);
    Rng b(42);
    EXPECT_EQ(b.next(), 0x15780b2e0c2ec716ULL);
    EXPECT_EQ(b.next(), 0x6104d9866d113a7eULL);
    EXPECT_EQ(b.next(), 0xae17533239e499a1ULL);
    EXPECT_EQ(derive_seed(5, 3), 0x92eca587940bcf76ULL);
}

TEST(Rng, RangesAndDeterminism)
{
    Rng a(7), b(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        EXPECT_EQ(u, b.uniform());
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        const long k = a.between(-3, 3);
        EXPECT_EQ(k, b.between(-3, 3));
        EXPECT_GE(k, -3);
        EXPECT_LE(k, 3);
        EXPECT_LT(a.below(5), 5u);
        b.below(5);
    }
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Io, ParseComplexForms)
{
    EXPECT_EQ(parse_complex("1.5"), cd(1.5, 0));
    EXPECT_EQ(parse_complex("-2i"), cd(0, -2));
    EXPECT_EQ(parse_complex("i"), cd(0, 1));
    EXPECT_EQ(parse_complex("-i"), cd(0, -1));
    EXPECT_EQ(parse_complex("0.25-0.75i"), cd(0.25, -0.75));
    EXPECT_EQ(parse_complex("1e-3+2e2i"), cd(1e-3, 200));
    EXPECT_EQ(parse_complex_list("0,1,i"), (std::vector<cd>{0.0, 1.0, I}));
    EXPECT_EQ(parse_real_list("0.5,0.5"), (std::vector<double>{0.5, 0.5}));
    for (const char* bad : {"", "abc", "1+", "1+2", "inf", "nan", "1ii", "2 i"})
        EXPECT_THROW(parse_complex(bad), ParseError) << bad;
}

TEST(Io, FormatRoundTrips)
{
    EXPECT_EQ(format_complex(cd(0.5, 0)), "0.5+0i");
    EXPECT_EQ(format_complex(cd(-0.0, -1)), "0-1i");
    EXPECT_EQ(format_number(0.1), "0.1");
    Rng g(3);
    for (int i = 0; i < 2000; ++i) {
        const cd z(g.uniform(-1e3, 1e3), g.uniform(-1e-3, 1e-3));
        EXPECT_EQ(parse_complex(format_complex(z)), z);
        EXPECT_EQ(std::stod(format_number(z.real())), z.real());
    }
}

TEST(Io, NonFiniteNumbersAsStrings)
{
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_EQ(number_json(inf), "inf");
    EXPECT_EQ(number_json(-inf), "-inf");
    EXPECT_TRUE(std::isnan(number_from_json(number_json(std::nan("")), "x")));
    EXPECT_EQ(number_from_json(number_json(-inf), "x"), -inf);
    EXPECT_EQ(complex_from_json(Json::parse("[1, -2]"), "z"), cd(1, -2));
    EXPECT_EQ(complex_from_json(Json::parse("3"), "z"), cd(3, 0));
    EXPECT_THROW(complex_from_json(Json::parse("[1]"), "z"), ParseError);
}

TEST(Instance, JsonRoundTrip)
{
    InstanceSpec s;
    s.roots = {0.0, 1.0, I, cd(-0.5, 0.25)};
    s.gamma = std::vector<double>{0.1, 0.2, 0.3, 0.4};
    s.pivot = 2;
    s.label = "four";
    s.seed = 99;
    s.pairs = {PairWeight{0, 1, 0.5}, PairWeight{2, 3, 0.5}};
    s.target = std::vector<cd>{0.0, -0.5, 1.0, 0.0};
    s.point = cd(0.25, 0.25);
    const Json j = to_json(s);
    EXPECT_EQ(j["pivot"], 3);
    EXPECT_EQ(j["pairs"][0][0], 1);
    const InstanceSpec back = instance_from_json(j);
    EXPECT_EQ(back.roots, s.roots);
    EXPECT_EQ(back.gamma, s.gamma);
    EXPECT_EQ(back.pivot, s.pivot);
    EXPECT_EQ(back.label, s.label);
    EXPECT_EQ(back.seed, s.seed);
    EXPECT_EQ(back.target, s.target);
    EXPECT_EQ(back.point, s.point);
    ASSERT_EQ(back.pairs.size(), 2u);
    EXPECT_EQ(back.pairs[1].i, 2);
    EXPECT_EQ(back.pairs[1].j, 3);
    EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Instance, UniformWhenGammaAbsent)
{
    const InstanceSpec s = instance_from_json(Json::parse(R"({"roots": [[0,0],[1,0],[0,1]]})"));
    EXPECT_FALSE(s.gamma);
    EXPECT_EQ(s.pivot_or_last(), 2);
    for (Index k = 0; k < 3; ++k)
        EXPECT_DOUBLE_EQ(s.weights()[k], 1.0 / 3);
    EXPECT_FALSE(to_json(s).contains("gamma"));
}

TEST(Instance, RejectsMalformedInput)
{
    for (const char* text : {
             R"({"roots": [0, 1], "bogus": 1})",
             R"({"roots": [0, 1], "gamma": [1]})",
             R"({"roots": [0, 1], "gamma": [0.7, 0.7]})",
             R"({"roots": [0, 1], "gamma": [-0.5, 1.5]})",
             R"({"roots": [0, 1], "pivot": 0})",
             R"({"roots": [0, 1], "pivot": 3})",
             R"({"roots": [0, 1], "pairs": [[1, 1, 1]]})",
             R"({"roots": [0, 1], "pairs": [[1, 3, 1]]})",
             R"({"roots": "0,1"})",
             R"({"gamma": [1]})",
             R"([0, 1])",
         })
        EXPECT_THROW(instance_from_json(Json::parse(text)), ParseError) << text;
}

TEST(Corpus, DeterministicAndWithinRange)
{
    const auto a = seeded_corpus(11, 60), b = seeded_corpus(11, 60);
    ASSERT_EQ(a.size(), 60u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
        EXPECT_GE(a[i].size(), 2);
        EXPECT_LE(a[i].size(), 12);
        EXPECT_EQ(*a[i].seed, derive_seed(11, i));
    }
    EXPECT_NE(to_json(seeded_corpus(12, 1)[0]).dump(), to_json(a[0]).dump());
}

TEST(Corpus, FamilyShapes)
{
    for (std::uint64_t s = 0; s < 40; ++s) {
        const InstanceSpec real = generate_instance(Family::real_rooted, GammaFamily::random, s);
        for (const cd& z : real.roots) {
            EXPECT_EQ(z.imag(), 0.0);
            EXPECT_LE(std::abs(z.real()), 2.0);
        }
        const InstanceSpec disc = generate_instance(Family::uniform_disc, GammaFamily::uniform, s);
        for (const cd& z : disc.roots)
            EXPECT_LE(std::abs(z), 2.0);
        const InstanceSpec rep = generate_instance(Family::repeated_roots, GammaFamily::random, s);
        for (const cd& z : rep.roots) {
            const auto copies = std::count(rep.roots.begin(), rep.roots.end(), z);
            EXPECT_LE(copies, 2);
            if (rep.roots.size() % 2 == 0) {
                EXPECT_EQ(copies, 2);
            }
        }
        const InstanceSpec bnd = generate_instance(Family::boundary_gamma, GammaFamily::boundary, s);
        ASSERT_TRUE(bnd.gamma);
        EXPECT_TRUE(std::count(bnd.gamma->begin(), bnd.gamma->end(), 0.0) > 0 || bnd.roots.size() == 2);
    }
    EXPECT_EQ(parse_family("clustered"), Family::clustered);
    EXPECT_THROW(parse_family("gaussian"), ParseError);
    for (std::uint64_t t = 0; t < 10; ++t)
        EXPECT_NE(gamma_family_for(Family::repeated_roots, t), GammaFamily::boundary);
}

TEST(Verify, TriangleHoldsEverywhere)
{
    InstanceSpec s;
    s.roots = {0.0, 1.0, I};
    const VerificationReport r = verify_instance(s);
    EXPECT_TRUE(r.all_hold());
    ASSERT_EQ(r.checks.size(), check_ids().size());
    for (std::size_t i = 0; i < r.checks.size(); ++i)
        EXPECT_EQ(r.checks[i].id, check_ids()[i]);
}

TEST(Verify, TwoRootsMarksNotApplicable)
{
    InstanceSpec s;
    s.roots = {0.0, 1.0};
    s.gamma = std::vector<double>{0.25, 0.75};
    const VerificationReport r = verify_instance(s);
    EXPECT_TRUE(r.all_hold());
    const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                                 [](const CheckResult& c) { return c.id == "second-order-containment"; });
    ASSERT_NE(it, r.checks.end());
    EXPECT_TRUE(std::isinf(it->margin));
    EXPECT_EQ(it->detail, "n < 3");
}

TEST(Verify, SelectionAndUnknownIds)
{
    InstanceSpec s;
    s.roots = {0.0, 1.0, I};
    const auto r = verify_instance(s, parse_check_selection("trace-disc,hull-containment"));
    ASSERT_EQ(r.checks.size(), 2u);
    EXPECT_EQ(r.checks[0].id, "hull-containment");
    EXPECT_EQ(r.checks[1].id, "trace-disc");
    EXPECT_TRUE(parse_check_selection("all").empty());
    EXPECT_EQ(verify_instance(s, parse_check_selection("all")).checks.size(), check_ids().size());
    EXPECT_THROW(parse_check_selection("hull,containment"), ParseError);
}

TEST(Verify, EscapedZeroViolatesPrimitive)
{
    RootList<double> seg(2), zeros(1);
    seg << 0.0, I;
    zeros << cd(1.0 / (2 * std::sqrt(3.0)), 0.5);
    const CheckResult c = containment_check("x", convex_hull(seg), zeros, 1e-9);
    EXPECT_FALSE(c.holds);
    EXPECT_NEAR(c.margin, -1.0 / (2 * std::sqrt(3.0)), 1e-15);
}

TEST(SelfTest, EveryFabricatedViolationIsFlagged)
{
    const VerificationReport r = self_test_report();
    ASSERT_FALSE(r.checks.empty());
    for (const CheckResult& c : r.checks) {
        EXPECT_FALSE(c.holds) << c.id;
        EXPECT_LT(c.margin, -c.tolerance) << c.id;
    }
    EXPECT_FALSE(r.all_hold());
}

TEST(Report, RoundTripAndRecheck)
{
    InstanceSpec s;
    s.roots = {0.0, 1.0};
    VerificationReport r = verify_instance(s);
    r.seed = 5;
    const std::string text = to_json(r).dump(2);
    const VerificationReport back = report_from_json(Json::parse(text));
    EXPECT_EQ(to_json(back).dump(2), text);
    EXPECT_TRUE(recheck(back).all_hold());

    // A recorded pass whose margin says otherwise is caught.
    VerificationReport forged = back;
    forged.checks[0].margin = -1;
    EXPECT_TRUE(forged.checks[0].holds);
    EXPECT_FALSE(recheck(forged).all_hold());
    EXPECT_FALSE(to_json(r).dump().find("runtime") != std::string::npos);
    EXPECT_TRUE(to_json(r, true).dump().find("runtime") != std::string::npos);
}

TEST(Fuzz, DeterministicWithoutViolations)
{
    for (Family f : all_families) {
        const FuzzSummary a = run_fuzz(3, 60, f), b = run_fuzz(3, 60, f);
        EXPECT_EQ(a.violations(), 0u) << family_name(f);
        EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    }
    EXPECT_NE(to_json(run_fuzz(3, 20, std::nullopt)).dump(), to_json(run_fuzz(4, 20, std::nullopt)).dump());
}

TEST(Fuzz, ShrinkKeepsPassingInstance)
{
    InstanceSpec s;
    s.roots = {0.0, 1.0, I, cd(1, 1)};
    const InstanceSpec t = shrink_instance(s, {"hull-containment"});
    EXPECT_EQ(t.roots, s.roots);
}

TEST(Svg, WellFormedStructure)
{
    RootList<double> r(3), z(2);
    r << 0.0, 1.0, I;
    z << cd(0.5, 0.1), cd(0.1, 0.5);
    const std::string svg = render_svg(Scene{r, z, {Disc<double>{cd(1.0 / 3, 1.0 / 3), 0.5}}});
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_NE(svg.find("<polygon"), std::string::npos);
    EXPECT_EQ(std::count(svg.begin(), svg.end(), '<') - 1, std::count(svg.begin(), svg.end(), '>') - 1);
    EXPECT_EQ(svg, render_svg(Scene{r, z, {Disc<double>{cd(1.0 / 3, 1.0 / 3), 0.5}}}));
}

TEST(Commands, RootsText)
{
    CommandOptions opt = command("roots", "0,1");
    opt.gamma = "0.5,0.5";
    const Outcome r = run(opt);
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "0.5+0i  residual 0\n");
}

TEST(Commands, PairwiseEscapeReportsDistance)
{
    CommandOptions opt = command("roots");
    opt.instance_path = std::string(INCPOLY_TEST_DATA) + "/pairwise_escape.json";
    opt.pairwise = true;
    const Outcome r = run(opt);
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_NE(r.out.find("outside hull by 0.28867513459481"), std::string::npos) << r.out;
}

TEST(Commands, RecoverThenDecompose)
{
    CommandOptions rec = command("recover", "0,1,i,-1-0.5i");
    rec.point = "0.1+0.2i";
    const Outcome r = run(rec);
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const Json j = Json::parse(r.out);
    std::vector<double> gamma = j["gamma"].get<std::vector<double>>();

    InstanceSpec s;
    s.roots = parse_complex_list("0,1,i,-1-0.5i");
    s.gamma = gamma;
    const Polynomial<double> target = convex_combination(s.root_list(), s.weights());
    std::string coeffs;
    for (Index k = 0; k <= target.degree(); ++k)
        coeffs += (k ? "," : "") + format_complex(target[k]);
    CommandOptions dec = command("decompose", "0,1,i,-1-0.5i");
    dec.target = coeffs;
    const Outcome d = run(dec);
    ASSERT_EQ(d.code, exit_ok) << d.err;
    const Json k = Json::parse(d.out);
    EXPECT_TRUE(k["feasible"].get<bool>());
    for (std::size_t i = 0; i < gamma.size(); ++i)
        EXPECT_NEAR(k["gamma"][i].get<double>(), gamma[i], 1e-12);
}

TEST(Commands, RecoverOutsideHullExitsTwo)
{
    CommandOptions opt = command("recover", "0,1,i");
    opt.point = "2";
    const Outcome r = run(opt);
    EXPECT_EQ(r.code, exit_violation);
    EXPECT_NE(r.err.find("outside the hull by 1"), std::string::npos) << r.err;
}

TEST(Commands, DiscsOnTriangle)
{
    CommandOptions opt = command("discs", "0,1,i");
    const Outcome r = run(opt);
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const Json j = Json::parse(r.out);
    const Json& discs = j["gershgorin_union"]["discs"];
    ASSERT_EQ(discs.size(), 2u);
    EXPECT_NEAR(discs[0]["center"][1].get<double>(), 1.0 / 3, 1e-15);
    EXPECT_NEAR(discs[0]["radius"].get<double>(), 1.0 / 3, 1e-15);
    EXPECT_NEAR(discs[1]["center"][0].get<double>(), 2.0 / 3, 1e-15);
    EXPECT_NEAR(discs[1]["radius"].get<double>(), std::sqrt(2.0) / 3, 1e-15);
    EXPECT_TRUE(j["trace_disc"]["contains_all"].get<bool>());
}

TEST(Commands, ExitCodes)
{
    EXPECT_EQ(run(command("verify", "0,1,i")).code, exit_ok);
    CommandOptions self = command("verify");
    self.self_test = true;
    EXPECT_EQ(run(self).code, exit_violation);
    EXPECT_EQ(run(command("roots", "0,1,x")).code, exit_usage);
    EXPECT_EQ(run(command("roots")).code, exit_usage);
    CommandOptions badgamma = command("roots", "0,1");
    badgamma.gamma = "0.9,0.9";
    EXPECT_EQ(run(badgamma).code, exit_usage);
    EXPECT_EQ(run(command("counterexamples")).code, exit_ok);
    CommandOptions fuzz = command("fuzz");
    fuzz.trials = 30;
    fuzz.family = "all";
    const Outcome a = run(fuzz), b = run(fuzz);
    EXPECT_EQ(a.code, exit_ok);
    EXPECT_EQ(a.out, b.out);
    fuzz.family = "nope";
    EXPECT_EQ(run(fuzz).code, exit_usage);
}
