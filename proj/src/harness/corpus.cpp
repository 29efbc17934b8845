#include "incpoly/harness/corpus.hpp"

#include <cmath>
#include <numbers>

#include "incpoly/harness/rng.hpp"
#include "incpoly/harness/io.hpp"

namespace incpoly::harness {

namespace {

    constexpr double disc_radius = 2.0;
    constexpr double cluster_spread = 0.05;

    std::complex<double> disc_point(Rng& rng, double radius)
    {
        const double r = std::sqrt(rng.uniform()) * radius;
        return std::polar(r, 2 * std::numbers::pi * rng.uniform());
    }

    template <class T>
    void shuffle(Rng& rng, std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[rng.below(i)]);
    }

    std::vector<double> random_weights(Rng& rng, std::size_t n)
    {
        std::vector<double> w(n);
        double sum = 0;
        for (double& x : w) {
            x = -std::log1p(-rng.uniform());
            sum += x;
        }
        for (double& x : w)
            x /= sum;
        return w;
    }

    std::vector<double> boundary_weights(Rng& rng, std::size_t n)
    {
        std::vector<double> w(n, 0.0);
        switch (rng.below(3)) {
        case 0:
            w[rng.below(n)] = 1.0;
            break;
        case 1: {
            const std::size_t a = rng.below(n);
            const std::size_t b = (a + 1 + rng.below(n - 1)) % n;
            w[a] = 0.5;
            w[b] = 0.5;
            break;
        }
        default: {
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i)
                idx[i] = i;
            shuffle(rng, idx);
            const std::size_t keep = 1 + rng.below(n - 1);
            const std::vector<double> part = random_weights(rng, keep);
            for (std::size_t i = 0; i < keep; ++i)
                w[idx[i]] = part[i];
        }
        }
        return w;
    }

} // namespace

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::uniform_disc:
        return "uniform-disc";
    case Family::real_rooted:
        return "real-rooted";
    case Family::clustered:
        return "clustered";
    case Family::repeated_roots:
        return "repeated-roots";
    case Family::boundary_gamma:
        return "boundary-gamma";
    }
    return "";
}

Family parse_family(std::string_view name)
{
    for (Family f : all_families)
        if (family_name(f) == name)
            return f;
    throw ParseError("unknown family '" + std::string(name) + "'");
}

std::string_view gamma_family_name(GammaFamily g)
{
    switch (g) {
    case GammaFamily::uniform:
        return "uniform";
    case GammaFamily::random:
        return "random";
    case GammaFamily::boundary:
        return "boundary";
    }
    return "";
}

GammaFamily gamma_family_for(Family f, std::uint64_t trial)
{
    if (f == Family::boundary_gamma)
        return GammaFamily::boundary;
    if (f == Family::repeated_roots)
        return trial % 2 == 0 ? GammaFamily::uniform : GammaFamily::random;
    static constexpr std::array<GammaFamily, 3> cycle{GammaFamily::uniform, GammaFamily::random, GammaFamily::boundary};
    return cycle[trial % 3];
}

InstanceSpec generate_instance(Family f, GammaFamily g, std::uint64_t seed, Index min_n, Index max_n)
{
    if (min_n < 2 || max_n < min_n)
        throw InvalidArgument("generate_instance: need 2 <= min_n <= max_n");
    Rng rng(seed);
    const std::size_t n = static_cast<std::size_t>(rng.between(min_n, max_n));
    InstanceSpec s;
    s.seed = seed;

    switch (f) {
    case Family::uniform_disc:
    case Family::boundary_gamma:
        for (std::size_t i = 0; i < n; ++i)
            s.roots.push_back(disc_point(rng, disc_radius));
        break;
    case Family::real_rooted:
        for (std::size_t i = 0; i < n; ++i)
            s.roots.emplace_back(rng.uniform(-disc_radius, disc_radius), 0.0);
        break;
    case Family::clustered: {
        const std::size_t k = 1 + rng.below(std::min<std::size_t>(3, n));
        std::vector<std::complex<double>> centers;
        for (std::size_t c = 0; c < k; ++c)
            centers.push_back(disc_point(rng, disc_radius));
        for (std::size_t i = 0; i < n; ++i)
            s.roots.push_back(centers[rng.below(k)] + disc_point(rng, cluster_spread));
        break;
    }
    case Family::repeated_roots: {
        for (std::size_t i = 0; i < n / 2; ++i) {
            const auto z = disc_point(rng, disc_radius);
            s.roots.push_back(z);
            s.roots.push_back(z);
        }
        if (n % 2 == 1)
            s.roots.push_back(disc_point(rng, disc_radius));
        shuffle(rng, s.roots);
        if (g == GammaFamily::boundary)
            g = GammaFamily::random;
        break;
    }
    }

    if (f == Family::boundary_gamma)
        g = GammaFamily::boundary;
    if (g == GammaFamily::random)
        s.gamma = random_weights(rng, n);
    else if (g == GammaFamily::boundary)
        s.gamma = boundary_weights(rng, n);
    s.label = std::string(family_name(f)) + "/" + std::string(gamma_family_name(g));
    return s;
}

std::vector<InstanceSpec> seeded_corpus(std::uint64_t seed, std::size_t count)
{
    std::vector<InstanceSpec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Family f = all_families[i % all_families.size()];
        const GammaFamily g = gamma_family_for(f, i / all_families.size());
        out.push_back(generate_instance(f, g, derive_seed(seed, i)));
    }
    return out;
}

} // namespace incpoly::harness
