#include "incpoly/harness/instance.hpp"

#include <set>

namespace incpoly::harness {

RootList<double> InstanceSpec::root_list() const
{
    RootList<double> r(size());
    for (Index i = 0; i < size(); ++i)
        r[i] = roots[static_cast<std::size_t>(i)];
    return r;
}

Weights<double> InstanceSpec::weights() const
{
    if (!gamma)
        return Weights<double>::uniform(size());
    if (static_cast<Index>(gamma->size()) != size())
        throw ParseError("gamma has " + std::to_string(gamma->size()) + " entries for " + std::to_string(size()) + " roots");
    return Weights<double>(Eigen::Map<const RealVector<double>>(gamma->data(), size()));
}

Index InstanceSpec::pivot_or_last() const { return pivot.value_or(size() - 1); }

Polynomial<double> InstanceSpec::target_polynomial() const
{
    if (!target || target->empty())
        throw ParseError("no decomposition target given");
    ComplexVector<double> c(static_cast<Index>(target->size()));
    for (std::size_t k = 0; k < target->size(); ++k)
        c[static_cast<Index>(k)] = (*target)[k];
    return Polynomial<double>(c);
}

InstanceSpec instance_from_json(const Json& j)
{
    static const std::set<std::string> known{"label", "seed", "roots", "gamma", "pivot", "pairs", "target", "point"};
    if (!j.is_object())
        throw ParseError("instance: expected a JSON object");
    for (const auto& item : j.items())
        if (!known.count(item.key()))
            throw ParseError("instance: unknown field '" + item.key() + "'");

    InstanceSpec s;
    if (!j.contains("roots") || !j["roots"].is_array() || j["roots"].empty())
        throw ParseError("instance: 'roots' must be a nonempty array");
    for (std::size_t i = 0; i < j["roots"].size(); ++i)
        s.roots.push_back(complex_from_json(j["roots"][i], "roots[" + std::to_string(i) + "]"));
    const Index n = s.size();

    if (j.contains("label")) {
        if (!j["label"].is_string())
            throw ParseError("instance: 'label' must be a string");
        s.label = j["label"].get<std::string>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw ParseError("instance: 'seed' must be an unsigned integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("gamma")) {
        const Json& g = j["gamma"];
        if (!g.is_array())
            throw ParseError("instance: 'gamma' must be an array");
        if (static_cast<Index>(g.size()) != n)
            throw ParseError("instance: gamma length " + std::to_string(g.size()) + " does not match " + std::to_string(n) + " roots");
        std::vector<double> v;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i].is_number())
                throw ParseError("instance: gamma[" + std::to_string(i) + "] is not a number");
            v.push_back(g[i].get<double>());
        }
        s.gamma = std::move(v);
        try {
            s.weights();
        } catch (const InvalidArgument& e) {
            throw ParseError(std::string("instance: ") + e.what());
        }
    }
    if (j.contains("pivot")) {
        if (!j["pivot"].is_number_integer())
            throw ParseError("instance: 'pivot' must be an integer");
        const long p = j["pivot"].get<long>();
        if (p < 1 || p > n)
            throw ParseError("instance: pivot " + std::to_string(p) + " outside 1.." + std::to_string(n));
        s.pivot = static_cast<Index>(p - 1);
    }
    if (j.contains("pairs")) {
        if (!j["pairs"].is_array())
            throw ParseError("instance: 'pairs' must be an array");
        for (const Json& p : j["pairs"]) {
            if (!p.is_array() || p.size() != 3 || !p[0].is_number_integer() || !p[1].is_number_integer() || !p[2].is_number())
                throw ParseError("instance: each pair must be [i, j, weight]");
            const long a = p[0].get<long>(), b = p[1].get<long>();
            if (a < 1 || a > n || b < 1 || b > n || a == b)
                throw ParseError("instance: pair indices must be distinct and within 1.." + std::to_string(n));
            s.pairs.push_back({static_cast<Index>(a - 1), static_cast<Index>(b - 1), p[2].get<double>()});
        }
    }
    if (j.contains("target")) {
        if (!j["target"].is_array() || j["target"].empty())
            throw ParseError("instance: 'target' must be a nonempty array");
        std::vector<std::complex<double>> t;
        for (std::size_t i = 0; i < j["target"].size(); ++i)
            t.push_back(complex_from_json(j["target"][i], "target[" + std::to_string(i) + "]"));
        s.target = std::move(t);
    }
    if (j.contains("point"))
        s.point = complex_from_json(j["point"], "point");
    return s;
}

Json to_json(const InstanceSpec& s)
{
    Json j = Json::object();
    if (!s.label.empty())
        j["label"] = s.label;
    if (s.seed)
        j["seed"] = *s.seed;
    Json roots = Json::array();
    for (const auto& z : s.roots)
        roots.push_back(complex_json(z));
    j["roots"] = std::move(roots);
    if (s.gamma) {
        Json g = Json::array();
        for (double x : *s.gamma)
            g.push_back(number_json(x));
        j["gamma"] = std::move(g);
    }
    if (s.pivot)
        j["pivot"] = *s.pivot + 1;
    if (!s.pairs.empty()) {
        Json p = Json::array();
        for (const PairWeight& w : s.pairs)
            p.push_back(Json::array({w.i + 1, w.j + 1, number_json(w.weight)}));
        j["pairs"] = std::move(p);
    }
    if (s.target) {
        Json t = Json::array();
        for (const auto& c : *s.target)
            t.push_back(complex_json(c));
        j["target"] = std::move(t);
    }
    if (s.point)
        j["point"] = complex_json(*s.point);
    return j;
}

InstanceSpec read_instance(const std::string& path)
{
    const std::string text = read_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return instance_from_json(j);
}

} // namespace incpoly::harness
