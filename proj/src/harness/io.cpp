#include "incpoly/harness/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace incpoly::harness {

namespace {

    std::string_view trim(std::string_view s)
    {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    double parse_double(std::string_view s, std::string_view whole)
    {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        double x = 0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(x))
            throw ParseError("cannot parse number '" + std::string(whole) + "'");
        return x;
    }

    std::vector<std::string_view> split(std::string_view csv)
    {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = csv.find(',', start);
            parts.push_back(trim(csv.substr(start, comma - start)));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return parts;
    }

} // namespace

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (x == 0)
        x = 0;
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string format_complex(std::complex<double> z)
{
    const double im = z.imag() == 0 ? 0.0 : z.imag();
    std::string s = format_number(z.real());
    if (!(im < 0) && !std::isnan(im))
        s += '+';
    return s + format_number(im) + 'i';
}

std::complex<double> parse_complex(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty())
        throw ParseError("empty complex number");
    if (s.back() != 'i')
        return {parse_double(s, text), 0.0};
    const std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    const std::string_view re = split_at == std::string_view::npos ? std::string_view() : body.substr(0, split_at);
    std::string_view im = split_at == std::string_view::npos ? body : body.substr(split_at);
    double imag = 1;
    if (im == "-")
        imag = -1;
    else if (!im.empty() && im != "+")
        imag = parse_double(im, text);
    return {re.empty() ? 0.0 : parse_double(re, text), imag};
}

std::vector<double> parse_real_list(std::string_view csv)
{
    std::vector<double> out;
    for (std::string_view p : split(csv))
        out.push_back(parse_double(p, p));
    return out;
}

std::vector<std::complex<double>> parse_complex_list(std::string_view csv)
{
    std::vector<std::complex<double>> out;
    for (std::string_view p : split(csv))
        out.push_back(parse_complex(p));
    return out;
}

Json number_json(double x)
{
    if (std::isfinite(x))
        return x == 0 ? Json(0.0) : Json(x);
    return format_number(x);
}

double number_from_json(const Json& j, const std::string& what)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        if (s == "nan")
            return std::numeric_limits<double>::quiet_NaN();
    }
    throw ParseError(what + ": expected a number");
}

Json complex_json(std::complex<double> z)
{
    return Json::array({number_json(z.real()), number_json(z.imag())});
}

std::complex<double> complex_from_json(const Json& j, const std::string& what)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(what + ": expected [re, im]");
    const std::complex<double> z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ParseError(what + ": non-finite value");
    return z;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error("cannot write '" + path + "'");
}

} // namespace incpoly::harness
