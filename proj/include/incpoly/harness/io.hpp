#ifndef INCPOLY_HARNESS_IO_HPP
#define INCPOLY_HARNESS_IO_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "incpoly/error.hpp"

namespace incpoly::harness {

using Json = nlohmann::ordered_json;

class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Shortest decimal text that reads back to the same double.
std::string format_number(double x);
// "re+imi" with shortest round-trip parts; negative zero prints as zero.
std::string format_complex(std::complex<double> z);

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with any finite decimals.
std::complex<double> parse_complex(std::string_view text);
std::vector<double> parse_real_list(std::string_view csv);
std::vector<std::complex<double>> parse_complex_list(std::string_view csv);

// Finite numbers as JSON numbers; infinities and NaN as the strings
// "inf", "-inf", "nan".
Json number_json(double x);
double number_from_json(const Json& j, const std::string& what);

Json complex_json(std::complex<double> z);
// [re, im] or a bare real number.
std::complex<double> complex_from_json(const Json& j, const std::string& what);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_IO_HPP
