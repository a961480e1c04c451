#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rotting::csv {

inline constexpr int kSchemaVersion = 1;

// Shortest form is not used: 17 significant digits always round-trip a double.
std::string format_double(double v);

// Shortest text that parses back to v; used for labels and file names.
std::string format_shortest(double v);

// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted and
// embedded quotes doubled.
std::string quote(std::string_view field);

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void comment(std::string_view line);
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

}  // namespace rotting::csv
