#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace scholimpact::csv {

// RFC 4180 style: fields are quoted when they contain commas, quotes or
// newlines; embedded quotes are doubled. Quoted fields may span lines.

void write_row(std::ostream& out, const std::vector<std::string>& fields);

struct Table {
    // Leading lines starting with '#' (artifact metadata) kept verbatim.
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by header name; throws LoadError when absent.
    std::size_t column(const std::string& name) const;
};

// Parses the whole stream. First non-comment row is the header.
Table read(std::istream& in);

} // namespace scholimpact::csv
