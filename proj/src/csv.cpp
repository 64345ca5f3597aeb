#include "scholimpact/csv.hpp"

#include <istream>
#include <ostream>

#include "scholimpact/errors.hpp"

namespace scholimpact::csv {

namespace {

bool needs_quoting(const std::string& f) {
    return f.find_first_of(",\"\r\n") != std::string::npos;
}

} // namespace

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.put(',');
        const std::string& f = fields[i];
        if (needs_quoting(f)) {
            out.put('"');
            for (char c : f) {
                if (c == '"') out.put('"');
                out.put(c);
            }
            out.put('"');
        } else {
            out << f;
        }
    }
    out.put('\n');
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw LoadError("csv: missing column '" + name + "'");
}

Table read(std::istream& in) {
    Table table;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;
    bool at_line_start = true;
    bool comment_line = false;
    std::string comment;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        row_started = true;
    };
    auto end_row = [&] {
        if (row_started || !field.empty() || !row.empty()) {
            end_field();
            if (table.header.empty()) {
                table.header = row;
            } else {
                table.rows.push_back(row);
            }
            row.clear();
            row_started = false;
        }
    };

    char c;
    while (in.get(c)) {
        if (comment_line) {
            if (c == '\n') {
                table.comments.push_back(comment);
                comment.clear();
                comment_line = false;
                at_line_start = true;
            } else if (c != '\r') {
                comment.push_back(c);
            }
            continue;
        }
        if (at_line_start && !in_quotes && c == '#' && table.header.empty() && !row_started) {
            comment_line = true;
            comment.clear();
            continue;
        }
        at_line_start = false;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            break;
        case ',':
            end_field();
            break;
        case '\r':
            break;
        case '\n':
            end_row();
            at_line_start = true;
            break;
        default:
            field.push_back(c);
        }
    }
    if (in_quotes) throw LoadError("csv: unterminated quoted field");
    if (comment_line) table.comments.push_back(comment);
    end_row();
    return table;
}

} // namespace scholimpact::csv
