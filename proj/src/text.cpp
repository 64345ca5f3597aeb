#include "scholimpact/text.hpp"

#include <cctype>
#include <cstdint>

namespace scholimpact {

namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_alpha(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char to_lower_ascii(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

char to_upper_ascii(unsigned char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c);
}

// Calls fn(token) for every maximal run of bytes not containing whitespace
// or '-'. Tokens are views into `s`.
template <typename Fn>
void for_each_name_token(std::string_view s, Fn fn) {
    std::size_t start = 0;
    auto is_sep = [](unsigned char c) {
        return c == '-' || std::isspace(c) != 0;
    };
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || is_sep(static_cast<unsigned char>(s[i]))) {
            if (i > start) fn(s.substr(start, i - start));
            start = i + 1;
        }
    }
}

} // namespace

std::string normalize_title(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char c : raw) {
        if (is_ascii_alnum(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(to_lower_ascii(c));
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::set<char> extract_initials(std::string_view first_names) {
    std::set<char> out;
    for_each_name_token(first_names, [&](std::string_view tok) {
        auto c = static_cast<unsigned char>(tok.front());
        if (is_ascii_alpha(c)) out.insert(to_upper_ascii(c));
    });
    return out;
}

std::string initials_sequence(std::string_view first_names) {
    std::string out;
    for_each_name_token(first_names, [&](std::string_view tok) {
        auto c = static_cast<unsigned char>(tok.front());
        if (is_ascii_alpha(c)) out.push_back(to_upper_ascii(c));
    });
    return out;
}

std::string last_name_key(std::string_view name) {
    std::string_view last;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= name.size(); ++i) {
        if (i == name.size() || std::isspace(static_cast<unsigned char>(name[i])) != 0) {
            if (i > start) last = name.substr(start, i - start);
            start = i + 1;
        }
    }
    return ascii_lower(last);
}

std::string normalize_degree(std::string_view degree) {
    std::string out;
    for (unsigned char c : degree) {
        if (is_ascii_alnum(c)) out.push_back(to_lower_ascii(c));
    }
    return out;
}

std::string ascii_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) out.push_back(to_lower_ascii(c));
    return out;
}

bool domain_matches(std::string_view domain, std::string_view site) {
    if (site.empty() || domain.size() < site.size()) return false;
    if (ascii_lower(domain.substr(domain.size() - site.size())) != ascii_lower(site)) return false;
    if (domain.size() == site.size()) return true;
    return domain[domain.size() - site.size() - 1] == '.';
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace scholimpact
