#pragma once

#include <set>
#include <string>
#include <string_view>

namespace scholimpact {

// Canonical title form used for match keys, dedup keys and title-phrase
// matching: ASCII-lowercased, every non-alphanumeric byte becomes a space,
// whitespace runs collapsed, ends trimmed. Idempotent. Multi-byte characters
// therefore fold out entirely ("sub-saharan" -> "sub saharan").
std::string normalize_title(std::string_view raw);

// First-name initials as the search engine sees them: the uppercased first
// letter of every whitespace- or hyphen-separated given-name token. Tokens
// opening with a non-ASCII letter are dropped outright, mirroring the
// engine's habit of ignoring accent-marked letters rather than folding them.
std::set<char> extract_initials(std::string_view first_names);

// Same token walk as extract_initials but preserving order and repeats,
// e.g. "Muhammad Zahid Ali" -> "MZA". Used to synthesize result-page author
// strings such as "MZA Durrani".
std::string initials_sequence(std::string_view first_names);

// Lowercased final whitespace token of a name. Applied identically to
// catalog last names and result-page author strings so both sides of a
// match key agree ("JZ Fuller" -> "fuller", "Van Der Berg" -> "berg").
std::string last_name_key(std::string_view name);

// Degree codes compared blind to case and punctuation: "M.S." == "ms".
std::string normalize_degree(std::string_view degree);

std::string ascii_lower(std::string_view s);

// True when `domain` equals `site` or is a subdomain of it
// (label-boundary suffix match, so "notproquest.com" never matches
// "proquest.com").
bool domain_matches(std::string_view domain, std::string_view site);

// FNV-1a 64-bit, rendered as 16 hex digits. Stable across platforms; used
// to key replay files, fixture-store entries and configuration hashes.
std::string fnv1a_hex(std::string_view data);

} // namespace scholimpact
