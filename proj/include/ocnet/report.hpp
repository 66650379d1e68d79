#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ocnet {

/// Flat, ordered key/value result record. The same record renders as
/// "key: value" lines or as a JSON object with insertion order kept, so
/// scripted consumers see identical field sets either way.
struct Report {
    std::vector<std::pair<std::string, std::string>> fields;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, std::uint64_t value);
    void set(const std::string& key, std::int64_t value);
    void set(const std::string& key, int value);
    void set(const std::string& key, bool value);

    const std::string* find(const std::string& key) const;

    std::string text() const;
    std::string json() const;
};

/// Stable content fingerprint for input files (FNV-1a, hex).
std::string input_digest(const std::string& content);

/// Space-joined action word, "(empty)" for the empty word.
std::string format_word(const std::vector<std::string>& word);

}  // namespace ocnet
