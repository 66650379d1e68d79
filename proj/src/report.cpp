#include "ocnet/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace ocnet {

void Report::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : fields)
        if (k == key) {
            v = value;
            return;
        }
    fields.emplace_back(key, value);
}

void Report::set(const std::string& key, std::uint64_t value) {
    set(key, std::to_string(value));
}

void Report::set(const std::string& key, std::int64_t value) {
    set(key, std::to_string(value));
}

void Report::set(const std::string& key, int value) {
    set(key, std::to_string(value));
}

void Report::set(const std::string& key, bool value) {
    set(key, std::string(value ? "true" : "false"));
}

const std::string* Report::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

std::string Report::text() const {
    std::ostringstream out;
    for (const auto& [k, v] : fields) out << k << ": " << v << "\n";
    return out.str();
}

std::string Report::json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    return j.dump(2) + "\n";
}

std::string input_digest(const std::string& content) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string format_word(const std::vector<std::string>& word) {
    if (word.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += word[i];
    }
    return out;
}

}  // namespace ocnet
