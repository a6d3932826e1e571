// Runs the ordcalc binary on the golden script in text and JSON modes. Text must match
// byte for byte; every JSON line must match and validate against the published schema.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "common.hpp"

namespace acceptance {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// stdout of a shell command, and its exit status.
std::pair<std::string, int> capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {"", -1};
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    return {out, pclose(p)};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

bool has_type(const json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "string") return v.is_string();
    if (type == "array") return v.is_array();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "boolean") return v.is_boolean();
    return type == "null" && v.is_null();
}

/// The subset of JSON Schema the published schema uses: type, enum, required, properties,
/// additionalProperties. Returns the first violation.
std::string violation(const json& schema, const json& v, const std::string& at = "$") {
    if (schema.contains("type") && !has_type(v, schema["type"])) return at + ": expected " + schema["type"].get<std::string>();
    if (schema.contains("enum")) {
        bool listed = false;
        for (const auto& e : schema["enum"]) listed = listed || e == v;
        if (!listed) return at + ": " + v.dump() + " not in enum";
    }
    if (!v.is_object()) return "";
    for (const auto& r : schema.value("required", json::array()))
        if (!v.contains(r.get<std::string>())) return at + ": missing " + r.get<std::string>();
    const json props = schema.value("properties", json::object());
    for (const auto& [k, sub] : v.items()) {
        if (props.contains(k)) {
            if (auto bad = violation(props[k], sub, at + "." + k); !bad.empty()) return bad;
        } else if (schema.value("additionalProperties", true) == false) {
            return at + ": unexpected key " + k;
        }
    }
    return "";
}

}  // namespace

Result criterion_12() {
    Tally t;
    const std::string bin = ORDCALC_BIN, golden = GOLDEN_DIR;
    const std::string script = golden + "/commands.txt";
    std::size_t commands = 0;
    for (const auto& l : lines(slurp(script)))
        if (!l.empty() && l[0] != '#') ++commands;
    t.check(commands == 30, [&] { return "golden script has " + std::to_string(commands) + " commands"; });

    auto [text, text_status] = capture("'" + bin + "' -f '" + script + "'");
    t.check(text_status == 0, [&] { return "text run exit status " + std::to_string(text_status); });
    const std::string expected_text = slurp(golden + "/expected.txt");
    t.check(text == expected_text, [&] {
        auto got = lines(text), want = lines(expected_text);
        for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
            std::string g = i < got.size() ? got[i] : "<eof>", w = i < want.size() ? want[i] : "<eof>";
            if (g != w) return "text line " + std::to_string(i + 1) + ": got '" + g + "', want '" + w + "'";
        }
        return std::string("text differs in line endings");
    });

    auto [js, json_status] = capture("'" + bin + "' --json -f '" + script + "'");
    t.check(json_status == 0, [&] { return "json run exit status " + std::to_string(json_status); });
    const std::string expected_json = slurp(golden + "/expected.jsonl");
    t.check(js == expected_json, [&] { return std::string("json output differs from expected.jsonl"); });
    const json schema = json::parse(slurp(SCHEMA_PATH));
    auto got = lines(js);
    t.check(got.size() == commands, [&] { return "json lines: " + std::to_string(got.size()); });
    for (std::size_t i = 0; i < got.size(); ++i) {
        json v = json::parse(got[i], nullptr, false);
        t.check(!v.is_discarded(), [&] { return "json line " + std::to_string(i + 1) + " does not parse"; });
        if (v.is_discarded()) continue;
        std::string bad = violation(schema, v);
        t.check(bad.empty(), [&] { return "json line " + std::to_string(i + 1) + ": " + bad; });
    }
    return t.result("checks on " + std::to_string(commands) + " commands");
}

}  // namespace acceptance
