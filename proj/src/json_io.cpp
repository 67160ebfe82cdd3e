#include "uacat/json_io.hpp"

#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

namespace uacat {

using nlohmann::json;

namespace {

// parses the DFS serialization produced by MunnTree::canonical back into a
// representative signed word
struct MunnStringParser {
    std::string_view text;
    std::size_t pos = 0;
    std::vector<int> word;
    bool end_found = false;
    std::vector<int> path;  // signed letters from start to current node

    [[noreturn]] void fail(const std::string& msg) {
        throw error("munn string: " + msg + " at position " + std::to_string(pos));
    }

    void node() {
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (end_found) fail("duplicate end marker");
            end_found = true;
            path = word_to_path();
        }
        while (pos < text.size() && text[pos] == '[') {
            ++pos;
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) fail("expected sign");
            int sign = text[pos] == '+' ? 1 : -1;
            ++pos;
            std::size_t begin = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == begin) fail("expected label");
            int label = std::stoi(std::string(text.substr(begin, pos - begin)));
            word.push_back(sign * label);
            node();
            if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
            ++pos;
            word.push_back(-sign * label);
        }
    }

    std::vector<int> word_to_path() {
        // the current down-stack: letters not yet cancelled in `word`
        std::vector<int> stack;
        for (int letter : word) {
            if (!stack.empty() && stack.back() == -letter)
                stack.pop_back();
            else
                stack.push_back(letter);
        }
        return stack;
    }

    std::vector<int> parse() {
        node();
        if (pos != text.size()) fail("trailing input");
        if (!end_found) fail("missing end marker");
        std::vector<int> rep = word;
        rep.insert(rep.end(), path.begin(), path.end());
        if (rep.empty()) fail("empty element");
        return rep;
    }
};

}  // namespace

NormalForm element_from_string(const std::string& text, const Variety& v) {
    if (!text.empty() && (text[0] == '(' || text[0] == 'x'))
        return normalize(parse_term(text, v.signature()), v);
    switch (v.tag()) {
        case VarietyTag::magma:
            throw error("magma element must be a term: " + text);
        case VarietyTag::semigroup:
        case VarietyTag::monoid: {
            Word w;
            std::size_t i = 0;
            while (i < text.size()) {
                std::size_t j = text.find(',', i);
                if (j == std::string::npos) j = text.size();
                w.push_back(std::stoi(text.substr(i, j - i)));
                i = j + 1;
            }
            if (w.empty() && v.tag() == VarietyTag::semigroup)
                throw error("empty semigroup word");
            return NormalForm(v.tag(), std::move(w));
        }
        case VarietyTag::inverse_semigroup: {
            MunnStringParser p{text};
            return NormalForm(v.tag(), munn_of_word(p.parse()));
        }
    }
    throw error("bad variety tag");
}

json morphism_to_json(const Morphism& m) {
    json images = json::array();
    for (const auto& img : m.images) images.push_back(img.key());
    return json{{"domain_rank", m.dom.rank},
                {"codomain_rank", m.cod.rank},
                {"images", images}};
}

Morphism morphism_from_json(const json& j, const Variety& v) {
    FreeObject dom(v, j.at("domain_rank").get<int>());
    FreeObject cod(v, j.at("codomain_rank").get<int>());
    std::vector<NormalForm> images;
    for (const auto& s : j.at("images"))
        images.push_back(element_from_string(s.get<std::string>(), v));
    if (static_cast<int>(images.size()) != dom.rank)
        throw error("morphism json: wrong image count");
    return Morphism{dom, cod, std::move(images)};
}

json spec_to_json(const AutomorphismSpec& spec, const Variety& v) {
    json j;
    switch (spec.kind) {
        case SpecKind::identity: j["kind"] = "identity"; break;
        case SpecKind::mirror: j["kind"] = "mirror"; break;
        case SpecKind::table: j["kind"] = "table"; break;
    }
    j["variety"] = to_string(v.tag());
    if (!spec.object_action.empty()) {
        json oa = json::object();
        for (const auto& [from, to] : spec.object_action) oa[from] = to.rank;
        j["object_action"] = oa;
    }
    if (spec.kind == SpecKind::table) {
        json table = json::array();
        for (const auto& [key, entry] : spec.table) {
            (void)key;
            table.push_back(json::array({morphism_to_json(entry.first),
                                         morphism_to_json(entry.second)}));
        }
        j["table"] = table;
    }
    return j;
}

AutomorphismSpec spec_from_json(const json& j, Variety& v_out) {
    v_out = Variety::from_tag(variety_tag_from_string(j.at("variety").get<std::string>()));
    AutomorphismSpec spec;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity")
        spec.kind = SpecKind::identity;
    else if (kind == "mirror")
        spec.kind = SpecKind::mirror;
    else if (kind == "table")
        spec.kind = SpecKind::table;
    else
        throw error("unknown spec kind '" + kind + "'");
    if (j.contains("object_action")) {
        for (const auto& [from, rank] : j.at("object_action").items())
            spec.object_action.emplace(from, FreeObject(v_out, rank.get<int>()));
    }
    if (j.contains("table")) {
        for (const auto& entry : j.at("table")) {
            Morphism from = morphism_from_json(entry.at(0), v_out);
            Morphism to = morphism_from_json(entry.at(1), v_out);
            std::string key = from.key();
            spec.table.emplace(std::move(key), std::make_pair(std::move(from), std::move(to)));
        }
    }
    return spec;
}

AutomorphismSpec load_spec_file(const std::string& path, Variety& v_out) {
    std::ifstream in(path);
    if (!in) throw error("cannot open spec file " + path);
    json j;
    in >> j;
    return spec_from_json(j, v_out);
}

json report_to_json(const Report& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}};
        switch (c.status) {
            case CheckResult::Status::pass: entry["status"] = "pass"; break;
            case CheckResult::Status::fail: entry["status"] = "fail"; break;
            case CheckResult::Status::gap: entry["status"] = "gap"; break;
        }
        if (!c.detail.empty()) entry["counterexample"] = c.detail;
        checks.push_back(entry);
    }
    return json{{"checks", checks},
                {"all_passed", report.all_passed()},
                {"has_gap", report.has_gap()}};
}

}  // namespace uacat
