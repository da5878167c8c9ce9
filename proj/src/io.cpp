#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "megha/io.hpp"

namespace megha {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(Err::ParseError, "malformed JSON");
    return j;
}

std::vector<std::string> parse_names(const json& j, const char* key, const char* prefix) {
    if (!j.contains(key)) raise(Err::ParseError, std::string("missing key '") + key + "'");
    const json& v = j.at(key);
    std::vector<std::string> names;
    if (v.is_number_integer()) {
        long long cnt = v.get<long long>();
        if (cnt < 0) raise(Err::ParseError, std::string(key) + " count is negative");
        for (long long i = 1; i <= cnt; ++i) names.push_back(prefix + std::to_string(i));
    } else if (v.is_array()) {
        for (const json& e : v) {
            if (!e.is_string()) raise(Err::ParseError, std::string(key) + " entries must be strings");
            names.push_back(e.get<std::string>());
        }
    } else {
        raise(Err::ParseError, std::string(key) + " must be a count or an array of names");
    }
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t k = i + 1; k < names.size(); ++k)
            if (names[i] == names[k])
                raise(Err::ParseError, std::string("duplicate ") + key + " name '" + names[i] + "'");
    return names;
}

Rat parse_value(const json& e) {
    if (e.is_number_integer()) return Rat::from_int(e.get<long long>());
    if (e.is_string()) return Rat::parse(e.get<std::string>());
    raise(Err::ParseError, "valuations must be integers or 'p/q' strings");
}

json value_json(const Rat& r) {
    if (r.den == 1) return json(r.num);
    return json(std::to_string(r.num) + "/" + std::to_string(r.den));
}

// reduced total/scale as "p" or "p/q"; the numerator may exceed 64 bits
std::string exact_rational(envy_t scaled, long long scale) {
    envy_t g = scaled < 0 ? -scaled : scaled;
    envy_t s = scale;
    while (s) {
        envy_t t = g % s;
        g = s;
        s = t;
    }
    if (g == 0) g = 1;
    envy_t num = scaled / g;
    long long den = (long long)(scale / g);
    std::string out = envy_str(num);
    if (den != 1) out += "/" + std::to_string(den);
    return out;
}

} // namespace

InstanceDocument parse_instance_document(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) raise(Err::ParseError, "instance document must be a JSON object");
    InstanceDocument doc;
    doc.agent_names = parse_names(j, "agents", "a");
    doc.house_names = parse_names(j, "houses", "h");
    doc.raw.agents = (int)doc.agent_names.size();
    doc.raw.houses = (int)doc.house_names.size();

    if (!j.contains("edges") || !j.at("edges").is_array())
        raise(Err::ParseError, "missing or non-array 'edges'");
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            raise(Err::ParseError, "each edge must be a pair of agent indices");
        doc.raw.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    if (!j.contains("valuations") || !j.at("valuations").is_array())
        raise(Err::ParseError, "missing or non-array 'valuations'");
    for (const json& row : j.at("valuations")) {
        if (!row.is_array()) raise(Err::ParseError, "each valuation row must be an array");
        std::vector<Rat> r;
        for (const json& e : row) r.push_back(parse_value(e));
        doc.raw.vals.push_back(std::move(r));
    }

    if (j.contains("metadata")) doc.metadata_json = j.at("metadata").dump();
    return doc;
}

std::string format_instance_document(const InstanceDocument& doc, bool pretty) {
    json j;
    j["agents"] = doc.agent_names;
    j["houses"] = doc.house_names;
    json edges = json::array();
    for (auto [u, v] : doc.raw.edges) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    json vals = json::array();
    for (const auto& row : doc.raw.vals) {
        json r = json::array();
        for (const Rat& x : row) r.push_back(value_json(x));
        vals.push_back(std::move(r));
    }
    j["valuations"] = std::move(vals);
    if (!doc.metadata_json.empty()) j["metadata"] = parse_json(doc.metadata_json);
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

InstanceDocument document_of(const Instance& inst) {
    InstanceDocument doc;
    doc.raw.agents = inst.n;
    doc.raw.houses = inst.n;
    doc.raw.edges = inst.edges;
    doc.raw.vals.resize(inst.n);
    for (int a = 0; a < inst.n; ++a) {
        doc.raw.vals[a].reserve(inst.n);
        for (int h = 0; h < inst.n; ++h) doc.raw.vals[a].push_back(Rat(inst.value(a, h), inst.scale));
        doc.agent_names.push_back("a" + std::to_string(a + 1));
    }
    for (int h = 0; h < inst.n; ++h) doc.house_names.push_back("h" + std::to_string(h + 1));
    return doc;
}

std::string format_result_document(const InstanceDocument& doc, const Instance& inst,
                                   const SolveResult& res, bool pretty) {
    json j;
    j["solver"] = res.solver_name;
    j["optimal"] = res.optimal;
    j["envy"] = {{"scaled", envy_str(res.allocation.total)},
                 {"value", exact_rational(res.allocation.total, inst.scale)}};
    json assign = json::object();
    for (int a = 0; a < inst.n; ++a)
        assign[doc.agent_names[a]] = doc.house_names[res.allocation.assignment[a]];
    j["assignment"] = std::move(assign);
    json per_edge = json::array();
    for (envy_t e : res.allocation.per_edge) per_edge.push_back(envy_str(e));
    j["per_edge"] = std::move(per_edge);
    json stats = json::object();
    for (const auto& [k, v] : res.stats) stats[k] = v;
    j["stats"] = std::move(stats);
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

std::vector<int> parse_assignment_document(const std::string& text, const InstanceDocument& doc) {
    json j = parse_json(text);
    if (!j.is_object()) raise(Err::ParseError, "allocation document must be a JSON object");
    const json& a = j.contains("assignment") ? j.at("assignment") : j;
    if (!a.is_object()) raise(Err::ParseError, "'assignment' must be an object");
    std::vector<int> out;
    for (size_t i = 0; i < doc.agent_names.size(); ++i) {
        if (!a.contains(doc.agent_names[i])) {
            out.push_back(-1); // unassigned; verify_allocation rejects it
            continue;
        }
        const json& hv = a.at(doc.agent_names[i]);
        if (!hv.is_string()) raise(Err::ParseError, "assignment values must be house names");
        std::string name = hv.get<std::string>();
        auto it = std::find(doc.house_names.begin(), doc.house_names.end(), name);
        if (it == doc.house_names.end())
            raise(Err::ParseError, "unknown house name '" + name + "'");
        out.push_back((int)(it - doc.house_names.begin()));
    }
    return out;
}

std::string format_error_document(const Error& e) {
    json j;
    j["error"] = err_name(e.code);
    j["message"] = e.what();
    return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) raise(Err::IoError, "cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) raise(Err::IoError, "failed reading '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(Err::IoError, "cannot open '" + path + "' for writing");
    f << content;
    if (!f) raise(Err::IoError, "failed writing '" + path + "'");
}

} // namespace megha
