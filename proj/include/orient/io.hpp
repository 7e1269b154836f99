#pragma once

// The instance file format. A JSON document
//
//   {
//     "version": 1,
//     "vertices": ["a", "b", ...],
//     "edges": [["a", "b", 2], ...],          undirected pairs with multiplicity
//     "arcs": [["a", "b", 1], ...],           an orientation: from, to, count
//     "pairing_arcs": [...],                  orientation of a pairing (witnesses)
//     "requirements": [["x", "a", 3], ...],   LACO table: from, to, bound
//     "bounds": [["a", 1, 0], ...],           BWBO: vertex, l+, l-
//     "threshold": 4,                         MAXCUT / AMAXCUT k
//     "set": ["a", "b"],                      a vertex subset
//     "provenance": {...},                    reduction constants
//     "witness": {...}                        certificate details
//   }
//
// Every member but "version" and "vertices" is optional. Writers emit members
// in the order above, one record per line, with edge and arc records sorted
// by label, so output is byte-deterministic.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "reductions.hpp"

namespace orient {

inline constexpr int format_version = 1;

struct instance_document {
    std::vector<std::string> vertices;
    std::optional<multigraph> graph;
    std::optional<orientation> arcs;
    std::optional<orientation> pairing_arcs;
    std::optional<requirement_table> requirements;
    std::optional<std::pair<std::vector<count_t>, std::vector<count_t>>> bounds;
    std::optional<count_t> threshold;
    std::optional<std::vector<std::string>> set;
    nlohmann::json provenance;  // null when absent
    nlohmann::json witness;     // null when absent
    std::vector<std::string> warnings;

    const multigraph& require_graph(const std::string& what) const
    {
        if (!graph) throw error(what + ": document has no \"edges\" member");
        return *graph;
    }
    const orientation& require_arcs(const std::string& what) const
    {
        if (!arcs) throw error(what + ": document has no \"arcs\" member");
        return *arcs;
    }
};

namespace detail {

class doc_reader {
public:
    doc_reader(const nlohmann::json& j, std::string source) : j_(j), source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& where, const std::string& what) const
    {
        throw error(source_ + ": " + where + ": " + what);
    }

    vertex_id vertex(const std::unordered_map<std::string, vertex_id>& index, const nlohmann::json& v, const std::string& where) const
    {
        if (!v.is_string()) fail(where, "vertex label must be a string");
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) fail(where, "unknown vertex '" + v.get<std::string>() + "'");
        return it->second;
    }

    count_t integer(const nlohmann::json& v, const std::string& where) const
    {
        if (!v.is_number_integer()) fail(where, "expected an integer");
        return v.get<count_t>();
    }

    const nlohmann::json& j_;
    std::string source_;
};

inline std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::vector<std::tuple<std::string, std::string, count_t>> arc_records(const orientation& d)
{
    std::vector<std::tuple<std::string, std::string, count_t>> out;
    const auto& g = d.graph();
    for (std::size_t i = 0; i < g.pair_count(); ++i) {
        const auto& e = g.edge_at(i);
        if (d.forward(i) > 0) out.emplace_back(g.label(e.u), g.label(e.v), d.forward(i));
        if (d.backward(i) > 0) out.emplace_back(g.label(e.v), g.label(e.u), d.backward(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class Records>
void write_records(std::ostringstream& os, const std::string& key, const Records& records)
{
    os << ",\n  " << quoted(key) << ": [";
    bool first = true;
    for (const auto& [a, b, c] : records) {
        os << (first ? "\n    " : ",\n    ") << "[" << quoted(a) << ", " << quoted(b) << ", " << c << "]";
        first = false;
    }
    os << (first ? "]" : "\n  ]");
}

}  // namespace detail

/// Parses a document. Syntax errors report the byte offset; semantic errors
/// name the offending member and record index. Duplicate edge or arc records
/// are merged by summation and noted in warnings.
inline instance_document parse_instance(const std::string& text, const std::string& source = "<input>")
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
    }
    detail::doc_reader rd(j, source);
    if (!j.is_object()) rd.fail("document", "expected a JSON object");
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != format_version)
        rd.fail("version", "expected \"version\": " + std::to_string(format_version));
    if (!j.contains("vertices") || !j["vertices"].is_array()) rd.fail("vertices", "missing vertex label array");

    instance_document doc;
    std::unordered_map<std::string, vertex_id> index;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& v = j["vertices"][i];
        auto where = "vertices[" + std::to_string(i) + "]";
        if (!v.is_string()) rd.fail(where, "vertex label must be a string");
        if (!index.emplace(v.get<std::string>(), static_cast<vertex_id>(i)).second)
            rd.fail(where, "duplicate vertex label '" + v.get<std::string>() + "'");
        doc.vertices.push_back(v.get<std::string>());
    }

    auto triples = [&](const std::string& key) {
        std::vector<std::tuple<vertex_id, vertex_id, count_t>> out;
        const auto& arr = j[key];
        if (!arr.is_array()) rd.fail(key, "expected an array of records");
        std::set<std::pair<vertex_id, vertex_id>> seen;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            auto where = key + "[" + std::to_string(i) + "]";
            const auto& rec = arr[i];
            if (!rec.is_array() || rec.size() != 3) rd.fail(where, "expected [label, label, count]");
            auto a = rd.vertex(index, rec[0], where);
            auto b = rd.vertex(index, rec[1], where);
            auto c = rd.integer(rec[2], where);
            if (a == b) rd.fail(where, "self-loop at '" + doc.vertices[a] + "'");
            out.emplace_back(a, b, c);
            std::pair<vertex_id, vertex_id> k = key == "edges" ? std::pair{std::min(a, b), std::max(a, b)} : std::pair{a, b};
            if (!seen.insert(k).second)
                doc.warnings.push_back(source + ": " + where + ": duplicate record merged by summation");
        }
        return out;
    };

    if (j.contains("edges")) {
        graph_builder b;
        for (const auto& l : doc.vertices) b.add_vertex(l);
        auto recs = triples("edges");
        for (std::size_t i = 0; i < recs.size(); ++i) {
            auto [a, c, m] = recs[i];
            if (m < 1) rd.fail("edges[" + std::to_string(i) + "]", "multiplicity must be positive, got " + std::to_string(m));
            b.add_edge(a, c, m);
        }
        doc.graph = b.build();
    }
    for (const auto* key : {"arcs", "pairing_arcs"}) {
        if (!j.contains(key)) continue;
        auto recs = triples(key);
        for (std::size_t i = 0; i < recs.size(); ++i)
            if (std::get<2>(recs[i]) < 1)
                rd.fail(std::string(key) + "[" + std::to_string(i) + "]", "arc count must be positive");
        auto d = orientation::from_arcs(doc.vertices, recs);
        (std::string(key) == "arcs" ? doc.arcs : doc.pairing_arcs) = std::move(d);
    }
    if (j.contains("requirements")) {
        auto n = doc.vertices.size();
        requirement_table r(n, std::vector<count_t>(n, 0));
        auto recs = triples("requirements");
        for (std::size_t i = 0; i < recs.size(); ++i) {
            auto [a, b, c] = recs[i];
            if (c < 0) rd.fail("requirements[" + std::to_string(i) + "]", "requirement must be nonnegative");
            r[a][b] += c;
        }
        doc.requirements = std::move(r);
    }
    if (j.contains("bounds")) {
        auto n = doc.vertices.size();
        std::vector<count_t> lo(n, 0);
        std::vector<count_t> li(n, 0);
        const auto& arr = j["bounds"];
        if (!arr.is_array()) rd.fail("bounds", "expected an array of [label, l+, l-] records");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            auto where = "bounds[" + std::to_string(i) + "]";
            const auto& rec = arr[i];
            if (!rec.is_array() || rec.size() != 3) rd.fail(where, "expected [label, l+, l-]");
            auto v = rd.vertex(index, rec[0], where);
            lo[v] = rd.integer(rec[1], where);
            li[v] = rd.integer(rec[2], where);
            if (lo[v] < 0 || li[v] < 0) rd.fail(where, "bounds must be nonnegative");
        }
        doc.bounds = std::pair{std::move(lo), std::move(li)};
    }
    if (j.contains("threshold")) doc.threshold = rd.integer(j["threshold"], "threshold");
    if (j.contains("set")) {
        const auto& arr = j["set"];
        if (!arr.is_array()) rd.fail("set", "expected an array of labels");
        std::vector<std::string> s;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            rd.vertex(index, arr[i], "set[" + std::to_string(i) + "]");
            s.push_back(arr[i].get<std::string>());
        }
        doc.set = std::move(s);
    }
    if (j.contains("provenance")) doc.provenance = j["provenance"];
    if (j.contains("witness")) doc.witness = j["witness"];
    return doc;
}

inline instance_document read_instance(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str(), path.string());
}

inline std::string write_instance(const instance_document& doc)
{
    std::ostringstream os;
    os << "{\n  \"version\": " << format_version << ",\n  \"vertices\": [";
    for (std::size_t i = 0; i < doc.vertices.size(); ++i) os << (i ? ", " : "") << detail::quoted(doc.vertices[i]);
    os << "]";
    if (doc.graph) detail::write_records(os, "edges", edge_records(*doc.graph));
    if (doc.arcs) detail::write_records(os, "arcs", detail::arc_records(*doc.arcs));
    if (doc.pairing_arcs) detail::write_records(os, "pairing_arcs", detail::arc_records(*doc.pairing_arcs));
    if (doc.requirements) {
        std::vector<std::tuple<std::string, std::string, count_t>> recs;
        const auto& r = *doc.requirements;
        for (std::size_t u = 0; u < r.size(); ++u)
            for (std::size_t v = 0; v < r.size(); ++v)
                if (u != v && r[u][v] > 0) recs.emplace_back(doc.vertices[u], doc.vertices[v], r[u][v]);
        std::sort(recs.begin(), recs.end());
        detail::write_records(os, "requirements", recs);
    }
    if (doc.bounds) {
        os << ",\n  \"bounds\": [";
        for (std::size_t v = 0; v < doc.vertices.size(); ++v)
            os << (v ? ",\n    " : "\n    ") << "[" << detail::quoted(doc.vertices[v]) << ", " << doc.bounds->first[v] << ", "
               << doc.bounds->second[v] << "]";
        os << (doc.vertices.empty() ? "]" : "\n  ]");
    }
    if (doc.threshold) os << ",\n  \"threshold\": " << *doc.threshold;
    if (doc.set) {
        os << ",\n  \"set\": [";
        for (std::size_t i = 0; i < doc.set->size(); ++i) os << (i ? ", " : "") << detail::quoted((*doc.set)[i]);
        os << "]";
    }
    if (!doc.provenance.is_null()) os << ",\n  \"provenance\": " << doc.provenance.dump();
    if (!doc.witness.is_null()) os << ",\n  \"witness\": " << doc.witness.dump();
    os << "\n}\n";
    return os.str();
}

inline void save_instance(const instance_document& doc, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path.string() + "'");
    out << write_instance(doc);
}

inline instance_document graph_document(const multigraph& g)
{
    instance_document doc;
    doc.vertices = g.labels();
    doc.graph = g;
    return doc;
}

inline instance_document orientation_document(const orientation& d)
{
    instance_document doc;
    doc.vertices = d.graph().labels();
    doc.arcs = d;
    return doc;
}

/// Splits "a,b,c" into labels; the empty string is the empty set.
inline std::vector<std::string> split_labels(const std::string& list)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : list) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace orient
