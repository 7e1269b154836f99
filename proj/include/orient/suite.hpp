#pragma once

// The acceptance suite: every property check over the fixture corpus, the
// grids and the reductions, with a deterministic report.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "admissibility.hpp"
#include "connectivity.hpp"
#include "cuts.hpp"
#include "eulerian.hpp"
#include "graph.hpp"
#include "grid.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "oracles.hpp"
#include "parallel.hpp"
#include "reductions.hpp"

#ifndef ORIENT_FIXTURE_DIR
#define ORIENT_FIXTURE_DIR "tests/fixtures"
#endif

namespace orient {

/// A fixture file is missing or does not match what it claims to hold.
class fixture_error : public error {
public:
    using error::error;
};

// ---------------------------------------------------------------- fixtures --

inline constexpr std::size_t corpus_max_vertices = 5;
inline constexpr count_t corpus_max_edges = 8;
inline constexpr const char* corpus_file = "corpus.json";
inline constexpr const char* pin_graph_file = "oa-not-ca-g.json";
inline constexpr const char* pin_pairing_file = "oa-not-ca-f.json";

inline std::string checksum_hex(std::uint64_t h)
{
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

/// The corpus as a document: one graph per line, each [vertices, edge records].
inline std::string corpus_document(const std::vector<multigraph>& corpus, std::size_t max_vertices, count_t max_edges)
{
    std::ostringstream os;
    os << "{\n  \"version\": " << format_version << ",\n  \"max_vertices\": " << max_vertices
       << ",\n  \"max_edges\": " << max_edges << ",\n  \"count\": " << corpus.size() << ",\n  \"checksum\": \""
       << checksum_hex(corpus_checksum(corpus)) << "\",\n  \"graphs\": [";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        nlohmann::json rec = nlohmann::json::array({corpus[i].labels(), nlohmann::json::array()});
        for (const auto& [a, b, m] : edge_records(corpus[i])) rec[1].push_back({a, b, m});
        os << (i ? ",\n    " : "\n    ") << rec.dump();
    }
    os << (corpus.empty() ? "]" : "\n  ]") << "\n}\n";
    return os.str();
}

/// Reads the corpus fixture and verifies its count and checksum.
inline std::vector<multigraph> load_corpus(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fixture_error("missing fixture '" + path.string() + "' (regenerate with 'orient gen corpus --out " + path.string() + "')");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw fixture_error("corrupt fixture '" + path.string() + "': " + e.what());
    }
    std::vector<multigraph> corpus;
    try {
        for (const auto& rec : doc.at("graphs")) {
            graph_builder b;
            for (const auto& l : rec.at(0)) b.add_vertex(l.get<std::string>());
            for (const auto& e : rec.at(1)) b.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.at(2).get<count_t>());
            corpus.push_back(b.build());
        }
        if (corpus.size() != doc.at("count").get<std::size_t>()) throw fixture_error("corpus fixture: count does not match");
        if (checksum_hex(corpus_checksum(corpus)) != doc.at("checksum").get<std::string>())
            throw fixture_error("corpus fixture: checksum mismatch");
    } catch (const nlohmann::json::exception& e) {
        throw fixture_error("corrupt fixture '" + path.string() + "': " + e.what());
    }
    return corpus;
}

/// An instance that is orientation-admissible but not cut-admissible.
struct oa_not_ca {
    multigraph g;
    multigraph f;
    cut_violation violation;
    std::size_t index = 0;  // position in the searched family
};

/// The first (graph, pairing) in enumeration order with decide_oa admissible
/// and decide_ca violated.
inline std::optional<oa_not_ca> find_oa_not_ca(const std::vector<multigraph>& graphs, const search_limits& limits = {})
{
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        if (g.vertex_count() > limits.pairing_max_vertices || odd_vertices(g).size() > limits.pairing_max_odd) continue;
        std::optional<oa_not_ca> found;
        for_each_pairing(g, [&](const multigraph& f) {
            if (g.edge_count() + f.edge_count() > limits.oa_max_edges) return true;
            auto v = decide_ca(g, f, limits);
            if (!v || decide_oa(g, f, limits)) return true;
            found = oa_not_ca{g, f, *v, i};
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

/// The family searched for the pinned instance: connected, up to 6 vertices
/// and total multiplicity 8.
inline std::vector<multigraph> oa_not_ca_search_family() { return generate_corpus(6, 8); }

inline void save_oa_not_ca_pin(const oa_not_ca& hit, const std::filesystem::path& dir)
{
    auto gdoc = graph_document(hit.g);
    gdoc.provenance = {{"search", "first orientation-admissible, not cut-admissible pairing"},
                       {"family", "connected multigraphs, <= 6 vertices, total multiplicity <= 8"},
                       {"index", hit.index}};
    save_instance(gdoc, dir / pin_graph_file);
    auto fdoc = graph_document(hit.f);
    fdoc.set = hit.violation.x.labels(hit.f);
    fdoc.witness = {{"cut_g", hit.violation.cut_g}, {"cut_f", hit.violation.cut_f}, {"r", hit.violation.r}};
    save_instance(fdoc, dir / pin_pairing_file);
}

struct pinned_oa_not_ca {
    multigraph g;
    multigraph f;
    vertex_set x;
};

inline pinned_oa_not_ca load_oa_not_ca_pin(const std::filesystem::path& dir)
{
    pinned_oa_not_ca out;
    for (const auto* name : {pin_graph_file, pin_pairing_file})
        if (!std::filesystem::exists(dir / name))
            throw fixture_error("missing fixture '" + (dir / name).string() + "' (regenerate with 'orient find oa-not-ca --pin " +
                                dir.string() + "')");
    auto gdoc = read_instance(dir / pin_graph_file);
    auto fdoc = read_instance(dir / pin_pairing_file);
    out.g = gdoc.require_graph("oa-not-ca fixture");
    out.f = fdoc.require_graph("oa-not-ca fixture");
    if (!fdoc.set) throw fixture_error("oa-not-ca fixture: pairing file has no violating set");
    out.x = vertex_set::from_labels(out.g, *fdoc.set);
    return out;
}

// ------------------------------------------------------------------- suite --

struct suite_options {
    bool full = false;
    std::uint64_t seed = 7;
    unsigned threads = 1;
    std::filesystem::path fixtures = ORIENT_FIXTURE_DIR;
    std::string mutation;  // "" or "grid-padding"
    search_limits limits;
    std::vector<int> only;  // criterion ids to run; empty runs all
};

struct check_result {
    int id = 0;
    std::string name;
    bool pass = false;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    std::string counterexample;  // empty when there is none
    double seconds = 0;
};

struct suite_report {
    std::string profile;
    std::uint64_t seed = 0;
    std::vector<check_result> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

struct suite_context {
    const suite_options& opt;
    const std::vector<multigraph>& corpus;
};

inline std::string describe(const multigraph& g)
{
    std::string out;
    for (const auto& [a, b, m] : edge_records(g)) out += (out.empty() ? "" : " ") + a + "-" + b + (m > 1 ? "x" + std::to_string(m) : "");
    return out.empty() ? "(no edges on " + std::to_string(g.vertex_count()) + " vertices)" : out;
}

inline std::string describe_set(const multigraph& g, const vertex_set& x)
{
    std::string out = "{";
    for (const auto& l : x.labels(g)) out += (out.size() > 1 ? "," : "") + l;
    return out + "}";
}

/// Moves the first padding copy one row down its column, breaking the degree profile.
inline multigraph mutate_padding(const multigraph& w, const grid_spec& spec)
{
    if (spec.padding.empty()) return w;
    auto [u, v] = spec.padding.front();
    auto index = static_cast<int>(std::find(spec.cells.begin(), spec.cells.end(), v) - spec.cells.begin());
    int row = index / spec.cols + 1;
    int col = index % spec.cols + 1;
    graph_builder b(w);
    b.add_edge(v, spec.at(row % spec.rows + 1, col));
    auto g = b.build();
    graph_builder out;
    for (const auto& l : g.labels()) out.add_vertex(l);
    for (const auto& e : g.edges()) {
        bool first = (e.u == std::min(u, v) && e.v == std::max(u, v));
        if (e.mult - (first ? 1 : 0) > 0) out.add_edge(e.u, e.v, e.mult - (first ? 1 : 0));
    }
    return out.build();
}

inline std::pair<multigraph, grid_spec> suite_grid(const suite_options& opt, int alpha, int beta)
{
    auto [w, spec] = augmented_grid(alpha, beta);
    if (opt.mutation == "grid-padding") w = mutate_padding(w, spec);
    return {std::move(w), std::move(spec)};
}

// Criterion 1: max-flow values against exhaustive minimum cuts.
inline check_result check_flow(const suite_context& ctx)
{
    struct tally {
        std::size_t pairs = 0;
        std::string bad;
    };
    auto per = parallel_map(ctx.corpus.size(), ctx.opt.threads, [&](std::size_t i) {
        const auto& g = ctx.corpus[i];
        tally t;
        for (vertex_id s = 0; s < g.vertex_count(); ++s)
            for (vertex_id u = s + 1; u < g.vertex_count(); ++u) {
                ++t.pairs;
                auto flow = lambda_undirected(g, s, u);
                auto brute = brute_min_cut(g, s, u);
                if (t.bad.empty() && (flow.value != brute || cut_size(g, flow.side) != flow.value))
                    t.bad = describe(g) + ": lambda(" + g.label(s) + "," + g.label(u) + ") flow " + std::to_string(flow.value) +
                            " vs brute " + std::to_string(brute);
            }
        return t;
    });
    check_result r;
    std::size_t pairs = 0, mismatches = 0;
    for (const auto& t : per) {
        pairs += t.pairs;
        if (!t.bad.empty()) {
            ++mismatches;
            if (r.counterexample.empty()) r.counterexample = t.bad;
        }
    }
    r.details["graphs"] = ctx.corpus.size();
    r.details["pairs"] = pairs;
    r.details["graphs_with_mismatch"] = mismatches;
    r.pass = mismatches == 0 && !ctx.corpus.empty();
    return r;
}

// Criterion 2: every corpus graph has a well-balanced orientation.
inline check_result check_wbo(const suite_context& ctx)
{
    auto per = parallel_map(ctx.corpus.size(), ctx.opt.threads, [&](std::size_t i) {
        const auto& g = ctx.corpus[i];
        auto d = brute_wbo_exists(g, ctx.opt.limits);
        return d && is_well_balanced(g, *d);
    });
    check_result r;
    std::size_t found = 0;
    for (std::size_t i = 0; i < per.size(); ++i) {
        if (per[i]) ++found;
        else if (r.counterexample.empty()) r.counterexample = "no well-balanced orientation found for " + describe(ctx.corpus[i]);
    }
    r.details["graphs"] = ctx.corpus.size();
    r.details["with_orientation"] = found;
    r.pass = found == ctx.corpus.size() && !ctx.corpus.empty();
    return r;
}

// Criterion 3: a cut-admissible pairing exists for every corpus graph with at most 6 odd vertices.
inline check_result check_ca_pairing_exists(const suite_context& ctx)
{
    auto per = parallel_map(ctx.corpus.size(), ctx.opt.threads, [&](std::size_t i) -> int {
        const auto& g = ctx.corpus[i];
        if (odd_vertices(g).size() > 6) return -1;
        auto f = brute_cut_admissible_pairing(g, ctx.opt.limits);
        return f && !decide_ca(g, *f, ctx.opt.limits) ? 1 : 0;
    });
    check_result r;
    std::size_t eligible = 0, found = 0;
    for (std::size_t i = 0; i < per.size(); ++i) {
        if (per[i] < 0) continue;
        ++eligible;
        if (per[i] == 1) ++found;
        else if (r.counterexample.empty()) r.counterexample = "no cut-admissible pairing for " + describe(ctx.corpus[i]);
    }
    r.details["graphs"] = eligible;
    r.details["with_ca_pairing"] = found;
    r.pass = found == eligible && eligible > 0;
    return r;
}

struct admissibility_tally {
    std::size_t pairs = 0;
    std::size_t ca = 0;
    std::size_t oa = 0;
    std::size_t oa_not_ca = 0;
    std::size_t out_of_bounds = 0;
    std::string counterexample;  // CA but not OA
};

inline admissibility_tally tally_admissibility(const std::vector<multigraph>& graphs, const suite_options& opt)
{
    auto per = parallel_map(graphs.size(), opt.threads, [&](std::size_t i) {
        const auto& g = graphs[i];
        admissibility_tally t;
        for_each_pairing(g, [&](const multigraph& f) {
            ++t.pairs;
            if (g.vertex_count() > opt.limits.ca_max_vertices || g.edge_count() + f.edge_count() > opt.limits.oa_max_edges) {
                ++t.out_of_bounds;
                return true;
            }
            bool ca = !decide_ca(g, f, opt.limits);
            auto oa_bad = decide_oa(g, f, opt.limits);
            t.ca += ca;
            t.oa += !oa_bad;
            if (!ca && !oa_bad) ++t.oa_not_ca;
            if (ca && oa_bad && t.counterexample.empty())
                t.counterexample = describe(g) + " with F = " + describe(f) + ": cut-admissible but lambda(" +
                                   g.label(oa_bad->source) + "," + g.label(oa_bad->sink) + ") = " +
                                   std::to_string(oa_bad->directed) + " < " + std::to_string(oa_bad->required);
            return true;
        });
        return t;
    });
    admissibility_tally sum;
    for (const auto& t : per) {
        sum.pairs += t.pairs;
        sum.ca += t.ca;
        sum.oa += t.oa;
        sum.oa_not_ca += t.oa_not_ca;
        sum.out_of_bounds += t.out_of_bounds;
        if (sum.counterexample.empty()) sum.counterexample = t.counterexample;
    }
    return sum;
}

// Criterion 4: cut-admissible implies orientation-admissible.
inline check_result check_ca_implies_oa(const suite_context& ctx)
{
    check_result r;
    auto base = tally_admissibility(ctx.corpus, ctx.opt);
    auto put = [&](nlohmann::ordered_json& j, const admissibility_tally& t) {
        j["pairs"] = t.pairs;
        j["cut_admissible"] = t.ca;
        j["orientation_admissible"] = t.oa;
        j["oa_not_ca"] = t.oa_not_ca;
        j["out_of_bounds"] = t.out_of_bounds;
        j["counterexamples"] = t.counterexample.empty() ? 0 : 1;
    };
    nlohmann::ordered_json corpus_part;
    put(corpus_part, base);
    r.details["corpus"] = corpus_part;
    r.counterexample = base.counterexample;
    if (ctx.opt.full) {
        auto wide = tally_admissibility(generate_corpus(6, 9), ctx.opt);
        nlohmann::ordered_json wide_part;
        put(wide_part, wide);
        r.details["six_vertices_nine_edges"] = wide_part;
        if (r.counterexample.empty()) r.counterexample = wide.counterexample;
    }
    r.pass = r.counterexample.empty() && base.pairs > 0;
    return r;
}

// Criterion 5: the pinned orientation-admissible, not cut-admissible instance.
inline check_result check_oa_not_ca(const suite_context& ctx)
{
    check_result r;
    auto pinned = load_oa_not_ca_pin(ctx.opt.fixtures);
    auto start = std::chrono::steady_clock::now();
    bool oa = !decide_oa(pinned.g, pinned.f, ctx.opt.limits);
    auto ca = decide_ca(pinned.g, pinned.f, ctx.opt.limits);
    auto cert = check_cut_certificate(pinned.g, pinned.f, pinned.x);
    double regression_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.details["graph"] = describe(pinned.g);
    r.details["pairing"] = describe(pinned.f);
    r.details["orientation_admissible"] = oa;
    r.details["cut_admissible"] = !ca;
    r.details["pinned_set_violates"] = cert.has_value();
    if (cert) r.details["pinned_margin"] = std::to_string(cert->margin()) + " < " + std::to_string(cert->r);
    bool regression_ok = oa && ca && cert && regression_seconds <= 1.0;

    auto hit = find_oa_not_ca(oa_not_ca_search_family(), ctx.opt.limits);
    r.details["search_found"] = hit.has_value();
    bool same = hit && same_labelled_graph(hit->g, pinned.g) && same_labelled_graph(hit->f, pinned.f);
    r.details["search_matches_pin"] = same;
    r.pass = regression_ok && same;
    if (!r.pass) {
        if (!regression_ok) r.counterexample = "pinned instance no longer separates the two notions";
        else if (!hit) r.counterexample = "search found no orientation-admissible, non-cut-admissible pairing";
        else r.counterexample = "search now finds " + describe(hit->g) + " with F = " + describe(hit->f);
    }
    return r;
}

// Criterion 6: degree profile, 3-edge-connectivity and its equality cases.
inline check_result check_three_connectivity(const suite_context& ctx)
{
    check_result r;
    auto [w, spec] = suite_grid(ctx.opt, 3, 2);
    auto rep = verify_three_edge_connected(w, spec);
    r.details["grid_3x2_vertices"] = w.vertex_count();
    r.details["grid_3x2_cuts_of_three"] = rep.cuts_of_three;
    r.details["grid_3x2_equality_cases_ok"] = rep.equality_ok;
    bool ok = rep.ok() && rep.cuts_of_three == 2 * spec.ports().size();
    if (!ok) r.counterexample = "(3,2): " + (grid_degree_defect(w, spec).empty() ? "cut scan failed" : grid_degree_defect(w, spec));

    std::vector<std::pair<int, int>> lattice;
    for (int alpha : {3, 5, 7})
        for (int beta : {2, 3, 4}) lattice.emplace_back(alpha, beta);
    auto per = parallel_map(lattice.size(), ctx.opt.threads, [&](std::size_t i) {
        auto [gw, gs] = suite_grid(ctx.opt, lattice[i].first, lattice[i].second);
        auto gr = verify_three_edge_connected(gw, gs);
        std::string why;
        if (!gr.degrees_ok) why = grid_degree_defect(gw, gs);
        else if (!gr.pairwise_ok) why = "some pair has lambda " + std::to_string(gr.min_lambda);
        else if (gw.vertex_count() != static_cast<std::size_t>(gs.alpha * gs.beta * (gs.alpha + 1) / 2)) why = "vertex count";
        return why;
    });
    std::size_t flow_ok = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (per[i].empty()) ++flow_ok;
        else if (r.counterexample.empty())
            r.counterexample = "(" + std::to_string(lattice[i].first) + "," + std::to_string(lattice[i].second) + "): " + per[i];
    }
    r.details["flow_certified_grids"] = std::to_string(flow_ok) + "/" + std::to_string(lattice.size());
    r.pass = ok && flow_ok == lattice.size();
    return r;
}

// Criterion 7: cuts separating two-port components exceed alpha.
inline check_result check_separation(const suite_context& ctx)
{
    check_result r;
    auto [w, spec] = suite_grid(ctx.opt, 3, 2);
    auto ex = separation_exhaustive(w, spec);
    r.details["grid_3x2_sets"] = ex.sets;
    r.details["grid_3x2_hypothesis_sets"] = ex.hypothesis;
    r.details["grid_3x2_min_cut"] = ex.min_cut_under_hypothesis;
    bool ok = ex.ok() && ex.hypothesis > 0 && ex.sets == (std::size_t{1} << w.vertex_count());
    if (!ok) r.counterexample = "(3,2): " + std::to_string(ex.failures) + " sets with cut <= 3";
    for (auto [alpha, beta] : {std::pair{5, 3}, std::pair{7, 2}}) {
        auto [gw, gs] = suite_grid(ctx.opt, alpha, beta);
        auto sc = separation_structured(gw, gs);
        auto key = "grid_" + std::to_string(alpha) + "x" + std::to_string(beta);
        r.details[key + "_structured_sets"] = sc.sets;
        r.details[key + "_hypothesis_sets"] = sc.hypothesis;
        r.details[key + "_min_cut"] = sc.min_cut_under_hypothesis;
        if (!sc.ok() || sc.hypothesis == 0) {
            ok = false;
            if (r.counterexample.empty()) r.counterexample = key + ": " + std::to_string(sc.failures) + " structured sets fail";
        }
    }
    r.pass = ok;
    return r;
}

// Criterion 8: MAXCUT, doubled AMAXCUT and the G1 cut scan agree.
inline check_result check_maxcut_chain(const suite_context& ctx)
{
    std::vector<multigraph> graphs;
    for (auto& h : generate_corpus(4, 5, false))
        if (h.edge_count() >= 3) graphs.push_back(std::move(h));
    struct tally {
        std::size_t thresholds = 0;
        std::size_t positive = 0;
        std::string bad;
    };
    auto per = parallel_map(graphs.size(), ctx.opt.threads, [&](std::size_t i) {
        const auto& h = graphs[i];
        tally t;
        auto best = brute_maxcut(h, ctx.opt.limits).value;
        for (count_t k = 0; k <= h.edge_count(); ++k) {
            ++t.thresholds;
            auto am = maxcut_to_amaxcut(h, k);
            bool p_maxcut = best > k;
            bool p_amax = brute_maxcut(am.h, ctx.opt.limits).value > am.k;
            auto g1 = build_g1(am);
            bool p_g1 = false;
            const auto n = am.h.vertex_count();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n + 1)) && !p_g1; ++mask) {
                vertex_set x(g1.graph.vertex_count());
                x.insert(g1.q);
                if (mask & 1U) x.insert(g1.s);
                for (vertex_id v = 0; v < n; ++v)
                    if (mask >> (v + 1) & 1U) x.insert(g1.h_vertex[v]);
                p_g1 = g1_margin(g1, am.h, x) < g1.constants.big_m;
            }
            t.positive += p_maxcut;
            if (t.bad.empty() && (p_maxcut != p_amax || p_amax != p_g1))
                t.bad = describe(h) + ", k = " + std::to_string(k) + ": maxcut " + (p_maxcut ? "yes" : "no") + ", amaxcut " +
                        (p_amax ? "yes" : "no") + ", G1 scan " + (p_g1 ? "yes" : "no");
        }
        return t;
    });
    check_result r;
    std::size_t thresholds = 0, positive = 0;
    for (const auto& t : per) {
        thresholds += t.thresholds;
        positive += t.positive;
        if (r.counterexample.empty()) r.counterexample = t.bad;
    }
    r.details["graphs"] = graphs.size();
    r.details["instances"] = thresholds;
    r.details["positive"] = positive;
    r.pass = r.counterexample.empty() && !graphs.empty();
    return r;
}

inline multigraph dumbbell()
{
    graph_builder b;
    b.add_vertex("a");
    b.add_vertex("b");
    b.add_edge("a", "b", 6);
    return b.build();
}

// Criterion 9: the full (G2, F) construction on the dumbbell seed.
inline check_result check_pipeline(const suite_context& ctx)
{
    check_result r;
    auto fail = [&](const std::string& why) {
        if (r.counterexample.empty()) r.counterexample = why;
    };
    auto h = dumbbell();
    auto best = brute_maxcut(h, ctx.opt.limits).value;
    for (count_t k : {4, 6}) {
        nlohmann::ordered_json part;
        auto tag = "k=" + std::to_string(k) + ": ";
        auto inst = make_amaxcut(h, k);
        auto ca = build_ca_instance(inst);
        auto g1 = build_g1(inst);
        const auto big_m = ca.constants.big_m;
        part["M"] = big_m;
        part["vertices"] = ca.g2.vertex_count();
        part["edges"] = ca.g2.edge_count();
        part["f_edges"] = ca.f.edge_count();
        bool eulerian = is_eulerian(graph_sum(ca.g2, ca.f));
        part["g2_plus_f_eulerian"] = eulerian;
        if (!eulerian) fail(tag + "G2+F is not eulerian");
        part["degree_q"] = ca.g2.degree(ca.q);
        if (ca.g2.degree(ca.q) != big_m) fail(tag + "d(q) != M");
        bool contracts = same_labelled_graph(contract(ca.g2, ca.group), g1.graph);
        part["contracts_to_g1"] = contracts;
        if (!contracts) fail(tag + "contraction differs from G1");
        auto lam_qt = lambda_undirected(ca.g2, ca.q, ca.t).value;
        part["lambda_q_t"] = lam_qt;
        if (lam_qt != big_m) fail(tag + "lambda(q,t) != M");

        bool four_connected = true;
        for (vertex_id u = 0; u < g1.graph.vertex_count(); ++u)
            for (vertex_id v = u + 1; v < g1.graph.vertex_count(); ++v)
                if (lambda_undirected(g1.graph, u, v).value < 4) four_connected = false;
        part["g1_four_edge_connected"] = four_connected;
        if (!four_connected) fail(tag + "G1 is not 4-edge-connected");

        auto overload = check_no_overloaded_cut(ca, ctx.opt.seed ^ static_cast<std::uint64_t>(k), ctx.opt.full ? 256 : 32);
        part["no_overloaded_cut_sets"] = overload.sets;
        part["no_overloaded_cut_failures"] = overload.failures;
        if (overload.failures) fail(tag + "a set with d_G2 < d_F");

        // Lifted cuts: the margin equality against G1 and the R formula.
        std::size_t lifted = 0, lifted_violating = 0;
        bool margins_ok = true, formula_ok = true;
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
            std::vector<std::string> sel;
            if (mask & 1U) sel.push_back("s");
            if (mask & 2U) sel.push_back("a");
            if (mask & 4U) sel.push_back("b");
            auto x = lift_cut(ca, sel);
            ++lifted;
            auto margin = cut_size(ca.g2, x) - cut_size(ca.f, x);
            auto g1x = g1_selection(g1, sel);
            if (margin != g1_margin(g1, h, g1x)) margins_ok = false;
            auto rv = r_value(ca.g2, x);
            if (rv != r_degree_formula(ca.g2, x)) formula_ok = false;
            if (margin < rv) ++lifted_violating;
        }
        std::mt19937_64 rng(ctx.opt.seed + static_cast<std::uint64_t>(k));
        std::size_t sampled = 0;
        for (int i = 0; i < (ctx.opt.full ? 16 : 4); ++i) {
            vertex_set x(ca.g2.vertex_count());
            auto bits = rng();
            for (vertex_id v = 0; v < ca.g2.vertex_count(); ++v) {
                const auto& name = ca.group[v];
                unsigned slot = name == "q" ? 0 : name == "t" ? 1 : name == "s" ? 2 : name == "a" ? 3 : 4;
                if (bits >> slot & 1U) x.insert(v);
            }
            ++sampled;
            if (r_value(ca.g2, x) != r_degree_formula(ca.g2, x)) formula_ok = false;
        }
        part["lifted_sets"] = lifted;
        part["lifted_violations"] = lifted_violating;
        part["lifted_margins_match_g1"] = margins_ok;
        part["r_formula_sets"] = lifted + sampled;
        part["r_formula_ok"] = formula_ok;
        if (!margins_ok) fail(tag + "lifted margin differs from the G1 margin");
        if (!formula_ok) fail(tag + "R_G2 differs from the degree formula");

        if (best > k) {
            auto x = lift_cut(ca, {"s", "a"});
            auto v = check_cut_certificate(ca.g2, ca.f, x);
            part["lift_s_a"] = v ? std::to_string(v->margin()) + " < " + std::to_string(v->r) : "satisfied";
            if (!v || v->margin() != 6 || v->r != big_m) fail(tag + "lifted {s,a} is not the expected violation");
            auto attack = attack_orientation(ca.g2, ca.f, x);
            bool euler = is_eulerian_orientation(orientation_sum(attack.g_part, attack.f_part));
            auto directed = lambda_directed(attack.g_part, ca.q, ca.t).value;
            part["attack_eulerian"] = euler;
            part["attack_lambda_q_t"] = std::to_string(directed) + " < " + std::to_string(big_m / 2);
            if (!euler || directed > 3 || directed >= big_m / 2) fail(tag + "attack did not break well-balance at (q,t)");
        } else {
            part["negative_seed"] = true;
            if (lifted_violating != 0) fail(tag + "a lifted cut violates on a negative seed");
        }
        r.details["k" + std::to_string(k)] = part;
    }
    r.pass = r.counterexample.empty();
    return r;
}

// Criterion 10: extend_to_eulerian against brute-force completion.
inline check_result check_extension(const suite_context& ctx)
{
    std::vector<const multigraph*> graphs;
    for (const auto& g : ctx.corpus)
        if (g.edge_count() <= 14) graphs.push_back(&g);
    // Six odd vertices are needed before a canonical orientation can fail to extend.
    std::vector<multigraph> six;
    if (ctx.opt.full)
        for (auto& g : oa_not_ca_search_family())
            if (g.vertex_count() == 6 && odd_vertices(g).size() == 6) six.push_back(std::move(g));
    for (const auto& g : six) graphs.push_back(&g);
    struct tally {
        std::size_t cases = 0;
        std::size_t feasible = 0;
        std::string bad;
    };
    auto per = parallel_map(graphs.size(), ctx.opt.threads, [&](std::size_t i) {
        const auto& g = *graphs[i];
        tally t;
        for_each_pairing(g, [&](const multigraph& f) {
            // Every orientation of F; the all-forward one is the canonical orientation.
            const auto k = f.pair_count();
            for (std::uint32_t dirs = 0; dirs < (1U << k); ++dirs) {
                std::vector<count_t> fwd(k);
                for (std::size_t j = 0; j < k; ++j) fwd[j] = (dirs >> j & 1U) ? 0 : f.edge_at(j).mult;
                orientation fd(f, fwd);
                ++t.cases;
                auto ext = extend_to_eulerian(g, fd);
                bool brute = brute_eulerian_extension_exists(g, fd, ctx.opt.limits);
                bool ok = bool(ext) == brute;
                if (ext) {
                    ++t.feasible;
                    ok = ok && is_eulerian_orientation(orientation_sum(*ext.extension, fd));
                } else {
                    ok = ok && !check_ff_condition(g, fd, ext.certificate);
                }
                if (!ok && t.bad.empty())
                    t.bad = describe(g) + " with F = " + describe(f) + ": flow says " + (ext ? "yes" : "no") + ", brute force " +
                            (brute ? "yes" : "no");
            }
            return true;
        });
        return t;
    });
    check_result r;
    std::size_t cases = 0, feasible = 0;
    for (const auto& t : per) {
        cases += t.cases;
        feasible += t.feasible;
        if (r.counterexample.empty()) r.counterexample = t.bad;
    }
    r.details["graphs"] = graphs.size();
    r.details["six_odd_vertex_graphs"] = six.size();
    r.details["oriented_pairings"] = cases;
    r.details["extendable"] = feasible;
    r.details["certified_infeasible"] = cases - feasible;
    r.pass = r.counterexample.empty() && cases > 0;
    return r;
}

/// Graphs with no isolated vertex and at most max_edges edges, one per
/// isomorphism class, as disjoint unions of connected ones.
inline std::vector<multigraph> small_graph_lattice(count_t max_edges)
{
    auto connected = generate_corpus(static_cast<std::size_t>(max_edges) + 1, max_edges);
    std::vector<multigraph> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, count_t)> rec = [&](std::size_t from, count_t left) {
        if (!pick.empty()) {
            graph_builder b;
            for (std::size_t c = 0; c < pick.size(); ++c) {
                const auto& part = connected[pick[c]];
                std::string prefix = pick.size() > 1 ? std::string(1, static_cast<char>('a' + c)) : "";
                std::vector<vertex_id> ids;
                for (const auto& l : part.labels()) ids.push_back(b.add_vertex(prefix.empty() ? l : prefix + l));
                for (const auto& e : part.edges()) b.add_edge(ids[e.u], ids[e.v], e.mult);
            }
            out.push_back(b.build());
        }
        for (std::size_t i = from; i < connected.size(); ++i)
            if (connected[i].edge_count() <= left) {
                pick.push_back(i);
                rec(i, left - connected[i].edge_count());
                pick.pop_back();
            }
    };
    rec(0, max_edges);
    return out;
}

// Criterion 11: BWBO and the reduced LACO instance agree, with witnesses translated both ways.
inline check_result check_bwbo_laco(const suite_context& ctx)
{
    auto graphs = small_graph_lattice(ctx.opt.full ? 4 : 3);
    struct tally {
        std::size_t instances = 0;
        std::size_t positive = 0;
        std::size_t witnesses = 0;
        std::string bad;
    };
    auto per = parallel_map(graphs.size(), ctx.opt.threads, [&](std::size_t gi) {
        const auto& g = graphs[gi];
        const auto n = g.vertex_count();
        tally t;
        // Up to five vertices every bound vector is tried; beyond that only
        // those with l+(v) + l-(v) <= d(v), the others being refuted by degree.
        bool all_vectors = n <= 5;
        std::vector<int> digit(n, 0);
        while (true) {
            bwbo_instance inst{g, std::vector<count_t>(n), std::vector<count_t>(n)};
            bool degree_feasible = true;
            for (vertex_id v = 0; v < n; ++v) {
                inst.lower_out[v] = digit[v] / 3;
                inst.lower_in[v] = digit[v] % 3;
                if (inst.lower_out[v] + inst.lower_in[v] > g.degree(v)) degree_feasible = false;
            }
            if (all_vectors || degree_feasible) {
                ++t.instances;
                auto laco = bwbo_to_laco(inst);
                auto db = brute_bwbo(inst, ctx.opt.limits);
                auto dl = brute_laco(laco, ctx.opt.limits);
                std::string why;
                if (laco.g.edge_count() != 5 * g.edge_count()) why = "|E'| != 5|E|";
                else if (db.has_value() != dl.has_value()) why = std::string("bwbo ") + (db ? "yes" : "no") + ", laco " + (dl ? "yes" : "no");
                if (why.empty() && db) {
                    ++t.positive;
                    auto lifted = lift_bwbo_witness(inst, laco, *db);
                    if (auto v = find_requirement_violation(lifted, laco.r))
                        why = "lifted witness misses r(" + laco.g.label(v->source) + "," + laco.g.label(v->sink) + ")";
                    auto projected = project_laco_witness(laco, *dl);
                    if (auto d = bwbo_defect(inst, projected); why.empty() && !d.empty()) why = "projected witness: " + d;
                    t.witnesses += 2;
                }
                if (!why.empty() && t.bad.empty()) {
                    t.bad = describe(g) + " bounds";
                    for (vertex_id v = 0; v < n; ++v)
                        t.bad += " " + g.label(v) + ":" + std::to_string(inst.lower_out[v]) + "/" + std::to_string(inst.lower_in[v]);
                    t.bad += ": " + why;
                }
            }
            std::size_t i = 0;
            while (i < n && ++digit[i] == 9) digit[i++] = 0;
            if (i == n) break;
        }
        return t;
    });
    check_result r;
    std::size_t instances = 0, positive = 0, witnesses = 0;
    for (const auto& t : per) {
        instances += t.instances;
        positive += t.positive;
        witnesses += t.witnesses;
        if (r.counterexample.empty()) r.counterexample = t.bad;
    }
    r.details["graphs"] = graphs.size();
    r.details["instances"] = instances;
    r.details["positive"] = positive;
    r.details["witnesses_checked"] = witnesses;
    r.pass = r.counterexample.empty() && instances > 0;
    return r;
}

}  // namespace detail

struct suite_criterion {
    int id;
    const char* name;
    check_result (*run)(const detail::suite_context&);
};

inline const std::vector<suite_criterion>& suite_criteria()
{
    static const std::vector<suite_criterion> all{
        {1, "flow-correctness", detail::check_flow},
        {2, "well-balanced-existence", detail::check_wbo},
        {3, "cut-admissible-pairing-existence", detail::check_ca_pairing_exists},
        {4, "ca-implies-oa", detail::check_ca_implies_oa},
        {5, "oa-not-ca-regression", detail::check_oa_not_ca},
        {6, "grid-three-edge-connectivity", detail::check_three_connectivity},
        {7, "grid-separation-bound", detail::check_separation},
        {8, "maxcut-amaxcut-g1-equivalence", detail::check_maxcut_chain},
        {9, "ca-instance-pipeline", detail::check_pipeline},
        {10, "eulerian-extension", detail::check_extension},
        {11, "bwbo-laco-equivalence", detail::check_bwbo_laco},
    };
    return all;
}

/// Runs the selected criteria. Throws fixture_error when a fixture is missing
/// or corrupt; property failures are reported, not thrown.
inline suite_report run_suite(const suite_options& opt)
{
    suite_report rep;
    rep.profile = opt.full ? "full" : "quick";
    rep.seed = opt.seed;
    auto corpus = load_corpus(opt.fixtures / corpus_file);
    if (!opt.full) {
        std::erase_if(corpus, [](const multigraph& g) { return g.vertex_count() > 4; });
    }
    detail::suite_context ctx{opt, corpus};
    for (const auto& c : suite_criteria()) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), c.id) == opt.only.end()) continue;
        auto start = std::chrono::steady_clock::now();
        check_result res;
        try {
            res = c.run(ctx);
        } catch (const fixture_error&) {
            throw;
        } catch (const std::exception& e) {
            res.pass = false;
            res.counterexample = std::string("error: ") + e.what();
        }
        res.id = c.id;
        res.name = c.name;
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.checks.push_back(std::move(res));
    }
    return rep;
}

/// The report as JSON or text. Timings are left out unless asked for, so the
/// report is a pure function of the profile, the seed and the fixtures.
inline std::string format_report(const suite_report& rep, bool json, bool timings = false)
{
    if (json) {
        nlohmann::ordered_json doc;
        doc["profile"] = rep.profile;
        doc["seed"] = rep.seed;
        doc["passed"] = rep.passed();
        doc["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : rep.checks) {
            nlohmann::ordered_json j;
            j["id"] = c.id;
            j["name"] = c.name;
            j["pass"] = c.pass;
            j["details"] = c.details;
            if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
            if (timings) j["seconds"] = c.seconds;
            doc["checks"].push_back(j);
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "suite profile=" << rep.profile << " seed=" << rep.seed << "\n";
    std::size_t passed = 0;
    for (const auto& c : rep.checks) {
        passed += c.pass;
        os << (c.pass ? "PASS " : "FAIL ") << c.id << " " << c.name;
        for (const auto& [key, value] : c.details.items()) {
            if (value.is_object()) {
                for (const auto& [k2, v2] : value.items()) os << " " << key << "." << k2 << "=" << (v2.is_string() ? v2.get<std::string>() : v2.dump());
            } else {
                os << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
            }
        }
        if (timings) os << " seconds=" << c.seconds;
        os << "\n";
        if (!c.counterexample.empty()) os << "  counterexample: " << c.counterexample << "\n";
    }
    os << (rep.passed() ? "PASS" : "FAIL") << " " << passed << "/" << rep.checks.size() << " checks\n";
    return os.str();
}

}  // namespace orient
