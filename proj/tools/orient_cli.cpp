// orient: command-line front end for the orientation workbench.
//
// Exit codes: 0 yes / pass / admissible, 1 no / violation / counterexample,
// 2 usage, input or size-bound error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <orient/orient.hpp>

namespace {

using namespace orient;
using json = nlohmann::ordered_json;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

struct globals {
    bool json = false;
    unsigned threads = default_threads();
    std::uint64_t seed = 7;
    std::string config;
    search_limits limits;
};

void load_config(globals& g, bool threads_given)
{
    if (g.config.empty()) return;
    std::ifstream in(g.config);
    if (!in) throw error("cannot open config '" + g.config + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw error("config '" + g.config + "': " + e.what());
    }
    auto take = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j[key].get<std::remove_reference_t<decltype(field)>>();
    };
    take("ca_max_vertices", g.limits.ca_max_vertices);
    take("oa_max_edges", g.limits.oa_max_edges);
    take("maxcut_max_vertices", g.limits.maxcut_max_vertices);
    take("orientation_max_edges", g.limits.orientation_max_edges);
    take("pairing_max_vertices", g.limits.pairing_max_vertices);
    take("pairing_max_odd", g.limits.pairing_max_odd);
    if (j.contains("threads") && !threads_given) g.threads = j["threads"].get<unsigned>();
}

instance_document read(const std::string& path)
{
    auto doc = read_instance(path);
    for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
    return doc;
}

/// f re-indexed onto g's vertex order; both must carry the same labels.
multigraph on_vertices_of(const multigraph& g, const multigraph& f)
{
    if (g.vertex_count() != f.vertex_count()) throw error("the two instances have different vertex sets");
    graph_builder b;
    for (const auto& l : g.labels()) b.add_vertex(l);
    for (const auto& e : f.edges()) {
        if (!g.find(f.label(e.u)) || !g.find(f.label(e.v))) throw error("the two instances have different vertex sets");
        b.add_edge(f.label(e.u), f.label(e.v), e.mult);
    }
    return b.build();
}

orientation on_vertices_of(const multigraph& g, const orientation& d)
{
    std::vector<std::tuple<std::string, std::string, count_t>> arcs;
    const auto& dg = d.graph();
    for (vertex_id u = 0; u < dg.vertex_count(); ++u)
        for (const auto& inc : dg.incident(u))
            if (auto c = d.arcs(u, inc.other); c > 0) arcs.emplace_back(dg.label(u), dg.label(inc.other), c);
    if (g.vertex_count() != dg.vertex_count()) throw error("the two instances have different vertex sets");
    for (const auto& l : dg.labels())
        if (!g.find(l)) throw error("the two instances have different vertex sets");
    std::vector<std::tuple<vertex_id, vertex_id, count_t>> ids;
    for (const auto& [a, b, c] : arcs) ids.emplace_back(g.id(a), g.id(b), c);
    return orientation::from_arcs(g.labels(), ids);
}

vertex_set parse_set(const multigraph& g, const std::string& list) { return vertex_set::from_labels(g, split_labels(list)); }

void emit(const instance_document& doc, const std::string& out)
{
    if (out.empty()) std::cout << write_instance(doc);
    else save_instance(doc, out);
}

void print(const globals& g, const json& j, const std::string& text)
{
    if (g.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

json labels_json(const multigraph& g, const vertex_set& x) { return x.labels(g); }

std::string set_text(const multigraph& g, const vertex_set& x)
{
    std::string s = "{";
    for (const auto& l : x.labels(g)) s += (s.size() > 1 ? "," : "") + l;
    return s + "}";
}

json violation_json(const multigraph& g, const cut_violation& v)
{
    return {{"set", labels_json(g, v.x)}, {"cut_g", v.cut_g}, {"cut_f", v.cut_f}, {"r", v.r}, {"margin", v.margin()}};
}

std::string violation_text(const multigraph& g, const cut_violation& v)
{
    return "X = " + set_text(g, v.x) + ": d_G(X) - d_F(X) = " + std::to_string(v.cut_g) + " - " + std::to_string(v.cut_f) + " = " +
           std::to_string(v.margin()) + " < R_G(X) = " + std::to_string(v.r) + "\n";
}

amaxcut_instance amaxcut_of(const instance_document& doc)
{
    if (!doc.threshold) throw error("instance has no \"threshold\" member");
    return make_amaxcut(doc.require_graph("AMAXCUT instance"), *doc.threshold);
}

bwbo_instance bwbo_of(const instance_document& doc)
{
    const auto& g = doc.require_graph("BWBO instance");
    bwbo_instance inst{g, std::vector<count_t>(g.vertex_count(), 0), std::vector<count_t>(g.vertex_count(), 0)};
    if (doc.bounds) {
        inst.lower_out = doc.bounds->first;
        inst.lower_in = doc.bounds->second;
    }
    return inst;
}

laco_instance laco_of(const instance_document& doc)
{
    laco_instance inst;
    inst.g = doc.require_graph("LACO instance");
    if (!doc.requirements) throw error("LACO instance has no \"requirements\" member");
    inst.r = *doc.requirements;
    auto x = inst.g.find("x");
    auto y = inst.g.find("y");
    if (!x || !y) throw error("LACO instance lacks the hub vertices x and y");
    inst.x = *x;
    inst.y = *y;
    inst.base_vertices = inst.g.vertex_count() - 2;
    if (std::max(inst.x, inst.y) < inst.base_vertices) throw error("LACO instance: x and y must be the last two vertices");
    return inst;
}

instance_document laco_document(const laco_instance& inst, const bwbo_instance& from)
{
    auto doc = graph_document(inst.g);
    doc.requirements = inst.r;
    doc.provenance = {{"reduction", "bwbo-to-laco"},
                      {"source_vertices", from.g.vertex_count()},
                      {"source_edges", from.g.edge_count()},
                      {"hubs", {"x", "y"}}};
    return doc;
}

json constants_json(const reduction_constants& c) { return {{"n", c.n}, {"m", c.m}, {"k", c.k}, {"M", c.big_m}}; }

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graph orientation workbench: admissible pairings, well-balanced orientations and their hardness reductions"};
    app.require_subcommand(1);
    app.fallthrough();
    globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    auto* threads_opt = app.add_option("--threads", g.threads, "Worker threads (default: ORIENT_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized sampling");
    app.add_option("--config", g.config, "JSON file with search bounds")->check(CLI::ExistingFile);

    std::string out;
    std::string set_list;
    std::vector<std::string> inputs;
    int result = exit_yes;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate instances")->require_subcommand(1);
    int alpha = 3, beta = 2;
    auto* gen_grid = gen->add_subcommand("grid", "Augmented (alpha, beta)-grid");
    gen_grid->add_option("--alpha", alpha, "Odd, at least 3")->required();
    gen_grid->add_option("--beta", beta, "At least 2")->required();
    gen_grid->add_option("--out", out, "Output file (default stdout); ports go to <out>.ports.json");
    gen_grid->callback([&] {
        auto [w, spec] = augmented_grid(alpha, beta);
        auto doc = graph_document(w);
        doc.provenance = {{"grid", {{"alpha", alpha}, {"beta", beta}}}};
        emit(doc, out);
        json ports = {{"alpha", alpha}, {"beta", beta}, {"L", json::array()}, {"P", json::array()}};
        for (auto v : spec.l) ports["L"].push_back(w.label(v));
        for (auto v : spec.p) ports["P"].push_back(w.label(v));
        if (!out.empty()) std::ofstream(out + ".ports.json") << ports.dump(2) << "\n";
        else std::cerr << ports.dump() << "\n";
    });
    std::size_t max_vertices = corpus_max_vertices;
    count_t max_edges = corpus_max_edges;
    auto* gen_corpus = gen->add_subcommand("corpus", "Connected multigraphs up to isomorphism");
    gen_corpus->add_option("--max-vertices", max_vertices, "Vertex bound");
    gen_corpus->add_option("--max-edges", max_edges, "Bound on total multiplicity");
    gen_corpus->add_option("--out", out, "Output file (default stdout)");
    gen_corpus->callback([&] {
        auto corpus = generate_corpus(max_vertices, max_edges);
        auto text = corpus_document(corpus, max_vertices, max_edges);
        if (out.empty()) std::cout << text;
        else std::ofstream(out, std::ios::binary) << text;
        std::cerr << corpus.size() << " graphs, checksum " << checksum_hex(corpus_checksum(corpus)) << "\n";
    });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Apply a reduction")->require_subcommand(1);
    auto reduction = [&](const char* name, const char* help) {
        auto* sub = reduce->add_subcommand(name, help);
        sub->add_option("instance", inputs, "Input instance")->required()->expected(1)->check(CLI::ExistingFile);
        sub->add_option("--out", out, "Output file (default stdout)");
        return sub;
    };
    reduction("maxcut-to-amaxcut", "Double every edge and the threshold")->callback([&] {
        auto doc = read(inputs[0]);
        if (!doc.threshold) throw error("MAXCUT instance has no \"threshold\" member");
        auto inst = maxcut_to_amaxcut(doc.require_graph("MAXCUT instance"), *doc.threshold);
        auto res = graph_document(inst.h);
        res.threshold = inst.k;
        res.provenance = {{"reduction", "maxcut-to-amaxcut"}, {"source_threshold", *doc.threshold}};
        emit(res, out);
    });
    reduction("amaxcut-to-g1", "The intermediate graph G1")->callback([&] {
        auto inst = amaxcut_of(read(inputs[0]));
        auto g1 = build_g1(inst);
        auto res = graph_document(g1.graph);
        res.provenance = {{"reduction", "amaxcut-to-g1"}, {"constants", constants_json(g1.constants)}};
        emit(res, out);
    });
    reduction("amaxcut-to-ca", "The cut-admissibility instance (G2, F)")->callback([&] {
        auto inst = amaxcut_of(read(inputs[0]));
        auto ca = build_ca_instance(inst);
        auto res = graph_document(ca.g2);
        res.provenance = {{"reduction", "amaxcut-to-ca"}, {"constants", constants_json(ca.constants)}};
        if (out.empty()) throw error("reduce amaxcut-to-ca writes two files; give --out for G2 (F goes to <out>.pairing.json)");
        emit(res, out);
        auto fdoc = graph_document(ca.f);
        fdoc.provenance = res.provenance;
        emit(fdoc, out + ".pairing.json");
        std::cerr << ca.g2.vertex_count() << " vertices, " << ca.g2.edge_count() << " edges, " << ca.f.edge_count()
                  << " pairing edges, M = " << ca.constants.big_m << "\n";
    });
    reduction("bwbo-to-laco", "Add the hubs x and y with requirements")->callback([&] {
        auto inst = bwbo_of(read(inputs[0]));
        emit(laco_document(bwbo_to_laco(inst), inst), out);
    });

    // lift / project
    auto* lift = app.add_subcommand("lift", "Translate a witness forward")->require_subcommand(1);
    auto* lift_cut_cmd = lift->add_subcommand("cut", "Lift a selection of seed vertices (and s) to a set of G2");
    lift_cut_cmd->add_option("instance", inputs, "AMAXCUT instance")->required()->expected(1)->check(CLI::ExistingFile);
    lift_cut_cmd->add_option("--set", set_list, "Comma-separated seed labels, optionally with s")->required();
    lift_cut_cmd->add_option("--out", out, "Write the lifted set as an instance document");
    lift_cut_cmd->callback([&] {
        auto inst = amaxcut_of(read(inputs[0]));
        auto ca = build_ca_instance(inst);
        auto g1 = build_g1(inst);
        auto sel = split_labels(set_list);
        auto x = lift_cut(ca, sel);
        auto cert = check_cut_certificate(ca.g2, ca.f, x);
        auto margin = cut_size(ca.g2, x) - cut_size(ca.f, x);
        auto g1_value = g1_margin(g1, inst.h, g1_selection(g1, sel));
        auto r = r_value(ca.g2, x);
        json j = {{"selection", sel}, {"lifted_vertices", x.size()}, {"cut_g2", cut_size(ca.g2, x)},
                  {"cut_f", cut_size(ca.f, x)}, {"margin", margin}, {"g1_margin", g1_value}, {"r", r}, {"violation", cert.has_value()}};
        if (!out.empty()) {
            auto doc = graph_document(ca.g2);
            doc.graph.reset();
            doc.set = x.labels(ca.g2);
            doc.witness = j;
            save_instance(doc, out);
        }
        std::ostringstream os;
        os << "lifted " << x.size() << " vertices; d_G2(X') - d_F(X') = " << margin << " (G1: " << g1_value << "), R = " << r
           << (cert ? ": violation\n" : ": satisfied\n");
        print(g, j, os.str());
        result = cert ? exit_no : exit_yes;
    });
    auto* lift_bw = lift->add_subcommand("bwbo-witness", "Extend a BWBO solution to the LACO instance");
    lift_bw->add_option("instances", inputs, "BWBO instance and orientation")->required()->expected(2)->check(CLI::ExistingFile);
    lift_bw->add_option("--out", out, "Output file (default stdout)");
    lift_bw->callback([&] {
        auto inst = bwbo_of(read(inputs[0]));
        auto d = on_vertices_of(inst.g, read(inputs[1]).require_arcs("BWBO witness"));
        auto laco = bwbo_to_laco(inst);
        auto lifted = lift_bwbo_witness(inst, laco, d);
        if (auto v = find_requirement_violation(lifted, laco.r))
            throw error("lifted orientation misses r(" + laco.g.label(v->source) + "," + laco.g.label(v->sink) + ")");
        emit(orientation_document(lifted), out);
    });
    auto* project = app.add_subcommand("project", "Translate a witness back")->require_subcommand(1);
    auto* project_laco = project->add_subcommand("laco-witness", "Restrict a LACO solution to the BWBO graph");
    project_laco->add_option("instances", inputs, "LACO instance and orientation")->required()->expected(2)->check(CLI::ExistingFile);
    project_laco->add_option("--out", out, "Output file (default stdout)");
    project_laco->callback([&] {
        auto inst = laco_of(read(inputs[0]));
        auto d = on_vertices_of(inst.g, read(inputs[1]).require_arcs("LACO witness"));
        emit(orientation_document(project_laco_witness(inst, d)), out);
    });

    // lambda / rvalue
    std::string from, to;
    auto* lambda = app.add_subcommand("lambda", "Local edge-connectivity (directed if the instance has arcs)");
    lambda->add_option("instance", inputs, "Instance")->required()->expected(1)->check(CLI::ExistingFile);
    lambda->add_option("--from", from, "Source label")->required();
    lambda->add_option("--to", to, "Sink label")->required();
    lambda->callback([&] {
        auto doc = read(inputs[0]);
        flow_result fr;
        const multigraph* base = nullptr;
        bool directed = doc.arcs.has_value() && !doc.graph.has_value();
        if (directed) {
            base = &doc.arcs->graph();
            fr = lambda_directed(*doc.arcs, base->id(from), base->id(to));
        } else {
            base = &doc.require_graph("lambda");
            fr = lambda_undirected(*base, base->id(from), base->id(to));
        }
        json j = {{"from", from}, {"to", to}, {"directed", directed}, {"lambda", fr.value}, {"min_cut_side", labels_json(*base, fr.side)}};
        print(g, j, "lambda(" + from + "," + to + ") = " + std::to_string(fr.value) + ", min cut side " + set_text(*base, fr.side) + "\n");
    });
    auto* rvalue = app.add_subcommand("rvalue", "R_G(X)");
    rvalue->add_option("instance", inputs, "Instance")->required()->expected(1)->check(CLI::ExistingFile);
    rvalue->add_option("--set", set_list, "Comma-separated labels")->required();
    rvalue->callback([&] {
        auto doc = read(inputs[0]);
        const auto& gr = doc.require_graph("rvalue");
        auto x = parse_set(gr, set_list);
        auto w = r_value_witness(gr, x);
        json j = {{"set", labels_json(gr, x)}, {"r", w ? w->value : 0}};
        std::string text = "R_G(" + set_text(gr, x) + ") = " + std::to_string(w ? w->value : 0);
        if (w && w->value > 0) {
            j["pair"] = {gr.label(w->source), gr.label(w->sink)};
            text += " attained at (" + gr.label(w->source) + "," + gr.label(w->sink) + ")";
        }
        print(g, j, text + "\n");
    });

    // check / decide / attack
    auto* check = app.add_subcommand("check", "Check a certificate")->require_subcommand(1);
    auto* ca_cert = check->add_subcommand("ca-cert", "Test the cut condition on one set");
    ca_cert->add_option("instances", inputs, "G and F")->required()->expected(2)->check(CLI::ExistingFile);
    ca_cert->add_option("--set", set_list, "Comma-separated labels")->required();
    ca_cert->callback([&] {
        const auto gr = read(inputs[0]).require_graph("G");
        auto f = on_vertices_of(gr, read(inputs[1]).require_graph("F"));
        auto x = parse_set(gr, set_list);
        auto v = check_cut_certificate(gr, f, x);
        if (v) {
            print(g, {{"violation", true}, {"certificate", violation_json(gr, *v)}}, violation_text(gr, *v));
            result = exit_no;
        } else {
            auto cg = cut_size(gr, x), cf = cut_size(f, x);
            print(g, {{"violation", false}, {"cut_g", cg}, {"cut_f", cf}, {"r", r_value(gr, x)}},
                  "satisfied: " + std::to_string(cg) + " - " + std::to_string(cf) + " >= " + std::to_string(r_value(gr, x)) + "\n");
        }
    });
    std::string witness_out;
    auto* decide = app.add_subcommand("decide", "Exhaustive deciders")->require_subcommand(1);
    auto* decide_ca_cmd = decide->add_subcommand("ca", "Is F cut-admissible?");
    decide_ca_cmd->add_option("instances", inputs, "G and F")->required()->expected(2)->check(CLI::ExistingFile);
    decide_ca_cmd->add_option("--witness", witness_out, "Write the violating set here");
    decide_ca_cmd->callback([&] {
        const auto gr = read(inputs[0]).require_graph("G");
        auto f = on_vertices_of(gr, read(inputs[1]).require_graph("F"));
        auto v = decide_ca(gr, f, g.limits);
        if (!v) {
            print(g, {{"cut_admissible", true}}, "cut-admissible\n");
            return;
        }
        result = exit_no;
        print(g, {{"cut_admissible", false}, {"certificate", violation_json(gr, *v)}}, "not cut-admissible: " + violation_text(gr, *v));
        if (!witness_out.empty()) {
            auto doc = graph_document(gr);
            doc.set = v->x.labels(gr);
            doc.witness = violation_json(gr, *v);
            save_instance(doc, witness_out);
        }
    });
    auto* decide_oa_cmd = decide->add_subcommand("oa", "Is F orientation-admissible?");
    decide_oa_cmd->add_option("instances", inputs, "G and F")->required()->expected(2)->check(CLI::ExistingFile);
    decide_oa_cmd->add_option("--witness", witness_out, "Write the counterexample orientation here");
    decide_oa_cmd->callback([&] {
        const auto gr = read(inputs[0]).require_graph("G");
        auto f = on_vertices_of(gr, read(inputs[1]).require_graph("F"));
        auto c = decide_oa(gr, f, g.limits);
        if (!c) {
            print(g, {{"orientation_admissible", true}}, "orientation-admissible\n");
            return;
        }
        result = exit_no;
        json j = {{"orientation_admissible", false},
                  {"source", gr.label(c->source)},
                  {"sink", gr.label(c->sink)},
                  {"lambda", c->directed},
                  {"required", c->required}};
        print(g, j, "not orientation-admissible: lambda(" + gr.label(c->source) + "," + gr.label(c->sink) + ") = " +
                        std::to_string(c->directed) + " < " + std::to_string(c->required) + "\n");
        if (!witness_out.empty()) {
            auto doc = orientation_document(c->g_part);
            doc.pairing_arcs = c->f_part;
            doc.witness = j;
            save_instance(doc, witness_out);
        }
    });
    auto* attack = app.add_subcommand("attack", "Turn a cut violation into a non-well-balanced eulerian restriction");
    attack->add_option("instances", inputs, "G and F")->required()->expected(2)->check(CLI::ExistingFile);
    attack->add_option("--set", set_list, "The violating set")->required();
    attack->add_option("--out", out, "Write the orientation here");
    attack->callback([&] {
        const auto gr = read(inputs[0]).require_graph("G");
        auto f = on_vertices_of(gr, read(inputs[1]).require_graph("F"));
        auto x = parse_set(gr, set_list);
        try {
            auto c = attack_orientation(gr, f, x);
            json j = {{"source", gr.label(c.source)}, {"sink", gr.label(c.sink)}, {"lambda", c.directed}, {"required", c.required}};
            print(g, j, "eulerian orientation with lambda(" + gr.label(c.source) + "," + gr.label(c.sink) + ") = " +
                            std::to_string(c.directed) + " < " + std::to_string(c.required) + "\n");
            if (!out.empty()) {
                auto doc = orientation_document(c.g_part);
                doc.pairing_arcs = c.f_part;
                doc.witness = j;
                save_instance(doc, out);
            }
            result = exit_no;
        } catch (const extension_infeasible& e) {
            throw error(std::string(e.what()) + "; certificate " + set_text(gr, e.certificate()));
        }
    });
    auto* extend = app.add_subcommand("extend-eulerian", "Complete an oriented F to an eulerian orientation of G + F");
    extend->add_option("instances", inputs, "G and the oriented F (arcs)")->required()->expected(2)->check(CLI::ExistingFile);
    extend->add_option("--out", out, "Write the orientation of G here");
    extend->callback([&] {
        const auto gr = read(inputs[0]).require_graph("G");
        auto fd = on_vertices_of(gr, read(inputs[1]).require_arcs("oriented F"));
        auto ext = extend_to_eulerian(gr, fd);
        if (ext) {
            auto doc = orientation_document(*ext.extension);
            doc.pairing_arcs = fd;
            if (!out.empty()) save_instance(doc, out);
            print(g, {{"extendable", true}}, out.empty() ? write_instance(doc) : "extendable\n");
            return;
        }
        result = exit_no;
        auto x = ext.certificate;
        json j = {{"extendable", false}, {"certificate", labels_json(gr, x)}, {"cut_g", cut_size(gr, x)},
                  {"out_f", out_cut(fd, x)}, {"in_f", in_cut(fd, x)}};
        print(g, j, "not extendable: X = " + set_text(gr, x) + " has d_G(X) = " + std::to_string(cut_size(gr, x)) + " < " +
                        std::to_string(out_cut(fd, x) - in_cut(fd, x)) + " = d+_F(X) - d-_F(X)\n");
    });

    // solve / find
    auto* solve = app.add_subcommand("solve", "Brute-force oracles")->require_subcommand(1);
    bool brute = false;
    auto solver = [&](const char* name, const char* help) {
        auto* sub = solve->add_subcommand(name, help);
        sub->add_option("instance", inputs, "Instance")->required()->expected(1)->check(CLI::ExistingFile);
        sub->add_flag("--brute", brute, "Exhaustive search (the only method)")->required();
        sub->add_option("--out", out, "Write the witness here");
        return sub;
    };
    auto report_orientation = [&](const std::optional<orientation>& d, const char* what) {
        if (!d) {
            result = exit_no;
            print(g, {{"solution", false}}, std::string("no ") + what + "\n");
            return;
        }
        if (!out.empty()) save_instance(orientation_document(*d), out);
        print(g, {{"solution", true}, {"arcs", nlohmann::json::parse(write_instance(orientation_document(*d)))["arcs"]}},
              out.empty() ? write_instance(orientation_document(*d)) : std::string(what) + " found\n");
    };
    solver("maxcut", "Is there X with d_H(X) > k?")->callback([&] {
        auto doc = read(inputs[0]);
        const auto& h = doc.require_graph("MAXCUT instance");
        auto best = brute_maxcut(h, g.limits);
        json j = {{"max_cut", best.value}, {"argmax", labels_json(h, best.argmax)}};
        std::string text = "max cut " + std::to_string(best.value) + " at " + set_text(h, best.argmax);
        if (doc.threshold) {
            bool yes = best.value > *doc.threshold;
            j["threshold"] = *doc.threshold;
            j["positive"] = yes;
            text += yes ? " > " : " <= ";
            text += std::to_string(*doc.threshold);
            result = yes ? exit_yes : exit_no;
        }
        print(g, j, text + "\n");
    });
    solver("bwbo", "Bounded well-balanced orientation")->callback([&] {
        report_orientation(brute_bwbo(bwbo_of(read(inputs[0])), g.limits), "bounded well-balanced orientation");
    });
    solver("laco", "Local arc-connectivity orientation")->callback([&] {
        auto doc = read(inputs[0]);
        const auto& gr = doc.require_graph("LACO instance");
        if (!doc.requirements) throw error("LACO instance has no \"requirements\" member");
        report_orientation(brute_laco(gr, *doc.requirements, g.limits), "orientation meeting the requirements");
    });
    solver("wbo", "Well-balanced orientation")->callback([&] {
        report_orientation(brute_wbo_exists(read(inputs[0]).require_graph("graph"), g.limits), "well-balanced orientation");
    });
    auto* find = app.add_subcommand("find", "Searches")->require_subcommand(1);
    auto* find_pairing = find->add_subcommand("ca-pairing", "First cut-admissible odd-vertex pairing");
    find_pairing->add_option("instance", inputs, "Graph")->required()->expected(1)->check(CLI::ExistingFile);
    find_pairing->add_option("--out", out, "Write the pairing here");
    find_pairing->callback([&] {
        const auto gr = read(inputs[0]).require_graph("graph");
        auto f = brute_cut_admissible_pairing(gr, g.limits);
        if (!f) {
            result = exit_no;
            print(g, {{"found", false}}, "no cut-admissible pairing\n");
            return;
        }
        auto doc = graph_document(*f);
        if (!out.empty()) save_instance(doc, out);
        print(g, {{"found", true}, {"pairing", nlohmann::json::parse(write_instance(doc))["edges"]}},
              out.empty() ? write_instance(doc) : "found\n");
    });
    std::string pin;
    auto* find_sep = find->add_subcommand("oa-not-ca", "First orientation-admissible pairing that is not cut-admissible");
    find_sep->add_option("--pin", pin, "Write the fixture pair into this directory");
    find_sep->callback([&] {
        auto hit = find_oa_not_ca(oa_not_ca_search_family(), g.limits);
        if (!hit) {
            result = exit_no;
            print(g, {{"found", false}}, "none in the search family\n");
            return;
        }
        if (!pin.empty()) save_oa_not_ca_pin(*hit, pin);
        json j = {{"found", true}, {"index", hit->index}, {"graph", nlohmann::json::parse(write_instance(graph_document(hit->g)))["edges"]},
                  {"pairing", nlohmann::json::parse(write_instance(graph_document(hit->f)))["edges"]},
                  {"certificate", violation_json(hit->g, hit->violation)}};
        print(g, j, "graph #" + std::to_string(hit->index) + ", pairing not cut-admissible: " + violation_text(hit->g, hit->violation));
    });

    // suite
    bool full = false, quick = false, timings = false;
    std::string fixtures = ORIENT_FIXTURE_DIR, mutate;
    std::vector<int> only;
    auto* suite = app.add_subcommand("suite", "Run the acceptance checks");
    auto* full_flag = suite->add_flag("--full", full, "Full profile");
    suite->add_flag("--quick", quick, "Quick profile (default)")->excludes(full_flag);
    suite->add_flag("--timings", timings, "Include per-check wall time (makes the report nondeterministic)");
    suite->add_option("--fixtures", fixtures, "Fixture directory");
    suite->add_option("--mutate", mutate, "Inject a defect to test the checks")->check(CLI::IsMember({"grid-padding"}));
    suite->add_option("--only", only, "Run only these criterion ids");
    suite->callback([&] {
        suite_options opt;
        opt.full = full;
        opt.seed = g.seed;
        opt.threads = g.threads;
        opt.fixtures = fixtures;
        opt.mutation = mutate;
        opt.limits = g.limits;
        opt.only = only;
        auto rep = run_suite(opt);
        std::cout << format_report(rep, g.json, timings);
        result = rep.passed() ? exit_yes : exit_no;
    });

    // Parse first so --config is known before any callback runs.
    app.parse_complete_callback([&] { load_config(g, threads_opt->count() > 0); });
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_yes : exit_error;
    } catch (const fixture_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return result;
}
