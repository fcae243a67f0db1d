// hypertopo: batch analysis of hyperedge sets and their intersected graphs.
// Every subcommand prints a JSON report; exit 0 = verified/ok, 1 = verified
// failure, 2 = usage, parse, or precondition error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hypertopo/hypertopo.hpp"

namespace ht = hypertopo;
using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ht::Hypergraph load_hypergraph(const std::string& path) {
    return ht::parse_hypergraph_document(read_file(path)).hypergraph;
}

void emit(const json& j) { std::cout << ht::serialize(j); }

json report_3i(const ht::StructureReport& r, bool strict) {
    json j;
    j["independence"] = r.independence;
    if (r.independence_witness)
        j["independence_witness"] = {r.independence_witness->a, r.independence_witness->b};
    j["intersection"] = r.intersection;
    if (r.intersection_witness) j["intersection_witness"] = *r.intersection_witness;
    j["integrity"] = r.integrity;
    if (!r.missing_vertices.empty()) j["missing_vertices"] = r.missing_vertices;
    j["strict"] = strict;
    j["pass"] = r.pass(strict);
    return j;
}

json full_report(const ht::StructureReport& r) {
    json j;
    if (r.uniform_k) j["uniform_k"] = *r.uniform_k;
    j["equitable"] = r.equitable;
    j["full"] = r.full;
    j["degree_series"] = r.degree_series;
    j["norm"] = r.norm;
    j["ears"] = r.ears;
    j["isolated"] = r.isolated;
    j["euler"] = r.euler;
    if (r.bipartite_split)
        j["bipartite_split"] = {r.bipartite_split->first, r.bipartite_split->second};
    j["self_complementary"] = r.self_complementary;
    j["perfect_hypermatchings"] = r.perfect_hypermatchings;
    return j;
}

unsigned default_seed(unsigned cli_seed, bool seed_given) {
    if (seed_given) return cli_seed;
    if (const char* env = std::getenv("HYPERTOPO_SEED")) return static_cast<unsigned>(std::stoul(env));
    return 0;
}

ht::KdKind kind_from_name(const std::string& name) {
    if (name == "graceful") return ht::KdKind::Graceful;
    if (name == "odd-graceful") return ht::KdKind::OddGraceful;
    if (name == "edge-antimagic") return ht::KdKind::EdgeAntimagic;
    if (name == "harmonious") return ht::KdKind::Harmonious;
    if (name == "odd-elegant") return ht::KdKind::OddElegant;
    if (name == "edge-magic") return ht::KdKind::EdgeMagic;
    if (name == "edge-difference") return ht::KdKind::EdgeDifference;
    if (name == "felicitous-difference") return ht::KdKind::FelicitousDifference;
    if (name == "graceful-difference") return ht::KdKind::GracefulDifference;
    throw CLI::ValidationError("--kind", "unknown coloring kind '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph set-system toolbox"};
    app.require_subcommand(1);

    std::string file, file_b, out_format = "json", kind_name = "graceful";
    bool strict = false, complete = false;
    int m = 0, t = 0, n = 0, k = 0, d = 1, ground_n = 0, limit = 8, modulus = 0, zero = 1, r_shift = 1;
    std::vector<int> bip;
    unsigned seed = 0;
    bool seed_given = false, strong = false;

    auto* c_verify = app.add_subcommand("verify", "3I report for a hypergraph document");
    c_verify->add_option("file", file)->required();
    c_verify->add_flag("--strict", strict);
    auto* c_report = app.add_subcommand("report", "full structure report");
    c_report->add_option("file", file)->required();
    auto* c_compl = app.add_subcommand("complement", "complementary hyperedge set");
    c_compl->add_option("file", file)->required();
    auto* c_reduce = app.add_subcommand("reduce", "Graham reduction");
    c_reduce->add_option("file", file)->required();
    auto* c_graph = app.add_subcommand("graph", "v-intersected graph");
    c_graph->add_option("file", file)->required();
    c_graph->add_option("--out", out_format)->check(CLI::IsMember({"dot", "json"}));
    auto* c_metrics = app.add_subcommand("metrics", "degrees, hyperdiameter, domination");
    c_metrics->add_option("file", file)->required();
    auto* c_cycle = app.add_subcommand("cycle", "proper hyperedge-hamiltonian cycle search");
    c_cycle->add_option("file", file)->required();

    auto* c_group = app.add_subcommand("group", "every-zero group operations");
    auto* g_shift = c_group->add_subcommand("shift", "shift a family by r (mod M)");
    g_shift->add_option("file", file)->required();
    g_shift->add_option("--modulus", modulus)->required();
    g_shift->add_option("--r", r_shift)->required();
    auto* g_table = c_group->add_subcommand("table", "index table for a preappointed zero");
    g_table->add_option("--modulus", modulus)->required();
    g_table->add_option("--zero", zero);
    auto* g_check = c_group->add_subcommand("check", "generate the shift family and verify the axioms");
    g_check->add_option("file", file)->required();
    g_check->add_option("--modulus", modulus)->required();

    auto* c_gen = app.add_subcommand("gen", "constructive families");
    auto* gen_strong = c_gen->add_subcommand("strong", "strong 3I family over [1,m]");
    gen_strong->add_option("--m", m)->required();
    gen_strong->add_option("--t", t)->required();
    auto* gen_cyclic = c_gen->add_subcommand("cyclic", "k consecutive residues over [1,n]");
    gen_cyclic->add_option("--n", n)->required();
    gen_cyclic->add_option("--k", k)->required();

    auto* c_enum = app.add_subcommand("enum", "enumerate families over [1,n]");
    c_enum->add_option("--ground", ground_n)->required();
    c_enum->add_flag("--strict", strict);
    auto* c_keys = app.add_subcommand("keys", "matchings (E, co-E) with both sides 3I");
    c_keys->add_option("--ground", ground_n)->required();
    c_keys->add_option("--limit", limit);
    c_keys->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });

    auto* c_count = app.add_subcommand("count", "spanning tree / forest counting");
    auto* count_trees = c_count->add_subcommand("trees", "matrix-tree count");
    count_trees->add_option("--n", n);
    count_trees->add_flag("--complete", complete);
    count_trees->add_option("--bipartite", bip)->expected(2);
    count_trees->add_option("--graph", file);
    auto* count_forests = c_count->add_subcommand("forests", "labeled forests on n vertices");
    count_forests->add_option("--n", n)->required();

    auto* c_color = app.add_subcommand("color", "coloring verifiers");
    auto* color_verify = c_color->add_subcommand("verify", "parameterized (k,d) verifier");
    color_verify->add_option("file", file)->required();
    color_verify->add_option("--kind", kind_name);
    color_verify->add_option("--k", k);
    color_verify->add_option("--d", d);
    color_verify->add_flag("--strong", strong);

    auto* c_topcode = app.add_subcommand("topcode", "Topcode-matrix of a colored graph");
    c_topcode->add_option("file", file)->required();

    try {
        app.parse(argc, argv);

        if (*c_verify) {
            auto h = load_hypergraph(file);
            auto r = ht::verify_3i(h, strict);
            emit(report_3i(r, strict));
            return r.pass(strict) ? 0 : 1;
        }
        if (*c_report) {
            auto h = load_hypergraph(file);
            auto r = ht::structure_report(h);
            json j = report_3i(r, true);
            j.update(full_report(r));
            emit(j);
            return 0;
        }
        if (*c_compl) {
            emit(ht::hypergraph_to_json(ht::complement_set(load_hypergraph(file))));
            return 0;
        }
        if (*c_reduce) {
            emit(ht::hypergraph_to_json(ht::graham_reduction(load_hypergraph(file))));
            return 0;
        }
        if (*c_graph) {
            auto g = ht::build_v_intersected(load_hypergraph(file));
            if (out_format == "dot")
                std::cout << ht::to_dot(g);
            else
                emit(ht::set_colored_graph_to_json(g));
            return 0;
        }
        if (*c_metrics) {
            auto mtr = ht::intersected_metrics(load_hypergraph(file));
            json j;
            j["hyperedge_degrees"] = mtr.hyperedge_degrees;
            j["connected"] = mtr.connected;
            if (mtr.hyperdiameter) j["hyperdiameter"] = *mtr.hyperdiameter;
            else j["components"] = mtr.components;
            j["dominating_set"] = mtr.dominating_set;
            auto conn = ht::hyperedge_connectivity(load_hypergraph(file));
            j["hyperedge_connectivity"] = conn.connectivity;
            j["cut_set"] = conn.cut_set;
            emit(j);
            return 0;
        }
        if (*c_cycle) {
            auto h = load_hypergraph(file);
            auto cyc = ht::find_proper_hamiltonian_cycle(h);
            json j;
            j["found"] = cyc.has_value();
            if (cyc) {
                j["edge_order"] = cyc->edge_order;
                j["representatives"] = cyc->representatives;
            }
            emit(j);
            return cyc ? 0 : 1;
        }
        if (*g_shift) {
            auto h = load_hypergraph(file);
            json j;
            j["edges"] = ht::shift_set(h.edges, r_shift, modulus);
            j["ground"] = ht::interval(1, modulus);
            emit(j);
            return 0;
        }
        if (*g_table) {
            ht::GroupTable tbl{modulus, zero};
            json j;
            j["modulus"] = modulus;
            j["zero"] = zero;
            j["table"] = tbl.table();
            emit(j);
            return 0;
        }
        if (*g_check) {
            auto h = load_hypergraph(file);
            auto fam = ht::generate_hypergraph_group(h, modulus);
            auto r = ht::verify_every_zero(fam);
            json j;
            j["profile"] = r.profile;
            j["closure"] = r.closure;
            j["latin"] = r.latin;
            j["zero"] = r.zero;
            j["inverse"] = r.inverse;
            j["associative"] = r.associative;
            j["associative_exhaustive"] = r.associative_exhaustive;
            j["commutative"] = r.commutative;
            j["pass"] = r.pass();
            json members = json::array();
            for (const auto& mview : fam.members()) members.push_back(mview);
            j["members"] = std::move(members);
            emit(j);
            return r.pass() ? 0 : 1;
        }
        if (*gen_strong) {
            auto h = ht::strong_hyperedge_set(m, t);
            json j = ht::hypergraph_to_json(h);
            j["cardinality"] = h.edges.size();
            emit(j);
            return 0;
        }
        if (*gen_cyclic) {
            emit(ht::hypergraph_to_json(ht::cyclic_k_uniform(n, k)));
            return 0;
        }
        if (*c_enum) {
            auto families = ht::enumerate_3i(ground_n, strict);
            json j;
            j["count"] = families.size();
            json list = json::array();
            for (const auto& h : families) list.push_back(h.edges);
            j["families"] = std::move(list);
            emit(j);
            return 0;
        }
        if (*c_keys) {
            auto pairs = ht::key_matchings(ground_n, limit, default_seed(seed, seed_given));
            json j;
            j["count"] = pairs.size();
            json list = json::array();
            for (const auto& [a, b] : pairs) list.push_back({a.edges, b.edges});
            j["matchings"] = std::move(list);
            emit(j);
            return 0;
        }
        if (*count_trees) {
            ht::Graph g;
            if (complete) g = ht::complete_graph(n);
            else if (bip.size() == 2) g = ht::complete_bipartite_graph(bip[0], bip[1]);
            else if (!file.empty()) g = ht::parse_graph_part(json::parse(read_file(file)));
            else throw CLI::ValidationError("count trees", "need --complete, --bipartite, or --graph");
            json j;
            j["spanning_trees"] = ht::spanning_tree_count(g).get_str();
            emit(j);
            return 0;
        }
        if (*count_forests) {
            json j;
            j["forests"] = ht::forest_count(n).get_str();
            emit(j);
            return 0;
        }
        if (*color_verify) {
            auto c = ht::parse_total_coloring(json::parse(read_file(file)));
            ht::KdParams params{kind_from_name(kind_name), k, d, strong};
            auto r = ht::verify_kd_total_coloring(c, params);
            json j;
            j["kind"] = kind_name;
            j["k"] = k;
            j["d"] = d;
            j["lattice"] = r.lattice_ok;
            j["edge_rule"] = r.edge_rule_ok;
            j["edge_set"] = r.edge_set_ok;
            j["total_set"] = r.total_set_ok;
            j["strong"] = r.strong_ok;
            if (r.constant) j["constant"] = *r.constant;
            j["pass"] = r.pass();
            emit(j);
            return r.pass() ? 0 : 1;
        }
        if (*c_topcode) {
            json doc = json::parse(read_file(file));
            json j;
            if (ht::looks_set_colored(doc)) {
                auto g = ht::parse_set_colored_graph(doc);
                auto mat = ht::build_topcode_matrix(g);
                json cols = json::array();
                for (const auto& col : mat.columns) cols.push_back({col[0], col[1], col[2]});
                j["columns"] = std::move(cols);
            } else {
                auto c = ht::parse_total_coloring(doc);
                auto mat = ht::build_topcode_matrix(c);
                json cols = json::array();
                for (const auto& col : mat.columns) cols.push_back({col[0], col[1], col[2]});
                j["columns"] = std::move(cols);
            }
            emit(j);
            return 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const json::parse_error& e) {
        json j;
        j["error"] = e.what();
        j["byte"] = e.byte;
        emit(j);
        return 2;
    } catch (const std::exception& e) {
        json j;
        j["error"] = e.what();
        emit(j);
        return 2;
    }
}
