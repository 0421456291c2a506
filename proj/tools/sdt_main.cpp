#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "sdt/enumerate.hpp"
#include "sdt/extremal.hpp"
#include "sdt/families.hpp"
#include "sdt/graph.hpp"
#include "sdt/graph6.hpp"
#include "sdt/report.hpp"
#include "sdt/steiner.hpp"
#include "sdt/verify.hpp"

namespace {

using namespace sdt;

class Timer {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

int run_sdiam(int k, const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open input file: " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        std::cout << sdiam(graph6_decode(line), k).to_string() << '\n';
    }
    return 0;
}

int run_steiner(const std::string& g6, std::vector<int> terminals, bool want_witness) {
    Graph g = graph6_decode(g6);
    TerminalSet s = TerminalSet::of(g, std::move(terminals));
    if (!want_witness) {
        std::cout << steiner_distance(g, s).to_string() << '\n';
        return 0;
    }
    SteinerWitness w;
    ExtendedNat d = steiner_distance(g, s, w);
    std::cout << d.to_string() << '\n';
    if (d.is_finite()) {
        std::cout << "tree:";
        for (auto [u, v] : w.edges) std::cout << ' ' << u << '-' << v;
        std::cout << '\n';
    }
    return 0;
}

int run_construct(const std::string& text, bool props) {
    Graph g = build_family(parse_family(text));
    std::cout << graph6_encode(g) << '\n';
    if (props) {
        std::cout << "order=" << g.order() << " edges=" << g.edge_count()
                  << " max_degree=" << g.max_degree() << " sdiam3=";
        if (g.order() >= 3) {
            std::cout << sdiam(g, 3).to_string();
        } else {
            std::cout << "n/a";
        }
        std::cout << '\n';
    }
    return 0;
}

int run_enumerate(const EnumFilter& filter, ShardSpec shard, bool count_only) {
    if (count_only) {
        std::cout << count(filter, shard) << '\n';
        return 0;
    }
    generate(filter, shard, [](const Graph& g) { std::cout << graph6_encode(g) << '\n'; });
    return 0;
}

int run_extremal(const ExtremalQuery& query, const SearchOptions& options,
                 const std::vector<std::string>& merge_files, const std::string& out_path,
                 const std::string& csv_path, bool stable) {
    Timer timer;
    ExtremalResult result;
    if (!merge_files.empty()) {
        std::vector<ExtremalResult> parts;
        for (const std::string& path : merge_files) {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open shard report: " + path);
            parts.push_back(extremal_from_report(Json::parse(in)));
        }
        result = merge_shards(parts);
    } else {
        result = compute_e(query, options);
    }
    write_output(render_document(extremal_report(result), timer.elapsed_ms(), stable),
                 out_path);
    if (!csv_path.empty()) write_output(extremal_csv(result), csv_path);
    return 0;
}

int run_verify(const std::string& claim_token, bool all, const SuiteOptions& options,
               const std::string& out_path, const std::string& csv_path, bool stable) {
    Timer timer;
    SuiteReport suite;
    if (all) {
        suite = run_all(options);
    } else {
        auto id = parse_claim(claim_token);
        if (!id) throw std::invalid_argument("unknown claim id: " + claim_token);
        suite.n_max = options.n_max;
        suite.claims.push_back(run_claim(*id, options));
        const ClaimReport& rep = suite.claims.back();
        suite.failed = rep.status == ClaimStatus::fail ? 1 : 0;
        suite.discrepancies = rep.status == ClaimStatus::discrepancy_documented ? 1 : 0;
        suite.all_ok = suite.failed == 0;
    }
    write_output(render_document(suite_report(suite), timer.elapsed_ms(), stable), out_path);
    if (!csv_path.empty()) write_output(suite_csv(suite), csv_path);
    for (const ClaimReport& rep : suite.claims) {
        if (rep.status == ClaimStatus::discrepancy_documented) {
            std::cerr << "DISCREPANCY " << claim_name(rep.claim)
                      << ": documented source conflict; see the report cells\n";
        } else if (rep.status == ClaimStatus::fail) {
            std::cerr << "FAIL " << claim_name(rep.claim) << '\n';
        }
    }
    return suite.failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner k-diameter and extremal graph-size toolkit"};
    app.require_subcommand(1);

    auto* sd = app.add_subcommand("sdiam", "Steiner k-diameter of each graph6 input line");
    int sd_k = 3;
    std::string sd_file;
    sd->add_option("-k,--set-size", sd_k, "terminal set size")->capture_default_str();
    sd->add_option("file", sd_file, "graph6 input file (default: stdin)");

    auto* st = app.add_subcommand("steiner", "Steiner distance of one terminal set");
    std::string st_g6;
    std::vector<int> st_terms;
    bool st_witness = false;
    st->add_option("graph", st_g6, "graph6 string")->required();
    st->add_option("-t,--terminals", st_terms, "comma-separated terminal vertices")
        ->required()
        ->delimiter(',');
    st->add_flag("--witness", st_witness, "also print one minimum Steiner tree");

    auto* co = app.add_subcommand("construct", "build a named family member");
    std::string co_spec;
    bool co_props = false;
    co->add_option("family", co_spec, "family spec, e.g. cycle:9 or tabc:1,2,3")->required();
    co->add_flag("--props", co_props, "print measured properties");

    auto* en = app.add_subcommand("enumerate", "stream one graph6 line per isomorphism class");
    int en_n = 1;
    int en_l = -1;
    int en_m = -1;
    int en_shards = 1;
    int en_shard = 0;
    bool en_all = false;
    bool en_count = false;
    en->add_option("-n,--order", en_n, "number of vertices")->required();
    en->add_flag("--all", en_all, "include disconnected graphs");
    en->add_option("-l,--max-degree", en_l, "maximum degree equals this value");
    en->add_option("-m,--edges", en_m, "restrict to one edge count");
    en->add_option("--shards", en_shards, "total shard count");
    en->add_option("--shard", en_shard, "shard index to stream");
    en->add_flag("--count", en_count, "print only the class count");

    auto* ex = app.add_subcommand(
        "extremal", "minimum size for given order, exact max degree, sdiam_k bound");
    int ex_n = 0;
    int ex_l = 0;
    int ex_d = 0;
    int ex_k = 3;
    int ex_threads = 1;
    int ex_shards = 1;
    int ex_shard = 0;
    std::size_t ex_witnesses = 10;
    bool ex_all_witnesses = false;
    bool ex_stable = false;
    std::vector<std::string> ex_merge;
    std::string ex_out;
    std::string ex_csv;
    ex->add_option("-n,--order", ex_n, "number of vertices");
    ex->add_option("-l,--max-degree", ex_l, "maximum degree (exact)");
    ex->add_option("-d,--diameter", ex_d, "Steiner k-diameter bound");
    ex->add_option("-k,--set-size", ex_k, "terminal set size")->capture_default_str();
    ex->add_option("--threads", ex_threads, "worker threads per edge stratum")
        ->capture_default_str();
    ex->add_option("--witnesses", ex_witnesses, "witness cap")->capture_default_str();
    ex->add_flag("--all-witnesses", ex_all_witnesses, "keep every minimum witness");
    ex->add_option("--shards", ex_shards, "total shard count (emits a partial report)");
    ex->add_option("--shard", ex_shard, "shard index to search");
    ex->add_option("--merge", ex_merge, "merge shard report files instead of searching");
    ex->add_option("-o,--out", ex_out, "write the JSON report to this file");
    ex->add_option("--csv", ex_csv, "also write a CSV row to this file");
    ex->add_flag("--stable", ex_stable, "zero the timing field for byte-stable output");

    auto* ve = app.add_subcommand("verify", "re-derive closed-form claims");
    std::string ve_claim;
    bool ve_all = false;
    int ve_nmax = 8;
    int ve_threads = 1;
    bool ve_stable = false;
    std::string ve_out;
    std::string ve_csv;
    ve->add_option("claim", ve_claim, "claim id, e.g. THM_4_2");
    ve->add_flag("--all", ve_all, "run every claim");
    ve->add_option("--n-max", ve_nmax, "order cap for every grid")->capture_default_str();
    ve->add_option("--threads", ve_threads, "worker threads inside extremal searches")
        ->capture_default_str();
    ve->add_option("-o,--out", ve_out, "write the JSON report to this file");
    ve->add_option("--csv", ve_csv, "also write per-cell CSV rows to this file");
    ve->add_flag("--stable", ve_stable, "zero the timing field for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sd->parsed()) return run_sdiam(sd_k, sd_file);
        if (st->parsed()) return run_steiner(st_g6, st_terms, st_witness);
        if (co->parsed()) return run_construct(co_spec, co_props);
        if (en->parsed()) {
            EnumFilter filter;
            filter.order = en_n;
            filter.connected_only = !en_all;
            if (en_l >= 0) filter.max_degree_exact = en_l;
            if (en_m >= 0) filter.edge_count = en_m;
            return run_enumerate(filter, ShardSpec{en_shard, en_shards}, en_count);
        }
        if (ex->parsed()) {
            if (ex_merge.empty() && (ex_n <= 0 || ex_l <= 0 || ex_d <= 0)) {
                throw std::invalid_argument("extremal requires -n, -l and -d (or --merge)");
            }
            ExtremalQuery query;
            query.order = ex_n;
            query.max_degree = ex_l;
            query.diameter_bound = ex_d;
            query.k = ex_k;
            SearchOptions options;
            options.threads = ex_threads;
            options.witness_cap = ex_witnesses;
            options.all_witnesses = ex_all_witnesses;
            options.shard = ShardSpec{ex_shard, ex_shards};
            return run_extremal(query, options, ex_merge, ex_out, ex_csv, ex_stable);
        }
        if (ve->parsed()) {
            if (ve_all == !ve_claim.empty()) {
                throw std::invalid_argument("verify needs a claim id or --all (not both)");
            }
            SuiteOptions options;
            options.n_max = ve_nmax;
            options.threads = ve_threads;
            return run_verify(ve_claim, ve_all, options, ve_out, ve_csv, ve_stable);
        }
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
