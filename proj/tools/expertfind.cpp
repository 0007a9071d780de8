#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "expertfind/index_io.hpp"
#include "expertfind/pipeline.hpp"

namespace {

using namespace expertfind;

std::string format_score(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

int cmd_index(const std::string& corpus_path, const std::string& out_path) {
    auto corpus = load_corpus(corpus_path);
    auto index = build_index(corpus.pubs);
    save_corpus_artifact(out_path, corpus);

    std::size_t with_abstract = 0, conferences = 0, journals = 0, citation_links = 0;
    for (const auto& p : index.pubs) {
        if (p.abstract) ++with_abstract;
        if (p.venue_kind == VenueKind::conference) {
            ++conferences;
        } else {
            ++journals;
        }
    }
    for (const auto& out_edges : index.citation_out) {
        citation_links += out_edges.size();
    }
    std::cout << "total_authors\t" << index.author_pubs.size() << '\n'
              << "total_publications\t" << index.num_docs << '\n'
              << "publications_with_abstract\t" << with_abstract << '\n'
              << "conference_papers\t" << conferences << '\n'
              << "journal_papers\t" << journals << '\n'
              << "citation_links\t" << citation_links << '\n'
              << "self_links_dropped\t" << corpus.self_links_dropped << '\n'
              << "dangling_references\t" << corpus.dangling_references << '\n';
    return 0;
}

void print_diagnostics(const SearchOutcome& outcome) {
    for (const auto& report : outcome.reports) {
        std::cout << "# sensor " << sensor_name(report.sensor)
                  << ": H=" << format4(report.entropy) << " MaxH=" << format4(report.max_entropy)
                  << " theta=" << format4(report.mass.theta) << '\n';
        std::cout << "# sensor " << sensor_name(report.sensor) << " mass:";
        for (std::size_t i = 0; i < report.mass.frame.size(); ++i) {
            std::cout << ' ' << report.mass.frame[i] << '=' << format4(report.mass.singleton[i]);
        }
        std::cout << '\n';
    }
    for (std::size_t i = 0; i < outcome.conflicts.size(); ++i) {
        std::cout << "# combination " << i + 1 << ": K=" << format4(outcome.conflicts[i]) << '\n';
    }
    if (!outcome.final_mass.frame.empty()) {
        std::cout << "# final mass:";
        for (std::size_t i = 0; i < outcome.final_mass.frame.size(); ++i) {
            std::cout << ' ' << outcome.final_mass.frame[i] << '='
                      << format4(outcome.final_mass.singleton[i]);
        }
        std::cout << " theta=" << format4(outcome.final_mass.theta) << '\n';
    }
}

int cmd_search(const std::string& query_text, const RunConfig& config) {
    auto corpus = load_corpus_artifact(config.index_path);
    auto index = build_index(std::move(corpus.pubs));
    auto q = make_query(query_text);
    auto outcome = run_search(index, q, config);
    if (outcome.ranking.entries.empty()) {
        std::cerr << "warning: no candidates matched query \"" << query_text << "\"\n";
        std::cout << "rank\tauthor\tscore\n";
        return 0;
    }
    if (config.verbose) {
        print_diagnostics(outcome);
    }
    std::cout << "rank\tauthor\tscore\n";
    std::size_t depth = std::min(config.depth, outcome.ranking.entries.size());
    for (std::size_t i = 0; i < depth; ++i) {
        const auto& entry = outcome.ranking.entries[i];
        std::cout << i + 1 << '\t' << entry.author << '\t' << format_score(entry.score) << '\n';
    }
    return 0;
}

int cmd_evaluate(const std::string& qrels_path, const RunConfig& config,
                 const std::string& out_path) {
    auto corpus = load_corpus_artifact(config.index_path);
    auto index = build_index(std::move(corpus.pubs));
    auto qrels = load_qrels(qrels_path);
    auto report = evaluate_queries(index, qrels, config, &std::cerr);
    auto text = format_report(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write report: " + out_path);
        }
        out << text;
    }
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, std::size_t iterations,
                std::uint64_t seed) {
    auto read_aps = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) {
            throw std::runtime_error("cannot open report: " + path);
        }
        return parse_report_aps(in);
    };
    auto aps_a = read_aps(path_a);
    auto aps_b = read_aps(path_b);

    std::set<std::string> queries_a, queries_b;
    for (const auto& [q, ap] : aps_a) queries_a.insert(q);
    for (const auto& [q, ap] : aps_b) queries_b.insert(q);
    if (queries_a != queries_b) {
        std::string diff;
        for (const auto& q : queries_a) {
            if (!queries_b.count(q)) diff += " -" + q;
        }
        for (const auto& q : queries_b) {
            if (!queries_a.count(q)) diff += " +" + q;
        }
        throw std::runtime_error("reports cover different query sets:" + diff);
    }

    std::map<std::string, double> by_query_b(aps_b.begin(), aps_b.end());
    std::vector<double> a, b;
    std::cout << "query\tAP_a\tAP_b\tdelta\n";
    for (const auto& [query, ap_a] : aps_a) {
        double ap_b = by_query_b.at(query);
        a.push_back(ap_a);
        b.push_back(ap_b);
        std::cout << query << '\t' << format4(ap_a) << '\t' << format4(ap_b) << '\t'
                  << format4(ap_a - ap_b) << '\n';
    }
    double p = randomization_test(a, b, iterations, seed);
    std::cout << "p-value\t" << format4(p) << (p < 0.1 ? "\t*" : "") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expertfind: multisensor academic expert search"};
    app.require_subcommand(1);

    std::string corpus_path, index_path, out_path, query_text, qrels_path;
    std::string sensors = "text,citation";
    std::string fusion = "combsum";
    std::string evidence = "ds";
    std::size_t depth = 10;
    bool verbose = false;
    std::string report_a, report_b;
    std::size_t iterations = 100000;
    std::uint64_t seed = 42;

    auto* index_cmd = app.add_subcommand("index", "build an index artifact from a corpus file");
    index_cmd->add_option("--corpus", corpus_path, "line-delimited JSON corpus")->required();
    index_cmd->add_option("--out", out_path, "artifact output path")->required();

    auto* search_cmd = app.add_subcommand("search", "rank experts for a query");
    search_cmd->add_option("--index", index_path, "index artifact")->required();
    search_cmd->add_option("--query", query_text, "topic query")->required();
    search_cmd->add_option("--sensors", sensors, "comma list of text,profile,citation");
    search_cmd->add_option("--fusion", fusion, "combsum|borda|condorcet");
    search_cmd->add_option("--evidence", evidence, "ds|plain");
    search_cmd->add_option("--k", depth, "rows to print")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--verbose", verbose, "print per-sensor diagnostics");

    auto* eval_cmd = app.add_subcommand("evaluate", "score ranked lists against qrels");
    eval_cmd->add_option("--index", index_path, "index artifact")->required();
    eval_cmd->add_option("--qrels", qrels_path, "tab-separated judgments")->required();
    eval_cmd->add_option("--sensors", sensors, "comma list of text,profile,citation");
    eval_cmd->add_option("--fusion", fusion, "combsum|borda|condorcet");
    eval_cmd->add_option("--evidence", evidence, "ds|plain");
    std::size_t eval_depth = 100;
    eval_cmd->add_option("--k", eval_depth, "ranking truncation depth")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--out", out_path, "write the report here instead of stdout");

    auto* compare_cmd = app.add_subcommand("compare", "paired randomization test of two reports");
    compare_cmd->add_option("--a", report_a, "first evaluation report")->required();
    compare_cmd->add_option("--b", report_b, "second evaluation report")->required();
    compare_cmd->add_option("--iterations", iterations, "randomization iterations");
    compare_cmd->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (index_cmd->parsed()) {
            return cmd_index(corpus_path, out_path);
        }
        RunConfig config;
        config.corpus_path = corpus_path;
        config.index_path = index_path;
        config.sensors = parse_sensor_list(sensors);
        config.fusion = parse_fusion_method(fusion);
        config.evidence = parse_evidence_mode(evidence);
        config.verbose = verbose;
        config.seed = seed;
        if (search_cmd->parsed()) {
            config.depth = depth;
            return cmd_search(query_text, config);
        }
        if (eval_cmd->parsed()) {
            config.depth = eval_depth;
            return cmd_evaluate(qrels_path, config, out_path);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(report_a, report_b, iterations, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
