#include "cmspec/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmspec/lr.hpp"
#include "cmspec/oracle.hpp"
#include "cmspec/partitions.hpp"
#include "cmspec/spectra.hpp"
#include "json.hpp"

namespace cmspec {

namespace {

using nlohmann::json;

struct Options {
    std::string alpha, beta, gamma, eta, batch;
    std::string format = "text";
    int max_n = 8;
    bool allow_n7 = false;
};

Partition parse_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

// beta is optional on the tableau commands; an absent flag means the empty
// inner shape.
Partition parse_optional_flag(const std::string& flag, const std::string& text) {
    if (text.empty()) return Partition{};
    return parse_flag(flag, text);
}

std::vector<Partition> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("--batch: cannot open '" + path + "'");
    std::vector<Partition> etas;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string text = line.substr(first, last - first + 1);
        try {
            etas.push_back(parse_partition(text));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("--batch: line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
    if (etas.empty()) throw std::invalid_argument("--batch: no shapes in '" + path + "'");
    return etas;
}

json spectrum_json(const SpectrumMultiset& s) {
    json pairs = json::array();
    for (const auto& [value, mult] : s.entries())
        pairs.push_back(json::array({std::to_string(value), mult}));
    return pairs;
}

void spectrum_text(const SpectrumMultiset& s, std::ostream& out) {
    for (const auto& [value, mult] : s.entries()) out << value << ' ' << mult << '\n';
}

json block_json(const BlockReport& b) {
    return json{{"alpha", format_composition(b.alpha)},
                {"lambda_max", std::to_string(b.lambda_max)},
                {"spectrum", spectrum_json(b.spectrum)}};
}

json aldous_json(const AldousReport& r) {
    json blocks = json::array();
    for (const auto& b : r.blocks) blocks.push_back(block_json(b));
    return json{{"eta", format_composition(r.eta)},
                {"n", r.n},
                {"edge_count", r.edge_count},
                {"gap_graph", r.gap_graph},
                {"gap_cayley", r.gap_cayley},
                {"verdict", r.verdict},
                {"blocks", blocks}};
}

void aldous_text(const AldousReport& r, std::ostream& out) {
    out << "eta " << format_composition(r.eta) << '\n';
    out << "n " << r.n << '\n';
    out << "edge_count " << r.edge_count << '\n';
    out << "gap_graph " << r.gap_graph << '\n';
    out << "gap_cayley " << r.gap_cayley << '\n';
    for (const auto& b : r.blocks)
        out << "block " << format_composition(b.alpha) << " lambda_max " << b.lambda_max << '\n';
    for (const auto& a : r.argmax) out << "argmax " << format_composition(a) << '\n';
    out << "verdict " << (r.verdict ? "true" : "false") << '\n';
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

int run_spectrum(const Options& opt, std::ostream& out) {
    const Partition alpha = parse_flag("--alpha", opt.alpha);
    const MultipartiteShape shape(parse_flag("--eta", opt.eta));
    const SpectrumMultiset s = block_spectrum(alpha, shape);
    if (opt.format == "json") {
        emit(json{{"alpha", format_composition(alpha)},
                  {"eta", format_composition(shape.eta())},
                  {"lambda_max", std::to_string(s.max_eigenvalue())},
                  {"spectrum", spectrum_json(s)}},
             out);
    } else {
        spectrum_text(s, out);
    }
    return 0;
}

int run_lmax(const Options& opt, std::ostream& out) {
    const Partition alpha = parse_flag("--alpha", opt.alpha);
    const MultipartiteShape shape(parse_flag("--eta", opt.eta));
    const long long v = lambda_max(alpha, shape);
    if (opt.format == "json") {
        emit(json{{"alpha", format_composition(alpha)},
                  {"eta", format_composition(shape.eta())},
                  {"lambda_max", std::to_string(v)}},
             out);
    } else {
        out << v << '\n';
    }
    return 0;
}

std::vector<Partition> batch_or_single(const Options& opt, const std::string& command) {
    if (!opt.batch.empty()) return read_batch(opt.batch);
    if (opt.eta.empty())
        throw std::invalid_argument(command + ": one of --eta or --batch is required");
    return {parse_flag("--eta", opt.eta)};
}

int run_gap(const Options& opt, std::ostream& out) {
    const std::vector<Partition> etas = batch_or_single(opt, "gap");
    const bool batch = !opt.batch.empty();
    json reports = json::array();
    for (const auto& eta : etas) {
        const MultipartiteShape shape(eta);
        const long long graph = spectral_gap_graph(shape);
        const long long cayley = spectral_gap_cayley(shape, opt.max_n);
        if (opt.format == "json") {
            reports.push_back(json{{"eta", format_composition(eta)},
                                   {"n", shape.n()},
                                   {"edge_count", shape.edge_count()},
                                   {"gap_graph", graph},
                                   {"gap_cayley", cayley}});
        } else if (batch) {
            out << "eta " << format_composition(eta) << " graph " << graph << " cayley "
                << cayley << '\n';
        } else {
            out << "graph " << graph << '\n' << "cayley " << cayley << '\n';
        }
    }
    if (opt.format == "json") emit(batch ? reports : reports.front(), out);
    return 0;
}

int run_aldous(const Options& opt, std::ostream& out) {
    const std::vector<Partition> etas = batch_or_single(opt, "aldous");
    const bool batch = !opt.batch.empty();
    json reports = json::array();
    bool all_true = true;
    bool first = true;
    for (const auto& eta : etas) {
        const AldousReport r = verify_aldous(MultipartiteShape(eta), opt.max_n);
        all_true = all_true && r.verdict;
        if (opt.format == "json") {
            reports.push_back(aldous_json(r));
        } else {
            if (!first) out << '\n';
            aldous_text(r, out);
        }
        first = false;
    }
    if (opt.format == "json") emit(batch ? reports : reports.front(), out);
    return all_true ? 0 : 1;
}

int run_lr_coeff(const Options& opt, std::ostream& out) {
    const Partition alpha = parse_flag("--alpha", opt.alpha);
    const Partition beta = parse_optional_flag("--beta", opt.beta);
    const Partition gamma = parse_flag("--gamma", opt.gamma);
    const long long c = lr_coefficient(alpha, beta, gamma);
    if (opt.format == "json") {
        emit(json{{"alpha", format_composition(alpha)},
                  {"beta", format_composition(beta)},
                  {"gamma", format_composition(gamma)},
                  {"coefficient", c}},
             out);
    } else {
        out << c << '\n';
    }
    return 0;
}

int run_lr_tableaux(const Options& opt, std::ostream& out) {
    const Partition alpha = parse_flag("--alpha", opt.alpha);
    const Partition beta = parse_optional_flag("--beta", opt.beta);
    const std::vector<SkewTableau> tableaux = enumerate_lr_tableaux(SkewShape(alpha, beta));
    if (opt.format == "json") {
        json items = json::array();
        for (const auto& t : tableaux)
            items.push_back(json{{"content", format_composition(content(reading_word(t)))},
                                 {"rows", t.rows()}});
        emit(json{{"alpha", format_composition(alpha)},
                  {"beta", format_composition(beta)},
                  {"count", tableaux.size()},
                  {"tableaux", items}},
             out);
    } else {
        bool first = true;
        for (const auto& t : tableaux) {
            if (!first) out << '\n';
            out << t.render() << '\n';
            first = false;
        }
    }
    return 0;
}

int run_minimal_content(const Options& opt, std::ostream& out) {
    const Partition alpha = parse_flag("--alpha", opt.alpha);
    const Partition beta = parse_optional_flag("--beta", opt.beta);
    const Partition c = minimal_content(alpha, beta);
    if (opt.format == "json") {
        emit(json{{"alpha", format_composition(alpha)},
                  {"beta", format_composition(beta)},
                  {"content", format_composition(c)}},
             out);
    } else {
        out << format_composition(c) << '\n';
    }
    return 0;
}

struct OracleCheck {
    struct Entry {
        Partition alpha;
        oracle::SpectraComparison cmp;
    };
    Partition eta;
    int n = 0;
    std::vector<Entry> blocks;
    bool cayley_ran = false;
    std::string cayley_skip_reason;
    oracle::SpectraComparison cayley;
    bool ok = true;
};

OracleCheck run_oracle_suite(const Partition& eta, bool allow_n7) {
    OracleCheck check;
    check.eta = eta;
    const MultipartiteShape shape(eta);
    check.n = shape.n();
    for (const auto& alpha : enumerate_partitions(check.n)) {
        const auto eig = oracle::symmetric_eigenvalues(oracle::rep_block_matrix(alpha, shape));
        const auto cmp = oracle::compare_spectra(block_spectrum(alpha, shape), eig, 1e-8);
        check.ok = check.ok && cmp.ok;
        check.blocks.push_back({alpha, cmp});
    }
    if (check.n <= 6 || (check.n == 7 && allow_n7)) {
        const auto eig = oracle::symmetric_eigenvalues(oracle::cayley_laplacian(shape, check.n));
        check.cayley = oracle::compare_spectra(cayley_spectrum(shape), eig, 1e-8);
        check.cayley_ran = true;
        check.ok = check.ok && check.cayley.ok;
    } else if (check.n == 7) {
        check.cayley_skip_reason = "n = 7 needs --allow-n7";
    } else {
        check.cayley_skip_reason = "n > 7";
    }
    return check;
}

void oracle_check_text(const OracleCheck& c, std::ostream& out) {
    out << "eta " << format_composition(c.eta) << '\n';
    for (const auto& entry : c.blocks)
        out << "block " << format_composition(entry.alpha) << " count " << entry.cmp.count
            << " worst " << entry.cmp.worst_deviation << (entry.cmp.ok ? " ok" : " FAIL")
            << '\n';
    if (c.cayley_ran)
        out << "cayley count " << c.cayley.count << " worst " << c.cayley.worst_deviation
            << (c.cayley.ok ? " ok" : " FAIL") << '\n';
    else
        out << "cayley skipped (" << c.cayley_skip_reason << ")\n";
    out << (c.ok ? "PASS" : "FAIL") << '\n';
}

json oracle_check_json(const OracleCheck& c) {
    json blocks = json::array();
    for (const auto& entry : c.blocks)
        blocks.push_back(json{{"alpha", format_composition(entry.alpha)},
                              {"count", entry.cmp.count},
                              {"ok", entry.cmp.ok},
                              {"worst_deviation", entry.cmp.worst_deviation}});
    json j{{"eta", format_composition(c.eta)}, {"n", c.n}, {"ok", c.ok}, {"blocks", blocks}};
    if (c.cayley_ran)
        j["cayley"] = json{{"count", c.cayley.count},
                           {"ok", c.cayley.ok},
                           {"worst_deviation", c.cayley.worst_deviation}};
    return j;
}

int run_oracle_check(const Options& opt, std::ostream& out) {
    const std::vector<Partition> etas = batch_or_single(opt, "oracle-check");
    const bool batch = !opt.batch.empty();
    json reports = json::array();
    bool all_ok = true;
    bool first = true;
    for (const auto& eta : etas) {
        const OracleCheck check = run_oracle_suite(eta, opt.allow_n7);
        all_ok = all_ok && check.ok;
        if (opt.format == "json") {
            reports.push_back(oracle_check_json(check));
        } else {
            if (!first) out << '\n';
            oracle_check_text(check, out);
        }
        first = false;
    }
    if (opt.format == "json") emit(batch ? reports : reports.front(), out);
    return all_ok ? 0 : 1;
}

void add_format(CLI::App* sub, Options& opt) {
    sub->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

void add_eta_or_batch(CLI::App* sub, Options& opt) {
    auto* eta = sub->add_option("--eta", opt.eta, "block sizes, e.g. 4,3");
    auto* batch = sub->add_option("--batch", opt.batch, "file with one eta per line")
                      ->check(CLI::ExistingFile);
    eta->excludes(batch);
    batch->excludes(eta);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra of transposition-sum blocks of complete multipartite graphs"};
    app.require_subcommand(1);
    Options opt;

    auto* spectrum = app.add_subcommand(
        "spectrum", "eigenvalue multiset of the alpha block of the edge-sum operator");
    spectrum->add_option("--alpha", opt.alpha, "partition labelling the block")->required();
    spectrum->add_option("--eta", opt.eta, "block sizes, e.g. 4,3")->required();
    add_format(spectrum, opt);

    auto* lmax = app.add_subcommand("lmax", "largest eigenvalue of the alpha block");
    lmax->add_option("--alpha", opt.alpha, "partition labelling the block")->required();
    lmax->add_option("--eta", opt.eta, "block sizes, e.g. 4,3")->required();
    add_format(lmax, opt);

    auto* gap =
        app.add_subcommand("gap", "spectral gaps of the graph and of its Cayley graph");
    add_eta_or_batch(gap, opt);
    gap->add_option("--max-n", opt.max_n, "cap on n for the partition sweep")
        ->check(CLI::PositiveNumber);
    add_format(gap, opt);

    auto* aldous = app.add_subcommand(
        "aldous", "check that the graph and the Cayley graph have equal spectral gaps");
    add_eta_or_batch(aldous, opt);
    aldous->add_option("--max-n", opt.max_n, "cap on n for the partition sweep")
        ->check(CLI::PositiveNumber);
    add_format(aldous, opt);

    auto* lr_coeff = app.add_subcommand("lr-coeff", "Littlewood-Richardson coefficient");
    lr_coeff->add_option("--alpha", opt.alpha, "outer shape")->required();
    lr_coeff->add_option("--beta", opt.beta, "inner shape (default empty)");
    lr_coeff->add_option("--gamma", opt.gamma, "content")->required();
    add_format(lr_coeff, opt);

    auto* lr_tableaux =
        app.add_subcommand("lr-tableaux", "all lattice fillings of the skew shape alpha/beta");
    lr_tableaux->add_option("--alpha", opt.alpha, "outer shape")->required();
    lr_tableaux->add_option("--beta", opt.beta, "inner shape (default empty)");
    add_format(lr_tableaux, opt);

    auto* minimal = app.add_subcommand(
        "minimal-content", "dominance-least content among lattice fillings of alpha/beta");
    minimal->add_option("--alpha", opt.alpha, "outer shape")->required();
    minimal->add_option("--beta", opt.beta, "inner shape (default empty)");
    add_format(minimal, opt);

    auto* oracle_check = app.add_subcommand(
        "oracle-check", "cross-check exact spectra against brute-force matrices");
    add_eta_or_batch(oracle_check, opt);
    oracle_check->add_flag("--allow-n7", opt.allow_n7,
                           "run the n! x n! Cayley check at n = 7 (slow, ~200 MB)");
    add_format(oracle_check, opt);

    std::vector<const char*> argv;
    argv.push_back("cmspec");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(opt, out);
        if (lmax->parsed()) return run_lmax(opt, out);
        if (gap->parsed()) return run_gap(opt, out);
        if (aldous->parsed()) return run_aldous(opt, out);
        if (lr_coeff->parsed()) return run_lr_coeff(opt, out);
        if (lr_tableaux->parsed()) return run_lr_tableaux(opt, out);
        if (minimal->parsed()) return run_minimal_content(opt, out);
        if (oracle_check->parsed()) return run_oracle_check(opt, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cmspec
