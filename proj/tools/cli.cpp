#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <k33lab/coefficient_table.hpp>
#include <k33lab/decomposition.hpp>
#include <k33lab/errors.hpp>
#include <k33lab/graph_io.hpp>
#include <k33lab/oracle.hpp>
#include <k33lab/pipeline.hpp>
#include <k33lab/planar_basis.hpp>
#include <k33lab/reference_data.hpp>

#include "verify.hpp"

namespace k33lab::cli
{

namespace
{

struct RunConfig {
    std::string class_name = "F";
    int nmax = 10;
    std::vector<std::string> basis_paths;
    std::string format = "csv";
    std::string output;
    int workers = default_workers();
    bool extended = false;
    bool live = false;
    std::string graph_path;
    int oracle_n = 0;
    bool planarity_first = false;
    std::string basis_action;
    std::string basis_file;
    int basis_n = 0;
    int indent = 2;
};

// Union of the given basis files, or the shipped oracle table.
CoefficientTable load_basis(const std::vector<std::string> &paths)
{
    if (paths.empty()) {
        return embedded_planar_basis();
    }
    CoefficientTable merged = load_table(paths.front());
    for (std::size_t i = 1; i < paths.size(); ++i) {
        const CoefficientTable t = load_table(paths[i]);
        if (t.class_name != merged.class_name) {
            throw ParseError(paths[i], 0, "class " + t.class_name + " does not match " + merged.class_name);
        }
        for (const auto &[key, count] : t.records) {
            const auto [it, inserted] = merged.records.emplace(key, count);
            if (!inserted && it->second != count) {
                throw ParseError(paths[i], 0,
                                 "conflicting record " + std::to_string(key.first) + " " + std::to_string(key.second));
            }
        }
        merged.nmax = std::max(merged.nmax, t.nmax);
        if (t.provenance != merged.provenance) {
            merged.provenance = Provenance::imported;
        }
    }
    return merged;
}

void write_output(const std::string &text, const std::string &path, std::ostream &out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw ParseError(path, 0, "cannot write output");
    }
}

std::string render(const CoefficientTable &t, const std::string &format)
{
    std::map<int, Integer> totals;
    for (const auto &[key, count] : t.records) {
        totals[key.first] += count;
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "n,m,count\n";
        for (const auto &[key, count] : t.records) {
            os << key.first << ',' << key.second << ',' << count.get_str() << '\n';
        }
        for (const auto &[n, total] : totals) {
            os << n << ",all," << total.get_str() << '\n';
        }
    } else if (format == "json") {
        nlohmann::ordered_json doc;
        doc["class"] = t.class_name;
        doc["nmax"] = t.nmax;
        doc["provenance"] = std::string(to_string(t.provenance));
        auto records = nlohmann::ordered_json::array();
        for (const auto &[key, count] : t.records) {
            records.push_back({{"n", key.first}, {"m", key.second}, {"count", count.get_str()}});
        }
        doc["records"] = std::move(records);
        nlohmann::ordered_json tot = nlohmann::ordered_json::object();
        for (const auto &[n, total] : totals) {
            tot[std::to_string(n)] = total.get_str();
        }
        doc["totals"] = std::move(tot);
        os << doc.dump(2) << '\n';
    } else {
        os << to_text(t);
        for (const auto &[n, total] : totals) {
            os << "# total n=" << n << " count=" << total.get_str() << '\n';
        }
    }
    return os.str();
}

int cmd_tables(const RunConfig &cfg, std::ostream &out)
{
    const CoefficientTable basis = load_basis(cfg.basis_paths);
    const BivarSeries s = class_series(cfg.class_name, cfg.nmax, basis);
    write_output(render(table_from_series(s, cfg.class_name, Provenance::computed), cfg.format), cfg.output, out);
    return exit_ok;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    const CoefficientTable basis = load_basis(cfg.basis_paths);
    VerifyOptions options;
    options.workers = cfg.workers;
    if (cfg.basis_paths.empty()) {
        options.p = cfg.extended ? 8 : 7;
    }
    options.oracle_n = cfg.live ? 7 : 6;
    out << (cfg.extended ? "suite: extended\n" : "suite: fast\n");
    const VerifyReport report = run_verification(basis, options, out);
    return report.failures == 0 ? exit_ok : exit_mismatch;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out)
{
    const Graph g = read_graph_file(cfg.graph_path);
    const DecomposeResult result = decompose(g);
    out << decomposition_json(g, result, cfg.indent) << '\n';
    return exit_ok;
}

int cmd_oracle(const RunConfig &cfg, std::ostream &out)
{
    const auto cls = parse_oracle_class(cfg.class_name);
    if (!cls) {
        throw InputError("unknown oracle class " + cfg.class_name);
    }
    OracleOptions options;
    options.workers = cfg.workers;
    options.planarity_first = cfg.planarity_first;
    const EdgeCounts counts = oracle_count(*cls, cfg.oracle_n, options);
    std::ostringstream os;
    os << "# class=" << to_string(*cls) << '\n' << "# n=" << cfg.oracle_n << '\n' << "# provenance=oracle\n";
    std::uint64_t total = 0;
    for (const auto &[m, count] : counts) {
        os << cfg.oracle_n << ' ' << m << ' ' << count << '\n';
        total += count;
    }
    os << "# total=" << total << '\n';
    write_output(os.str(), cfg.output, out);
    return exit_ok;
}

int cmd_basis(const RunConfig &cfg, std::ostream &out)
{
    if (cfg.basis_action == "compute") {
        OracleOptions options;
        options.workers = cfg.workers;
        const CoefficientTable t = planar_basis_table(cfg.basis_n, options);
        write_output(to_text(t), cfg.output, out);
        return exit_ok;
    }
    if (cfg.basis_action == "load") {
        const CoefficientTable t = load_table(cfg.basis_file);
        out << "class=" << t.class_name << " nmax=" << t.nmax << " provenance=" << to_string(t.provenance)
            << " records=" << t.records.size() << '\n';
        for (int n = 0; n <= t.nmax; ++n) {
            const Integer total = t.total(n);
            if (total != 0) {
                out << "n=" << n << " total=" << total.get_str() << '\n';
            }
        }
        return exit_ok;
    }
    // export
    CoefficientTable t = load_basis(cfg.basis_paths);
    if (cfg.basis_n > 0) {
        if (cfg.basis_n > t.nmax) {
            throw BasisError("basis stops at n = " + std::to_string(t.nmax), t.nmax + 1);
        }
        std::erase_if(t.records, [&](const auto &kv) { return kv.first.first > cfg.basis_n; });
        t.nmax = cfg.basis_n;
    }
    write_output(to_text(t), cfg.output, out);
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Labelled enumeration of K3,3-free projective-planar graphs"};
    app.name("k33lab");
    app.require_subcommand(1);
    const auto workers_check = CLI::Range(1, 1024);

    auto *tables = app.add_subcommand("tables", "Compute a class table from the planar basis");
    tables->add_option("--class", cfg.class_name, "F, HP, HF, CF, Gsp, P, R, S or Ppar")
        ->check(CLI::IsMember(series_class_names()));
    tables->add_option("--nmax", cfg.nmax, "Largest vertex count")->check(CLI::NonNegativeNumber);
    tables->add_option("--format", cfg.format, "csv, json or table")
        ->check(CLI::IsMember({"csv", "json", "table", "table-text"}));
    tables->add_option("--basis", cfg.basis_paths, "P2planar table file(s); default is the shipped table");
    tables->add_option("--out", cfg.output, "Write to a file instead of stdout");
    tables->add_option("--workers", cfg.workers, "Worker threads")->check(workers_check);

    auto *verify = app.add_subcommand("verify", "Recompute all classes and check them against reference values");
    verify->add_flag("--extended", cfg.extended, "Use the planar basis to n=8");
    verify->add_flag("--live", cfg.live, "Run the exhaustive oracle agreement up to n=7");
    verify->add_option("--basis", cfg.basis_paths, "P2planar table file(s)");
    verify->add_option("--workers", cfg.workers, "Worker threads")->check(workers_check);

    auto *decomp = app.add_subcommand("decompose", "Membership test and side decomposition of a graph file");
    decomp->add_option("file", cfg.graph_path, "Graph file")->required();
    decomp->add_option("--indent", cfg.indent, "JSON indent");

    auto *oracle = app.add_subcommand("oracle", "Exhaustive count of one class on n vertices");
    oracle->add_option("--class", cfg.class_name, "P2planar, Gsp, HP, F or HF")->required();
    oracle->add_option("--n", cfg.oracle_n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--workers", cfg.workers, "Worker threads")->check(workers_check);
    oracle->add_option("--out", cfg.output, "Write to a file instead of stdout");
    oracle->add_flag("--planarity-first", cfg.planarity_first, "Test planarity before 2-connectivity");

    auto *basis = app.add_subcommand("basis", "Compute, load or export the planar basis");
    basis->require_subcommand(1);
    auto *compute = basis->add_subcommand("compute", "Run the planar oracle for 2 <= n <= N");
    compute->add_option("--n", cfg.basis_n, "Largest vertex count")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--out", cfg.output, "Output file");
    compute->add_option("--workers", cfg.workers, "Worker threads")->check(workers_check);
    auto *load = basis->add_subcommand("load", "Validate a table file and print its totals");
    load->add_option("file", cfg.basis_file, "Table file")->required();
    auto *exp = basis->add_subcommand("export", "Write the basis in table format");
    exp->add_option("--basis", cfg.basis_paths, "P2planar table file(s)");
    exp->add_option("--n", cfg.basis_n, "Truncate to this vertex count")->check(CLI::NonNegativeNumber);
    exp->add_option("--out", cfg.output, "Output file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_io;
    }
    if (compute->parsed()) {
        cfg.basis_action = "compute";
    } else if (load->parsed()) {
        cfg.basis_action = "load";
    } else if (exp->parsed()) {
        cfg.basis_action = "export";
    }

    try {
        if (tables->parsed()) {
            return cmd_tables(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        if (decomp->parsed()) {
            return cmd_decompose(cfg, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(cfg, out);
        }
        return cmd_basis(cfg, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const BasisError &e) {
        err << "error: " << e.what() << '\n';
        return exit_limits;
    } catch (const SizeLimitError &e) {
        err << "error: " << e.what() << '\n';
        return exit_limits;
    } catch (const IntegralityError &e) {
        err << "error: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    }
}

} // namespace k33lab::cli
