#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fardiff/fardiff.hpp"

namespace fardiff::cli {
namespace {

struct CsvFlags {
    std::string input;
    bool header = false;
    std::string label_column;
    bool id_column = false;

    CsvOptions options() const {
        CsvOptions o;
        o.has_header = header;
        if (!label_column.empty()) o.label_column = label_column;
        o.id_column = id_column;
        return o;
    }
};

struct ArtFlags {
    ArtParams params;
    bool no_complement = false;

    ArtParams resolved() const {
        ArtParams p = params;
        p.complement_coding = !no_complement;
        return p;
    }
};

struct EmbedFlags {
    std::optional<double> sigma;
    int t = 1;
    Index dims = 2;
    bool skip_trivial = false;
    unsigned threads = 1;
};

struct Options {
    CsvFlags csv;
    ArtFlags art;
    EmbedFlags embed;
    std::string out;
    std::string meta;
    std::string model;
    std::string report;
    std::string data_out;
    std::string generate;
    std::string config;
    std::uint64_t seed = 42;
    std::string pred;
    std::string truth;
    std::string pred_column = "category";
    std::string truth_column = "label";
};

// The input positional stays optional at parse time so a config file can
// supply it; commands check for it before loading.
void add_csv_flags(CLI::App* cmd, CsvFlags& f) {
    cmd->add_option("input", f.input, "Input CSV file");
    cmd->add_flag("--header", f.header, "First row is a header");
    cmd->add_option("--label-column", f.label_column,
                    "Label column (header name, or 0-based index without a header)");
    cmd->add_flag("--id-column", f.id_column, "First column holds row ids");
}

void add_art_flags(CLI::App* cmd, ArtFlags& f) {
    cmd->add_option("--alpha", f.params.alpha, "Choice parameter (> 0)")->capture_default_str();
    cmd->add_option("--beta", f.params.beta, "Learning rate in [0,1]")->capture_default_str();
    cmd->add_option("--rho", f.params.rho, "Vigilance in [0,1]")->capture_default_str();
    cmd->add_option("--max-epochs", f.params.max_epochs, "Epoch cap")->capture_default_str();
    cmd->add_flag("--no-complement", f.no_complement, "Disable complement coding");
}

void add_embed_flags(CLI::App* cmd, EmbedFlags& f) {
    cmd->add_option("--sigma", f.sigma, "Kernel width (default: median pairwise distance)");
    cmd->add_option("--t", f.t, "Diffusion time")->capture_default_str();
    cmd->add_option("--L", f.dims, "Embedding dimension")->capture_default_str();
    cmd->add_flag("--skip-trivial", f.skip_trivial, "Drop the constant eigenvector");
    cmd->add_option("--threads", f.threads, "Worker threads for the affinity matrix")->capture_default_str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file '" + path + "'");
    return out;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
    if (path.empty()) {
        write(fallback);
    } else {
        auto file = open_output(path);
        write(file);
    }
}

// ---------------------------------------------------------------------------
// Config file: `key = value` lines, `#` comments. Keys are long option
// names with dashes or underscores; `input` sets the positional input.
// Values only fill options that were not given on the command line.

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void apply_config(CLI::App* cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw InputError(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key(trim(text.substr(0, eq)));
        const std::string value(trim(text.substr(eq + 1)));
        std::replace(key.begin(), key.end(), '_', '-');
        CLI::Option* opt = key == "input" ? cmd->get_option_no_throw("input")
                                          : cmd->get_option_no_throw("--" + key);
        if (opt == nullptr || key == "config") {
            throw InputError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "' for '" +
                             cmd->get_name() + "'");
        }
        if (opt->count() > 0) continue;
        if (opt->get_type_size() == 0) {
            if (value == "true" || value == "1") {
                opt->add_result("true");
            } else if (value == "false" || value == "0") {
                continue;
            } else {
                throw InputError(path + ":" + std::to_string(line_no) + ": flag '" + key +
                                 "' expects true or false");
            }
        } else {
            opt->add_result(value);
        }
        try {
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
}

// ---------------------------------------------------------------------------
// Generator specs: `rings[:key=value,...]` or `blobs[:key=value,...]`.

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("generator parameter '" + key + "': cannot parse '" + text + "'");
    }
    return value;
}

std::map<std::string, std::string> parse_kv(std::string_view body) {
    std::map<std::string, std::string> kv;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto item = trim(body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InputError("generator parameter '" + std::string(item) + "' lacks '='");
        kv[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
    }
    return kv;
}

DataSet generate_from_spec(const std::string& spec, std::uint64_t seed) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const auto kv = parse_kv(colon == std::string::npos ? std::string_view{} : std::string_view(spec).substr(colon + 1));
    if (kind == "rings") {
        RingSpec r;
        r.seed = seed;
        for (const auto& [key, value] : kv) {
            if (key == "n_inner") r.n_inner = parse_number<int>(key, value);
            else if (key == "n_outer") r.n_outer = parse_number<int>(key, value);
            else if (key == "r_inner") r.r_inner = parse_number<double>(key, value);
            else if (key == "r_outer") r.r_outer = parse_number<double>(key, value);
            else if (key == "noise") r.noise = parse_number<double>(key, value);
            else throw InputError("unknown rings parameter '" + key + "'");
        }
        return generate_rings(r);
    }
    if (kind == "blobs") {
        BlobSpec b;
        b.seed = seed;
        for (const auto& [key, value] : kv) {
            if (key == "k") b.k = parse_number<int>(key, value);
            else if (key == "n_per") b.n_per = parse_number<int>(key, value);
            else if (key == "m") b.m = parse_number<int>(key, value);
            else if (key == "spread") b.spread = parse_number<double>(key, value);
            else if (key == "separation") b.separation = parse_number<double>(key, value);
            else throw InputError("unknown blobs parameter '" + key + "'");
        }
        return generate_blobs(b);
    }
    throw InputError("unknown generator '" + kind + "' (expected rings or blobs)");
}

// ---------------------------------------------------------------------------
// Label columns for eval. Values are integers; -1 marks a no-match row.

std::vector<int> read_int_column(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::string line;
    std::optional<std::size_t> col;
    std::size_t width = 0;
    std::vector<int> values;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.emplace_back(trim(cell));
        if (!col) {
            width = cells.size();
            const auto it = std::find(cells.begin(), cells.end(), column);
            col = it != cells.end() ? static_cast<std::size_t>(it - cells.begin()) : cells.size() - 1;
            continue;
        }
        if (cells.size() != width) {
            throw InputError(path + ": row " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                             " fields, expected " + std::to_string(width));
        }
        const std::string& cell = cells[*col];
        int v = 0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
            throw InputError(path + ": row " + std::to_string(line_no) + ": '" + cell + "' is not an integer label");
        }
        values.push_back(v);
    }
    if (!col) throw InputError(path + ": empty file");
    return values;
}

// ---------------------------------------------------------------------------

void require_input(const Options& o) {
    if (o.csv.input.empty()) throw InputError("missing input CSV path");
}

int cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
    require_input(o);
    const DataSet data = load_csv(o.csv.input, o.csv.options());
    const double sigma = o.embed.sigma ? *o.embed.sigma : median_sigma(data);
    const MarkovModel model = markov_normalize(gaussian_affinity(data, sigma, o.embed.threads), sigma);
    const Spectrum spectrum = spectral_decompose(model);
    const DiffusionEmbedding embedding = embed(spectrum, o.embed.t, o.embed.dims, o.embed.skip_trivial);

    emit(o.out, out, [&](std::ostream& s) { write_embedding_csv(s, embedding, data.ids()); });
    const std::string meta_path = !o.meta.empty() ? o.meta : (o.out.empty() ? std::string{} : o.out + ".meta.json");
    if (!meta_path.empty()) {
        auto file = open_output(meta_path);
        file << embedding_metadata_json(embedding, sigma, spectrum.eigenvalues);
    }
    err << "embed: " << data.size() << " points -> L=" << embedding.dims << " (sigma=" << sigma << ", t=" << embedding.t
        << ")\n";
    return kExitOk;
}

int cmd_cluster(const Options& o, std::ostream& out, std::ostream& err) {
    require_input(o);
    const DataSet data = load_csv(o.csv.input, o.csv.options());
    const TrainResult result = train(minmax_normalize(data.points()), o.art.resolved());
    emit(o.out, out, [&](std::ostream& s) { write_assignment_csv(s, result.assignment, data.ids()); });
    if (!o.model.empty()) {
        auto file = open_output(o.model);
        file << model_to_json(result.model);
    }
    err << "cluster: " << data.size() << " points -> " << result.assignment.n_categories << " categories in "
        << result.epochs << " epochs" << (result.converged ? "" : " (epoch cap reached)") << '\n';
    return kExitOk;
}

int cmd_pipeline(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.csv.input.empty() == o.generate.empty()) {
        throw InputError("pipeline needs exactly one of an input file or --generate");
    }
    const DataSet data = o.generate.empty() ? load_csv(o.csv.input, o.csv.options()) : generate_from_spec(o.generate, o.seed);
    if (!o.data_out.empty()) save_csv(data, std::filesystem::path(o.data_out));

    FardiffConfig config;
    config.sigma = o.embed.sigma;
    config.t = o.embed.t;
    config.dims = o.embed.dims;
    config.skip_trivial = o.embed.skip_trivial;
    config.art = o.art.resolved();
    config.threads = o.embed.threads;
    const FardiffResult result = fardiff_cluster(data, config);

    emit(o.out, out, [&](std::ostream& s) { write_assignment_csv(s, result.assignment, data.ids()); });
    if (!o.report.empty()) {
        const std::string source = o.generate.empty() ? "file:" + o.csv.input : "generate:" + o.generate;
        auto file = open_output(o.report);
        file << report_to_json(result.report, source,
                               o.generate.empty() ? std::nullopt : std::optional<std::uint64_t>(o.seed));
    }
    if (!o.model.empty()) {
        auto file = open_output(o.model);
        file << model_to_json(result.model);
    }
    err << "pipeline: " << data.size() << " points, sigma=" << result.report.sigma << " -> "
        << result.report.n_categories << " categories in " << result.report.epochs << " epochs\n";
    return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream&) {
    const auto pred = read_int_column(o.pred, o.pred_column);
    const auto truth = read_int_column(o.truth, o.truth_column);
    if (pred.size() != truth.size()) {
        throw InputError("length mismatch: " + o.pred + " has " + std::to_string(pred.size()) + " rows, " + o.truth +
                         " has " + std::to_string(truth.size()));
    }
    const ContingencyTable table = contingency(pred, truth);
    nlohmann::ordered_json doc;
    doc["ari"] = adjusted_rand_index(pred, truth);
    doc["purity"] = purity(pred, truth);
    doc["n_categories"] = table.categories.size();
    doc["n_labels"] = table.labels.size();
    emit(o.out, out, [&](std::ostream& s) { s << doc.dump(2) << '\n'; });
    return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
    const DataSet data = generate_from_spec(o.generate, o.seed);
    emit(o.out, out, [&](std::ostream& s) { save_csv(data, s); });
    err << "generate: " << data.size() << " points in " << data.dim() << " dimensions\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Diffusion-map embedding and Fuzzy ART clustering", "fardiff"};
    app.require_subcommand(1);

    auto* embed_cmd = app.add_subcommand("embed", "Diffusion-map embedding of a CSV point cloud");
    add_csv_flags(embed_cmd, o.csv);
    add_embed_flags(embed_cmd, o.embed);
    embed_cmd->add_option("--out", o.out, "Embedding CSV (default: stdout)");
    embed_cmd->add_option("--meta", o.meta, "Metadata JSON (default: <out>.meta.json)");

    auto* cluster_cmd = app.add_subcommand("cluster", "Fuzzy ART on min-max normalized CSV data");
    add_csv_flags(cluster_cmd, o.csv);
    add_art_flags(cluster_cmd, o.art);
    cluster_cmd->add_option("--out", o.out, "Assignment CSV (default: stdout)");
    cluster_cmd->add_option("--model", o.model, "Trained model JSON");

    auto* pipeline_cmd = app.add_subcommand("pipeline", "Embedding followed by Fuzzy ART");
    add_csv_flags(pipeline_cmd, o.csv);
    add_embed_flags(pipeline_cmd, o.embed);
    add_art_flags(pipeline_cmd, o.art);
    pipeline_cmd->add_option("--generate", o.generate, "Synthetic input, e.g. rings or blobs:k=3,n_per=50");
    pipeline_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    pipeline_cmd->add_option("--out", o.out, "Assignment CSV (default: stdout)");
    pipeline_cmd->add_option("--report", o.report, "Run report JSON");
    pipeline_cmd->add_option("--model", o.model, "Trained model JSON");
    pipeline_cmd->add_option("--data-out", o.data_out, "Write the input data set (with labels) as CSV");

    auto* eval_cmd = app.add_subcommand("eval", "Score an assignment against reference labels");
    eval_cmd->add_option("pred", o.pred, "Assignment CSV")->required();
    eval_cmd->add_option("truth", o.truth, "Reference CSV")->required();
    eval_cmd->add_option("--pred-column", o.pred_column, "Column in pred (default: category, else last)");
    eval_cmd->add_option("--truth-column", o.truth_column, "Column in truth (default: label, else last)");
    eval_cmd->add_option("--out", o.out, "Metrics JSON (default: stdout)");

    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic labelled data set");
    generate_cmd->add_option("spec", o.generate, "rings[:key=value,...] or blobs[:key=value,...]")->required();
    generate_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    generate_cmd->add_option("--out", o.out, "Output CSV (default: stdout)");

    for (auto* cmd : {embed_cmd, cluster_cmd, pipeline_cmd, eval_cmd, generate_cmd}) {
        cmd->add_option("--config", o.config, "key = value file; command-line flags take precedence");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitInput;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        if (!o.config.empty()) apply_config(active, o.config);
        const std::string& name = active->get_name();
        if (name == "embed") return cmd_embed(o, out, err);
        if (name == "cluster") return cmd_cluster(o, out, err);
        if (name == "pipeline") return cmd_pipeline(o, out, err);
        if (name == "eval") return cmd_eval(o, out, err);
        return cmd_generate(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Numeric ? kExitNumeric : kExitInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace fardiff::cli
