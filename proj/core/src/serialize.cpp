#include "fardiff/serialize.hpp"

#include <iomanip>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "fardiff/error.hpp"

namespace fardiff {
namespace {

using Json = nlohmann::ordered_json;

Json params_json(const ArtParams& p) {
    return Json{{"alpha", p.alpha},
                {"beta", p.beta},
                {"rho", p.rho},
                {"complement_coding", p.complement_coding},
                {"max_epochs", p.max_epochs}};
}

}  // namespace

std::string model_to_json(const ArtModel& model) {
    Json doc;
    doc["params"] = params_json(model.params);
    doc["input_dim"] = model.input_dim;
    doc["weights"] = model.weights;
    return doc.dump(2) + "\n";
}

ArtModel model_from_json(std::string_view text) {
    ArtModel model;
    try {
        const Json doc = Json::parse(text);
        const Json& p = doc.at("params");
        model.params.alpha = p.at("alpha").get<double>();
        model.params.beta = p.at("beta").get<double>();
        model.params.rho = p.at("rho").get<double>();
        model.params.complement_coding = p.at("complement_coding").get<bool>();
        model.params.max_epochs = p.at("max_epochs").get<int>();
        model.input_dim = doc.at("input_dim").get<Index>();
        model.weights = doc.at("weights").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed model document: ") + e.what());
    }
    model.params.validate();
    if (model.input_dim < 1) throw InputError("model input_dim must be >= 1");
    for (const auto& w : model.weights) {
        if (static_cast<Index>(w.size()) != model.coded_dim()) {
            throw InputError("model weight vector has " + std::to_string(w.size()) + " components, expected " +
                             std::to_string(model.coded_dim()));
        }
        for (double v : w) {
            if (!(v >= 0.0 && v <= 1.0)) throw InputError("model weight outside [0,1]");
        }
    }
    return model;
}

std::string report_to_json(const RunReport& report, std::string_view source, std::optional<std::uint64_t> seed) {
    Json doc;
    doc["sigma"] = report.sigma;
    doc["sigma_source"] = report.sigma_from_median ? "median" : "explicit";
    doc["t"] = report.t;
    doc["L"] = report.dims;
    doc["skip_trivial"] = report.skip_trivial;
    doc["art"] = params_json(report.art);
    doc["n_points"] = report.n_points;
    doc["n_categories"] = report.n_categories;
    doc["epochs"] = report.epochs;
    doc["converged"] = report.converged;
    doc["eigenvalues"] = report.eigenvalues;
    if (!source.empty()) doc["source"] = std::string(source);
    if (seed) doc["seed"] = *seed;
    return doc.dump(2) + "\n";
}

std::string embedding_metadata_json(const DiffusionEmbedding& embedding, double sigma, const Vector& eigenvalues) {
    Json doc;
    doc["sigma"] = sigma;
    doc["t"] = embedding.t;
    doc["L"] = embedding.dims;
    doc["skip_trivial"] = embedding.skip_trivial;
    doc["eigenvalues"] = std::vector<double>(eigenvalues.begin(), eigenvalues.end());
    return doc.dump(2) + "\n";
}

void write_embedding_csv(std::ostream& out, const DiffusionEmbedding& embedding,
                         const std::optional<std::vector<std::string>>& ids) {
    if (ids) out << "id,";
    for (Index c = 0; c < embedding.dims; ++c) out << (c ? "," : "") << "psi" << c;
    out << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (Index i = 0; i < embedding.coords.rows(); ++i) {
        if (ids) out << (*ids)[static_cast<std::size_t>(i)] << ',';
        for (Index c = 0; c < embedding.dims; ++c) out << (c ? "," : "") << embedding.coords(i, c);
        out << '\n';
    }
}

void write_assignment_csv(std::ostream& out, const Assignment& assignment,
                          const std::optional<std::vector<std::string>>& ids) {
    out << "id,category\n";
    for (std::size_t i = 0; i < assignment.category.size(); ++i) {
        if (ids) {
            out << (*ids)[i];
        } else {
            out << i;
        }
        out << ',' << assignment.category[i] << '\n';
    }
}

}  // namespace fardiff
