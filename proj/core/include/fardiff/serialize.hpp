#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fardiff/diffusion.hpp"
#include "fardiff/fuzzyart.hpp"
#include "fardiff/pipeline.hpp"

namespace fardiff {

/// {"params": {...}, "input_dim": m, "weights": [[...], ...]}
std::string model_to_json(const ArtModel& model);
ArtModel model_from_json(std::string_view text);

std::string report_to_json(const RunReport& report, std::string_view source = {},
                           std::optional<std::uint64_t> seed = std::nullopt);

/// Sidecar for an exported embedding: sigma, t, L, skip_trivial, eigenvalues.
std::string embedding_metadata_json(const DiffusionEmbedding& embedding, double sigma,
                                    const Vector& eigenvalues);

/// Header `[id,]psi0,...,psi{L-1}`; ids are written when provided.
void write_embedding_csv(std::ostream& out, const DiffusionEmbedding& embedding,
                         const std::optional<std::vector<std::string>>& ids);

/// Header `id,category`; ids default to the 0-based row index.
void write_assignment_csv(std::ostream& out, const Assignment& assignment,
                          const std::optional<std::vector<std::string>>& ids);

}  // namespace fardiff
