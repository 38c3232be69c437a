#pragma once

#include <optional>

#include "dfm/classify.hpp"
#include "dfm/decomp.hpp"
#include "dfm/matrix_io.hpp"
#include "dfm/newton.hpp"
#include "dfm/wronski.hpp"

namespace dfm {

// JSON payloads of the CLI reports. The layout is documented in
// docs/report.schema.json; keys are emitted in a fixed order.

Json to_json(const CanonicalDecomposition& d);
Json to_json(const TypeReport& r);
Json to_json(const Decomposition& d);
Json to_json(const IndependenceReport& r, std::span<const RatFunc> inputs);
Json to_json(const newton::ExperimentSummary& s);
Json polyf_to_json(const PolyF& p);
Json vec_to_json(const VecF& v);

/// Diagonalization payload; `found` false means not found within the bound.
Json diagonalization_json(const std::optional<KDiagonalization>& d, int root_bound);

}  // namespace dfm
