#pragma once

#include <string>

#include <json.hpp>

#include "hgnoise/channel.hpp"
#include "hgnoise/distribution.hpp"
#include "hgnoise/hypergraph.hpp"
#include "hgnoise/pec.hpp"
#include "hgnoise/sampler.hpp"

namespace hgnoise {

std::string mask_to_hex(mask_t m);
mask_t mask_from_hex(const std::string& s);

// {"n": int, "edges": [[int,...],...]} with 1-based vertices
nlohmann::json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

// {"n": int, "terms": [{"bx": hex, "bz": hex, "rate": float}]}
nlohmann::json to_json(const PauliChannel& c);
PauliChannel channel_from_json(const nlohmann::json& j);

// {"n": int, "kind": "prob"|"quasi", "entries": [{"mask": hex, "value": f}]}
nlohmann::json to_json(const Distribution& d);
Distribution distribution_from_json(const nlohmann::json& j);

// {"n", "seed", "shots", "max_power", "powers": [{"j", "counts": [...]}]}
nlohmann::json to_json(const SampleBatch& b);
SampleBatch batch_from_json(const nlohmann::json& j);
std::string batch_to_csv(const SampleBatch& b);

// {"kind": "exact"|"approx", "l1_norm": f, "q": <distribution>}
nlohmann::json to_json(const PecPlan& p);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hgnoise
