#pragma once

#include "rdense/bounds.hpp"
#include "rdense/embedder.hpp"
#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/search.hpp"

#include "json.hpp"

#include <string>

namespace rdense::json
{
    using Json = nlohmann::json;

    /// "p/q", or "p" when q = 1.
    auto rational_string(const Rational & r) -> std::string;
    auto hex64(std::uint64_t v) -> std::string;

    auto to_json(const GraphStats & s) -> Json;
    auto to_json(const bounds::BoundReport & r) -> Json;
    auto to_json(const BiDensityWitness & w) -> Json;
    auto to_json(const BiDensityResult & r) -> Json;
    auto to_json(const embedder::EmbedResult & r, bool full) -> Json;
    auto to_json(const search::ChaseState & c) -> Json;
    auto to_json(const search::SearchOutcome & o, const std::string & verification, bool full) -> Json;
    auto to_json(const oracle::RamseyCertificate & c) -> Json;
    auto to_json(const random_lab::PartitionCertificate & c) -> Json;
    auto to_json(const random_lab::SpreadReport & r) -> Json;
    auto to_json(const random_lab::TailEstimate & t) -> Json;
    auto to_json(const random_lab::DegreeTailReport & r) -> Json;
}
