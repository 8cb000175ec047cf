#ifndef EDIM_SERIALIZE_HPP
#define EDIM_SERIALIZE_HPP

#include "edim/encoders.hpp"
#include "edim/instance.hpp"
#include "edim/invariants.hpp"

#include <json.hpp>

#include <string>

namespace edim {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

// Every reader raises PARSE_ERROR on malformed structure. Domain
// validation (degenerate forms, bad structure tables) raises its own code.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

// {"witness": ..., "certificate": ...}
Json encode_result_to_json(const EncodeResult& r);

// Canonical single-line text: sorted keys, no whitespace.
std::string dump_line(const Json& j);
Json parse_line(const std::string& line);

}  // namespace edim

#endif
