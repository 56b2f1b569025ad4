#pragma once

#include <string>

#include "fixlat/dataflow.hpp"
#include "fixlat/theorems.hpp"

namespace fixlat {

// Instance file: poset section + "function" map + "a0" + optional "g".
// Strict schema; unknown keys raise SchemaError with a path.
Instance parse_instance(const std::string& json_text);
std::string serialize_instance(const Instance& inst);

Program parse_program(const std::string& json_text);

enum class Format { Text, Machine };

std::string render_classification(const Instance& inst, Format fmt);
std::string render_iteration(const Instance& inst, const IterationResult& r, Format fmt);
std::string render_sets(const Instance& inst, const CanonicalSets& s, const NClosure& n,
                        Format fmt);
std::string render_verdict(const Verdict& v, Format fmt);

}  // namespace fixlat
