#pragma once

#include "dsp/dsp.hpp"
#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dsp::io {

using json = nlohmann::json;

// Thrown for malformed or semantically invalid input documents.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scalar is an integer, a string ("3/2", "1-2i") or a pair [re, im].
Scalar parse_scalar(const json& j);
json to_json(const Scalar& s);
json to_json(const Partition& p);
json to_json(const UniPoly& p);
json to_json(const BiPoly& p);
BiPoly parse_bipoly(const json& j);

struct ParabolicInput {
    ParabolicData data;
    MarkedPoints points;
    int genus = 0;
};
// {"points": [...], "blocks": [[{"m": k, "xi": scalar}, ...], ...], "genus": g}
ParabolicInput parse_parabolic(const json& j);

struct ClassInput {
    std::vector<ConjugacyClass> classes;
    int genus = 0;
};
// {"classes": [[{"lambda": scalar, "blocks": [...]}, ...], ...], "genus": g}
ClassInput parse_classes(const json& j);

json to_json(const CriterionReport& r);
json to_json(const DSPVerdict& v);
json to_json(const IntegralityReport& r);
json to_json(const JordanReport& r);
json to_json(const WitnessReport& r, const MarkedPoints& pts);

// FNV-1a 64-bit digest, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace dsp::io
