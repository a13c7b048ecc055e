#ifndef ETF_JSON_IO_HPP
#define ETF_JSON_IO_HPP

#include "etf/frame.hpp"
#include "etf/roux.hpp"
#include "etf/signature.hpp"
#include "etf/spectrum.hpp"
#include "etf/symmetry.hpp"
#include "etf/triples.hpp"

#include <json.hpp>

#include <string>

namespace etf {

using Json = nlohmann::json;

// Frame file format: {"d", "n", "vectors" (n arrays of d [re, im] pairs,
// column-major by vector), "labels" (n strings), "norm_convention"}.
Json frame_to_json(const Frame& f);
Frame frame_from_json(const Json& j);

// Signature file format: {"n", "entries" (n x n [re, im]), "normalized",
// "provenance"}; exact matrices additionally carry "entries_cyclo" and
// Gabor-Steiner provenance carries "shape".
Json signature_to_json(const SignatureMatrix& s);
SignatureMatrix signature_from_json(const Json& j);

Json cyclo_to_json(const Cyclotomic& z);
Cyclotomic cyclo_from_json(const Json& j);

Json verdict_to_json(const EtfVerdict& v);
Json spectrum_to_json(const SpectrumReport& r);
Json axioms_to_json(const SignatureAxiomsReport& r);
Json check_to_json(const CheckReport& r);
Json roux_to_json(const RouxReport& r);
Json roux_harness_to_json(const RouxHarnessReport& r);
Json group_to_json(const PermGroup& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string fnv1a64_hex(const std::string& bytes);

}  // namespace etf

#endif  // ETF_JSON_IO_HPP
