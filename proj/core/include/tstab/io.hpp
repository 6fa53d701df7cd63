#pragma once

// JSON documents, the CUTSPEC and FAMSPEC mini-languages, and the session
// config file.
//
//   CUTSPEC  std:m=M,K=K|inf|-inf,P=a;b|all|none   exc:a=A,b=B   coarse:m=M
//   FAMSPEC  std | coarse | ell | exc[:k=K,p=P|inf] | coarsened:FAMSPEC
//   config   key = value lines; keys points, k, p, format; '#' comments

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tstab/p1_stabilities.hpp"
#include "tstab/parse.hpp"
#include "tstab/stability.hpp"
#include "tstab/t_structure.hpp"

namespace tstab {

using Json = nlohmann::json;

Json to_json(const SlopeId& slope);
/// Reads a slope in the shape the family writes. Throws BadParams for a
/// malformed document, CrossFamily for a slope of another family.
SlopeId slope_from_json(const Json& j, const Stability& family);

Json to_json(const Stability& family);
/// Throws BadParams for unknown descriptors.
FamilyPtr family_from_json(const Json& j);

Json to_json(const HNFiltration& f, const Stability& family);
Json to_json(const EllipticFiltration& f, const Stability& family);

/// Result of reading a filtration document: the object, its family and the
/// verification report.
struct FiltrationCheck {
  FamilyPtr family;
  std::string object;
  HnReport report;
};

/// Parses a filtration document and runs verify_hn on it.
FiltrationCheck check_filtration_json(const Json& doc);

Json to_json(const HnReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const CutReport& r);
Json to_json(const Classification& c);
Json to_json(const CatalogEntry& e);
Json to_json(const HomProfile& h);

/// Throws BadParams.
SlopeCut parse_cutspec(std::string_view spec);

/// Throws BadParams. Standard and elliptic families take `points` as their
/// point order.
FamilyPtr parse_famspec(std::string_view spec, const std::vector<std::string>& points = {});

/// "inf" or a natural number; throws BadParams.
std::optional<std::int64_t> parse_p(const std::string& text);

struct SessionConfig {
  std::vector<std::string> points;
  std::int64_t k = 0;
  std::optional<std::int64_t> p = 0;
  bool json = false;
};

/// Throws BadParams on unknown keys or malformed values.
SessionConfig parse_config(std::istream& in, SessionConfig base = {});

}  // namespace tstab
