#pragma once
// JSON algebra documents and name maps for the command-line driver.

#include "dhom/algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dhom::cli {

struct SpecDoc {
    AlgebraSpec spec;
    std::optional<std::vector<std::string>> F;  // module names, when given
};

/// Parses an algebra document; throws ParseError with a JSON-pointer location.
SpecDoc parse_spec(const nlohmann::ordered_json& doc);
SpecDoc load_spec(const std::string& path);

/// Signature -> name, in file order.
using NameMap = std::vector<std::pair<std::string, std::string>>;
NameMap load_names(const std::string& path);
/// `<stem>.names.json` next to the spec, if present.
std::optional<std::string> sibling_names(const std::string& spec_path);

}  // namespace dhom::cli
