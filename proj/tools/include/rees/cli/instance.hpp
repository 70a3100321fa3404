#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rees/field.hpp"
#include "rees/tower.hpp"

namespace rees::cli {

/// On-disk description of a presentation matrix.
struct InstanceFile {
  FieldSpec field;
  int n = 0;
  std::vector<int> col_degrees;
  std::vector<std::vector<std::string>> phi_rows;

  bool operator==(const InstanceFile&) const = default;
};

nlohmann::json to_json(const InstanceFile& inst);
/// Throws ValidationError on missing or mistyped fields.
InstanceFile instance_from_json(const nlohmann::json& j);

InstanceFile load_instance(const std::string& path);
void save_instance(const InstanceFile& inst, const std::string& path);

/// The field to use when the file does not say: F_p with p from REES_FIELD_P
/// if set, else the default prime.
FieldSpec default_field();

/// Validated input; the entries are parsed over `field`.
template <class K>
PresentationInput<K> to_input(const InstanceFile& inst, const K& field);

/// Random entries of the requested degrees, redrawn until the maximal
/// minors have no common factor. Same arguments give the same instance.
InstanceFile random_instance(int n, const std::vector<int>& col_degrees, std::uint64_t seed,
                             const FieldSpec& field);

/// Reads back the entries of a validated input as strings.
template <class K>
InstanceFile to_instance(const PresentationInput<K>& input, const FieldSpec& field);

}  // namespace rees::cli
