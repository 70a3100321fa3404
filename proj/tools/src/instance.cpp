#include "rees/cli/instance.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include "rees/errors.hpp"
#include "rees/gradedlin.hpp"

namespace rees::cli {

using nlohmann::json;

json to_json(const InstanceFile& inst) {
  json f;
  if (inst.field.kind == FieldSpec::Kind::Prime)
    f = {{"type", "prime"}, {"p", inst.field.p}};
  else
    f = {{"type", "rational"}};
  return {{"field", f}, {"n", inst.n}, {"col_degrees", inst.col_degrees}, {"phi_rows", inst.phi_rows}};
}

InstanceFile instance_from_json(const json& j) {
  try {
    InstanceFile inst;
    if (j.contains("field")) {
      const auto& f = j.at("field");
      auto type = f.at("type").get<std::string>();
      if (type == "prime")
        inst.field = FieldSpec::prime(f.at("p").get<std::uint32_t>());
      else if (type == "rational")
        inst.field = FieldSpec::rational();
      else
        throw ValidationError("unknown field type '" + type + "'");
    } else {
      inst.field = default_field();
    }
    inst.col_degrees = j.at("col_degrees").get<std::vector<int>>();
    inst.phi_rows = j.at("phi_rows").get<std::vector<std::vector<std::string>>>();
    inst.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(inst.phi_rows.size());
    if (inst.n != static_cast<int>(inst.phi_rows.size()))
      throw ValidationError("n = " + std::to_string(inst.n) + " but phi_rows has " +
                            std::to_string(inst.phi_rows.size()) + " rows");
    return inst;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed instance: ") + e.what());
  }
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const InstanceFile& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << to_json(inst).dump(2) << '\n';
}

FieldSpec default_field() {
  if (const char* env = std::getenv("REES_FIELD_P")) {
    char* end = nullptr;
    unsigned long long p = std::strtoull(env, &end, 10);
    if (!*env || *end || p > 0x7fffffffULL) throw ValidationError("REES_FIELD_P is not a valid prime");
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  return FieldSpec::prime(kDefaultPrime);
}

template <class K>
PresentationInput<K> to_input(const InstanceFile& inst, const K& field) {
  if (inst.n != static_cast<int>(inst.phi_rows.size()))
    throw ValidationError("row count does not match n");
  return PresentationInput<K>::parse(field, inst.col_degrees, inst.phi_rows);
}

template <class K>
InstanceFile to_instance(const PresentationInput<K>& input, const FieldSpec& field) {
  InstanceFile inst;
  inst.field = field;
  inst.n = input.n;
  inst.col_degrees = input.degrees;
  for (std::size_t i = 0; i < input.phi.rows(); ++i) {
    std::vector<std::string> row;
    for (const auto& e : input.phi.row(i)) row.push_back(e.to_string());
    inst.phi_rows.push_back(std::move(row));
  }
  return inst;
}

namespace {

template <class K>
InstanceFile random_over(const K& field, const FieldSpec& spec, int n, const std::vector<int>& d,
                         std::uint64_t seed, bool small_coefficients) {
  std::mt19937_64 rng(seed);
  const std::uint32_t p = spec.kind == FieldSpec::Kind::Prime ? spec.p : 0;
  auto ring = make_r_ring(field);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GradedMatrix<K> phi(ring, static_cast<std::size_t>(n), d.size(), d, {});
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (std::size_t j = 0; j < phi.cols(); ++j) {
        std::vector<Term<K>> ts;
        for (const auto& m : x_monomials(d[j])) {
          long long c;
          if (small_coefficients)
            c = std::uniform_int_distribution<int>(-9, 9)(rng);
          else
            c = static_cast<long long>(std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng));
          ts.push_back({m, field.from_int(c)});
        }
        phi.at(i, j) = Poly<K>::from_terms(ring, std::move(ts));
      }
    try {
      return to_instance(PresentationInput<K>::make(phi), spec);
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError("no height-two matrix found in 1000 draws");
}

}  // namespace

InstanceFile random_instance(int n, const std::vector<int>& d, std::uint64_t seed,
                             const FieldSpec& field) {
  if (n < 3) throw ValidationError("need n >= 3");
  if (static_cast<int>(d.size()) != n - 1)
    throw ValidationError("need n - 1 = " + std::to_string(n - 1) + " column degrees");
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] < 1) throw ValidationError("column degrees must be >= 1");
    if (j && d[j] < d[j - 1]) throw ValidationError("column degrees must be nondecreasing");
  }
  if (field.kind == FieldSpec::Kind::Prime)
    return random_over(PrimeField(field.p), field, n, d, seed, false);
  return random_over(RationalField{}, field, n, d, seed, true);
}

template PresentationInput<PrimeField> to_input(const InstanceFile&, const PrimeField&);
template PresentationInput<RationalField> to_input(const InstanceFile&, const RationalField&);
template InstanceFile to_instance(const PresentationInput<PrimeField>&, const FieldSpec&);
template InstanceFile to_instance(const PresentationInput<RationalField>&, const FieldSpec&);

}  // namespace rees::cli
