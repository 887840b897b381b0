#include "eiscycle/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace eis {

// bump when the relation elimination or its serialization changes shape
const char* const kCodeVersion = "eiscycle-basis-1";

json to_json(const CycloElem& x) {
  json coeffs = json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(rat_str(q));
  return {{"order", x.field()->order()}, {"coeffs", coeffs}};
}

CycloElem cyclo_from_json(const json& j) {
  FieldPtr f = CycloField::of(j.at("order").get<unsigned>());
  const json& coeffs = j.at("coeffs");
  if (coeffs.size() != f->degree())
    throw UsageError("cyclotomic element: expected " + std::to_string(f->degree()) +
                     " coefficients");
  CycloElem out = CycloElem::zero(f);
  CycloElem acc = out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rat q = parse_rat(coeffs[i].get<std::string>());
    if (q != 0) acc += CycloElem::root_of_unity(f, (long)i) * q;
  }
  return acc;
}

json relation_basis_to_json(const RelationBasis& basis, const std::string& version) {
  json coords = json::array();
  for (int g = 0; g < basis.num_generators(); ++g) {
    json row = json::array();
    for (const auto& [col, q] : basis.coords(g).c)
      row.push_back(json::array({col, rat_str(q)}));
    coords.push_back(std::move(row));
  }
  return {{"level", basis.level()},
          {"version", version},
          {"num_generators", basis.num_generators()},
          {"basis_columns", basis.basis_columns()},
          {"coords", std::move(coords)}};
}

RelationBasis relation_basis_from_json(const json& j, int expect_level,
                                       const std::string& expect_version) {
  if (j.at("level").get<int>() != expect_level)
    throw UsageError("cached basis has wrong level");
  if (j.at("version").get<std::string>() != expect_version)
    throw UsageError("cached basis has wrong version");
  int num = j.at("num_generators").get<int>();
  std::vector<int> basis_cols = j.at("basis_columns").get<std::vector<int>>();
  std::vector<LinComb<Rat>> coords((size_t)num);
  const json& cj = j.at("coords");
  if ((int)cj.size() != num) throw UsageError("cached basis: coords size mismatch");
  for (int g = 0; g < num; ++g)
    for (const auto& entry : cj[(size_t)g])
      coords[(size_t)g].add(entry.at(0).get<int>(), parse_rat(entry.at(1).get<std::string>()));
  return RelationBasis(expect_level, num, std::move(basis_cols), std::move(coords));
}

void atomic_write(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp);
    out << contents;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw UsageError("cannot rename " + tmp + " to " + path);
}

RelationBasis load_or_build_basis(const LevelContext& ctx, const std::string& cache_dir) {
  if (cache_dir.empty()) return RelationBasis(ctx);
  std::filesystem::path dir(cache_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path file =
      dir / ("basis_N" + std::to_string(ctx.N()) + "_" + kCodeVersion + ".json");
  if (std::filesystem::exists(file)) {
    try {
      std::ifstream in(file);
      json j;
      in >> j;
      return relation_basis_from_json(j, ctx.N(), kCodeVersion);
    } catch (const std::exception&) {
      // stale or corrupt cache entry: rebuild below
    }
  }
  RelationBasis basis(ctx);
  atomic_write(file.string(), relation_basis_to_json(basis, kCodeVersion).dump());
  return basis;
}

}  // namespace eis
