#include "qjack/cache.hpp"

#include <fstream>
#include <utility>

#include "qjack/json_io.hpp"

namespace qjack {

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<nlohmann::json> DiskCache::load(const std::string& key) const {
  std::filesystem::path path = dir_ / (key + ".json");
  std::ifstream in(path);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || j.value("schema", -1) != kCacheSchema) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return j;
}

void DiskCache::store(const std::string& key, const nlohmann::json& value) const {
  std::filesystem::create_directories(dir_);
  std::filesystem::path tmp = dir_ / (key + ".tmp");
  std::filesystem::path path = dir_ / (key + ".json");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << value.dump(1, '\t') << '\n';
    if (!out) return;  // leave the cache cold rather than corrupt
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::string table_key(int weight) { return "table-w" + std::to_string(weight); }

std::string jack_key(const Partition& la, JackNorm norm, Basis basis) {
  std::string shape;
  for (int p : la.parts()) {
    if (!shape.empty()) shape += '-';
    shape += std::to_string(p);
  }
  if (shape.empty()) shape = "0";
  return std::string("jack-") + norm_char(norm) + "-" + basis_char(basis) + "-" + shape;
}

ActionTable cached_table(const DiskCache& cache, int weight) {
  const std::string key = table_key(weight);
  if (auto j = cache.load(key)) {
    try {
      if (j->value("kind", "") == "table" && j->value("weight", -1) == weight) {
        std::vector<std::vector<std::pair<int, RatFun>>> up;
        for (const auto& row : j->at("up")) {
          std::vector<std::pair<int, RatFun>> entries;
          for (const auto& e : row) {
            entries.emplace_back(e.at(0).get<int>(), ratfun_from_json(e.at(1)));
          }
          up.push_back(std::move(entries));
        }
        return ActionTable::from_parts(weight, std::move(up));
      }
    } catch (const std::exception&) {
      // fall through to a rebuild
    }
  }
  ActionTable table = ActionTable::get(weight);
  nlohmann::ordered_json j;
  j["schema"] = kCacheSchema;
  j["kind"] = "table";
  j["weight"] = weight;
  nlohmann::ordered_json up = nlohmann::ordered_json::array();
  for (size_t i = 0; i < table.order().size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& [tgt, r] : table.up(static_cast<int>(i))) {
      row.push_back(nlohmann::ordered_json::array({tgt, ratfun_to_json(r)}));
    }
    up.push_back(std::move(row));
  }
  j["up"] = std::move(up);
  cache.store(key, j);
  return table;
}

SymExpr cached_jack(const DiskCache& cache, const Partition& la, JackNorm norm, Basis basis) {
  const std::string key = jack_key(la, norm, basis);
  const std::string shape = la.to_string();
  if (auto j = cache.load(key)) {
    try {
      if (j->value("kind", "") == "jack" && j->value("shape", "\n") == shape &&
          j->value("norm", "") == std::string(1, norm_char(norm)) &&
          j->value("basis", "") == std::string(1, basis_char(basis))) {
        return symexpr_from_json(j->at("expr"));
      }
    } catch (const std::exception&) {
      // fall through to a recompute
    }
  }
  SymExpr expr = jack(la, norm, basis);
  nlohmann::ordered_json j;
  j["schema"] = kCacheSchema;
  j["kind"] = "jack";
  j["shape"] = shape;
  j["norm"] = std::string(1, norm_char(norm));
  j["basis"] = std::string(1, basis_char(basis));
  j["expr"] = symexpr_to_json(expr);
  cache.store(key, j);
  return expr;
}

} // namespace qjack
