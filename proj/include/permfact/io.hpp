#pragma once

// JSON and CSV emitters. All exact integers travel as decimal strings.

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "permfact/characters.hpp"
#include "permfact/exact.hpp"
#include "permfact/partition.hpp"
#include "permfact/spectral.hpp"
#include "permfact/transition_matrix.hpp"

namespace permfact::io {

using nlohmann::json;

inline constexpr int kCacheSchemaVersion = 1;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json partitions_to_json(const PartitionIndex& index) {
  json out = json::array();
  for (const auto& p : index) out.push_back(to_json(p));
  return out;
}

inline json labels_json(const PartitionIndex& index) {
  json labels = json::array();
  for (const auto& p : index) labels.push_back(p.label());
  return labels;
}

inline json entries_json(const DenseMatrix<Int>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline DenseMatrix<Int> entries_from_json(const json& rows, std::size_t dim) {
  if (!rows.is_array() || rows.size() != dim) throw std::invalid_argument("matrix has wrong number of rows");
  DenseMatrix<Int> m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || row.size() != dim) throw std::invalid_argument("matrix row has wrong length");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_int(row.at(c).get<std::string>());
  }
  return m;
}

inline json matrix_to_json(const ClassMatrix& a) {
  return json{{"n", a.n()}, {"labels", labels_json(a.index())}, {"entries", entries_json(a.entries())}};
}

/// Inverse of matrix_to_json; labels must match the canonical order of P(n).
inline TransitionMatrix matrix_from_json(const json& j, int max_n = kDefaultMaxN) {
  auto index = std::make_shared<const PartitionIndex>(j.at("n").get<int>(), max_n);
  if (j.at("labels") != labels_json(*index)) throw std::invalid_argument("matrix labels do not match P(n)");
  TransitionMatrix a(index);
  a.mutable_entries() = entries_from_json(j.at("entries"), index->size());
  a.refresh_sparse();
  return a;
}

/// Header row: empty corner cell then partition labels; one row per class.
inline std::string matrix_to_csv(const ClassMatrix& a) {
  std::ostringstream out;
  for (const auto& p : a.index()) out << ',' << p.label();
  out << '\n';
  for (std::size_t r = 0; r < a.dim(); ++r) {
    out << a.index()[r].label();
    for (std::size_t c = 0; c < a.dim(); ++c) out << ',' << a(r, c);
    out << '\n';
  }
  return out.str();
}

inline json chartable_to_json(const CharacterTable& t) {
  return json{{"schema_version", kCacheSchemaVersion},
              {"n", t.n()},
              {"partitions", partitions_to_json(t.index())},
              {"values", entries_json(t.values())}};
}

inline CharacterTable chartable_from_json(const json& j, int max_n = kDefaultMaxN) {
  if (j.at("schema_version").get<int>() != kCacheSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  auto index = std::make_shared<const PartitionIndex>(j.at("n").get<int>(), max_n);
  if (j.at("partitions") != partitions_to_json(*index)) throw std::invalid_argument("partition list does not match P(n)");
  return CharacterTable(index, entries_from_json(j.at("values"), index->size()));
}

inline std::string chartable_to_csv(const CharacterTable& t) {
  std::ostringstream out;
  for (const auto& p : t.index()) out << ',' << p.label();
  out << '\n';
  for (std::size_t r = 0; r < t.dim(); ++r) {
    out << t.index()[r].label();
    for (std::size_t c = 0; c < t.dim(); ++c) out << ',' << t(r, c);
    out << '\n';
  }
  return out.str();
}

inline json count_to_json(const Partition& mu, unsigned k, const std::string& count, const std::string& method) {
  return json{{"n", mu.size()}, {"mu", to_json(mu)}, {"k", k}, {"count", count}, {"method", method}};
}

inline json series_to_json(const SeriesPrefix& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(to_decimal(c));
  return json{{"n", s.mu.size()}, {"mu", to_json(s.mu)}, {"parity", s.parity}, {"coefficients", coeffs}};
}

/// On-disk cache of character tables, one versioned JSON file per n.
class CharacterTableCache {
 public:
  explicit CharacterTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(int n) const { return dir_ / ("chartable_n" + std::to_string(n) + ".json"); }

  /// nullopt when absent; a corrupt file is reported to `warn` and ignored.
  std::optional<CharacterTable> load(int n, int max_n, std::ostream& warn) const {
    const auto path = path_for(n);
    if (!std::filesystem::exists(path)) return std::nullopt;
    try {
      std::ifstream in(path);
      const json j = json::parse(in);
      CharacterTable t = chartable_from_json(j, max_n);
      if (t.n() != n) throw std::invalid_argument("cached n does not match");
      check_plausible(t);
      return t;
    } catch (const std::exception& e) {
      warn << "warning: ignoring corrupt cache file " << path.string() << ": " << e.what() << '\n';
      return std::nullopt;
    }
  }

  void store(const CharacterTable& t) const {
    std::filesystem::create_directories(dir_);
    const auto path = path_for(t.n());
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << chartable_to_json(t).dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
  }

  CharacterTable load_or_build(int n, int max_n, unsigned jobs, std::ostream& warn) const {
    if (auto cached = load(n, max_n, warn)) return std::move(*cached);
    CharacterTable t = build_character_table(n, max_n, jobs);
    store(t);
    return t;
  }

 private:
  // Cheap invariants: dimensions from hook lengths, trivial and sign rows.
  static void check_plausible(const CharacterTable& t) {
    const PartitionIndex& index = t.index();
    const std::size_t sign_row = 0;
    const std::size_t trivial_row = t.dim() - 1;
    for (std::size_t l = 0; l < t.dim(); ++l)
      if (t(l, 0) != hook_length_dimension(index[l])) throw std::invalid_argument("dimension column is wrong at " + index[l].label());
    for (std::size_t nu = 0; nu < t.dim(); ++nu) {
      if (t(trivial_row, nu) != 1) throw std::invalid_argument("trivial row is wrong");
      if (t(sign_row, nu) != sign_power(t.n() - index[nu].length())) throw std::invalid_argument("sign row is wrong");
    }
  }

  std::filesystem::path dir_;
};

}  // namespace permfact::io
