#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "app.hpp"
#include "feval/errors.hpp"

namespace feval::app {

std::string fmt_num(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

namespace {

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_table(const std::filesystem::path& base_no_ext, const Table& t) {
  std::string csv;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) csv += ',';
    csv += t.columns[i];
  }
  csv += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) csv += ',';
      if (i < row.size()) csv += row[i];
    }
    csv += '\n';
  }
  std::filesystem::path csv_path = base_no_ext;
  csv_path += ".csv";
  atomic_write(csv_path, csv);

  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      obj[t.columns[i]] = i < row.size() ? row[i] : "";
    }
    arr.push_back(std::move(obj));
  }
  std::filesystem::path json_path = base_no_ext;
  json_path += ".json";
  atomic_write(json_path, arr.dump(2) + "\n");
}

}  // namespace feval::app
