#include "feval/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "feval/errors.hpp"

namespace feval {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct Row {
  std::vector<std::string> fields;
  int number = 0;  // 1-based, header = 1

  const std::string& field(std::size_t i) const {
    static const std::string empty;
    return i < fields.size() ? fields[i] : empty;
  }

  int read_int(std::size_t i) const {
    std::string f = trim(field(i));
    int value = 0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (ec != std::errc{} || ptr != f.data() + f.size()) {
      throw SchemaError("expected integer, got '" + f + "'", number,
                        static_cast<int>(i) + 1);
    }
    return value;
  }

  double read_double(std::size_t i) const {
    std::string f = trim(field(i));
    try {
      std::size_t pos = 0;
      double value = std::stod(f, &pos);
      if (pos != f.size()) throw std::invalid_argument(f);
      return value;
    } catch (const std::exception&) {
      throw SchemaError("expected number, got '" + f + "'", number,
                        static_cast<int>(i) + 1);
    }
  }

  bool blank(std::size_t i) const { return trim(field(i)).empty(); }
};

// Streams rows, skipping blank lines; validates the column count.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::size_t columns) : in_(in), cols_(columns) {
    std::string header;
    if (!std::getline(in_, header)) {
      throw SchemaError("empty file, header row required", 1, 1);
    }
    line_ = 1;
  }

  bool next(Row& row) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (trim(line).empty()) continue;
      row.fields = split_row(line);
      row.number = line_;
      if (row.fields.size() != cols_) {
        throw SchemaError("expected " + std::to_string(cols_) +
                              " columns, got " +
                              std::to_string(row.fields.size()),
                          line_, 1);
      }
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  std::size_t cols_;
  int line_ = 0;
};

YearMonth read_year_month(const Row& row, std::size_t ycol, std::size_t mcol) {
  YearMonth m{row.read_int(ycol), row.read_int(mcol)};
  if (!m.valid()) {
    throw SchemaError("month out of range: " + std::to_string(m.month),
                      row.number, static_cast<int>(mcol) + 1);
  }
  return m;
}

}  // namespace

std::map<std::string, ForecastPanel> parse_forecast_csv(std::istream& in) {
  std::map<std::string, ForecastPanel> panels;
  CsvReader reader(in, 6);
  Row row;
  while (reader.next(row)) {
    std::string variable = trim(row.field(0));
    if (variable.empty()) {
      throw SchemaError("blank variable", row.number, 1);
    }
    YearMonth published = read_year_month(row, 1, 2);
    HalfYear target{row.read_int(3), row.read_int(4)};
    if (!target.valid()) {
      throw SchemaError("half must be 1 or 2", row.number, 5);
    }
    if (row.blank(5)) continue;  // blank value = missing forecast
    double value = row.read_double(5);

    Horizon h;
    try {
      h = classify_horizon(published, target);
    } catch (const OutOfRangeError& e) {
      throw SchemaError(e.what(), row.number, 2);
    }
    auto [it, _] = panels.try_emplace(variable, ForecastPanel{variable});
    try {
      it->second.insert(PanelKey{target, h}, ForecastCell{value, published});
    } catch (const DuplicateCellError& e) {
      throw SchemaError(e.what(), row.number, 1);
    }
  }
  return panels;
}

std::map<std::string, MonthlySeries> parse_monthly_csv(std::istream& in) {
  std::map<std::string, MonthlySeries> series;
  CsvReader reader(in, 4);
  Row row;
  while (reader.next(row)) {
    std::string name = trim(row.field(0));
    if (name.empty()) throw SchemaError("blank series name", row.number, 1);
    YearMonth m = read_year_month(row, 1, 2);
    if (row.blank(3)) continue;
    series[name].set(m, row.read_double(3));
  }
  return series;
}

std::map<std::string, QuarterlySeries> parse_quarterly_csv(std::istream& in) {
  std::map<std::string, QuarterlySeries> series;
  CsvReader reader(in, 4);
  Row row;
  while (reader.next(row)) {
    std::string name = trim(row.field(0));
    if (name.empty()) throw SchemaError("blank series name", row.number, 1);
    Quarter q{row.read_int(1), row.read_int(2)};
    if (!q.valid()) {
      throw SchemaError("quarter out of range: " + std::to_string(q.q),
                        row.number, 3);
    }
    if (row.blank(3)) continue;
    series[name].set(q, row.read_double(3));
  }
  return series;
}

TargetSchedule parse_target_schedule(std::istream& in) {
  std::vector<TargetEpisode> episodes;
  CsvReader reader(in, 8);
  Row row;
  while (reader.next(row)) {
    TargetEpisode ep;
    ep.from = read_year_month(row, 0, 1);
    ep.to = read_year_month(row, 2, 3);
    ep.lower = row.read_double(4);
    ep.upper = row.read_double(5);
    ep.midpoint = row.read_double(6);
    try {
      ep.basis = basis_from_string(trim(row.field(7)));
    } catch (const Error& e) {
      throw SchemaError(e.what(), row.number, 8);
    }
    episodes.push_back(ep);
  }
  try {
    return TargetSchedule(std::move(episodes));
  } catch (const Error& e) {
    throw SchemaError(e.what(), 1, 1);
  }
}

void write_forecast_csv(std::ostream& out,
                        const std::map<std::string, ForecastPanel>& panels) {
  out << "variable,publication_year,publication_month,target_year,"
         "target_half,value\n";
  char buf[64];
  for (const auto& [variable, panel] : panels) {
    for (const auto& [key, cell] : panel.cells()) {
      std::snprintf(buf, sizeof(buf), "%.6g", cell.value);
      out << variable << ',' << cell.published.year << ','
          << cell.published.month << ',' << key.target.year << ','
          << key.target.half << ',' << buf << '\n';
    }
  }
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  return in;
}

}  // namespace

std::map<std::string, ForecastPanel> load_forecast_csv(
    const std::string& path) {
  auto in = open_or_throw(path);
  return parse_forecast_csv(in);
}

std::map<std::string, MonthlySeries> load_monthly_csv(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_monthly_csv(in);
}

std::map<std::string, QuarterlySeries> load_quarterly_csv(
    const std::string& path) {
  auto in = open_or_throw(path);
  return parse_quarterly_csv(in);
}

TargetSchedule load_target_schedule(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_target_schedule(in);
}

}  // namespace feval
