#include "simplexstep/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "simplexstep/divergence.hpp"
#include "simplexstep/error.hpp"

namespace simplexstep {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view field) {
  while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw Error(ErrorKind::ParseError, "not a number: '" + std::string(field) + "'");
  }
  return value;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error(ErrorKind::ParseError, "no column named " + std::string(name));
}

double Table::number(std::size_t row, std::string_view name) const { return parse_double(rows.at(row).at(column(name))); }

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::ParseError, "empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = split(line, ',');
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (cells.size() != table.header.size()) throw Error(ErrorKind::ParseError, "ragged CSV row: " + line);
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void write_json(std::ostream& out, const Table& table) {
  json records = json::array();
  for (const auto& row : table.rows) {
    json record = json::object();
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      const std::string& cell = row[i];
      if (cell.empty()) {
        record[table.header[i]] = nullptr;
        continue;
      }
      try {
        record[table.header[i]] = parse_double(cell);
      } catch (const Error&) {
        record[table.header[i]] = cell;
      }
    }
    records.push_back(std::move(record));
  }
  out << records.dump(2) << '\n';
}

std::vector<std::string> metrics_header(std::size_t classes) {
  std::vector<std::string> h{"t"};
  for (std::size_t i = 0; i < classes; ++i) h.push_back("p_" + std::to_string(i));
  for (const char* name : {"kl_to_target", "b_entropy", "eta_eff", "eta_max", "ratio"}) h.emplace_back(name);
  return h;
}

Table metrics_table(const std::vector<MetricsRow>& rows, std::size_t classes) {
  Table table{metrics_header(classes), {}};
  table.rows.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.probs.size() != classes) throw Error(ErrorKind::DimensionMismatch, "metrics row has wrong width");
    std::vector<std::string> cells{std::to_string(r.t)};
    for (double x : r.probs) cells.push_back(format_double(x));
    for (double x : {r.kl_to_target, r.b_entropy, r.eta_eff, r.eta_max, r.ratio}) cells.push_back(format_double(x));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::vector<std::string> sweep_header() { return {"x", "eta_max", "b_entropy", "eta_ce"}; }

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table table{sweep_header(), {}};
  for (const auto& r : rows) {
    table.rows.push_back({format_double(r.x), format_double(r.eta_max), format_double(r.b_entropy),
                          format_double(r.eta_ce)});
  }
  return table;
}

Table summary_table(const std::vector<StrategyRun>& runs, const Target& target) {
  Table table{{"strategy", "kind", "final_kl", "converged_step", "collapsed", "max_ratio"}, {}};
  for (const auto& run : runs) {
    const RunSummary s = summarize(run.rows, target);
    table.rows.push_back({run.name, kind_name(run.spec.kind), format_double(s.final_kl),
                          s.converged_step ? std::to_string(*s.converged_step) : std::string(),
                          s.collapsed ? "1" : "0", format_double(s.max_ratio)});
  }
  return table;
}

namespace {

template <class T>
T get_field(const json& obj, const char* key, const char* what) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + "." + key + ": " + e.what());
  }
}

std::size_t get_count(const json& obj, const char* key, const char* what) {
  if (!obj.at(key).is_number_unsigned()) {
    throw Error(ErrorKind::ParseError, std::string(what) + "." + key + " must be a nonnegative integer");
  }
  return get_field<std::size_t>(obj, key, what);
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> known, const char* what) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || item.key() == k;
    if (!ok) throw Error(ErrorKind::ParseError, std::string("unknown key in ") + what + ": " + item.key());
  }
}

Belief distribution_field(const json& obj, const char* key) {
  const auto raw = get_field<std::vector<double>>(obj, key, "config");
  try {
    return make_belief(raw);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidConfig, std::string(key) + ": " + e.what());
  }
}

NamedStrategy parse_strategy(const json& obj, std::size_t index) {
  if (!obj.is_object()) throw Error(ErrorKind::ParseError, "strategy entries must be objects");
  reject_unknown_keys(obj, {"name", "kind", "eta", "eta_base", "b_max", "eta_floor"}, "strategy");
  const auto kind = get_field<std::string>(obj, "kind", "strategy");
  const char* step_key = obj.contains("eta_base") ? "eta_base" : "eta";
  const auto eta = get_field<double>(obj, step_key, "strategy");

  NamedStrategy s{obj.contains("name") ? get_field<std::string>(obj, "name", "strategy")
                                       : kind + "_" + std::to_string(index),
                  {FixedStep{eta}}};
  if (kind == "fixed") s.spec.kind = FixedStep{eta};
  else if (kind == "bound_clipped") s.spec.kind = BoundClipped{eta};
  else if (kind == "ads_aware") s.spec.kind = AdsAware{eta};
  else throw Error(ErrorKind::ParseError, "unknown strategy kind: " + kind);
  if (obj.contains("b_max")) s.spec.barrier_cfg.b_max = get_field<double>(obj, "b_max", "strategy");
  if (obj.contains("eta_floor")) s.spec.barrier_cfg.eta_floor = get_field<double>(obj, "eta_floor", "strategy");
  return s;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "config must be a JSON object");
  reject_unknown_keys(doc,
                      {"c_classes", "p0", "q_phase1", "q_phase2", "shift_step", "total_steps", "strategies", "seed"},
                      "config");

  ExperimentConfig cfg;
  if (doc.contains("c_classes")) {
    cfg.c_classes = get_count(doc, "c_classes", "config");
  } else {
    for (const char* key : {"p0", "q_phase1", "q_phase2"}) {
      if (doc.contains(key) && doc[key].is_array()) {
        cfg.c_classes = doc[key].size();
        break;
      }
    }
  }
  if (cfg.c_classes < 2) throw Error(ErrorKind::InvalidConfig, "c_classes must be at least 2");
  cfg.p0 = doc.contains("p0") ? distribution_field(doc, "p0") : Belief::uniform(cfg.c_classes);
  if (doc.contains("q_phase1")) cfg.q_phase1 = distribution_field(doc, "q_phase1");
  if (doc.contains("q_phase2")) cfg.q_phase2 = distribution_field(doc, "q_phase2");
  if (doc.contains("shift_step")) cfg.shift_step = get_count(doc, "shift_step", "config");
  if (doc.contains("total_steps")) cfg.total_steps = get_count(doc, "total_steps", "config");
  if (doc.contains("seed")) cfg.seed = get_count(doc, "seed", "config");
  if (doc.contains("strategies")) {
    const json& list = doc["strategies"];
    if (!list.is_array()) throw Error(ErrorKind::ParseError, "strategies must be an array");
    cfg.strategies.clear();
    for (std::size_t i = 0; i < list.size(); ++i) cfg.strategies.push_back(parse_strategy(list[i], i));
  }
  cfg.validate();
  return cfg;
}

}  // namespace simplexstep
