#include "tsym/metrics.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tsym/types.hpp"

namespace tsym {
namespace {

constexpr const char* kHeader = "run_id,seed,env_step,mean_return,std_return,wall_seconds";

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_field_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ConfigError("metrics CSV: bad numeric field '" + s + "'");
  return v;
}

long parse_field_long(const std::string& s) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ConfigError("metrics CSV: bad integer field '" + s + "'");
  return v;
}

}  // namespace

std::string write_metrics_csv(const std::vector<MetricsRow>& rows) {
  std::string out(kHeader);
  out.push_back('\n');
  for (const auto& r : rows) {
    out += r.run_id;
    out.push_back(',');
    out += std::to_string(r.seed);
    out.push_back(',');
    out += std::to_string(r.env_step);
    out.push_back(',');
    out += format_double(r.mean_return);
    out.push_back(',');
    out += format_double(r.std_return);
    out.push_back(',');
    out += format_double(r.wall_seconds);
    out.push_back('\n');
  }
  return out;
}

std::vector<MetricsRow> parse_metrics_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw ConfigError("metrics CSV: missing or unexpected header");
  std::vector<MetricsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 6)
      throw ConfigError("metrics CSV: expected 6 fields, got " +
                        std::to_string(fields.size()));
    MetricsRow r;
    r.run_id = fields[0];
    r.seed = parse_field_long(fields[1]);
    r.env_step = parse_field_long(fields[2]);
    r.mean_return = parse_field_double(fields[3]);
    r.std_return = parse_field_double(fields[4]);
    r.wall_seconds = parse_field_double(fields[5]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void save_metrics_csv(const std::vector<MetricsRow>& rows, const std::string& path) {
  std::ofstream os(path, std::ios::binary);  // binary: keep LF endings everywhere
  if (!os) throw ConfigError("cannot open metrics file for writing: " + path);
  os << write_metrics_csv(rows);
  if (!os) throw ConfigError("failed writing metrics file: " + path);
}

std::vector<MetricsRow> load_metrics_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open metrics file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_metrics_csv(ss.str());
}

}  // namespace tsym
