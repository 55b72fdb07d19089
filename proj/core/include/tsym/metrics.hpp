#ifndef TSYM_METRICS_HPP
#define TSYM_METRICS_HPP

#include <string>
#include <vector>

namespace tsym {

// One evaluation checkpoint of one training run.
struct MetricsRow {
  std::string run_id;
  long seed = 0;
  long env_step = 0;
  double mean_return = 0.0;
  double std_return = 0.0;
  double wall_seconds = 0.0;

  bool operator==(const MetricsRow&) const = default;
};

// CSV with header run_id,seed,env_step,mean_return,std_return,wall_seconds,
// UTF-8, LF line endings. Doubles are written in shortest round-trip form so
// parse(write(rows)) == rows exactly.
std::string write_metrics_csv(const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> parse_metrics_csv(const std::string& text);

void save_metrics_csv(const std::vector<MetricsRow>& rows, const std::string& path);
std::vector<MetricsRow> load_metrics_csv(const std::string& path);

}  // namespace tsym

#endif  // TSYM_METRICS_HPP
