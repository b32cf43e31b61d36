// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plot emitter: renders per-(n, m) SVG charts of each algorithm's value
// advantage over the round-robin greedy baseline (mean of per-trial paired
// differences, with 1-stderr bands), plus a text summary of the best
// percentage gain of mwu over saturate. Pure functions of the CSV text.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace submax::bench {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != table.header.size())
        throw std::runtime_error("csv: ragged row");
      table.rows.push_back(std::move(fields));
    }
  }
  if (table.header.empty()) throw std::runtime_error("csv: empty input");
  return table;
}

namespace detail {

struct ValueRecord {
  std::string algorithm;
  int n = 0;
  int m = 0;
  int k = 0;
  int trial = 0;
  double value = 0.0;
};

inline std::vector<ValueRecord> value_records(const CsvTable& table) {
  auto column = [&](const std::string& name) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (table.header[i] == name) return i;
    }
    throw std::runtime_error("csv: missing column " + name);
  };
  const std::size_t c_alg = column("algorithm");
  const std::size_t c_n = column("n");
  const std::size_t c_m = column("m");
  const std::size_t c_k = column("k");
  const std::size_t c_trial = column("trial");
  const std::size_t c_value = column("value");
  std::vector<ValueRecord> records;
  records.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    ValueRecord r;
    r.algorithm = row[c_alg];
    r.n = std::stoi(row[c_n]);
    r.m = std::stoi(row[c_m]);
    r.k = std::stoi(row[c_k]);
    r.trial = std::stoi(row[c_trial]);
    r.value = std::stod(row[c_value]);
    records.push_back(std::move(r));
  }
  return records;
}

struct Band {
  double mean = 0.0;
  double std_error = 0.0;
};

inline Band summarize(const std::vector<double>& xs) {
  Band b;
  for (double x : xs) b.mean += x;
  b.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - b.mean) * (x - b.mean);
    b.std_error = std::sqrt(ss / (static_cast<double>(xs.size()) *
                                  static_cast<double>(xs.size() - 1)));
  }
  return b;
}

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline const char* algorithm_color(const std::string& name) {
  if (name == "mwu") return "#1f77b4";
  if (name == "saturate") return "#ff7f0e";
  if (name == "round_robin") return "#2ca02c";
  if (name == "convex_comb") return "#d62728";
  if (name == "naive_min") return "#9467bd";
  if (name == "tuple_min") return "#8c564b";
  return "#7f7f7f";
}

}  // namespace detail

// Reference gains reported for this experiment design at the original
// scale. Context only: initiator matrices are random, so these are not
// reproduction targets.
inline std::optional<double> reference_max_gain_percent(int n, int m) {
  static const std::map<std::pair<int, int>, double> table = {
      {{64, 10}, 9.80},   {{64, 50}, 12.14},  {{64, 100}, 16.12},
      {{512, 10}, 7.95},  {{512, 50}, 10.08}, {{512, 100}, 10.01},
      {{1024, 10}, 6.89}, {{1024, 50}, 5.02}, {{1024, 100}, 7.4}};
  const auto it = table.find({n, m});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

struct RenderedPlot {
  int n = 0;
  int m = 0;
  std::string filename;
  std::string svg;
};

// One SVG per (n, m) group found in the CSV. Requires a round_robin
// baseline column; differences are paired per (k, trial).
inline std::vector<RenderedPlot> render_difference_plots(
    const std::string& csv_text) {
  const auto records = detail::value_records(parse_csv(csv_text));
  if (records.empty()) throw std::runtime_error("plot: no records");

  std::map<std::pair<int, int>, std::vector<detail::ValueRecord>> groups;
  for (const auto& r : records) groups[{r.n, r.m}].push_back(r);

  std::vector<RenderedPlot> plots;
  for (const auto& [shape, group] : groups) {
    // value by (algorithm, k, trial), and the baseline by (k, trial).
    std::map<std::string, std::map<std::pair<int, int>, double>> by_alg;
    for (const auto& r : group) by_alg[r.algorithm][{r.k, r.trial}] = r.value;
    const auto baseline_it = by_alg.find("round_robin");
    if (baseline_it == by_alg.end())
      throw std::runtime_error("plot: round_robin baseline missing");
    const auto& baseline = baseline_it->second;

    std::vector<int> ks;
    for (const auto& [key, unused] : baseline) {
      (void)unused;
      if (ks.empty() || ks.back() != key.first) ks.push_back(key.first);
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    // Per algorithm, per k: band over paired differences to the baseline.
    std::map<std::string, std::vector<detail::Band>> curves;
    double lo = 0.0, hi = 0.0;
    for (const auto& [alg, values] : by_alg) {
      std::vector<detail::Band> bands;
      for (int k : ks) {
        std::vector<double> diffs;
        for (const auto& [key, value] : values) {
          if (key.first != k) continue;
          const auto base = baseline.find(key);
          if (base == baseline.end())
            throw std::runtime_error("plot: unmatched baseline row");
          diffs.push_back(value - base->second);
        }
        if (diffs.empty())
          throw std::runtime_error("plot: no rows for a k value");
        const detail::Band b = detail::summarize(diffs);
        lo = std::min(lo, b.mean - b.std_error);
        hi = std::max(hi, b.mean + b.std_error);
        bands.push_back(b);
      }
      curves[alg] = std::move(bands);
    }
    if (hi - lo < 1e-12) hi = lo + 1.0;

    const double width = 640, height = 420;
    const double ml = 64, mr = 16, mt = 40, mb = 48;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const double kmin = ks.front(), kmax = ks.back();
    auto sx = [&](double k) {
      return kmax > kmin ? ml + (k - kmin) / (kmax - kmin) * pw : ml + pw / 2;
    };
    auto sy = [&](double v) { return mt + (hi - v) / (hi - lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
        << " " << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << ml << "\" y=\"22\" font-size=\"14\">n=" << shape.first
        << ", m=" << shape.second
        << ": mean value minus round_robin (band: 1 stderr)</text>\n";
    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    if (lo < 0.0 && hi > 0.0) {
      svg << "<line x1=\"" << ml << "\" y1=\"" << detail::svg_num(sy(0))
          << "\" x2=\"" << ml + pw << "\" y2=\"" << detail::svg_num(sy(0))
          << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (int k : ks) {
      svg << "<text x=\"" << detail::svg_num(sx(k)) << "\" y=\""
          << mt + ph + 18 << "\" text-anchor=\"middle\">" << k << "</text>\n";
    }
    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">k</text>\n";
    for (int tick = 0; tick <= 4; ++tick) {
      const double v = lo + (hi - lo) * tick / 4.0;
      svg << "<text x=\"" << ml - 8 << "\" y=\"" << detail::svg_num(sy(v) + 4)
          << "\" text-anchor=\"end\">" << detail::svg_num(v) << "</text>\n";
    }
    double legend_y = mt + 6;
    for (const auto& [alg, bands] : curves) {
      const char* color = detail::algorithm_color(alg);
      std::ostringstream band_path, line_points;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        band_path << (i == 0 ? "M" : "L") << detail::svg_num(sx(ks[i])) << ","
                  << detail::svg_num(sy(bands[i].mean + bands[i].std_error))
                  << " ";
        line_points << detail::svg_num(sx(ks[i])) << ","
                    << detail::svg_num(sy(bands[i].mean)) << " ";
      }
      for (std::size_t i = ks.size(); i-- > 0;) {
        band_path << "L" << detail::svg_num(sx(ks[i])) << ","
                  << detail::svg_num(sy(bands[i].mean - bands[i].std_error))
                  << " ";
      }
      svg << "<path d=\"" << band_path.str() << "Z\" fill=\"" << color
          << "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
      svg << "<polyline points=\"" << line_points.str() << "\" fill=\"none\" "
          << "stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
      svg << "<rect x=\"" << ml + pw - 130 << "\" y=\"" << legend_y - 9
          << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
      svg << "<text x=\"" << ml + pw - 112 << "\" y=\"" << legend_y + 2
          << "\">" << alg << "</text>\n";
      legend_y += 18;
    }
    svg << "</svg>\n";

    RenderedPlot plot;
    plot.n = shape.first;
    plot.m = shape.second;
    plot.filename = "diff_n" + std::to_string(shape.first) + "_m" +
                    std::to_string(shape.second) + ".svg";
    plot.svg = svg.str();
    plots.push_back(std::move(plot));
  }
  return plots;
}

// Max percentage gain of mwu over saturate per (n, m), from mean raw
// values at each k, with the reference gain printed alongside when the
// shape matches the original experiment grid.
inline std::string render_summary(const std::string& csv_text) {
  const auto records = detail::value_records(parse_csv(csv_text));
  std::map<std::pair<int, int>,
           std::map<std::string, std::map<int, std::vector<double>>>>
      groups;
  for (const auto& r : records)
    groups[{r.n, r.m}][r.algorithm][r.k].push_back(r.value);

  std::ostringstream out;
  out << "summary: max percentage gain of mwu over saturate\n";
  for (const auto& [shape, algs] : groups) {
    const auto mwu = algs.find("mwu");
    const auto sat = algs.find("saturate");
    if (mwu == algs.end() || sat == algs.end()) continue;
    double best_gain = 0.0;
    bool have = false;
    for (const auto& [k, values] : mwu->second) {
      const auto sat_k = sat->second.find(k);
      if (sat_k == sat->second.end()) continue;
      const double mean_mwu = detail::summarize(values).mean;
      const double mean_sat = detail::summarize(sat_k->second).mean;
      if (mean_sat <= 0.0) continue;
      const double gain = (mean_mwu - mean_sat) / mean_sat * 100.0;
      if (!have || gain > best_gain) {
        best_gain = gain;
        have = true;
      }
    }
    if (!have) continue;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "n=%d m=%d: measured %.2f%%", shape.first,
                  shape.second, best_gain);
    out << buf;
    if (const auto ref = reference_max_gain_percent(shape.first, shape.second)) {
      std::snprintf(buf, sizeof(buf),
                    " (reference %.2f%%, different random initiators)", *ref);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

inline int cmd_plot(const std::string& csv_text,
                    const std::filesystem::path& out_dir, std::ostream& log) {
  const auto plots = render_difference_plots(csv_text);
  std::filesystem::create_directories(out_dir);
  for (const auto& plot : plots) {
    std::ofstream out(out_dir / plot.filename, std::ios::binary);
    out << plot.svg;
    log << "wrote " << (out_dir / plot.filename).string() << "\n";
  }
  const std::string summary = render_summary(csv_text);
  {
    std::ofstream out(out_dir / "summary.txt", std::ios::binary);
    out << summary;
  }
  log << summary;
  return 0;
}

}  // namespace submax::bench
