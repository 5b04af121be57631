// Copyright 2026 The minplus Authors
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

#include "minplus/cli/app.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "minplus/cli/commands.h"
#include "minplus/cli/corpus.h"
#include "minplus/cli/run_config.h"
#include "minplus/io/json.h"

namespace minplus {
namespace {

// Opens --out on the first write, so a failed run leaves no partial file.
class Output {
 public:
  Output(std::string path, std::ostream& fallback)
      : path_(std::move(path)), os_(&fallback) {}
  void Line(const Json& j) { Stream() << j.dump() << "\n"; }
  void Flush() {
    Stream().flush();
    if (!*os_) throw std::runtime_error("write failed");
  }

 private:
  std::ostream& Stream() {
    if (!path_.empty() && !file_.is_open()) {
      file_.open(path_);
      if (!file_) throw UsageError(path_ + ": cannot write");
      os_ = &file_;
    }
    return *os_;
  }

  std::string path_;
  std::ofstream file_;
  std::ostream* os_;
};

std::string Joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Min-plus products, exact triangles and their reductions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<uint64_t> seed;
  std::string config_file, out_path;
  std::vector<std::string> knobs;
  int workers = 1;
  bool timings = false;
  app.add_option("--seed", seed, "Seed for every randomized path");
  app.add_option("--config", config_file, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--knob", knobs, "Override, key=value (repeatable)");
  app.add_option("--workers", workers, "Worker threads")
      ->check(CLI::Range(1, 1024));
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_flag("--timings", timings, "Add wall-clock timings to reports");

  std::string in_path, report_path, csv_path;
  std::string algorithm, reduction = "slice-uniform";
  CLI::App* gen = app.add_subcommand("gen", "Generate a corpus");
  CLI::App* solve = app.add_subcommand("solve", "Run an algorithm on a corpus");
  solve->add_option("--in", in_path, "Corpus file")->required();
  solve->add_option("--algorithm", algorithm,
                    "One of: " + Joined(TriangleAlgorithms()) + ", " +
                        Joined(ProductAlgorithms()))
      ->required();
  CLI::App* reduce = app.add_subcommand("reduce", "Run a reduction on a corpus");
  reduce->add_option("--in", in_path, "Corpus file")->required();
  reduce->add_option("--reduction", reduction, "One of: " + Joined(ReductionNames()))
      ->required();
  CLI::App* verify = app.add_subcommand("verify", "Check a report against its corpus");
  verify->add_option("--in", in_path, "Corpus file")->required();
  verify->add_option("--report", report_path, "Report from solve or reduce")
      ->required();
  CLI::App* bench = app.add_subcommand("bench", "Instance counts against knob t");
  bench->add_option("--in", in_path, "Corpus file")->required();
  bench->add_option("--reduction", reduction, "One of: " + Joined(ReductionNames()));
  bench->add_option("--csv", csv_path, "Summary CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_file.empty()) {
      try {
        ApplyConfig(cfg, ReadJsonFile(config_file));
      } catch (const UsageError& e) {
        throw UsageError(config_file + ": " + e.what());
      }
    }
    if (seed) cfg.seed = seed;
    for (const std::string& k : knobs) ApplyKnob(cfg, k);
    cfg.workers = workers;
    cfg.timings = timings;

    Output sink(out_path, out);
    int status = kExitOk;
    if (gen->parsed()) {
      for (const CorpusRecord& r : GenerateCorpus(cfg)) sink.Line(ToJson(r));
    } else if (solve->parsed()) {
      for (const Json& line : SolveCorpus(ReadCorpus(in_path), algorithm, cfg))
        sink.Line(line);
    } else if (reduce->parsed()) {
      for (const Json& line : ReduceCorpus(ReadCorpus(in_path), reduction, cfg))
        sink.Line(line);
    } else if (verify->parsed()) {
      const std::vector<CorpusRecord> corpus = ReadCorpus(in_path);
      const std::vector<Json> reports = ReadJsonLines(report_path);
      int64_t failed = 0;
      for (size_t t = 0; t < reports.size(); ++t) {
        const std::string where = report_path + ":" + std::to_string(t + 1);
        if (!reports[t].is_object() || !reports[t].contains("id") ||
            !reports[t]["id"].is_string())
          throw ParseError(where + ": missing id");
        const std::string id = reports[t]["id"].get<std::string>();
        const CorpusRecord* rec = nullptr;
        for (const CorpusRecord& r : corpus)
          if (r.id == id) rec = &r;
        if (rec == nullptr) throw ParseError(where + ": no record " + id + " in " + in_path);
        Json result;
        try {
          result = VerifyReportLine(*rec, reports[t]);
        } catch (const ParseError& e) {
          throw ParseError(where + ": " + e.what());
        }
        if (!result["ok"].get<bool>()) ++failed;
        sink.Line(result);
      }
      sink.Line(Json{{"summary", {{"checked", reports.size()}, {"failed", failed}}}});
      if (failed > 0) status = kExitVerificationFailed;
    } else if (bench->parsed()) {
      const std::vector<BenchPoint> points =
          BenchCorpus(ReadCorpus(in_path), reduction, cfg);
      bool nondecreasing = true;
      for (size_t t = 0; t < points.size(); ++t) {
        sink.Line(ToJson(points[t], cfg.timings));
        if (t > 0 && points[t].instances < points[t - 1].instances)
          nondecreasing = false;
      }
      sink.Line(Json{{"curve", "instances_vs_t"},
                     {"reduction", reduction},
                     {"nondecreasing", nondecreasing}});
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw UsageError(csv_path + ": cannot write");
        csv << BenchCsv(points, cfg.timings);
      }
    }
    sink.Flush();
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace minplus
