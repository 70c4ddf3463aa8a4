// Command-line front end. Exit status: 0 success, 1 rejected input,
// 2 I/O failure or a quantity too large to handle.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toricfold/render.hpp"
#include "toricfold/report.hpp"

namespace fs = std::filesystem;
using namespace toricfold;
using nlohmann::json;

namespace {

constexpr int kExitRejected = 1;
constexpr int kExitIo = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << data;
  if (!out) throw IoError("error while writing " + path);
}

struct Input {
  std::string path;
  std::string catalog_name;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* file = cmd->add_option("input", in.path, "fan document (JSON)");
  auto* cat = cmd->add_option("--catalog", in.catalog_name, "named fan from the built-in catalog");
  file->excludes(cat);
  cat->excludes(file);
}

struct Loaded {
  Fan2D fan;
  Provenance provenance;
};

Loaded load(const Input& in) {
  if (!in.catalog_name.empty()) return {catalog(in.catalog_name), {"catalog:" + in.catalog_name, std::nullopt}};
  if (in.path.empty()) throw DocumentError("give an input file or --catalog NAME");
  auto doc = parse_fan_document(read_file(in.path));
  return {Fan2D::validate(doc.rays, doc.name), {in.path, std::nullopt}};
}

json rejection(const FanError& e) {
  json offending = json::array();
  for (const auto& u : e.offending) offending.push_back({u[0], u[1]});
  return {{"valid", false}, {"reason", to_string(e.defect)}, {"detail", e.what()}, {"offending", offending}};
}

// Runs a command body and maps failures to exit codes.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const FanError& e) {
    std::cout << rejection(e).dump(2) << "\n";
    return kExitRejected;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  }
}

std::string summary_line(std::size_t index, const FullReport& r) {
  std::ostringstream os;
  os << index << " rays=" << r.fan.size() << " group=" << to_string(r.group.type) << " p=" << r.foldability.p
     << " dim=" << r.weights.total_dim();
  if (r.weights.empty()) {
    os << " rigid";
  } else if (r.quotient_failure) {
    os << " quotient=" << to_string(*r.quotient_failure);
  } else if (r.singularity) {
    const auto& s = *r.singularity;
    os << " rank=" << r.quotient->nprime_rank << " gorenstein=" << s.gorenstein << " terminal=" << s.terminal
       << " method=" << to_string(s.method);
  } else {
    os << " singularity_error";
  }
  if (r.classification) os << " model=" << r.classification->minimal_model;
  return os.str();
}

struct Tally {
  std::size_t total = 0, rigid = 0, gorenstein = 0, terminal = 0, smooth = 0, quotient_failures = 0, skipped = 0,
              errors = 0;
  void add(const FullReport& r) {
    ++total;
    if (r.weights.empty()) ++rigid;
    if (r.quotient_failure) ++quotient_failures;
    if (r.singularity) {
      gorenstein += r.singularity->gorenstein;
      terminal += r.singularity->terminal;
      smooth += r.singularity->smooth;
      skipped += r.singularity->method == TerminalMethod::Skipped;
    }
    if (!r.singularity_error.empty() || !r.descent_error.empty() || !r.classification_error.empty()) ++errors;
  }
  std::string str() const {
    std::ostringstream os;
    os << "total=" << total << " rigid=" << rigid << " gorenstein=" << gorenstein << " terminal=" << terminal
       << " smooth=" << smooth << " quotient_failures=" << quotient_failures << " skipped=" << skipped
       << " errors=" << errors;
    return os.str();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice symmetries, deformations and local moduli quotients of smooth toric surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Input validate_in;
  auto* validate = app.add_subcommand("validate", "check a fan and print it in canonical order");
  add_input(validate, validate_in);

  Input report_in;
  bool as_text = false;
  auto* report = app.add_subcommand("report", "full analysis of one fan");
  add_input(report, report_in);
  auto* json_flag = report->add_flag("--json", "JSON output (default)");
  auto* text_flag = report->add_flag("--text", as_text, "one 'pointer = value' line per field");
  json_flag->excludes(text_flag);

  Input render_in;
  std::string svg_path;
  auto* render = app.add_subcommand("render", "draw a fan as SVG");
  add_input(render, render_in);
  render->add_option("--svg", svg_path, "output file")->required();

  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string base = "Y2", dir;
  int rounds = 0;
  std::size_t max_rays = 30;
  bool summary = false;
  auto* batch = app.add_subcommand("batch", "analyse seeded random foldable fans or a directory of fan documents");
  auto* random_opt = batch->add_option("--random", count, "number of random fans")->check(CLI::PositiveNumber);
  batch->add_option("--seed", seed, "seed of the first fan; fan i uses seed + i");
  batch->add_option("--base", base, "Y2, Y3, Y4, P1xP1, P2 or Bl3P2");
  batch->add_option("--rounds", rounds, "equivariant blow-up rounds")->check(CLI::NonNegativeNumber);
  batch->add_option("--max-rays", max_rays, "skip rounds that would exceed this many rays");
  auto* dir_opt = batch->add_option("--dir", dir, "directory of *.json fan documents");
  batch->add_flag("--summary", summary, "append aggregate counts");
  random_opt->excludes(dir_opt);
  dir_opt->excludes(random_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitRejected;
  }

  if (*validate) {
    return guarded([&] {
      auto in = load(validate_in);
      json out = fan_to_json(in.fan);
      out["valid"] = true;
      out["ray_count"] = in.fan.size();
      std::cout << out.dump(2) << "\n";
      return 0;
    });
  }
  if (*report) {
    return guarded([&] {
      auto in = load(report_in);
      json doc = report_to_json(full_report(in.fan), in.provenance);
      std::cout << (as_text ? json_to_text(doc) : doc.dump(2) + "\n");
      return 0;
    });
  }
  if (*render) {
    return guarded([&] {
      auto in = load(render_in);
      write_file(svg_path, render_svg(in.fan));
      return 0;
    });
  }
  return guarded([&] {
    if (count == 0 && dir.empty()) throw DocumentError("batch needs --random N or --dir PATH");
    Tally tally;
    if (!dir.empty()) {
      std::error_code ec;
      std::vector<fs::path> files;
      for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec))
        if (it->path().extension() == ".json") files.push_back(it->path());
      if (ec) throw IoError("cannot list " + dir + ": " + ec.message());
      std::sort(files.begin(), files.end());
      for (std::size_t i = 0; i < files.size(); ++i) {
        auto doc = parse_fan_document(read_file(files[i].string()));
        auto r = full_report(Fan2D::validate(doc.rays, doc.name));
        std::cout << summary_line(i, r) << " file=" << files[i].filename().string() << "\n";
        tally.add(r);
      }
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        RandomFanOptions opts;
        opts.seed = seed + i;
        opts.base = base;
        opts.rounds = rounds;
        opts.max_rays = max_rays;
        auto r = full_report(random_foldable_fan(opts));
        std::cout << summary_line(i, r) << "\n";
        tally.add(r);
      }
    }
    if (summary) std::cout << tally.str() << "\n";
    return 0;
  });
}
