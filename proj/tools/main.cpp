// origami: run, inspect and check .ori construction scripts.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "origami/invariants.hpp"
#include "origami/render.hpp"
#include "origami/script.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kScriptError = 1;
constexpr int kIoError = 2;

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out || !(out << text)) throw IoError{"cannot write " + (dir / name).string()};
}

std::string step_name(std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "step-%02zu", k);
  return buf;
}

origami::ConstructionTrace load(const std::string& path) {
  return origami::script::run(origami::script::parse(read_file(path)));
}

struct RunOptions {
  std::string file;
  std::string svg_dir, dot_dir, json_dir, pose_dir;
  double gap = 0.05;
  bool trace = false;
};

void print_trace(const origami::ConstructionTrace& trace) {
  std::size_t k = 0;
  for (const origami::TraceStep& s : trace.steps) {
    if (s.substeps.empty()) {
      std::cout << "O" << ++k << "  " << s.label << "\n";
      continue;
    }
    std::cout << "O" << k + 1 << "-O" << k + s.substeps.size() << "  " << s.label << "\n";
    for (const origami::TraceStep& sub : s.substeps) {
      std::cout << "  O" << ++k << "  " << sub.label << "\n";
    }
  }
}

int run(const RunOptions& opt) {
  const origami::ConstructionTrace trace = load(opt.file);
  const auto steps = trace.flattened();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const origami::AbstractOrigami& ao = steps[i]->snapshot;
    const std::string base = step_name(i + 1);
    if (!opt.svg_dir.empty()) write_file(opt.svg_dir, base + ".svg", origami::to_svg(ao));
    if (!opt.json_dir.empty()) write_file(opt.json_dir, base + ".json", origami::to_json(ao));
    if (!opt.dot_dir.empty()) {
      write_file(opt.dot_dir, base + "-adjacency.dot",
                 origami::to_dot(origami::adjacency_graph(ao), origami::GraphKind::Adjacency));
      write_file(opt.dot_dir, base + "-superposition.dot",
                 origami::to_dot(origami::superposition_graph(ao), origami::GraphKind::Superposition));
    }
    if (!opt.pose_dir.empty()) {
      write_file(opt.pose_dir, base + "-3d.json", origami::export_3d(origami::pose3d(ao, opt.gap)));
    }
  }
  if (opt.trace) print_trace(trace);
  return 0;
}

int graphs(const std::string& file, std::size_t step) {
  const origami::ConstructionTrace trace = load(file);
  const auto steps = trace.flattened();
  if (step < 1 || step > steps.size()) {
    std::cerr << file << ": no step " << step << " (the trace has " << steps.size() << ")\n";
    return kScriptError;
  }
  const origami::AbstractOrigami& ao = steps[step - 1]->snapshot;
  std::cout << origami::to_dot(origami::adjacency_graph(ao), origami::GraphKind::Adjacency)
            << origami::to_dot(origami::superposition_graph(ao), origami::GraphKind::Superposition);
  return 0;
}

int check(const std::string& file) {
  const origami::ConstructionTrace trace = load(file);
  const auto violations = origami::check_trace(trace);
  for (origami::Invariant inv : origami::kAllInvariants) {
    std::size_t n = 0;
    for (const auto& v : violations) {
      if (v.invariant != inv) continue;
      if (n++ < 5) std::cout << "  " << v.message << "\n";
    }
    std::cout << origami::to_string(inv) << ": " << (n ? std::to_string(n) + " violation(s)" : "ok")
              << "\n";
  }
  std::cout << trace.flattened().size() << " steps checked\n";
  return violations.empty() ? 0 : kScriptError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run, inspect and check origami construction scripts"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute a script and export every step");
  run_cmd->add_option("file", run_opt.file, "Script (.ori)")->required();
  run_cmd->add_option("--emit-svg", run_opt.svg_dir, "Write step-XX.svg files to DIR");
  run_cmd->add_option("--emit-dot", run_opt.dot_dir, "Write adjacency and superposition DOT files to DIR");
  run_cmd->add_option("--emit-json", run_opt.json_dir, "Write step-XX.json dumps to DIR");
  run_cmd->add_option("--emit-3d", run_opt.pose_dir, "Write step-XX-3d.json poses to DIR");
  run_cmd->add_option("--gap", run_opt.gap, "Layer gap of the 3D pose")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--trace", run_opt.trace, "Print the construction sequence");

  std::string graphs_file;
  std::size_t graphs_step = 0;
  CLI::App* graphs_cmd = app.add_subcommand("graphs", "Print the DOT graphs of one step");
  graphs_cmd->add_option("file", graphs_file, "Script (.ori)")->required();
  graphs_cmd->add_option("--step", graphs_step, "1-based step index")->required();

  std::string check_file;
  CLI::App* check_cmd = app.add_subcommand("check", "Check the invariants over the whole trace");
  check_cmd->add_option("file", check_file, "Script (.ori)")->required();

  CLI11_PARSE(app, argc, argv);

  std::string file;
  try {
    if (*run_cmd) {
      file = run_opt.file;
      return run(run_opt);
    }
    if (*graphs_cmd) {
      file = graphs_file;
      return graphs(graphs_file, graphs_step);
    }
    file = check_file;
    return check(check_file);
  } catch (const IoError& e) {
    std::cerr << "origami: " << e.message << "\n";
    return kIoError;
  } catch (const origami::script::ScriptError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kScriptError;
  } catch (const origami::Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kScriptError;
  }
}
