#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cellrook/analysis.hpp"
#include "cellrook/enumerate.hpp"
#include "cellrook/errors.hpp"
#include "cellrook/geometry.hpp"
#include "cellrook/rook.hpp"
#include "cellrook/shape_io.hpp"

namespace {

using namespace cellrook;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ShapeInput {
  std::string path = "-";
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("shape", path, "shape file, or - for stdin")
        ->default_val("-");
    cmd->add_option("--format", format, "grid, coords, json or auto")
        ->check(CLI::IsMember({"auto", "grid", "coords", "json"}))
        ->default_val("auto");
  }

  CellCollection load() const {
    ShapeFormat fmt = ShapeFormat::Auto;
    if (format == "grid") fmt = ShapeFormat::Grid;
    else if (format == "coords") fmt = ShapeFormat::Coords;
    else if (format == "json") fmt = ShapeFormat::Json;
    else if (path != "-") fmt = format_from_path(path);
    return parse_collection(read_input(path), fmt);
  }
};

AlignmentMode alignment_from(const std::string& name) {
  return name == "coordinate" ? AlignmentMode::Coordinate : AlignmentMode::Run;
}

Universe universe_from(const std::string& name) {
  return name == "collection" ? Universe::Collection : Universe::Polyomino;
}

void add_alignment_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--alignment", target,
                  "alignment semantics for the empty-residue condition")
      ->check(CLI::IsMember({"run", "coordinate"}))
      ->default_val("run");
}

int cmd_show(const ShapeInput& input, const std::string& emit) {
  const CellCollection P = input.load();
  if (emit == "text") {
    std::cout << to_grid_text(P);
    return kExitOk;
  }
  if (emit == "json") {
    std::cout << to_json_text(P) << "\n";
    return kExitOk;
  }

  std::cout << "rank: " << P.rank() << "\n";
  std::cout << "bounding: " << P.width() << "x" << P.height() << "\n";
  std::cout << "components: " << weak_components(P).size() << " weak, "
            << strong_components(P).size() << " strong\n";
  std::cout << to_grid_text(P);
  std::cout << "horizontal runs: " << P.horizontal_runs().size() << "\n";
  for (const Run& run : P.horizontal_runs())
    std::cout << "  h" << run.id << ": " << to_string(run.anchor) << " len "
              << run.length << "\n";
  std::cout << "vertical runs: " << P.vertical_runs().size() << "\n";
  for (const Run& run : P.vertical_runs())
    std::cout << "  v" << run.id << ": " << to_string(run.anchor) << " len "
              << run.length << "\n";

  const auto rects = maximal_rectangles(P);
  std::cout << "maximal rectangles: " << rects.size() << "\n";
  for (std::size_t i = 0; i < rects.size(); ++i)
    std::cout << "  B" << i + 1 << ": " << to_string(rects[i]) << " "
              << rects[i].width() << "x" << rects[i].height() << "\n";

  std::cout << "residues:\n";
  for (const Residue& res : residues(P, rects)) {
    std::cout << "  B" << res.rect_index + 1 << ": ";
    if (res.empty()) {
      std::cout << "empty\n";
      continue;
    }
    std::cout << "{";
    for (std::size_t i = 0; i < res.cells.size(); ++i)
      std::cout << (i ? "," : "") << to_string(res.cells[i]);
    std::cout << "}";
    if (!res.is_grid) {
      std::cout << " not a grid\n";
      continue;
    }
    const Gluing g = gluing(res);
    std::cout << " gluing " << g.width() << "x" << g.height()
              << (g.is_square() ? " (square)" : "") << "\n";
  }
  return kExitOk;
}

int cmd_poly(const ShapeInput& input, bool json) {
  const SwitchingPolynomial poly = switching_polynomial(input.load());
  if (json)
    std::cout << nlohmann::json(poly.coeffs).dump() << "\n";
  else
    std::cout << to_string(poly) << "\n";
  return kExitOk;
}

int cmd_stable(const ShapeInput& input, const std::string& alignment) {
  const StabilityResult st =
      is_domino_stable(input.load(), alignment_from(alignment));
  if (st.stable)
    std::cout << "true\n";
  else
    std::cout << "false (" << st.detail << ")\n";
  return kExitOk;
}

int cmd_rook_number(const ShapeInput& input) {
  std::cout << rook_number(input.load()) << "\n";
  return kExitOk;
}

int cmd_classes(const ShapeInput& input, int k) {
  std::cout << class_count(input.load(), k) << "\n";
  return kExitOk;
}

int cmd_verify(const ShapeInput& input, const std::string& alignment,
               bool json) {
  const VerificationReport report =
      verify(input.load(), alignment_from(alignment));
  if (json) {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << "id: " << report.id << "\n";
    std::cout << "rank: " << report.rank << "\n";
    std::cout << "poly: " << to_string(report.poly) << "\n";
    std::cout << "domino_stable: " << (report.domino_stable ? "true" : "false")
              << "\n";
    std::cout << "palindromic: " << (report.palindromic ? "true" : "false")
              << "\n";
    std::cout << "checks:\n";
    for (const auto& [name, check] : report.checks) {
      std::cout << "  " << name << ": ";
      switch (check.status) {
        case CheckStatus::Pass:
          std::cout << "pass";
          break;
        case CheckStatus::Fail:
          std::cout << "fail (" << check.reason << ")";
          break;
        case CheckStatus::Skipped:
          std::cout << "skipped (" << check.reason << ")";
          break;
      }
      std::cout << "\n";
    }
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(int rank, const std::string& universe,
                  const std::string& emit, int jobs) {
  const Universe u = universe_from(universe);
  if (emit == "count") {
    std::cout << count_shapes(rank, u, jobs) << "\n";
  } else if (emit == "json") {
    enumerate_shapes(rank, u, [](CellCollection&& P) {
      std::cout << to_json_text(P) << "\n";
    });
  } else {
    bool first = true;
    enumerate_shapes(rank, u, [&first](CellCollection&& P) {
      if (!first) std::cout << "\n";
      first = false;
      std::cout << to_grid_text(P);
    });
  }
  return kExitOk;
}

int cmd_corpus_verify(int rank, const std::string& universe,
                      const std::string& alignment, int jobs, bool keep_going,
                      bool audit, bool reports) {
  CorpusOptions options;
  options.alignment = alignment_from(alignment);
  options.jobs = jobs;
  options.keep_going = keep_going;
  options.audit_alignment = audit;
  std::mutex out_mutex;
  if (reports) {
    options.on_report = [&out_mutex](const CellCollection&,
                                     const VerificationReport& report) {
      std::lock_guard<std::mutex> lock(out_mutex);
      std::cout << report.to_json() << "\n";
    };
  }

  const Universe u = universe_from(universe);
  CorpusSummary summary;
  try {
    summary = verify_corpus(rank, u, options);
  } catch (const CounterexampleError& e) {
    std::cerr << "counterexample found (" << e.what() << "):\n"
              << e.shape_text();
    return kExitCheckFailed;
  }

  std::cout << "universe=" << universe << " rank=" << rank
            << " total=" << summary.total << " stable=" << summary.stable
            << " palindromic=" << summary.palindromic
            << " failures=" << summary.failed_shapes
            << " nongrid_residues=" << summary.nongrid_residue_shapes;
  if (audit)
    std::cout << " alignment_disagreements="
              << summary.alignment_disagreements;
  std::cout << "\n";
  if (summary.failed_shapes > 0) {
    for (const std::string& text : summary.counterexamples)
      std::cerr << text << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "switching rook polynomials, domino-stability and exhaustive "
      "verification for collections of cells"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  ShapeInput show_input;
  std::string show_emit = "human";
  auto* show = app.add_subcommand(
      "show", "print the normalized grid and its derived structure");
  show_input.attach(show);
  show->add_option("--emit", show_emit, "human, text (grid only) or json")
      ->check(CLI::IsMember({"human", "text", "json"}))
      ->default_val("human");
  show->callback([&] { exit_code = cmd_show(show_input, show_emit); });

  ShapeInput poly_input;
  bool poly_json = false;
  auto* poly =
      app.add_subcommand("poly", "print the switching rook polynomial");
  poly_input.attach(poly);
  poly->add_flag("--json", poly_json, "print the coefficient array");
  poly->callback([&] { exit_code = cmd_poly(poly_input, poly_json); });

  ShapeInput stable_input;
  std::string stable_alignment;
  auto* stable = app.add_subcommand("stable", "decide domino-stability");
  stable_input.attach(stable);
  add_alignment_option(stable, stable_alignment);
  stable->callback(
      [&] { exit_code = cmd_stable(stable_input, stable_alignment); });

  ShapeInput rook_input;
  auto* rook = app.add_subcommand("rook-number", "print the rook number");
  rook_input.attach(rook);
  rook->callback([&] { exit_code = cmd_rook_number(rook_input); });

  ShapeInput classes_input;
  int classes_k = 0;
  auto* classes = app.add_subcommand(
      "classes", "count switch-equivalence classes of k-rook configurations");
  classes_input.attach(classes);
  classes->add_option("--k", classes_k, "number of rooks")->required();
  classes->callback(
      [&] { exit_code = cmd_classes(classes_input, classes_k); });

  ShapeInput verify_input;
  std::string verify_alignment;
  bool verify_json = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the structural checks on one shape");
  verify_input.attach(verify_cmd);
  add_alignment_option(verify_cmd, verify_alignment);
  verify_cmd->add_flag("--json", verify_json, "print a JSON report");
  verify_cmd->callback([&] {
    exit_code = cmd_verify(verify_input, verify_alignment, verify_json);
  });

  int enum_rank = 0;
  std::string enum_universe = "poly";
  std::string enum_emit = "count";
  int enum_jobs = 1;
  auto* enumerate =
      app.add_subcommand("enumerate", "stream all free shapes of a rank");
  enumerate->add_option("--rank", enum_rank, "number of cells")->required();
  enumerate->add_option("--universe", enum_universe,
                        "poly (edge-connected) or collection (king-connected)")
      ->check(CLI::IsMember({"poly", "collection"}))
      ->default_val("poly");
  enumerate->add_option("--emit", enum_emit, "text, json or count")
      ->check(CLI::IsMember({"text", "json", "count"}))
      ->default_val("count");
  enumerate
      ->add_option("--jobs", enum_jobs, "worker threads (count mode only)")
      ->envname("CELLROOK_JOBS")
      ->default_val(1);
  enumerate->callback([&] {
    exit_code = cmd_enumerate(enum_rank, enum_universe, enum_emit, enum_jobs);
  });

  int corpus_rank = 0;
  std::string corpus_universe = "poly";
  std::string corpus_alignment;
  int corpus_jobs = 1;
  bool corpus_keep_going = false;
  bool corpus_audit = false;
  bool corpus_reports = false;
  auto* corpus = app.add_subcommand(
      "corpus-verify", "verify the structural checks over a whole rank");
  corpus->add_option("--rank", corpus_rank, "number of cells")->required();
  corpus->add_option("--universe", corpus_universe,
                     "poly (edge-connected) or collection (king-connected)")
      ->check(CLI::IsMember({"poly", "collection"}))
      ->default_val("poly");
  add_alignment_option(corpus, corpus_alignment);
  corpus->add_option("--jobs", corpus_jobs, "worker threads")
      ->envname("CELLROOK_JOBS")
      ->default_val(1);
  corpus->add_flag("--keep-going", corpus_keep_going,
                   "collect every counterexample instead of stopping");
  corpus->add_flag("--audit-alignment", corpus_audit,
                   "also run the other alignment mode and count differences");
  corpus->add_flag("--reports", corpus_reports,
                   "print one JSON report line per shape");
  corpus->callback([&] {
    exit_code =
        cmd_corpus_verify(corpus_rank, corpus_universe, corpus_alignment,
                          corpus_jobs, corpus_keep_going, corpus_audit,
                          corpus_reports);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
