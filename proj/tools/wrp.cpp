#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wrp/wrp.hpp"

namespace {

enum Exit { kOk = 0, kBadFlags = 1, kUnsupported = 2, kInternal = 3, kIo = 4, kCertificate = 5 };

int exit_code(wrp::ErrorCode c) {
  using wrp::ErrorCode;
  switch (c) {
    case ErrorCode::SourceOutsideUnsupported:
    case ErrorCode::RightEdgeInteraction:
    case ErrorCode::SourceAtCorner:
      return kUnsupported;
    case ErrorCode::NoFeasibleType:
    case ErrorCode::RootSolveFailure:
    case ErrorCode::TypeNotAdmissible:
    case ErrorCode::VertexOffEdge:
    case ErrorCode::NotSquarefree:
      return kInternal;
    default:
      return kBadFlags;
  }
}

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "'" + text + "' is not a comma-separated list of numbers");
    }
  }
  if (out.size() != n) throw CLI::ValidationError(what, "expected " + std::to_string(n) + " numbers");
  return out;
}

wrp::Point parse_point(const std::string& text, const char* what) {
  const auto v = parse_list(text, 2, what);
  return {v[0], v[1]};
}

wrp::Rect parse_rect(const std::string& text, const char* what) {
  const auto v = parse_list(text, 4, what);
  return {std::min(v[0], v[2]), std::min(v[1], v[3]), std::max(v[0], v[2]), std::max(v[1], v[3])};
}

double parse_width(const std::string& text) {
  if (text == "inf" || text == "infinity") return wrp::kInf;
  return parse_list(text, 1, "--width")[0];
}

bool write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return bool(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << body;
  f.close();
  return bool(f);
}

struct ShortestArgs {
  double alpha = 0.0;
  std::string rect, s, t, format = "json";
};

struct SpmArgs {
  double alpha = 0.0;
  std::optional<double> sx;
  std::string source, width, bbox, out, format = "svg";
  int resolution = 64;
};

struct OracleArgs {
  double alpha = 0.0;
  std::string rect = "0,-1,10,0", s, t;
  int steiner = 400;
  int sweeps = 4000;
};

int run_shortest(const ShortestArgs& a) {
  const wrp::QueryResult r =
      wrp::solve_query(parse_rect(a.rect, "--rect"), parse_point(a.s, "--s"), parse_point(a.t, "--t"), a.alpha);
  std::cout << (a.format == "text" ? wrp::io::query_text(r) : wrp::io::query_json(r));
  return kOk;
}

int run_spm(const SpmArgs& a) {
  if (a.sx.has_value() == !a.source.empty()) throw CLI::ValidationError("spm", "give exactly one of --sx or --source");
  wrp::CanonicalScene scene;
  if (a.sx) {
    scene = wrp::make_scene(a.alpha, a.width.empty() ? wrp::kInf : parse_width(a.width), wrp::OnTopBoundary{*a.sx});
  } else {
    const double w = a.width.empty() ? 1.0 : parse_width(a.width);
    scene = wrp::make_scene(a.alpha, w, wrp::InteriorSource{parse_point(a.source, "--source")});
  }
  wrp::ViewBox box = a.sx ? wrp::detail::default_boundary_box(scene) : wrp::detail::default_interior_box(scene);
  if (!a.bbox.empty()) {
    const auto v = parse_list(a.bbox, 4, "--bbox");
    box = {v[0], v[1], v[2], v[3]};
  }
  if (!box.valid()) throw CLI::ValidationError("--bbox", "bounding box is empty");
  const auto curves = a.sx ? wrp::bisector_catalog(scene, box) : wrp::interior_catalog(scene, box);
  const auto grid = wrp::sample_spm_grid(scene, box, a.resolution);
  const std::string body = a.format == "json" ? wrp::io::spm_json(scene, box, curves, grid)
                                              : wrp::io::spm_svg(scene, box, curves, grid);
  if (!write_output(a.out, body)) {
    std::cerr << "error: cannot write " << a.out << '\n';
    return kIo;
  }
  if (!a.out.empty() && a.out != "-") std::cerr << curves.size() << " curves written to " << a.out << '\n';
  return kOk;
}

int run_oracle(const OracleArgs& a) {
  const wrp::Rect rect = parse_rect(a.rect, "--rect");
  wrp::Point s = parse_point(a.s, "--s");
  wrp::Point t = parse_point(a.t, "--t");
  const wrp::QueryResult closed = wrp::solve_query(rect, s, t, a.alpha);
  if (closed.reversed) std::swap(s, t);
  const wrp::NormalizedQuery nq = wrp::normalize_scene(rect, s, t, a.alpha);

  const wrp::OracleResult o = wrp::oracle_shortest(nq.scene, nq.t, a.steiner, a.sweeps > 0, a.sweeps);
  const double oracle_len = nq.frame.length_to_original(o.length);
  const double gap = std::fabs(oracle_len - closed.length) / closed.length;
  std::printf("type %d\nclosed_form %.17g\noracle %.17g\nrelative_gap %.3e\nsteiner %d\nrefined %s\n", closed.type,
              closed.length, oracle_len, gap, o.K, o.refined ? "yes" : "no");
  return gap <= 1e-4 ? kOk : kInternal;
}

int run_acmq(const std::vector<std::uint64_t>& overrides) {
  wrp::CertificateOptions opt;
  for (std::size_t k = 0; k < overrides.size() && k < opt.primes.size(); ++k) opt.primes[k] = overrides[k];
  const wrp::CertificateReport rep = wrp::verify_certificate(opt);
  std::cout << wrp::io::certificate_json(rep);
  return rep.pass ? kOk : kCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest paths through a weighted rectangle"};
  app.require_subcommand(1);

  ShortestArgs sa;
  auto* shortest = app.add_subcommand("shortest", "exact shortest path between two points");
  shortest->add_option("--alpha", sa.alpha, "weight of the rectangle")->required();
  shortest->add_option("--rect", sa.rect, "x0,y0,x1,y1")->required();
  shortest->add_option("--s", sa.s, "source x,y")->required();
  shortest->add_option("--t", sa.t, "target x,y")->required();
  shortest->add_option("--format", sa.format)->check(CLI::IsMember({"json", "text"}));

  SpmArgs ma;
  auto* spm = app.add_subcommand("spm", "shortest path map and bisector catalog");
  spm->add_option("--alpha", ma.alpha)->required();
  auto* sx_opt = spm->add_option("--sx", ma.sx, "boundary source on the top side (canonical frame)");
  auto* src_opt = spm->add_option("--source", ma.source, "interior source x,y (canonical frame)");
  sx_opt->excludes(src_opt);
  spm->add_option("--width", ma.width, "rectangle width, or inf");
  spm->add_option("--bbox", ma.bbox, "x0,y0,x1,y1 view box");
  spm->add_option("--resolution", ma.resolution, "grid cells per side")->check(CLI::Range(16, 4096));
  spm->add_option("--out", ma.out, "output file (default stdout)");
  spm->add_option("--format", ma.format)->check(CLI::IsMember({"svg", "json"}));

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "compare the closed form against the discretized oracle");
  oracle->add_option("--alpha", oa.alpha)->required();
  oracle->add_option("--rect", oa.rect, "x0,y0,x1,y1")->capture_default_str();
  oracle->add_option("--s", oa.s)->required();
  oracle->add_option("--t", oa.t)->required();
  oracle->add_option("--steiner", oa.steiner, "points per edge")->check(CLI::Range(8, 100000))->capture_default_str();
  oracle->add_option("--sweeps", oa.sweeps, "refinement sweeps (0 disables refinement)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::vector<std::uint64_t> overrides;
  auto* acmq = app.add_subcommand("acmq-check", "verify the degree-11 non-solvability certificate");
  acmq->add_option("--prime-override", overrides, "replace the primes in order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadFlags;
  }

  try {
    if (*shortest) return run_shortest(sa);
    if (*spm) return run_spm(ma);
    if (*oracle) return run_oracle(oa);
    if (*acmq) return run_acmq(overrides);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const wrp::Error& e) {
    std::cerr << "error [" << wrp::to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadFlags;
}
