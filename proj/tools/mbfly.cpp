#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mbf/butterfly.hpp"
#include "mbf/codecs.hpp"
#include "mbf/convert.hpp"
#include "mbf/error.hpp"
#include "mbf/gen.hpp"
#include "mbf/moves.hpp"
#include "mbf/render.hpp"
#include "mbf/verify.hpp"

using namespace mbf;

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit codes by error class:
//   2 file I/O, 3 parse/format, 4 structural validation,
//   5 preprocessing/bridge decomposition, 6 moves, 7 invariants/rendering.
int exit_code_for(Err e) {
  switch (e) {
    case Err::SyntaxError:
    case Err::SymbolCountError:
    case Err::NonPlanarPD:
    case Err::DanglingSegment:
      return 3;
    case Err::NotInvolution:
    case Err::NotConnected:
    case Err::NotSphere:
    case Err::NotBivalent:
    case Err::ProtectedVertex:
    case Err::LoopAtVertex:
    case Err::Disconnects:
    case Err::CornersNotOnFace:
    case Err::SameSideEdge:
    case Err::AnchorNotAntipodal:
    case Err::NonBivalentAE:
    case Err::UnclassifiableVertex:
    case Err::GammaNotPaths:
    case Err::BadParameters:
    case Err::ClosedTrunk:
      return 4;
    case Err::HasClosedCurve:
    case Err::Disconnected:
    case Err::ComponentWithoutBridge:
      return 5;
    case Err::NotSimple:
    case Err::NoAdmissibleEndpoint:
    case Err::SelfAdjacentFace:
    case Err::WouldDisconnect:
    case Err::NotEVertex:
    case Err::ComponentAllSimple:
      return 6;
    case Err::TooManyCrossings:
    case Err::DegenerateLayout:
      return 7;
  }
  return 1;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Relative output paths land in $MBFLY_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("MBFLY_OUT_DIR");
  if (!dir || !*dir || path.empty() || path == "-" || path[0] == '/')
    return path;
  std::string d = dir;
  if (d.back() != '/') d += '/';
  return d + path;
}

void spit(const std::string& path, const std::string& text) {
  std::string full = resolve_out(path);
  if (full == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(full);
  if (!out) throw IoFailure("cannot write " + full);
  out << text;
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() &&
         s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

enum class Kind { ButterflyFile, LinkFile };

Kind sniff(const std::string& path, const std::string& text) {
  if (ends_with(path, ".btf")) return Kind::ButterflyFile;
  if (ends_with(path, ".pd")) return Kind::LinkFile;
  std::istringstream in(text);
  std::string line, tok;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "X" || tok == "O") return Kind::LinkFile;
    if (tok == "btf" || tok == "face") return Kind::ButterflyFile;
    break;
  }
  fail(Err::SyntaxError, "cannot tell .pd from .btf content in " + path);
}

ButterflyDiagram load_butterfly_any(const std::string& path) {
  std::string text = slurp(path);
  if (sniff(path, text) == Kind::ButterflyFile) return parse_btf(text);
  return link_to_butterfly(bridge_decompose(preprocess_diagram(parse_pd(text))));
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "m-butterfly toolkit: butterfly/link conversions, trunk moves, "
      "invariants, rendering"};
  app.require_subcommand(1);
  bool json_errors = false;

  std::string in_path, out_path = "-", pd_path, svg_path = "-",
              trace_path;
  bool gauss = false, gamma = false;
  int p = 0, q = 0;
  RenderSpec rspec;
  GenConfig gcfg;
  const char* env_seed = std::getenv("MBFLY_SEED");
  if (env_seed && *env_seed) gcfg.seed = std::strtoull(env_seed, nullptr, 10);

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", json_errors,
                  "machine-readable JSON errors on stderr");
  };
  add_json(&app);

  auto* validate = app.add_subcommand(
      "validate", "check a butterfly file; exit 0 iff valid");
  validate->add_option("input", in_path, ".btf file (or - for stdin)")
      ->required();
  add_json(validate);

  auto* tolink = app.add_subcommand(
      "to-link", "emit the bridge diagram of a butterfly");
  tolink->add_option("input", in_path, ".btf file (or -)")->required();
  tolink->add_option("--pd", pd_path, "write PD to this file");
  tolink->add_flag("--gauss", gauss, "print a Gauss code instead of PD");
  tolink->add_option("--svg", svg_path, "also render the diagram to this file")
      ->expected(1);
  add_json(tolink);
  bool tolink_svg = false;
  tolink->callback([&] { tolink_svg = !tolink->get_option("--svg")->empty(); });

  auto* tobf = app.add_subcommand(
      "to-butterfly", "wall butterfly of a link diagram");
  tobf->add_option("input", in_path, ".pd file (or -)")->required();
  tobf->add_option("--out", out_path, "output .btf path (default stdout)");
  add_json(tobf);

  auto* reduce = app.add_subcommand(
      "reduce", "apply trunk-reducing moves until no simple trunk remains");
  reduce->add_option("input", in_path, ".btf or .pd file (or -)")->required();
  reduce->add_option("--trace", trace_path, "write JSONL move trace here");
  reduce->add_option("--out", out_path, "write the reduced .btf here");
  add_json(reduce);

  auto* expand = app.add_subcommand(
      "expand", "expand every E-vertex into its own trunk");
  expand->add_option("input", in_path, ".btf file (or -)")->required();
  expand->add_option("--out", out_path, "output .btf path (default stdout)");
  add_json(expand);

  auto* rational = app.add_subcommand(
      "rational", "two-bridge butterfly of the rational number p/q");
  rational->add_option("p", p, "p >= 2")->required();
  rational->add_option("q", q, "1 <= q < p, coprime to p")->required();
  rational->add_option("--out", out_path, "output .btf path (default stdout)");
  add_json(rational);

  auto* invariant = app.add_subcommand(
      "invariant", "link fingerprint of a .pd or .btf file");
  invariant->add_option("input", in_path, ".pd or .btf file (or -)")
      ->required();
  add_json(invariant);

  auto* roundtrip = app.add_subcommand(
      "roundtrip",
      "exit 0 iff the fingerprint survives to-butterfly then to-link");
  roundtrip->add_option("input", in_path, ".pd file (or -)")->required();
  add_json(roundtrip);

  auto* render = app.add_subcommand("render", "SVG drawing of a diagram");
  render->add_option("input", in_path, ".btf or .pd file (or -)")->required();
  render->add_option("--svg", svg_path, "output path (default stdout)");
  render->add_flag("--gamma", gamma, "draw the mirror chords (butterflies)");
  render->add_option("--outer", rspec.outer_face, "outer face id");
  render->add_option("--iterations", rspec.iterations, "layout sweeps");
  render->add_option("--canvas", rspec.canvas, "canvas edge, px");
  render->add_option("--subdivision", rspec.subdivision,
                     "layout midpoints per edge");
  add_json(render);

  auto* gen = app.add_subcommand(
      "gen", "deterministic pseudo-random butterfly for a seed");
  gen->add_option("--seed", gcfg.seed, "instance seed (env MBFLY_SEED)");
  gen->add_option("--max-m", gcfg.max_m, "trunk budget");
  gen->add_option("--max-expansions", gcfg.max_expansions, "walk budget");
  gen->add_option("--out", out_path, "output .btf path (default stdout)");
  gen->add_option("--trace", trace_path, "write the generation trace here");
  add_json(gen);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) {
      ButterflyDiagram b = parse_btf(slurp(in_path));
      VertexClasses vc = classify_vertices(b);  // throws when invalid
      QuotientComplex qc = quotient_cell_counts(b);
      GammaReport gr = check_gamma_claims(b);
      GammaGraph g = gamma_graph(b);
      LinkComponents lc = link_components(b);
      std::cout << "m: " << b.m() << "\n";
      std::cout << "vertices: " << b.map.n_vertices() << " (A: " << vc.count_a
                << ", E: " << vc.count_e << ", B: " << vc.count_b << ")\n";
      std::cout << "quotient: V*=" << qc.v_star << " E*=" << qc.e_star
                << " chi=" << qc.chi() << "\n";
      std::cout << "gamma: " << g.chords.size() << " chords, " << gr.paths
                << " paths" << (gr.ok ? "" : " [" + gr.detail + "]") << "\n";
      std::cout << "components: " << lc.count << "\n";
      bool valid = qc.ok() && gr.ok;
      std::cout << (valid ? "valid" : "invalid") << "\n";
      return valid ? 0 : 4;
    }

    if (app.got_subcommand(tolink)) {
      ButterflyDiagram b = parse_btf(slurp(in_path));
      BridgeDiagram bd = butterfly_to_link(b);
      if (gauss)
        std::cout << emit_gauss(bd.link);
      else if (!pd_path.empty())
        spit(pd_path, emit_pd(bd.link));
      else
        std::cout << emit_pd(bd.link);
      if (tolink_svg) {
        RenderSpec rs;
        rs.target = RenderTarget::Link;
        spit(svg_path, layout_svg(bd.link, rs));
      }
      return 0;
    }

    if (app.got_subcommand(tobf)) {
      LinkDiagram d = preprocess_diagram(parse_pd(slurp(in_path)));
      ButterflyDiagram b = link_to_butterfly(bridge_decompose(d));
      spit(out_path, emit_btf(b));
      return 0;
    }

    if (app.got_subcommand(reduce)) {
      ButterflyDiagram b = load_butterfly_any(in_path);
      auto [red, recs] = reduce_to_bridges(b);
      std::cout << "m: " << b.m() << " -> " << red.m() << "\n";
      if (!trace_path.empty()) {
        std::string t;
        for (const MoveRecord& r : recs) t += r.to_json() + "\n";
        spit(trace_path, t);
      }
      if (!reduce->get_option("--out")->empty()) spit(out_path, emit_btf(red));
      return 0;
    }

    if (app.got_subcommand(expand)) {
      ButterflyDiagram b = parse_btf(slurp(in_path));
      ButterflyDiagram full = eliminate_e_vertices(b);
      spit(out_path, emit_btf(full));
      return 0;
    }

    if (app.got_subcommand(rational)) {
      spit(out_path, emit_btf(make_rational_butterfly(p, q)));
      return 0;
    }

    if (app.got_subcommand(invariant)) {
      std::string text = slurp(in_path);
      LinkDiagram d = sniff(in_path, text) == Kind::LinkFile
                          ? parse_pd(text)
                          : butterfly_to_link(parse_btf(text)).link;
      std::cout << fingerprint(d).str() << "\n";
      return 0;
    }

    if (app.got_subcommand(roundtrip)) {
      LinkDiagram d = parse_pd(slurp(in_path));
      Fingerprint before = fingerprint(d);
      ButterflyDiagram b =
          link_to_butterfly(bridge_decompose(preprocess_diagram(d)));
      Fingerprint after = fingerprint(butterfly_to_link(b).link);
      bool ok = before == after;
      std::cout << (ok ? "fingerprint preserved" : "fingerprint changed")
                << "\n";
      return ok ? 0 : 1;
    }

    if (app.got_subcommand(render)) {
      std::string text = slurp(in_path);
      std::string svg;
      if (sniff(in_path, text) == Kind::ButterflyFile) {
        rspec.target = gamma ? RenderTarget::ButterflyWithGamma
                             : RenderTarget::Butterfly;
        svg = layout_svg(parse_btf(text), rspec);
      } else {
        rspec.target = RenderTarget::Link;
        LinkDiagram d = parse_pd(text);
        if (d.n_pieces > 1) d = preprocess_diagram(d);
        svg = layout_svg(d, rspec);
      }
      spit(svg_path, svg);
      return 0;
    }

    if (app.got_subcommand(gen)) {
      GenInstance inst = random_butterfly(gcfg);
      spit(out_path, emit_btf(inst.butterfly));
      if (!trace_path.empty()) {
        std::string t = "{\"source\":\"" + json_escape(inst.source) + "\"}\n";
        for (const MoveRecord& r : inst.expansions) t += r.to_json() + "\n";
        spit(trace_path, t);
      }
      return 0;
    }
  } catch (const Error& e) {
    int code = exit_code_for(e.code());
    if (json_errors)
      std::cerr << "{\"error\":\"" << err_name(e.code()) << "\",\"message\":\""
                << json_escape(e.what()) << "\",\"exit\":" << code << "}\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return code;
  } catch (const IoFailure& e) {
    if (json_errors)
      std::cerr << "{\"error\":\"Io\",\"message\":\"" << json_escape(e.what())
                << "\",\"exit\":2}\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
