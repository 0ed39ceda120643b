#include "surfgenus/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "surfgenus/cohomology.hpp"
#include "surfgenus/error.hpp"
#include "surfgenus/exhaustion.hpp"
#include "surfgenus/mesh_io.hpp"
#include "surfgenus/report_json.hpp"
#include "surfgenus/surgery.hpp"

namespace surfgenus {

namespace {

struct Options {
  bool json = false;
  std::string out_path;
  std::string mesh_a;
  std::string mesh_b;
  std::size_t triangle = 0;
  std::string family;
  std::size_t steps = 0;
  std::size_t window = 3;
  std::size_t genus = 0;
};

TriangulatedSurface load(const std::string& path) { return build_surface(read_mesh(path).triangles); }

std::string plain_report(const InvariantReport& r) {
  std::ostringstream os;
  os << "vertices: " << r.vertices << "\nedges: " << r.edges << "\nfaces: " << r.faces
     << "\neuler: " << r.euler_characteristic << "\norientable: " << (r.orientable ? "yes" : "no")
     << "\nconnected_components: " << r.connected_components << "\nboundary_loops: " << r.boundary_loop_count
     << "\nbetti: " << r.betti[0] << ' ' << r.betti[1] << ' ' << r.betti[2] << "\nck: " << r.ck[0] << ' ' << r.ck[1]
     << ' ' << r.ck[2] << "\ngenus: ";
  if (r.genus)
    os << *r.genus;
  else
    os << "undefined (disconnected)";
  os << '\n';
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw SurfaceError(ErrorCode::IoError, "cannot write " + path);
}

// Document goes to --out when given, otherwise to the output stream.
void emit_document(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty())
    out << text;
  else
    write_file(o.out_path, text);
}

// Mutating commands: report on the result plus the mesh itself. With --out the
// mesh is written there; otherwise it follows the report on the output stream.
void emit_result(const Options& o, const TriangulatedSurface& s, std::ostream& out) {
  const InvariantReport r = invariant_report(s);
  const std::string mesh = write_tri(s);
  if (!o.out_path.empty()) write_file(o.out_path, mesh);
  if (o.json) {
    nlohmann::json doc = report_to_json(r);
    if (o.out_path.empty())
      doc["mesh"] = mesh;
    else
      doc["mesh_path"] = o.out_path;
    out << doc.dump(2) << '\n';
  } else {
    out << plain_report(r);
    if (o.out_path.empty()) out << "# mesh\n" << mesh;
  }
}

std::size_t first_interior_triangle(const TriangulatedSurface& s) {
  for (std::size_t t = 0; t < s.triangle_count(); ++t)
    if (s.is_interior_triangle(t)) return t;
  throw SurfaceError(ErrorCode::TriangleTouchesBoundary, "no interior triangle available");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomological genus invariants of triangulated surfaces", "surfgenus"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--out", o.out_path, "Write the resulting mesh (or the document) to this path");

  auto* report = app.add_subcommand("report", "Invariant report of a mesh");
  report->add_option("mesh", o.mesh_a)->required();
  auto* genus = app.add_subcommand("genus", "Genus c_1/2 of a connected mesh");
  genus->add_option("mesh", o.mesh_a)->required();
  auto* sum = app.add_subcommand("sum", "Connected sum of two meshes");
  sum->add_option("meshA", o.mesh_a)->required();
  sum->add_option("meshB", o.mesh_b)->required();
  auto* remove = app.add_subcommand("remove-ball", "Remove an interior triangle");
  remove->add_option("mesh", o.mesh_a)->required();
  remove->add_option("--triangle", o.triangle, "Triangle index")->required();
  auto* cap = app.add_subcommand("cap", "Cone a disk onto every boundary loop");
  cap->add_option("mesh", o.mesh_a)->required();
  auto* subdivide_cmd = app.add_subcommand("subdivide", "Barycentric subdivision");
  subdivide_cmd->add_option("mesh", o.mesh_a)->required();
  auto* exhaust = app.add_subcommand("exhaust", "Classify a generated exhaustion");
  exhaust->add_option("--family", o.family, "flute | ladder | lochness | genus_tail")->required();
  exhaust->add_option("--steps", o.steps, "Number of steps")->required();
  exhaust->add_option("--window", o.window, "Plateau length required for stabilization");
  exhaust->add_option("--genus", o.genus, "Target genus for genus_tail");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return 2;
  }

  try {
    if (report->parsed()) {
      const InvariantReport r = invariant_report(load(o.mesh_a));
      emit_document(o, o.json ? report_to_json(r).dump(2) + "\n" : plain_report(r), out);
    } else if (genus->parsed()) {
      const InvariantReport r = invariant_report(load(o.mesh_a));
      if (!r.genus) throw SurfaceError(ErrorCode::NotConnected, "genus needs a connected surface");
      emit_document(o, o.json ? report_to_json(r).dump(2) + "\n" : std::to_string(*r.genus) + "\n", out);
    } else if (sum->parsed()) {
      const TriangulatedSurface a = load(o.mesh_a);
      const TriangulatedSurface b = load(o.mesh_b);
      emit_result(o, connected_sum(a, b, first_interior_triangle(a), first_interior_triangle(b)), out);
    } else if (remove->parsed()) {
      emit_result(o, remove_ball(load(o.mesh_a), o.triangle), out);
    } else if (cap->parsed()) {
      emit_result(o, cap_boundaries(load(o.mesh_a)), out);
    } else if (subdivide_cmd->parsed()) {
      emit_result(o, barycentric_subdivide(load(o.mesh_a)), out);
    } else if (exhaust->parsed()) {
      const auto family = parse_family(o.family);
      if (!family) throw SurfaceError(ErrorCode::BadParams, "unknown family '" + o.family + "'");
      const StabilizationVerdict v = classify(generate_family(*family, o.steps, o.genus), o.window);
      if (o.json) {
        nlohmann::json doc = verdict_to_json(v);
        doc["family"] = std::string(family_name(*family));
        emit_document(o, doc.dump(2) + "\n", out);
      } else {
        emit_document(o, "family: " + std::string(family_name(*family)) + "\n" + describe(v), out);
      }
    }
  } catch (const SurfaceError& e) {
    err << e.what() << '\n';
    return is_internal(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace surfgenus
