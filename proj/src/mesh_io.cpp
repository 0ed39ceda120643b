#include "surfgenus/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "surfgenus/error.hpp"

namespace surfgenus {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_natural(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw SurfaceError(ErrorCode::ParseError,
                       "line " + std::to_string(line_no) + ": expected a natural number, got '" + std::string(tok) + "'");
  return value;
}

// Non-empty, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = strip_comment(line);
    if (!line.empty()) out.emplace_back(line_no, line);
  }
  return out;
}

}  // namespace

std::vector<Triangle> parse_tri(std::string_view text) {
  std::vector<Triangle> tris;
  for (auto [line_no, line] : content_lines(text)) {
    const auto tok = tokens(line);
    if (tok.size() != 4 || tok[0] != "t")
      throw SurfaceError(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 't <a> <b> <c>'");
    tris.push_back({parse_natural(tok[1], line_no), parse_natural(tok[2], line_no), parse_natural(tok[3], line_no)});
  }
  return tris;
}

std::vector<Triangle> parse_off(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty() || tokens(lines[0].second).front() != "OFF")
    throw SurfaceError(ErrorCode::ParseError, "missing OFF header");

  // Counts may follow the header on the same line.
  std::size_t cursor = 0;
  auto header = tokens(lines[0].second);
  header.erase(header.begin());
  std::size_t counts_line = lines[0].first;
  if (header.empty()) {
    if (lines.size() < 2) throw SurfaceError(ErrorCode::ParseError, "missing OFF counts line");
    header = tokens(lines[1].second);
    counts_line = lines[1].first;
    cursor = 2;
  } else {
    cursor = 1;
  }
  if (header.size() < 2 || header.size() > 3)
    throw SurfaceError(ErrorCode::ParseError, "line " + std::to_string(counts_line) + ": expected 'nv nf [ne]'");
  const std::uint64_t nv = parse_natural(header[0], counts_line);
  const std::uint64_t nf = parse_natural(header[1], counts_line);
  if (lines.size() < cursor + nv + nf)
    throw SurfaceError(ErrorCode::ParseError, "file ends before " + std::to_string(nv) + " vertices and " +
                                                  std::to_string(nf) + " faces");

  // Coordinates are read only to be skipped.
  cursor += nv;
  std::vector<Triangle> tris;
  for (std::uint64_t f = 0; f < nf; ++f, ++cursor) {
    const auto [line_no, line] = lines[cursor];
    const auto tok = tokens(line);
    const std::uint64_t degree = parse_natural(tok.front(), line_no);
    if (degree != 3)
      throw SurfaceError(ErrorCode::ParseError,
                         "line " + std::to_string(line_no) + ": face of degree " + std::to_string(degree));
    if (tok.size() < 4) throw SurfaceError(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": short face");
    Triangle t{parse_natural(tok[1], line_no), parse_natural(tok[2], line_no), parse_natural(tok[3], line_no)};
    for (VertexId v : t)
      if (v >= nv)
        throw SurfaceError(ErrorCode::ParseError,
                           "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " out of range");
    tris.push_back(t);
  }
  return tris;
}

MeshFile read_mesh(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SurfaceError(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  MeshFile mesh;
  mesh.path = path;
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  const auto lines = content_lines(text);
  const bool off_header = !lines.empty() && tokens(lines.front().second).front() == "OFF";
  mesh.format = (ext == ".off" || off_header) ? MeshFormat::Off : MeshFormat::Tri;
  mesh.triangles = mesh.format == MeshFormat::Off ? parse_off(text) : parse_tri(text);
  return mesh;
}

std::string write_tri(const TriangulatedSurface& s) {
  std::ostringstream os;
  os << "# " << s.vertex_count() << " vertices, " << s.edge_count() << " edges, " << s.triangle_count()
     << " triangles\n";
  for (const Triangle& t : s.triangles()) os << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

}  // namespace surfgenus
