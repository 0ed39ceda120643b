#include "surfgenus/exhaustion.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "surfgenus/cohomology.hpp"
#include "surfgenus/error.hpp"
#include "surfgenus/fixtures.hpp"

namespace surfgenus {

namespace {

// Rotation of an oriented triangle that starts at its smallest label.
Triangle canonical_rotation(const Triangle& t) {
  const auto m = static_cast<std::size_t>(std::min_element(t.begin(), t.end()) - t.begin());
  return {t[m], t[(m + 1) % 3], t[(m + 2) % 3]};
}

Triangle unordered_key(Triangle t) {
  std::sort(t.begin(), t.end());
  return t;
}

Triangle apply(const VertexMap& f, const Triangle& t) { return {f.at(t[0]), f.at(t[1]), f.at(t[2])}; }

ComplementCheck check_complement(const ExhaustionSequence& e, std::size_t step) {
  ComplementCheck check;
  check.step = step;
  const VertexMap& f = e.inclusions()[step];
  std::set<Triangle> image;
  for (const Triangle& t : e.steps()[step].triangles()) image.insert(unordered_key(apply(f, t)));

  std::vector<Triangle> rest;
  for (const Triangle& t : e.steps()[step + 1].triangles())
    if (!image.contains(unordered_key(t))) rest.push_back(t);
  if (rest.empty()) return check;

  // Group the remaining triangles by shared vertices.
  std::vector<std::size_t> parent(rest.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (VertexId v : rest[i]) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<Triangle>> pieces;
  for (std::size_t i = 0; i < rest.size(); ++i) pieces[find(i)].push_back(rest[i]);

  for (const auto& [root, tris] : pieces) {
    try {
      check.component_c1.push_back(ck(build_surface(tris), 1));
    } catch (const SurfaceError&) {
      check.valid = false;
    }
  }
  return check;
}

}  // namespace

ExhaustionSequence::ExhaustionSequence(std::vector<TriangulatedSurface> steps, std::vector<VertexMap> inclusions)
    : steps_(std::move(steps)), inclusions_(std::move(inclusions)) {
  if (steps_.empty()) throw SurfaceError(ErrorCode::BadParams, "exhaustion needs at least one step");
  if (inclusions_.size() + 1 != steps_.size())
    throw SurfaceError(ErrorCode::BadInclusion, std::to_string(inclusions_.size()) + " inclusions for " +
                                                    std::to_string(steps_.size()) + " steps");
  for (std::size_t i = 0; i < steps_.size(); ++i)
    if (steps_[i].component_count() != 1)
      throw SurfaceError(ErrorCode::NotConnected, "step " + std::to_string(i));

  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    const auto& from = steps_[i];
    const auto& to = steps_[i + 1];
    const VertexMap& f = inclusions_[i];
    std::set<VertexId> targets;
    for (VertexId v : from.vertex_ids()) {
      auto it = f.find(v);
      if (it == f.end() || !to.vertex_index(it->second) || !targets.insert(it->second).second)
        throw SurfaceError(ErrorCode::BadInclusion,
                           "step " + std::to_string(i) + ": vertex " + std::to_string(v) + " is not mapped injectively");
    }
    std::set<Triangle> oriented;
    for (const Triangle& t : to.triangles()) oriented.insert(canonical_rotation(t));
    for (const Triangle& t : from.triangles())
      if (!oriented.contains(canonical_rotation(apply(f, t))))
        throw SurfaceError(ErrorCode::BadInclusion,
                           "step " + std::to_string(i) + ": a triangle has no orientation-preserving image");
  }
}

ExhaustionSequence ExhaustionSequence::from_nested(const TriangulatedSurface& whole,
                                                   const std::vector<std::vector<std::size_t>>& keep_sets) {
  std::vector<TriangulatedSurface> steps;
  std::vector<VertexMap> inclusions;
  for (std::size_t i = 0; i < keep_sets.size(); ++i) {
    steps.push_back(subsurface(whole, keep_sets[i]));
    if (i > 0) {
      VertexMap identity;
      for (VertexId v : steps[i - 1].vertex_ids()) identity.emplace(v, v);
      inclusions.push_back(std::move(identity));
    }
  }
  return ExhaustionSequence(std::move(steps), std::move(inclusions));
}

std::optional<Family> parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  std::erase(lower, '_');
  std::erase(lower, '-');
  if (lower == "flute") return Family::Flute;
  if (lower == "ladder") return Family::Ladder;
  if (lower == "lochness") return Family::LochNess;
  if (lower == "genustail") return Family::GenusTail;
  return std::nullopt;
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::Flute: return "flute";
    case Family::Ladder: return "ladder";
    case Family::LochNess: return "lochness";
    case Family::GenusTail: return "genus_tail";
  }
  return "unknown";
}

ExhaustionSequence generate_family(Family family, std::size_t steps, std::size_t genus) {
  if (steps == 0) throw SurfaceError(ErrorCode::BadParams, "step count must be positive");
  if (family == Family::GenusTail && genus > steps)
    throw SurfaceError(ErrorCode::BadParams, "genus " + std::to_string(genus) + " cannot be reached in " +
                                                 std::to_string(steps) + " steps");

  std::vector<ChainBlock> blocks;
  bool cap_start = true;
  switch (family) {
    case Family::Flute:
      blocks.assign(steps, ChainBlock::Hole);
      blocks.front() = ChainBlock::Plain;
      break;
    case Family::Ladder:
      blocks.assign(steps, ChainBlock::Handle);
      cap_start = false;
      break;
    case Family::LochNess:
      blocks.assign(steps, ChainBlock::Handle);
      break;
    case Family::GenusTail:
      blocks.assign(steps, ChainBlock::Plain);
      std::fill_n(blocks.begin(), genus, ChainBlock::Handle);
      break;
  }

  const ChainSurface chain = chain_surface(blocks, cap_start, false);
  std::vector<std::vector<std::size_t>> keep_sets;
  std::vector<std::size_t> keep;
  for (const auto& block : chain.block_triangles) {
    keep.insert(keep.end(), block.begin(), block.end());
    keep_sets.push_back(keep);
  }
  return ExhaustionSequence::from_nested(chain.surface, keep_sets);
}

std::vector<std::size_t> c1_sequence(const ExhaustionSequence& e) {
  std::vector<std::future<std::size_t>> jobs;
  jobs.reserve(e.size());
  for (const auto& step : e.steps()) jobs.push_back(std::async(std::launch::async, [&step] { return ck(step, 1); }));
  std::vector<std::size_t> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool StabilizationVerdict::complements_planar() const {
  return std::all_of(complement_checks.begin(), complement_checks.end(), [](const ComplementCheck& c) {
    return c.valid && std::all_of(c.component_c1.begin(), c.component_c1.end(), [](std::size_t x) { return x == 0; });
  });
}

StabilizationVerdict classify(const ExhaustionSequence& e, std::size_t window) {
  if (window < 2) throw SurfaceError(ErrorCode::BadParams, "window must be at least 2");
  if (e.size() < window)
    throw SurfaceError(ErrorCode::WindowTooLarge,
                       "window " + std::to_string(window) + " exceeds " + std::to_string(e.size()) + " steps");

  StabilizationVerdict v;
  v.window = window;
  v.c1_sequence = c1_sequence(e);
  const auto& seq = v.c1_sequence;
  if (!std::is_sorted(seq.begin(), seq.end()))
    throw SurfaceError(ErrorCode::OracleMismatch, "c_1 sequence decreases");
  v.genus_estimate = seq.back() / 2;

  std::size_t start = seq.size() - 1;
  while (start > 0 && seq[start - 1] == seq.back()) --start;
  if (seq.size() - start >= window) {
    v.status = StabilizationStatus::Stabilized;
    v.plateau_start = start;
    for (std::size_t i = start; i + 1 < seq.size(); ++i) v.complement_checks.push_back(check_complement(e, i));
  }
  return v;
}

std::string_view status_name(StabilizationStatus s) noexcept {
  return s == StabilizationStatus::Stabilized ? "STABILIZED" : "NOT_STABILIZED";
}

std::string describe(const StabilizationVerdict& v) {
  std::ostringstream os;
  os << "c1 sequence:";
  for (std::size_t c : v.c1_sequence) os << ' ' << c;
  os << "\nstatus: " << status_name(v.status) << " (window " << v.window << ")\n";
  if (v.status == StabilizationStatus::Stabilized) {
    os << "genus: " << v.genus_estimate << " (plateau from step " << *v.plateau_start << ")\n";
    os << "complement pieces planar: " << (v.complements_planar() ? "yes" : "no") << '\n';
  } else {
    os << "genus lower bound: " << v.genus_estimate << '\n';
  }
  os << "note: finite data only bounds the genus from below; stabilization is certified "
        "relative to the provided exhaustion only.\n";
  return os.str();
}

}  // namespace surfgenus
