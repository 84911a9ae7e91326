#include "mods/perturbation.hpp"

#include <algorithm>

#include "mods/detail/cover_dispatch.hpp"
#include "mods/error.hpp"
#include "mods/solver.hpp"

namespace mods {

namespace {

Arc arc_target(const PerturbTarget& t) {
  if (const auto* a = std::get_if<Arc>(&t)) return *a;
  fail(ErrorCode::invalid_argument, "this perturbation needs an arc target");
}

Vertex vertex_target(const PerturbTarget& t) {
  if (const auto* v = std::get_if<Vertex>(&t)) return *v;
  fail(ErrorCode::invalid_argument, "vertex removal needs a vertex target");
}

void require_arc(const Digraph& d, Arc e) {
  if (!d.has_arc(e.tail, e.head)) fail(ErrorCode::missing_arc, "arc " + e.to_string() + " not present");
}

}  // namespace

std::string_view to_string(PerturbKind k) noexcept {
  switch (k) {
    case PerturbKind::arc_removal: return "arc-removal";
    case PerturbKind::vertex_removal: return "vertex-removal";
    case PerturbKind::arc_addition: return "arc-addition";
    case PerturbKind::arc_reversal: return "arc-reversal";
  }
  return "?";
}

PerturbationRecord perturb(const Digraph& d, PerturbKind kind, PerturbTarget target) {
  PerturbationRecord r;
  r.kind = kind;
  r.target = target;
  // Edit first so precondition errors surface before any solving.
  std::optional<Digraph> edited;
  switch (kind) {
    case PerturbKind::arc_removal: edited = remove_arc(d, arc_target(target)); break;
    case PerturbKind::arc_addition: edited = add_arc(d, arc_target(target)); break;
    case PerturbKind::arc_reversal: edited = reverse_arc(d, arc_target(target)); break;
    case PerturbKind::vertex_removal: {
      const Vertex v = vertex_target(target);
      edited = remove_vertex(d, v).digraph;
      r.removed_out_degree = d.out_degree(v);
      break;
    }
  }
  const std::size_t k = gamma_m_plus(d).value;
  r.before = k;
  r.after = gamma_m_plus(*edited).value;
  switch (kind) {
    case PerturbKind::arc_removal:
      r.bound_low = k;
      r.bound_high = k + 1;
      break;
    case PerturbKind::vertex_removal:
      r.bound_low = k - 1;
      r.bound_high = std::max(k, k - 1 + *r.removed_out_degree);
      break;
    case PerturbKind::arc_addition:
      r.bound_low = k - 1;
      r.bound_high = k;
      break;
    case PerturbKind::arc_reversal:
      r.bound_low = k - 1;
      r.bound_high = k + 1;
      break;
  }
  r.within_bounds = r.bound_low <= r.after && r.after <= r.bound_high;
  return r;
}

std::vector<VertexSet> enumerate_minimum_mods(const Digraph& d) {
  const std::size_t n = d.order();
  const std::size_t k = gamma_m_plus(d).value;
  std::vector<VertexSet> out;
  detail::with_cover_search(detail::closed_out_sets(d), majority_threshold(n), [&](const auto& search) {
    search.for_each_minimum(k, [&](const std::vector<Vertex>& sel) { out.push_back(detail::to_vertex_set(n, sel)); });
    return 0;
  });
  return out;
}

bool is_critical_arc_direct(const Digraph& d, Arc e) {
  require_arc(d, e);
  return gamma_m_plus(remove_arc(d, e)).value == gamma_m_plus(d).value + 1;
}

bool is_critical_arc_characterized(const Digraph& d, Arc e) {
  require_arc(d, e);
  const std::size_t threshold = majority_threshold(d.order());
  const auto minimum = enumerate_minimum_mods(d);
  return std::all_of(minimum.begin(), minimum.end(), [&](const VertexSet& s) {
    return s.contains(e.tail) && private_out_neighbors(d, s, e.tail).contains(e.head) &&
           closed_out_neighborhood(d, s).count() == threshold;
  });
}

}  // namespace mods
