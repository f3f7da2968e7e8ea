#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "stringy/error.hpp"
#include "stringy/polytope.hpp"

namespace stringy {

namespace {

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// k coordinates on which the basis rows are independent, and that minor.
std::pair<std::vector<std::size_t>, Integer> independent_columns(const std::vector<IntVector>& basis,
                                                                 std::size_t n) {
  const std::size_t k = basis.size();
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (pick[j]) cols.push_back(j);
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = basis[i][cols[j]];
    Integer det = integer_det(sub);
    if (det != 0) return {cols, abs(det)};
  } while (std::prev_permutation(pick.begin(), pick.end()));
  fail(ErrorCode::InternalInconsistency, "sublattice basis is rank deficient");
}

}  // namespace

FaceLattice FaceLattice::build(const LatticePolytope& p) {
  const int d = p.dim();
  const auto& verts = p.vertices();
  const int nv = static_cast<int>(verts.size());

  std::set<std::vector<int>> sets;
  std::deque<std::vector<int>> queue;
  for (const auto& f : p.facets()) {
    if (sets.insert(f.vertex_ids).second) queue.push_back(f.vertex_ids);
  }
  // Faces are exactly the nonempty intersections of facets.
  while (!queue.empty()) {
    std::vector<int> face = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : p.facets()) {
      std::vector<int> meet;
      std::set_intersection(face.begin(), face.end(), g.vertex_ids.begin(), g.vertex_ids.end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet.size() == face.size()) continue;
      if (sets.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  std::vector<Face> faces;
  {
    Face empty;
    empty.dim = -1;
    faces.push_back(std::move(empty));
    Face whole;
    whole.dim = d;
    for (int i = 0; i < nv; ++i) whole.vertex_ids.push_back(i);
    faces.push_back(std::move(whole));
  }
  for (const auto& s : sets) {
    Face f;
    f.vertex_ids = s;
    std::vector<IntVector> pts;
    for (int id : s) pts.push_back(verts[static_cast<std::size_t>(id)]);
    f.dim = static_cast<int>(affine_rank(pts));
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });

  FaceLattice lattice;
  lattice.dim_ = d;
  lattice.by_dim_.assign(static_cast<std::size_t>(d + 2), {});
  for (std::size_t i = 0; i < faces.size(); ++i) {
    faces[i].id = static_cast<int>(i);
    lattice.by_dim_[static_cast<std::size_t>(faces[i].dim + 1)].push_back(static_cast<int>(i));
  }
  if (lattice.by_dim_[1].size() != static_cast<std::size_t>(nv))
    fail(ErrorCode::InternalInconsistency, "vertex faces do not match the vertex list");

  for (auto& f : faces) {
    for (std::size_t g = 0; g < p.facets().size(); ++g) {
      if (is_subset(f.vertex_ids, p.facets()[g].vertex_ids)) f.facets.push_back(static_cast<int>(g));
    }
    if (f.dim == d - 1) {
      if (f.facets.size() != 1) fail(ErrorCode::InternalInconsistency, "facet face matches several halfspaces");
      f.inner_normal = p.facets()[static_cast<std::size_t>(f.facets.front())].halfspace.normal;
    }
  }
  for (int k = -1; k < d; ++k) {
    for (int lo : lattice.by_dim_[static_cast<std::size_t>(k + 1)]) {
      for (int hi : lattice.by_dim_[static_cast<std::size_t>(k + 2)]) {
        if (is_subset(faces[static_cast<std::size_t>(lo)].vertex_ids, faces[static_cast<std::size_t>(hi)].vertex_ids)) {
          faces[static_cast<std::size_t>(lo)].superfaces.push_back(hi);
          faces[static_cast<std::size_t>(hi)].subfaces.push_back(lo);
        }
      }
    }
  }

  // Normalized volumes from a pulling triangulation: every face is coned from
  // its smallest vertex over the faces of codimension one that avoid it.
  std::vector<std::vector<std::vector<int>>> simplices(faces.size());
  for (int k = 0; k <= d; ++k) {
    for (int id : lattice.by_dim_[static_cast<std::size_t>(k + 1)]) {
      Face& f = faces[static_cast<std::size_t>(id)];
      auto& out = simplices[static_cast<std::size_t>(id)];
      if (k == 0) {
        out.push_back({f.vertex_ids.front()});
        f.normalized_volume = 1;
        continue;
      }
      const int apex = f.vertex_ids.front();
      for (int sub : f.subfaces) {
        const auto& sv = faces[static_cast<std::size_t>(sub)].vertex_ids;
        if (std::binary_search(sv.begin(), sv.end(), apex)) continue;
        for (const auto& s : simplices[static_cast<std::size_t>(sub)]) {
          std::vector<int> simplex{apex};
          simplex.insert(simplex.end(), s.begin(), s.end());
          out.push_back(std::move(simplex));
        }
      }
      std::vector<IntVector> pts;
      for (int v : f.vertex_ids) pts.push_back(verts[static_cast<std::size_t>(v)]);
      std::vector<IntVector> basis = sublattice_basis(pts);
      auto [cols, base_det] = independent_columns(basis, static_cast<std::size_t>(d));
      Integer sum = 0;
      for (const auto& s : out) {
        IntMatrix edges(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        const IntVector& origin = verts[static_cast<std::size_t>(s[0])];
        for (std::size_t i = 1; i < s.size(); ++i)
          for (std::size_t j = 0; j < cols.size(); ++j)
            edges(i - 1, j) = verts[static_cast<std::size_t>(s[i])][cols[j]] - origin[cols[j]];
        sum += abs(integer_det(edges));
      }
      f.normalized_volume = make_rational(sum, base_det);
    }
  }

  lattice.faces_ = std::move(faces);
  return lattice;
}

FaceLattice FaceLattice::build(const RationalPolytope& p) {
  FaceLattice lattice = build(p.scaled());
  if (p.denominator() != 1) {
    for (auto& f : lattice.faces_) {
      if (f.dim <= 0) continue;
      Integer lk;
      mpz_pow_ui(lk.get_mpz_t(), p.denominator().get_mpz_t(), static_cast<unsigned long>(f.dim));
      f.normalized_volume /= lk;
    }
  }
  return lattice;
}

const std::vector<int>& FaceLattice::of_dim(int k) const {
  if (k < -1 || k > dim_) fail(ErrorCode::InvalidArgument, "face dimension out of range");
  return by_dim_[static_cast<std::size_t>(k + 1)];
}

std::optional<int> FaceLattice::find(const std::vector<int>& vertex_ids) const {
  if (vertex_ids.empty()) return of_dim(-1).front();
  // Vertex sets are unique, so try every dimension bucket.
  for (const auto& bucket : by_dim_) {
    auto it = std::lower_bound(bucket.begin(), bucket.end(), vertex_ids, [&](int id, const std::vector<int>& key) {
      return faces_[static_cast<std::size_t>(id)].vertex_ids < key;
    });
    if (it != bucket.end() && faces_[static_cast<std::size_t>(*it)].vertex_ids == vertex_ids) return *it;
  }
  return std::nullopt;
}

DualPair analyze(const LatticePolytope& p) {
  DualPair pair{p, FaceLattice::build(p), dual_polytope(p), {}};
  pair.dual_faces = FaceLattice::build(pair.dual);
  const int d = p.dim();

  // Facet i of Δ is dual to the vertex m_i / n_i of Δ*.
  std::vector<int> dual_vertex_of_facet;
  const auto& dverts = pair.dual.vertices();
  for (const auto& f : p.facets()) {
    RatVector y(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < y.dim(); ++i) y[i] = make_rational(f.halfspace.normal[i], -f.halfspace.offset);
    auto it = std::lower_bound(dverts.begin(), dverts.end(), y);
    if (it == dverts.end() || !(*it == y)) fail(ErrorCode::InternalInconsistency, "facet has no dual vertex");
    dual_vertex_of_facet.push_back(static_cast<int>(it - dverts.begin()));
  }

  for (const Face& theta : pair.faces.faces()) {
    Face& f = pair.faces.mutable_face(theta.id);
    if (f.dim == d - 1) {
      f.lattice_distance = Rational(-p.facets()[static_cast<std::size_t>(f.facets.front())].halfspace.offset);
    }
    std::vector<int> dual_ids;
    for (int g : f.facets) dual_ids.push_back(dual_vertex_of_facet[static_cast<std::size_t>(g)]);
    std::sort(dual_ids.begin(), dual_ids.end());
    std::optional<int> dual_id;
    if (f.dim == d) {
      dual_id = pair.dual_faces.of_dim(-1).front();
    } else {
      dual_id = pair.dual_faces.find(dual_ids);
    }
    if (!dual_id) fail(ErrorCode::InternalInconsistency, "face has no dual face");
    Face& g = pair.dual_faces.mutable_face(*dual_id);
    if (f.dim + g.dim != d - 1) fail(ErrorCode::InternalInconsistency, "dual face has the wrong dimension");
    f.dual_face_id = *dual_id;
    g.dual_face_id = f.id;
  }
  return pair;
}

FaceLattice face_lattice(const LatticePolytope& p) {
  if (p.origin_in_interior()) return analyze(p).faces;
  return FaceLattice::build(p);
}

Rational normalized_volume(const FaceLattice& lattice, int face_id) { return lattice.face(face_id).normalized_volume; }

}  // namespace stringy
