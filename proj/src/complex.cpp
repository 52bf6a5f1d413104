#include "ss4/complex.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ss4 {

Triangulation4::Triangulation4(int vertex_count, std::vector<Facet> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets)) {
  if (vertex_count_ < 0) throw std::invalid_argument("triangulation: negative vertex count");
  for (auto& f : facets_) {
    std::sort(f.begin(), f.end());
    for (int k = 0; k + 1 < 5; ++k)
      if (f[k] == f[k + 1])
        throw std::invalid_argument("triangulation: facet has a repeated vertex");
    if (f.front() < 0 || f.back() >= vertex_count_)
      throw std::invalid_argument("triangulation: vertex id out of range");
  }
  std::sort(facets_.begin(), facets_.end());
  for (size_t i = 0; i + 1 < facets_.size(); ++i)
    if (facets_[i] == facets_[i + 1])
      throw std::invalid_argument("triangulation: duplicate facet");
  std::vector<char> used(vertex_count_, 0);
  for (const auto& f : facets_)
    for (int v : f) used[v] = 1;
  for (int v = 0; v < vertex_count_; ++v)
    if (!used[v])
      throw std::invalid_argument("triangulation: vertex " + std::to_string(v) +
                                  " occurs in no facet");
  build_caches();
}

void Triangulation4::build_caches() {
  std::set<Tetra> tets;
  std::set<Triangle> tris;
  std::set<Edge> eds;
  for (const auto& f : facets_) {
    for (int a = 0; a < 5; ++a) {
      Tetra t;
      int w = 0;
      for (int k = 0; k < 5; ++k)
        if (k != a) t[w++] = f[k];
      tets.insert(t);
      for (int b = a + 1; b < 5; ++b) {
        Triangle tr;
        w = 0;
        for (int k = 0; k < 5; ++k)
          if (k != a && k != b) tr[w++] = f[k];
        tris.insert(tr);
        eds.insert(Edge{f[a], f[b]});
      }
    }
  }
  tetrahedra_.assign(tets.begin(), tets.end());
  triangles_.assign(tris.begin(), tris.end());
  edges_.assign(eds.begin(), eds.end());
  for (size_t i = 0; i < tetrahedra_.size(); ++i) tetra_ids_[tetrahedra_[i]] = static_cast<int>(i);
  for (size_t i = 0; i < triangles_.size(); ++i) triangle_ids_[triangles_[i]] = static_cast<int>(i);
  for (size_t i = 0; i < edges_.size(); ++i) edge_ids_[edges_[i]] = static_cast<int>(i);

  tetra_incidence_.assign(tetrahedra_.size(), {});
  for (size_t fi = 0; fi < facets_.size(); ++fi) {
    const Facet& f = facets_[fi];
    for (int a = 0; a < 5; ++a) {
      Tetra t;
      int w = 0;
      for (int k = 0; k < 5; ++k)
        if (k != a) t[w++] = f[k];
      tetra_incidence_[tetra_ids_.at(t)].push_back({static_cast<int>(fi), a});
    }
  }

  triangle_edges_.resize(triangles_.size());
  for (size_t ti = 0; ti < triangles_.size(); ++ti) {
    const Triangle& tr = triangles_[ti];
    triangle_edges_[ti] = {edge_ids_.at(Edge{tr[0], tr[1]}), edge_ids_.at(Edge{tr[1], tr[2]}),
                           edge_ids_.at(Edge{tr[0], tr[2]})};
  }
}

int Triangulation4::edge_id(const Edge& e) const {
  auto it = edge_ids_.find(e);
  return it == edge_ids_.end() ? -1 : it->second;
}
int Triangulation4::triangle_id(const Triangle& t) const {
  auto it = triangle_ids_.find(t);
  return it == triangle_ids_.end() ? -1 : it->second;
}
int Triangulation4::tetra_id(const Tetra& t) const {
  auto it = tetra_ids_.find(t);
  return it == tetra_ids_.end() ? -1 : it->second;
}
int Triangulation4::facet_index(const Facet& f) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
  if (it == facets_.end() || *it != f) return -1;
  return static_cast<int>(it - facets_.begin());
}
bool Triangulation4::has_facet(const Facet& f) const { return facet_index(f) >= 0; }

void Triangulation4::set_orient_pin(int facet, int sign) {
  if (facet < 0 || facet >= static_cast<int>(facets_.size()))
    throw std::invalid_argument("orient pin: facet index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("orient pin: sign must be +1 or -1");
  orient_pin_ = {facet, sign};
}

ValidationReport validate(const Triangulation4& t) {
  ValidationReport r;
  r.is_closed_pseudomanifold = true;
  for (size_t i = 0; i < t.tetrahedra().size(); ++i) {
    const int count = static_cast<int>(t.tetra_incidence(static_cast<int>(i)).size());
    if (count != 2) {
      r.is_closed_pseudomanifold = false;
      r.offending_tetrahedra.push_back({t.tetrahedra()[i], count});
    }
  }
  // Connectivity on the facet adjacency graph (facets sharing a tetrahedron).
  const size_t nf = t.facets().size();
  std::vector<char> seen(nf, 0);
  if (nf > 0) {
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      const Facet& facet = t.facets()[f];
      for (int a = 0; a < 5; ++a) {
        Tetra tet;
        int w = 0;
        for (int k = 0; k < 5; ++k)
          if (k != a) tet[w++] = facet[k];
        for (const auto& [g, pos] : t.tetra_incidence(t.tetra_id(tet))) {
          if (!seen[g]) {
            seen[g] = 1;
            queue.push_back(g);
          }
        }
      }
    }
  }
  r.is_connected = std::find(seen.begin(), seen.end(), 0) == seen.end();
  std::ostringstream notes;
  notes << "facets=" << nf << " tetrahedra=" << t.tetrahedra().size()
        << " triangles=" << t.triangles().size() << " edges=" << t.edges().size()
        << " vertices=" << t.vertex_count();
  r.notes = notes.str();
  return r;
}

OrientedTriangulation orient(const Triangulation4& t, int reference_facet, int reference_sign) {
  ValidationReport report = validate(t);
  if (!report.is_closed_pseudomanifold)
    throw std::runtime_error("orient: not a closed pseudomanifold");
  if (!report.is_connected) throw std::runtime_error("orient: complex is not connected");
  if (reference_facet < 0 || reference_facet >= static_cast<int>(t.facets().size()))
    throw std::invalid_argument("orient: reference facet out of range");
  if (reference_sign != 1 && reference_sign != -1)
    throw std::invalid_argument("orient: reference sign must be +1 or -1");

  std::vector<int> eps(t.facets().size(), 0);
  eps[reference_facet] = reference_sign;
  std::deque<int> queue{reference_facet};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const Facet& facet = t.facets()[f];
    for (int a = 0; a < 5; ++a) {
      Tetra tet;
      int w = 0;
      for (int k = 0; k < 5; ++k)
        if (k != a) tet[w++] = facet[k];
      const int sign_here = (a % 2 == 0 ? 1 : -1) * eps[f];
      for (const auto& [g, pos] : t.tetra_incidence(t.tetra_id(tet))) {
        if (g == f) continue;
        // The neighbour must induce the opposite sign on the shared tetra.
        const int needed = -sign_here * (pos % 2 == 0 ? 1 : -1);
        if (eps[g] == 0) {
          eps[g] = needed;
          queue.push_back(g);
        } else if (eps[g] != needed) {
          throw std::runtime_error("orient: complex is non-orientable");
        }
      }
    }
  }
  return OrientedTriangulation{t, std::move(eps)};
}

OrientedTriangulation orient(const Triangulation4& t) {
  if (t.orient_pin()) return orient(t, t.orient_pin()->first, t.orient_pin()->second);
  return orient(t, 0, +1);
}

OrientedTriangulation boundary_5simplex() {
  std::vector<Facet> facets;
  for (int omit = 0; omit < 6; ++omit) {
    Facet f;
    int w = 0;
    for (int v = 0; v < 6; ++v)
      if (v != omit) f[w++] = v;
    facets.push_back(f);
  }
  Triangulation4 t(6, std::move(facets));
  // Reference: the facet omitting vertex 0, i.e. (12345), carries +1.
  return orient(t, t.facet_index(Facet{1, 2, 3, 4, 5}), +1);
}

Triangulation4 relabel(const Triangulation4& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.vertex_count())
    throw std::invalid_argument("relabel: permutation has wrong length");
  std::vector<char> hit(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || hit[v])
      throw std::invalid_argument("relabel: not a bijection");
    hit[v] = 1;
  }
  std::vector<Facet> facets = t.facets();
  for (auto& f : facets)
    for (int& v : f) v = perm[v];
  return Triangulation4(t.vertex_count(), std::move(facets));
}

Triangulation4 load_triangulation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int vertices = -1;
  std::vector<Facet> file_facets;
  std::optional<std::pair<int, int>> pin;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (word == "vertices") {
      if (!(ls >> vertices) || vertices < 0) fail("bad vertex count");
    } else if (word == "simplex") {
      if (vertices < 0) fail("simplex before 'vertices' header");
      Facet f;
      for (int k = 0; k < 5; ++k)
        if (!(ls >> f[k])) fail("simplex needs 5 vertex ids");
      std::array<int, 5> sorted = f;
      std::sort(sorted.begin(), sorted.end());
      for (int k = 0; k + 1 < 5; ++k)
        if (sorted[k] == sorted[k + 1]) fail("repeated vertex in simplex");
      for (int v : f)
        if (v < 0 || v >= vertices) fail("vertex id out of range");
      for (const auto& g : file_facets)
        if (g == sorted) fail("duplicate facet");
      file_facets.push_back(sorted);
    } else if (word == "orient") {
      int idx, sign;
      if (!(ls >> idx >> sign)) fail("orient needs <facet-index> <sign>");
      if (sign != 1 && sign != -1) fail("orient sign must be +1 or -1");
      pin = {idx, sign};  // range-checked once all facets are read
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (vertices < 0) throw std::runtime_error("missing 'vertices' header");
  if (pin && (pin->first < 0 || pin->first >= static_cast<int>(file_facets.size())))
    throw std::runtime_error("orient pin facet index out of range");
  Triangulation4 t(vertices, file_facets);
  if (pin) {
    // Translate the file-order index to the sorted-order index.
    const int sorted_idx = t.facet_index(file_facets[pin->first]);
    t.set_orient_pin(sorted_idx, pin->second);
  }
  return t;
}

Triangulation4 load_triangulation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open triangulation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_triangulation(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string save_triangulation(const Triangulation4& t) {
  std::ostringstream os;
  os << "vertices " << t.vertex_count() << "\n";
  for (const auto& f : t.facets()) {
    os << "simplex";
    for (int v : f) os << " " << v;
    os << "\n";
  }
  if (t.orient_pin())
    os << "orient " << t.orient_pin()->first << " " << (t.orient_pin()->second > 0 ? "+1" : "-1")
       << "\n";
  return os.str();
}

}  // namespace ss4
