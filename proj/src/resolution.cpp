#include "ngring/resolution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ngring {

ResolutionGraph::ResolutionGraph(std::vector<GraphVertex> vertices,
                                 std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i].id, i).second)
      throw std::invalid_argument("duplicate vertex id " + std::to_string(vertices_[i].id));
    if (vertices_[i].genus < 0) throw std::invalid_argument("negative genus vertex");
  }
  for (auto& [a, b] : edges_) {
    if (a == b) throw std::invalid_argument("loop edge is not supported");
    if (!index_.count(a) || !index_.count(b))
      throw std::invalid_argument("edge references unknown vertex");
    if (a > b) std::swap(a, b);
    ++mult_[{a, b}];
  }
  if (!vertices_.empty() && !connected())
    throw std::invalid_argument("resolution graph must be connected");
}

const GraphVertex& ResolutionGraph::vertex_by_id(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex id " + std::to_string(id));
  return vertices_[it->second];
}

bool ResolutionGraph::has_vertex(int id) const { return index_.count(id) > 0; }

long ResolutionGraph::multiplicity(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = mult_.find({a, b});
  return it == mult_.end() ? 0 : it->second;
}

Int ResolutionGraph::pairing(int a, int b) const {
  if (a == b) return Int(vertex_by_id(a).weight);
  return Int(multiplicity(a, b));
}

long ResolutionGraph::vertex_degree(int id) const {
  long d = 0;
  for (const auto& [e, m] : mult_)
    if (e.first == id || e.second == id) d += m;
  return d;
}

std::vector<int> ResolutionGraph::neighbors(int id) const {
  std::set<int> out;
  for (const auto& [e, m] : mult_) {
    if (e.first == id) out.insert(e.second);
    if (e.second == id) out.insert(e.first);
  }
  return {out.begin(), out.end()};
}

long ResolutionGraph::canonical_pairing(int id) const {
  const GraphVertex& v = vertex_by_id(id);
  return -v.weight + 2 * v.genus - 2;
}

bool ResolutionGraph::connected() const {
  if (vertices_.empty()) return true;
  std::set<int> seen{vertices_.front().id};
  std::vector<int> stack{vertices_.front().id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v))
      if (seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == vertices_.size();
}

std::vector<long> hj_expand(const Int& q, const Int& p) {
  if (!(p > 0 && p < q)) throw std::invalid_argument("hj_expand needs 0 < p < q");
  if (int_gcd(p, q) != 1) throw std::invalid_argument("hj_expand needs gcd(p, q) = 1");
  std::vector<long> out;
  Int a = q, b = p;
  while (b > 0) {
    Int c = (a + b - 1) / b;  // ceil(a/b), both positive
    out.push_back(to_long(c));
    Int nb = c * b - a;
    a = b;
    b = nb;
  }
  return out;
}

Rat hj_evaluate(const std::vector<long>& bs) {
  if (bs.empty()) throw std::invalid_argument("empty continued fraction");
  Rat acc(bs.back());
  for (auto it = bs.rbegin() + 1; it != bs.rend(); ++it) {
    if (acc == 0) throw std::invalid_argument("continued fraction hits a zero tail");
    acc = Rat(*it) - Rat(1) / acc;
  }
  return acc;
}

ResolutionGraph star_graph(const NormalForm& nf, long central_genus) {
  std::vector<GraphVertex> verts;
  std::vector<std::pair<int, int>> edges;
  long deg_b = to_long(nf.b.degree());
  verts.push_back(GraphVertex{0, -deg_b, central_genus});
  int next = 1;
  for (const auto& arm : nf.arms) {
    std::vector<long> chain = hj_expand(arm.q, arm.p);
    int prev = 0;
    for (long w : chain) {
      verts.push_back(GraphVertex{next, -w, 0});
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  ResolutionGraph g(std::move(verts), std::move(edges));
  if (!is_negative_definite(g))
    throw std::invalid_argument(
        "star graph is not negative definite (divisor is not ample enough to contract)");
  return g;
}

Int intersection_determinant(const ResolutionGraph& g) {
  long n = g.size();
  if (n == 0) return Int(1);
  // fraction-free Bareiss elimination
  std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          g.pairing(g.vertices()[static_cast<size_t>(i)].id,
                    g.vertices()[static_cast<size_t>(j)].id);
  Int prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    auto uk = static_cast<size_t>(k);
    if (m[uk][uk] == 0) {
      long swap_row = -1;
      for (long i = k + 1; i < n; ++i)
        if (m[static_cast<size_t>(i)][uk] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Int(0);
      std::swap(m[uk], m[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
        m[ui][uj] = (m[ui][uj] * m[uk][uk] - m[ui][uk] * m[uk][uj]) / prev;
      }
      m[static_cast<size_t>(i)][uk] = 0;
    }
    prev = m[uk][uk];
  }
  return sign * m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

namespace {

// Bareiss positivity test of the leading principal minors of -M.  The entries
// stay exact; T = long long is safe when the Hadamard bound says so.
template <class T>
bool bareiss_posdef(std::vector<std::vector<T>>& m) {
  size_t n = m.size();
  T prev(1);
  for (size_t k = 0; k < n; ++k) {
    // after k steps m[k][k] is the (k+1)-st leading principal minor of -M
    if (m[k][k] <= 0) return false;
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return true;
}

}  // namespace

bool is_negative_definite(const ResolutionGraph& g) {
  size_t n = static_cast<size_t>(g.size());
  if (n == 0) return true;
  // Hadamard bound decides whether plain 64-bit arithmetic is exact here.
  double hadamard_sq = 1.0;
  for (size_t i = 0; i < n; ++i) {
    const GraphVertex& v = g.vertices()[i];
    double row = static_cast<double>(v.weight) * static_cast<double>(v.weight);
    for (size_t j = 0; j < n; ++j)
      if (i != j) {
        double mult = static_cast<double>(g.multiplicity(v.id, g.vertices()[j].id));
        row += mult * mult;
      }
    hadamard_sq *= row;
  }
  if (hadamard_sq < 4e18) {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m[i][j] = -static_cast<long long>(
            to_long(g.pairing(g.vertices()[i].id, g.vertices()[j].id)));
    return bareiss_posdef(m);
  }
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = -g.pairing(g.vertices()[i].id, g.vertices()[j].id);
  return bareiss_posdef(m);
}

Int cycle_pairing(const ResolutionGraph& g, const Cycle& z, int vertex) {
  Int acc(0);
  for (const auto& [id, c] : z) {
    if (c == 0) continue;
    acc += Int(c) * g.pairing(id, vertex);
  }
  return acc;
}

Int cycle_self_intersection(const ResolutionGraph& g, const Cycle& z) {
  Int acc(0);
  for (const auto& [id, c] : z)
    if (c != 0) acc += Int(c) * cycle_pairing(g, z, id);
  return acc;
}

Cycle fundamental_cycle(const ResolutionGraph& g) {
  if (g.empty()) throw std::invalid_argument("fundamental cycle of an empty graph");
  if (!is_negative_definite(g))
    throw std::invalid_argument("fundamental cycle needs a negative-definite graph");
  const auto& verts = g.vertices();
  size_t n = verts.size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = g.pairing(verts[i].id, verts[j].id);
  // pairing of the running cycle against each vertex, updated incrementally
  std::vector<Int> pairing(n, Int(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) pairing[i] += m[i][j];
  Cycle z;
  for (const auto& v : verts) z[v.id] = 1;
  std::vector<size_t> by_id(n);
  for (size_t i = 0; i < n; ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(),
            [&](size_t a, size_t b) { return verts[a].id < verts[b].id; });
  // Laufer loop: lowest vertex id with positive pairing, for determinism.
  for (;;) {
    size_t pick = n;
    for (size_t i : by_id)
      if (pairing[i] > 0) {
        pick = i;
        break;
      }
    if (pick == n) return z;
    ++z[verts[pick].id];
    for (size_t i = 0; i < n; ++i) pairing[i] += m[i][pick];
  }
}

long cycle_pa(const ResolutionGraph& g, const Cycle& z) {
  Int self = cycle_self_intersection(g, z);
  Int kz(0);
  for (const auto& [id, c] : z) kz += Int(c) * g.canonical_pairing(id);
  Int twice = self + kz;
  if (twice % 2 != 0) throw std::logic_error("Z^2 + K.Z must be even");
  return to_long(twice / 2 + 1);
}

ResolutionGraph blow_down(const ResolutionGraph& g) {
  std::vector<GraphVertex> verts = g.vertices();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (;;) {
    auto weight_of = [&](int id) -> long& {
      for (auto& v : verts)
        if (v.id == id) return v.weight;
      throw std::logic_error("lost vertex during blow-down");
    };
    int target = -1;
    std::vector<int> nbs;
    for (const auto& v : verts) {
      if (v.genus != 0 || v.weight != -1) continue;
      std::vector<std::pair<int, long>> adj;  // neighbor -> multiplicity
      for (const auto& e : edges) {
        int other = -1;
        if (e.first == v.id) other = e.second;
        if (e.second == v.id) other = e.first;
        if (other < 0) continue;
        bool found = false;
        for (auto& [n, m] : adj)
          if (n == other) {
            ++m;
            found = true;
          }
        if (!found) adj.emplace_back(other, 1);
      }
      long total = 0;
      for (auto& [n, m] : adj) total += m;
      if (total > 2)
        throw UnsupportedContraction(
            "(-1)-vertex meets three or more curves; the contraction leaves the simple-graph form");
      for (auto& [n, m] : adj)
        if (m > 1)
          throw UnsupportedContraction("contracting a (-1)-vertex on a multiple edge would create a loop");
      target = v.id;
      for (auto& [n, m] : adj) nbs.push_back(n);
      break;
    }
    if (target < 0) break;
    // drop the vertex and its edges
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const std::pair<int, int>& e) {
                                 return e.first == target || e.second == target;
                               }),
                edges.end());
    verts.erase(std::remove_if(verts.begin(), verts.end(),
                               [&](const GraphVertex& v) { return v.id == target; }),
                verts.end());
    for (int n : nbs) weight_of(n) += 1;
    if (nbs.size() == 2) {
      int a = nbs[0], b = nbs[1];
      for (const auto& e : edges)
        if ((e.first == std::min(a, b) && e.second == std::max(a, b)) ||
            (e.first == std::max(a, b) && e.second == std::min(a, b)))
          throw UnsupportedContraction(
              "contraction would create a multiple edge beyond the simple-graph form");
      edges.emplace_back(a, b);
    }
  }
  return ResolutionGraph(std::move(verts), std::move(edges));
}

bool mowy_ng(const ResolutionGraph& g) {
  if (g.empty()) return true;  // exceptional set is empty: the point is smooth
  for (const auto& v : g.vertices())
    if (v.genus == 0 && v.weight == -1)
      throw std::invalid_argument("graph is not a minimal resolution: blow down first");
  Cycle zf = fundamental_cycle(g);
  if (cycle_pa(g, zf) != 0)
    throw std::invalid_argument("anti-nef criterion needs a rational singularity (p_a(Z_f) = 0)");
  for (const auto& v : g.vertices()) {
    Int lhs = Int(g.canonical_pairing(v.id)) + cycle_pairing(g, zf, v.id);
    if (lhs > 0) return false;
  }
  return true;
}

}  // namespace ngring
