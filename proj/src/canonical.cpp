#include "hopf/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Invariant-based initial partition: vertices grouped by iteratively refined
// signatures (down/up set sizes, longest-chain height and depth, color, then
// neighborhood multisets).  Cell order follows signature order, so it is
// identical for isomorphic inputs.
std::vector<std::vector<ElementId>> initial_cells(const Interval& P) {
  int n = P.size();
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    int down = 0, up = 0;
    for (int u = 0; u < n; ++u) {
      if (P.less(u, v)) ++down;
      if (P.less(v, u)) ++up;
    }
    // Longest chain from bottom (height) and to top (depth).
    key[v] = {down, up};
    key[v].push_back(static_cast<int>(P.color(v).size()));
    for (int c : P.color(v)) key[v].push_back(c);
  }
  auto reindex = [&](std::vector<int>& id) {
    std::vector<std::vector<int>> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      id[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), key[v]) -
          sorted.begin());
    return static_cast<int>(sorted.size());
  };
  std::vector<int> id(n);
  int classes = reindex(id);
  // Height/depth fold in via the relational refinement below anyway.
  for (;;) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> dn, up;
      for (int u = 0; u < n; ++u) {
        if (P.less(u, v)) dn.push_back(id[u]);
        if (P.less(v, u)) up.push_back(id[u]);
      }
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      key[v] = {id[v], -1};
      key[v].insert(key[v].end(), dn.begin(), dn.end());
      key[v].push_back(-1);
      key[v].insert(key[v].end(), up.begin(), up.end());
    }
    int next = reindex(id);
    if (next == classes) break;
    classes = next;
  }
  std::map<int, std::vector<ElementId>> grouped;
  for (int v = 0; v < n; ++v) grouped[id[v]].push_back(v);
  std::vector<std::vector<ElementId>> cells;
  for (auto& [k, cell] : grouped) cells.push_back(std::move(cell));
  return cells;
}

struct Searcher {
  const Interval& P;
  int n;
  std::vector<int> stream;
  std::vector<ElementId> placed;
  std::vector<int> best;
  std::vector<ElementId> best_order;
  bool have_best = false;
  // Automorphisms discovered when a leaf reproduces the best stream; used to
  // prune candidates lying in the same orbit of the prefix stabilizer.
  std::vector<std::vector<ElementId>> autos;

  explicit Searcher(const Interval& p) : P(p), n(p.size()) {}

  bool twins(ElementId a, ElementId b) const {
    if (P.color(a) != P.color(b)) return false;
    if (P.leq(a, b) || P.leq(b, a)) return false;
    for (int x = 0; x < n; ++x) {
      if (x == a || x == b) continue;
      if (P.leq(a, x) != P.leq(b, x)) return false;
      if (P.leq(x, a) != P.leq(x, b)) return false;
    }
    return true;
  }

  bool all_twins(const std::vector<ElementId>& cell) const {
    for (size_t i = 0; i < cell.size(); ++i)
      for (size_t j = i + 1; j < cell.size(); ++j)
        if (!twins(cell[i], cell[j])) return false;
    return true;
  }

  // Appends v's segment to stream.  Returns -1 prune, 0 equal-to-best,
  // 1 strictly better.  'better' carries the parent's verdict.
  int append_segment(ElementId v, bool better) {
    size_t off = stream.size();
    const Color& c = P.color(v);
    stream.push_back(static_cast<int>(c.size()));
    stream.insert(stream.end(), c.begin(), c.end());
    for (ElementId p : placed) {
      stream.push_back(P.leq(p, v) ? 1 : 0);
      stream.push_back(P.leq(v, p) ? 1 : 0);
    }
    if (!have_best || better) return 1;
    for (size_t i = off; i < stream.size(); ++i) {
      if (stream[i] < best[i]) return 1;
      if (stream[i] > best[i]) return -1;
    }
    return 0;
  }

  static std::vector<std::vector<ElementId>> refine(
      const Interval& P, const std::vector<std::vector<ElementId>>& cells,
      ElementId v) {
    std::vector<std::vector<ElementId>> out;
    for (const auto& cell : cells) {
      std::array<std::vector<ElementId>, 4> bucket;
      for (ElementId u : cell)
        bucket[(P.leq(u, v) ? 2 : 0) + (P.leq(v, u) ? 1 : 0)].push_back(u);
      for (auto& b : bucket)
        if (!b.empty()) out.push_back(std::move(b));
    }
    return equitable_refine(P, std::move(out));
  }

  // Splits cells by their relation profile against every cell until stable.
  // Signature order is label-independent, so isomorphic states refine alike.
  static std::vector<std::vector<ElementId>> equitable_refine(
      const Interval& P, std::vector<std::vector<ElementId>> cells) {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::vector<ElementId>> next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<ElementId>> split;
        for (ElementId u : cell) {
          std::vector<int> sig;
          sig.reserve(cells.size() * 2);
          for (const auto& other : cells) {
            int below = 0, above = 0;
            for (ElementId w : other) {
              if (P.less(u, w)) ++above;
              if (P.less(w, u)) ++below;
            }
            sig.push_back(below);
            sig.push_back(above);
          }
          split[std::move(sig)].push_back(u);
        }
        if (split.size() > 1) changed = true;
        for (auto& [sig, part] : split) next.push_back(std::move(part));
      }
      cells = std::move(next);
    }
    return cells;
  }

  // Orbits of the elements under the recorded automorphisms that fix the
  // current placed prefix pointwise.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : autos) {
      bool fixes = true;
      for (ElementId p : placed)
        if (g[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(g[v]);
        if (a != b) parent[a] = b;
      }
    }
    for (int i = 0; i < n; ++i) parent[i] = find(i);
    return parent;
  }

  // Returns true when best was replaced inside this subtree; the caller's
  // path prefix then equals the new best prefix, so it must resume comparing.
  bool dfs(const std::vector<std::vector<ElementId>>& cells, bool better) {
    if (cells.empty()) {
      if (!have_best || better) {
        best = stream;
        best_order = placed;
        have_best = true;
        return true;
      }
      if (stream == best) {
        // An equal leaf is an automorphism: best_order[k] -> placed[k].
        std::vector<ElementId> g(n);
        for (int k = 0; k < n; ++k) g[best_order[k]] = placed[k];
        autos.push_back(std::move(g));
      }
      return false;
    }
    const auto& cell = cells[0];
    std::vector<ElementId> candidates;
    if (cell.size() > 1 && all_twins(cell))
      candidates = {cell[0]};  // interchangeable; one branch suffices
    else
      candidates = cell;
    bool updated = false;
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
      ElementId v = candidates[ci];
      if (ci > 0 && !autos.empty()) {
        // Skip v if an earlier sibling lies in the same orbit of the
        // subgroup fixing the placed prefix; their subtrees are isomorphic.
        auto orbit = stabilizer_orbits();
        bool dup = false;
        for (size_t j = 0; j < ci && !dup; ++j)
          dup = orbit[v] == orbit[candidates[j]];
        if (dup) continue;
      }
      size_t off = stream.size();
      int verdict = append_segment(v, better);
      if (verdict >= 0) {
        placed.push_back(v);
        std::vector<std::vector<ElementId>> rest;
        rest.reserve(cells.size());
        std::vector<ElementId> remaining;
        for (ElementId u : cell)
          if (u != v) remaining.push_back(u);
        if (!remaining.empty()) rest.push_back(std::move(remaining));
        for (size_t i = 1; i < cells.size(); ++i) rest.push_back(cells[i]);
        if (dfs(refine(P, rest, v), better || verdict == 1)) {
          better = false;  // our prefix is now a prefix of the new best
          updated = true;
        }
        placed.pop_back();
      }
      stream.resize(off);
    }
    return updated;
  }
};

std::string serialize(const std::vector<int>& stream) {
  std::string out;
  out.reserve(stream.size() * 4);
  for (int x : stream) {
    auto u = static_cast<std::uint32_t>(x);
    out.push_back(static_cast<char>((u >> 24) & 0xff));
    out.push_back(static_cast<char>((u >> 16) & 0xff));
    out.push_back(static_cast<char>((u >> 8) & 0xff));
    out.push_back(static_cast<char>(u & 0xff));
  }
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Interval& P) {
  Searcher s(P);
  s.dfs(initial_cells(P), false);
  CanonicalLabeling L;
  std::vector<int> full{P.size()};
  full.insert(full.end(), s.best.begin(), s.best.end());
  L.form.bytes = serialize(full);
  L.order = s.best_order;
  return L;
}

CanonicalForm canonical_form(const Interval& P) {
  return canonical_labeling(P).form;
}

bool are_equivalent(const Interval& P, const Interval& Q) {
  if (P.size() != Q.size()) return false;
  return canonical_form(P) == canonical_form(Q);
}

std::vector<ElementId> equivalence_witness(const Interval& P,
                                           const Interval& Q) {
  auto lp = canonical_labeling(P);
  auto lq = canonical_labeling(Q);
  if (lp.form != lq.form)
    throw InternalInvariant("equivalence_witness on inequivalent intervals");
  std::vector<ElementId> w(P.size());
  for (int k = 0; k < P.size(); ++k) w[lp.order[k]] = lq.order[k];
  return w;
}

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

const std::string& ClassRegistry::certificate_of(const Interval& P) {
  auto it = cert_cache_.find(P.raw_key());
  if (it != cert_cache_.end()) return it->second;
  std::string cert = canonical_form(P).bytes;
  return cert_cache_.emplace(P.raw_key(), std::move(cert)).first->second;
}

ClassId ClassRegistry::register_class(const Interval& P) {
  const std::string& cert = certificate_of(P);
  auto it = by_cert_.find(cert);
  if (it != by_cert_.end()) return it->second;
  ClassId id = static_cast<ClassId>(names_.size());
  by_cert_.emplace(cert, id);
  names_.push_back("X" + std::to_string(id + 1));
  certs_.push_back(cert);
  reps_.push_back(P);
  return id;
}

}  // namespace hopf
