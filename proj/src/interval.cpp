#include "hopf/interval.hpp"

#include <algorithm>

namespace hopf {

void Interval::finalize() {
  if (n_ <= 0) throw InvalidInput("interval must have at least one element");
  // Order axioms.
  for (int x = 0; x < n_; ++x)
    if (!leq(x, x)) throw NotAPartialOrder("relation is not reflexive");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y && leq(x, y) && leq(y, x))
        throw NotAPartialOrder("relation is not antisymmetric");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!leq(x, y)) continue;
      for (int z = 0; z < n_; ++z)
        if (leq(y, z) && !leq(x, z))
          throw NotAPartialOrder("relation is not transitive");
    }
  // Unique bottom and top.
  bottom_ = -1;
  top_ = -1;
  for (int x = 0; x < n_; ++x) {
    bool is_bot = true, is_top = true;
    for (int y = 0; y < n_; ++y) {
      if (!leq(x, y)) is_bot = false;
      if (!leq(y, x)) is_top = false;
    }
    if (is_bot) bottom_ = x;
    if (is_top) top_ = x;
  }
  if (bottom_ < 0) throw NoUniqueBottom("no unique minimal element");
  if (top_ < 0) throw NoUniqueTop("no unique maximal element");

  if (!rel_.empty()) {
    if (static_cast<int>(rel_.size()) != n_ * n_)
      throw InvalidInput("relative color matrix has wrong size");
    for (auto& c : rel_) std::sort(c.begin(), c.end());
    for (int x = 0; x < n_; ++x)
      if (!rel_[x * n_ + x].empty())
        throw InvalidInput("an element must be uncolored relative to itself");
    colors_.clear();
    for (int z = 0; z < n_; ++z)
      colors_.push_back(rel_[bottom_ * n_ + z]);
  }
  if (colors_.empty()) colors_.resize(n_);
  for (auto& c : colors_) std::sort(c.begin(), c.end());
  if (names_.empty()) {
    names_.reserve(n_);
    for (int i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(colors_.size()) != n_ ||
      static_cast<int>(names_.size()) != n_)
    throw InvalidInput("colors/names size mismatch");

  raw_key_.clear();
  raw_key_.push_back(static_cast<char>(n_));
  raw_key_.append(reinterpret_cast<const char*>(leq_.data()), leq_.size());
  for (const auto& c : colors_) {
    raw_key_.push_back(static_cast<char>(c.size()));
    for (int v : c) {
      raw_key_.push_back(static_cast<char>(v & 0xff));
      raw_key_.push_back(static_cast<char>((v >> 8) & 0xff));
      raw_key_.push_back(static_cast<char>((v >> 16) & 0xff));
    }
  }
}

Interval Interval::from_leq_table(const std::vector<std::vector<bool>>& leq,
                                  std::vector<Color> colors,
                                  std::vector<std::string> names) {
  Interval P;
  P.n_ = static_cast<int>(leq.size());
  P.leq_.assign(static_cast<size_t>(P.n_) * P.n_, 0);
  for (int i = 0; i < P.n_; ++i) {
    if (static_cast<int>(leq[i].size()) != P.n_)
      throw InvalidInput("leq table is not square");
    for (int j = 0; j < P.n_; ++j) P.leq_[i * P.n_ + j] = leq[i][j] ? 1 : 0;
  }
  P.colors_ = std::move(colors);
  P.names_ = std::move(names);
  P.finalize();
  return P;
}

Interval Interval::from_covers(int n,
                               const std::vector<std::pair<int, int>>& covers,
                               std::vector<Color> colors,
                               std::vector<std::string> names) {
  Interval P;
  P.n_ = n;
  P.leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) P.leq_[i * n + i] = 1;
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw InvalidInput("cover references unknown element");
    P.leq_[x * n + y] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (P.leq_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (P.leq_[k * n + j]) P.leq_[i * n + j] = 1;
  P.colors_ = std::move(colors);
  P.names_ = std::move(names);
  P.finalize();
  return P;
}

Interval Interval::from_leq_table_rel(
    const std::vector<std::vector<bool>>& leq, std::vector<Color> rel,
    std::vector<std::string> names) {
  Interval P;
  P.n_ = static_cast<int>(leq.size());
  P.leq_.assign(static_cast<size_t>(P.n_) * P.n_, 0);
  for (int i = 0; i < P.n_; ++i) {
    if (static_cast<int>(leq[i].size()) != P.n_)
      throw InvalidInput("leq table is not square");
    for (int j = 0; j < P.n_; ++j) P.leq_[i * P.n_ + j] = leq[i][j] ? 1 : 0;
  }
  P.rel_ = std::move(rel);
  P.names_ = std::move(names);
  P.finalize();
  return P;
}

bool Interval::covers(ElementId x, ElementId y) const {
  if (!less(x, y)) return false;
  for (int z = 0; z < n_; ++z)
    if (less(x, z) && less(z, y)) return false;
  return true;
}

Subinterval subinterval(const Interval& P, ElementId x, ElementId y) {
  if (!P.leq(x, y)) throw NotComparable("subinterval endpoints not comparable");
  std::vector<ElementId> embedding;
  for (int z = 0; z < P.size(); ++z)
    if (P.leq(x, z) && P.leq(z, y)) embedding.push_back(z);
  int m = static_cast<int>(embedding.size());
  std::vector<std::vector<bool>> t(m, std::vector<bool>(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = P.name(embedding[i]);
    for (int j = 0; j < m; ++j) t[i][j] = P.leq(embedding[i], embedding[j]);
  }
  if (P.has_relative_colors()) {
    std::vector<Color> rel(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (t[i][j]) rel[i * m + j] = P.relative_color(embedding[i], embedding[j]);
    return Subinterval{
        Interval::from_leq_table_rel(t, std::move(rel), std::move(names)),
        std::move(embedding)};
  }
  std::vector<Color> colors(m);
  for (int i = 0; i < m; ++i) colors[i] = P.color(embedding[i]);
  return Subinterval{
      Interval::from_leq_table(t, std::move(colors), std::move(names)),
      std::move(embedding)};
}

Color combine_colors(const Color& a, const Color& b) {
  Color c;
  c.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
  return c;
}

Product cartesian_product(const Interval& P, const Interval& Q) {
  int np = P.size(), nq = Q.size();
  std::vector<std::pair<ElementId, ElementId>> pairs;
  pairs.reserve(static_cast<size_t>(np) * nq);
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < nq; ++y) pairs.emplace_back(x, y);
  int m = np * nq;
  std::vector<std::vector<bool>> t(m, std::vector<bool>(m));
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    auto [xi, yi] = pairs[i];
    names[i] = "(" + P.name(xi) + "," + Q.name(yi) + ")";
    for (int j = 0; j < m; ++j) {
      auto [xj, yj] = pairs[j];
      t[i][j] = P.leq(xi, xj) && Q.leq(yi, yj);
    }
  }
  if (P.has_relative_colors() || Q.has_relative_colors()) {
    std::vector<Color> rel(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (t[i][j])
          rel[i * m + j] =
              combine_colors(P.relative_color(pairs[i].first, pairs[j].first),
                             Q.relative_color(pairs[i].second, pairs[j].second));
    return Product{
        Interval::from_leq_table_rel(t, std::move(rel), std::move(names)),
        std::move(pairs)};
  }
  std::vector<Color> colors(m);
  for (int i = 0; i < m; ++i)
    colors[i] = combine_colors(P.color(pairs[i].first), Q.color(pairs[i].second));
  return Product{
      Interval::from_leq_table(t, std::move(colors), std::move(names)),
      std::move(pairs)};
}

namespace {
void chain_dfs(const Interval& P, std::vector<ElementId>& cur,
               std::vector<Chain>& out) {
  ElementId last = cur.back();
  if (last == P.top()) {
    out.push_back(Chain{cur});
    return;
  }
  for (int z = 0; z < P.size(); ++z) {
    if (P.less(last, z) && P.leq(z, P.top())) {
      cur.push_back(z);
      chain_dfs(P, cur, out);
      cur.pop_back();
    }
  }
}
}  // namespace

std::vector<Chain> enumerate_chains(const Interval& P) {
  std::vector<Chain> out;
  std::vector<ElementId> cur{P.bottom()};
  chain_dfs(P, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool chain_in_interval(const Interval& P, const Chain& C) {
  if (C.elements.empty()) return false;
  if (C.elements.front() != P.bottom() || C.elements.back() != P.top())
    return false;
  for (size_t i = 0; i + 1 < C.elements.size(); ++i)
    if (!P.less(C.elements[i], C.elements[i + 1])) return false;
  for (ElementId x : C.elements)
    if (x < 0 || x >= P.size()) return false;
  return true;
}

std::optional<ElementId> join(const Interval& P, ElementId x, ElementId y) {
  std::optional<ElementId> best;
  for (int z = 0; z < P.size(); ++z) {
    if (!P.leq(x, z) || !P.leq(y, z)) continue;
    if (!best || P.leq(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  // *best is minimal among upper bounds scanned so far only if it is below
  // all of them; verify least-ness.
  for (int z = 0; z < P.size(); ++z)
    if (P.leq(x, z) && P.leq(y, z) && !P.leq(*best, z)) return std::nullopt;
  return best;
}

std::optional<ElementId> meet(const Interval& P, ElementId x, ElementId y) {
  std::optional<ElementId> best;
  for (int z = 0; z < P.size(); ++z) {
    if (!P.leq(z, x) || !P.leq(z, y)) continue;
    if (!best || P.leq(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  for (int z = 0; z < P.size(); ++z)
    if (P.leq(z, x) && P.leq(z, y) && !P.leq(z, *best)) return std::nullopt;
  return best;
}

bool is_lattice(const Interval& P) {
  for (int x = 0; x < P.size(); ++x)
    for (int y = x + 1; y < P.size(); ++y)
      if (!join(P, x, y) || !meet(P, x, y)) return false;
  return true;
}

std::vector<ElementId> lower_interval_intersection(const Interval& P,
                                                   ElementId a, ElementId b) {
  std::vector<ElementId> out;
  for (int z = 0; z < P.size(); ++z)
    if (P.leq(z, a) && P.leq(z, b)) out.push_back(z);
  return out;
}

}  // namespace hopf
