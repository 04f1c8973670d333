// Copyright 2026 The honeycomb-qec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "honeycomb/blossom.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace honeycomb {

namespace {

// Maximum-weight matching in a general graph with the primal-dual blossom
// method. Vertices are 1..n, blossoms n+1..2n. Weights must be > 0 for an
// edge to exist.
class WeightedBlossom {
 public:
  using W = std::int64_t;

  explicit WeightedBlossom(int n)
      : n_(n),
        cap_(2 * n + 1),
        g_(static_cast<std::size_t>(cap_) * cap_),
        lab_(cap_, 0),
        match_(cap_, 0),
        slack_(cap_, 0),
        st_(cap_, 0),
        pa_(cap_, 0),
        flo_from_(static_cast<std::size_t>(cap_) * (n + 1), 0),
        s_(cap_, 0),
        vis_(cap_, 0),
        flo_(cap_) {
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) edge(u, v) = {u, v, 0};
  }

  void set_weight(int u, int v, W w) {
    edge(u, v).w = w;
    edge(v, u).w = w;
  }

  // Returns mate of each vertex (0 = unmatched), 1-based.
  std::vector<int> solve() {
    std::fill(match_.begin(), match_.end(), 0);
    n_x_ = n_;
    for (int u = 0; u <= n_; ++u) {
      st_[u] = u;
      flo_[u].clear();
    }
    W w_max = 0;
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) {
        flo_from(u, v) = (u == v ? u : 0);
        w_max = std::max(w_max, edge(u, v).w);
      }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (matching()) {
    }
    return {match_.begin(), match_.begin() + n_ + 1};
  }

 private:
  struct Edge {
    int u = 0, v = 0;
    W w = 0;
  };

  Edge& edge(int u, int v) { return g_[static_cast<std::size_t>(u) * cap_ + v]; }
  int& flo_from(int b, int x) { return flo_from_[static_cast<std::size_t>(b) * (n_ + 1) + x]; }

  W e_delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - g_[static_cast<std::size_t>(e.u) * cap_ + e.v].w * 2; }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(edge(u, x)) < e_delta(edge(slack_[x], x))) slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (edge(u, x).w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push(x);
    } else {
      for (int y : flo_[x]) q_push(y);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int y : flo_[x]) set_st(y, b);
  }

  int get_pr(int b, int xr) {
    const int pr = static_cast<int>(std::find(flo_[b].begin(), flo_[b].end(), xr) - flo_[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flo_[b].begin() + 1, flo_[b].end());
      return static_cast<int>(flo_[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = edge(u, v).v;
    if (u <= n_) return;
    const Edge e = edge(u, v);
    const int xr = flo_from(u, e.u);
    const int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) set_match(flo_[u][i], flo_[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flo_[u].begin(), flo_[u].begin() + pr, flo_[u].end());
  }

  void augment(int u, int v) {
    for (;;) {
      const int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++stamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == stamp_) return u;
      vis_[u] = stamp_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    flo_[b].clear();
    flo_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flo_[b].push_back(x);
      flo_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flo_[b].begin() + 1, flo_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flo_[b].push_back(x);
      flo_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      edge(b, x).w = 0;
      edge(x, b).w = 0;
    }
    for (int x = 1; x <= n_; ++x) flo_from(b, x) = 0;
    for (int xs : flo_[b]) {
      for (int x = 1; x <= n_x_; ++x)
        if (edge(b, x).w == 0 || e_delta(edge(xs, x)) < e_delta(edge(b, x))) {
          edge(b, x) = edge(xs, x);
          edge(x, b) = edge(x, xs);
        }
      for (int x = 1; x <= n_; ++x)
        if (flo_from(xs, x)) flo_from(b, x) = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int y : flo_[b]) set_st(y, y);
    const int xr = flo_from(b, edge(b, pa_[b]).u);
    const int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      const int xs = flo_[b][i], xns = flo_[b][i + 1];
      pa_[xs] = edge(xns, xs).u;
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < flo_[b].size(); ++i) {
      const int xs = flo_[b][i];
      s_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(const Edge& e) {
    const int u = st_[e.u], v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      const int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      const int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool matching() {
    std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    q_ = {};
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        const int u = q_.front();
        q_.pop();
        if (s_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (edge(u, v).w > 0 && st_[u] != st_[v]) {
            if (e_delta(edge(u, v)) == 0) {
              if (on_found_edge(edge(u, v))) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
      }
      W d = std::numeric_limits<W>::max();
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1)
            d = std::min(d, e_delta(edge(slack_[x], x)));
          else if (s_[x] == 0)
            d = std::min(d, e_delta(edge(slack_[x], x)) / 2);
        }
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;
          lab_[u] -= d;
        } else if (s_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b) {
          if (s_[st_[b]] == 0)
            lab_[b] += d * 2;
          else if (s_[st_[b]] == 1)
            lab_[b] -= d * 2;
        }
      q_ = {};
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x && e_delta(edge(slack_[x], x)) == 0)
          if (on_found_edge(edge(slack_[x], x))) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int n_x_ = 0;
  int cap_;
  std::vector<Edge> g_;
  std::vector<W> lab_;
  std::vector<int> match_, slack_, st_, pa_;
  std::vector<int> flo_from_;
  std::vector<int> s_, vis_;
  std::vector<std::vector<int>> flo_;
  std::queue<int> q_;
  int stamp_ = 0;
};

}  // namespace

std::vector<std::pair<int, int>> min_cost_perfect_matching(const std::vector<std::vector<std::int64_t>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even vertex count, got " + std::to_string(n));
  std::vector<std::pair<int, int>> out;
  if (n == 0) return out;
  if (n == 2) return {{0, 1}};
  std::int64_t cmax = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (cost[i][j] < 0) throw std::invalid_argument("matching costs must be non-negative");
      cmax = std::max(cmax, cost[i][j]);
    }
  // Any perfect matching outweighs every smaller matching once the offset
  // exceeds the largest possible perfect-matching cost.
  const std::int64_t offset = cmax * (n / 2) + 1;
  WeightedBlossom solver(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) solver.set_weight(i + 1, j + 1, offset - cost[i][j]);
  const std::vector<int> mate = solver.solve();
  for (int i = 1; i <= n; ++i) {
    if (mate[i] == 0) throw std::logic_error("blossom matching is not perfect");
    if (i < mate[i]) out.emplace_back(i - 1, mate[i] - 1);
  }
  return out;
}

}  // namespace honeycomb
