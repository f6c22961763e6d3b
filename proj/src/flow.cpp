#include "ogtc/flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace ogtc {

namespace {

// Adjacency-list residual network; arc i and i^1 are a forward/backward pair.
class Dinic {
 public:
  explicit Dinic(int nodes) : adj_(static_cast<std::size_t>(nodes)), level_(nodes), iter_(nodes) {}

  int add_arc(int u, int v, Int cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(v);
    cap_.push_back(cap);
    adj_[static_cast<std::size_t>(u)].push_back(id);
    to_.push_back(u);
    cap_.push_back(0);
    adj_[static_cast<std::size_t>(v)].push_back(id + 1);
    return id;
  }

  Int residual(int arc) const { return cap_[static_cast<std::size_t>(arc)]; }

  void raise_capacity(int arc, Int extra) { cap_[static_cast<std::size_t>(arc)] += extra; }

  Int run(int s, int t) {
    Int total = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (Int pushed = dfs(s, t, std::numeric_limits<Int>::max())) total += pushed;
    }
    return total;
  }

  // Nodes reachable from s through positive-residual arcs.
  std::vector<char> forward_reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int id : adj_[static_cast<std::size_t>(u)]) {
        int v = to_[static_cast<std::size_t>(id)];
        if (cap_[static_cast<std::size_t>(id)] > 0 && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

  // Nodes with a positive-residual path to t.
  std::vector<char> can_reach_sink(int t) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> queue{t};
    seen[static_cast<std::size_t>(t)] = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        // Arc id leaves v; its partner id^1 enters v. We need a residual arc
        // u -> v, i.e. positive capacity on the partner of an arc v -> u.
        int u = to_[static_cast<std::size_t>(id)];
        if (cap_[static_cast<std::size_t>(id ^ 1)] > 0 && !seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(s);
    level_[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : adj_[static_cast<std::size_t>(u)]) {
        int v = to_[static_cast<std::size_t>(id)];
        if (cap_[static_cast<std::size_t>(id)] > 0 && level_[static_cast<std::size_t>(v)] < 0) {
          level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  Int dfs(int u, int t, Int limit) {
    if (u == t) return limit;
    for (std::size_t& i = iter_[static_cast<std::size_t>(u)];
         i < adj_[static_cast<std::size_t>(u)].size(); ++i) {
      int id = adj_[static_cast<std::size_t>(u)][i];
      int v = to_[static_cast<std::size_t>(id)];
      if (cap_[static_cast<std::size_t>(id)] <= 0) continue;
      if (level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      Int pushed = dfs(v, t, std::min(limit, cap_[static_cast<std::size_t>(id)]));
      if (pushed > 0) {
        cap_[static_cast<std::size_t>(id)] -= pushed;
        cap_[static_cast<std::size_t>(id ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Int> cap_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

void check_network(const FlowNetwork& net) {
  if (net.node_count < 2)
    fail(ErrorCode::malformed_network, "network needs at least source and sink");
  if (net.source == net.sink) fail(ErrorCode::malformed_network, "source equals sink");
  auto in_range = [&](int v) { return v >= 0 && v < net.node_count; };
  if (!in_range(net.source) || !in_range(net.sink))
    fail(ErrorCode::malformed_network, "source or sink out of range");
  for (const FlowArc& arc : net.arcs) {
    if (!in_range(arc.tail) || !in_range(arc.head))
      fail(ErrorCode::malformed_network, "arc endpoint out of range");
    if (!arc.infinite && arc.capacity < 0)
      fail(ErrorCode::malformed_network, "negative arc capacity");
  }
}

Int infinite_value(const FlowNetwork& net) {
  Int sum = 0;
  for (const FlowArc& arc : net.arcs)
    if (!arc.infinite) sum += arc.capacity;
  return sum + 1;
}

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  check_network(net);
  const Int inf = infinite_value(net);
  Dinic dinic(net.node_count);
  for (const FlowArc& arc : net.arcs)
    dinic.add_arc(arc.tail, arc.head, arc.infinite ? inf : arc.capacity);
  MaxFlowResult result;
  result.value = dinic.run(net.source, net.sink);

  std::vector<char> reach = dinic.forward_reachable(net.source);
  for (int v = 0; v < net.node_count; ++v)
    if (reach[static_cast<std::size_t>(v)]) result.source_side.push_back(v);

  Int cut = 0;
  for (const FlowArc& arc : net.arcs)
    if (reach[static_cast<std::size_t>(arc.tail)] && !reach[static_cast<std::size_t>(arc.head)])
      cut += arc.infinite ? inf : arc.capacity;
  if (cut != result.value)
    throw std::logic_error("max-flow value does not match its cut certificate");
  return result;
}

BipartiteMwisResult bipartite_mwis(const BipartiteWeighted& g) {
  const int na = static_cast<int>(g.a_weights.size());
  const int nb = static_cast<int>(g.b_weights.size());
  for (Int w : g.a_weights)
    if (w <= 0) fail(ErrorCode::validation_error, "side-A weights must be positive");
  for (Int w : g.b_weights)
    if (w <= 0) fail(ErrorCode::validation_error, "side-B weights must be positive");
  for (auto [a, b] : g.edges)
    if (a < 0 || a >= na || b < 0 || b >= nb)
      fail(ErrorCode::validation_error, "bipartite edge endpoint out of range");
  if (!g.a_labels.empty() || !g.b_labels.empty()) {
    if (static_cast<int>(g.a_labels.size()) != na || static_cast<int>(g.b_labels.size()) != nb)
      fail(ErrorCode::validation_error, "label lists must cover both sides");
  }

  Int total = std::accumulate(g.a_weights.begin(), g.a_weights.end(), Int{0}) +
              std::accumulate(g.b_weights.begin(), g.b_weights.end(), Int{0});
  const Int inf = total + 1;

  // source = 0, A vertices 1..na, B vertices na+1..na+nb, sink last.
  const int source = 0;
  const int sink = na + nb + 1;
  Dinic dinic(na + nb + 2);
  std::vector<int> a_arc(static_cast<std::size_t>(na));
  std::vector<int> b_arc(static_cast<std::size_t>(nb));
  for (int a = 0; a < na; ++a)
    a_arc[static_cast<std::size_t>(a)] =
        dinic.add_arc(source, 1 + a, g.a_weights[static_cast<std::size_t>(a)]);
  for (int b = 0; b < nb; ++b)
    b_arc[static_cast<std::size_t>(b)] =
        dinic.add_arc(1 + na + b, sink, g.b_weights[static_cast<std::size_t>(b)]);
  for (auto [a, b] : g.edges) dinic.add_arc(1 + a, 1 + na + b, inf);

  BipartiteMwisResult result;
  result.cut_value = dinic.run(source, sink);

  // A vertex can join the set iff some minimum cut keeps it on the source
  // side; a B vertex iff some minimum cut leaves it on the sink side.
  // Scanning vertices in label order and pinning each accepted vertex with
  // an uncuttable arc yields the lexicographically smallest optimum.
  std::vector<char> reach_s = dinic.forward_reachable(source);
  std::vector<char> reach_t = dinic.can_reach_sink(sink);

  struct Entry {
    int label;
    int index;
    bool side_a;
  };
  std::vector<Entry> order;
  order.reserve(static_cast<std::size_t>(na + nb));
  for (int a = 0; a < na; ++a)
    order.push_back({g.a_labels.empty() ? a : g.a_labels[static_cast<std::size_t>(a)], a, true});
  for (int b = 0; b < nb; ++b)
    order.push_back(
        {g.b_labels.empty() ? na + b : g.b_labels[static_cast<std::size_t>(b)], b, false});
  std::sort(order.begin(), order.end(),
            [](const Entry& x, const Entry& y) { return x.label < y.label; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i - 1].label == order[i].label)
      fail(ErrorCode::validation_error, "vertex labels must be distinct");

  for (const Entry& e : order) {
    if (e.side_a) {
      int node = 1 + e.index;
      if (reach_t[static_cast<std::size_t>(node)]) continue;  // in no optimum
      result.a_selected.push_back(e.index);
      result.weight += g.a_weights[static_cast<std::size_t>(e.index)];
      if (!reach_s[static_cast<std::size_t>(node)]) {
        // Flexible vertex: pin it to the source side. No residual path from
        // it to the sink exists, so the flow stays maximum.
        dinic.raise_capacity(a_arc[static_cast<std::size_t>(e.index)], inf);
        reach_s = dinic.forward_reachable(source);
      }
    } else {
      int node = 1 + na + e.index;
      if (reach_s[static_cast<std::size_t>(node)]) continue;
      result.b_selected.push_back(e.index);
      result.weight += g.b_weights[static_cast<std::size_t>(e.index)];
      if (!reach_t[static_cast<std::size_t>(node)]) {
        dinic.raise_capacity(b_arc[static_cast<std::size_t>(e.index)], inf);
        reach_t = dinic.can_reach_sink(sink);
      }
    }
  }
  std::sort(result.a_selected.begin(), result.a_selected.end());
  std::sort(result.b_selected.begin(), result.b_selected.end());

  if (result.weight + result.cut_value != total)
    throw std::logic_error("independent-set weight plus cut value must equal total weight");
  std::vector<char> in_a(static_cast<std::size_t>(na), 0);
  std::vector<char> in_b(static_cast<std::size_t>(nb), 0);
  for (int a : result.a_selected) in_a[static_cast<std::size_t>(a)] = 1;
  for (int b : result.b_selected) in_b[static_cast<std::size_t>(b)] = 1;
  for (auto [a, b] : g.edges)
    if (in_a[static_cast<std::size_t>(a)] && in_b[static_cast<std::size_t>(b)])
      throw std::logic_error("selected set is not independent");
  return result;
}

}  // namespace ogtc
