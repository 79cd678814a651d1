// Linear-time triconnected components (Hopcroft and Tarjan, with the
// corrections of Gutwenger and Mutzel).
#include "triconnectivity.hpp"

#include <pthread.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "embrank/union_find.hpp"

namespace embrank::detail {

namespace {

template <class T>
class ListPool {
 public:
  explicit ListPool(std::size_t lists) : head_(lists, -1), tail_(lists, -1), size_(lists, 0) {}

  int push_back(int l, T v) {
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({v, tail_[l], -1, l});
    if (tail_[l] >= 0)
      nodes_[tail_[l]].next = id;
    else
      head_[l] = id;
    tail_[l] = id;
    ++size_[l];
    return id;
  }

  int push_front(int l, T v) {
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({v, -1, head_[l], l});
    if (head_[l] >= 0)
      nodes_[head_[l]].prev = id;
    else
      tail_[l] = id;
    head_[l] = id;
    ++size_[l];
    return id;
  }

  void erase(int id) {
    Node& x = nodes_[id];
    if (x.prev >= 0)
      nodes_[x.prev].next = x.next;
    else
      head_[x.list] = x.next;
    if (x.next >= 0)
      nodes_[x.next].prev = x.prev;
    else
      tail_[x.list] = x.prev;
    --size_[x.list];
  }

  int head(int l) const { return head_[l]; }
  int next(int id) const { return nodes_[id].next; }
  T& value(int id) { return nodes_[id].value; }
  int size(int l) const { return size_[l]; }
  bool empty(int l) const { return size_[l] == 0; }

 private:
  struct Node {
    T value;
    int prev, next, list;
  };
  std::vector<Node> nodes_;
  std::vector<int> head_, tail_, size_;
};

enum : unsigned char { kUnseen, kTree, kFrond, kRemoved };

class Splitter {
 public:
  Splitter(int n, const std::vector<std::pair<int, int>>& edges)
      : n_(n), adj_(n), high_(n) {
    for (auto [a, b] : edges) new_edge(a, b);
    m_real_ = edges.size();
    incident_.resize(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      incident_[src_[e]].push_back(e);
      incident_[tgt_[e]].push_back(e);
    }
    for (int v = 0; v < n; ++v) {
      std::sort(incident_[v].begin(), incident_[v].end(),
                [&](int a, int b) { return opposite(a, v) < opposite(b, v); });
    }
  }

  TriconnectedComponents run() {
    number_.assign(n_, 0);
    lowpt1_.assign(n_, 0);
    lowpt2_.assign(n_, 0);
    father_.assign(n_, -1);
    nd_.assign(n_, 0);
    degree_.assign(n_, 0);
    tree_arc_.assign(n_, -1);
    node_at_.assign(n_ + 1, -1);

    count_ = 0;
    start_ = 0;
    dfs1(start_, -1);

    for (int e = 0; e < static_cast<int>(src_.size()); ++e) {
      bool up = number_[tgt_[e]] - number_[src_[e]] > 0;
      if ((up && type_[e] == kFrond) || (!up && type_[e] == kTree)) std::swap(src_[e], tgt_[e]);
    }

    build_acceptable_adjacency();
    dfs2();

    th_.assign(1, 0);
    ta_.assign(1, -1);
    tb_.assign(1, 0);
    top_ = 0;

    path_search(start_);

    SplitComponent last{CompType::Polygon, {}};
    while (!estack_.empty()) {
      last.edges.push_back(estack_.back());
      estack_.pop_back();
    }
    last.type = last.edges.size() >= 4 ? CompType::Triconnected : CompType::Polygon;
    comps_.push_back(std::move(last));

    return assemble();
  }

 private:
  int opposite(int e, int v) const { return src_[e] == v ? tgt_[e] : src_[e]; }

  int new_edge(int s, int t) {
    src_.push_back(s);
    tgt_.push_back(t);
    type_.push_back(kUnseen);
    in_adj_.push_back(-1);
    in_high_.push_back(-1);
    start_edge_.push_back(0);
    return static_cast<int>(src_.size()) - 1;
  }

  void dfs1(int v, int u) {
    number_[v] = ++count_;
    father_[v] = u;
    degree_[v] = static_cast<int>(incident_[v].size());
    lowpt1_[v] = lowpt2_[v] = number_[v];
    nd_[v] = 1;
    for (int e : incident_[v]) {
      if (type_[e] != kUnseen) continue;
      int w = opposite(e, v);
      if (number_[w] == 0) {
        type_[e] = kTree;
        tree_arc_[w] = e;
        dfs1(w, v);
        if (lowpt1_[w] < lowpt1_[v]) {
          lowpt2_[v] = std::min(lowpt1_[v], lowpt2_[w]);
          lowpt1_[v] = lowpt1_[w];
        } else if (lowpt1_[w] == lowpt1_[v]) {
          lowpt2_[v] = std::min(lowpt2_[v], lowpt2_[w]);
        } else {
          lowpt2_[v] = std::min(lowpt2_[v], lowpt1_[w]);
        }
        nd_[v] += nd_[w];
      } else {
        type_[e] = kFrond;
        if (number_[w] < lowpt1_[v]) {
          lowpt2_[v] = lowpt1_[v];
          lowpt1_[v] = number_[w];
        } else if (number_[w] > lowpt1_[v]) {
          lowpt2_[v] = std::min(lowpt2_[v], number_[w]);
        }
      }
    }
  }

  void build_acceptable_adjacency() {
    int max = 3 * n_ + 2;
    std::vector<std::vector<int>> bucket(max + 1);
    for (int e = 0; e < static_cast<int>(src_.size()); ++e) {
      if (type_[e] == kRemoved) continue;
      int w = tgt_[e];
      int phi = type_[e] == kFrond ? 3 * number_[w] + 1
                                   : (lowpt2_[w] < number_[src_[e]] ? 3 * lowpt1_[w] : 3 * lowpt1_[w] + 2);
      bucket[phi].push_back(e);
    }
    for (int i = 1; i <= max; ++i)
      for (int e : bucket[i]) in_adj_[e] = adj_.push_back(src_[e], e);
  }

  void path_finder(int v) {
    newnum_[v] = count_ - nd_[v] + 1;
    for (int it = adj_.head(v); it >= 0; it = adj_.next(it)) {
      int e = adj_.value(it);
      int w = opposite(e, v);
      if (new_path_) {
        new_path_ = false;
        start_edge_[e] = 1;
      }
      if (type_[e] == kTree) {
        path_finder(w);
        --count_;
      } else {
        in_high_[e] = high_.push_back(w, newnum_[v]);
        new_path_ = true;
      }
    }
  }

  void dfs2() {
    newnum_.assign(n_, 0);
    count_ = n_;
    new_path_ = true;
    path_finder(start_);
    std::vector<int> old2new(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) old2new[number_[v]] = newnum_[v];
    for (int v = 0; v < n_; ++v) {
      node_at_[newnum_[v]] = v;
      lowpt1_[v] = old2new[lowpt1_[v]];
      lowpt2_[v] = old2new[lowpt2_[v]];
    }
  }

  int high(int v) { return high_.empty(v) ? 0 : high_.value(high_.head(v)); }

  void del_high(int e) {
    int it = in_high_[e];
    if (it >= 0) {
      high_.erase(it);
      in_high_[e] = -1;
    }
  }

  void tpush(int h, int a, int b) {
    ++top_;
    if (static_cast<int>(th_.size()) <= top_) {
      th_.resize(top_ + 1);
      ta_.resize(top_ + 1);
      tb_.resize(top_ + 1);
    }
    th_[top_] = h;
    ta_[top_] = a;
    tb_[top_] = b;
  }
  void tpush_eos() { tpush(0, -1, 0); }
  bool tnot_eos() const { return ta_[top_] != -1; }

  int epop() {
    int e = estack_.back();
    estack_.pop_back();
    return e;
  }

  SplitComponent& new_comp(CompType t) {
    comps_.push_back({t, {}});
    return comps_.back();
  }

  static void finish_tric_or_poly(SplitComponent& c, int e) {
    c.edges.push_back(e);
    c.type = c.edges.size() >= 4 ? CompType::Triconnected : CompType::Polygon;
  }

  void path_search(int v) {
    int vnum = newnum_[v];
    int outv = adj_.size(v);
    int next_it;
    for (int it = adj_.head(v); it >= 0; it = next_it) {
      next_it = adj_.next(it);
      int e = adj_.value(it);
      int w = tgt_[e];
      int wnum = newnum_[w];

      if (type_[e] == kTree) {
        if (start_edge_[e]) {
          int y = 0, b = 0;
          if (ta_[top_] > lowpt1_[w]) {
            do {
              y = std::max(y, th_[top_]);
              b = tb_[top_--];
            } while (ta_[top_] > lowpt1_[w]);
            tpush(y, lowpt1_[w], b);
          } else {
            tpush(wnum + nd_[w] - 1, lowpt1_[w], vnum);
          }
          tpush_eos();
        }

        path_search(w);

        estack_.push_back(tree_arc_[w]);

        int x = -1;
        while (vnum != 1 &&
               (ta_[top_] == vnum || (degree_[w] == 2 && newnum_[tgt_[adj_.value(adj_.head(w))]] > wnum))) {
          int a = ta_[top_];
          int b = tb_[top_];
          int e_virt = -1;

          if (a == vnum && father_[node_at_[b]] == node_at_[a]) {
            --top_;
          } else {
            int e_ab = -1;
            if (degree_[w] == 2 && newnum_[tgt_[adj_.value(adj_.head(w))]] > wnum) {
              int e1 = epop();
              int e2 = epop();
              adj_.erase(in_adj_[e2]);
              x = tgt_[e2];
              e_virt = new_edge(v, x);
              --degree_[x];
              --degree_[v];
              auto& c = new_comp(CompType::Polygon);
              c.edges = {e1, e2, e_virt};
              if (!estack_.empty()) {
                e1 = estack_.back();
                if (src_[e1] == x && tgt_[e1] == v) {
                  e_ab = epop();
                  adj_.erase(in_adj_[e_ab]);
                  del_high(e_ab);
                }
              }
            } else {
              int h = th_[top_--];
              std::size_t ci = comps_.size();
              new_comp(CompType::Polygon);
              while (true) {
                int xy = estack_.back();
                int xs = src_[xy], ys = tgt_[xy];
                if (!(a <= newnum_[xs] && newnum_[xs] <= h && a <= newnum_[ys] && newnum_[ys] <= h)) break;
                if ((newnum_[xs] == a && newnum_[ys] == b) || (newnum_[ys] == a && newnum_[xs] == b)) {
                  e_ab = epop();
                  adj_.erase(in_adj_[e_ab]);
                  del_high(e_ab);
                } else {
                  int eh = epop();
                  if (it != in_adj_[eh]) {
                    adj_.erase(in_adj_[eh]);
                    del_high(eh);
                  }
                  comps_[ci].edges.push_back(eh);
                  --degree_[xs];
                  --degree_[ys];
                }
              }
              e_virt = new_edge(node_at_[a], node_at_[b]);
              finish_tric_or_poly(comps_[ci], e_virt);
              x = node_at_[b];
            }

            if (e_ab >= 0) {
              std::size_t ci = comps_.size();
              new_comp(CompType::Bond);
              comps_[ci].edges = {e_ab, e_virt};
              e_virt = new_edge(v, x);
              comps_[ci].edges.push_back(e_virt);
              --degree_[x];
              --degree_[v];
            }

            estack_.push_back(e_virt);
            adj_.value(it) = e_virt;
            in_adj_[e_virt] = it;
            ++degree_[x];
            ++degree_[v];
            father_[x] = v;
            tree_arc_[x] = e_virt;
            type_[e_virt] = kTree;
            w = x;
            wnum = newnum_[w];
          }
        }

        if (lowpt2_[w] >= vnum && lowpt1_[w] < vnum && (father_[v] != start_ || outv >= 2)) {
          std::size_t ci = comps_.size();
          new_comp(CompType::Polygon);
          int xn = 0, yn = 0;
          while (!estack_.empty()) {
            int xy = estack_.back();
            xn = newnum_[src_[xy]];
            yn = newnum_[tgt_[xy]];
            if (!((wnum <= xn && xn < wnum + nd_[w]) || (wnum <= yn && yn < wnum + nd_[w]))) break;
            comps_[ci].edges.push_back(epop());
            del_high(xy);
            --degree_[node_at_[xn]];
            --degree_[node_at_[yn]];
          }
          int low = node_at_[lowpt1_[w]];
          int e_virt = new_edge(v, low);
          finish_tric_or_poly(comps_[ci], e_virt);

          if ((xn == vnum && yn == lowpt1_[w]) || (yn == vnum && xn == lowpt1_[w])) {
            std::size_t bi = comps_.size();
            new_comp(CompType::Bond);
            int eh = epop();
            if (in_adj_[eh] != it) adj_.erase(in_adj_[eh]);
            comps_[bi].edges = {eh, e_virt};
            e_virt = new_edge(v, low);
            comps_[bi].edges.push_back(e_virt);
            in_high_[e_virt] = in_high_[eh];
            --degree_[v];
            --degree_[low];
          }

          if (low != father_[v]) {
            estack_.push_back(e_virt);
            adj_.value(it) = e_virt;
            in_adj_[e_virt] = it;
            if (in_high_[e_virt] < 0 && high(low) < vnum) in_high_[e_virt] = high_.push_front(low, vnum);
            ++degree_[v];
            ++degree_[low];
          } else {
            adj_.erase(it);
            std::size_t bi = comps_.size();
            new_comp(CompType::Bond);
            comps_[bi].edges = {e_virt};
            e_virt = new_edge(low, v);
            comps_[bi].edges.push_back(e_virt);
            int eh = tree_arc_[v];
            comps_[bi].edges.push_back(eh);
            tree_arc_[v] = e_virt;
            type_[e_virt] = kTree;
            in_adj_[e_virt] = in_adj_[eh];
            adj_.value(in_adj_[eh]) = e_virt;
          }
        }

        if (start_edge_[e]) {
          while (tnot_eos()) --top_;
          --top_;
        }

        while (tnot_eos() && tb_[top_] != vnum && high(v) > th_[top_]) --top_;

        --outv;
      } else {
        if (start_edge_[e]) {
          int y = 0, b = 0;
          if (ta_[top_] > wnum) {
            do {
              y = std::max(y, th_[top_]);
              b = tb_[top_--];
            } while (ta_[top_] > wnum);
            tpush(y, wnum, b);
          } else {
            tpush(vnum, wnum, vnum);
          }
        }
        estack_.push_back(e);
      }
    }
  }

  // Merges bonds sharing a virtual edge with bonds, and polygons with polygons.
  TriconnectedComponents assemble() {
    std::size_t k = comps_.size();
    std::size_t m = src_.size();
    std::vector<int> c1(m, -1), c2(m, -1);
    for (std::size_t i = 0; i < k; ++i)
      for (int e : comps_[i].edges) (c1[e] < 0 ? c1[e] : c2[e]) = static_cast<int>(i);

    UnionFind uf(k);
    std::vector<char> dropped(m, 0);
    for (std::size_t e = m_real_; e < m; ++e) {
      if (c1[e] < 0 || c2[e] < 0) continue;
      auto t1 = comps_[c1[e]].type, t2 = comps_[c2[e]].type;
      if (t1 == t2 && t1 != CompType::Triconnected) {
        uf.unite(c1[e], c2[e]);
        dropped[e] = 1;
      }
    }

    TriconnectedComponents out;
    out.num_real = m_real_;
    out.ends.resize(m);
    for (std::size_t e = 0; e < m; ++e) out.ends[e] = {src_[e], tgt_[e]};
    std::vector<int> slot(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      if (comps_[i].edges.empty()) continue;
      std::size_t r = uf.find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.components.size());
        out.components.push_back({comps_[i].type, {}});
      }
      auto& dst = out.components[slot[r]].edges;
      for (int e : comps_[i].edges)
        if (!dropped[e]) dst.push_back(e);
    }
    return out;
  }

  int n_;
  std::size_t m_real_ = 0;
  std::vector<int> src_, tgt_;
  std::vector<unsigned char> type_;
  std::vector<int> in_adj_, in_high_;
  std::vector<char> start_edge_;
  std::vector<std::vector<int>> incident_;
  ListPool<int> adj_, high_;

  std::vector<int> number_, lowpt1_, lowpt2_, father_, nd_, degree_, tree_arc_, node_at_, newnum_;
  int count_ = 0;
  int start_ = 0;
  bool new_path_ = true;

  std::vector<int> th_, ta_, tb_;
  int top_ = 0;
  std::vector<int> estack_;
  std::vector<SplitComponent> comps_;
};

}  // namespace

void run_with_large_stack(const std::function<void()>& fn) {
  struct Job {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } job{&fn, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
  pthread_t thread;
  auto body = [](void* arg) -> void* {
    auto* j = static_cast<Job*>(arg);
    try {
      (*j->fn)();
    } catch (...) {
      j->error = std::current_exception();
    }
    return nullptr;
  };
  if (pthread_create(&thread, &attr, body, &job) != 0) {
    pthread_attr_destroy(&attr);
    fn();
    return;
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  if (job.error) std::rethrow_exception(job.error);
}

TriconnectedComponents triconnected_components(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 3) throw std::invalid_argument("triconnected_components needs at least three vertices");
  Splitter s(n, edges);
  TriconnectedComponents out;
  run_with_large_stack([&] { out = s.run(); });
  return out;
}

}  // namespace embrank::detail
