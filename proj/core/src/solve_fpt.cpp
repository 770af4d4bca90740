#include "cimprove/solve_fpt.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "cimprove/errors.hpp"

namespace cimprove {

namespace {

using Clock = std::chrono::steady_clock;

// Shared view of an instance and its decomposition.
struct Setup {
  Setup(const ImprovementInstance& inst, const ClusterDecomposition& dec)
      : g(inst.graph()), z(inst.target()), k(inst.budget()), dec(dec) {
    choosable.assign(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      choosable[v] = v != z && !g.has_edge(z, v);
    }
    for (Vertex v : dec.vds) {
      if (choosable[v]) vds_choosable.push_back(v);
    }
    avail.resize(dec.clusters.size());
    for (std::size_t c = 0; c < dec.clusters.size(); ++c) {
      for (Vertex v : dec.clusters[c]) {
        if (choosable[v]) avail[c][dec.vertex_sig[v]].push_back(v);
      }
    }
  }

  const Graph& g;
  Vertex z;
  std::size_t k;
  const ClusterDecomposition& dec;
  std::vector<bool> choosable;
  std::vector<Vertex> vds_choosable;
  // Per cluster: vertex signature -> choosable members (ascending).
  std::vector<std::map<Signature, std::vector<Vertex>>> avail;
};

void check_inputs(const ImprovementInstance& inst,
                  const ClusterDecomposition& dec, CentralityKind kind) {
  if (inst.graph().is_directed() || inst.centrality() != kind) {
    throw ArgumentError(std::string("FPT solver expects an undirected ") +
                        std::string(to_string(kind)) + " instance");
  }
  if (dec.z != inst.target()) {
    throw ArgumentError("decomposition was built for a different target");
  }
  validate_decomposition(inst.graph(), dec);
}

// Keeps the best evaluated endpoint set; ties go to the shorter, then
// lexicographically smaller addition list (the exact solver's order).
class BestTracker {
 public:
  explicit BestTracker(const ImprovementInstance& inst) : inst_(inst) {
    report_.best.achieved = inst.evaluate({});
    report_.candidates_evaluated = 1;
  }

  void offer(const std::vector<Vertex>& endpoints) {
    std::vector<Edge> additions;
    additions.reserve(endpoints.size());
    for (Vertex v : endpoints) {
      additions.push_back(canonical(inst_.graph(), {inst_.target(), v}));
    }
    additions = normalize_additions(inst_.graph(), std::move(additions));
    Rational value = inst_.evaluate(additions);
    ++report_.candidates_evaluated;
    const auto order = value <=> report_.best.achieved;
    const auto& held = report_.best.additions;
    const bool earlier =
        additions.size() < held.size() ||
        (additions.size() == held.size() && additions < held);
    if (order > 0 || (order == 0 && earlier)) {
      report_.best.achieved = std::move(value);
      report_.best.additions = std::move(additions);
    }
  }

  SolverReport finish(Clock::time_point start) {
    report_.elapsed = Clock::now() - start;
    return std::move(report_);
  }

 private:
  const ImprovementInstance& inst_;
  SolverReport report_;
};

// All subsets of `pool` of size <= limit, increasing size then
// lexicographic.
void for_each_subset(const std::vector<Vertex>& pool, std::size_t limit,
                     const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from,
                                                           std::size_t size) {
    if (current.size() == size) {
      f(current);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i + 1, size);
      current.pop_back();
    }
  };
  for (std::size_t size = 0; size <= std::min(limit, pool.size()); ++size) {
    rec(0, size);
  }
}

// ---------------------------------------------------------------------------
// Closeness

struct ElementInfo {
  SignatureElement element;
  std::vector<std::size_t> eligible;  // clusters
};

std::vector<ElementInfo> closeness_elements(const Setup& s,
                                            std::size_t budget) {
  std::map<SignatureElement, std::vector<std::size_t>> by_element;
  for (std::size_t c = 0; c < s.avail.size(); ++c) {
    std::vector<Signature> sigs;
    for (const auto& [sig, members] : s.avail[c]) sigs.push_back(sig);
    const std::size_t j = sigs.size();
    if (j >= 31) throw ArgumentError("too many vertex signatures in a cluster");
    for (std::uint32_t mask = 1; mask < (1u << j); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > budget) continue;
      SignatureElement e{s.dec.cluster_sig[c], {}};
      for (std::size_t i = 0; i < j; ++i) {
        if (mask & (1u << i)) e.vertex_sigs.push_back(sigs[i]);
      }
      by_element[e].push_back(c);
    }
  }
  std::vector<ElementInfo> out;
  for (auto& [e, clusters] : by_element) out.push_back({e, std::move(clusters)});
  return out;
}

// One vertex per signature in the element: the smallest choosable one.
void append_reduct(const Setup& s, std::size_t cluster,
                   const SignatureElement& e, std::vector<Vertex>& out) {
  for (Signature sig : e.vertex_sigs) out.push_back(s.avail[cluster].at(sig)[0]);
}

class ClosenessSearch {
 public:
  ClosenessSearch(const Setup& s, BestTracker& best) : s_(s), best_(best) {}

  void run() {
    for_each_subset(s_.vds_choosable, s_.k,
                    [&](const std::vector<Vertex>& part) {
                      vds_part_ = part;
                      budget_ = s_.k - part.size();
                      elements_ = closeness_elements(s_, budget_);
                      sigma_.clear();
                      enumerate_signatures(0, budget_);
                    });
  }

 private:
  void enumerate_signatures(std::size_t i, std::size_t remaining) {
    if (i == elements_.size()) {
      process_signature();
      return;
    }
    enumerate_signatures(i + 1, remaining);
    const std::size_t cost = elements_[i].element.cost();
    if (cost <= remaining) {
      sigma_.push_back(i);
      enumerate_signatures(i + 1, remaining - cost);
      sigma_.pop_back();
    }
  }

  // Any assignment of distinct clusters, one per element.
  bool realize(std::size_t pos, std::vector<std::size_t>& used) {
    if (pos == sigma_.size()) return true;
    for (std::size_t c : elements_[sigma_[pos]].eligible) {
      if (std::find(used.begin(), used.end(), c) != used.end()) continue;
      used.push_back(c);
      if (realize(pos + 1, used)) return true;
      used.pop_back();
    }
    return false;
  }

  // Distance of a vertex with signature `sig` through its signature
  // neighbors, given the distances of V_VDS + {z}.
  std::optional<std::uint32_t> through(Signature sig,
                                       const std::vector<Distance>& d) const {
    std::optional<std::uint32_t> best;
    for (std::size_t i = 0; i <= s_.dec.vds.size(); ++i) {
      if (!(sig & (Signature{1} << i))) continue;
      const Distance di =
          i == s_.dec.vds.size() ? Distance(0) : d[s_.dec.vds[i]];
      if (di.finite() && (!best || di.hops() < *best)) best = di.hops();
    }
    return best;
  }

  // Exact change in closeness from touching `cluster` with element `e`,
  // with the distances of V_VDS fixed by the signature.
  Rational gain(std::size_t cluster, const SignatureElement& e,
                const std::vector<Distance>& d) const {
    std::vector<Vertex> reduct;
    append_reduct(s_, cluster, e, reduct);
    const auto via_cluster = through(s_.dec.cluster_sig[cluster], d);
    Rational total;
    for (Vertex v : s_.dec.clusters[cluster]) {
      std::optional<std::uint32_t> base;
      if (const auto direct = through(s_.dec.vertex_sig[v], d)) {
        base = *direct + 1;
      }
      if (via_cluster && (!base || *via_cluster + 2 < *base)) {
        base = *via_cluster + 2;
      }
      const Rational before =
          base ? Rational(1, static_cast<std::int64_t>(*base)) : Rational(0);
      Rational after;
      if (std::find(reduct.begin(), reduct.end(), v) != reduct.end()) {
        after = 1;
      } else {
        after = Rational(1, base && *base < 2 ? *base : 2);
      }
      total += after - before;
    }
    return total;
  }

  void process_signature() {
    std::vector<std::size_t> realization;
    if (!realize(0, realization)) return;

    std::vector<Vertex> endpoints = vds_part_;
    for (std::size_t pos = 0; pos < sigma_.size(); ++pos) {
      append_reduct(s_, realization[pos], elements_[sigma_[pos]].element,
                    endpoints);
    }
    std::vector<Edge> additions;
    for (Vertex v : endpoints) additions.push_back(canonical(s_.g, {s_.z, v}));
    const auto dist = bfs_distances(add_edges(s_.g, additions), s_.z);

    // Most potent clusters per element: top `budget_` by gain, then size.
    ranked_.assign(sigma_.size(), {});
    for (std::size_t pos = 0; pos < sigma_.size(); ++pos) {
      const ElementInfo& info = elements_[sigma_[pos]];
      std::vector<std::pair<Rational, std::size_t>> scored;
      for (std::size_t c : info.eligible) {
        scored.emplace_back(gain(c, info.element, dist), c);
      }
      std::sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        const auto sa = s_.dec.clusters[a.second].size();
        const auto sb = s_.dec.clusters[b.second].size();
        if (sa != sb) return sa > sb;
        return a.second < b.second;
      });
      if (scored.size() > budget_) scored.resize(budget_);
      for (const auto& entry : scored) ranked_[pos].push_back(entry.second);
    }
    used_.clear();
    chosen_ = vds_part_;
    assign(0, budget_);
  }

  // Choose a nonempty set of ranked clusters for each element in turn.
  void assign(std::size_t pos, std::size_t remaining) {
    if (pos == sigma_.size()) {
      finish(remaining);
      return;
    }
    const auto& list = ranked_[pos];
    const SignatureElement& e = elements_[sigma_[pos]].element;
    const std::size_t n = list.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const std::size_t count = static_cast<std::size_t>(std::popcount(mask));
      if (count * e.cost() > remaining) continue;
      bool clash = false;
      for (std::size_t i = 0; i < n && !clash; ++i) {
        clash = (mask & (1u << i)) &&
                std::find(used_.begin(), used_.end(), list[i]) != used_.end();
      }
      if (clash) continue;
      const std::size_t mark_used = used_.size();
      const std::size_t mark_chosen = chosen_.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        used_.push_back(list[i]);
        append_reduct(s_, list[i], e, chosen_);
      }
      assign(pos + 1, remaining - count * e.cost());
      used_.resize(mark_used);
      chosen_.resize(mark_chosen);
    }
  }

  void finish(std::size_t remaining) {
    std::vector<Vertex> endpoints = chosen_;
    // Pad with the smallest candidates not yet used; never decreases c_z.
    for (Vertex v = 0; v < s_.g.vertex_count() && remaining > 0; ++v) {
      if (!s_.choosable[v]) continue;
      if (std::find(endpoints.begin(), endpoints.end(), v) != endpoints.end()) {
        continue;
      }
      endpoints.push_back(v);
      --remaining;
    }
    best_.offer(endpoints);
  }

  const Setup& s_;
  BestTracker& best_;
  std::vector<Vertex> vds_part_;
  std::size_t budget_ = 0;
  std::vector<ElementInfo> elements_;
  std::vector<std::size_t> sigma_;
  std::vector<std::vector<std::size_t>> ranked_;
  std::vector<std::size_t> used_;
  std::vector<Vertex> chosen_;
};

// ---------------------------------------------------------------------------
// Betweenness

struct Pattern {
  Signature cluster_sig = 0;
  std::vector<std::pair<Signature, std::size_t>> counts;

  std::size_t cost() const {
    std::size_t total = 0;
    for (const auto& [sig, count] : counts) total += count;
    return total;
  }
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

bool eligible(const Setup& s, std::size_t cluster, const Pattern& p) {
  if (s.dec.cluster_sig[cluster] != p.cluster_sig) return false;
  for (const auto& [sig, count] : p.counts) {
    const auto it = s.avail[cluster].find(sig);
    if (it == s.avail[cluster].end() || it->second.size() < count) return false;
  }
  return true;
}

std::vector<Pattern> betweenness_patterns(const Setup& s,
                                          std::size_t budget) {
  std::set<Pattern> patterns;
  for (std::size_t c = 0; c < s.avail.size(); ++c) {
    std::vector<std::pair<Signature, std::size_t>> sizes;
    for (const auto& [sig, members] : s.avail[c]) {
      sizes.emplace_back(sig, members.size());
    }
    Pattern p{s.dec.cluster_sig[c], {}};
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t used) {
      if (i == sizes.size()) {
        if (used > 0) patterns.insert(p);
        return;
      }
      rec(i + 1, used);
      for (std::size_t count = 1;
           count <= sizes[i].second && used + count <= budget; ++count) {
        p.counts.emplace_back(sizes[i].first, count);
        rec(i + 1, used + count);
        p.counts.pop_back();
      }
    };
    rec(0, 0);
  }
  return {patterns.begin(), patterns.end()};
}

}  // namespace

std::size_t ProfileGroup::vertices_per_cluster() const {
  std::size_t total = 0;
  for (const auto& [sig, count] : vertex_counts) total += count;
  return total;
}

std::size_t BetweennessProfile::cost() const {
  std::size_t total = vds_part.size();
  for (const ProfileGroup& g : groups) {
    total += g.clusters * g.vertices_per_cluster();
  }
  return total;
}

SolverReport solve_closeness_fpt(const ImprovementInstance& inst,
                                 const ClusterDecomposition& dec) {
  check_inputs(inst, dec, CentralityKind::kCloseness);
  const auto start = Clock::now();
  const Setup setup(inst, dec);
  BestTracker best(inst);
  ClosenessSearch(setup, best).run();
  return best.finish(start);
}

void for_each_betweenness_profile(
    const ImprovementInstance& inst, const ClusterDecomposition& dec,
    const std::function<void(const BetweennessProfile&)>& visit) {
  check_inputs(inst, dec, CentralityKind::kBetweenness);
  const Setup s(inst, dec);
  const auto patterns = betweenness_patterns(s, s.k);
  std::vector<std::size_t> eligible_count(patterns.size(), 0);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t c = 0; c < dec.clusters.size(); ++c) {
      if (eligible(s, c, patterns[i])) ++eligible_count[i];
    }
  }

  BetweennessProfile profile;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t rem) {
    if (i == patterns.size()) {
      visit(profile);
      return;
    }
    rec(i + 1, rem);
    const std::size_t cost = patterns[i].cost();
    for (std::size_t m = 1; m * cost <= rem && m <= eligible_count[i]; ++m) {
      profile.groups.push_back(
          {patterns[i].cluster_sig, patterns[i].counts, m});
      rec(i + 1, rem - m * cost);
      profile.groups.pop_back();
    }
  };
  for_each_subset(s.vds_choosable, s.k, [&](const std::vector<Vertex>& part) {
    profile.vds_part = part;
    profile.groups.clear();
    rec(0, s.k - part.size());
  });
}

SolverReport solve_betweenness_fpt(const ImprovementInstance& inst,
                                   const ClusterDecomposition& dec) {
  check_inputs(inst, dec, CentralityKind::kBetweenness);
  const auto start = Clock::now();
  const Setup s(inst, dec);
  BestTracker best(inst);

  // Automorphism classes: equal cluster signature and equal multiset of
  // member signatures.
  std::map<std::pair<Signature, std::vector<Signature>>, std::size_t> class_id;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t c = 0; c < dec.clusters.size(); ++c) {
    std::vector<Signature> sigs;
    for (Vertex v : dec.clusters[c]) sigs.push_back(dec.vertex_sig[v]);
    std::sort(sigs.begin(), sigs.end());
    const auto [it, inserted] =
        class_id.try_emplace({dec.cluster_sig[c], sigs}, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(c);
  }

  std::vector<std::size_t> used_in_class(classes.size(), 0);
  std::vector<Vertex> chosen;

  for_each_betweenness_profile(inst, dec, [&](const BetweennessProfile& prof) {
    chosen = prof.vds_part;
    // Distribute each group's clusters over eligible classes.
    std::function<void(std::size_t, std::size_t, std::size_t)> place =
        [&](std::size_t group, std::size_t cls, std::size_t left) {
          if (group == prof.groups.size()) {
            best.offer(chosen);
            return;
          }
          const ProfileGroup& g = prof.groups[group];
          if (left == 0) {
            if (group + 1 < prof.groups.size()) {
              place(group + 1, 0, prof.groups[group + 1].clusters);
            } else {
              place(group + 1, 0, 0);
            }
            return;
          }
          if (cls == classes.size()) return;
          place(group, cls + 1, left);
          const Pattern p{g.cluster_sig, g.vertex_counts};
          if (!eligible(s, classes[cls][0], p)) return;
          const std::size_t free = classes[cls].size() - used_in_class[cls];
          const std::size_t mark = chosen.size();
          for (std::size_t take = 1; take <= std::min(free, left); ++take) {
            const std::size_t cluster =
                classes[cls][used_in_class[cls]];
            ++used_in_class[cls];
            for (const auto& [sig, count] : g.vertex_counts) {
              const auto& members = s.avail[cluster].at(sig);
              chosen.insert(chosen.end(), members.begin(),
                            members.begin() + static_cast<std::ptrdiff_t>(count));
            }
            place(group, cls + 1, left - take);
          }
          used_in_class[cls] -= std::min(free, left);
          chosen.resize(mark);
        };
    if (prof.groups.empty()) {
      best.offer(chosen);
    } else {
      place(0, 0, prof.groups[0].clusters);
    }
  });
  return best.finish(start);
}

}  // namespace cimprove
