#include "motifspectra/experiments/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "motifspectra/errors.hpp"

namespace motifspectra::experiments {

namespace {

// Whitespace-split tokens of a line with any '#' comment removed.
std::vector<std::string> tokens_of(const std::string& line) {
  const auto hash = line.find('#');
  std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_id(const std::string& tok, const std::string& path, std::size_t line) {
  std::int64_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError(path + ": '" + tok + "' is not an integer vertex id", line);
  return v;
}

template <class F>
void for_each_record(const std::string& path, F&& f) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError(path + ": expected 2 fields, found " +
                           std::to_string(toks.size()),
                       lineno);
    f(toks, lineno);
  }
}

// Maps original-id -> label token, rejecting conflicting duplicates.
std::map<std::int64_t, std::string> read_labels_raw(const std::string& path) {
  std::map<std::int64_t, std::string> out;
  for_each_record(path, [&](const std::vector<std::string>& t, std::size_t line) {
    const auto id = parse_id(t[0], path, line);
    const auto [it, inserted] = out.emplace(id, t[1]);
    if (!inserted && it->second != t[1])
      throw ParseError(path + ": vertex " + t[0] + " labeled twice", line);
  });
  return out;
}

// Dense class ids in order of first appearance along the vertex order.
CommunityAssignment assign_classes(const std::vector<std::string>& tokens,
                                   std::vector<std::string>& names) {
  std::map<std::string, int> cls;
  std::vector<int> labels;
  labels.reserve(tokens.size());
  for (const auto& t : tokens) {
    const auto [it, inserted] = cls.emplace(t, int(names.size()));
    if (inserted) names.push_back(t);
    labels.push_back(it->second);
  }
  return CommunityAssignment(std::move(labels), std::max(1, int(names.size())));
}

// Vertex set of the largest component; ties go to the lowest vertex.
std::vector<char> largest_component_mask(std::size_t n, const std::vector<VertexPair>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> comp(n, -1);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = int(sizes.size());
    std::size_t count = 0;
    std::queue<Vertex> q;
    q.push(Vertex(s));
    comp[s] = id;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      ++count;
      for (Vertex w : adj[v])
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
    sizes.push_back(count);
  }
  const int best = int(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<char> keep(n);
  for (std::size_t v = 0; v < n; ++v) keep[v] = comp[v] == best;
  return keep;
}

}  // namespace

SuperimposedGraph Dataset::graph() const { return SuperimposedGraph(n, edges, {}); }

Dataset ingest_edge_list(const std::string& path, const std::string& labels_path, const IngestOptions& opts) {
  std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
  for_each_record(path, [&](const std::vector<std::string>& t, std::size_t line) {
    arcs.emplace_back(parse_id(t[0], path, line), parse_id(t[1], path, line));
  });

  std::map<std::int64_t, std::string> raw_labels;
  if (!labels_path.empty()) raw_labels = read_labels_raw(labels_path);

  std::set<std::int64_t> ids;
  for (const auto& [u, v] : arcs) {
    ids.insert(u);
    ids.insert(v);
  }
  for (const auto& kv : raw_labels) ids.insert(kv.first);
  std::vector<std::int64_t> original(ids.begin(), ids.end());
  auto dense = [&](std::int64_t id) {
    return Vertex(std::lower_bound(original.begin(), original.end(), id) - original.begin());
  };

  std::set<std::pair<Vertex, Vertex>> undirected;
  if (opts.symmetrize) {
    for (const auto& [u, v] : arcs) {
      if (u == v) continue;
      const Vertex a = dense(u), b = dense(v);
      undirected.emplace(std::min(a, b), std::max(a, b));
    }
  } else {
    std::set<std::pair<Vertex, Vertex>> directed;
    for (const auto& [u, v] : arcs)
      if (u != v) directed.emplace(dense(u), dense(v));
    for (const auto& [a, b] : directed)
      if (a < b && directed.count({b, a})) undirected.emplace(a, b);
  }
  std::vector<VertexPair> edges;
  edges.reserve(undirected.size());
  for (const auto& [a, b] : undirected) edges.push_back({a, b});

  if (opts.largest_component && !original.empty()) {
    const auto keep = largest_component_mask(original.size(), edges);
    std::vector<Vertex> remap(original.size(), 0);
    std::vector<std::int64_t> kept_ids;
    for (std::size_t v = 0; v < original.size(); ++v)
      if (keep[v]) {
        remap[v] = Vertex(kept_ids.size());
        kept_ids.push_back(original[v]);
      }
    std::vector<VertexPair> kept_edges;
    for (const auto& e : edges)
      if (keep[e[0]]) kept_edges.push_back({remap[e[0]], remap[e[1]]});
    original = std::move(kept_ids);
    edges = std::move(kept_edges);
  }

  if (original.empty()) throw InvalidInput("'" + path + "' contains no vertices");

  Dataset d;
  d.name = path;
  d.n = original.size();
  d.edges = std::move(edges);
  if (!labels_path.empty()) {
    std::vector<std::string> tokens;
    tokens.reserve(d.n);
    for (auto id : original) {
      const auto it = raw_labels.find(id);
      if (it == raw_labels.end())
        throw InvalidInput("vertex " + std::to_string(id) + " of '" + path + "' has no label in '" +
                           labels_path + "'");
      tokens.push_back(it->second);
    }
    d.ground_truth = assign_classes(tokens, d.label_names);
  }
  d.original_ids = std::move(original);
  return d;
}

CommunityAssignment read_label_file(const std::string& path) {
  const auto raw = read_labels_raw(path);
  if (raw.empty()) throw InvalidInput("'" + path + "' contains no labels");
  std::vector<std::string> tokens;
  std::int64_t expect = 0;
  for (const auto& [id, tok] : raw) {
    if (id != expect)
      throw InvalidInput("'" + path + "': vertex ids must be 0..n-1, missing " + std::to_string(expect));
    tokens.push_back(tok);
    ++expect;
  }
  std::vector<std::string> names;
  return assign_classes(tokens, names);
}

void write_label_file(const std::string& path, const CommunityAssignment& labels,
                      const std::vector<std::int64_t>& original_ids) {
  if (!original_ids.empty() && original_ids.size() != labels.size())
    throw DimensionMismatch("write_label_file: id count differs from label count");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << (original_ids.empty() ? std::int64_t(i) : original_ids[i]) << ' ' << labels[i] << '\n';
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace motifspectra::experiments
