#pragma once

// Edge-list and label-file ingestion.
//
// Edge list: one "u v" pair of integer ids per line; '#' starts a comment.
// Labels: one "vertex label" pair per line; the label is any token.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifspectra/graph_model.hpp"

namespace motifspectra::experiments {

struct IngestOptions {
  /// Read each line as an undirected edge. When false, lines are arcs and
  /// only pairs listed in both directions are kept.
  bool symmetrize = true;
  /// Keep only the largest connected component (ties: the one holding the
  /// smallest original id).
  bool largest_component = false;
};

struct Dataset {
  std::string name;
  std::size_t n = 0;
  std::vector<VertexPair> edges;                 ///< dense ids, i < j, sorted
  std::vector<std::int64_t> original_ids;        ///< original id of each dense id
  std::optional<CommunityAssignment> ground_truth;
  std::vector<std::string> label_names;          ///< label token of each class

  /// Dyadic-only superimposed graph over the dataset's edges.
  SuperimposedGraph graph() const;
};

/// Dense ids follow ascending original id. Duplicate and reversed pairs
/// collapse, self-loops are dropped. Vertices that appear only in the label
/// file become isolated vertices. Throws ParseError (with line number) on
/// malformed lines, InvalidInput when a file cannot be read or a vertex has
/// no label.
Dataset ingest_edge_list(const std::string& path, const std::string& labels_path = "",
                         const IngestOptions& opts = {});

/// Reads labels "vertex label" aligned to `n` dense ids 0..n-1 (original ids
/// must be 0..n-1). Used by the CLI for truth/estimate files.
CommunityAssignment read_label_file(const std::string& path);

/// Writes "vertex label" lines.
void write_label_file(const std::string& path, const CommunityAssignment& labels,
                      const std::vector<std::int64_t>& original_ids = {});

}  // namespace motifspectra::experiments
