#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weaver/errors.hpp"

namespace weaver {

// The subject an article is written about. Non-empty after trimming.
struct Topic {
  std::string text;

  static Topic of(const std::string& raw);

  bool operator==(const Topic&) const = default;
};

// One retrieved web page. Identity is the normalized url: the same url seen
// through different queries resolves to the same doc_id.
struct RetrievedDocument {
  std::string doc_id;
  std::string url;
  std::string title;
  std::string content;
  std::string source_query;
  std::int64_t fetched_at = 0;  // unix seconds; 0 under mocks

  bool operator==(const RetrievedDocument&) const = default;
};

std::string make_doc_id(const std::string& url);

// A category/keyword node in the information tree.
struct InfoNode {
  std::string node_id;
  std::string label;
  std::optional<std::string> parent;  // absent only for root
  int depth = 0;
  std::vector<std::string> queries;
  std::vector<std::string> document_ids;

  bool operator==(const InfoNode&) const = default;
};

// Hierarchical store of queries and retrieved documents. Documents are owned
// here and referenced by id from nodes, so the serialized tree is
// self-contained. revision advances once per acquisition iteration.
struct InformationTree {
  std::string root;
  std::map<std::string, InfoNode> nodes;
  std::map<std::string, RetrievedDocument> documents;
  int revision = 0;

  bool operator==(const InformationTree&) const = default;
};

// One distilled statement merged into the concept pool.
struct Insight {
  std::string insight_id;
  std::string text;
  std::vector<std::string> source_node_ids;
  int created_at_revision = 0;

  bool operator==(const Insight&) const = default;
};

// Provenance record for an insight whose text was superseded during a merge.
struct InsightAuditRecord {
  Insight replaced;
  std::string superseded_by;
  int at_revision = 0;

  bool operator==(const InsightAuditRecord&) const = default;
};

// The evolving distilled understanding of the topic. Merges add or rewrite
// insights; rewritten ones land in the audit list rather than vanishing.
struct ConceptPool {
  std::vector<Insight> insights;
  std::vector<InsightAuditRecord> audit;
  int revision = 0;

  bool operator==(const ConceptPool&) const = default;
};

// Leaves staged for reflection at the current revision.
struct ConceptualBuffer {
  std::vector<std::string> leaf_node_ids;

  bool operator==(const ConceptualBuffer&) const = default;
};

struct Heading {
  int level = 1;
  std::string title;

  bool operator==(const Heading&) const = default;
};

// Heading hierarchy in hash-prefixed markup. Flat in document order; the
// hierarchy is implied by levels (each level exceeds its predecessor by at
// most one, first heading is level 1).
struct Outline {
  Topic topic;
  std::vector<Heading> headings;

  bool operator==(const Outline&) const = default;
};

// One written section. Body starts with the section's own hash-prefixed
// heading; inline "[n]" markers resolve through local_citations.
struct Section {
  std::vector<std::string> heading_path;  // root heading title .. this title
  std::string body;
  std::map<int, std::string> local_citations;  // marker number -> doc_id

  bool operator==(const Section&) const = default;
};

enum class ArticleStage { draft, polished };

struct Article {
  Topic topic;
  std::vector<Section> sections;
  std::map<int, RetrievedDocument> bibliography;  // global number -> document
  ArticleStage stage = ArticleStage::draft;

  bool operator==(const Article&) const = default;
};

// A minimal standalone declarative fact extracted from evaluated text.
struct AtomicFact {
  std::string text;
  std::size_t char_start = 0;  // span into the evaluated text
  std::size_t char_end = 0;

  bool operator==(const AtomicFact&) const = default;
};

// Knowledge-density summary: unique facts per 1000 words.
struct KdReport {
  int total_facts = 0;
  int unique_facts = 0;
  int word_count = 0;
  double kd = 0.0;

  bool operator==(const KdReport&) const = default;
};

struct RunConfig {
  Topic topic;
  int max_depth = 2;              // K: maximum retrieval depth
  int results_per_query = 5;      // web pages returned per query
  int section_retrieve_count = 3; // documents retrieved per section
  double gen_temperature = 1.0;
  double gen_nucleus = 0.9;
  std::uint64_t seed = 42;
  int max_children_per_node = 3;

  // Throws Error(config) on any violated bound.
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

}  // namespace weaver
