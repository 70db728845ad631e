#include "weaver/types.hpp"

#include "weaver/text_util.hpp"

namespace weaver {

Topic Topic::of(const std::string& raw) {
  std::string trimmed = text::trim(raw);
  if (trimmed.empty()) throw Error(ErrorCode::config, "topic must be non-empty after trimming");
  return Topic{trimmed};
}

std::string make_doc_id(const std::string& url) {
  return "d" + text::hex64(text::fnv1a64(text::normalize_url(url)));
}

void RunConfig::validate() const {
  if (text::trim(topic.text).empty()) throw Error(ErrorCode::config, "topic is empty");
  if (max_depth < 1) throw Error(ErrorCode::config, "max_depth must be >= 1");
  if (results_per_query < 1) throw Error(ErrorCode::config, "results_per_query must be >= 1");
  if (section_retrieve_count < 1)
    throw Error(ErrorCode::config, "section_retrieve_count must be >= 1");
  if (!(gen_nucleus > 0.0 && gen_nucleus <= 1.0))
    throw Error(ErrorCode::config, "gen_nucleus must be in (0, 1]");
  if (max_children_per_node < 1)
    throw Error(ErrorCode::config, "max_children_per_node must be >= 1");
}

}  // namespace weaver
