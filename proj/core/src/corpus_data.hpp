#pragma once

#include <span>
#include <string_view>

namespace chamber::detail {

struct CorpusFile {
  std::string_view name;
  std::string_view text;
};

/// Contents of corpus/*.cld, embedded at configure time.
std::span<const CorpusFile> corpus_files();

}  // namespace chamber::detail
