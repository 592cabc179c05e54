#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hist/errors.hpp"
#include "hist/graph.hpp"

namespace hist {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Short-form graph6 body for g (n <= 62). Upper-triangle bits in column order,
/// six per byte, most significant first, each group offset by 63; padding is zero.
inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw UnsupportedError("graph6 long form (n > 62) is not supported");
  const std::size_t bits = pair_count(n);
  std::string out;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  unsigned group = 0;
  std::size_t filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled != 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Decodes one short-form record. An optional leading ">>graph6<<" header is skipped;
/// reported byte offsets are relative to the full input string.
inline Graph decode_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.starts_with(kGraph6Header))
    pos = kGraph6Header.size();
  if (pos >= line.size())
    throw FormatError("empty record", pos);

  auto value_at = [&](std::size_t at) -> unsigned {
    const auto c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126)
      throw FormatError("character " + std::to_string(c) + " outside printable range 63..126", at);
    return c - 63U;
  };

  const unsigned size_byte = value_at(pos);
  if (size_byte == 63)
    throw UnsupportedError("graph6: long form (n > 62) at byte " + std::to_string(pos) + " is not supported");
  const std::size_t n = size_byte;
  ++pos;

  const std::size_t bits = pair_count(n);
  const std::size_t body = (bits + 5) / 6;
  if (line.size() - pos < body)
    throw FormatError("truncated bit stream: expected " + std::to_string(body) + " data bytes, found " +
                          std::to_string(line.size() - pos),
                      line.size());
  if (line.size() - pos > body)
    throw FormatError("trailing data after " + std::to_string(body) + " data bytes", pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t b = 0; b < body; ++b) {
    const unsigned group = value_at(pos + b);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool bit = ((group >> shift) & 1U) != 0;
      if (k >= bits) {
        if (bit)
          throw FormatError("nonzero padding bits", pos + b);
        continue;
      }
      if (bit) {
        // Recover (i, j) from the column-ordered index.
        Vertex j = 1;
        while (triangle_index(0, j + 1) <= k)
          ++j;
        g.add_edge(k - triangle_index(0, j), j);
      }
    }
  }
  return g;
}

/// One decoded corpus line.
struct Graph6Record {
  std::string line;
  std::size_t line_number = 0;
  Graph graph;
};

/// What a Graph6Reader does with a malformed line.
enum class OnFormatError { fail_fast, skip_and_count };

/// Lazy line-oriented reader: one record per line, blank lines skipped, header tolerated
/// only on the first non-blank line.
class Graph6Reader {
public:
  explicit Graph6Reader(std::istream& in, OnFormatError policy = OnFormatError::fail_fast)
      : in_(in), policy_(policy) {}

  /// Next decoded record, or nullopt at end of stream. In fail_fast mode a malformed
  /// line throws FormatError (or UnsupportedError) carrying the line number.
  std::optional<Graph6Record> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      if (line.empty())
        continue;
      const bool first = !seen_record_;
      seen_record_ = true;
      if (!first && line.starts_with(kGraph6Header)) {
        if (fail(FormatError("header only allowed at stream start", 0, line_number_)))
          continue;
      }
      try {
        Graph g = decode_graph6(line);
        return Graph6Record{std::move(line), line_number_, std::move(g)};
      } catch (const FormatError& e) {
        if (fail(FormatError(strip_prefix(e.what()), e.offset(), line_number_)))
          continue;
      } catch (const UnsupportedError& e) {
        if (policy_ == OnFormatError::fail_fast)
          throw UnsupportedError(std::string(e.what()) + " (line " + std::to_string(line_number_) + ")");
        record_skip(e.what());
      }
    }
    return std::nullopt;
  }

  std::size_t skipped() const noexcept { return skipped_; }
  const std::vector<std::string>& skip_messages() const noexcept { return messages_; }
  std::size_t line_number() const noexcept { return line_number_; }

private:
  // Returns true when the caller should continue with the next line.
  bool fail(const FormatError& e) {
    if (policy_ == OnFormatError::fail_fast)
      throw e;
    record_skip(e.what());
    return true;
  }

  void record_skip(std::string msg) {
    ++skipped_;
    messages_.push_back(std::move(msg));
  }

  static std::string strip_prefix(std::string_view what) {
    constexpr std::string_view prefix = "graph6: ";
    if (what.starts_with(prefix))
      what.remove_prefix(prefix.size());
    const auto at = what.rfind(" at byte ");
    return std::string(what.substr(0, at));
  }

  std::istream& in_;
  OnFormatError policy_;
  std::size_t line_number_ = 0;
  std::size_t skipped_ = 0;
  bool seen_record_ = false;
  std::vector<std::string> messages_;
};

} // namespace hist
