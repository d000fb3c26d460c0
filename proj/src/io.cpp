#include "nsw2v/io.hpp"

#include <fstream>
#include <sstream>

#include "text.hpp"

namespace nsw2v {
namespace {

// Returns the body lines after the header, padded with empty lines up to
// `count`. Extra non-empty lines are an error.
std::vector<std::string_view> body_lines(const std::vector<std::string_view>& lines,
                                         std::size_t count, std::string_view what) {
  std::vector<std::string_view> body(lines.begin() + 2, lines.end());
  if (body.size() > count) {
    for (std::size_t k = count; k < body.size(); ++k)
      if (!body[k].empty()) throw ParseError(std::string(what) + ": trailing content");
    body.resize(count);
  }
  body.resize(count, std::string_view{});
  return body;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = text::split_lines(text);
  if (lines.empty() || lines[0] != "nsw2v 1")
    throw ParseError("instance: missing 'nsw2v 1' header");
  if (lines.size() < 2) throw ParseError("instance: missing 'n m p q' line");
  const auto head = text::split_tokens(lines[1], "instance header");
  if (head.size() != 4) throw ParseError("instance: header must be 'n m p q'");
  const auto n = text::parse_number<std::size_t>(head[0], "instance n");
  const auto m = text::parse_number<std::size_t>(head[1], "instance m");
  const auto p = text::parse_number<Value>(head[2], "instance p");
  const auto q = text::parse_number<Value>(head[3], "instance q");
  if (n == 0) throw ParseError("instance: n must be positive");

  const auto body = body_lines(lines, n, "instance");
  std::vector<Bundle> sets(n);
  for (AgentId i = 0; i < n; ++i)
    sets[i] = text::parse_index_set(body[i], m, "instance agent " + std::to_string(i));
  try {
    return Instance(n, m, p, q, std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "nsw2v 1\n";
  out += std::to_string(inst.agents()) + ' ' + std::to_string(inst.goods()) + ' ' +
         std::to_string(inst.small_value()) + ' ' + std::to_string(inst.big_value()) + '\n';
  for (AgentId i = 0; i < inst.agents(); ++i) out += text::join_indices(inst.big_set(i)) + '\n';
  return out;
}

AllocationFile parse_allocation(std::string_view text) {
  const auto lines = text::split_lines(text);
  if (lines.empty() || lines[0] != "alloc 1") throw ParseError("allocation: missing 'alloc 1' header");
  if (lines.size() < 2) throw ParseError("allocation: missing 'n m' line");
  const auto head = text::split_tokens(lines[1], "allocation header");
  if (head.size() != 2) throw ParseError("allocation: header must be 'n m'");
  const auto n = text::parse_number<std::size_t>(head[0], "allocation n");
  const auto m = text::parse_number<std::size_t>(head[1], "allocation m");

  const auto body = body_lines(lines, n, "allocation");
  AllocationFile out;
  out.goods = m;
  out.allocation = Allocation(n);
  for (AgentId i = 0; i < n; ++i)
    out.allocation.bundles[i] = text::parse_index_set(body[i], m, "allocation bundle " + std::to_string(i));
  return out;
}

std::string serialize_allocation(const Allocation& alloc, std::size_t goods) {
  std::string out = "alloc 1\n";
  out += std::to_string(alloc.agents()) + ' ' + std::to_string(goods) + '\n';
  for (const auto& b : alloc.bundles) out += text::join_indices(b) + '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace nsw2v
