#include <set>

#include "cpcompat/parser.hpp"

namespace cpcompat {

namespace {

void render_paragraph(const Paragraph& p, std::string& out) {
  const std::string indent(2 * (p.path.depth() - 1), ' ');
  const std::string inner = indent + "  ";

  out += indent + p.path.to_string();
  if (!p.title.empty()) out += ' ' + p.title;
  if (p.weight != 1) out += ' ' + std::to_string(p.weight);
  out += '\n';

  for (const auto& c : p.comments) out += inner + "//" + c + '\n';

  std::set<char> used;
  for (const auto& o : p.options) {
    if (o.label) used.insert(*o.label);
  }
  char next = 'a';
  for (const auto& o : p.options) {
    std::optional<char> label = o.label;
    if (!label) {
      while (next <= 'z' && used.contains(next)) ++next;
      if (next <= 'z') {
        label = next;
        used.insert(next);
      }
    }
    out += inner;
    if (label) out += std::string(1, *label) + ") ";
    if (o.keyword) out += std::string(keyword_name(*o.keyword)) + ' ';
    out += o.phrase + '\n';
  }

  if (p.connective != Connective::kNone) {
    out += inner + "Connection " + std::string(connective_name(p.connective)) + '\n';
  }
  for (const auto& child : p.children) render_paragraph(child, out);
}

}  // namespace

std::string render_policy(const Policy& policy) {
  std::string out;
  for (const auto& p : policy.roots) render_paragraph(p, out);
  return out;
}

}  // namespace cpcompat
