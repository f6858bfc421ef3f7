#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cpcompat/parser.hpp"
#include "support/generators.hpp"

using namespace cpcompat;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(CPCOMPAT_TEST_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> codes(const ParseResult& r) {
  std::vector<std::string> out;
  for (const auto& d : r.diagnostics) out.push_back(d.code);
  return out;
}

bool has_code(const ParseResult& r, std::string_view code, Severity sev) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                     [&](const auto& d) { return d.code == code && d.severity == sev; });
}

}  // namespace

TEST_CASE("sample fragment parses into the expected tree") {
  auto r = parse_policy(read_data("sample_fragment.cp"), "sample");
  REQUIRE(r.policy);
  CHECK(r.diagnostics.empty());
  const auto& p = *r.policy;
  CHECK(p.name == "sample");
  REQUIRE(p.roots.size() == 1);
  CHECK(p.roots[0].title == "INTRODUCTION");
  CHECK(p.roots[0].children.size() == 3);

  const auto* overview = p.find(NumberPath({1, 1}));
  REQUIRE(overview);
  CHECK(overview->comments == std::vector<std::string>{"Gives an overview about the document"});
  CHECK(overview->options.empty());

  const auto* doc = p.find(NumberPath({1, 2}));
  REQUIRE(doc);
  CHECK(doc->title == "Document name and identification");
  REQUIRE(doc->options.size() == 2);
  CHECK(doc->options[0].label == 'a');
  CHECK(doc->options[0].keyword == Keyword::kRecommended);
  CHECK(doc->options[0].phrase == "Document name");
  CHECK(doc->options[1].keyword == Keyword::kMust);
  CHECK(doc->options[1].normalized_phrase == "designated identification");
  CHECK(doc->connective == Connective::kAnd);

  const auto* root_ca = p.find(NumberPath({1, 3, 1, 1}));
  REQUIRE(root_ca);
  CHECK(root_ca->path.depth() == 4);
  CHECK(root_ca->title == "Root authorities");
  REQUIRE(root_ca->options.size() == 1);
  CHECK_FALSE(root_ca->options[0].keyword.has_value());

  const auto* cas = p.find(NumberPath({1, 3, 1}));
  REQUIRE(cas);
  CHECK(cas->options.size() == 2);
  CHECK(cas->connective == Connective::kNone);
  CHECK_FALSE(check_invariants(p).has_value());
}

TEST_CASE("empty input") {
  auto r = parse_policy("", "empty");
  REQUIRE(r.policy);
  CHECK(r.policy->roots.empty());
  CHECK(r.diagnostics.empty());

  r = parse_policy("\n\n   \n");
  REQUIRE(r.policy);
  CHECK(r.policy->roots.empty());
}

TEST_CASE("five-level heading is accepted with a warning") {
  auto r = parse_policy("1 A\n1.1 b\n1.1.1 c\n1.1.1.1 d\n1.1.1.1.1 Deep\n");
  REQUIRE(r.policy);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "DEPTH_EXCEEDS_4");
  CHECK(r.diagnostics[0].severity == Severity::kWarning);
  CHECK(r.diagnostics[0].line_number == 5);
  const auto* deep = r.policy->find(NumberPath({1, 1, 1, 1, 1}));
  REQUIRE(deep);
  CHECK(deep->path.depth() == 5);
  CHECK(deep->title == "Deep");
}

TEST_CASE("structural errors yield no policy") {
  SUBCASE("orphan numbering") {
    auto r = parse_policy("1 X\n1.1 a\n1.3.2 b\n");
    CHECK_FALSE(r.policy);
    CHECK(has_code(r, "ORPHAN_SECTION", Severity::kError));
    CHECK(r.diagnostics[0].line_number == 3);
  }
  SUBCASE("duplicate section") {
    auto r = parse_policy("1 X\n1.1 a\n1.1 again\n");
    CHECK_FALSE(r.policy);
    CHECK(has_code(r, "DUPLICATE_SECTION", Severity::kError));
  }
  SUBCASE("child after its parent was closed") {
    auto r = parse_policy("1 X\n2 Y\n1.1 late\n");
    CHECK_FALSE(r.policy);
    CHECK(has_code(r, "OUT_OF_ORDER", Severity::kError));
  }
  SUBCASE("decreasing siblings") {
    auto r = parse_policy("2 X\n1 Y\n");
    CHECK_FALSE(r.policy);
    CHECK(has_code(r, "OUT_OF_ORDER", Severity::kError));
  }
  SUBCASE("bad connective") {
    auto r = parse_policy("1 X\na) MUST y\nConnection XOR\n");
    CHECK_FALSE(r.policy);
    CHECK(has_code(r, "BAD_CONNECTIVE", Severity::kError));
    CHECK_FALSE(parse_policy("1 X\nConnection and\n").policy);
  }
  SUBCASE("second connection line") {
    auto r = parse_policy("1 X\nConnection AND\nConnection OR\n");
    CHECK(has_code(r, "DUPLICATE_CONNECTIVE", Severity::kError));
  }
  SUBCASE("option before any section") {
    auto r = parse_policy("a) MUST x\n1 X\n");
    CHECK_FALSE(r.policy);
    CHECK(has_code(r, "OPTION_BEFORE_SECTION", Severity::kError));
    CHECK(r.diagnostics[0].line_number == 1);
  }
  SUBCASE("option labels") {
    CHECK(has_code(parse_policy("1 X\nA) MUST x\n"), "BAD_OPTION_LABEL", Severity::kError));
    CHECK(has_code(parse_policy("1 X\na) x\na) y\n"), "DUPLICATE_OPTION_LABEL",
                   Severity::kError));
    CHECK(has_code(parse_policy("1 X\nb) MUST\n"), "EMPTY_OPTION", Severity::kError));
  }
  SUBCASE("weights") {
    CHECK(has_code(parse_policy("1 X 0\n"), "BAD_WEIGHT", Severity::kError));
    CHECK(has_code(parse_policy("1 X 99999999999\n"), "BAD_WEIGHT", Severity::kError));
  }
  SUBCASE("errors are all collected") {
    auto r = parse_policy("a) x\n1 X\n1 X\n1.5.1 z\n");
    CHECK(codes(r) == std::vector<std::string>{"OPTION_BEFORE_SECTION", "DUPLICATE_SECTION",
                                               "ORPHAN_SECTION"});
  }
}

TEST_CASE("line classification details") {
  auto r = parse_policy(
      "1 SCOPE 3\r\n"
      "  connection OR\r\n"
      "  a) OPTIONAL Keys MUST be rotated\r\n"
      "  NOT escrowed keys\r\n"
      "  Connection of hardware modules\r\n"
      "  1.1 Details 2\r\n"
      "2 Lower case\r\n");
  REQUIRE(r.policy);
  const auto& scope = r.policy->roots[0];
  CHECK(scope.title == "SCOPE");
  CHECK(scope.weight == 3);
  CHECK(scope.connective == Connective::kOr);
  REQUIRE(scope.options.size() == 3);
  CHECK(scope.options[0].keyword == Keyword::kOptional);
  CHECK(scope.options[0].phrase == "Keys MUST be rotated");
  CHECK(scope.options[1].keyword == Keyword::kNot);
  CHECK(scope.options[1].phrase == "escrowed keys");
  CHECK_FALSE(scope.options[2].keyword.has_value());
  CHECK(scope.options[2].phrase == "Connection of hardware modules");
  CHECK(scope.children[0].weight == 2);
  CHECK(scope.children[0].title == "Details");
  CHECK(has_code(r, "TITLE_NOT_UPPERCASE", Severity::kWarning));
  // "1." is a heading path with a trailing dot.
  r = parse_policy("1 A\n2 B\n1. again\n");
  CHECK(has_code(r, "DUPLICATE_SECTION", Severity::kError));
}

TEST_CASE("numbering gaps warn") {
  auto r = parse_policy("1 A\n1.1 x\n1.3 y\n");
  REQUIRE(r.policy);
  CHECK(codes(r) == std::vector<std::string>{"NUMBERING_GAP"});
}

TEST_CASE("parse is deterministic") {
  const auto text = read_data("sample_fragment.cp");
  auto r1 = parse_policy(text, "x");
  auto r2 = parse_policy(text, "x");
  CHECK(r1.policy == r2.policy);
  CHECK(r1.diagnostics == r2.diagnostics);
}

TEST_CASE("render_policy") {
  Policy p;
  Paragraph scope;
  scope.path = NumberPath({1});
  scope.title = "SCOPE";
  p.roots.push_back(scope);
  CHECK(render_policy(p) == "1 SCOPE\n");

  p.roots[0].weight = 4;
  p.roots[0].comments.push_back(" note");
  p.roots[0].options.emplace_back(std::nullopt, Keyword::kMust, "first");
  p.roots[0].options.emplace_back('a', std::nullopt, "second");
  p.roots[0].connective = Connective::kOr;
  Paragraph child;
  child.path = NumberPath({1, 1});
  child.title = "Child";
  p.roots[0].children.push_back(child);
  CHECK(render_policy(p) ==
        "1 SCOPE 4\n"
        "  // note\n"
        "  b) MUST first\n"
        "  a) second\n"
        "  Connection OR\n"
        "  1.1 Child\n");
}

TEST_CASE("sample fragment round trips through render") {
  auto original = parse_policy(read_data("sample_fragment.cp"));
  REQUIRE(original.policy);
  const auto text = render_policy(*original.policy);
  auto again = parse_policy(text);
  REQUIRE(again.policy);
  CHECK(*again.policy == *original.policy);
  CHECK(render_policy(*again.policy) == text);
}

TEST_CASE("round trip on generated policies") {
  testing::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const auto policy = testing::random_policy(rng);
    auto first = parse_policy(render_policy(policy));
    REQUIRE_FALSE(first.has_errors());
    CHECK(same_structure(*first.policy, policy));
    auto second = parse_policy(render_policy(*first.policy));
    REQUIRE(second.policy);
    CHECK(*second.policy == *first.policy);
  }
}

TEST_CASE("each line carries at most one diagnostic per code") {
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto r = parse_policy(render_policy(testing::random_policy(rng)) + "1 DUP\n1 DUP\nx\n");
    std::set<std::pair<std::size_t, std::string>> seen;
    for (const auto& d : r.diagnostics) CHECK(seen.emplace(d.line_number, d.code).second);
  }
}
