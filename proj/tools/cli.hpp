#pragma once

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "lpa/dsl.hpp"
#include "lpa/report.hpp"

namespace lpa::cli {

struct Options {
  std::string ring = "Q";
  std::size_t window = 4;
  std::optional<std::size_t> depth;
  std::string sigma = "greedy";  // greedy | file
  std::vector<std::string> edges;
  std::size_t degree_bound = 3;
  std::uint64_t seed = 1;
  std::string structure;         // empty: every structure in the document
  std::vector<std::string> suites;
};

enum Exit { Ok = 0, SuiteFailure = 1, ParseFailure = 2, Truncation = 3, Engine = 4 };

Document read_document(const std::string& path);

std::string analyze(const Document& doc, const Options& opts);
// kind: eg | gf | desing. Output is a document in the DSL.
std::string construct(const std::string& kind, const Document& doc, const Options& opts);
std::string export_dot(const Document& doc, const Options& opts);
Report verify(const std::string& suite, const Document& doc, const Options& opts);
// Every requested suite (default: all) per structure, as line-delimited JSON.
std::string report(const Document& doc, const Options& opts, bool& ok);
std::string eval(const Document& doc, const Options& opts, const std::string& expr);

int exit_code(const std::exception& e);

}  // namespace lpa::cli
