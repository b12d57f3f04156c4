#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "lpa/errors.hpp"

namespace {

void add_common(CLI::App* cmd, lpa::cli::Options& o, std::string& output) {
  cmd->add_option("--ring", o.ring, "Z, Zmod:N, Q or GF:P");
  cmd->add_option("--window", o.window, "anonymous indices kept by the E_G truncation");
  cmd->add_option("--depth", o.depth, "longest E_G word or desingularization tail");
  cmd->add_option("--sigma", o.sigma, "greedy or file")->check(CLI::IsMember({"greedy", "file"}));
  cmd->add_option("--edges", o.edges, "edge set F for gf")->delimiter(',');
  cmd->add_option("--degree-bound", o.degree_bound, "tlgis_span path and product length");
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_option("--structure", o.structure, "only this structure of the document");
  cmd->add_option("-o,--output", output, "write to PATH instead of stdout");
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw lpa::Error(lpa::ErrorKind::InvalidStructure, "cannot write " + output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = lpa::cli;
  CLI::App app{"Leavitt path algebra and ultragraph toolkit"};
  app.require_subcommand(1);
  cli::Options o;
  std::string output, file, kind, suite, expr, format = "text";

  auto* analyze = app.add_subcommand("analyze", "singular vertices, unitality, Condition (L), simplicity");
  analyze->add_option("file", file)->required();
  add_common(analyze, o, output);

  auto* construct = app.add_subcommand("construct", "derived structure in the DSL");
  construct->add_option("kind", kind)->required()->check(CLI::IsMember({"eg", "gf", "desing"}));
  construct->add_option("file", file)->required();
  add_common(construct, o, output);

  auto* verify = app.add_subcommand("verify", "run an identity suite; exit 1 on failure");
  verify->add_option("suite", suite)->required();
  verify->add_option("file", file)->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
  add_common(verify, o, output);

  auto* dot = app.add_subcommand("export-dot", "DOT rendering");
  dot->add_option("file", file)->required();
  add_common(dot, o, output);

  auto* report = app.add_subcommand("report", "suites as line-delimited JSON");
  report->add_option("file", file)->required();
  report->add_option("--suites", o.suites, "suite names")->delimiter(',');
  add_common(report, o, output);

  auto* eval = app.add_subcommand("eval", "normal form of an expression");
  eval->add_option("file", file)->required();
  eval->add_option("expr", expr)->required();
  add_common(eval, o, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::ParseFailure;
  }

  try {
    lpa::Document doc = cli::read_document(file);
    if (*analyze) {
      emit(cli::analyze(doc, o), output);
    } else if (*construct) {
      emit(cli::construct(kind, doc, o), output);
    } else if (*verify) {
      lpa::Report r = cli::verify(suite, doc, o);
      emit(format == "jsonl" ? lpa::to_jsonl(r) : lpa::to_text(r), output);
      return r.ok() ? cli::Ok : cli::SuiteFailure;
    } else if (*dot) {
      emit(cli::export_dot(doc, o), output);
    } else if (*report) {
      bool ok = true;
      emit(cli::report(doc, o, ok), output);
      return ok ? cli::Ok : cli::SuiteFailure;
    } else if (*eval) {
      emit(cli::eval(doc, o, expr), output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code(e);
  }
  return cli::Ok;
}
