#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ipcat/cli/commands.hpp"

using namespace ipcat;

namespace {

int report_error(const std::string& msg, int code, bool as_json) {
  std::cerr << "error: " << msg << "\n";
  if (as_json) std::cout << json{{"error", msg}, {"exit", code}}.dump(2) << "\n";
  return code;
}

cli::Outcome run(const std::string& command, const std::string& path, const cli::Options& o) {
  const CatFile file = load_catfile(path);
  return std::visit(
      [&](const auto& b) -> cli::Outcome {
        if (command == "check") return cli::check(b, o);
        if (command == "strictify") return cli::strictify_cmd(b, file.doc, o);
        const auto env = make_env(b, file.doc);
        if (command == "preunitary") return cli::preunitary(b, env, o);
        if (command == "eval") return cli::eval(b, env, file.doc, o);
        return cli::classify_cmd(b, env, o);
      },
      file.instance);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ipcat: law checker for involutive, unitary and inner product categories"};
  app.require_subcommand(1, 1);

  std::string path;
  std::optional<std::string> out_path;
  bool as_json = false;
  cli::Options o;
  std::string positional_morphism;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("file", path, "category file")->required();
    sub->add_option("--budget", o.budget, "\"exhaustive\" or samples per hom-set");
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--out", out_path, "write the JSON result to PATH");
    sub->add_flag("--json", as_json, "print the JSON result");
  };
  auto* check = app.add_subcommand("check", "run law suites");
  common(check);
  check->add_option("--suite", o.suite, "category, involution, unitary, ip, adjoint, special or all");
  auto* pre = app.add_subcommand("preunitary", "list pre-unitary objects");
  common(pre);
  pre->add_option("--object", o.object, "only this named object");
  auto* ev = app.add_subcommand("eval", "evaluate equations");
  common(ev);
  ev->add_option("--eq", o.equations, "inline equation (repeatable)");
  ev->add_option("--equations", o.equations_file, "file with one equation per line");
  auto* cls = app.add_subcommand("classify", "classify a morphism");
  common(cls);
  cls->add_option("name", positional_morphism, "morphism name or expression");
  cls->add_option("--morphism", o.morphism, "morphism name or expression");
  auto* st = app.add_subcommand("strictify", "emit the strictified category file");
  common(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::parse_error;
  }
  if (!o.morphism && !positional_morphism.empty()) o.morphism = positional_morphism;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto result = run(command, path, o);
    const std::string text = result.report.dump(2) + "\n";
    if (out_path) {
      std::ofstream f(*out_path, std::ios::binary);
      if (!f) return report_error("cannot write " + *out_path, cli::type_error, as_json);
      f << text;
    }
    if (as_json || (command == "strictify" && !out_path)) std::cout << text;
    else if (!out_path || command != "strictify") std::cout << result.summary;
    return result.code;
  } catch (const ParseError& e) {
    return report_error(e.what(), cli::parse_error, as_json);
  } catch (const cli::UsageError& e) {
    return report_error(e.what(), cli::parse_error, as_json);
  } catch (const json::parse_error& e) {
    return report_error(e.what(), cli::parse_error, as_json);
  } catch (const MissingStructure& e) {
    return report_error(e.what(), cli::missing_structure, as_json);
  } catch (const std::exception& e) {
    return report_error(e.what(), cli::type_error, as_json);
  }
}
