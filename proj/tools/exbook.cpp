#include <exbook/app/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace exbook;

int main(int argc, char **argv) {
  CLI::App cli{"exbook: compile interactive exercise courses into EPUB 3 books"};
  cli.require_subcommand(1);

  app::BuildOptions build;
  std::string outPath;
  std::string timestamp;
  std::string layout;
  std::string runtimeBundle;
  auto *buildCmd = cli.add_subcommand("build", "compile a course project into an .epub");
  buildCmd->add_option("dir", build.projectDir, "project directory")->capture_default_str();
  buildCmd->add_option("-o,--out", outPath, "output file (must end in .epub)");
  buildCmd->add_option("--timestamp", timestamp, "build timestamp: Unix seconds or ISO 8601 UTC");
  buildCmd->add_flag("--strict,!--no-strict", build.strict, "treat warnings as errors (default on)");
  buildCmd->add_option("--layout", layout, "override the course layout")->check(CLI::IsMember({"fixed", "reflowable"}));
  buildCmd->add_option("--runtime-bundle", runtimeBundle, "folder holding exbook-runtime.js and exbook-runtime.css");
  buildCmd->add_flag("--json", build.jsonReport, "print findings as JSON");

  std::filesystem::path validateTarget;
  bool validateJson = false;
  auto *validateCmd = cli.add_subcommand("validate", "check a project directory or a built .epub");
  validateCmd->add_option("path", validateTarget, "project directory or .epub file")->required();
  validateCmd->add_flag("--json", validateJson, "print findings as JSON");

  std::filesystem::path newDir;
  auto *newCmd = cli.add_subcommand("new", "create a project with one example per exercise kind");
  newCmd->add_option("dir", newDir, "directory to create")->required();

  std::filesystem::path inspectDir = ".";
  std::string inspectId;
  auto *inspectCmd = cli.add_subcommand("inspect", "print an exercise and grade its correct and empty responses");
  inspectCmd->add_option("id", inspectId, "exercise id")->required();
  inspectCmd->add_option("-C,--project", inspectDir, "project directory")->capture_default_str();

  std::filesystem::path fixtureDir;
  std::size_t fixtureCases = 100;
  std::uint64_t fixtureSeed = 20140311;
  auto *fixturesCmd = cli.add_subcommand("fixtures", "export the grading fixture corpus");
  fixturesCmd->add_option("-o,--out", fixtureDir, "output directory")->required();
  fixturesCmd->add_option("--cases", fixtureCases, "cases per gradeable kind")->capture_default_str();
  fixturesCmd->add_option("--seed", fixtureSeed, "generator seed")->capture_default_str();

  try {
    cli.parse(argc, argv);
  } catch(const CLI::ParseError &e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : app::kExitIo;
  }

  if(*buildCmd) {
    if(!outPath.empty()) {
      build.outputPath = outPath;
    }
    if(!timestamp.empty()) {
      build.timestamp = timestamp;
    }
    if(layout == "fixed") {
      build.layoutOverride = ingest::Layout::Fixed;
    } else if(layout == "reflowable") {
      build.layoutOverride = ingest::Layout::Reflowable;
    }
    if(!runtimeBundle.empty()) {
      build.runtimeBundle = runtimeBundle;
    }
    return app::cmd_build(build, std::cout, std::cerr);
  }
  if(*validateCmd) {
    return app::cmd_validate(validateTarget, validateJson, std::cout, std::cerr);
  }
  if(*newCmd) {
    return app::cmd_new(newDir, std::cout, std::cerr);
  }
  if(*inspectCmd) {
    return app::cmd_inspect(inspectDir, inspectId, std::cout, std::cerr);
  }
  return app::cmd_fixtures(fixtureDir, fixtureCases, fixtureSeed, std::cout, std::cerr);
}
