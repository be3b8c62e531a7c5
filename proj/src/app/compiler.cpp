#include <exbook/app/compiler.hpp>
#include <exbook/emit/data_document.hpp>
#include <exbook/emit/page.hpp>
#include <exbook/emit/stylesheet.hpp>
#include <exbook/error.hpp>
#include <exbook/package/conformance.hpp>
#include <exbook/package/zip.hpp>

#include <fmt/format.h>

namespace exbook::app {

namespace embedded {
extern const char *const kRuntimeScript;
extern const char *const kRuntimeStylesheet;
} // namespace embedded

namespace fs = std::filesystem;
using ingest::Layout;
using ingest::PageLayout;

package::RuntimeBundle builtin_runtime() { return {embedded::kRuntimeScript, embedded::kRuntimeStylesheet}; }

namespace {

std::optional<package::RuntimeBundle> runtime_from(const fs::path &dir) {
  const auto script = dir / "exbook-runtime.js";
  const auto style = dir / "exbook-runtime.css";
  if(!fs::is_regular_file(script) || !fs::is_regular_file(style)) {
    return std::nullopt;
  }
  return package::RuntimeBundle{read_file(script), read_file(style)};
}

void apply_layout_override(ingest::CourseManifest &course, Layout layout, Report &report) {
  course.layout = layout;
  for(auto &chapter : course.chapters) {
    for(auto &page : chapter.pages) {
      page.layout.reset();
      if(layout != Layout::Reflowable) {
        continue;
      }
      for(const auto &a : page.anchors) {
        if(a.presentation == ingest::Presentation::Inline) {
          report.error("InlineOnReflowable", page.sourcePath,
                       fmt::format("anchor '{}' is inline, which a reflowable layout does not allow", a.exerciseId));
        }
      }
    }
  }
}

} // namespace

CompileResult compile_project(Project project, const CompileSettings &settings) {
  CompileResult result;
  auto &course = project.manifest;

  Report report;
  if(settings.layoutOverride) {
    apply_layout_override(course, *settings.layoutOverride, report);
  }
  ingest::AssetCatalog catalog;
  report.append(check_project(project, &catalog));
  if(settings.strict) {
    report.promote_warnings();
  }
  if(report.has_errors()) {
    throw Error(ErrorCode::ValidationFailed, fmt::format("{} error(s) in {}", report.error_count(), project.dir.string()),
                std::move(report));
  }
  result.report = std::move(report);

  package::PlanInputs in;
  in.timestamp = settings.timestamp;
  in.assets = &catalog;

  std::map<std::string, std::string> audioHrefs;
  for(const auto &[basename, entry] : catalog.entries) {
    for(const auto &f : entry.files) {
      in.mediaBytes.emplace(f.path, read_file(project.dir / kMediaDir / f.path));
      if(f.format == ingest::MediaFormat::Mp3 || (f.format == ingest::MediaFormat::Ogg && !audioHrefs.contains(basename))) {
        audioHrefs[basename] = ingest::media_href(basename, f.format);
      }
    }
  }

  for(const auto &ref : ingest::all_pages(course)) {
    auto page = emit::emit_content_page(ref, course, project.definitions, project.sources.at(ref.spec->sourcePath));
    const auto stem = ingest::page_stem(ref);
    if(page.dataPath) {
      std::vector<const model::ExerciseDefinition *> defs;
      for(const auto &a : ref.spec->anchors) {
        defs.push_back(&project.definitions.at(a.exerciseId));
      }
      in.dataDocuments.emplace(*page.dataPath,
                               emit::emit_exercise_data_document(stem, course, defs, ref.spec->anchors, catalog));
    }
    if(ref.spec->overlayRef) {
      in.overlays.push_back(package::build_media_overlay_smil(project.definitions.at(*ref.spec->overlayRef), page,
                                                              audioHrefs, fmt::format("OEBPS/overlays/{}.smil", stem)));
    }
    in.pages.push_back(std::move(page));
  }
  in.stylesheet = emit::emit_stylesheet(course);

  if(settings.runtimeBundle) {
    auto bundle = runtime_from(*settings.runtimeBundle);
    if(!bundle) {
      throw Error(ErrorCode::Io, fmt::format("'{}' does not hold exbook-runtime.js and exbook-runtime.css",
                                             settings.runtimeBundle->string()));
    }
    in.runtime = std::move(*bundle);
  } else if(auto bundle = runtime_from(project.dir / kRuntimeDir)) {
    in.runtime = std::move(*bundle);
  } else {
    in.runtime = builtin_runtime();
    result.placeholderRuntime = true;
  }

  const auto plan = package::plan_container(course, in);
  std::vector<package::ZipInput> zipEntries;
  for(const auto &e : plan.entries) {
    zipEntries.push_back({e.path, e.bytes, e.compression == package::Compression::Deflated});
    result.entries.push_back(e.path);
  }
  result.epub = package::write_zip(zipEntries, plan.timestamp);

  const auto selfCheck = package::validate_container(result.epub);
  if(selfCheck.has_errors()) {
    throw Error(ErrorCode::ValidationFailed, "the generated container fails its own conformance check", selfCheck);
  }
  result.report.append(selfCheck);

  result.pages = in.pages.size();
  for(const auto &[id, def] : project.definitions) {
    ++result.exercisesByKind[def.kind];
  }
  return result;
}

} // namespace exbook::app
