#include <exbook/app/project.hpp>
#include <exbook/error.hpp>
#include <exbook/ingest/anchors.hpp>
#include <exbook/ingest/exercise_document.hpp>

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace exbook::app {

namespace fs = std::filesystem;

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if(!in) {
    throw Error(ErrorCode::Io, fmt::format("cannot read '{}'", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if(in.bad()) {
    throw Error(ErrorCode::Io, fmt::format("error while reading '{}'", path.string()));
  }
  return std::move(buf).str();
}

void write_file(const fs::path &path, std::string_view bytes) {
  if(path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if(!out) {
    throw Error(ErrorCode::Io, fmt::format("cannot write '{}'", path.string()));
  }
}

namespace {

std::vector<ingest::ExerciseSource> discover_exercise_documents(const fs::path &dir) {
  std::vector<ingest::ExerciseSource> out;
  for(const auto &entry : ingest::list_directory(dir / kExercisesDir)) {
    const auto ext = fs::path(entry.path).extension().string();
    if(ext == ".json") {
      out.push_back({std::string(kExercisesDir) + "/" + entry.path, ingest::Dialect::Canonical, false});
    } else if(ext == ".js") {
      out.push_back({std::string(kExercisesDir) + "/" + entry.path, ingest::Dialect::Legacy, false});
    }
  }
  return out;
}

} // namespace

Project load_project(const fs::path &dir) {
  Project p;
  p.dir = dir;
  const auto manifestPath = dir / ingest::kManifestFile;
  if(!fs::is_regular_file(manifestPath)) {
    throw Error(ErrorCode::Io, fmt::format("no {} in '{}'", ingest::kManifestFile, dir.string()));
  }
  const auto manifestText = read_file(manifestPath);
  try {
    p.manifest = ingest::parse_course_manifest(manifestText);
  } catch(const Error &e) {
    throw e.with_context(ingest::kManifestFile);
  }

  auto sources = p.manifest.exerciseDocuments;
  if(sources.empty()) {
    sources = discover_exercise_documents(dir);
  }
  std::map<std::string, std::string> origin;
  for(const auto &src : sources) {
    const auto bytes = read_file(dir / src.path);
    ingest::ParsedDocument doc;
    try {
      doc = ingest::parse_exercise_document(bytes, src.dialect, {src.zeroBasedConfirmed});
    } catch(const Error &e) {
      throw e.with_context(src.path);
    }
    for(auto f : doc.warnings.findings()) {
      f.path = src.path + ": " + f.path;
      p.warnings.add(std::move(f));
    }
    for(const auto &id : doc.order) {
      if(const auto [it, fresh] = origin.emplace(id, src.path); !fresh) {
        throw Error(ErrorCode::ConstraintError,
                    fmt::format("exercise '{}' is defined in both {} and {}", id, it->second, src.path));
      }
      p.order.push_back(id);
      p.definitions.emplace(id, std::move(doc.definitions.at(id)));
    }
  }

  for(const auto &ref : ingest::all_pages(p.manifest)) {
    const auto &path = ref.spec->sourcePath;
    if(!p.sources.contains(path)) {
      p.sources.emplace(path, read_file(dir / path));
    }
  }
  p.media = ingest::list_directory(dir / kMediaDir);
  return p;
}

Report check_project(const Project &project, ingest::AssetCatalog *catalogOut) {
  Report report = project.warnings;
  report.append(ingest::check_anchor_consistency(project.manifest, project.definitions));
  try {
    auto catalog = ingest::resolve_assets(project.definitions, project.media);
    report.append(catalog.warnings);
    if(catalogOut) {
      *catalogOut = std::move(catalog);
    }
  } catch(const Error &e) {
    if(e.report().empty()) {
      report.error(std::string(error_code_name(e.code())), "", e.what());
    } else {
      report.append(e.report());
    }
  }
  return report;
}

} // namespace exbook::app
