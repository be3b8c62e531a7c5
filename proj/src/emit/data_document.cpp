#include <exbook/emit/data_document.hpp>
#include <exbook/emit/xml.hpp>
#include <exbook/ingest/json_codec.hpp>

#include <fmt/format.h>

#include <set>

namespace exbook::emit {

using ingest::json;

const std::vector<std::string_view> &ui_string_keys() {
  static const std::vector<std::string_view> keys = {
      "check",     "retry",   "next",       "previous", "correct", "incorrect", "unanswered", "solution",
      "open",      "close",   "noscript",   "score",    "source",  "magnify",   "select",     "unknownKind",
      "overlay",   "attempts"};
  return keys;
}

namespace {

const std::map<std::string, StringTable> &builtin_tables() {
  static const std::map<std::string, StringTable> tables = {
      {"en",
       {{"check", "Check"},
        {"retry", "Try again"},
        {"next", "Next"},
        {"previous", "Previous"},
        {"correct", "Correct"},
        {"incorrect", "Not quite"},
        {"unanswered", "Not answered"},
        {"solution", "Sample solution"},
        {"open", "Open exercise"},
        {"close", "Close"},
        {"noscript", "This interactive exercise needs a reading system with scripting support."},
        {"score", "Score"},
        {"source", "Source"},
        {"magnify", "Enlarge"},
        {"select", "Choose"},
        {"unknownKind", "This exercise type is not supported."},
        {"overlay", "Listen"},
        {"attempts", "Attempts"}}},
      {"fr",
       {{"check", "Vérifier"},
        {"retry", "Réessayer"},
        {"next", "Suivant"},
        {"previous", "Précédent"},
        {"correct", "Correct"},
        {"incorrect", "Pas tout à fait"},
        {"unanswered", "Sans réponse"},
        {"solution", "Solution proposée"},
        {"open", "Ouvrir l'exercice"},
        {"close", "Fermer"},
        {"noscript", "Cet exercice interactif nécessite un lecteur qui exécute les scripts."},
        {"score", "Score"},
        {"source", "Source"},
        {"magnify", "Agrandir"},
        {"select", "Choisir"},
        {"unknownKind", "Ce type d'exercice n'est pas pris en charge."},
        {"overlay", "Écouter"},
        {"attempts", "Essais"}}},
      {"de",
       {{"check", "Prüfen"},
        {"retry", "Noch einmal"},
        {"next", "Weiter"},
        {"previous", "Zurück"},
        {"correct", "Richtig"},
        {"incorrect", "Nicht ganz"},
        {"unanswered", "Nicht beantwortet"},
        {"solution", "Musterlösung"},
        {"open", "Übung öffnen"},
        {"close", "Schließen"},
        {"noscript", "Diese interaktive Übung benötigt ein Lesesystem mit Skriptunterstützung."},
        {"score", "Punkte"},
        {"source", "Quelle"},
        {"magnify", "Vergrößern"},
        {"select", "Auswählen"},
        {"unknownKind", "Dieser Übungstyp wird nicht unterstützt."},
        {"overlay", "Anhören"},
        {"attempts", "Versuche"}}},
  };
  return tables;
}

std::string primary_subtag(std::string_view tag) {
  std::string out(tag.substr(0, tag.find('-')));
  for(auto &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

} // namespace

StringTable ui_strings_for(const ingest::CourseManifest &course, std::string_view languageTag) {
  const auto &tables = builtin_tables();
  const auto builtin = tables.find(primary_subtag(languageTag));
  StringTable table = builtin != tables.end() ? builtin->second : tables.at("en");
  // primary-language overrides first, then the exact tag
  for(const auto &key : {primary_subtag(languageTag), std::string(languageTag)}) {
    if(const auto it = course.uiStrings.find(key); it != course.uiStrings.end()) {
      for(const auto &[k, v] : it->second) {
        table[k] = v;
      }
    }
  }
  return table;
}

std::string emit_exercise_data_document(const std::string &pageStem, const ingest::CourseManifest &course,
                                        const std::vector<const model::ExerciseDefinition *> &defs,
                                        const std::vector<ingest::Anchor> &anchors,
                                        const ingest::AssetCatalog &assets) {
  json doc{{"format", kPageDataFormat}, {"page", pageStem}, {"language", course.language}};

  std::set<std::string> languages{course.language};
  for(const auto *d : defs) {
    if(d->uiLanguage) {
      languages.insert(*d->uiLanguage);
    }
  }
  json ui = json::object();
  for(const auto &lang : languages) {
    json table = json::object();
    for(const auto &[k, v] : ui_strings_for(course, lang)) {
      table[k] = v;
    }
    ui[lang] = table;
  }
  doc["uiStrings"] = ui;

  auto anchorList = json::array();
  for(const auto &a : anchors) {
    anchorList.push_back({{"exercise", a.exerciseId},
                          {"presentation", ingest::presentation_name(a.presentation)},
                          {"magnify", a.magnify},
                          {"showLicense", a.showLicense}});
  }
  doc["anchors"] = anchorList;

  auto exercises = json::array();
  std::set<std::string> basenames;
  for(const auto *d : defs) {
    exercises.push_back(ingest::to_json(*d));
    for(const auto &m : model::media_refs(*d)) {
      basenames.insert(m.basename);
    }
  }
  doc["exercises"] = exercises;

  json media = json::object();
  for(const auto &name : basenames) {
    const auto it = assets.entries.find(name);
    if(it == assets.entries.end()) {
      continue;
    }
    auto files = json::array();
    for(const auto &f : it->second.files) {
      files.push_back({{"format", ingest::format_name(f.format)},
                       {"href", encode_href(fmt::format("../media/{}.{}", name, ingest::format_name(f.format)))},
                       {"mediaType", ingest::format_media_type(f.format)}});
    }
    json entry{{"type", model::media_kind_name(it->second.kind)}, {"files", files}};
    if(const auto &l = it->second.license) {
      json lic{{"title", l->workTitle}, {"author", l->author}, {"license", l->licenseName}};
      if(l->sourceUrl) {
        lic["url"] = *l->sourceUrl;
      }
      entry["license"] = lic;
    }
    media[name] = entry;
  }
  doc["media"] = media;
  return doc.dump(2) + "\n";
}

} // namespace exbook::emit
