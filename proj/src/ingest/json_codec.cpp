#include <exbook/error.hpp>
#include <exbook/ingest/exercise_document.hpp>
#include <exbook/ingest/json_codec.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace exbook::ingest {

using namespace exbook::model;

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string at(const std::string &path, std::size_t i) { return fmt::format("{}[{}]", path, i); }

const json &array_at(const json &v, const std::string &path) {
  if(!v.is_array()) {
    schema_error(path, "expected a list");
  }
  return v;
}

std::vector<std::string> strings(const json &v, const std::string &path) {
  std::vector<std::string> out;
  const auto &arr = array_at(v, path);
  for(std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_string(arr[i], at(path, i)));
  }
  return out;
}

std::set<std::size_t> index_set(const json &v, const std::string &path) {
  std::set<std::size_t> out;
  const auto &arr = array_at(v, path);
  for(std::size_t i = 0; i < arr.size(); ++i) {
    if(!out.insert(as_index(arr[i], at(path, i))).second) {
      schema_error(at(path, i), "duplicate index");
    }
  }
  return out;
}

std::vector<std::size_t> index_list(const json &v, const std::string &path) {
  std::vector<std::size_t> out;
  const auto &arr = array_at(v, path);
  for(std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_index(arr[i], at(path, i)));
  }
  return out;
}

template <class T, class F> std::vector<std::optional<T>> nullable_list(const json &v, const std::string &path, F &&read) {
  std::vector<std::optional<T>> out;
  const auto &arr = array_at(v, path);
  for(std::size_t i = 0; i < arr.size(); ++i) {
    if(arr[i].is_null()) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(read(arr[i], at(path, i)));
    }
  }
  return out;
}

template <class T, class F> json nullable_json(const std::vector<std::optional<T>> &values, F &&write) {
  auto arr = json::array();
  for(const auto &v : values) {
    arr.push_back(v ? write(*v) : json(nullptr));
  }
  return arr;
}

json index_json(const std::set<std::size_t> &s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

LicenseInfo license_from_json(const json &v, const std::string &path) {
  Fields f(v, path);
  LicenseInfo l;
  l.workTitle = f.string("title");
  l.author = f.string("author");
  l.licenseName = f.string("license");
  l.sourceUrl = f.optional_string("url");
  f.finish();
  return l;
}

json license_json(const LicenseInfo &l) {
  json j{{"title", l.workTitle}, {"author", l.author}, {"license", l.licenseName}};
  if(l.sourceUrl) {
    j["url"] = *l.sourceUrl;
  }
  return j;
}

Item item_from_json(const json &v, const std::string &path) {
  if(v.is_string()) {
    return v.get<std::string>();
  }
  if(v.is_object()) {
    return media_from_json(v, path);
  }
  schema_error(path, "expected a text item or a media object");
}

std::vector<Item> items(const json &v, const std::string &path) {
  std::vector<Item> out;
  const auto &arr = array_at(v, path);
  for(std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(item_from_json(arr[i], at(path, i)));
  }
  return out;
}

json items_json(const std::vector<Item> &list) {
  auto arr = json::array();
  for(const auto &i : list) {
    arr.push_back(to_json(i));
  }
  return arr;
}

NormalizationPolicy policy_from(Fields &f) {
  NormalizationPolicy p;
  if(const auto *v = f.optional("policy")) {
    Fields pf(*v, f.child("policy"));
    p.caseSensitive = pf.boolean("caseSensitive", p.caseSensitive);
    p.diacriticSensitive = pf.boolean("diacriticSensitive", p.diacriticSensitive);
    p.collapseWhitespace = pf.boolean("collapseWhitespace", p.collapseWhitespace);
    pf.finish();
  }
  return p;
}

Rect rect_from_json(const json &v, const std::string &path) {
  Fields f(v, path);
  Rect r{f.number("x"), f.number("y"), f.number("width"), f.number("height")};
  f.finish();
  return r;
}

task::GridPos pos_from_json(const json &v, const std::string &path) {
  Fields f(v, path);
  task::GridPos p{f.integer("row"), f.integer("col")};
  f.finish();
  return p;
}

TaskSpec read_task(ExerciseKind kind, Fields &f) {
  const auto &p = f.path();
  switch(kind) {
  case ExerciseKind::PairAssignment: {
    task::PairAssignment t;
    const auto &arr = array_at(f.required("pairs"), f.child("pairs"));
    for(std::size_t i = 0; i < arr.size(); ++i) {
      Fields pf(arr[i], at(f.child("pairs"), i));
      t.pairs.push_back({item_from_json(pf.required("left"), pf.child("left")),
                         item_from_json(pf.required("right"), pf.child("right"))});
      pf.finish();
    }
    if(const auto *order = f.optional("rightOrder")) {
      t.rightOrder = index_list(*order, f.child("rightOrder"));
    }
    return t;
  }
  case ExerciseKind::GroupAssignment: {
    task::GroupAssignment t;
    const auto &arr = array_at(f.required("groups"), f.child("groups"));
    for(std::size_t i = 0; i < arr.size(); ++i) {
      Fields gf(arr[i], at(f.child("groups"), i));
      task::Group g;
      g.label = gf.string("label");
      g.members = items(gf.required("members"), gf.child("members"));
      gf.finish();
      t.groups.push_back(std::move(g));
    }
    return t;
  }
  case ExerciseKind::OrderAssignment: return task::OrderAssignment{items(f.required("items"), f.child("items"))};
  case ExerciseKind::DragDropImage: {
    task::DragDropImage t;
    t.background = media_from_json(f.required("background"), f.child("background"));
    const auto &arr = array_at(f.required("draggables"), f.child("draggables"));
    for(std::size_t i = 0; i < arr.size(); ++i) {
      Fields df(arr[i], at(f.child("draggables"), i));
      task::Draggable d;
      d.label = df.string("label");
      d.zone = rect_from_json(df.required("zone"), df.child("zone"));
      df.finish();
      t.draggables.push_back(std::move(d));
    }
    return t;
  }
  case ExerciseKind::Cloze: {
    task::Cloze t;
    const auto &arr = array_at(f.required("segments"), f.child("segments"));
    for(std::size_t i = 0; i < arr.size(); ++i) {
      if(arr[i].is_string()) {
        t.segments.emplace_back(arr[i].get<std::string>());
        continue;
      }
      Fields gf(arr[i], at(f.child("segments"), i));
      task::Gap gap;
      gap.accepted = strings(gf.required("accepted"), gf.child("accepted"));
      gap.policy = policy_from(gf);
      gf.finish();
      t.segments.emplace_back(std::move(gap));
    }
    return t;
  }
  case ExerciseKind::Dictation: {
    task::Dictation t;
    t.audio = media_from_json(f.required("audio"), f.child("audio"));
    t.sampleSolution = f.string("sampleSolution");
    t.policy = policy_from(f);
    return t;
  }
  case ExerciseKind::MultipleChoice: {
    task::MultipleChoice t;
    t.question = f.string("question");
    t.answers = strings(f.required("answers"), f.child("answers"));
    t.correctAnswers = index_set(f.required("correctAnswers"), f.child("correctAnswers"));
    t.multiSelect = f.boolean("multiSelect", false);
    if(const auto *m = f.optional("media")) {
      t.media = media_from_json(*m, f.child("media"));
    }
    return t;
  }
  case ExerciseKind::TextQuiz: {
    task::TextQuiz t;
    t.question = f.string("question");
    t.accepted = strings(f.required("accepted"), f.child("accepted"));
    t.policy = policy_from(f);
    return t;
  }
  case ExerciseKind::Crossword: {
    task::Crossword t;
    const auto &cells = array_at(f.required("cells"), f.child("cells"));
    for(std::size_t i = 0; i < cells.size(); ++i) {
      Fields cf(cells[i], at(f.child("cells"), i));
      t.cells.push_back({cf.integer("row"), cf.integer("col"), cf.string("letter")});
      cf.finish();
    }
    const auto &entries = array_at(f.required("entries"), f.child("entries"));
    for(std::size_t i = 0; i < entries.size(); ++i) {
      Fields ef(entries[i], at(f.child("entries"), i));
      task::CrosswordEntry e;
      e.clue = ef.string("clue");
      const auto dir = ef.string("direction");
      if(dir == "across") {
        e.direction = task::Direction::Across;
      } else if(dir == "down") {
        e.direction = task::Direction::Down;
      } else {
        schema_error(ef.child("direction"), "expected \"across\" or \"down\"");
      }
      e.startRow = ef.integer("row");
      e.startCol = ef.integer("col");
      e.length = ef.integer("length");
      ef.finish();
      t.entries.push_back(std::move(e));
    }
    const auto &sol = array_at(f.required("solutionCells"), f.child("solutionCells"));
    for(std::size_t i = 0; i < sol.size(); ++i) {
      t.solutionCells.push_back(pos_from_json(sol[i], at(f.child("solutionCells"), i)));
    }
    return t;
  }
  case ExerciseKind::DropDownList: {
    task::DropDownList t;
    const auto &arr = array_at(f.required("segments"), f.child("segments"));
    for(std::size_t i = 0; i < arr.size(); ++i) {
      if(arr[i].is_string()) {
        t.segments.emplace_back(arr[i].get<std::string>());
        continue;
      }
      Fields cf(arr[i], at(f.child("segments"), i));
      task::Choice c;
      c.options = strings(cf.required("options"), cf.child("options"));
      c.correctIndex = cf.index("correctIndex");
      cf.finish();
      t.segments.emplace_back(std::move(c));
    }
    return t;
  }
  case ExerciseKind::Memory: {
    task::Memory t;
    t.cards = items(f.required("cards"), f.child("cards"));
    t.pairing = index_list(f.required("pairing"), f.child("pairing"));
    return t;
  }
  case ExerciseKind::TextSelection: {
    task::TextSelection t;
    t.tokens = strings(f.required("tokens"), f.child("tokens"));
    t.correctTokens = index_set(f.required("correctTokens"), f.child("correctTokens"));
    return t;
  }
  case ExerciseKind::MediaOverlay: {
    task::MediaOverlay t;
    t.audio = media_from_json(f.required("audio"), f.child("audio"));
    const auto &arr = array_at(f.required("clips"), f.child("clips"));
    for(std::size_t i = 0; i < arr.size(); ++i) {
      Fields cf(arr[i], at(f.child("clips"), i));
      task::Clip c;
      c.textFragmentId = cf.string("fragment");
      c.clipBegin = cf.number("begin");
      c.clipEnd = cf.number("end");
      c.text = cf.optional_string("text");
      cf.finish();
      t.clips.push_back(std::move(c));
    }
    return t;
  }
  }
  schema_error(p, "unknown kind");
}

} // namespace

json parse_json_text(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch(const json::parse_error &e) {
    // the reported offset is one past the offending byte
    const auto where = locate(bytes, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if(const auto cut = what.find("; "); cut != std::string::npos) {
      what = what.substr(cut + 2);
    }
    throw Error(ErrorCode::SyntaxError, fmt::format("{}:{}: {}", where.line, where.column, what), where);
  }
}

[[noreturn]] void schema_error(const std::string &path, const std::string &message) {
  throw Error(ErrorCode::SchemaError, fmt::format("{}: {}", path.empty() ? "<root>" : path, message));
}

Fields::Fields(const json &value, std::string path) : value_(value), path_(std::move(path)) {
  if(!value_.is_object()) {
    schema_error(path_, "expected an object");
  }
}

std::string Fields::child(std::string_view key) const {
  return path_.empty() ? std::string(key) : fmt::format("{}/{}", path_, key);
}

bool Fields::has(std::string_view key) const { return value_.contains(key); }

const json *Fields::optional(std::string_view key) {
  seen_.emplace_back(key);
  const auto it = value_.find(key);
  if(it == value_.end() || it->is_null()) {
    return nullptr;
  }
  return &*it;
}

const json &Fields::required(std::string_view key) {
  const auto *v = optional(key);
  if(!v) {
    schema_error(child(key), "missing required field");
  }
  return *v;
}

std::string Fields::string(std::string_view key) { return as_string(required(key), child(key)); }

std::optional<std::string> Fields::optional_string(std::string_view key) {
  const auto *v = optional(key);
  if(!v) {
    return std::nullopt;
  }
  return as_string(*v, child(key));
}

bool Fields::boolean(std::string_view key, bool fallback) {
  const auto *v = optional(key);
  if(!v) {
    return fallback;
  }
  if(!v->is_boolean()) {
    schema_error(child(key), "expected true or false");
  }
  return v->get<bool>();
}

std::size_t Fields::index(std::string_view key) { return as_index(required(key), child(key)); }

int Fields::integer(std::string_view key) {
  const auto &v = required(key);
  if(!v.is_number_integer()) {
    schema_error(child(key), "expected an integer");
  }
  const auto i = v.get<std::int64_t>();
  if(i < -1000000 || i > 1000000) {
    schema_error(child(key), "integer out of range");
  }
  return static_cast<int>(i);
}

double Fields::number(std::string_view key) { return as_number(required(key), child(key)); }

void Fields::finish() const {
  for(auto it = value_.begin(); it != value_.end(); ++it) {
    if(std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end()) {
      schema_error(child(it.key()), "unknown field");
    }
  }
}

std::string as_string(const json &v, const std::string &path) {
  if(!v.is_string()) {
    schema_error(path, "expected a string");
  }
  return v.get<std::string>();
}

std::size_t as_index(const json &v, const std::string &path) {
  if(!v.is_number_integer() || (v.is_number_integer() && v.get<std::int64_t>() < 0 && !v.is_number_unsigned())) {
    schema_error(path, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

double as_number(const json &v, const std::string &path) {
  if(!v.is_number()) {
    schema_error(path, "expected a number");
  }
  const auto d = v.get<double>();
  if(!std::isfinite(d)) {
    schema_error(path, "expected a finite number");
  }
  return d;
}

MediaRef media_from_json(const json &v, const std::string &path) {
  Fields f(v, path);
  MediaRef m;
  const auto type = f.string("type");
  const auto kind = media_kind_from_name(type);
  if(!kind) {
    schema_error(f.child("type"), fmt::format("unknown media type '{}'", type));
  }
  m.kind = *kind;
  m.basename = f.string("file");
  if(const auto *l = f.optional("license")) {
    m.license = license_from_json(*l, f.child("license"));
  }
  f.finish();
  return m;
}

json to_json(const MediaRef &m) {
  json j{{"type", media_kind_name(m.kind)}, {"file", m.basename}};
  if(m.license) {
    j["license"] = license_json(*m.license);
  }
  return j;
}

json to_json(const Item &item) {
  return std::visit(overloaded{[](const std::string &s) { return json(s); },
                               [](const MediaRef &m) { return to_json(m); }},
                    item);
}

json to_json(const NormalizationPolicy &p) {
  return {{"caseSensitive", p.caseSensitive},
          {"diacriticSensitive", p.diacriticSensitive},
          {"collapseWhitespace", p.collapseWhitespace}};
}

json to_json(const TaskSpec &task) {
  return std::visit(
      overloaded{
          [](const task::PairAssignment &t) {
            auto pairs = json::array();
            for(const auto &p : t.pairs) {
              pairs.push_back({{"left", to_json(p.left)}, {"right", to_json(p.right)}});
            }
            json j{{"pairs", pairs}};
            if(!t.rightOrder.empty()) {
              j["rightOrder"] = t.rightOrder;
            }
            return j;
          },
          [](const task::GroupAssignment &t) {
            auto groups = json::array();
            for(const auto &g : t.groups) {
              groups.push_back({{"label", g.label}, {"members", items_json(g.members)}});
            }
            return json{{"groups", groups}};
          },
          [](const task::OrderAssignment &t) { return json{{"items", items_json(t.items)}}; },
          [](const task::DragDropImage &t) {
            auto drags = json::array();
            for(const auto &d : t.draggables) {
              drags.push_back({{"label", d.label},
                               {"zone", {{"x", d.zone.x}, {"y", d.zone.y}, {"width", d.zone.width}, {"height", d.zone.height}}}});
            }
            return json{{"background", to_json(t.background)}, {"draggables", drags}};
          },
          [](const task::Cloze &t) {
            auto segs = json::array();
            for(const auto &s : t.segments) {
              if(const auto *lit = std::get_if<std::string>(&s)) {
                segs.push_back(*lit);
              } else {
                const auto &g = std::get<task::Gap>(s);
                segs.push_back({{"accepted", g.accepted}, {"policy", to_json(g.policy)}});
              }
            }
            return json{{"segments", segs}};
          },
          [](const task::Dictation &t) {
            return json{{"audio", to_json(t.audio)}, {"sampleSolution", t.sampleSolution}, {"policy", to_json(t.policy)}};
          },
          [](const task::MultipleChoice &t) {
            json j{{"question", t.question},
                   {"answers", t.answers},
                   {"correctAnswers", index_json(t.correctAnswers)},
                   {"multiSelect", t.multiSelect}};
            if(t.media) {
              j["media"] = to_json(*t.media);
            }
            return j;
          },
          [](const task::TextQuiz &t) {
            return json{{"question", t.question}, {"accepted", t.accepted}, {"policy", to_json(t.policy)}};
          },
          [](const task::Crossword &t) {
            auto cells = json::array();
            for(const auto &c : t.cells) {
              cells.push_back({{"row", c.row}, {"col", c.col}, {"letter", c.letter}});
            }
            auto entries = json::array();
            for(const auto &e : t.entries) {
              entries.push_back({{"clue", e.clue},
                                 {"direction", e.direction == task::Direction::Across ? "across" : "down"},
                                 {"row", e.startRow},
                                 {"col", e.startCol},
                                 {"length", e.length}});
            }
            auto sol = json::array();
            for(const auto &p : t.solutionCells) {
              sol.push_back({{"row", p.row}, {"col", p.col}});
            }
            return json{{"cells", cells}, {"entries", entries}, {"solutionCells", sol}};
          },
          [](const task::DropDownList &t) {
            auto segs = json::array();
            for(const auto &s : t.segments) {
              if(const auto *lit = std::get_if<std::string>(&s)) {
                segs.push_back(*lit);
              } else {
                const auto &c = std::get<task::Choice>(s);
                segs.push_back({{"options", c.options}, {"correctIndex", c.correctIndex}});
              }
            }
            return json{{"segments", segs}};
          },
          [](const task::Memory &t) { return json{{"cards", items_json(t.cards)}, {"pairing", t.pairing}}; },
          [](const task::TextSelection &t) {
            return json{{"tokens", t.tokens}, {"correctTokens", index_json(t.correctTokens)}};
          },
          [](const task::MediaOverlay &t) {
            auto clips = json::array();
            for(const auto &c : t.clips) {
              json cj{{"fragment", c.textFragmentId}, {"begin", c.clipBegin}, {"end", c.clipEnd}};
              if(c.text) {
                cj["text"] = *c.text;
              }
              clips.push_back(cj);
            }
            return json{{"audio", to_json(t.audio)}, {"clips", clips}};
          },
      },
      task);
}

TaskSpec task_from_json(ExerciseKind kind, const json &v, const std::string &path) {
  Fields f(v, path);
  auto task = read_task(kind, f);
  f.finish();
  return task;
}

json to_json(const ExerciseDefinition &def) {
  json j{{"id", def.id}, {"kind", kind_name(def.kind)}};
  if(def.uiLanguage) {
    j["uiLanguage"] = *def.uiLanguage;
  }
  if(def.meta.cefrLevel || !def.meta.competences.empty() || def.meta.category) {
    json meta = json::object();
    if(def.meta.cefrLevel) {
      meta["cefrLevel"] = cefr_name(*def.meta.cefrLevel);
    }
    if(!def.meta.competences.empty()) {
      auto comps = json::array();
      for(auto c : def.meta.competences) {
        comps.push_back(competence_name(c));
      }
      meta["competences"] = comps;
    }
    if(def.meta.category) {
      meta["category"] = category_name(*def.meta.category);
    }
    j["meta"] = meta;
  }
  auto tasks = json::array();
  for(const auto &t : def.tasks) {
    tasks.push_back(to_json(t));
  }
  j["tasks"] = tasks;
  return j;
}

ExerciseDefinition definition_from_json(const json &v, const std::string &path) {
  Fields f(v, path);
  ExerciseDefinition def;
  def.id = f.string("id");
  const auto kindName = f.string("kind");
  const auto kind = kind_from_name(kindName);
  if(!kind) {
    schema_error(f.child("kind"), fmt::format("unknown exercise kind '{}'", kindName));
  }
  def.kind = *kind;
  def.uiLanguage = f.optional_string("uiLanguage");
  if(const auto *m = f.optional("meta")) {
    Fields mf(*m, f.child("meta"));
    if(auto level = mf.optional_string("cefrLevel")) {
      def.meta.cefrLevel = cefr_from_name(*level);
      if(!def.meta.cefrLevel) {
        schema_error(mf.child("cefrLevel"), fmt::format("unknown CEFR level '{}'", *level));
      }
    }
    if(const auto *comps = mf.optional("competences")) {
      for(const auto &name : strings(*comps, mf.child("competences"))) {
        const auto c = competence_from_name(name);
        if(!c) {
          schema_error(mf.child("competences"), fmt::format("unknown competence '{}'", name));
        }
        def.meta.competences.insert(*c);
      }
    }
    if(auto cat = mf.optional_string("category")) {
      def.meta.category = category_from_name(*cat);
      if(!def.meta.category) {
        schema_error(mf.child("category"), fmt::format("unknown category '{}'", *cat));
      }
    }
    mf.finish();
  }
  const auto &tasks = array_at(f.required("tasks"), f.child("tasks"));
  for(std::size_t i = 0; i < tasks.size(); ++i) {
    def.tasks.push_back(task_from_json(def.kind, tasks[i], at(f.child("tasks"), i)));
  }
  f.finish();
  return def;
}

json to_json(const Response &response) {
  auto idx = [](std::size_t i) { return json(i); };
  auto str = [](const std::string &s) { return json(s); };
  json j{{"kind", kind_name(kind_of(response))}};
  std::visit(overloaded{
                 [&](const response::PairAssignment &r) { j["slots"] = nullable_json(r.slots, idx); },
                 [&](const response::GroupAssignment &r) { j["groups"] = nullable_json(r.groups, idx); },
                 [&](const response::OrderAssignment &r) { j["order"] = nullable_json(r.order, idx); },
                 [&](const response::DragDropImage &r) {
                   j["drops"] = nullable_json(r.drops, [](const Point &p) { return json{{"x", p.x}, {"y", p.y}}; });
                 },
                 [&](const response::Cloze &r) { j["gaps"] = nullable_json(r.gaps, str); },
                 [&](const response::Dictation &r) { j["text"] = r.text ? json(*r.text) : json(nullptr); },
                 [&](const response::MultipleChoice &r) { j["selected"] = index_json(r.selected); },
                 [&](const response::TextQuiz &r) { j["text"] = r.text ? json(*r.text) : json(nullptr); },
                 [&](const response::Crossword &r) { j["letters"] = nullable_json(r.letters, str); },
                 [&](const response::DropDownList &r) { j["choices"] = nullable_json(r.choices, idx); },
                 [&](const response::Memory &r) {
                   auto arr = json::array();
                   for(const auto &[a, b] : r.matches) {
                     arr.push_back(json::array({a, b}));
                   }
                   j["matches"] = arr;
                 },
                 [&](const response::TextSelection &r) { j["selected"] = index_json(r.selected); },
             },
             response);
  return j;
}

Response response_from_json(const json &v, const std::string &path) {
  Fields f(v, path);
  const auto name = f.string("kind");
  const auto kind = kind_from_name(name);
  if(!kind || *kind == ExerciseKind::MediaOverlay) {
    schema_error(f.child("kind"), fmt::format("no response exists for kind '{}'", name));
  }
  auto index_of = [](const json &x, const std::string &p) { return as_index(x, p); };
  auto string_of = [](const json &x, const std::string &p) { return as_string(x, p); };
  auto text = [&]() -> std::optional<std::string> { return f.optional_string("text"); };
  Response out;
  switch(*kind) {
  case ExerciseKind::PairAssignment:
    out = response::PairAssignment{nullable_list<std::size_t>(f.required("slots"), f.child("slots"), index_of)};
    break;
  case ExerciseKind::GroupAssignment:
    out = response::GroupAssignment{nullable_list<std::size_t>(f.required("groups"), f.child("groups"), index_of)};
    break;
  case ExerciseKind::OrderAssignment:
    out = response::OrderAssignment{nullable_list<std::size_t>(f.required("order"), f.child("order"), index_of)};
    break;
  case ExerciseKind::DragDropImage:
    out = response::DragDropImage{nullable_list<Point>(f.required("drops"), f.child("drops"), [](const json &x, const std::string &p) {
      Fields pf(x, p);
      Point pt{pf.number("x"), pf.number("y")};
      pf.finish();
      return pt;
    })};
    break;
  case ExerciseKind::Cloze:
    out = response::Cloze{nullable_list<std::string>(f.required("gaps"), f.child("gaps"), string_of)};
    break;
  case ExerciseKind::Dictation: out = response::Dictation{text()}; break;
  case ExerciseKind::MultipleChoice:
    out = response::MultipleChoice{index_set(f.required("selected"), f.child("selected"))};
    break;
  case ExerciseKind::TextQuiz: out = response::TextQuiz{text()}; break;
  case ExerciseKind::Crossword:
    out = response::Crossword{nullable_list<std::string>(f.required("letters"), f.child("letters"), string_of)};
    break;
  case ExerciseKind::DropDownList:
    out = response::DropDownList{nullable_list<std::size_t>(f.required("choices"), f.child("choices"), index_of)};
    break;
  case ExerciseKind::Memory: {
    response::Memory m;
    const auto &arr = array_at(f.required("matches"), f.child("matches"));
    for(std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at(f.child("matches"), i);
      if(!arr[i].is_array() || arr[i].size() != 2) {
        schema_error(p, "expected a pair of card indices");
      }
      m.matches.emplace_back(as_index(arr[i][0], p), as_index(arr[i][1], p));
    }
    out = std::move(m);
    break;
  }
  case ExerciseKind::TextSelection:
    out = response::TextSelection{index_set(f.required("selected"), f.child("selected"))};
    break;
  case ExerciseKind::MediaOverlay: break;
  }
  f.finish();
  return out;
}

json to_json(const GradeResult &result) {
  auto items = json::array();
  for(auto v : result.perItem) {
    items.push_back(verdict_name(v));
  }
  json j{{"correct", result.correct},
         {"score", {{"num", result.score.num()}, {"den", result.score.den()}}},
         {"perItem", items}};
  if(result.sampleSolution) {
    j["sampleSolution"] = *result.sampleSolution;
  }
  return j;
}

GradeResult grade_result_from_json(const json &v, const std::string &path) {
  Fields f(v, path);
  GradeResult r;
  r.correct = f.boolean("correct", false);
  Fields sf(f.required("score"), f.child("score"));
  const auto num = static_cast<std::int64_t>(sf.index("num"));
  const auto den = static_cast<std::int64_t>(sf.index("den"));
  sf.finish();
  if(den == 0 || num > den) {
    schema_error(f.child("score"), "score must be a fraction in [0,1]");
  }
  r.score = Score(num, den);
  for(const auto &name : strings(f.required("perItem"), f.child("perItem"))) {
    if(name == "correct") {
      r.perItem.push_back(ItemVerdict::Correct);
    } else if(name == "incorrect") {
      r.perItem.push_back(ItemVerdict::Incorrect);
    } else if(name == "unanswered") {
      r.perItem.push_back(ItemVerdict::Unanswered);
    } else {
      schema_error(f.child("perItem"), fmt::format("unknown verdict '{}'", name));
    }
  }
  r.sampleSolution = f.optional_string("sampleSolution");
  f.finish();
  return r;
}

} // namespace exbook::ingest
