#pragma once

#include <exbook/ingest/exercise_document.hpp>

namespace exbook::ingest {

// Object-literal exercise files in the prototype's style:
//
//   var multiplechoiceInput = {
//     mc1: { task1: { question: "...", answers: "a;b;c", correctAnswers: "2",
//                     multiSelect: "false", multiMedia: { type: "video", file: "x" } } }
//   };
//
// Only multiple choice records can be expressed this way.
ParsedDocument parse_legacy_document(std::string_view bytes, const ParseOptions &options);

} // namespace exbook::ingest
