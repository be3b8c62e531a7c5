#include <exbook/model/normalize.hpp>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace exbook::model {

namespace {

const icu::Normalizer2 &nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const auto *n = icu::Normalizer2::getNFCInstance(status);
  if(U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *n;
}

const icu::Normalizer2 &nfd() {
  UErrorCode status = U_ZERO_ERROR;
  const auto *n = icu::Normalizer2::getNFDInstance(status);
  if(U_FAILURE(status)) {
    throw std::runtime_error("ICU NFD normalizer unavailable");
  }
  return *n;
}

icu::UnicodeString apply(const icu::Normalizer2 &n, const icu::UnicodeString &s) {
  UErrorCode status = U_ZERO_ERROR;
  auto out = n.normalize(s, status);
  if(U_FAILURE(status)) {
    throw std::runtime_error("ICU normalization failed");
  }
  return out;
}

bool is_mark(UChar32 c) {
  return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

icu::UnicodeString strip_marks(const icu::UnicodeString &s) {
  const auto decomposed = apply(nfd(), s);
  icu::UnicodeString out;
  for(int32_t i = 0; i < decomposed.length();) {
    const UChar32 c = decomposed.char32At(i);
    if(!is_mark(c)) {
      out.append(c);
    }
    i += U16_LENGTH(c);
  }
  return out;
}

icu::UnicodeString collapse(const icu::UnicodeString &s) {
  icu::UnicodeString out;
  bool pending_space = false;
  for(int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    i += U16_LENGTH(c);
    if(u_isUWhiteSpace(c)) {
      pending_space = !out.isEmpty();
      continue;
    }
    if(pending_space) {
      out.append(UChar32{0x20});
      pending_space = false;
    }
    out.append(c);
  }
  return out;
}

std::string to_utf8(const icu::UnicodeString &s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

icu::UnicodeString once(const icu::UnicodeString &in, const NormalizationPolicy &policy) {
  auto s = apply(nfc(), in);
  if(!policy.caseSensitive) {
    s.foldCase(U_FOLD_CASE_DEFAULT);
  }
  if(!policy.diacriticSensitive) {
    s = strip_marks(s);
  }
  if(!policy.caseSensitive || !policy.diacriticSensitive) {
    s = apply(nfc(), s);
  }
  if(policy.collapseWhitespace) {
    s = collapse(s);
  }
  return s;
}

} // namespace

std::string normalize_text(std::string_view text, const NormalizationPolicy &policy) {
  const auto input = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  // A fold can expose a character the next pass folds again; iterate to the fixpoint.
  auto current = once(input, policy);
  for(int round = 0; round < 4; ++round) {
    auto next = once(current, policy);
    if(next == current) {
      break;
    }
    current = std::move(next);
  }
  return to_utf8(current);
}

bool matches_any(std::string_view typed, const std::vector<std::string> &accepted,
                 const NormalizationPolicy &policy) {
  const auto lhs = normalize_text(typed, policy);
  for(const auto &a : accepted) {
    if(normalize_text(a, policy) == lhs) {
      return true;
    }
  }
  return false;
}

std::size_t composed_length(std::string_view text) {
  const auto input = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  const auto composed = apply(nfc(), input);
  return static_cast<std::size_t>(composed.countChar32());
}

} // namespace exbook::model
