#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mustvqa {

// Failure categories surfaced by the library. Each maps to one named error
// condition of the module contracts; tests match on the code, not the text.
enum class Errc {
  missing_image,
  malformed_box,
  empty_answers,
  malformed_record,
  backend_unavailable,
  cache_corrupt,
  overlapping_language_sets,
  empty_partition,
  empty_corpus,
  id_out_of_range,
  shape_mismatch,
  empty_ground_truth,
  unknown_language,
  iter_out_of_range,
  divergence_detected,
  vocab_mismatch,
  io_error,
  bad_config,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// --- UTF-8 <-> codepoint helpers -------------------------------------------

// Decodes UTF-8 into codepoints. Invalid bytes decode to U+FFFD, one
// replacement per offending byte, so the function is total.
std::vector<char32_t> utf8_decode(std::string_view s);

std::string utf8_encode(const std::vector<char32_t>& cps);
void utf8_append(std::string& out, char32_t cp);

// Splits text into whitespace-delimited words (ASCII whitespace).
std::vector<std::string> split_words(std::string_view text);

std::vector<std::string> split_on(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string trim(std::string_view s);

// FNV-1a, used to derive per-name parameter seeds.
std::uint64_t fnv1a64(std::string_view s);

}  // namespace mustvqa
