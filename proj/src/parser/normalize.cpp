#include "lnd/parser/normalize.hpp"

#include <cctype>
#include <optional>

namespace lnd {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Reads a balanced {...} group starting at text[pos] == '{'. Returns the
// inner text and advances pos past the closing brace.
std::optional<std::string_view> brace_group(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '{') return std::nullopt;
  int depth = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}' && --depth == 0) {
      std::string_view inner = text.substr(pos + 1, i - pos - 1);
      pos = i + 1;
      return inner;
    }
  }
  return std::nullopt;
}

class Normalizer {
 public:
  explicit Normalizer(std::string_view text, std::size_t base = 0) : in_(text), base_(base) {}

  Normalized run() {
    while (i_ < in_.size()) {
      if (try_frac()) continue;
      const char c = in_[i_];
      if (c == '^' && i_ + 1 < in_.size() && in_[i_ + 1] == '{') {
        if (try_brace_exponent()) continue;
      }
      if (is_letter(c) && i_ + 1 < in_.size() && is_digit(in_[i_ + 1]) &&
          (i_ == 0 || in_[i_ - 1] != '\\')) {
        const std::size_t start = i_;
        std::size_t j = i_ + 1;
        while (j < in_.size() && is_digit(in_[j])) ++j;
        std::string replacement = std::string(1, c) + "^" + std::string(in_.substr(i_ + 1, j - i_ - 1));
        warn("bare-exponent", start, in_.substr(start, j - start), replacement);
        out_ += replacement;
        i_ = j;
        continue;
      }
      if (is_space(c)) {
        while (i_ < in_.size() && is_space(in_[i_])) ++i_;
        if (!out_.empty() && out_.back() != ' ') out_ += ' ';
        continue;
      }
      out_ += c;
      ++i_;
    }
    while (!out_.empty() && out_.back() == ' ') out_.pop_back();
    return Normalized{std::move(out_), std::move(warnings_)};
  }

 private:
  void warn(std::string rule, std::size_t at, std::string_view original, std::string replacement) {
    warnings_.push_back(
        NormalizationWarning{std::move(rule), base_ + at, std::string(original), std::move(replacement)});
  }

  bool try_frac() {
    std::size_t j = i_;
    for (std::string_view cmd : {std::string_view("\\dfrac"), std::string_view("\\frac")}) {
      if (in_.substr(i_, cmd.size()) == cmd) {
        j = i_ + cmd.size();
        break;
      }
    }
    if (j == i_) return false;
    const std::size_t start = i_;
    const std::size_t num_pos = j + 1;
    auto num = brace_group(in_, j);
    if (!num) return false;
    auto den = brace_group(in_, j);
    if (!den) return false;

    // Normalize the numerator on its own so nested rewrites are reported.
    Normalized inner = Normalizer(*num, base_ + num_pos).run();
    for (auto& w : inner.warnings) warnings_.push_back(std::move(w));
    const std::string_view a = trim(inner.text);
    const std::string_view b = trim(*den);

    std::size_t k = 0;
    while (k < a.size() && is_digit(a[k])) ++k;
    const std::string_view coeff = a.substr(0, k);
    const std::string_view rest = trim(a.substr(k));
    const bool single_term = !a.empty() && rest.find_first_of("+-()/\\{}") == std::string_view::npos &&
                             (coeff.empty() || rest.empty() || is_letter(rest.front()));
    const bool simple_den = !b.empty() && b.find_first_not_of("0123456789") == std::string_view::npos;

    std::string replacement;
    if (single_term && simple_den) {
      replacement = std::string(coeff.empty() ? "1" : coeff) + "/" + std::string(b);
      for (char c : rest)
        if (!is_space(c)) replacement += c;
      warn("frac", start, in_.substr(start, j - start), replacement);
    } else {
      replacement = "(" + std::string(a) + ")/" + std::string(b);
      warn("frac-unsupported", start, in_.substr(start, j - start), replacement);
    }
    // Keep a coefficient from fusing with a preceding letter ("x1/2").
    if (!out_.empty() && is_letter(out_.back())) out_ += ' ';
    out_ += replacement;
    i_ = j;
    return true;
  }

  bool try_brace_exponent() {
    // in_[i_] == '^', in_[i_ + 1] == '{'
    std::size_t j = i_ + 2;
    while (j < in_.size() && is_space(in_[j])) ++j;
    const std::size_t digits_start = j;
    while (j < in_.size() && is_digit(in_[j])) ++j;
    if (j == digits_start) return false;
    const std::string digits(in_.substr(digits_start, j - digits_start));
    std::size_t end = j;
    while (end < in_.size() && is_space(in_[end])) ++end;
    std::string rule = "brace-exponent";
    if (end < in_.size() && in_[end] == '}') {
      ++end;
    } else {
      rule = "unterminated-brace-exponent";
      end = j;
    }
    std::string replacement = "^" + digits;
    warn(rule, i_, in_.substr(i_, end - i_), replacement);
    out_ += replacement;
    i_ = end;
    return true;
  }

  std::string_view in_;
  std::size_t base_;
  std::size_t i_ = 0;
  std::string out_;
  std::vector<NormalizationWarning> warnings_;
};

}  // namespace

Normalized normalize_appendix(std::string_view text) { return Normalizer(text).run(); }

std::string to_string(const NormalizationWarning& w) {
  return w.rule + " @" + std::to_string(w.position) + ": '" + w.original + "' -> '" +
         w.replacement + "'";
}

}  // namespace lnd
