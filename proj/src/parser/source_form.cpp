#include "lnd/parser/source_form.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lnd {

namespace {

struct FileContents {
  std::map<std::string, std::string> headers;
  std::vector<std::string> warning_lines;
  std::string body;
};

std::string strip(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

FileContents read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  FileContents fc;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = strip(line);
    if (trimmed.starts_with('#')) {
      const std::string content = strip(trimmed.substr(1));
      const auto colon = content.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = strip(content.substr(0, colon));
      const std::string value = strip(content.substr(colon + 1));
      if (key == "normalization-warning")
        fc.warning_lines.push_back(value);
      else
        fc.headers.emplace(key, value);
      continue;
    }
    if (trimmed.empty()) continue;
    if (!fc.body.empty()) fc.body += ' ';
    fc.body += trimmed;
  }
  return fc;
}

std::string target_from_name(const std::filesystem::path& path) {
  const std::string stem = path.stem().string();
  if (stem.starts_with("phi_") && stem.size() >= 5) return stem.substr(0, 5);
  if (stem == "s" || stem.starts_with("s_")) return "s";
  return stem;
}

}  // namespace

VarSet printed_varset() {
  static const VarSet kPrinted("tuxyzs");
  return kPrinted;
}

SourceForm make_source_form(std::string raw, std::string provenance, std::string target) {
  SourceForm form;
  Normalized n = normalize_appendix(raw);
  form.raw = std::move(raw);
  form.normalized = std::move(n.text);
  form.warnings = std::move(n.warnings);
  form.provenance = std::move(provenance);
  form.target = std::move(target);
  try {
    form.poly = parse_polynomial(form.normalized, printed_varset());
  } catch (const ParseError& e) {
    form.error = e;
  } catch (const UnknownVariable& e) {
    const std::size_t pos = e.position() == UnknownVariable::npos ? 0 : e.position();
    form.error = ParseError(pos, e.what(), form.normalized.substr(pos, 12));
  }
  return form;
}

SourceForm load_source_file(const std::filesystem::path& path) {
  FileContents fc = read_file(path);
  auto header = [&](const std::string& key, std::string fallback) {
    auto it = fc.headers.find(key);
    return it == fc.headers.end() ? fallback : it->second;
  };
  SourceForm form = make_source_form(fc.body, header("provenance", path.filename().string()),
                                     header("target", target_from_name(path)));
  // Committed data is already normalized; the recorded warnings describe the
  // rewrite from the raw source text.
  std::vector<NormalizationWarning> recorded;
  for (const std::string& w : fc.warning_lines)
    recorded.push_back(NormalizationWarning{"recorded", 0, w, ""});
  recorded.insert(recorded.end(), form.warnings.begin(), form.warnings.end());
  form.warnings = std::move(recorded);
  form.raw = header("raw", fc.body);
  return form;
}

std::string read_polynomial_file(const std::filesystem::path& path) { return read_file(path).body; }

}  // namespace lnd
