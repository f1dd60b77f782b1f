#include "lnd/cases/printed_forms.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "lnd/parser/printer.hpp"

namespace lnd {

namespace {

struct Keyed {
  std::optional<Monomial> key;  // empty sorts first
  ErrataEntry entry;
};

std::string term_or_zero(const VarSet& vars, const Monomial& m, const BigRational& c) {
  if (c.is_zero()) return "0";
  return print_term(vars, Term{m, c});
}

void diff_terms(const Polynomial& printed, const Polynomial& computed, const std::string& location,
                std::vector<Keyed>& out) {
  const VarSet& vars = printed.varset();
  auto a = printed.terms();
  auto b = computed.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const bool take_a = j == b.size() || (i < a.size() && !GrlexDescending{}(b[j].mono, a[i].mono));
    const bool take_b = i == a.size() || (j < b.size() && !GrlexDescending{}(a[i].mono, b[j].mono));
    const Monomial m = take_a ? a[i].mono : b[j].mono;
    const BigRational pc = take_a ? a[i].coeff : BigRational(0);
    const BigRational cc = take_b ? b[j].coeff : BigRational(0);
    if (take_a) ++i;
    if (take_b) ++j;
    if (pc == cc) continue;
    std::string note = pc.is_zero()   ? "term missing from printed expansion"
                       : cc.is_zero() ? "printed term absent from computed expansion"
                                      : "coefficient differs";
    out.push_back(Keyed{m, ErrataEntry{location, term_or_zero(vars, m, pc), term_or_zero(vars, m, cc),
                                       std::move(note)}});
  }
}

// Splits p by the exponent of `var`: exponent -> terms with that exponent.
std::map<std::uint32_t, Polynomial> group_by_power(const Polynomial& p, std::size_t var) {
  std::map<std::uint32_t, std::vector<Term>> groups;
  for (const Term& t : p.terms()) groups[t.mono[var]].push_back(t);
  std::map<std::uint32_t, Polynomial> out;
  for (auto& [e, terms] : groups) out.emplace(e, Polynomial::from_terms(p.varset(), std::move(terms)));
  return out;
}

void diff_closed_form(const PaperInstance& inst, const Polynomial& printed, char generator,
                      const std::string& location, std::vector<Keyed>& out) {
  const VarSet vars = printed_varset();
  const std::size_t s_index = vars.index('s');
  const Polynomial computed = dixmier_closed_form(inst.D, Polynomial::variable(VarSet::standard(), generator),
                                                  vars, 's');
  auto printed_groups = group_by_power(printed, s_index);
  auto computed_groups = group_by_power(computed, s_index);
  std::vector<std::uint32_t> powers;
  for (const auto& [e, _] : printed_groups) powers.push_back(e);
  for (const auto& [e, _] : computed_groups) powers.push_back(e);
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

  bool any = false;
  for (std::uint32_t e : powers) {
    const Polynomial zero(vars);
    const auto pi = printed_groups.find(e);
    const auto ci = computed_groups.find(e);
    const Polynomial& pg = pi == printed_groups.end() ? zero : pi->second;
    const Polynomial& cg = ci == computed_groups.end() ? zero : ci->second;
    if (pg == cg) continue;
    any = true;
    Monomial key;
    key[s_index] = e;
    out.push_back(Keyed{key, ErrataEntry{location, print_polynomial(pg), print_polynomial(cg),
                                         "coefficient of s^" + std::to_string(e) + " differs"}});
  }
  if (!any) {
    out.push_back(Keyed{std::nullopt, ErrataEntry{location, print_polynomial(printed),
                                                  print_polynomial(computed),
                                                  "closed form differs only after expanding s"}});
  }
}

}  // namespace

std::vector<ErrataEntry> compare_printed_forms(const PaperInstance& inst,
                                               const std::vector<SourceForm>& sources) {
  const VarSet vars = printed_varset();
  std::vector<Keyed> keyed;
  for (const SourceForm& src : sources) {
    const std::string& loc = src.provenance;
    if (src.error || !src.poly) {
      const std::string what = src.error ? src.error->what() : "no polynomial";
      keyed.push_back(Keyed{std::nullopt, ErrataEntry{loc, src.error ? "'" + src.error->fragment() + "'" : "",
                                                      "(not compared)", "unparseable source: " + what}});
      continue;
    }
    const std::optional<Polynomial> target = computed_target(inst, src.target);
    if (!target) {
      keyed.push_back(Keyed{std::nullopt, ErrataEntry{loc, print_polynomial(*src.poly), "(none)",
                                                      "no computed counterpart for target '" +
                                                          src.target + "'"}});
      continue;
    }
    const Polynomial computed = change_varset(*target, vars);
    const Polynomial& printed = *src.poly;
    const bool closed_form = src.target != "s" && printed.degree_in('s') > 0;
    if (!closed_form) {
      diff_terms(printed, computed, loc, keyed);
      continue;
    }
    const Polynomial expanded = substitute(printed, {{'s', change_varset(inst.s, vars)}});
    if (expanded == computed) continue;
    diff_closed_form(inst, printed, src.target[4], loc, keyed);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.entry.location != b.entry.location) return a.entry.location < b.entry.location;
    if (!a.key || !b.key) return !a.key && b.key;
    return GrlexDescending{}(*a.key, *b.key);
  });
  std::vector<ErrataEntry> out;
  out.reserve(keyed.size());
  for (Keyed& k : keyed) out.push_back(std::move(k.entry));
  return out;
}

std::vector<SourceForm> load_source_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<SourceForm> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(load_source_file(p));
  return out;
}

}  // namespace lnd
