#include "numdup/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "numdup/duplication.hpp"
#include "numdup/format.hpp"
#include "numdup/verify.hpp"

namespace numdup::cli {

namespace {

using nlohmann::json;

constexpr int kLabelWidth = 19;


// Display width of UTF-8 text: one column per code point.
std::size_t columns(std::string_view text) {
  return static_cast<std::size_t>(std::count_if(
      text.begin(), text.end(),
      [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string padded(std::string text, std::size_t width) {
  std::size_t const used = columns(text);
  if (used < width) text.append(width - used, ' ');
  return text;
}

void row(std::ostream& out, std::string_view label, std::string_view value) {
  out << padded(std::string(label), kLabelWidth) << value << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

constexpr std::string_view kNotForNaturals = "n/a (S=N)";

// Runs `fn` unless S = N makes the quantity undefined.
template <typename Fn>
auto unless_naturals(NumericalSemigroup const& s, Fn&& fn)
    -> std::optional<decltype(fn())> {
  if (s.is_naturals()) return std::nullopt;
  return fn();
}

template <typename T, typename Show>
std::string show_or_na(std::optional<T> const& v, Show&& show) {
  return v ? show(*v) : std::string(kNotForNaturals);
}

template <typename T>
json json_or_null(std::optional<T> const& v) {
  return v ? json(*v) : json(nullptr);
}

struct DescriptorArgs {
  std::string gens;
  std::string gaps;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--gens", gens,
                              "comma-separated generators, e.g. 5,6,7,8,9");
    auto* p = cmd->add_option("--gaps", gaps,
                              "comma-separated gaps, e.g. 1,2,3,5,6,7");
    g->excludes(p);
  }

  NumericalSemigroup build() const {
    if (gens.empty() == gaps.empty()) {
      throw CLI::ValidationError("exactly one of --gens or --gaps is required");
    }
    try {
      return gens.empty()
                 ? SemigroupDescriptor::parse(DescriptorKind::Gaps, gaps)
                       .build()
                 : SemigroupDescriptor::parse(DescriptorKind::Generators, gens)
                       .build();
    } catch (ParseError const& e) {
      throw ParseError(std::string(gens.empty() ? "--gaps: " : "--gens: ") +
                           e.message(),
                       e.position());
    }
  }
};

std::vector<Int> parse_list_option(std::string const& name,
                                   std::string const& text) {
  try {
    return parse_int_list(text);
  } catch (ParseError const& e) {
    throw ParseError(name + ": " + e.message(), e.position());
  }
}

// ---------------------------------------------------------------- info

int cmd_info(NumericalSemigroup const& s, bool as_json, std::ostream& out) {
  auto const pf = unless_naturals(s, [&] { return pseudo_frobenius(s); });
  auto const mm = unless_naturals(s, [&] {
    RelativeIdeal const m = maximal_ideal(s);
    return difference(m, m);
  });
  auto const lower = unless_naturals(s, [&] { return dual(*mm); });
  auto const pseudo = unless_naturals(s, [&] { return is_pseudo_symmetric(s); });
  auto const almost = unless_naturals(s, [&] { return is_almost_symmetric(s); });
  RelativeIdeal const k = canonical_ideal(s);
  bool const symmetric = is_symmetric(s);
  std::optional<Int> t;
  if (pf) t = static_cast<Int>(pf->size());

  if (as_json) {
    json j = to_json(s);
    j["elements"] = s.small_elements();
    j["type"] = json_or_null(t);
    j["pf"] = json_or_null(pf);
    j["flags"] = {{"symmetric", symmetric},
                  {"pseudo_symmetric", json_or_null(pseudo)},
                  {"almost_symmetric", json_or_null(almost)}};
    j["canonical"] = to_json(k);
    j["m_minus_m"] = mm ? to_json(*mm) : json(nullptr);
    j["k_minus_m_minus_m"] = lower ? to_json(*lower) : json(nullptr);
    out << j.dump() << '\n';
    return kOk;
  }

  auto to_str = [](Int x) { return std::to_string(x); };
  auto ideal_str = [](RelativeIdeal const& e) { return notation(e); };
  auto flag_str = [](bool b) { return yes_no(b); };
  row(out, "semigroup", notation(s));
  std::string gens;
  for (Int g : s.min_generators()) {
    gens += (gens.empty() ? "" : ",") + std::to_string(g);
  }
  row(out, "generators", gens);
  row(out, "multiplicity", to_str(s.multiplicity()));
  row(out, "frobenius", to_str(s.frobenius()));
  row(out, "genus", to_str(s.genus()));
  row(out, "gaps", finite_notation(s.gaps()));
  row(out, "pseudo-frobenius", show_or_na(pf, finite_notation));
  row(out, "type", show_or_na(t, to_str));
  row(out, "K", notation(k));
  row(out, "M-M", show_or_na(mm, ideal_str));
  row(out, "K-(M-M)", show_or_na(lower, ideal_str));
  row(out, "symmetric", yes_no(symmetric));
  row(out, "pseudo-symmetric", show_or_na(pseudo, flag_str));
  row(out, "almost-symmetric", show_or_na(almost, flag_str));
  return kOk;
}

// ---------------------------------------------------------------- dup

std::string describe_verdict(AlmostSymmetricVerdict const& v) {
  switch (v.failed) {
    case AlmostSymmetricClause::None:
      return "holds";
    case AlmostSymmetricClause::LowerBound:
      return "fails: " + std::to_string(*v.witness) +
             " in K-(M-M) but not in E~";
    case AlmostSymmetricClause::UpperBound:
      return "fails: " + std::to_string(*v.witness) + " in E~ but not in K";
    case AlmostSymmetricClause::DualNotSemigroup:
      if (!v.witness_pair) return "fails: K-E~ is not a numerical semigroup";
      return "fails: K-E~ not closed, " +
             std::to_string(v.witness_pair->first) + "+" +
             std::to_string(v.witness_pair->second) + "=" +
             std::to_string(v.witness_pair->first + v.witness_pair->second) +
             " missing";
  }
  return "";
}

int cmd_n_tuplicate(NumericalSemigroup const& s, RelativeIdeal const& e,
                    Int b, Int n, bool as_json, std::ostream& out) {
  NumericalSemigroup const t = n_tuplicate(e, b, n);
  OracleInvariants const o = oracle_invariants(t);
  bool const one_over_n = quotient(t, n) == s;
  if (as_json) {
    json j = {{"schema", kJsonSchema}, {"S", to_json(s)}, {"ideal", to_json(e)},
              {"b", b}, {"n", n}, {"T", to_json(t)}};
    j["T"]["elements"] = t.small_elements();
    j["quotient_is_S"] = one_over_n;
    out << j.dump() << '\n';
    return kOk;
  }
  row(out, "S", notation(s));
  row(out, "E", notation(e));
  row(out, "b", std::to_string(b));
  row(out, "n", std::to_string(n));
  row(out, "T", notation(t));
  row(out, "frobenius", std::to_string(o.frobenius));
  row(out, "genus", std::to_string(o.genus));
  row(out, "T/n = S", yes_no(one_over_n));
  return kOk;
}

int cmd_duplicate(NumericalSemigroup const& s, std::vector<Int> const& gens,
                  Int b, Int n, bool relaxed, bool as_json,
                  std::ostream& out) {
  RelativeIdeal const e = ideal_generated_by(s, gens);
  if (n != 2) return cmd_n_tuplicate(s, e, b, n, as_json, out);

  DuplicationInput const in(e, b,
                            relaxed ? IdealMode::Relaxed : IdealMode::Strict);
  NumericalSemigroup const t = duplicate(in);
  OracleInvariants const o = oracle_invariants(t);
  bool const strict = !relaxed;
  std::optional<Int> f_formula;
  std::optional<Int> g_formula;
  if (strict) {
    f_formula = predicted_frobenius(in);
    g_formula = predicted_genus(in);
  }
  std::optional<Int> t_formula;
  std::optional<AlmostSymmetricVerdict> verdict;
  if (strict && !s.is_naturals()) {
    t_formula = predicted_type(e);
    verdict = is_almost_symmetric_duplication(e);
  }
  auto const witness = oracle_almost_symmetry_witness(t);

  if (as_json) {
    json j = {{"schema", kJsonSchema},
              {"S", to_json(s)},
              {"ideal", to_json(e)},
              {"b", b},
              {"n", 2},
              {"mode", strict ? "strict" : "relaxed"},
              {"T", to_json(t)}};
    j["T"]["elements"] = t.small_elements();
    j["frobenius"] = {{"predicted", json_or_null(f_formula)},
                      {"oracle", o.frobenius}};
    j["genus"] = {{"predicted", json_or_null(g_formula)},
                  {"oracle", o.genus}};
    j["type"] = {{"predicted", json_or_null(t_formula)}, {"oracle", o.type}};
    j["pf"] = o.pseudo_frobenius;
    j["flags"] = {{"symmetric", o.symmetric},
                  {"almost_symmetric", o.almost_symmetric}};
    if (verdict) {
      j["characterization"] = {{"holds", verdict->holds},
                               {"normalized", to_json(verdict->normalized)},
                               {"dual", to_json(verdict->dual)},
                               {"detail", describe_verdict(*verdict)}};
    } else {
      j["characterization"] = nullptr;
    }
    j["witness"] = witness ? json({{"k", (*witness)[0]},
                                   {"s", (*witness)[1]},
                                   {"sum", (*witness)[0] + (*witness)[1]}})
                           : json(nullptr);
    out << j.dump() << '\n';
    return kOk;
  }

  auto with_formula = [](Int oracle, std::optional<Int> const& formula) {
    std::string text = std::to_string(oracle);
    if (formula) text += " (formula " + std::to_string(*formula) + ")";
    return text;
  };
  row(out, "S", notation(s));
  row(out, "E", notation(e));
  row(out, "b", std::to_string(b));
  row(out, "T", notation(t));
  row(out, "frobenius", with_formula(o.frobenius, f_formula));
  row(out, "genus", with_formula(o.genus, g_formula));
  row(out, "type", with_formula(o.type, t_formula));
  row(out, "pseudo-frobenius", finite_notation(o.pseudo_frobenius));
  row(out, "symmetric", yes_no(o.symmetric));
  row(out, "almost-symmetric", yes_no(o.almost_symmetric));
  if (verdict) {
    row(out, "E~", notation(verdict->normalized));
    row(out, "K-E~", notation(verdict->dual));
    row(out, "characterization", describe_verdict(*verdict));
  }
  if (witness) {
    Int const k = (*witness)[0];
    Int const m = (*witness)[1];
    row(out, "witness", std::to_string(k) + " in K(T), " + std::to_string(m) +
                            " in M(T), " + std::to_string(k + m) +
                            " not in M(T)");
  }
  return kOk;
}

// ---------------------------------------------------------------- admissible

int cmd_admissible(NumericalSemigroup const& s, bool as_json,
                   std::ostream& out) {
  std::vector<AdmissibleIdeal> const rows = enumerate_admissible(s);
  RelativeIdeal const m = maximal_ideal(s);
  RelativeIdeal const k = canonical_ideal(s);
  RelativeIdeal const lower = dual(difference(m, m));
  if (as_json) {
    json list = json::array();
    for (AdmissibleIdeal const& a : rows) {
      list.push_back({{"normalized", to_json(a.normalized)},
                      {"dual", to_json(a.dual)},
                      {"semigroup", a.dual_is_semigroup},
                      {"type", json_or_null(a.type)}});
    }
    out << json({{"schema", kJsonSchema},
                 {"canonical", to_json(k)},
                 {"lower", to_json(lower)},
                 {"rows", list}})
               .dump()
        << '\n';
    return kOk;
  }
  row(out, "K", notation(k));
  row(out, "K-(M-M)", notation(lower));
  std::size_t w1 = 2;
  std::size_t w2 = 4;
  for (AdmissibleIdeal const& a : rows) {
    w1 = std::max(w1, columns(notation(a.normalized)));
    w2 = std::max(w2, columns(notation(a.dual)));
  }
  out << padded("#", 4) << padded("E~", w1 + 2) << padded("K-E~", w2 + 2)
      << padded("n.s.", 6) << "type\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    AdmissibleIdeal const& a = rows[i];
    out << padded(std::to_string(i + 1), 4)
        << padded(notation(a.normalized), w1 + 2)
        << padded(notation(a.dual), w2 + 2)
        << padded(yes_no(a.dual_is_semigroup), 6)
        << (a.type ? std::to_string(*a.type) : "-") << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- construct

int cmd_construct(NumericalSemigroup const& s, Int x, Int count, bool as_json,
                  std::ostream& out) {
  if (count < 1) {
    throw Error(ErrorCode::InvalidArgument, "--count must be at least 1");
  }
  RelativeIdeal const normalized = prescribed_type_normalized(s, x);
  std::vector<RelativeIdeal> const family =
      construct_prescribed_family(s, x, count);
  if (as_json) {
    json list = json::array();
    for (RelativeIdeal const& e : family) {
      list.push_back({{"shift", e.min() - normalized.min()},
                      {"ideal", to_json(e)}});
    }
    out << json({{"schema", kJsonSchema},
                 {"type", x},
                 {"normalized", to_json(normalized)},
                 {"dual", to_json(dual(normalized))},
                 {"ideals", list}})
               .dump()
        << '\n';
    return kOk;
  }
  row(out, "type", std::to_string(x));
  row(out, "E~", notation(normalized));
  row(out, "K-E~", notation(dual(normalized)));
  for (RelativeIdeal const& e : family) {
    row(out, "E (shift " + std::to_string(e.min() - normalized.min()) + ")",
        notation(e));
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(VerifyOptions const& opts, bool as_json, std::ostream& out) {
  std::vector<VerificationReport> const reports = verify_all(opts);
  auto const tally = summarize(reports);
  Int const failures = count_failures(reports);
  if (as_json) {
    for (VerificationReport const& r : reports) out << to_json(r).dump() << '\n';
    json summary = json::object();
    for (auto const& [name, t] : tally) {
      summary[name] = {{"passed", t.passed}, {"failed", t.failed}};
    }
    out << json({{"schema", kJsonSchema},
                 {"summary", summary},
                 {"reports", reports.size()},
                 {"failures", failures}})
               .dump()
        << '\n';
  } else {
    row(out, "reports", std::to_string(reports.size()));
    std::size_t width = 5;
    for (auto const& [name, t] : tally) width = std::max(width, name.size());
    out << std::left << std::setw(static_cast<int>(width + 2)) << "check"
        << std::setw(8) << "passed" << "failed\n";
    for (auto const& [name, t] : tally) {
      out << std::left << std::setw(static_cast<int>(width + 2)) << name
          << std::setw(8) << t.passed << t.failed << '\n';
    }
    int shown = 0;
    for (VerificationReport const& r : reports) {
      if (r.passed() || shown == 10) continue;
      ++shown;
      out << "FAIL " << to_json(r).dump() << '\n';
    }
    row(out, "failures", std::to_string(failures));
  }
  return failures == 0 ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- quotient

int cmd_quotient(NumericalSemigroup const& s, Int n, bool as_json,
                 std::ostream& out) {
  NumericalSemigroup const q = quotient(s, n);
  if (as_json) {
    json j = {{"schema", kJsonSchema}, {"n", n}, {"quotient", to_json(q)}};
    j["quotient"]["elements"] = q.small_elements();
    out << j.dump() << '\n';
    return kOk;
  }
  row(out, "S", notation(s));
  row(out, "n", std::to_string(n));
  row(out, "S/n", notation(q));
  row(out, "frobenius", std::to_string(q.frobenius()));
  row(out, "genus", std::to_string(q.genus()));
  return kOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numerical semigroups, relative ideals and numerical "
               "duplication",
               "numdup"};
  app.require_subcommand(1);
  bool as_json = false;

  DescriptorArgs info_desc;
  auto* info = app.add_subcommand("info", "invariants of a semigroup");
  info_desc.attach(info);
  info->add_flag("--json", as_json, "machine-readable output");

  DescriptorArgs dup_desc;
  std::string ideal_gens;
  Int b = 0;
  Int n = 2;
  bool relaxed = false;
  auto* dup = app.add_subcommand("dup", "numerical duplication S x_b E");
  dup_desc.attach(dup);
  dup->add_option("--ideal", ideal_gens, "generators of E as an ideal of S")
      ->required();
  dup->add_option("--b", b, "odd element of S")->required();
  dup->add_option("--n", n, "build the n-tuplication instead")
      ->check(CLI::Range(Int{2}, Int{64}));
  dup->add_flag("--relaxed", relaxed,
                "accept a relative ideal E with b + E + E inside S");
  dup->add_flag("--json", as_json, "machine-readable output");

  DescriptorArgs adm_desc;
  auto* adm = app.add_subcommand(
      "admissible", "ideals E~ between K-(M-M) and K with their duals");
  adm_desc.attach(adm);
  adm->add_flag("--json", as_json, "machine-readable output");

  DescriptorArgs con_desc;
  Int wanted_type = 1;
  Int count = 3;
  auto* con = app.add_subcommand(
      "construct", "ideals whose duplication is almost symmetric of a given "
                   "odd type");
  con_desc.attach(con);
  con->add_option("--type", wanted_type, "odd type in [1, 2t(S)+1]")
      ->required();
  con->add_option("--count", count, "number of shift-distinct ideals");
  con->add_flag("--json", as_json, "machine-readable output");

  VerifyOptions vopts;
  bool mutant = false;
  auto* ver = app.add_subcommand(
      "verify", "exhaustive check of every formula against brute force");
  ver->add_option("--max-genus", vopts.max_genus, "largest genus swept")
      ->check(CLI::Range(Int{0}, Int{12}));
  ver->add_option("--ideal-cap", vopts.ideal_cap,
                  "largest candidate-ideal count per semigroup");
  ver->add_option("--b-count", vopts.b_count,
                  "number of smallest odd b tried per ideal")
      ->check(CLI::PositiveNumber);
  ver->add_option("--workers", vopts.workers, "worker threads, 0 = auto");
  ver->add_flag("--json", as_json, "JSON lines: one report each, then summary");
  ver->add_flag("--inject-mutant", mutant,
                "self-test: disable the S-stability filter of the ideal "
                "enumeration");

  DescriptorArgs quo_desc;
  Int divisor = 2;
  auto* quo = app.add_subcommand("quotient", "S/n = {x : n x in S}");
  quo_desc.attach(quo);
  quo->add_option("--n", divisor, "divisor")->check(CLI::PositiveNumber);
  quo->add_flag("--json", as_json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(info_desc.build(), as_json, out);
    if (dup->parsed()) {
      return cmd_duplicate(dup_desc.build(),
                           parse_list_option("--ideal", ideal_gens), b, n,
                           relaxed, as_json, out);
    }
    if (adm->parsed()) return cmd_admissible(adm_desc.build(), as_json, out);
    if (con->parsed()) {
      return cmd_construct(con_desc.build(), wanted_type, count, as_json, out);
    }
    if (ver->parsed()) {
      if (mutant) vopts.mutation = Mutation::DropStabilityFilter;
      return cmd_verify(vopts, as_json, out);
    }
    if (quo->parsed()) return cmd_quotient(quo_desc.build(), divisor, as_json, out);
  } catch (CLI::ValidationError const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace numdup::cli
