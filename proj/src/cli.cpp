#include "tupletfrob/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <functional>
#include <sstream>

#include "tupletfrob/closed_forms.hpp"
#include "tupletfrob/serialize.hpp"
#include "tupletfrob/tuplets.hpp"
#include "tupletfrob/verification.hpp"

namespace tupletfrob::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

i64 parse_unsigned(std::string_view item, std::string_view what) {
  i64 value = 0;
  if (item.empty() || item.front() == '+' || item.front() == '-')
    throw UsageError("malformed " + std::string(what) + " '" + std::string(item) + "'");
  auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
  if (ec == std::errc::result_out_of_range) throw UsageError(std::string(what) + " '" + std::string(item) + "' overflows");
  if (ec != std::errc{} || ptr != item.data() + item.size())
    throw UsageError("malformed " + std::string(what) + " '" + std::string(item) + "'");
  return value;
}

std::vector<i64> parse_list(const std::string& text, std::string_view what) {
  std::vector<i64> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_unsigned(std::string_view(text).substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(std::span<const i64> values, std::string_view sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

std::pair<i64, i64> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("k range must look like LO..HI");
  return {parse_unsigned(std::string_view(text).substr(0, dots), "k"),
          parse_unsigned(std::string_view(text).substr(dots + 2), "k")};
}

std::string render_invariants(const SemigroupInvariants& inv) {
  std::ostringstream os;
  os << "F=" << inv.frobenius << "\n"
     << "g=" << inv.genus << "\n"
     << "PF=" << join(inv.pseudo_frobenius) << "\n"
     << "t=" << inv.type << "\n"
     << "e=" << inv.embedding_dimension << "\n"
     << "msg=" << join(inv.minimal_generators) << "\n";
  return os.str();
}

// Grouped Apéry layout when the generators form a registered family with a
// closed-form Apéry set and the modulus is the multiplicity.
std::optional<std::string> grouped_apery(const NumericalSemigroup& s, i64 modulus) {
  const auto gens = s.generators().elements();
  if (modulus != s.multiplicity() || gens.size() < 2) return std::nullopt;
  std::vector<i64> offsets;
  for (i64 g : gens) offsets.push_back(g - gens.front());
  try {
    const auto c = classify(gens.front(), OffsetPattern::from(offsets));
    const auto& f = family(c.family);
    if (!f.has_apery_closed_form || c.k < f.k_min) return std::nullopt;
    return format_apery_grouped(c.family, c.k);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string render_sweep(const SweepReport& r, bool timing) {
  std::ostringstream os;
  os << to_string(r.family) << " k=" << r.k_lo << ".." << r.k_hi << ": " << r.entries.size() << " checked, "
     << r.mismatch_count() << " mismatches";
  if (timing) os << " (" << r.wall_seconds << " s)";
  os << "\n";
  for (const auto& e : r.entries)
    for (const auto& m : e.mismatches)
      os << "  k=" << e.k << " " << m.field << ": closed=[" << join(m.closed_form) << "] engine=[" << join(m.engine)
         << "] oracle=[" << join(m.oracle) << "]\n";
  return os.str();
}

std::string render_fit(const ConjectureFit& f) {
  std::ostringstream os;
  os << "p=" << f.modulus << "k+" << f.residue << ": F(p) = " << f.fit.str() << "  a2=" << f.fit.a2.str()
     << " a1=" << f.fit.a1.str() << " a0=" << f.fit.a0.str() << "  samples=" << f.samples.size()
     << " exact=" << (f.exact ? "yes" : "no") << " a2=2/q:" << (f.a2_equals_2_over_q ? "yes" : "no")
     << " a0_integer:" << (f.a0_integer ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_family(const FamilyDescriptor& f) {
  std::ostringstream os;
  os << to_string(f.id) << "  pattern=" << f.pattern.str() << "  p=" << f.p_modulus << "k+" << f.p_residue
     << "  k>=" << f.k_min << "  F=" << f.f_in_p.str();
  if (f.type_value) os << "  t=" << *f.type_value << " (k>=" << f.type_k_min << ")";
  os << "\n";
  return os.str();
}

}  // namespace

OutputEnvelope run(const std::vector<std::string>& args) {
  OutputEnvelope env;
  CLI::App app{"Frobenius problem toolkit for prime k-tuplets", "tupletfrob"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string gens_text, pattern_text, family_text, range_text, style = "flat";
  i64 mod = 0, from = 0, to = 0, k = 0, p = 0, max_p = 0, min_p = 0, residue = -1, modulus = 0;
  int tuple_k = 0;
  unsigned threads = 0;
  bool consecutive = true, timing = false, primes_only = false, allow_inadmissible = false;
  std::function<void()> action;

  auto gens_cmd = [&](CLI::App* parent, const std::string& name, const std::string& help,
                      std::function<void(const NumericalSemigroup&)> body) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("--gens", gens_text, "Comma-separated generators")->required();
    if (name == "apery") {
      sub->add_option("--mod", mod, "Apéry modulus (default: multiplicity)");
      sub->add_option("--style", style, "flat or paper")->check(CLI::IsMember({"flat", "paper"}));
    }
    sub->callback([&, body, sub] {
      env.command = "sg " + sub->get_name();
      action = [&, body] { body(make_semigroup(parse_list(gens_text, "generator"))); };
    });
  };

  auto* sg = app.add_subcommand("sg", "Numerical semigroup invariants");
  sg->require_subcommand(1);
  gens_cmd(sg, "apery", "Apéry set", [&](const NumericalSemigroup& s) {
    const auto ap = apery_set(s, mod == 0 ? s.multiplicity() : mod);
    auto sorted = ap.sorted();
    env.result = json(ap);
    env.result["sorted"] = sorted;
    std::optional<std::string> grouped;
    if (style == "paper") grouped = grouped_apery(s, ap.modulus());
    env.out = (grouped ? *grouped : join(sorted)) + "\n";
  });
  gens_cmd(sg, "frobenius", "Frobenius number", [&](const NumericalSemigroup& s) {
    env.result = frobenius_number(s);
    env.out = env.result.dump() + "\n";
  });
  gens_cmd(sg, "genus", "Genus", [&](const NumericalSemigroup& s) {
    env.result = genus(s);
    env.out = env.result.dump() + "\n";
  });
  gens_cmd(sg, "pf", "Pseudo-Frobenius numbers", [&](const NumericalSemigroup& s) {
    const auto pf = pseudo_frobenius(s);
    env.result = pf;
    env.out = join(pf) + "\n";
  });
  gens_cmd(sg, "type", "Type", [&](const NumericalSemigroup& s) {
    env.result = type(s);
    env.out = env.result.dump() + "\n";
  });
  gens_cmd(sg, "msg", "Minimal system of generators", [&](const NumericalSemigroup& s) {
    const auto msg = minimal_generators(s);
    env.result = msg;
    env.out = join(msg.elements()) + "\n";
  });
  gens_cmd(sg, "invariants", "All invariants", [&](const NumericalSemigroup& s) {
    const auto inv = invariants(s);
    env.result = inv;
    env.out = render_invariants(inv);
  });

  auto pattern = [&] { return OffsetPattern::from(parse_list(pattern_text, "offset")); };

  auto* tup = app.add_subcommand("tuplets", "Prime constellations");
  tup->require_subcommand(1);
  auto* find = tup->add_subcommand("find", "List prime tuplets with p in [from, to]");
  find->add_option("--pattern", pattern_text)->required();
  find->add_option("--from", from)->required();
  find->add_option("--to", to)->required();
  find->add_flag("--consecutive,!--no-consecutive", consecutive, "Reject tuplets with interior primes (default)");
  find->add_flag("--allow-inadmissible", allow_inadmissible);
  find->callback([&] {
    env.command = "tuplets find";
    action = [&] {
      TupletSearch search;
      search.lo = from;
      search.hi = to;
      search.require_consecutive = consecutive;
      search.allow_inadmissible = allow_inadmissible;
      const auto found = find_tuplets(pattern(), search);
      env.result = found;
      for (const auto& t : found) env.out += join(t.primes) + "\n";
    };
  });
  auto* adm = tup->add_subcommand("admissible", "Admissibility of an offset pattern");
  adm->add_option("--pattern", pattern_text)->required();
  adm->callback([&] {
    env.command = "tuplets admissible";
    action = [&] {
      const auto r = is_admissible(pattern());
      env.result = r;
      env.out = r.admissible ? "admissible\n"
                             : "not admissible: residues " + join(r.residues_at_witness) + " cover every class mod " +
                                   std::to_string(*r.witness_prime) + "\n";
    };
  });
  auto* sk = tup->add_subcommand("sk", "Smallest admissible diameter s(k) and its patterns");
  sk->add_option("--k", tuple_k)->required();
  sk->callback([&] {
    env.command = "tuplets sk";
    action = [&] {
      const auto r = smallest_diameter(tuple_k);
      env.result = r;
      env.out = "s(" + std::to_string(tuple_k) + ") = " + std::to_string(r.diameter) + "\n";
      for (const auto& pat : r.patterns) env.out += pat.str() + "\n";
    };
  });
  auto* cls = tup->add_subcommand("classify", "Family and parameter k of a tuplet start");
  cls->add_option("--p", p)->required();
  cls->add_option("--pattern", pattern_text)->required();
  cls->callback([&] {
    env.command = "tuplets classify";
    action = [&] {
      const auto c = classify(p, pattern());
      env.result = c;
      env.out = std::string(to_string(c.family)) + " k=" + std::to_string(c.k) + "\n";
    };
  });

  auto* formula = app.add_subcommand("formula", "Closed-form family formulas");
  formula->require_subcommand(1);
  auto* eval = formula->add_subcommand("eval", "Closed-form invariants of a family member");
  eval->add_option("--family", family_text)->required();
  eval->add_option("--k", k)->required();
  eval->add_option("--style", style, "flat or paper")->check(CLI::IsMember({"flat", "paper"}));
  eval->callback([&] {
    env.command = "formula eval";
    action = [&] {
      const auto id = parse_family_id(family_text);
      const auto& f = family(id);
      env.result = json{{"family", id}, {"k", k}, {"p", f.p_of(k)}, {"generators", f.generators(k)}};
      if (f.has_apery_closed_form) {
        const auto inv = invariants_closed_form(id, k);
        env.result["invariants"] = inv;
        env.out = render_invariants(inv);
        if (k >= f.k_min) {
          const auto ap = apery_closed_form(id, k);
          env.result["apery"] = ap;
          env.out += "Ap=" + (style == "paper" ? format_apery_grouped(id, k) : join(ap.sorted())) + "\n";
        }
      } else {
        const i64 fp = frobenius_from_p(f.p_of(k), f.pattern);
        env.result["frobenius"] = fp;
        env.out = "F=" + std::to_string(fp) + "\n";
        if (k >= f.type_k_min) {
          env.result["type"] = type_from_family(id, k);
          env.out += "t=" + std::to_string(type_from_family(id, k)) + "\n";
        }
      }
    };
  });
  auto* from_p = formula->add_subcommand("from-p", "Frobenius number from the tuplet start p");
  from_p->add_option("--p", p)->required();
  from_p->add_option("--pattern", pattern_text)->required();
  from_p->callback([&] {
    env.command = "formula from-p";
    action = [&] {
      env.result = frobenius_from_p(p, pattern());
      env.out = env.result.dump() + "\n";
    };
  });
  auto* list = formula->add_subcommand("list", "The family registry");
  list->callback([&] {
    env.command = "formula list";
    action = [&] {
      env.result = json::array();
      for (const auto& f : family_registry()) {
        env.result.push_back(f);
        env.out += render_family(f);
      }
    };
  });

  auto* verify = app.add_subcommand("verify", "Cross-checks against independent oracles");
  verify->require_subcommand(1);
  auto* sweep = verify->add_subcommand("sweep", "Compare closed forms with the engine and the oracle");
  sweep->add_option("--family", family_text)->required();
  sweep->add_option("--k-range", range_text, "LO..HI")->required();
  sweep->add_option("--threads", threads);
  sweep->add_flag("--timing", timing, "Include wall time (output no longer reproducible)");
  sweep->callback([&] {
    env.command = "verify sweep";
    action = [&] {
      const auto [lo, hi] = parse_range(range_text);
      auto report = sweep_family(parse_family_id(family_text), lo, hi, threads);
      if (!timing) report.wall_seconds = 0.0;
      env.result = report;
      env.out = render_sweep(report, timing);
    };
  });
  auto* conj = verify->add_subcommand("conjecture", "Fit F(p) to an exact quadratic");
  conj->add_option("--pattern", pattern_text)->required();
  conj->add_option("--max-p", max_p)->required();
  conj->add_option("--modulus", modulus, "Residue class modulus (with --residue)");
  conj->add_option("--residue", residue);
  conj->add_option("--min-p", min_p);
  conj->add_flag("--primes-only", primes_only, "Sample only p where every p + b_i is prime");
  conj->add_option("--threads", threads);
  conj->callback([&] {
    env.command = "verify conjecture";
    action = [&] {
      std::vector<ConjectureFit> fits;
      if (modulus > 0 || residue >= 0) {
        if (modulus <= 0 || residue < 0) throw UsageError("--modulus and --residue go together");
        ConjectureQuery q{pattern()};
        q.modulus = modulus;
        q.residue = residue;
        q.min_p = std::max<i64>(min_p, 2);
        q.max_p = max_p;
        q.primes_only = primes_only;
        q.threads = threads;
        fits.push_back(fit_conjecture(q));
      } else {
        fits = fit_pattern(pattern(), max_p, primes_only, threads);
      }
      env.result = fits;
      for (const auto& f : fits) env.out += render_fit(f);
    };
  });
  auto* orc = verify->add_subcommand("oracle", "Brute-force Frobenius number, genus and PF");
  orc->add_option("--gens", gens_text)->required();
  orc->callback([&] {
    env.command = "verify oracle";
    action = [&] {
      const auto r = oracle_frobenius(parse_list(gens_text, "generator"));
      env.result = r;
      env.out = "F=" + std::to_string(r.frobenius) + "\ng=" + std::to_string(r.genus) + "\nPF=" +
                join(r.pseudo_frobenius) + "\n";
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    env.out = app.help();
    return env;
  } catch (const CLI::ParseError& e) {
    env.exit_code = e.get_exit_code() == 0 ? kSuccess : kUsageError;
    env.err = std::string(e.what()) + "\n" + app.help();
    return env;
  }
  env.format = format;
  try {
    action();
  } catch (const UsageError& e) {
    env.exit_code = kUsageError;
    env.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const Error& e) {
    env.exit_code = e.code() == Errc::InvalidArgument ? kUsageError : kDomainError;
    env.err = std::string("error: ") + e.what() + "\n";
    env.result = json{{"error", to_string(e.code())}, {"message", e.what()}};
  }
  if (env.exit_code != kSuccess && env.result.is_null())
    env.result = json{{"error", "UsageError"}, {"message", env.err}};
  if (format == "json") {
    env.out = json{{"command", env.command}, {"exit_code", env.exit_code}, {"result", env.result}}.dump(2) + "\n";
  }
  return env;
}

}  // namespace tupletfrob::cli
