#include "cubealg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cubealg/descent_basis.hpp"
#include "cubealg/groebner.hpp"
#include "cubealg/json_io.hpp"
#include "cubealg/series.hpp"

namespace cubealg {

namespace {

using nlohmann::json;

std::string sigma_string(const std::vector<int>& sigma) {
  std::ostringstream os;
  const bool compact = sigma.size() <= 9;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!compact && i > 0) os << ' ';
    os << sigma[i];
  }
  return os.str();
}

std::string multiset_string(const std::vector<int>& x) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) os << ',';
    os << x[i];
  }
  os << '}';
  return os.str();
}

std::string x_image_string(const std::vector<int>& exps) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (exps[i] != 1) os << '^' << exps[i];
    first = false;
  }
  return first ? "1" : os.str();
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(widths[c]) + 2) << row[c];
    }
    out << '\n';
  }
}

BuchbergerOptions options_from(const RunConfig& config) {
  return {config.use_coprime_criterion, config.use_chain_criterion};
}

int cmd_stats(const RunConfig& config, std::ostream& out) {
  json jrows = json::array();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"window", "sigma", "X", "monomial", "(t,q)", "ndes", "nmajor"});
  for_each_group_element(
      config.r, config.n,
      [&](const ColoredPermutation& g) {
        const SigmaXPair pair = decompose(g);
        const Monomial mono = nd_element(pair, config.r);
        const BiDegree deg = bidegree(mono);
        if (config.format == "json") {
          jrows.push_back({{"window", to_window_string(g)},
                           {"sigma", pair.sigma},
                           {"x", pair.x},
                           {"monomial", monomial_to_json(mono)},
                           {"tdeg", deg.tdeg},
                           {"qdeg", deg.qdeg},
                           {"ndes", ndes(g)},
                           {"nmajor", nmajor(g)}});
        } else {
          rows.push_back({to_window_string(g), sigma_string(pair.sigma),
                          multiset_string(pair.x), to_string(mono), to_string(deg),
                          std::to_string(ndes(g)), std::to_string(nmajor(g))});
        }
      },
      config.limit);
  if (config.format == "json") {
    out << jrows.dump(2) << '\n';
  } else {
    print_table(out, rows);
  }
  return 0;
}

int cmd_gb(const RunConfig& config, std::ostream& out) {
  const GroebnerBasis gb = buchberger(combined_ideal(config.r, config.n), options_from(config));
  if (config.format == "json") {
    out << groebner_to_json(gb).dump(2) << '\n';
    return 0;
  }
  out << "Groebner basis of J_{" << config.r << ',' << config.n << "} ("
      << gb.basis.size() << " elements)\n";
  for (const Polynomial& g : gb.basis) out << "  " << to_string(g) << '\n';
  out << "pairs considered:    " << gb.stats.pairs_considered << '\n'
      << "coprime skips:       " << gb.stats.criterion1_skips << '\n'
      << "chain skips:         " << gb.stats.criterion2_skips << '\n'
      << "reductions to zero:  " << gb.stats.reductions_to_zero << '\n';
  return 0;
}

int cmd_verify_lt(const RunConfig& config, std::ostream& out) {
  const GroebnerBasis gb = buchberger(combined_ideal(config.r, config.n), options_from(config));
  const MonomialIdeal computed = lt_ideal(gb);
  const MonomialIdeal predicted = predicted_lt_ideal(config.r, config.n);
  const bool holds = monomial_ideal_equal(computed, predicted);
  std::size_t matched = 0;
  for (const Monomial& m : predicted.min_gens) {
    matched += std::find(computed.min_gens.begin(), computed.min_gens.end(), m) !=
               computed.min_gens.end();
  }
  if (config.format == "json") {
    json jcomputed = json::array();
    for (const Monomial& m : computed.min_gens) jcomputed.push_back(monomial_to_json(m));
    json jpredicted = json::array();
    for (const TaggedMonomial& g : predicted_lt_generators(config.r, config.n)) {
      jpredicted.push_back({{"family", g.family}, {"mono", monomial_to_json(g.mono)}});
    }
    out << json({{"command", "verify-lt"},
                 {"params", {{"r", config.r}, {"n", config.n}}},
                 {"holds", holds},
                 {"matched", matched},
                 {"computed", jcomputed},
                 {"predicted", jpredicted}})
               .dump(2)
        << '\n';
  } else {
    out << "verify-lt r=" << config.r << " n=" << config.n << ": "
        << (holds ? "OK" : "MISMATCH") << " -- " << matched << " of "
        << predicted.min_gens.size() << " minimal generators matched\n";
    if (!holds) {
      out << "computed:";
      for (const Monomial& m : computed.min_gens) out << ' ' << to_string(m);
      out << "\npredicted:";
      for (const Monomial& m : predicted.min_gens) out << ' ' << to_string(m);
      out << '\n';
    }
  }
  return holds ? 0 : 1;
}

int cmd_verify_basis(const RunConfig& config, std::ostream& out) {
  const std::vector<Monomial> standard = standard_monomials(predicted_lt_ideal(config.r, config.n));
  std::vector<Monomial> from_pairs;
  bool pair_round_trip = true;
  for_each_group_element(
      config.r, config.n,
      [&](const ColoredPermutation& g) {
        const SigmaXPair pair = decompose(g);
        Monomial m = nd_element(pair, config.r);
        pair_round_trip = pair_round_trip && decode(m, config.r).pair == pair;
        from_pairs.push_back(std::move(m));
      },
      config.limit);
  std::sort(from_pairs.begin(), from_pairs.end(), mono_less);
  const bool distinct =
      std::adjacent_find(from_pairs.begin(), from_pairs.end()) == from_pairs.end();
  const bool sets_equal = from_pairs == standard;
  const bool holds = sets_equal && distinct && pair_round_trip;
  if (config.format == "json") {
    out << json({{"command", "verify-basis"},
                 {"params", {{"r", config.r}, {"n", config.n}}},
                 {"holds", holds},
                 {"standard_count", standard.size()},
                 {"basis_count", from_pairs.size()},
                 {"sets_equal", sets_equal},
                 {"round_trip", pair_round_trip}})
               .dump(2)
        << '\n';
  } else {
    out << "verify-basis r=" << config.r << " n=" << config.n << ": "
        << (holds ? "OK" : "MISMATCH") << " -- " << standard.size()
        << " standard monomials, " << from_pairs.size() << " basis elements, round trip "
        << (pair_round_trip ? "ok" : "failed") << '\n';
  }
  return holds ? 0 : 1;
}

int cmd_verify_hilbert(const RunConfig& config, std::ostream& out) {
  const IdentityKind kind = config.r == 1 ? IdentityKind::carlitz : IdentityKind::bagno;
  const IdentityReport report =
      verify_identity(kind, config.r, config.n, config.trunc, config.limit);
  if (config.format == "json") {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    out << "verify-hilbert " << (kind == IdentityKind::carlitz ? "carlitz" : "bagno")
        << " r=" << config.r << " n=" << config.n << " K=" << config.trunc << ": "
        << (report.holds ? "holds" : "FAILS") << " (" << report.mismatches.size()
        << " mismatches)\n";
    for (const Mismatch& m : report.mismatches) {
      out << "  t^" << m.t << " q^" << m.q << ": lhs " << to_string(m.lhs) << " rhs "
          << to_string(m.rhs) << '\n';
    }
  }
  return report.holds ? 0 : 1;
}

int cmd_dim(const RunConfig& config, std::ostream& out) {
  const std::vector<Monomial> standard = standard_monomials(predicted_lt_ideal(config.r, config.n));
  const std::uint64_t expected = group_order(config.r, config.n);
  const bool matches = standard.size() == expected;
  if (config.format == "json") {
    out << json({{"command", "dim"},
                 {"params", {{"r", config.r}, {"n", config.n}}},
                 {"dimension", standard.size()},
                 {"expected", expected},
                 {"matches", matches}})
               .dump(2)
        << '\n';
  } else {
    out << standard.size() << '\n';
  }
  return matches ? 0 : 1;
}

int cmd_phi(const RunConfig& config, std::ostream& out) {
  if (group_order(1, config.n) > config.limit) {
    throw SizeLimitError("phi table exceeds the configured limit");
  }
  json jrows = json::array();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"pi", "gs element", "phi image"});
  for_each_group_element(1, config.n, [&](const ColoredPermutation& g) {
    std::vector<int> pi(config.n);
    for (int i = 0; i < config.n; ++i) pi[i] = g.letter(i).value;
    const Monomial ghat = gs_element(pi);
    const std::vector<int> image = coinvariant_image(ghat);
    if (config.format == "json") {
      jrows.push_back({{"pi", pi},
                       {"gs", monomial_to_json(ghat)},
                       {"image_exponents", image}});
    } else {
      rows.push_back({sigma_string(pi), to_string(ghat), x_image_string(image)});
    }
  });
  if (config.format == "json") {
    out << jrows.dump(2) << '\n';
  } else {
    print_table(out, rows);
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.r < 1 || config.n < 1 || config.n > kMaxAmbient || config.trunc < 0 ||
      config.limit < 1) {
    err << "invalid parameters: need r >= 1, 1 <= n <= " << kMaxAmbient
        << ", trunc >= 0, limit >= 1\n";
    return 2;
  }
  if (config.format != "text" && config.format != "json") {
    err << "unknown format: " << config.format << '\n';
    return 2;
  }
  try {
    if (config.command == "stats") return cmd_stats(config, out);
    if (config.command == "gb") return cmd_gb(config, out);
    if (config.command == "verify-lt") return cmd_verify_lt(config, out);
    if (config.command == "verify-basis") return cmd_verify_basis(config, out);
    if (config.command == "verify-hilbert") return cmd_verify_hilbert(config, out);
    if (config.command == "dim") return cmd_dim(config, out);
    if (config.command == "phi") return cmd_phi(config, out);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  err << "unknown command: " << config.command << '\n';
  return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of descent bases and Euler-Mahonian identities "
               "for quotients of the unit-cube semigroup algebra"};
  app.require_subcommand(1);
  RunConfig config;
  bool no_criteria = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--r", config.r, "color modulus r (r = 1 is the plain S_n case)")
        ->capture_default_str();
    cmd->add_option("--n", config.n, "ambient size n")->capture_default_str();
    cmd->add_option("--trunc", config.trunc, "t-truncation order K for series checks")
        ->capture_default_str();
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--limit", config.limit, "enumeration limit on group elements")
        ->capture_default_str();
    cmd->add_flag("--no-criteria", no_criteria,
                  "disable both Buchberger pair-skip criteria (soundness cross-check)");
    cmd->add_option("--seed", config.seed, "reproducibility seed for randomized checks")
        ->capture_default_str();
    return cmd;
  };

  add_common(app.add_subcommand("stats", "table of group elements with statistics"));
  add_common(app.add_subcommand("gb", "Groebner basis of the combined ideal, with stats"));
  add_common(app.add_subcommand("verify-lt",
                                "compare the computed leading-term ideal with the prediction"));
  add_common(app.add_subcommand("verify-basis",
                                "standard monomials vs descent basis, with decode round trip"));
  add_common(app.add_subcommand("verify-hilbert",
                                "check the Euler-Mahonian identity to order K"));
  add_common(app.add_subcommand("dim", "dimension of the quotient via standard monomials"));
  add_common(app.add_subcommand("phi", "image table of the map onto the coinvariant algebra"));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (no_criteria) {
    config.use_coprime_criterion = false;
    config.use_chain_criterion = false;
  }
  return run(config, out, err);
}

}  // namespace cubealg
