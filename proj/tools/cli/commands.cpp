#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "harmonic/error.hpp"
#include "harmonic/invariants.hpp"
#include "harmonic/render.hpp"

namespace harmonic::cli {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string optional_fraction(const std::optional<Fraction>& f) { return f ? f->to_string() : "-"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
}

std::string describe(const AnalysisReport& r) {
  std::ostringstream os;
  os << r.triple.to_string() << '\n';
  if (r.reduction.steps.empty()) {
    os << "  reductions:        none\n";
  } else {
    for (const auto& s : r.reduction.steps) {
      os << "  reduction:         c = " << s.from_c << " = " << s.lambda << "*" << r.triple.a << " + " << s.mu << "*"
         << r.triple.b << " -> " << s.to_c << " (mirror)\n";
    }
    os << "  reduced:           " << (r.reduction.mirrored ? "mirror of " : "") << r.reduction.reduced.to_string() << '\n';
  }
  os << "  diagram crossings: " << r.crossing_bound << '\n';
  os << "  Gauss code:        " << (r.gauss_code.entries.empty() ? "(empty)" : r.gauss_code.to_string()) << '\n';
  if (r.conway) os << "  Conway form:       " << r.conway->to_string() << '\n';
  if (r.fraction) {
    os << "  Schubert fraction: " << r.fraction->to_string();
    if (r.display_fraction) os << " (table form " << r.display_fraction->to_string() << ")";
    if (r.fraction_from_table) os << " from the name table, not derived";
    os << '\n';
  }
  if (r.crossing_number) os << "  crossing number:   " << *r.crossing_number << '\n';
  os << "  Alexander:         " << r.alexander << '\n';
  os << "  determinant:       " << r.determinant << '\n';
  os << "  name:              " << r.name.value_or("unidentified") << " (" << to_string(r.classification) << ")\n";
  if (r.prediction) {
    os << "  prediction:        " << r.prediction->statement << ": "
       << (r.prediction_holds.value_or(false) ? "invariants agree" : "invariants DISAGREE") << '\n';
  }
  for (const auto& n : r.notes) os << "  note:              " << n << '\n';
  return os.str();
}

template <class F>
CommandResult guarded(F&& body) {
  CommandResult result;
  try {
    result.out = body();
  } catch (const Error& e) {
    result.exit_code = e.is_input_error() ? kInvalidInput : kInternalFailure;
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const std::exception& e) {
    result.exit_code = kInternalFailure;
    result.err = std::string("internal error: ") + e.what() + '\n';
  }
  return result;
}

}  // namespace

CommandResult cmd_analyze(const AnalyzeArgs& args) {
  return guarded([&] {
    const HarmonicTriple K = HarmonicTriple::make(args.a, args.b, args.c);
    const AnalysisReport report = analyze(K);
    RenderOptions options;
    options.annotate_signs = args.annotate;
    if (!args.svg_path.empty()) write_file(args.svg_path, render_xy(K, options));
    if (!args.billiard_path.empty()) write_file(args.billiard_path, render_billiard(K, options));
    if (args.json) return to_json(report).dump(2) + '\n';
    return describe(report);
  });
}

CommandResult cmd_table(const TableArgs& args) {
  return guarded([&] {
    if (args.max_ab < 1) throw Error(ErrorCode::InvalidInput, "--max-ab must be positive");
    const std::vector<HarmonicTriple> triples = table_triples(args.max_ab);
    std::vector<std::optional<AnalysisReport>> reports(triples.size());
    std::vector<std::string> failures(triples.size());

    // Workers take rows from a shared counter; each writes only its own slot,
    // so output order is the sorted triple order regardless of scheduling.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < triples.size(); i = next++) {
        try {
          reports[i] = analyze(triples[i]);
        } catch (const std::exception& e) {
          failures[i] = e.what();
        }
      }
    };
    unsigned jobs = args.jobs ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(triples.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (!reports[i]) throw Error(ErrorCode::InternalError, triples[i].to_string() + ": " + failures[i]);
    }
    if (args.json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : reports) rows.push_back(to_json(*r));
      return rows.dump(2) + '\n';
    }
    std::ostringstream os;
    os << std::left << std::setw(13) << "knot" << std::setw(10) << "fraction" << std::setw(13) << "name"
       << "classification\n";
    for (const auto& r : reports) {
      os << std::setw(13) << r->triple.to_string() << std::setw(10) << optional_fraction(r->display_fraction)
         << std::setw(13) << r->name.value_or("unidentified") << to_string(r->classification) << '\n';
    }
    os << triples.size() << " knots\n";
    return os.str();
  });
}

CommandResult cmd_cf(const CfArgs& args) {
  return guarded([&] {
    if (args.alpha <= 0 || args.alpha % 2 == 0) {
      throw Error(ErrorCode::InvalidInput, "alpha must be odd and positive, got " + std::to_string(args.alpha));
    }
    const Fraction f = Fraction::make(args.alpha, args.beta);
    std::ostringstream os;
    os << "fraction:               " << f << '\n';
    if (f.alpha == 1) {
      os << "the unknot\n";
      return os.str();
    }
    const BigInt b0 = mod_floor(f.beta, f.alpha);
    os << "positive expansion:     " << positive_cf(Rational(f.alpha, b0)) << "  (" << f.alpha << "/" << b0 << ")\n";
    os << "crossing number:        " << fraction_crossing_number(f) << '\n';
    // beta^2 = +-2 is not preserved by beta -> beta^-1, so both are shown.
    const BigInt inv = mod_inverse(f.beta, f.alpha);
    auto square_status = [&](const BigInt& beta) {
      const BigInt sq = mod_floor(beta * beta, f.alpha);
      std::string s = sq.str();
      if (sq == mod_floor(BigInt(2), f.alpha)) s += " (+2)";
      else if (sq == mod_floor(BigInt(-2), f.alpha)) s += " (-2)";
      return s;
    };
    const bool signature = beta_squared_pm2(f) || beta_squared_pm2(Fraction{f.alpha, inv});
    os << "beta^2 mod alpha:       " << square_status(f.beta) << "; for beta^-1 = " << inv << ": " << square_status(inv)
       << (signature ? "  (H(4,b,c) signature present)" : "  (neither is +-2: not of the form H(4,b,c))") << '\n';

    // Even representatives: same knot from beta^(+-1), mirror image from -beta^(+-1).
    std::vector<std::pair<BigInt, bool>> reps;
    for (const auto& [value, mirror] : std::vector<std::pair<BigInt, bool>>{
             {b0, false}, {inv, false}, {mod_floor(-f.beta, f.alpha), true}, {mod_floor(-inv, f.alpha), true}}) {
      if (value % 2 != 0) continue;
      if (std::none_of(reps.begin(), reps.end(), [&](const auto& r) { return r.first == value; })) {
        reps.emplace_back(value, mirror);
      }
    }
    os << "[1,+-2] expansions:\n";
    std::optional<HarmonicTriple> realized;
    for (const auto& [beta, mirror] : reps) {
      const Fraction rep{f.alpha, beta};
      const SignedCF e = expand_1212(rep);
      const SignChangeProfile p = sign_change_profile(e);
      std::vector<std::string> changes;
      for (int j : p.changes) changes.push_back(std::to_string(j));
      os << "  " << rep << (mirror ? " (mirror)" : "") << ": " << e << "\n    sign changes at {" << join(changes, ",")
         << "}, longest run " << p.max_run << (p.palindromic ? ", palindromic" : "")
         << (p.has_two_consecutive() ? ", two consecutive sign changes" : "") << '\n';
      if (!p.has_two_consecutive() && !realized) {
        // Length b − 1 and crossing number (3b + c − 2)/4 pin down (b, c).
        const std::int64_t b = static_cast<std::int64_t>(e.size()) + 1;
        const std::int64_t c = 4 * static_cast<std::int64_t>(fraction_crossing_number(f)) - 3 * b + 2;
        if (c > b && c < 3 * b && c % 2 != 0 && std::gcd(b, c) == 1 && (c - b) % 4 != 0 &&
            two_bridge_equivalent(fraction_of(conway_form_h4(b, c)), f, true)) {
          realized = HarmonicTriple{4, b, c};
        }
      }
    }
    if (reps.empty()) os << "  (none)\n";
    os << "harmonic form:          "
       << (realized ? realized->to_string() + " up to mirror" : std::string("not of the form H(4,b,c)")) << '\n';
    return os.str();
  });
}

CommandResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Harmonic (Chebyshev) knot toolkit", "harmonic"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the harmonic knot H(a,b,c)");
  analyze_cmd->add_option("a", analyze_args.a)->required();
  analyze_cmd->add_option("b", analyze_args.b)->required();
  analyze_cmd->add_option("c", analyze_args.c)->required();
  analyze_cmd->add_flag("--json", analyze_args.json, "Emit the JSON report");
  analyze_cmd->add_option("--svg", analyze_args.svg_path, "Write the xy diagram as SVG");
  analyze_cmd->add_option("--billiard", analyze_args.billiard_path, "Write the billiard diagram as SVG");
  analyze_cmd->add_flag("--signs", analyze_args.annotate, "Mark crossing signs in SVG output");

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Regenerate the table of harmonic knots");
  table_cmd->add_option("--max-ab", table_args.max_ab, "Bound on (a-1)(b-1)")->capture_default_str();
  table_cmd->add_flag("--json", table_args.json, "Emit one JSON report per row");
  table_cmd->add_option("-j,--jobs", table_args.jobs, "Worker threads (0: hardware concurrency)");

  CfArgs cf_args;
  auto* cf_cmd = app.add_subcommand("cf", "Continued-fraction report for alpha/beta");
  cf_cmd->add_option("alpha", cf_args.alpha)->required();
  cf_cmd->add_option("beta", cf_args.beta)->required();

  std::vector<const char*> cargv;
  for (const auto& s : argv) cargv.push_back(s.c_str());
  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kInvalidInput, out.str(), err.str()};
  }
  if (analyze_cmd->parsed()) return cmd_analyze(analyze_args);
  if (table_cmd->parsed()) return cmd_table(table_args);
  return cmd_cf(cf_args);
}

}  // namespace harmonic::cli
