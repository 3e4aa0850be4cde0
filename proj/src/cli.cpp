#include "betashift/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "betashift/bowen_franks.hpp"
#include "betashift/covers.hpp"
#include "betashift/decide.hpp"
#include "betashift/error.hpp"
#include "betashift/expansion.hpp"
#include "betashift/fiber_reduce.hpp"
#include "betashift/json_io.hpp"
#include "betashift/moves.hpp"

namespace betashift::cli {

namespace {

constexpr const char* kGrammar =
    "sequences are written word(period), e.g. \"11(10)\"; digits are 0-9 or [d] for d >= 10";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kJson, kDot };

struct Config {
  std::size_t max_digits = kDefaultMaxDigits;
  std::string precision_text = "1/1000000000000";
  Rational precision{1, 1000000000000};
  Format format = Format::kText;
  bool emit_steps = false;
};

Rational parse_rational(const std::string& text) {
  try {
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw UsageError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      BigInt scale = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
      return Rational(BigInt(digits), scale);
    }
    return Rational(BigInt(text));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + text + "' (use a/b or a decimal)");
  }
}

GeneratingSequence sequence_arg(const std::string& text) {
  EventuallyPeriodicSeq raw = [&] {
    try {
      return parse_sequence(text);
    } catch (const Error& e) {
      throw UsageError(std::string(e.what()) + "\n" + kGrammar);
    }
  }();
  return validate_generating(raw);
}

std::string decimal(const Rational& q, int digits = 15) {
  std::ostringstream out;
  out << std::setprecision(digits) << q.convert_to<double>();
  return out.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void print_graph(std::ostream& out, const LabeledGraph& g) {
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edges().size() << "\n";
  for (const LabeledEdge& e : g.edges()) {
    out << "  " << g.name(e.src) << " -" << e.label << "-> " << g.name(e.dst) << "\n";
  }
}

void print_graph(std::ostream& out, const UnlabeledGraph& g) {
  out << "vertices: " << g.vertex_count << "\n";
  out << "edges: " << g.edges.size() << "\n";
  for (const auto& [s, d] : g.edges) out << "  " << g.names[s] << " -> " << g.names[d] << "\n";
}

void print_trace(std::ostream& out, const MoveTrace& trace) {
  if (trace.moves.empty()) out << "  (no moves)\n";
  for (const Move& m : trace.moves) {
    out << "  " << to_string(m.kind);
    for (const auto& [key, value] : m.params) out << " " << key << "=" << value;
    out << ": " << m.before.to_string() << " -> " << m.after.to_string() << "\n";
  }
}

AlgebraicNumber beta_arg(const std::string& poly, const std::string& interval,
                         const std::string& beta) {
  if (!beta.empty()) {
    if (!poly.empty() || !interval.empty()) {
      throw UsageError("give either --beta or --poly with --interval, not both");
    }
    return AlgebraicNumber::rational(parse_rational(beta));
  }
  if (poly.empty() || interval.empty()) {
    throw UsageError("need --poly P --interval lo,hi or --beta q");
  }
  std::size_t comma = interval.find(',');
  if (comma == std::string::npos) throw UsageError("interval must be lo,hi");
  IntPoly p = [&] {
    try {
      return parse_polynomial(poly);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  return AlgebraicNumber::from_polynomial(
      p, {parse_rational(interval.substr(0, comma)), parse_rational(interval.substr(comma + 1))});
}

void require_text_or_json(Format f, const std::string& command) {
  if (f == Format::kDot) throw UsageError("--format dot is not available for " + command);
}

struct BatchEntry {
  std::string line;
  std::string a, b;
  std::optional<Verdict> verdict;
  std::string error;
};

std::vector<BatchEntry> run_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open batch file '" + path + "'");
  std::vector<BatchEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    BatchEntry entry;
    entry.line = line;
    if (!(fields >> entry.a) || entry.a.front() == '#') continue;
    std::string extra;
    if (!(fields >> entry.b) || (fields >> extra)) {
      throw UsageError("batch lines need exactly two sequences: '" + line + "'");
    }
    entries.push_back(std::move(entry));
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      BatchEntry& e = entries[i];
      try {
        e.verdict = compare(GeneratingSequence::parse(e.a), GeneratingSequence::parse(e.b));
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
    }
  };
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return entries;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Beta-shift covers, invariants and flow equivalence", "betashift"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--max-digits", config.max_digits, "Digit bound for expansions")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", config.precision_text, "Interval width for beta, as a/b");
  app.add_flag("--emit-steps", config.emit_steps, "Show intermediate reduction graphs");

  std::string poly, interval, beta, seq, seq2, batch;
  std::size_t depth = 0, multiplicity = 0, len = 0;

  auto beta_options = [&](CLI::App* sub) {
    sub->add_option("--poly", poly, "Integer polynomial, e.g. x^2-x-1");
    sub->add_option("--interval", interval, "Isolating interval lo,hi");
    sub->add_option("--beta", beta, "Rational beta > 1");
  };
  CLI::App* expand = app.add_subcommand("expand", "Expand 1 in base beta");
  beta_options(expand);
  CLI::App* genseq = app.add_subcommand("genseq", "Generating sequence of beta");
  beta_options(genseq);

  auto seq_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("SEQ", seq, "Generating sequence, e.g. 11(10)")->required();
    return sub;
  };
  CLI::App* beta_cmd = seq_command("beta", "Recover beta from a generating sequence");
  CLI::App* validate = seq_command("validate", "Validate a generating sequence");
  CLI::App* cover = seq_command("cover", "Right Fischer cover");
  cover->add_option("--depth", depth, "Show the loop graph truncated at this depth instead");
  cover->add_option("--multiplicity", multiplicity,
                    "Also count presentations of cyclic words up to this length");
  CLI::App* fiber = seq_command("fiber", "Fiber product cover and its involution");
  CLI::App* invariants = seq_command("invariants", "S, N and Bowen-Franks groups");
  CLI::App* reduce_cmd = seq_command("reduce", "Reduce the fiber product's underlying graph");
  CLI::App* canonical = seq_command("canonical", "Canonical form with its move trace");
  CLI::App* oracle = seq_command("oracle-check", "Compare the cover's language with the "
                                                 "word criterion");
  oracle->add_option("--len", len, "Word length bound")->required()->check(CLI::PositiveNumber);

  CLI::App* compare_cmd = app.add_subcommand("compare", "Decide flow equivalence");
  compare_cmd->add_option("SEQ1", seq);
  compare_cmd->add_option("SEQ2", seq2);
  compare_cmd->add_option("--batch", batch, "File of pairs, one per line");
  CLI::App* equivariant = app.add_subcommand("equivariant", "Equivariant fiber comparison");
  equivariant->add_option("SEQ1", seq)->required();
  equivariant->add_option("SEQ2", seq2)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << kGrammar << "\n";
    return kExitUsage;
  }

  try {
    config.format = format == "json" ? Format::kJson : format == "dot" ? Format::kDot : Format::kText;
    config.precision = parse_rational(config.precision_text);
    if (config.precision <= 0) throw UsageError("--precision must be positive");
    const bool json = config.format == Format::kJson;

    if (app.got_subcommand(expand) || app.got_subcommand(genseq)) {
      const bool is_expand = app.got_subcommand(expand);
      require_text_or_json(config.format, is_expand ? "expand" : "genseq");
      ExpansionResult e = beta_expansion_of_one(beta_arg(poly, interval, beta), config.max_digits);
      if (is_expand) {
        if (json) {
          out << to_json(e).dump(2) << "\n";
        } else {
          out << "digits: " << format_word(e.digits) << "\nstatus: " << e.status.to_string()
              << "\n";
        }
        return kExitOk;
      }
      GeneratingSequence g = generating_sequence_from_expansion(e);
      if (json) {
        out << Json{{"g", g.to_string()}, {"class", std::string(to_string(classify(g)))}}.dump(2)
            << "\n";
      } else {
        out << "g: " << g.to_string() << "\nclass: " << to_string(classify(g)) << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(beta_cmd)) {
      require_text_or_json(config.format, "beta");
      GeneratingSequence g = sequence_arg(seq);
      RationalInterval iv = beta_from_generating(g, config.precision);
      auto [log_lo, log_hi] = entropy(g, config.precision);
      IntPoly p = generating_polynomial(g);
      if (json) {
        out << Json{{"g", g.to_string()},
                    {"polynomial", format_polynomial(p)},
                    {"interval", {to_json(iv.lo), to_json(iv.hi)}},
                    {"approx", decimal((iv.lo + iv.hi) / 2)},
                    {"entropy", {log_lo, log_hi}}}
                   .dump(2)
            << "\n";
      } else {
        out << "g: " << g.to_string() << "\npolynomial: " << format_polynomial(p)
            << "\ninterval: [" << iv.lo.str() << ", " << iv.hi.str() << "]\napprox: "
            << decimal((iv.lo + iv.hi) / 2) << "\nentropy: [" << std::setprecision(15) << log_lo
            << ", " << log_hi << "]\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(validate)) {
      require_text_or_json(config.format, "validate");
      GeneratingSequence g = sequence_arg(seq);
      bool parry = validate_expansion(g.seq());
      if (json) {
        out << Json{{"g", g.to_string()},
                    {"valid", true},
                    {"class", std::string(to_string(classify(g)))},
                    {"strict_expansion", parry}}
                   .dump(2)
            << "\n";
      } else {
        out << "valid: " << g.to_string() << "\nclass: " << to_string(classify(g))
            << "\nstrict_expansion: " << yes_no(parry) << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(cover)) {
      GeneratingSequence g = sequence_arg(seq);
      if (depth > 0) {
        TruncatedLoopGraph loop = standard_loop_graph(g, depth);
        if (config.format == Format::kDot) {
          out << to_dot(loop.graph, "loop " + g.to_string());
        } else if (json) {
          Json j = to_json(loop.graph);
          j["dangling_label"] = loop.dangling_label;
          j["essential"] = loop.graph.is_essential();
          out << j.dump(2) << "\n";
        } else {
          print_graph(out, loop.graph);
          out << "dangling forward label: " << loop.dangling_label
              << "\nessential: " << yes_no(loop.graph.is_essential()) << "\n";
        }
        return kExitOk;
      }
      FischerCover f = fischer_cover(g);
      std::optional<MultiplicityReport> mult;
      if (multiplicity > 0) mult = covering_multiplicity(g, multiplicity);
      if (config.format == Format::kDot) {
        out << to_dot(f.graph, "fischer " + g.to_string());
      } else if (json) {
        Json j = to_json(f.graph);
        j["n"] = f.n;
        j["p"] = f.p;
        j["right_resolving"] = right_resolving_check(f.graph);
        j["follower_separated"] = follower_separated_check(f.graph);
        j["symbolic_adjacency"] = format_symbolic_adjacency(f.graph);
        if (mult) j["multiplicity"] = to_json(*mult);
        out << j.dump(2) << "\n";
      } else {
        print_graph(out, f.graph);
        out << "symbolic adjacency:\n";
        for (const std::string& row : format_symbolic_adjacency(f.graph)) {
          out << "  " << row << "\n";
        }
        out << "right_resolving: " << yes_no(right_resolving_check(f.graph))
            << "\nfollower_separated: " << yes_no(follower_separated_check(f.graph)) << "\n";
        if (mult) {
          out << "max_preimages: " << mult->max_preimages << "\nwitnesses:";
          for (const MultiplicityWitness& w : mult->witnesses) {
            out << " (" << format_word(w.word) << ")";
          }
          out << "\n";
        }
      }
      return kExitOk;
    }

    if (app.got_subcommand(fiber)) {
      GeneratingSequence g = sequence_arg(seq);
      FiberProductCover c = fiber_product_cover(g);
      if (config.format == Format::kDot) {
        out << to_dot(c.graph, "fiber " + g.to_string());
      } else if (json) {
        out << to_json(c).dump(2) << "\n";
      } else {
        print_graph(out, c.graph);
        out << "involution:";
        for (VertexId v = 0; v < c.involution.size(); ++v) {
          if (c.involution[v] > v) {
            out << " " << c.graph.name(v) << "<->" << c.graph.name(c.involution[v]);
          }
        }
        out << "\ndiagonal:";
        for (VertexId v : c.diagonal) out << " " << c.graph.name(v);
        out << "\n";
        if (c.diagonal_only) out << "periodic: only the diagonal is essential\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(invariants)) {
      require_text_or_json(config.format, "invariants");
      GeneratingSequence g = sequence_arg(seq);
      ClosedFormReport r = verify_closed_forms(g);
      if (json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << "S: " << r.sums.S << "\nN: " << r.sums.N << "\nBF(A_F): " << r.bf_fischer.group_string()
            << "\ndet sign(A_F): " << (r.bf_fischer.det_sign < 0 ? "-" : r.bf_fischer.det_sign > 0 ? "+" : "0")
            << "\n";
        if (r.bf_fiber) out << "BF(A_P): " << r.bf_fiber->group_string() << "\n";
        if (r.expansion_digit_sum) out << "expansion digit sum: " << *r.expansion_digit_sum << "\n";
        out << "closed forms: " << (r.matches ? "match" : "MISMATCH") << "\n";
        for (const std::string& m : r.mismatches) out << "  " << m << "\n";
      }
      return r.matches ? kExitOk : kExitDomain;
    }

    if (app.got_subcommand(reduce_cmd)) {
      GeneratingSequence g = sequence_arg(seq);
      ReductionResult r = reduce_fiber_cover(g, config.emit_steps);
      if (config.format == Format::kDot) {
        if (config.emit_steps) {
          out << to_dot(r.start, "step 0");
          for (std::size_t i = 0; i < r.log.steps.size(); ++i) {
            out << to_dot(*r.log.steps[i].graph_after, "step " + std::to_string(i + 1));
          }
        } else {
          out << to_dot(r.graph, "reduced " + r.canonical.to_string());
        }
      } else if (json) {
        Json j{{"g", g.to_string()},
               {"canonical", r.canonical.to_string()},
               {"graph", to_json(r.graph)},
               {"log", to_json(r.log)},
               {"bf", to_json(bowen_franks(adjacency_matrix(r.graph)))},
               {"bf_preserved", r.log.bf_preserved()}};
        if (config.emit_steps) {
          Json graphs = Json::array();
          for (const ReductionStep& s : r.log.steps) graphs.push_back(to_json(*s.graph_after));
          j["steps"] = graphs;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "canonical: " << r.canonical.to_string() << "\nstart: " << r.start.vertex_count
            << " vertices, " << r.start.edges.size() << " edges\nlog:\n";
        for (const ReductionStep& s : r.log.steps) {
          out << "  " << (s.op == ReductionStep::Op::kContract ? "Contract" : "Amalgamate");
          for (VertexId v : s.args) out << " " << v;
          out << " -> " << s.vertices_after << " vertices, " << s.edges_after
              << " edges, BF " << s.bf_after.group_string() << "\n";
          if (config.emit_steps) out << to_dot(*s.graph_after);
        }
        print_graph(out, r.graph);
        out << "BF: " << bowen_franks(adjacency_matrix(r.graph)).group_string()
            << "\nbf_preserved: " << yes_no(r.log.bf_preserved()) << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(canonical)) {
      require_text_or_json(config.format, "canonical");
      GeneratingSequence g = sequence_arg(seq);
      CanonicalResult c = canonical_form(g);
      if (json) {
        out << Json{{"g", g.to_string()}, {"form", c.form.to_string()}, {"trace", to_json(c.trace)}}
                   .dump(2)
            << "\n";
      } else {
        out << "form: " << c.form.to_string() << "\ntrace:\n";
        print_trace(out, c.trace);
      }
      return kExitOk;
    }

    if (app.got_subcommand(compare_cmd)) {
      require_text_or_json(config.format, "compare");
      if (!batch.empty()) {
        if (!seq.empty()) throw UsageError("--batch takes no positional sequences");
        std::vector<BatchEntry> entries = run_batch(batch);
        bool failed = false;
        Json all = Json::array();
        for (const BatchEntry& e : entries) {
          failed = failed || !e.error.empty();
          if (json) {
            Json j = e.verdict ? to_json(*e.verdict) : Json{{"error", e.error}};
            j["pair"] = {e.a, e.b};
            all.push_back(std::move(j));
          } else {
            out << e.a << " " << e.b << " "
                << (e.verdict ? std::string(to_string(e.verdict->outcome)) : "error: " + e.error)
                << "\n";
          }
        }
        if (json) out << all.dump(2) << "\n";
        return failed ? kExitDomain : kExitOk;
      }
      if (seq.empty() || seq2.empty()) throw UsageError("compare needs SEQ1 SEQ2 or --batch FILE");
      Verdict v = compare(sequence_arg(seq), sequence_arg(seq2));
      if (json) {
        out << to_json(v).dump(2) << "\n";
      } else {
        out << "outcome: " << to_string(v.outcome) << "\nS: " << v.S1 << " " << v.S2
            << "\nclass: " << to_string(v.class1) << " " << to_string(v.class2) << "\n";
        if (v.witness) {
          out << "witness: " << v.witness->invariant << " " << v.witness->value1 << " vs "
              << v.witness->value2
              << (v.witness->background_theory ? " (standard theory: SFT-ness is a flow invariant)"
                                               : "")
              << "\n";
        }
        if (v.traces) {
          out << "common form: " << v.traces->first.end().to_string() << "\ntrace 1:\n";
          print_trace(out, v.traces->first);
          out << "trace 2:\n";
          print_trace(out, v.traces->second);
        }
        if (v.reduced_pair) {
          out << "reduced pair: " << v.reduced_pair->first.to_string() << " "
              << v.reduced_pair->second.to_string() << "\n";
        }
      }
      return kExitOk;
    }

    if (app.got_subcommand(equivariant)) {
      require_text_or_json(config.format, "equivariant");
      EquivariantReport r = equivariant_fiber_compare(sequence_arg(seq), sequence_arg(seq2));
      if (json) {
        out << Json{{"equivalent", r.equivalent},
                    {"S1", to_json(r.S1)},
                    {"S2", to_json(r.S2)},
                    {"reduced_isomorphic", r.reduced_isomorphic}}
                   .dump(2)
            << "\n";
      } else {
        out << "equivalent: " << yes_no(r.equivalent) << "\nS: " << r.S1 << " " << r.S2
            << "\nreduced_isomorphic: " << yes_no(r.reduced_isomorphic) << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(oracle)) {
      require_text_or_json(config.format, "oracle-check");
      GeneratingSequence g = sequence_arg(seq);
      LabeledGraph f = fischer_cover(g).graph;
      Json diff = Json::array();
      for (std::size_t l = 1; l <= len; ++l) {
        std::set<Word> paths = path_language(f, l);
        std::set<Word> factors;
        Word w(l, 0);
        for (;;) {
          if (is_factor(w, g)) factors.insert(w);
          std::size_t i = l;
          while (i > 0 && w[i - 1] == g.max_digit()) w[--i] = 0;
          if (i == 0) break;
          ++w[i - 1];
        }
        for (const Word& p : paths) {
          if (!factors.count(p)) diff.push_back("+" + format_word(p));
        }
        for (const Word& q : factors) {
          if (!paths.count(q)) diff.push_back("-" + format_word(q));
        }
      }
      if (json) {
        out << Json{{"g", g.to_string()}, {"len", len}, {"diff", diff}}.dump(2) << "\n";
      } else {
        for (const Json& d : diff) out << d.get<std::string>() << "\n";
      }
      return diff.empty() ? kExitOk : kExitDomain;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace betashift::cli
