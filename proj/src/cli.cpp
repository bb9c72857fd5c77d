#include "ordercalc/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordercalc/braid.hpp"
#include "ordercalc/conradian.hpp"
#include "ordercalc/json_io.hpp"
#include "ordercalc/order_space.hpp"

namespace ordercalc {

namespace {

constexpr const char* kSchema = "ordercalc/1";

struct CliState {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  int exit_code = 0;

  void emit(const std::string& command, ordered_json body, const std::string& text) {
    if (json) {
      ordered_json doc;
      doc["schema"] = kSchema;
      doc["command"] = command;
      for (auto& [k, v] : body.items()) doc[k] = v;
      out << doc.dump(2) << "\n";
    } else {
      out << text;
    }
  }
};

std::string report_text(const VerificationReport& r) {
  switch (r.status) {
    case VerificationReport::Status::ExactVerified:
      return "exact-verified";
    case VerificationReport::Status::VerifiedUpTo:
      return "verified up to n = " + std::to_string(r.n_max);
    case VerificationReport::Status::Refuted: {
      std::string s = "refuted: condition " + std::to_string(r.refutation->condition) +
                      " (" + r.refutation->comparison;
      if (r.refutation->witness_n) s += " at n = " + std::to_string(*r.refutation->witness_n);
      return s + ")";
    }
  }
  return "?";
}

CrossingCandidate parse_candidate_arg(const std::string& text, const GroupTag& tag) {
  return candidate_from_json(nlohmann::json::parse(text), tag);
}

void add_compare(CLI::App& app, CliState& st) {
  auto* cmd = app.add_subcommand("compare", "Compare two words under an ordering");
  auto order = std::make_shared<std::string>();
  auto words = std::make_shared<std::vector<std::string>>();
  cmd->add_option("--order", *order, "ordering designator")->required();
  cmd->add_option("words", *words, "two words")->expected(2);
  cmd->callback([&st, order, words] {
    const OrderingHandle ord = parse_ordering(*order);
    const Word u = Word::parse((*words)[0], ord->tag());
    const Word v = Word::parse((*words)[1], ord->tag());
    const Sign s = compare(ord, u, v);
    const char* rel = s == Sign::Positive ? "≺" : (s == Sign::Negative ? "≻" : "=");
    ordered_json body;
    body["ordering"] = ord->designator();
    body["left"] = u.str();
    body["right"] = v.str();
    body["relation"] = s == Sign::Positive ? "<" : (s == Sign::Negative ? ">" : "=");
    st.emit("compare", body, u.str() + " " + rel + " " + v.str() + "\n");
  });
}

void add_reduce(CLI::App& app, CliState& st) {
  auto* cmd = app.add_subcommand("reduce", "Handle-reduce a braid word");
  auto strands = std::make_shared<int>(3);
  auto max_steps = std::make_shared<long long>(kDefaultHandleBudget);
  auto word = std::make_shared<std::string>();
  cmd->add_option("--strands", *strands, "strand count")->capture_default_str();
  cmd->add_option("--max-steps", *max_steps, "reduction step budget")->capture_default_str();
  cmd->add_option("word", *word, "braid word")->required();
  cmd->callback([&st, strands, max_steps, word] {
    const Word w = Word::parse(*word, GroupTag::braid(*strands));
    const Word reduced = handle_reduce(w, *max_steps);
    ordered_json body;
    body["input"] = w.str();
    body["reduced"] = reduced.str();
    st.emit("reduce", body, reduced.str() + "\n");
  });
}

void add_classify(CLI::App& app, CliState& st) {
  auto* cmd = app.add_subcommand("classify", "Sigma-classify a braid word");
  auto strands = std::make_shared<int>(3);
  auto word = std::make_shared<std::string>();
  cmd->add_option("--strands", *strands, "strand count")->capture_default_str();
  cmd->add_option("word", *word, "braid word")->required();
  cmd->callback([&st, strands, word] {
    const Word w = Word::parse(*word, GroupTag::braid(*strands));
    const SigmaClass cls = sigma_classify(w);
    std::string kind;
    switch (cls.kind) {
      case SigmaClass::Kind::Trivial: kind = "trivial"; break;
      case SigmaClass::Kind::IPositive: kind = std::to_string(cls.index) + "-positive"; break;
      case SigmaClass::Kind::INegative: kind = std::to_string(cls.index) + "-negative"; break;
    }
    ordered_json body;
    body["input"] = w.str();
    body["class"] = kind;
    body["reduced"] = cls.reduced.str();
    st.emit("classify", body, kind + " (" + cls.reduced.str() + ")\n");
  });
}

void add_crossing(CLI::App& app, CliState& st) {
  auto* cmd = app.add_subcommand("crossing", "Verify, transform, construct, search crossings");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand("verify", "Verify a crossing candidate up to a bound");
    auto order = std::make_shared<std::string>();
    auto nmax = std::make_shared<int>(kDefaultConditionBound);
    auto cand = std::make_shared<std::string>();
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("--nmax", *nmax, "per-exponent bound")->capture_default_str();
    sub->add_option("candidate", *cand, "candidate JSON")->required();
    sub->callback([&st, order, nmax, cand] {
      const OrderingHandle ord = parse_ordering(*order);
      const CrossingCandidate c = parse_candidate_arg(*cand, ord->tag());
      const VerificationReport rep = verify_crossing(ord, c, *nmax);
      ordered_json body;
      body["candidate"] = candidate_to_json(c);
      body["report"] = report_to_json(rep);
      st.emit("crossing verify", body, report_text(rep) + "\n");
      if (!rep.ok()) st.exit_code = 1;
    });
  }
  {
    auto* sub = cmd->add_subcommand("convert", "Convert to a reinforced crossing and verify");
    auto order = std::make_shared<std::string>();
    auto cand = std::make_shared<std::string>();
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("candidate", *cand, "candidate JSON")->required();
    sub->callback([&st, order, cand] {
      const OrderingHandle ord = parse_ordering(*order);
      const CrossingCandidate c = parse_candidate_arg(*cand, ord->tag());
      const ReinforcedCandidate rc = to_reinforced(c);
      const VerificationReport rep = verify_reinforced(ord, rc);
      ordered_json body;
      body["reinforced"] = candidate_to_json(rc);
      body["report"] = report_to_json(rep);
      st.emit("crossing convert", body,
              candidate_to_json(rc).dump() + "\n" + report_text(rep) + "\n");
      if (!rep.ok()) st.exit_code = 1;
    });
  }
  {
    auto* sub = cmd->add_subcommand("search", "Search for verified crossings over a ball");
    auto order = std::make_shared<std::string>();
    auto bounds = std::make_shared<SearchBounds>();
    auto limit = std::make_shared<int>(10);
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("--radius", bounds->ball_radius, "ball radius")->capture_default_str();
    sub->add_option("--max-m", bounds->max_m, "max witness M")->capture_default_str();
    sub->add_option("--max-n", bounds->max_n, "max witness N")->capture_default_str();
    sub->add_option("--nmax", bounds->n_max, "per-exponent bound")->capture_default_str();
    sub->add_option("--limit", *limit, "max results")->capture_default_str();
    sub->callback([&st, order, bounds, limit] {
      const OrderingHandle ord = parse_ordering(*order);
      const auto results = search_crossings(ord, *bounds, *limit);
      ordered_json body;
      body["found"] = results.size();
      ordered_json arr = ordered_json::array();
      std::string text = "found " + std::to_string(results.size()) + " crossing(s)\n";
      for (const SearchResult& r : results) {
        ordered_json row;
        row["candidate"] = candidate_to_json(r.candidate);
        row["report"] = report_to_json(r.report);
        arr.push_back(std::move(row));
        text += candidate_to_json(r.candidate).dump() + "  " + report_text(r.report) + "\n";
      }
      body["results"] = std::move(arr);
      st.emit("crossing search", body, text);
    });
  }
  {
    auto* sub = cmd->add_subcommand(
        "from-witness", "Build the crossing determined by a non-Conradian pair f, g");
    auto order = std::make_shared<std::string>();
    auto words = std::make_shared<std::vector<std::string>>();
    auto n2 = std::make_shared<bool>(false);
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_flag("--n2", *n2, "use the (f, fg, 1, fg, g) construction");
    sub->add_option("words", *words, "f and g")->expected(2);
    sub->callback([&st, order, words, n2] {
      const OrderingHandle ord = parse_ordering(*order);
      const Word f = Word::parse((*words)[0], ord->tag());
      const Word g = Word::parse((*words)[1], ord->tag());
      const CrossingCandidate c = *n2 ? crossing_from_n2_violation(ord, f, g)
                                      : crossing_from_nonconradian(ord, f, g);
      ordered_json body;
      body["candidate"] = candidate_to_json(c);
      st.emit("crossing from-witness", body, candidate_to_json(c).dump() + "\n");
    });
  }
  {
    auto* sub = cmd->add_subcommand(
        "to-witness", "Extract the non-Conradian witness pair from a verified crossing");
    auto order = std::make_shared<std::string>();
    auto nmax = std::make_shared<int>(kDefaultConditionBound);
    auto cand = std::make_shared<std::string>();
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("--nmax", *nmax, "per-exponent bound")->capture_default_str();
    sub->add_option("candidate", *cand, "candidate JSON")->required();
    sub->callback([&st, order, nmax, cand] {
      const OrderingHandle ord = parse_ordering(*order);
      const CrossingCandidate c = parse_candidate_arg(*cand, ord->tag());
      const WitnessPair p = nonconradian_from_crossing(ord, c, *nmax);
      ordered_json body;
      body["witness"] = witness_pair_to_json(p);
      st.emit("crossing to-witness", body,
              "h = " + p.h.str() + ", h_bar = " + p.h_bar.str() + ", checked n <= " +
                  std::to_string(p.n_checked) + "\n");
    });
  }
  {
    auto* sub = cmd->add_subcommand("refine",
                                    "Refine a crossing between two prescribed elements");
    auto order = std::make_shared<std::string>();
    auto h1 = std::make_shared<std::string>();
    auto h2 = std::make_shared<std::string>();
    auto nmax = std::make_shared<int>(kDefaultConditionBound);
    auto cand = std::make_shared<std::string>();
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("--h1", *h1, "lower element")->required();
    sub->add_option("--h2", *h2, "upper element")->required();
    sub->add_option("--nmax", *nmax, "per-exponent bound")->capture_default_str();
    sub->add_option("candidate", *cand, "candidate JSON")->required();
    sub->callback([&st, order, h1, h2, nmax, cand] {
      const OrderingHandle ord = parse_ordering(*order);
      const CrossingCandidate c = parse_candidate_arg(*cand, ord->tag());
      const CrossingCandidate refined = refine_between(
          ord, c, Word::parse(*h1, ord->tag()), Word::parse(*h2, ord->tag()), *nmax);
      ordered_json body;
      body["candidate"] = candidate_to_json(refined);
      st.emit("crossing refine", body, candidate_to_json(refined).dump() + "\n");
    });
  }
}

void add_soul(CLI::App& app, CliState& st) {
  auto* cmd = app.add_subcommand("soul", "Bounded approximation of the Conradian soul");
  auto order = std::make_shared<std::string>();
  auto radius = std::make_shared<int>(2);
  auto bounds = std::make_shared<SearchBounds>(SearchBounds{3, 4, 4, 10});
  auto threads = std::make_shared<int>(1);
  cmd->add_option("--order", *order, "ordering designator")->required();
  cmd->add_option("--radius", *radius, "ball radius to classify")->capture_default_str();
  cmd->add_option("--ball-radius", bounds->ball_radius, "search ball radius")
      ->capture_default_str();
  cmd->add_option("--max-m", bounds->max_m, "max witness M")->capture_default_str();
  cmd->add_option("--max-n", bounds->max_n, "max witness N")->capture_default_str();
  cmd->add_option("--nmax", bounds->n_max, "per-exponent bound")->capture_default_str();
  cmd->add_option("--threads", *threads, "worker threads")->capture_default_str();
  cmd->callback([&st, order, radius, bounds, threads] {
    const OrderingHandle ord = parse_ordering(*order);
    const SoulApproximation soul = soul_approximation(ord, *radius, *bounds, *threads);
    ordered_json body = soul_to_json(soul);
    std::string text = "retained (bounded evidence only, no certificate found):";
    for (const Word& w : soul.retained) text += " " + w.str();
    text += "\nexcluded:";
    for (const auto& [h, cert] : soul.excluded) text += " " + h.str();
    text += "\nnote: retention is bounded evidence only\n";
    st.emit("soul", body, text);
  });
}

void add_space(CLI::App& app, CliState& st) {
  auto* cmd = app.add_subcommand("space", "Finite approximations of the space of orderings");
  cmd->require_subcommand(1);
  {
    auto* sub = cmd->add_subcommand("fingerprint", "Sign vector over a ball");
    auto order = std::make_shared<std::string>();
    auto radius = std::make_shared<int>(3);
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("--radius", *radius, "ball radius")->capture_default_str();
    sub->callback([&st, order, radius] {
      const OrderingHandle ord = parse_ordering(*order);
      const BallFingerprint fp = fingerprint(ord, *radius);
      ordered_json body = fingerprint_to_json(fp);
      body["ordering"] = ord->designator();
      std::string text;
      for (const auto& [w, s] : fp.signs()) text += w.str() + ": " + sign_char(s) + "\n";
      st.emit("space fingerprint", body, text);
    });
  }
  {
    auto* sub = cmd->add_subcommand("orbit", "Fingerprints of all conjugates over a ball");
    auto order = std::make_shared<std::string>();
    auto conj_radius = std::make_shared<int>(2);
    auto fp_radius = std::make_shared<int>(2);
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("--conj-radius", *conj_radius, "conjugator ball radius")
        ->capture_default_str();
    sub->add_option("--fp-radius", *fp_radius, "fingerprint radius")->capture_default_str();
    sub->callback([&st, order, conj_radius, fp_radius] {
      const OrderingHandle ord = parse_ordering(*order);
      const OrbitReport report = conjugate_orbit_fingerprints(ord, *conj_radius, *fp_radius);
      ordered_json body = orbit_to_json(report);
      std::string text =
          "distinct fingerprints: " + std::to_string(report.distinct_count) + "\n";
      for (const OrbitEntry& e : report.entries)
        text += e.conjugator.str() + " -> class " + std::to_string(e.fp_class) + "\n";
      st.emit("space orbit", body, text);
    });
  }
  {
    auto* sub = cmd->add_subcommand("agreement", "Largest radius where two orderings agree");
    auto order = std::make_shared<std::string>();
    auto other = std::make_shared<std::string>();
    auto max_radius = std::make_shared<int>(4);
    sub->add_option("--order", *order, "first ordering")->required();
    sub->add_option("--other", *other, "second ordering")->required();
    sub->add_option("--max-radius", *max_radius, "radius cap")->capture_default_str();
    sub->callback([&st, order, other, max_radius] {
      const OrderingHandle a = parse_ordering(*order);
      const OrderingHandle b = parse_ordering(*other);
      const int r = agreement_radius(a, b, *max_radius);
      ordered_json body;
      body["agreement_radius"] = r;
      body["max_radius"] = *max_radius;
      st.emit("space agreement", body, std::to_string(r) + "\n");
    });
  }
}

void add_experiment(CLI::App& app, CliState& st) {
  auto* cmd = app.add_subcommand("experiment", "Finite certified experiments");
  cmd->require_subcommand(1);

  auto finish = [&st](const ExperimentReport& report) {
    ordered_json body = experiment_to_json(report);
    std::string text = report.experiment + ": " + (report.pass ? "pass" : "fail");
    if (!report.pass) text += " (" + report.fail_witness + ")";
    st.emit("experiment", body, text + "\n");
    if (!report.pass) st.exit_code = 1;
  };

  {
    auto* sub = cmd->add_subcommand(
        "rigidity", "Conjugates of the exotic ordering never re-enter U_{y^-1}");
    auto conj_radius = std::make_shared<int>(3);
    auto check_radius = std::make_shared<int>(3);
    sub->add_option("--conj-radius", *conj_radius, "conjugator ball radius")
        ->capture_default_str();
    sub->add_option("--check-radius", *check_radius, "fingerprint radius")
        ->capture_default_str();
    sub->callback([finish, conj_radius, check_radius] {
      finish(rigidity_experiment(*conj_radius, *check_radius));
    });
  }
  {
    auto* sub = cmd->add_subcommand(
        "convex", "Any convex subgroup with a 1-positive element contains x");
    auto radius = std::make_shared<int>(3);
    sub->add_option("--radius", *radius, "ball radius")->capture_default_str();
    sub->callback([finish, radius] { finish(convex_subgroup_experiment(*radius)); });
  }
  {
    auto* sub = cmd->add_subcommand("klein", "The four Klein cone orderings, certified");
    auto radius = std::make_shared<int>(5);
    sub->add_option("--radius", *radius, "fingerprint radius")->capture_default_str();
    sub->callback([finish, radius] { finish(klein_enumeration(*radius)); });
  }
  {
    auto* sub = cmd->add_subcommand(
        "primero", "Sign predictions for the two distinguishing conjugates");
    auto order = std::make_shared<std::string>();
    auto family = std::make_shared<std::vector<std::string>>();
    auto nmax = std::make_shared<int>(kDefaultConditionBound);
    auto cand = std::make_shared<std::string>();
    sub->add_option("--order", *order, "ordering designator")->required();
    sub->add_option("--family", *family, "positive family members")->required();
    sub->add_option("--nmax", *nmax, "per-exponent bound")->capture_default_str();
    sub->add_option("candidate", *cand, "candidate JSON")->required();
    sub->callback([finish, order, family, nmax, cand] {
      const OrderingHandle ord = parse_ordering(*order);
      const CrossingCandidate c = parse_candidate_arg(*cand, ord->tag());
      std::vector<Word> fam;
      for (const std::string& f : *family) fam.push_back(Word::parse(f, ord->tag()));
      finish(primero_perturbation(ord, c, fam, *nmax));
    });
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ordercalc: exact computation with left-invariant group orderings"};
  app.require_subcommand(1);

  CliState st{out, err};
  app.add_flag("--json", st.json, "emit one JSON document on stdout");

  add_compare(app, st);
  add_reduce(app, st);
  add_classify(app, st);
  add_crossing(app, st);
  add_soul(app, st);
  add_space(app, st);
  add_experiment(app, st);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return st.exit_code;
}

}  // namespace ordercalc
