// Command-line surface: parse/reduce, equality queries, quasimorphism
// estimation, swindle certification, quasi-norm suites, certificate
// verification, commutator-length search.
//
// Exit codes: 0 = true/accepted/success, 1 = false/rejected/violated,
// 2 = inconclusive (a budget ran out, never a mathematical answer),
// 3 = usage, parse, or domain errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "sclkit/autfree.hpp"
#include "sclkit/braid.hpp"
#include "sclkit/certify.hpp"
#include "sclkit/engine.hpp"
#include "sclkit/quasimorphism.hpp"
#include "sclkit/quasinorm.hpp"
#include "sclkit/report.hpp"
#include "sclkit/swindle.hpp"
#include "sclkit/word.hpp"

using namespace sclkit;

namespace {

struct CliState {
  std::string format = "table";
  std::string output;  // JSONL sink, appended to in addition to stdout
  int exit_code = 0;
};

void emit(CliState& st, const Report& rep) {
  std::cout << rep.render(st.format);
  if (!st.output.empty()) {
    std::ofstream out(st.output, std::ios::app);
    if (!out) throw DomainError("cannot open report file '" + st.output + "'");
    out << rep.to_json_line();
  }
}

Quasimorphism make_qm(const std::string& spec) {
  if (spec == "exp-sum") return builtin_exponent_sum();
  if (spec.rfind("brooks:", 0) == 0)
    return builtin_brooks(parse_word(spec.substr(7), Alphabet::Free));
  throw DomainError("unknown quasimorphism '" + spec + "' (expected exp-sum or brooks:<pattern>)");
}

PairSampler sampler_for(const Quasimorphism& f, std::uint64_t seed, int strands, int rank,
                        int max_len) {
  switch (f.tag()) {
    case GroupTag::Braid: return braid_pair_sampler(seed, strands, max_len);
    case GroupTag::Free: return free_pair_sampler(seed, rank, max_len);
    case GroupTag::Aut: break;
  }
  throw DomainError("no sampler for quasimorphism tag '" +
                    std::string(group_tag_name(f.tag())) + "'");
}

Alphabet qm_alphabet(const Quasimorphism& f) {
  return f.tag() == GroupTag::Braid ? Alphabet::Braid : Alphabet::Free;
}

double resolve_defect_bound(const Quasimorphism& f, double flag_value, bool flag_given,
                            std::uint64_t seed, int strands, int rank, int max_len,
                            std::uint64_t trials, Report& rep) {
  if (flag_given) {
    rep.set("defect_bound_source", "flag");
    return flag_value;
  }
  const DefectEstimate est =
      defect_estimate(f, sampler_for(f, seed, strands, rank, max_len), trials);
  rep.set("defect_bound_source", "estimate over " + std::to_string(trials) + " samples");
  return est.value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

BraidContext make_ctx(int strands, std::uint64_t budget) {
  return strands == 0 ? BraidContext::infinite(budget) : BraidContext::strands(strands, budget);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-theory toolkit: braid and free-group words, quasimorphisms,\n"
               "commutator swindle certificates, quasi-norm audits"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file merged under explicit flags");

  CliState st;
  app.add_option("--format", st.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--output", st.output, "append the JSON record to this file as well");

  // ---- reduce ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("reduce", "freely reduce a word, or handle-reduce a braid word");
    auto word = std::make_shared<std::string>();
    auto group = std::make_shared<std::string>("free");
    auto strands = std::make_shared<int>(0);
    auto budget = std::make_shared<std::uint64_t>(kDefaultReductionBudget);
    sub->add_option("word", *word, "the word to reduce")->required();
    sub->add_option("--group", *group)->check(CLI::IsMember({"free", "braid", "aut"}));
    sub->add_option("--strands", *strands, "strand count, 0 = infinite")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", *budget)->envname("SCLKIT_BUDGET");
    sub->callback([&st, word, group, strands, budget] {
      const GroupTag tag = parse_group_tag(*group);
      Report rep("reduce");
      rep.set("group", *group).set("input", *word);
      if (tag == GroupTag::Braid) {
        const Word w = parse_word(*word, Alphabet::Braid);
        const Word r = handle_reduce(w, make_ctx(*strands, *budget));
        rep.set("reduced", render_word(r)).set("trivial", r.empty());
      } else {
        const Alphabet fam = tag == GroupTag::Free ? Alphabet::Free : Alphabet::Abstract;
        const Word w = parse_word(*word, fam);
        rep.set("reduced", render_word(w)).set("trivial", w.empty());
      }
      emit(st, rep);
    });
  }

  // ---- equal -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("equal", "decide equality in the chosen group");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto group = std::make_shared<std::string>("free");
    auto strands = std::make_shared<int>(0);
    auto rank = std::make_shared<int>(2);
    auto budget = std::make_shared<std::uint64_t>(kDefaultReductionBudget);
    sub->add_option("left", *left)->required();
    sub->add_option("right", *right)->required();
    sub->add_option("--group", *group)->check(CLI::IsMember({"free", "braid", "aut"}));
    sub->add_option("--strands", *strands, "strand count, 0 = infinite")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--rank", *rank, "rank for aut generator words");
    sub->add_option("--budget", *budget)->envname("SCLKIT_BUDGET");
    sub->callback([&st, left, right, group, strands, rank, budget] {
      const GroupTag tag = parse_group_tag(*group);
      Report rep("equal");
      rep.set("group", *group).set("left", *left).set("right", *right);
      bool equal = false;
      if (tag == GroupTag::Aut) {
        equal = aut_equal(parse_aut_generator_word(*left, *rank),
                          parse_aut_generator_word(*right, *rank));
      } else {
        const Alphabet fam = tag == GroupTag::Free ? Alphabet::Free : Alphabet::Braid;
        const EngineContext ctx =
            tag == GroupTag::Free ? EngineContext::free_group()
                                  : EngineContext::braid_group(make_ctx(*strands, *budget));
        equal = engine_equal(parse_word(*left, fam), parse_word(*right, fam), ctx);
      }
      rep.set("equal", equal);
      emit(st, rep);
      st.exit_code = equal ? 0 : 1;
    });
  }

  // ---- qm homogenize / qm defect --------------------------------------
  {
    auto* qm = app.add_subcommand("qm", "quasimorphism estimation");
    qm->require_subcommand(1);

    auto* hom = qm->add_subcommand("homogenize", "phi_N(g) = f(g^N)/N with error bound");
    auto spec = std::make_shared<std::string>();
    auto gword = std::make_shared<std::string>();
    auto big_n = std::make_shared<int>(16);
    auto dbound = std::make_shared<double>(0);
    auto trials = std::make_shared<std::uint64_t>(1000);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto strands = std::make_shared<int>(4);
    auto rank = std::make_shared<int>(2);
    auto max_len = std::make_shared<int>(12);
    auto* dopt = hom->add_option("--defect-bound", *dbound,
                                 "defect bound for the error term (default: estimate)");
    hom->add_option("--qm", *spec, "exp-sum or brooks:<pattern>")->required();
    hom->add_option("--g", *gword, "the word to homogenize at")->required();
    hom->add_option("--N", *big_n)->check(CLI::PositiveNumber);
    hom->add_option("--trials", *trials);
    hom->add_option("--seed", *seed);
    hom->add_option("--strands", *strands);
    hom->add_option("--rank", *rank);
    hom->add_option("--max-len", *max_len);
    hom->callback([&st, spec, gword, big_n, dbound, dopt, trials, seed, strands, rank, max_len] {
      const Quasimorphism f = make_qm(*spec);
      const Word g = parse_word(*gword, qm_alphabet(f));
      Report rep("qm-homogenize");
      rep.set("qm", f.name()).set("g", render_word(g)).set("N", *big_n);
      const double bound = resolve_defect_bound(f, *dbound, dopt->count() > 0, *seed, *strands,
                                                *rank, *max_len, *trials, rep);
      const HomogenizationEstimate est = homogenize_estimate(f, g, *big_n, bound);
      rep.set("value", est.value)
          .set("error_bound", est.error_bound)
          .set("defect_bound_used", est.defect_bound_used);
      emit(st, rep);
    });

    auto* def = qm->add_subcommand("defect", "sampled defect lower bound with witness");
    auto dspec = std::make_shared<std::string>();
    auto dtrials = std::make_shared<std::uint64_t>(1000);
    auto dseed = std::make_shared<std::uint64_t>(0);
    auto dstrands = std::make_shared<int>(4);
    auto drank = std::make_shared<int>(2);
    auto dmax_len = std::make_shared<int>(12);
    auto dserial = std::make_shared<bool>(false);
    def->add_option("--qm", *dspec, "exp-sum or brooks:<pattern>")->required();
    def->add_option("--trials", *dtrials);
    def->add_option("--seed", *dseed);
    def->add_option("--strands", *dstrands);
    def->add_option("--rank", *drank);
    def->add_option("--max-len", *dmax_len);
    def->add_flag("--serial", *dserial, "run the serial reference implementation");
    def->callback([&st, dspec, dtrials, dseed, dstrands, drank, dmax_len, dserial] {
      const Quasimorphism f = make_qm(*dspec);
      const PairSampler sampler = sampler_for(f, *dseed, *dstrands, *drank, *dmax_len);
      const DefectEstimate est = *dserial ? defect_estimate_serial(f, sampler, *dtrials)
                                          : defect_estimate(f, sampler, *dtrials);
      Report rep("qm-defect");
      rep.set("qm", f.name())
          .set("trials", est.trials)
          .set("defect_lower_bound", est.value);
      if (est.witness) {
        rep.set("witness_x", render_word(est.witness->first));
        rep.set("witness_y", render_word(est.witness->second));
      }
      emit(st, rep);
    });
  }

  // ---- swindle certify / swindle bound --------------------------------
  {
    auto* sw = app.add_subcommand("swindle", "commuting-copies commutator swindle");
    sw->require_subcommand(1);

    auto* cert = sw->add_subcommand("certify", "emit a replayable certificate (.gcert)");
    auto group = std::make_shared<std::string>("braid");
    auto base = std::make_shared<int>(3);
    auto copies = std::make_shared<int>(2);
    auto xs = std::make_shared<std::string>();
    auto ys = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto budget = std::make_shared<std::uint64_t>(kDefaultReductionBudget);
    cert->add_option("--group", *group)->check(CLI::IsMember({"braid", "aut"}));
    cert->add_option("--base-size", *base, "strands per block / rank per block")
        ->check(CLI::PositiveNumber);
    cert->add_option("--copies", *copies)->check(CLI::PositiveNumber);
    cert->add_option("--x", *xs, "base word (braid) or generator word (aut)")->required();
    cert->add_option("--y", *ys)->required();
    cert->add_option("--out", *out, "certificate file to write")->required();
    cert->add_option("--budget", *budget)->envname("SCLKIT_BUDGET");
    cert->callback([&st, group, base, copies, xs, ys, out, budget] {
      Certificate c;
      if (*group == "braid") {
        const CommutingFamily fam = build_braid_family(*base, *copies);
        c = swindle_certificate(fam, parse_word(*xs, Alphabet::Braid),
                                parse_word(*ys, Alphabet::Braid), *budget);
      } else {
        const CommutingFamily fam = build_aut_family(*base, *copies);
        c = swindle_certificate(fam, parse_aut_generator_word(*xs, *base),
                                parse_aut_generator_word(*ys, *base));
      }
      const Verdict v = verify(c);
      write_file(*out, serialize(c));
      Report rep("swindle-certify");
      rep.set("group", *group)
          .set("base_size", *base)
          .set("copies", *copies)
          .set("claim_left", render_word(c.claim.first))
          .set("claim_right", render_word(c.claim.second))
          .set("steps", c.steps.size())
          .set("verdict", v.accepted() ? "accepted" : "NOT ACCEPTED")
          .set("file", *out);
      emit(st, rep);
      st.exit_code = v.accepted() ? 0 : 1;
    });

    auto* bound = sw->add_subcommand("bound", "the vanishing estimate the swindle forces");
    auto bqm = std::make_shared<std::string>("exp-sum");
    auto bbase = std::make_shared<int>(3);
    auto bcopies = std::make_shared<int>(2);
    auto bxs = std::make_shared<std::string>();
    auto bys = std::make_shared<std::string>();
    auto bn = std::make_shared<int>(16);
    auto bdefect = std::make_shared<double>(0);
    auto btrials = std::make_shared<std::uint64_t>(1000);
    auto bseed = std::make_shared<std::uint64_t>(0);
    auto bmax_len = std::make_shared<int>(12);
    auto* bdopt = bound->add_option("--defect-bound", *bdefect,
                                    "defect bound to plug in (default: estimate)");
    bound->add_option("--qm", *bqm, "exp-sum or brooks:<pattern> (braid families)");
    bound->add_option("--base-size", *bbase)->check(CLI::PositiveNumber);
    bound->add_option("--copies", *bcopies)->check(CLI::PositiveNumber);
    bound->add_option("--x", *bxs)->required();
    bound->add_option("--y", *bys)->required();
    bound->add_option("--N", *bn)->check(CLI::PositiveNumber);
    bound->add_option("--trials", *btrials);
    bound->add_option("--seed", *bseed);
    bound->add_option("--max-len", *bmax_len);
    bound->callback([&st, bqm, bbase, bcopies, bxs, bys, bn, bdefect, bdopt, btrials, bseed,
                     bmax_len] {
      const Quasimorphism f = make_qm(*bqm);
      if (f.tag() != GroupTag::Braid)
        throw DomainError("swindle bound on the command line needs a braid-tagged quasimorphism");
      const CommutingFamily fam = build_braid_family(*bbase, *bcopies);
      const Word x = parse_word(*bxs, Alphabet::Braid);
      const Word y = parse_word(*bys, Alphabet::Braid);
      Report rep("swindle-bound");
      rep.set("qm", f.name()).set("copies", *bcopies).set("N", *bn);
      const double db = resolve_defect_bound(f, *bdefect, bdopt->count() > 0, *bseed, *bbase,
                                             2, *bmax_len, *btrials, rep);
      const SwindleBound b = swindle_quasimorphism_bound(f, fam, x, y, *bn, db);
      rep.set("phi_commutator", b.phi_commutator)
          .set("lhs", b.lhs)
          .set("defect_term", b.defect_term)
          .set("epsilon_term", b.epsilon_term)
          .set("slack_term", b.slack_term)
          .set("rhs", b.rhs)
          .set("holds", b.holds);
      emit(st, rep);
      st.exit_code = b.holds ? 0 : 1;
    });
  }

  // ---- quasinorm suite -------------------------------------------------
  {
    auto* qn = app.add_subcommand("quasinorm", "quasi-norm audits");
    auto* suite = qn->add_subcommand("suite", "subadditivity, conjugacy deviation, unboundedness");
    auto norm = std::make_shared<std::string>("braid");
    auto strands = std::make_shared<int>(8);
    auto max_len = std::make_shared<int>(20);
    auto rank = std::make_shared<int>(6);
    auto max_factors = std::make_shared<int>(8);
    auto trials = std::make_shared<std::uint64_t>(1000);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto budget = std::make_shared<std::uint64_t>(kDefaultReductionBudget);
    auto serial = std::make_shared<bool>(false);
    suite->add_option("--norm", *norm)->check(CLI::IsMember({"braid", "aut"}));
    suite->add_option("--strands", *strands)->check(CLI::PositiveNumber);
    suite->add_option("--max-len", *max_len)->check(CLI::PositiveNumber);
    suite->add_option("--rank", *rank)->check(CLI::PositiveNumber);
    suite->add_option("--max-factors", *max_factors)->check(CLI::PositiveNumber);
    suite->add_option("--trials", *trials);
    suite->add_option("--seed", *seed);
    suite->add_option("--budget", *budget)->envname("SCLKIT_BUDGET");
    suite->add_flag("--serial", *serial, "run the serial reference implementation");
    suite->callback([&st, norm, strands, max_len, rank, max_factors, trials, seed, budget,
                     serial] {
      QuasiNormReport qr;
      if (*norm == "braid") {
        const BraidContext ctx = BraidContext::strands(*strands, *budget);
        qr = *serial ? braid_norm_suite_serial(ctx, *strands, *max_len, *trials, *seed)
                     : braid_norm_suite(ctx, *strands, *max_len, *trials, *seed);
      } else {
        qr = *serial ? aut_norm_suite_serial(*rank, *max_factors, *trials, *seed)
                     : aut_norm_suite(*rank, *max_factors, *trials, *seed);
      }
      Report rep("quasinorm-suite");
      rep.set("norm", qr.name)
          .set("samples", qr.samples)
          .set("subadditivity_violations", qr.subadditivity_violations)
          .set("conjugacy_deviation_max", qr.conjugacy_deviation_max)
          .set("unboundedness_witnesses", qr.unboundedness_witnesses)
          .set("witnesses_increasing", qr.witnesses_increasing);
      emit(st, rep);
      st.exit_code = qr.subadditivity_violations == 0 && qr.witnesses_increasing ? 0 : 1;
    });
  }

  // ---- cert verify -----------------------------------------------------
  {
    auto* ct = app.add_subcommand("cert", "certificate operations");
    auto* ver = ct->add_subcommand("verify", "replay a .gcert equality certificate");
    auto path = std::make_shared<std::string>();
    auto serial = std::make_shared<bool>(false);
    ver->add_option("file", *path, "certificate file")->required();
    ver->add_flag("--serial", *serial, "run the serial reference verifier");
    ver->callback([&st, path, serial] {
      const Certificate c = deserialize(read_file(*path));
      const Verdict v = *serial ? verify_serial(c) : verify(c);
      Report rep("cert-verify");
      rep.set("file", *path)
          .set("group", std::string(group_tag_name(c.group_tag)))
          .set("steps", c.steps.size());
      switch (v.status) {
        case VerdictStatus::Accepted:
          rep.set("verdict", "accepted");
          st.exit_code = 0;
          break;
        case VerdictStatus::Rejected:
          rep.set("verdict", "rejected").set("step", v.step_index).set("reason", v.reason);
          st.exit_code = 1;
          break;
        case VerdictStatus::Inconclusive:
          rep.set("verdict", "inconclusive").set("step", v.step_index).set("reason", v.reason);
          st.exit_code = 2;
          break;
      }
      emit(st, rep);
    });
  }

  // ---- cl search -------------------------------------------------------
  {
    auto* cl = app.add_subcommand("cl", "commutator length");
    auto* search = cl->add_subcommand("search", "upper bound by exhaustive factorization search");
    auto wtext = std::make_shared<std::string>();
    auto kmax = std::make_shared<int>(2);
    auto cap = std::make_shared<int>(8);
    auto budget = std::make_shared<std::uint64_t>(kDefaultClBudget);
    auto out = std::make_shared<std::string>();
    auto serial = std::make_shared<bool>(false);
    search->add_option("--w", *wtext, "free word to factor")->required();
    search->add_option("--kmax", *kmax)->check(CLI::PositiveNumber);
    search->add_option("--L", *cap, "entry length cap")->check(CLI::PositiveNumber);
    search->add_option("--budget", *budget)->envname("SCLKIT_BUDGET");
    search->add_option("--out", *out, "write the factorization certificate here");
    search->add_flag("--serial", *serial, "run the serial reference search");
    search->callback([&st, wtext, kmax, cap, budget, out, serial] {
      const Word w = parse_word(*wtext, Alphabet::Free);
      const ClSearchResult res = *serial ? cl_upper_search_serial(w, *kmax, *cap, *budget)
                                         : cl_upper_search(w, *kmax, *cap, *budget);
      Report rep("cl-search");
      rep.set("w", render_word(w)).set("kmax", *kmax).set("entry_cap", *cap);
      switch (res.status) {
        case SearchStatus::Found: {
          rep.set("status", "found").set("cl_upper_bound", *res.commutator_count);
          std::vector<std::string> entries;
          for (const auto& [a, b] : res.factorization) {
            entries.push_back(render_word(a));
            entries.push_back(render_word(b));
          }
          rep.set("entries", entries);
          if (!out->empty()) {
            write_file(*out, serialize(factorization_certificate(w, res.factorization)));
            rep.set("file", *out);
          }
          st.exit_code = 0;
          break;
        }
        case SearchStatus::NoneFound:
          rep.set("status", "none-found");
          st.exit_code = 1;
          break;
        case SearchStatus::BudgetExhausted:
          rep.set("status", "budget-exhausted");
          st.exit_code = 2;
          break;
      }
      rep.set("candidates_tried", res.candidates_tried);
      emit(st, rep);
    });
  }

  // Let global switches (--format, --output, --config) appear after the
  // subcommand as well.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
      s->fallthrough();
      enable_fallthrough(s);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  } catch (const BudgetExceededError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NoEngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return st.exit_code;
}
