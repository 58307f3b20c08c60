// extfair: exact fairness checking, MMS computation, and allocation for
// indivisible items under two-sided (2-D) externalities.
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "extfair/allocators.hpp"
#include "extfair/gen.hpp"
#include "extfair/io.hpp"
#include "extfair/mms.hpp"
#include "extfair/notions.hpp"
#include "extfair/paperlab.hpp"
#include "extfair/transform.hpp"

namespace {

using namespace extfair;

constexpr int kExitOk = 0;
constexpr int kExitNotionFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

Space parse_space(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "v") return Space::V;
  if (s == "w") return Space::W;
  if (s == "full") return Space::Full;
  throw Error(Errc::BadArgument, "unknown space (use V, W, or FULL)");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

NotionEvaluator make_evaluator(const AnyInstance& inst, const std::optional<std::string>& space,
                               int threads) {
  if (const auto* two_d = std::get_if<Instance2D>(&inst))
    return NotionEvaluator(*two_d, space ? parse_space(*space) : Space::V, threads);
  if (const auto* one_d = std::get_if<Instance1D>(&inst)) {
    if (space && parse_space(*space) != Space::W)
      throw Error(Errc::WrongSpace, "a 1-D instance lives in space W");
    return NotionEvaluator(*one_d, threads);
  }
  const auto& full = std::get<FullInstance>(inst);
  if (space && parse_space(*space) != Space::Full)
    throw Error(Errc::WrongSpace, "a full-externality instance needs --space FULL");
  return NotionEvaluator(full, threads);
}

Json verdict_json(const Verdict& v) {
  Json out;
  out["holds"] = v.holds;
  if (v.agent) out["agent"] = *v.agent;
  if (v.other_agent) out["other_agent"] = *v.other_agent;
  if (v.item) out["item"] = *v.item;
  if (v.lhs) out["lhs"] = to_string(*v.lhs);
  if (v.rhs) out["rhs"] = to_string(*v.rhs);
  if (v.dominator) out["dominator"] = v.dominator->assignment;
  return out;
}

std::string verdict_text(const Verdict& v) {
  if (v.holds) return "holds";
  std::string s = "fails";
  if (v.agent) s += " (agent " + std::to_string(*v.agent);
  if (v.other_agent) s += " vs " + std::to_string(*v.other_agent);
  if (v.item) s += ", item " + std::to_string(*v.item);
  if (v.lhs && v.rhs) s += ": " + to_string(*v.lhs) + " < " + to_string(*v.rhs);
  if (v.agent) s += ")";
  if (v.dominator) {
    s += " (dominated by [";
    for (size_t k = 0; k < v.dominator->assignment.size(); ++k)
      s += (k ? "," : "") + std::to_string(v.dominator->assignment[k]);
    s += "])";
  }
  return s;
}

void emit(const std::optional<std::string>& out_path, const Json& doc) {
  if (out_path)
    write_json_file(*out_path, doc);
  else
    std::cout << dump_json(doc);
}

int cmd_check(const std::string& instance_path, const std::string& alloc_path,
              const std::string& notions_csv, const std::optional<std::string>& space,
              const std::optional<std::string>& alpha_text, bool as_json, int threads) {
  const AnyInstance inst = instance_from_json(read_json_file(instance_path));
  const Allocation alloc = allocation_from_json(read_json_file(alloc_path));
  std::optional<Rational> alpha;
  if (alpha_text) alpha = parse_rational(*alpha_text);

  const NotionEvaluator eval = make_evaluator(inst, space, threads);
  bool all_hold = true;
  Json results = Json::array();
  for (const std::string& name : split_csv(notions_csv)) {
    const std::optional<Notion> notion = parse_notion(name);
    if (!notion) throw Error(Errc::BadArgument, "unknown notion: " + name);
    if (notion_needs_alpha(*notion) && !alpha)
      throw Error(Errc::BadAlpha, name + " needs --alpha");
    const Verdict v = eval.check(*notion, alloc, alpha);
    all_hold = all_hold && v.holds;
    if (as_json) {
      Json r;
      r["notion"] = name;
      if (notion_needs_alpha(*notion)) r["alpha"] = to_string(*alpha);
      r["verdict"] = verdict_json(v);
      results.push_back(std::move(r));
    } else {
      std::cout << name << ": " << verdict_text(v) << "\n";
    }
  }
  if (as_json) {
    Json doc;
    doc["schema"] = "extfair/check-report/1";
    doc["all_hold"] = all_hold;
    doc["results"] = std::move(results);
    std::cout << dump_json(doc);
  }
  return all_hold ? kExitOk : kExitNotionFails;
}

int cmd_transform(const std::string& instance_path, const std::optional<std::string>& out_path) {
  const Json doc = read_json_file(instance_path);
  const Instance2D inst = instance_2d_from_json(doc);
  const TransformResult result = transform(inst);
  emit(out_path, to_json(result, inst.item_ids));
  return kExitOk;
}

int cmd_mms(const std::string& instance_path, const std::string& space_text, bool decompose,
            const std::optional<std::string>& best_alpha_name, bool as_json, int threads) {
  const Instance2D inst = instance_2d_from_json(read_json_file(instance_path));
  const MmsProfile profile = mms_profile(inst, threads);

  Json doc;
  doc["schema"] = "extfair/mms-report/1";
  Json agents = Json::array();
  for (int i = 0; i < inst.n; ++i) {
    const MmsAgentProfile& a = profile.agents[static_cast<size_t>(i)];
    Json rec;
    rec["agent"] = i;
    if (space_text != "W") rec["mu_v"] = to_string(a.mu_v);
    if (space_text != "V") rec["mu_w"] = to_string(a.mu_w);
    rec["shift"] = to_string(a.shift);
    rec["canonical_partition"] = a.canonical_partition.assignment;
    rec["min_bundle"] = a.min_bundle;
    if (decompose) {
      if (!a.mu_plus)
        throw Error(Errc::Unsupported, "mu decomposition is defined for goods or chores only");
      rec["mu_plus"] = to_string(*a.mu_plus);
      rec["mu_minus"] = to_string(*a.mu_minus);
    }
    agents.push_back(std::move(rec));
  }
  doc["agents"] = std::move(agents);
  doc["shift_identity"] = verify_shift_identity(inst, profile);

  if (best_alpha_name) {
    std::optional<Notion> n = parse_notion(*best_alpha_name);
    MmsVariant variant;
    if (n == Notion::ALPHA_MMS)
      variant = MmsVariant::ALPHA_MMS;
    else if (n == Notion::SHIFTED_ALPHA_MMS)
      variant = MmsVariant::SHIFTED_ALPHA_MMS;
    else if (n == Notion::ALPHA_MMS_I)
      variant = MmsVariant::ALPHA_MMS_I;
    else if (n == Notion::ALPHA_MMS_II)
      variant = MmsVariant::ALPHA_MMS_II;
    else
      throw Error(Errc::BadArgument, "unknown best-alpha variant: " + *best_alpha_name);
    const BestAlphaResult res = best_alpha(inst, profile, variant, threads);
    Json ba;
    ba["variant"] = *best_alpha_name;
    ba["result"] = res.kind == BestAlphaKind::None ? "NONE"
                   : res.kind == BestAlphaKind::All ? "ALL"
                                                    : to_string(res.alpha);
    if (res.witness) ba["witness"] = res.witness->assignment;
    if (res.zero_mu) ba["zero_mu"] = true;
    if (res.approximate) ba["approximate"] = true;
    doc["best_alpha"] = std::move(ba);
  }

  if (as_json) {
    std::cout << dump_json(doc);
  } else {
    for (const Json& rec : doc["agents"]) {
      std::cout << "agent " << rec["agent"].get<int>() << ":";
      if (rec.contains("mu_v")) std::cout << " mu_V = " << rec["mu_v"].get<std::string>();
      if (rec.contains("mu_w")) std::cout << " mu_W = " << rec["mu_w"].get<std::string>();
      std::cout << " shift = " << rec["shift"].get<std::string>();
      if (rec.contains("mu_plus"))
        std::cout << " mu+ = " << rec["mu_plus"].get<std::string>()
                  << " mu- = " << rec["mu_minus"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << "shift identity: " << (doc["shift_identity"].get<bool>() ? "holds" : "FAILS")
              << "\n";
    if (doc.contains("best_alpha"))
      std::cout << "best alpha (" << doc["best_alpha"]["variant"].get<std::string>()
                << "): " << doc["best_alpha"]["result"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_allocate(const std::string& instance_path, const std::string& algorithm,
                 const std::optional<std::string>& order_csv,
                 const std::optional<std::string>& space,
                 const std::optional<std::string>& notions_csv,
                 const std::optional<std::string>& out_path, int threads) {
  const AnyInstance any = instance_from_json(read_json_file(instance_path));
  const Instance2D* two_d = std::get_if<Instance2D>(&any);
  const Instance1D* one_d_in = std::get_if<Instance1D>(&any);
  if (!two_d && !one_d_in)
    throw Error(Errc::Unsupported, "allocation works on 2-D or 1-D instances");
  const Instance1D one_d = two_d ? transform(*two_d).one_d : *one_d_in;

  std::vector<int> order(static_cast<size_t>(one_d.n));
  for (int i = 0; i < one_d.n; ++i) order[static_cast<size_t>(i)] = i;
  if (order_csv) {
    order.clear();
    for (const std::string& p : split_csv(*order_csv)) order.push_back(std::stoi(p));
  }

  // Each algorithm advertises the guarantees we verify after the fact.
  Allocation alloc;
  std::vector<std::pair<std::string, std::optional<Rational>>> advertised;
  if (algorithm == "round-robin") {
    alloc = round_robin(one_d, order);
    advertised = {{"ef1", std::nullopt}};
  } else if (algorithm == "double-round-robin") {
    alloc = double_round_robin(one_d);
    advertised = {{"ef1", std::nullopt}};
  } else if (algorithm == "envy-cycle") {
    alloc = envy_cycle(one_d);
    advertised = {{"ef1", std::nullopt}};
  } else if (algorithm == "bag-fill-half-mms") {
    std::vector<Rational> mu;
    for (int i = 0; i < one_d.n; ++i) mu.push_back(mms_share_1d(one_d, i, threads).mu);
    alloc = bag_fill_half_mms(one_d, mu);
    advertised = {{"alpha-mms", Rational(1, 2)}};
  } else if (algorithm == "exhaustive-muw" || algorithm == "exhaustive-mew" ||
             algorithm == "exhaustive-leximin" || algorithm == "exhaustive-mnw") {
    const Space sp = space ? parse_space(*space) : (two_d ? Space::V : Space::W);
    const ValueSystem vs = two_d ? ValueSystem::for_2d(*two_d, sp) : ValueSystem::for_1d(one_d);
    OptObjective obj;
    std::string check_name;
    if (algorithm == "exhaustive-muw") {
      obj = OptObjective::MUW;
      check_name = "muw";
    } else if (algorithm == "exhaustive-mew") {
      obj = OptObjective::MEW;
      check_name = "mew";
    } else if (algorithm == "exhaustive-leximin") {
      obj = OptObjective::LEXIMIN;
      check_name = "leximin-opt";
    } else {
      obj = OptObjective::MNW_ON_W;
      check_name = "po";  // MNW's advertised properties are EF1 + PO
      advertised = {{"ef1", std::nullopt}};
    }
    alloc = exhaustive_opt(vs, obj, threads);
    advertised.emplace_back(check_name, std::nullopt);
    if (two_d) {
      NotionEvaluator eval(*two_d, sp, threads);
      for (const auto& [name, al] : advertised)
        std::cout << "# " << name << " (" << (sp == Space::V ? "V" : "W")
                  << "): " << verdict_text(eval.check(*parse_notion(name), alloc, al)) << "\n";
    } else {
      NotionEvaluator eval(one_d, threads);
      for (const auto& [name, al] : advertised)
        std::cout << "# " << name << " (W): "
                  << verdict_text(eval.check(*parse_notion(name), alloc, al)) << "\n";
    }
    emit(out_path, to_json(alloc));
    return kExitOk;
  } else if (algorithm == "search") {
    if (!notions_csv) throw Error(Errc::BadArgument, "search needs --notions");
    const Space sp = space ? parse_space(*space) : (two_d ? Space::V : Space::W);
    NotionEvaluator eval = two_d ? NotionEvaluator(*two_d, sp, threads)
                                 : NotionEvaluator(one_d, threads);
    std::vector<NotionRequest> reqs;
    for (const std::string& name : split_csv(*notions_csv)) {
      const std::optional<Notion> notion = parse_notion(name);
      if (!notion) throw Error(Errc::BadArgument, "unknown notion: " + name);
      reqs.push_back({*notion, std::nullopt});
    }
    const std::optional<Allocation> found = search_predicate(eval, reqs);
    if (!found) {
      std::cout << "# no allocation satisfies the requested notions\n";
      return kExitNotionFails;
    }
    emit(out_path, to_json(*found));
    return kExitOk;
  } else {
    throw Error(Errc::BadArgument, "unknown algorithm: " + algorithm);
  }

  // Polynomial algorithms: verify the advertised guarantee in W and, when the
  // input was 2-D, in V as well (plus the shifted form for bag filling).
  {
    NotionEvaluator eval_w(one_d, threads);
    for (const auto& [name, al] : advertised)
      std::cout << "# " << name << " (W): "
                << verdict_text(eval_w.check(*parse_notion(name), alloc, al)) << "\n";
    if (two_d) {
      NotionEvaluator eval_v(*two_d, Space::V, threads);
      for (const auto& [name, al] : advertised) {
        const std::string v_name = name == "alpha-mms" ? "shifted-alpha-mms" : name;
        std::cout << "# " << v_name << " (V): "
                  << verdict_text(eval_v.check(*parse_notion(v_name), alloc, al)) << "\n";
      }
    }
  }
  emit(out_path, to_json(alloc));
  return kExitOk;
}

int cmd_gen(int agents, int items, const std::string& kind_text, const std::string& ext_text,
            uint64_t seed, int max_den, const std::optional<std::string>& out_path) {
  GenSpec spec;
  spec.n = agents;
  spec.m = items;
  spec.seed = seed;
  spec.max_den = max_den;
  if (kind_text == "goods")
    spec.kind = Kind::Goods;
  else if (kind_text == "chores")
    spec.kind = Kind::Chores;
  else
    throw Error(Errc::BadArgument, "--kind must be goods or chores");
  if (ext_text == "correlated")
    spec.correlated = true;
  else if (ext_text == "inverse")
    spec.correlated = false;
  else
    throw Error(Errc::BadArgument, "--externality must be correlated or inverse");
  emit(out_path, to_json(gen_instance(spec)));
  return kExitOk;
}

int cmd_paper_suite(const std::optional<std::string>& filter_csv,
                    const std::optional<std::string>& json_path, int threads) {
  std::optional<std::vector<std::string>> filter;
  if (filter_csv) filter = split_csv(*filter_csv);
  const std::vector<ClaimResult> results = run_suite(filter, threads);

  bool any_fail = false;
  Json arr = Json::array();
  for (const ClaimResult& r : results) {
    any_fail = any_fail || r.status == ClaimStatus::FAIL;
    std::cout << to_string(r.status) << " " << r.id << "\n";
    std::cout << "  expected: " << r.expected << "\n";
    std::cout << "  computed: " << r.computed << "\n";
    if (!r.evidence.empty()) std::cout << "  evidence: " << r.evidence << "\n";
    Json rec;
    rec["id"] = r.id;
    rec["status"] = to_string(r.status);
    rec["expected"] = r.expected;
    rec["computed"] = r.computed;
    rec["evidence"] = r.evidence;
    arr.push_back(std::move(rec));
  }
  if (json_path) {
    Json doc;
    doc["schema"] = "extfair/paper-suite/1";
    doc["results"] = std::move(arr);
    write_json_file(*json_path, doc);
  }
  return any_fail ? kExitNotionFails : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fair-division toolkit for 2-D externalities"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for exhaustive scans");

  auto* check = app.add_subcommand("check", "verify fairness notions for an allocation");
  std::string c_inst, c_alloc, c_notions;
  std::optional<std::string> c_space, c_alpha;
  bool c_json = false;
  check->add_option("--instance", c_inst)->required();
  check->add_option("--allocation", c_alloc)->required();
  check->add_option("--notions", c_notions, "comma-separated notion names")->required();
  check->add_option("--space", c_space, "V, W, or FULL");
  check->add_option("--alpha", c_alpha, "rational alpha for the alpha-parameterized notions");
  check->add_flag("--json", c_json);

  auto* tf = app.add_subcommand("transform", "reduce a 2-D instance to 1-D");
  std::string t_inst;
  std::optional<std::string> t_out;
  tf->add_option("--instance", t_inst)->required();
  tf->add_option("--out", t_out);

  auto* mms = app.add_subcommand("mms", "exact maximin shares");
  std::string m_inst, m_space = "BOTH";
  bool m_decompose = false, m_json = false;
  std::optional<std::string> m_best;
  mms->add_option("--instance", m_inst)->required();
  mms->add_option("--space", m_space, "V, W, or BOTH");
  mms->add_flag("--decompose", m_decompose);
  mms->add_option("--best-alpha", m_best, "alpha-mms | shifted-alpha-mms | alpha-mms-i | alpha-mms-ii");
  mms->add_flag("--json", m_json);

  auto* alloc = app.add_subcommand("allocate", "run an allocation algorithm");
  std::string a_inst, a_algo;
  std::optional<std::string> a_order, a_space, a_notions, a_out;
  alloc->add_option("--instance", a_inst)->required();
  alloc->add_option("--algorithm", a_algo)->required();
  alloc->add_option("--order", a_order, "agent picking order (csv)");
  alloc->add_option("--space", a_space);
  alloc->add_option("--notions", a_notions, "predicate for --algorithm search");
  alloc->add_option("--out", a_out);

  auto* gen = app.add_subcommand("gen", "deterministic random instance");
  int g_agents = 2, g_items = 4, g_den = 10;
  std::string g_kind = "goods", g_ext = "correlated";
  uint64_t g_seed = 0;
  std::optional<std::string> g_out;
  gen->add_option("--agents", g_agents);
  gen->add_option("--items", g_items);
  gen->add_option("--kind", g_kind, "goods | chores");
  gen->add_option("--externality", g_ext, "correlated | inverse");
  gen->add_option("--seed", g_seed);
  gen->add_option("--max-den", g_den);
  gen->add_option("--out", g_out);

  auto* suite = app.add_subcommand("paper-suite", "run the built-in claims suite");
  std::optional<std::string> s_filter, s_json;
  suite->add_option("--filter", s_filter, "comma-separated claim ids");
  suite->add_option("--json", s_json, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(c_inst, c_alloc, c_notions, c_space, c_alpha, c_json, threads);
    if (*tf) return cmd_transform(t_inst, t_out);
    if (*mms) {
      if (m_space != "V" && m_space != "W" && m_space != "BOTH")
        throw Error(Errc::BadArgument, "--space must be V, W, or BOTH");
      return cmd_mms(m_inst, m_space, m_decompose, m_best, m_json, threads);
    }
    if (*alloc) return cmd_allocate(a_inst, a_algo, a_order, a_space, a_notions, a_out, threads);
    if (*gen) return cmd_gen(g_agents, g_items, g_kind, g_ext, g_seed, g_den, g_out);
    if (*suite) return cmd_paper_suite(s_filter, s_json, threads);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code == Errc::TooLarge ? kExitResource : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
