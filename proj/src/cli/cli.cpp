#include "extlat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "extlat/audit.hpp"
#include "extlat/caps.hpp"
#include "extlat/counting.hpp"
#include "extlat/dynamics.hpp"
#include "extlat/injections.hpp"
#include "extlat/lab.hpp"
#include "extlat/poset_io.hpp"
#include "extlat/restricted.hpp"

namespace extlat {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string verb, kind;
  std::string poset_file, family, other_file, other_family;
  int n = -1, t = -1, k = -1, q_degree = 12;
  int n_min = -1, n_max = -1, t_max = -1, k_max = -1;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool slow = false;
  std::string sigma, pi, word, elements, positions, block, subset, pin_elements, pin_positions, q;
  int x = -1, y = -1, a = -1, steps = 1;
  std::string gens = "adjacent";
  std::string check;
  bool random = false, keep = false;
  int samples = 200;
  double density = 0.4;
};

std::vector<int> parse_list(const std::string& s, const char* what) {
  std::vector<int> v;
  if (s.empty()) return v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(value);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " list: " + s);
    }
  }
  return v;
}

std::vector<int> to_zero_based(std::vector<int> v) {
  for (int& x : v) --x;
  return v;
}

std::string join_one_based(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s;
}

std::string join_plain(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> permutation_arg(const std::string& s) {
  std::vector<int> perm = to_zero_based(parse_list(s, "permutation"));
  std::vector<bool> seen(perm.size());
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) throw UsageError("not a permutation: " + s);
    seen[v] = true;
  }
  return perm;
}

Poset family_poset(const std::string& name, int n) {
  auto need_n = [&] {
    if (n < 0) throw UsageError("family " + name + " needs --n");
    if (n > kMaxElements) throw UsageError("--n too large");
    return n;
  };
  if (name == "chain") return chain(need_n());
  if (name == "antichain") return antichain(need_n());
  if (name == "diamond") return diamond();
  if (name.rfind("perm:", 0) == 0) return permutation_poset(permutation_arg(name.substr(5)));
  if (name.rfind("tree:", 0) == 0) {
    // Parent (lower cover) of each element, 1-based; 0 marks a root.
    std::vector<int> parent = parse_list(name.substr(5), "tree");
    std::vector<std::pair<int, int>> rel;
    for (std::size_t c = 0; c < parent.size(); ++c) {
      if (parent[c] < 0 || parent[c] > static_cast<int>(parent.size())) throw UsageError("bad tree parent");
      if (parent[c] > 0) rel.emplace_back(parent[c] - 1, static_cast<int>(c));
    }
    try {
      return Poset::from_relations(static_cast<int>(parent.size()), rel);
    } catch (const CycleError&) {
      throw UsageError("tree spec has a cycle");
    }
  }
  throw UsageError("unknown family: " + name);
}

Poset load(const std::string& file, const std::string& family, int n, const char* what) {
  if (!file.empty() && !family.empty()) throw UsageError(std::string("give either a file or a family for ") + what);
  if (!file.empty()) return read_poset_file(file);
  if (!family.empty()) return family_poset(family, n);
  throw UsageError(std::string("missing ") + what + " (use --poset FILE or --family NAME)");
}

// One result: a JSON object plus its text rendering.
struct Result {
  ordered_json data = ordered_json::object();
  std::string text;
  std::vector<VerificationReport> rows;  // csv rows for report-based verbs
  bool report_rows = false;
  int code = 0;
};

std::string csv_cell(const ordered_json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Result& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.data.dump() << '\n';
  } else if (format == "csv") {
    if (r.report_rows) {
      out << csv_header() << '\n';
      for (const auto& row : r.rows) out << to_csv(row) << '\n';
      return;
    }
    std::string head, body;
    bool first = true;
    for (auto it = r.data.begin(); it != r.data.end(); ++it) {
      head += (first ? "" : ",") + csv_cell(it.key());
      body += (first ? "" : ",") + csv_cell(it.value());
      first = false;
    }
    out << head << '\n' << body << '\n';
  } else {
    out << r.text;
    if (!r.text.empty() && r.text.back() != '\n') out << '\n';
  }
}

ordered_json report_object(const VerificationReport& r) { return ordered_json::parse(to_json(r)); }

RestrictionSpec restriction(const Options& o, const Poset& p) {
  RestrictionSpec s{to_zero_based(parse_list(o.elements, "element")), parse_list(o.positions, "position")};
  if (s.u.size() != s.a.size()) throw UsageError("--u and --a lists differ in length");
  for (int x : s.u)
    if (x < 0 || x >= p.size()) throw UsageError("element out of range");
  return s;
}

int element_arg(int one_based, const Poset& p, const char* flag) {
  if (one_based < 1 || one_based > p.size()) throw UsageError(std::string(flag) + " must name an element 1.." +
                                                               std::to_string(p.size()));
  return one_based - 1;
}

int require(int v, const char* flag) {
  if (v < 0) throw UsageError(std::string("missing ") + flag);
  return v;
}

Word word_arg(const Options& o, const Poset& p) {
  if (o.word.empty()) return first_extension(p);
  Word w = to_zero_based(parse_list(o.word, "word"));
  if (!is_linear_extension(p, w)) throw UsageError("--word is not a linear extension");
  return w;
}

Result witness_result(const WitnessReport& w, const std::string& kind) {
  Result r;
  r.data["witness"] = kind;
  r.data["uncovered"] = w.uncovered.get_str();
  r.data["formula"] = w.formula.get_str();
  r.data["domain"] = w.domain.get_str();
  r.data["agrees"] = w.agrees();
  r.data["samples"] = w.samples;
  r.text = w.uncovered.get_str() + "\n";
  for (const auto& s : w.samples) r.text += s + "\n";
  if (!w.agrees()) r.code = 1;
  return r;
}

Result run_verb(const Options& o) {
  const std::string& verb = o.verb;
  Result r;
  auto poset = [&] { return load(o.poset_file, o.family, o.n, "poset"); };

  if (verb == "count") {
    Poset p = poset();
    Count e = count_extensions(p);
    r.data["poset"] = describe(p);
    r.data["extensions"] = e.get_str();
    r.text = e.get_str();
  } else if (verb == "omega") {
    Poset p = poset();
    r.data["poset"] = describe(p);
    if (o.t >= 0) {
      Count v = order_polynomial(p, o.t);
      r.data["t"] = o.t;
      r.data["omega"] = v.get_str();
      r.text = v.get_str();
    } else {
      int t_max = o.t_max >= 0 ? o.t_max : 5;
      auto profile = ideal_chain_profile(p);
      ordered_json values = ordered_json::array();
      for (int t = 0; t <= t_max; ++t) {
        Count v = order_polynomial(profile, t);
        values.push_back(v.get_str());
        r.text += std::to_string(t) + " " + v.get_str() + "\n";
      }
      r.data["omega"] = values;
    }
  } else if (verb == "qomega") {
    Poset p = poset();
    QPoly v = q_order_polynomial(p, require(o.t, "--t"));
    r.data["poset"] = describe(p);
    r.data["t"] = o.t;
    r.data["qomega"] = v.to_string();
    r.text = v.to_string();
  } else if (verb == "promote" || verb == "evacuate") {
    Poset p = poset();
    Word w = word_arg(o, p);
    std::vector<int> chain;
    if (verb == "promote") {
      chain = promotion_chain(p, w);
      for (int s = 0; s < o.steps; ++s) w = promote(p, w);
    } else {
      w = evacuate(p, w);
    }
    r.data["poset"] = describe(p);
    r.data["word"] = join_one_based(w);
    if (verb == "promote") r.data["chain"] = join_one_based(chain);
    r.text = join_one_based(w);
  } else if (verb == "orbit") {
    Poset p = poset();
    RestrictionSpec s = restriction(o, p);
    std::vector<Word> seeds = s.u.empty() ? enumerate_extensions(p) : enumerate_restricted_extensions(p, s);
    std::vector<Generator> gens;
    if (o.gens == "adjacent") gens = adjacent_generators(p.size());
    else if (o.gens == "fixed") gens = fixed_position_generators(p.size(), s.a);
    else if (o.gens == "pairs") gens = pair_generators(p.size(), s.a);
    else throw UsageError("--gens must be adjacent, fixed or pairs");
    OrbitReport rep = orbits(p, seeds, gens);
    r.data["poset"] = describe(p);
    r.data["generators"] = o.gens;
    r.data["states"] = rep.states;
    r.data["orbits"] = rep.orbit_count;
    r.data["sizes"] = rep.orbit_sizes;
    r.text = std::to_string(rep.orbit_count) + "\n";
    for (std::size_t i = 0; i < rep.orbit_sizes.size(); ++i)
      r.text += (i ? " " : "") + std::to_string(rep.orbit_sizes[i]);
  } else if (verb == "witness") {
    std::string kind = o.kind;
    if (kind == "xi") kind = "hook";
    if (kind == "zeta") kind = "color";
    if (kind == "eta") kind = "sid";
    if (kind == "ks") kind = "refine";
    if (kind == "hook") return witness_result(hook_witness(poset()), kind);
    if (kind == "color") return witness_result(color_witness(poset(), require(o.t, "--t")), kind);
    if (kind == "refine")
      return witness_result(refinement_witness(poset(), require(o.t, "--t"), require(o.k, "--k")), kind);
    if (kind == "sid") {
      std::string s = o.sigma;
      if (s.empty() && o.family.rfind("perm:", 0) == 0) s = o.family.substr(5);
      if (s.empty()) throw UsageError("witness sid needs --sigma");
      return witness_result(sid_witness(permutation_arg(s)), kind);
    }
    throw UsageError("witness kind must be hook|color|sid|refine (or xi|zeta|eta|ks)");
  } else if (verb == "decide" || verb == "find" || verb == "unique") {
    Poset p = poset();
    RestrictionSpec s = restriction(o, p);
    r.data["poset"] = describe(p);
    r.data["u"] = join_one_based(s.u);
    r.data["a"] = join_plain(s.a);
    if (verb == "decide") {
      auto norm = normalize_spec(p, s);
      if (auto* inf = std::get_if<Infeasible>(&norm)) {
        r.data["nonempty"] = false;
        r.data["reason"] = to_string(inf->reason);
        if (inf->reason == InfeasibleReason::NotAChain) throw UsageError("restricted elements are not a chain");
        r.text = "empty (" + to_string(inf->reason) + ")";
      } else {
        bool ok = vanishing_decide(p, s);
        r.data["nonempty"] = ok;
        r.text = ok ? "nonempty" : "empty";
      }
    } else if (verb == "find") {
      FindStats stats;
      try {
        Word w = restricted_find(p, s, &stats);
        r.data["found"] = true;
        r.data["word"] = join_one_based(w);
        r.text = join_one_based(w);
      } catch (const NoExtension&) {
        r.data["found"] = false;
        r.text = "none";
      }
      r.data["steps"] = stats.steps;
    } else {
      bool u = is_unique(p, s);
      r.data["unique"] = u;
      r.text = u ? "unique" : "not unique";
    }
  } else if (verb == "verify") {
    if (o.check.empty()) throw UsageError("verify needs --check");
    const CheckDef& check = find_check(o.check);
    Instance in;
    if (check.domain == Domain::Permutations) {
      if (o.sigma.empty()) throw UsageError(o.check + " needs --sigma");
      in.perm = permutation_arg(o.sigma);
      in.poset = permutation_poset(in.perm);
      if (o.check == "MIXED-SID") {
        if (o.pi.empty()) throw UsageError("MIXED-SID needs --pi");
        in.perm2 = permutation_arg(o.pi);
        if (in.perm2.size() != in.perm.size()) throw UsageError("--pi and --sigma differ in length");
      }
    } else {
      in.poset = poset();
    }
    const Poset& p = in.poset;
    if (!o.other_file.empty() || !o.other_family.empty()) {
      in.other = load(o.other_file, o.other_family, o.n, "second poset");
      if (in.other->size() != p.size()) throw UsageError("posets differ in size");
    }
    if (o.check == "SID-GEN" && !in.other) throw UsageError("SID-GEN needs --poset2 or --family2");
    if (o.x > 0) in.x = element_arg(o.x, p, "--x");
    if (o.y > 0) in.y = element_arg(o.y, p, "--y");
    if (o.a >= 0) in.a = o.a;
    if (o.t >= 0) in.t = o.t;
    if (o.k >= 0) in.k = o.k;
    if (o.check == "REINER") in.degree = o.q_degree;
    if (!o.q.empty()) {
      try {
        in.q = Rational(o.q);
        in.q.canonicalize();
      } catch (const std::exception&) {
        throw UsageError("bad --q");
      }
    }
    if (!o.subset.empty()) {
      for (int e : parse_list(o.subset, "subset")) in.subset |= bit(element_arg(e, p, "--subset"));
      if (!p.is_antichain(in.subset)) throw UsageError("--subset is not an antichain");
    }
    if (!o.pin_elements.empty()) {
      in.extra.u = to_zero_based(parse_list(o.pin_elements, "--z"));
      in.extra.a = parse_list(o.pin_positions, "--c");
      if (in.extra.u.size() != in.extra.a.size()) throw UsageError("--z and --c differ in length");
    }
    VerificationReport rep = check.verify(in);
    r.data = report_object(rep);
    r.rows = {rep};
    r.report_rows = true;
    r.text = rep.check_id + " " + rep.instance + "\n" + "lhs=" + to_string(rep.lhs) + "\nrhs=" +
             to_string(rep.rhs) + "\nholds=" + (rep.holds ? "true" : "false") +
             " equality=" + (rep.equality ? "true" : "false");
    if (rep.predicted_equality) r.text += std::string(" predicted=") + (*rep.predicted_equality ? "true" : "false");
    if (!rep.note.empty()) r.text += "\nnote: " + rep.note;
    if (check.kind == CheckKind::Theorem && !rep.holds) r.code = 1;
  } else if (verb == "sweep") {
    if (o.check.empty()) throw UsageError("sweep needs --check (an id or all)");
    SweepParams sp;
    if (o.n_min >= 0) sp.n_min = o.n_min;
    if (o.n_max >= 0) sp.n_max = o.n_max;
    if (o.t_max >= 0) sp.t_max = o.t_max;
    if (o.k_max >= 0) sp.k_max = o.k_max;
    sp.degree = o.q_degree;
    sp.random = o.random;
    sp.seed = o.seed;
    sp.samples = o.samples;
    sp.density = o.density;
    sp.jobs = o.jobs;
    sp.keep_reports = o.keep;
    std::vector<std::string> ids;
    if (o.check == "all")
      for (const auto& c : registry()) ids.push_back(c.id);
    else
      ids.push_back(find_check(o.check).id);
    ordered_json all = ordered_json::array();
    r.report_rows = true;
    for (const auto& id : ids) {
      SweepSummary s = sweep(id, sp);
      all.push_back(ordered_json::parse(s.to_json()));
      r.text += s.check_id + " " + s.status + " units=" + std::to_string(s.units) +
                " instances=" + std::to_string(s.instances_run) + " equalities=" + std::to_string(s.equalities) +
                " violations=" + std::to_string(s.violations.size()) +
                " equality_mismatches=" + std::to_string(s.equality_mismatches.size()) + " [" + s.family + "]\n";
      for (const auto& v : s.violations) r.text += "  violation " + v.instance + " lhs=" + to_string(v.lhs) +
                                                   " rhs=" + to_string(v.rhs) + "\n";
      for (auto* list : {&s.violations, &s.equality_mismatches, &s.reports})
        r.rows.insert(r.rows.end(), list->begin(), list->end());
      if (s.status == "theorem_violated") r.code = 1;
    }
    r.data = ids.size() == 1 ? all[0] : all;
  } else if (verb == "audit") {
    Poset p = poset();
    if (o.kind == "shepp") {
      Mask y_block = 0;
      for (int e : parse_list(o.block, "--y-block")) y_block |= bit(element_arg(e, p, "--y-block"));
      SheppOptions opt;
      opt.seed = o.seed;
      SheppReport rep = shepp_audit(p, y_block, require(o.t, "--t"), opt);
      r.data["poset"] = describe(p);
      r.data["lattice_size"] = rep.lattice_size;
      r.data["support"] = rep.support;
      r.data["expected_support"] = rep.expected_support.get_str();
      r.data["meet_join"] = rep.meet_join_ok;
      r.data["distributive"] = rep.distributive_ok;
      r.data["log_supermodular"] = rep.log_supermodular_ok;
      r.data["certificate"] = rep.certificate_ok;
      r.data["exhaustive_pairs"] = rep.exhaustive_pairs;
      r.data["exhaustive_triples"] = rep.exhaustive_triples;
      r.data["ok"] = rep.ok();
      r.text = std::string(rep.ok() ? "ok" : "FAILED") + " lattice=" + std::to_string(rep.lattice_size) +
               " support=" + std::to_string(rep.support) + (rep.exhaustive_pairs ? " pairs=all" : " pairs=sampled") +
               (rep.exhaustive_triples ? " triples=all" : " triples=sampled");
      if (!rep.ok()) r.code = 1;
    } else if (o.kind == "matching") {
      int x = element_arg(o.x, p, "--x");
      MatchingReport rep = matching_check(p, x, require(o.a, "--a"));
      r.data["poset"] = describe(p);
      r.data["left"] = rep.left;
      r.data["right"] = rep.right;
      r.data["edges"] = rep.edges;
      r.data["matching"] = rep.matching;
      r.data["isolated_right"] = rep.isolated_right;
      r.data["saturated"] = rep.saturated();
      r.text = std::string(rep.saturated() ? "saturated" : "not saturated") + " matching=" +
               std::to_string(rep.matching) + "/" + std::to_string(rep.right);
    } else {
      throw UsageError("audit kind must be shepp or matching");
    }
  } else if (verb == "classes") {
    ClassReport rep = comparability_class_check(require(o.n, "--n"), o.t_max >= 0 ? o.t_max : 4);
    r.data["n"] = rep.n;
    r.data["posets"] = rep.posets;
    r.data["classes"] = rep.classes;
    r.data["invariant"] = rep.invariant;
    r.data["failures"] = rep.failures;
    r.text = std::string(rep.invariant ? "invariant" : "NOT invariant") + " posets=" + std::to_string(rep.posets) +
             " classes=" + std::to_string(rep.classes);
    if (!rep.invariant) r.code = 1;
  } else {
    throw UsageError("unknown verb: " + verb);
  }
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Linear extensions, order polynomials and their inequalities"};
  app.add_option("verb", o.verb,
                 "count|omega|qomega|promote|evacuate|orbit|witness|decide|find|unique|verify|sweep|audit|classes")
      ->required();
  app.add_option("kind", o.kind, "witness: hook|color|sid|refine; audit: shepp|matching");
  app.add_option("--poset", o.poset_file, "poset file");
  app.add_option("--family", o.family, "chain|antichain|diamond|perm:<sigma>|tree:<parents>");
  app.add_option("--poset2", o.other_file, "second poset file");
  app.add_option("--family2", o.other_family, "second poset family");
  app.add_option("--n", o.n, "size for chain/antichain, or n for classes");
  app.add_option("--t", o.t);
  app.add_option("--k", o.k);
  app.add_option("--q", o.q, "rational q such as 1/2");
  app.add_option("--q-degree", o.q_degree, "series truncation degree");
  app.add_option("--n-min", o.n_min);
  app.add_option("--n-max", o.n_max);
  app.add_option("--t-max", o.t_max);
  app.add_option("--k-max", o.k_max);
  app.add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed);
  app.add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--slow", o.slow, "raise the exhaustive size cap");
  app.add_option("--sigma", o.sigma, "permutation, 1-based, comma separated");
  app.add_option("--pi", o.pi, "second permutation");
  app.add_option("--word", o.word, "linear extension as a word of elements");
  app.add_option("--steps", o.steps)->check(CLI::NonNegativeNumber);
  app.add_option("--u", o.elements, "restricted elements");
  app.add_option("--positions", o.positions, "positions of the restricted elements");
  app.add_option("--x", o.x);
  app.add_option("--y", o.y);
  app.add_option("--a", o.a, "position");
  app.add_option("--z", o.pin_elements, "extra pinned elements");
  app.add_option("--c", o.pin_positions, "their positions");
  app.add_option("--subset", o.subset, "antichain elements");
  app.add_option("--y-block", o.block, "elements of the coordinate-wise block");
  app.add_option("--gens", o.gens, "adjacent|fixed|pairs");
  app.add_option("--check", o.check, "check id, or all for sweep");
  app.add_flag("--random", o.random, "seeded random family instead of exhaustive");
  app.add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  app.add_option("--density", o.density)->check(CLI::Range(0.0, 1.0));
  app.add_flag("--keep", o.keep, "keep every report in sweep output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (o.slow) enable_slow_mode();
    Result r = run_verb(o);
    emit(r, o.format, out);
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownCheck& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace extlat
