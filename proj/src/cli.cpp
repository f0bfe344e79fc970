#include "odograph/cli.hpp"

#include "odograph/error.hpp"
#include "odograph/ideals.hpp"
#include "odograph/independence.hpp"
#include "odograph/io.hpp"
#include "odograph/kgraph.hpp"
#include "odograph/oper.hpp"
#include "odograph/psystem.hpp"
#include "odograph/selfsim.hpp"
#include "odograph/topo.hpp"
#include "odograph/verify/acceptance.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace odograph {

namespace {

struct Params {
  std::string n;
  std::string theta_file;
  std::string spec_json;
  bool json = false;
  std::uint64_t seed = 1;
  unsigned long max_length = 4;

  std::vector<std::string> args;
  std::string g = "0";
  std::string l = "0";
  std::string g_range = "-30,30";
  std::string degree;
  std::string code;
  std::string front;
  std::string angle;
  std::string from = "0";
  std::string target;
  std::string epsilon = "1/128";
  std::string delta = "1/32";
  std::string p;
  std::string q;
  std::string m;
  std::string equals;
  std::string model = "qfz";
  std::string degrees;
  std::string exp_range = "-6,6";
  long jmax = 3;
  int criterion = 0;
};

// Verification commands return 1 through this.
struct Outcome {
  Json doc;
  bool pass = true;
  std::optional<std::string> text;  // printed instead of the JSON when set
};

std::pair<long, long> parse_range(const std::string& text) {
  auto comma = text.find(',', 1);
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "range '" + text + "' should be lo,hi");
  BigInt lo = parse_bigint(text.substr(0, comma)), hi = parse_bigint(text.substr(comma + 1));
  if (lo > hi) throw Error(ErrorKind::Parse, "empty range '" + text + "'");
  return {to_long(lo), to_long(hi)};
}

SpecPtr load_spec(const Params& p) {
  if (!p.spec_json.empty()) return spec_from_json(Json::parse(p.spec_json));
  if (!p.theta_file.empty()) {
    std::ifstream in(p.theta_file);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + p.theta_file);
    Json doc = Json::parse(in);
    if (!doc.contains("theta")) doc = Json{{"theta", doc}};
    if (!doc.contains("n")) {
      if (p.n.empty()) throw Error(ErrorKind::Parse, "theta file has no \"n\"; pass --n");
      doc["n"] = parse_sizes(p.n);
    }
    return spec_from_json(doc);
  }
  if (p.n.empty()) throw Error(ErrorKind::Parse, "give the alphabet sizes with --n, --spec or --theta-file");
  return make_standard(parse_sizes(p.n));
}

const std::string& arg(const Params& p, std::size_t i, const char* what) {
  if (i >= p.args.size()) throw Error(ErrorKind::Parse, std::string("missing argument: ") + what);
  return p.args[i];
}

Json word_json(const Word& w) {
  Json doc;
  doc["word"] = format_word(w);
  doc["degree"] = degree_to_json(w.degree());
  return doc;
}

Outcome word_outcome(const Params& p, const Word& w) {
  Outcome o;
  o.doc = word_json(w);
  if (!p.json) o.text = format_word(w);
  return o;
}

Json letters_json(const std::vector<Letter>& letters, const SpecPtr& spec) {
  return format_word(Word(spec, letters));
}

Json report_json(const RelationReport& r) {
  Json doc;
  doc["pass"] = r.pass();
  doc["checks"] = r.checks.size();
  Json failures = Json::array();
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    Json f;
    f["name"] = c.name;
    f["lhs"] = c.lhs;
    f["rhs"] = c.rhs;
    f["witness"] = c.witness ? Json(c.witness->get_str()) : Json(nullptr);
    failures.push_back(f);
  }
  doc["failures"] = failures;
  return doc;
}

Json scalar_images(const std::vector<std::pair<ExactScalar, BigInt>>& images) {
  Json out = Json::array();
  for (const auto& [w, m] : images) out.push_back(Json{{"weight", w.to_string()}, {"index", m.get_str()}});
  return out;
}

Json path_json(const PathPoint& x) { return Json{{"angle", x.angle.to_string()}, {"degree", degree_to_json(x.degree)}}; }

std::vector<Degree> parse_degree_list(const std::string& text, std::size_t rank) {
  std::vector<Degree> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(parse_degree(item, rank));
  if (out.empty()) throw Error(ErrorKind::Parse, "no degrees in '" + text + "'");
  return out;
}

std::vector<Degree> default_degrees(std::size_t rank) {
  std::vector<Degree> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(Degree::unit(rank, i));
  if (rank > 1) out.push_back(Degree(std::vector<unsigned long>(rank, 1)));
  return out;
}

using Handler = std::function<Outcome(const Params&)>;

std::map<std::string, std::pair<std::string, Handler>> handlers() {
  std::map<std::string, std::pair<std::string, Handler>> h;

  h["normal-form"] = {"normal form of WORD", [](const Params& p) {
                        SpecPtr spec = load_spec(p);
                        return word_outcome(p, normal_form(parse_word(spec, arg(p, 0, "WORD"))));
                      }};

  h["multiply"] = {"product of WORD WORD", [](const Params& p) {
                     SpecPtr spec = load_spec(p);
                     return word_outcome(p, multiply(parse_word(spec, arg(p, 0, "WORD")),
                                                     parse_word(spec, arg(p, 1, "WORD"))));
                   }};

  h["encode"] = {"code of WORD, or decode with --degree and --code", [](const Params& p) {
                   SpecPtr spec = load_spec(p);
                   if (!p.degree.empty() || !p.code.empty()) {
                     if (p.degree.empty() || p.code.empty()) {
                       throw Error(ErrorKind::Parse, "decoding needs both --degree and --code");
                     }
                     return word_outcome(p, decode(spec, parse_degree(p.degree, spec->rank()), parse_bigint(p.code)));
                   }
                   Encoded e = encode(parse_word(spec, arg(p, 0, "WORD")));
                   Outcome o;
                   o.doc = Json{{"degree", degree_to_json(e.degree)}, {"code", bigint_to_json(e.code)}};
                   return o;
                 }};

  h["cubic-check"] = {"cubic condition on every triple of colors", [](const Params& p) {
                        SpecPtr spec = load_spec(p);
                        CubicReport r = cubic_check(*spec);
                        Outcome o;
                        o.pass = r.pass;
                        o.doc["pass"] = r.pass;
                        o.doc["triples"] = r.triples_checked;
                        if (r.witness) {
                          const auto& w = *r.witness;
                          o.doc["witness"] = Json{
                              {"colors", {w.i + 1, w.j + 1, w.l + 1}},
                              {"letters", {w.s, w.t, w.u}},
                              {"via_ij_first", letters_json(w.via_ij_first, spec)},
                              {"via_jl_first", letters_json(w.via_jl_first, spec)}};
                        }
                        return o;
                      }};

  h["act"] = {"odometer action of --g on WORD", [](const Params& p) {
                SpecPtr spec = load_spec(p);
                ActionResult r = act(parse_bigint(p.g), parse_word(spec, arg(p, 0, "WORD")));
                Outcome o;
                o.doc = Json{{"image", format_word(r.image)}, {"restriction", bigint_to_json(r.restriction)}};
                return o;
              }};

  h["restrict"] = {"restriction of --g to WORD", [](const Params& p) {
                     SpecPtr spec = load_spec(p);
                     BigInt r = restriction(parse_bigint(p.g), parse_word(spec, arg(p, 0, "WORD")));
                     Outcome o;
                     o.doc = Json{{"restriction", bigint_to_json(r)}};
                     return o;
                   }};

  h["zs-mul"] = {"product (WORD, G)(WORD, H) in the Zappa-Szep product", [](const Params& p) {
                   SpecPtr spec = load_spec(p);
                   ZSElement a{parse_word(spec, arg(p, 0, "WORD")), parse_bigint(arg(p, 1, "G"))};
                   ZSElement b{parse_word(spec, arg(p, 2, "WORD")), parse_bigint(arg(p, 3, "H"))};
                   ZSElement c = zs_multiply(a, b);
                   Outcome o;
                   o.doc = Json{{"word", format_word(normal_form(c.word))}, {"g", bigint_to_json(c.g)}};
                   return o;
                 }};

  h["check-axioms"] = {"Zappa-Szep axioms over --g-range and --max-length", [](const Params& p) {
                         SpecPtr spec = load_spec(p);
                         auto [lo, hi] = parse_range(p.g_range);
                         AxiomReport r = check_zs_axioms(LetterAction::odometer(spec), lo, hi, p.max_length);
                         Outcome o;
                         o.pass = r.pass && r.evaluator_mismatches == 0;
                         o.doc["pass"] = o.pass;
                         o.doc["cases"] = r.cases;
                         o.doc["evaluator_mismatches"] = r.evaluator_mismatches;
                         Json failures = Json::array();
                         for (const auto& f : r.failures) failures.push_back(Json{{"axiom", f.axiom}, {"detail", f.detail}});
                         o.doc["failures"] = failures;
                         return o;
                       }};

  h["solve-restriction"] = {"smallest g with restriction(g, WORD) = --l", [](const Params& p) {
                              SpecPtr spec = load_spec(p);
                              Word w = parse_word(spec, arg(p, 0, "WORD"));
                              BigInt l = parse_bigint(p.l);
                              BigInt g = solve_restriction(w, l);
                              Outcome o;
                              o.doc = Json{{"g", bigint_to_json(g)}, {"verified", restriction(g, w) == l}};
                              return o;
                            }};

  h["lcm"] = {"right lcm of WORD WORD; without words, the right-LCM verdict", [](const Params& p) {
                SpecPtr spec = load_spec(p);
                Outcome o;
                if (p.args.empty()) {
                  LcmMonoidVerdict v = is_right_lcm_monoid(spec);
                  o.doc["right_lcm"] = v.right_lcm;
                  if (v.witness) {
                    const auto& w = *v.witness;
                    o.doc["witness"] = Json{{"colors", {w.i + 1, w.j + 1}},
                                            {"gcd", w.gcd},
                                            {"shifted", {format_word(w.shifted.first), format_word(w.shifted.second)}},
                                            {"zero", {format_word(w.zero.first), format_word(w.zero.second)}},
                                            {"verified", w.verified}};
                  }
                  return o;
                }
                LcmResult r = right_lcm(parse_word(spec, arg(p, 0, "WORD")), parse_word(spec, arg(p, 1, "WORD")));
                switch (r.kind) {
                  case LcmResult::Kind::Unique:
                    o.doc = Json{{"kind", "unique"}, {"lcm", format_word(*r.lcm)}};
                    break;
                  case LcmResult::Kind::NoCommonMultiple:
                    o.doc = Json{{"kind", "none"}};
                    break;
                  case LcmResult::Kind::MultipleMinimal:
                    o.doc = Json{{"kind", "multiple"}, {"count", r.count}};
                    break;
                }
                return o;
              }};

  h["min-ext"] = {"minimal common extensions of WORD WORD", [](const Params& p) {
                    SpecPtr spec = load_spec(p);
                    Word mu = parse_word(spec, arg(p, 0, "WORD")), nu = parse_word(spec, arg(p, 1, "WORD"));
                    Json list = Json::array();
                    for (const auto& e : min_common_extensions(mu, nu)) {
                      Encoded c = encode(multiply(mu, e.alpha));
                      list.push_back(Json{{"alpha", format_word(e.alpha)},
                                          {"beta", format_word(e.beta)},
                                          {"code", bigint_to_json(c.code)}});
                    }
                    Outcome o;
                    o.doc = Json{{"degree", degree_to_json(mu.degree().join(nu.degree()))},
                                 {"count", list.size()},
                                 {"extensions", list}};
                    return o;
                  }};

  h["ideal-chain"] = {"ideal of the chain MU1 NU1 [MU2 NU2 ...]", [](const Params& p) {
                        SpecPtr spec = load_spec(p);
                        if (p.args.empty() || p.args.size() % 2) {
                          throw Error(ErrorKind::Parse, "ideal-chain takes pairs MU NU");
                        }
                        std::vector<std::pair<Word, Word>> chain;
                        for (std::size_t i = 0; i < p.args.size(); i += 2) {
                          chain.emplace_back(parse_word(spec, p.args[i]), parse_word(spec, p.args[i + 1]));
                        }
                        Outcome o;
                        o.doc = ideal_to_json(chain_ideal(chain));
                        return o;
                      }};

  h["ideal-intersect"] = {"intersection of two ideals given as JSON", [](const Params& p) {
                            SpecPtr spec = load_spec(p);
                            ConstructibleIdeal x = ideal_from_json(spec, Json::parse(arg(p, 0, "IDEAL")));
                            ConstructibleIdeal y = ideal_from_json(spec, Json::parse(arg(p, 1, "IDEAL")));
                            Outcome o;
                            o.doc = ideal_to_json(intersect(x, y));
                            return o;
                          }};

  h["exhaustive"] = {"whether WORD... meet every word", [](const Params& p) {
                       SpecPtr spec = load_spec(p);
                       std::vector<Word> words;
                       for (const auto& a : p.args) words.push_back(parse_word(spec, a));
                       ExhaustiveResult r = is_exhaustive(spec, words);
                       Outcome o;
                       o.doc["exhaustive"] = r.exhaustive;
                       o.doc["d_max"] = degree_to_json(r.d_max);
                       o.doc["uncovered"] = r.uncovered_code ? bigint_to_json(*r.uncovered_code) : Json(nullptr);
                       if (r.warning) o.doc["warning"] = *r.warning;
                       return o;
                     }};

  h["simplicity"] = {"multiplicative independence of the alphabet sizes", [](const Params& p) {
                       SpecPtr spec = load_spec(p);
                       SimplicityVerdict v = is_simple(spec);
                       Outcome o;
                       o.doc["simple"] = v.simple;
                       if (v.certificate) {
                         o.doc["p"] = degree_to_json(v.certificate->p);
                         o.doc["q"] = degree_to_json(v.certificate->q);
                       }
                       return o;
                     }};

  h["verify-relations"] = {"universal relations and their corollaries in the l2 model", [](const Params& p) {
                             SpecPtr spec = load_spec(p);
                             RelationReport r = verify_universal_relations(*spec);
                             r.merge(verify_properties(*spec, 3, 5));
                             Outcome o;
                             o.doc = report_json(r);
                             o.pass = r.pass();
                             return o;
                           }};

  h["verify-qn"] = {"relations of Q_N and the substitution into it", [](const Params& p) {
                      SpecPtr spec = load_spec(p);
                      RelationReport r = verify_qn_homomorphism(*spec);
                      Outcome o;
                      o.doc = report_json(r);
                      o.pass = r.pass();
                      return o;
                    }};

  h["kernel-witness"] = {"distinct words with equal l2 images, from --p/--q or the dependence",
                         [](const Params& p) {
                           SpecPtr spec = load_spec(p);
                           Degree dp, dq;
                           Outcome o;
                           if (!p.p.empty() || !p.q.empty()) {
                             dp = parse_degree(p.p, spec->rank());
                             dq = parse_degree(p.q, spec->rank());
                           } else {
                             SimplicityVerdict v = is_simple(spec);
                             if (!v.certificate) {
                               o.doc = Json{{"simple", true}, {"witness", nullptr}};
                               return o;
                             }
                             dp = v.certificate->p;
                             dq = v.certificate->q;
                           }
                           KernelWitness w = kernel_witness(spec, dp, dq);
                           o.pass = w.same_semantics && w.distinct_words;
                           o.doc = Json{{"left", format_word(w.left)},
                                        {"right", format_word(w.right)},
                                        {"semantics", w.semantics.to_string()},
                                        {"same_semantics", w.same_semantics},
                                        {"distinct_words", w.distinct_words}};
                           return o;
                         }};

  h["op-eval"] = {"semantics of TERM, its image of --m, or equality with --equals", [](const Params& p) {
                    SpecPtr spec = load_spec(p);
                    Model model;
                    if (p.model == "qfz") {
                      model = Model::qfz(*spec);
                    } else if (p.model == "qn") {
                      model = Model::qn(*spec);
                    } else {
                      throw Error(ErrorKind::Parse, "model is qfz or qn, not '" + p.model + "'");
                    }
                    OpTerm term = parse_op_term(arg(p, 0, "TERM"));
                    Outcome o;
                    o.doc["term"] = term.to_string();
                    if (!p.m.empty()) {
                      o.doc["images"] = scalar_images(eval(term, parse_bigint(p.m), model));
                    } else if (!p.equals.empty()) {
                      OpTerm other = parse_op_term(p.equals);
                      CanonicalOp a = semantics(term, model), b = semantics(other, model);
                      o.doc["equal"] = a == b;
                      auto diff = first_difference(a, b);
                      o.doc["witness"] = diff ? Json(diff->get_str()) : Json(nullptr);
                    } else {
                      o.doc["semantics"] = semantics(term, model).to_string();
                    }
                    return o;
                  }};

  h["path"] = {"range and source of (--angle, --degree); factorize at --front", [](const Params& p) {
                 SpecPtr spec = load_spec(p);
                 PathPoint x{Angle::parse(p.angle), parse_degree(p.degree, spec->rank())};
                 Outcome o;
                 o.doc["range"] = path_json(range(x));
                 o.doc["source"] = path_json(source(*spec, x));
                 if (!p.front.empty()) {
                   auto [a, b] = factorize_path(*spec, x, parse_degree(p.front, spec->rank()));
                   o.doc["factors"] = {path_json(a), path_json(b)};
                 }
                 return o;
               }};

  h["roots"] = {"angles w of degree --degree with source --angle", [](const Params& p) {
                  SpecPtr spec = load_spec(p);
                  Json list = Json::array();
                  for (const auto& w : roots(*spec, Angle::parse(p.angle), parse_degree(p.degree, spec->rank()))) {
                    list.push_back(w.to_string());
                  }
                  Outcome o;
                  o.doc = Json{{"roots", list}};
                  return o;
                }};

  h["orbit"] = {"first root of --from within --epsilon of --target", [](const Params& p) {
                  SpecPtr spec = load_spec(p);
                  if (p.target.empty()) throw Error(ErrorKind::Parse, "orbit needs --target");
                  OrbitWitness w =
                      orbit_approx(*spec, Angle::parse(p.from), Angle::parse(p.target), parse_rational(p.epsilon));
                  Outcome o;
                  o.doc = Json{{"p", degree_to_json(w.p)}, {"root", w.root.to_string()}, {"distance", w.distance.get_str()}};
                  return o;
                }};

  h["contracting"] = {"contracting arc of half-width --delta", [](const Params& p) {
                        SpecPtr spec = load_spec(p);
                        ContractingWitness w = contracting_witness(*spec, parse_rational(p.delta));
                        Outcome o;
                        o.pass = w.pass();
                        o.doc = Json{{"pass", w.pass()},
                                     {"delta", w.delta.get_str()},
                                     {"source_radius", w.source_radius.get_str()},
                                     {"range_inside", w.range_inside},
                                     {"closure_inside", w.closure_inside},
                                     {"strict", w.strict},
                                     {"injective", w.injective}};
                        return o;
                      }};

  h["verify-psystem"] = {"psi identities over --degrees and --exp-range", [](const Params& p) {
                           SpecPtr spec = load_spec(p);
                           std::vector<Degree> degrees =
                               p.degrees.empty() ? default_degrees(spec->rank()) : parse_degree_list(p.degrees, spec->rank());
                           auto [lo, hi] = parse_range(p.exp_range);
                           Outcome o;
                           Json parts;
                           RelationReport all;
                           auto add = [&](const char* name, const RelationReport& r) {
                             parts[name] = report_json(r);
                             all.merge(r);
                           };
                           add("isometry", verify_psi_isometry(*spec, degrees, lo, hi));
                           add("multiplicative", verify_psi_multiplicative(*spec, degrees, lo, hi));
                           add("left_action", verify_left_action(*spec, degrees, lo, hi, p.jmax));
                           RelationReport cp;
                           for (std::size_t c = 0; c < spec->rank(); ++c) cp.merge(verify_cp_covariance(*spec, c));
                           add("covariance", cp);
                           o.pass = all.pass();
                           o.doc["pass"] = o.pass;
                           o.doc["checks"] = all.checks.size();
                           for (auto& [k, v] : parts.items()) o.doc[k] = v;
                           return o;
                         }};

  h["verify-all"] = {"the acceptance suite (or one --criterion)", [](const Params& p) {
                       std::vector<CriterionResult> results;
                       if (p.criterion) {
                         results.push_back(run_criterion(p.criterion, p.seed));
                       } else {
                         results = run_acceptance(p.seed);
                       }
                       Outcome o;
                       Json list = Json::array();
                       for (const auto& r : results) {
                         o.pass = o.pass && r.ok();
                         list.push_back(Json{{"id", r.id},
                                             {"title", r.title},
                                             {"pass", r.ok()},
                                             {"limit_seconds", r.limit},
                                             {"detail", r.detail}});
                       }
                       o.doc = Json{{"pass", o.pass}, {"criteria", list}};
                       return o;
                     }};

  return h;
}

void add_options(CLI::App& sub, const std::string& name, Params& p) {
  sub.add_option("--n", p.n, "alphabet sizes, e.g. 2,3");
  sub.add_option("--theta-file", p.theta_file, "JSON file with a spec or a theta object");
  sub.add_option("--spec", p.spec_json, "inline JSON spec");
  sub.add_flag("--json", p.json, "JSON output for word-valued commands");
  sub.add_option("--seed", p.seed, "seed for randomized runs");
  sub.add_option("args", p.args, "positional arguments");
  if (name == "encode") {
    sub.add_option("--degree", p.degree, "degree to decode at");
    sub.add_option("--code", p.code, "code to decode");
  }
  if (name == "act" || name == "restrict") sub.add_option("--g", p.g, "group element");
  if (name == "solve-restriction") sub.add_option("--l", p.l, "target restriction");
  if (name == "check-axioms") {
    sub.add_option("--g-range", p.g_range, "lo,hi (write --g-range=-30,30)");
    sub.add_option("--max-length,--max-degree", p.max_length, "bound on |u| + |v|");
  }
  if (name == "kernel-witness") {
    sub.add_option("--p", p.p, "degree p of a dependence");
    sub.add_option("--q", p.q, "degree q of a dependence");
  }
  if (name == "op-eval") {
    sub.add_option("--m", p.m, "basis index to evaluate at");
    sub.add_option("--equals", p.equals, "second term to compare with");
    sub.add_option("--model", p.model, "qfz or qn");
  }
  if (name == "path" || name == "roots") {
    sub.add_option("--angle", p.angle, "angle a/b");
    sub.add_option("--degree", p.degree, "degree");
    if (name == "path") sub.add_option("--front", p.front, "front degree to factorize at");
  }
  if (name == "orbit") {
    sub.add_option("--from", p.from, "base angle");
    sub.add_option("--target", p.target, "target angle");
    sub.add_option("--epsilon", p.epsilon, "tolerance");
  }
  if (name == "contracting") sub.add_option("--delta", p.delta, "half-width of the arc");
  if (name == "verify-psystem") {
    sub.add_option("--degrees", p.degrees, "degrees separated by ';', e.g. 1,0;0,1;1,1");
    sub.add_option("--exp-range", p.exp_range, "lo,hi (write --exp-range=-6,6)");
    sub.add_option("--jmax", p.jmax, "left-action shifts in [-jmax, jmax]");
  }
  if (name == "verify-all") sub.add_option("--criterion", p.criterion, "run a single criterion");
}

bool needs_spec(const std::string& name) { return name != "verify-all"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on products of odometers"};
  app.name("odograph");
  app.require_subcommand(1);
  Params params;
  auto table = handlers();
  for (auto& [name, entry] : table) add_options(*app.add_subcommand(name, entry.first), name, params);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n" << "run 'odograph --help' for usage\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (needs_spec(name) && name != "cubic-check") {
      SpecPtr spec = load_spec(params);
      if (!spec->has_standard_theta() && spec->rank() >= 3) {
        err << "warning: explicit theta tables with k >= 3 are only associative if the cubic condition holds; "
               "run cubic-check first\n";
      }
    }
    Outcome o = table.at(name).second(params);
    if (o.text) {
      out << *o.text << "\n";
    } else {
      out << o.doc.dump() << "\n";
    }
    return o.pass ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: Parse: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace odograph
