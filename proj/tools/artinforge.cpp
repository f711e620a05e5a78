#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "artin/asai/asai.hpp"
#include "artin/chr/table.hpp"
#include "artin/errors.hpp"
#include "artin/grp/named.hpp"
#include "artin/lfn/lfunction.hpp"
#include "artin/nt/quartic.hpp"
#include "artin/ogo/go4.hpp"
#include "artin/ogo/monomial.hpp"
#include "artin/par/parallel.hpp"

#ifndef ARTINFORGE_DEFAULT_CORPUS
#define ARTINFORGE_DEFAULT_CORPUS "corpus"
#endif

using namespace artin;
using json = nlohmann::ordered_json;
using grp::GroupPtr;

namespace {

constexpr const char* kVersion = "1.0.0";
// Bumped whenever class, character or subgroup orderings change.
constexpr const char* kOrderings = "orderings-1";

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

std::uint64_t g_seed = 1;
// Equal-degree splitting in the finite-field factorizer always uses this seed.
constexpr std::uint64_t kSplittingSeed = 1;

struct Report {
  json body;
  bool pass = true;
};

json header(const std::string& command) {
  json j;
  j["tool"] = "artinforge";
  j["version"] = kVersion;
  j["orderings"] = kOrderings;
  j["command"] = command;
  j["seed"] = g_seed;
  j["splitting_seed"] = kSplittingSeed;
  return j;
}

// Text form: one "key: value" per line, nested objects indented, arrays of
// scalars one item per line.
void render(std::ostream& os, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render(os, v, depth + 1);
    } else if (v.is_array()) {
      os << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          os << pad << "  -\n";
          render(os, x, depth + 2);
        } else {
          os << pad << "  " << scalar(x) << "\n";
        }
      }
    } else {
      os << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  render(os, r.body, 0);
  os << "status: " << (r.pass ? "pass" : "fail") << "\n";
  return os.str();
}

json lines(const std::string& text) {
  json a = json::array();
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) a.push_back(l);
  return a;
}

// ---------------------------------------------------------------- inputs

GroupPtr load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return grp::load_group_file(spec);
  if (spec == "S4tilde") return ogo::double_cover_S4(ogo::CoverKind::tilde).group;
  if (spec == "S4hat") return ogo::double_cover_S4(ogo::CoverKind::hat).group;
  if (spec.rfind("corpus:", 0) == 0) {
    auto label = spec.substr(7);
    for (const auto& g : grp::corpus_groups(64))
      if (g->label() == label) return g;
    throw PreconditionError("no corpus group labelled " + label);
  }
  return grp::named_group(spec);
}

grp::Subgroup index_two(const GroupPtr& g, std::size_t i) {
  auto hs = grp::subgroups_of_index(g, 2);
  if (i >= hs.size())
    throw PreconditionError("--H " + std::to_string(i) + " out of range: " + std::to_string(hs.size()) +
                            " index-2 subgroups");
  return hs[i];
}

const chr::ClassFunction& character(const GroupPtr& g, std::size_t i, const std::string& flag) {
  const auto& t = *chr::table_of(g);
  if (i >= t.size())
    throw PreconditionError(flag + " " + std::to_string(i) + " out of range: " + std::to_string(t.size()) +
                            " irreducibles");
  return t.irr[i];
}

long parse_field(const std::string& text) {
  std::string s = text.rfind("d=", 0) == 0 ? text.substr(2) : text;
  try {
    std::size_t used = 0;
    long d = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return d;
  } catch (const std::exception&) {
    throw ParseError("--field expects d=<squarefree integer>, got " + text);
  }
}

// "a+b*w" with either part optional, e.g. "3", "w", "-2-5*w".
nt::QuadNum parse_e_coeff(const nt::QuadField& e, std::string t) {
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  auto fail = [&] { return ParseError("cannot parse coefficient '" + t + "' as a+b*w"); };
  if (t.empty()) throw fail();
  mpz_class a = 0, b = 0;
  auto wpos = t.find('w');
  std::string apart = t, bpart;
  if (wpos != std::string::npos) {
    if (wpos + 1 != t.size()) throw fail();
    std::size_t split = std::string::npos;
    for (std::size_t i = wpos; i-- > 1;)
      if (t[i] == '+' || t[i] == '-') {
        split = i;
        break;
      }
    apart = split == std::string::npos ? "" : t.substr(0, split);
    bpart = t.substr(split == std::string::npos ? 0 : split, wpos - (split == std::string::npos ? 0 : split));
    if (!bpart.empty() && bpart.back() == '*') bpart.pop_back();
    if (bpart.empty() || bpart == "+")
      b = 1;
    else if (bpart == "-")
      b = -1;
    else if (b.set_str(bpart[0] == '+' ? bpart.substr(1) : bpart, 10) != 0)
      throw fail();
  }
  if (!apart.empty() && a.set_str(apart[0] == '+' ? apart.substr(1) : apart, 10) != 0) throw fail();
  return nt::QuadNum::from_omega(e, a, b);
}

nt::EPoly parse_epoly(const nt::QuadField& e, const std::string& text) {
  nt::EPoly f;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) f.push_back(parse_e_coeff(e, item));
  if (f.size() < 2) throw ParseError("polynomial needs degree >= 1");
  return f;
}

std::vector<std::string> cycle_lines(const nt::SamplingReport& s) {
  std::vector<std::string> out;
  for (const auto& [p, t] : s.per_prime) out.push_back("p=" + std::to_string(p) + " type=" + nt::to_string(t));
  return out;
}

json sampling_json(const nt::SamplingReport& s, bool per_prime) {
  json j;
  j["samples"] = s.samples;
  j["largest_prime"] = s.largest_prime;
  json counts;
  for (const auto& [t, n] : s.counts) counts[nt::to_string(t)] = n;
  j["counts"] = counts;
  j["tolerance"] = s.tolerance;
  j["s4_consistent"] = s.s4_consistent;
  j["verdict"] = s.verdict;
  if (per_prime) j["primes"] = cycle_lines(s);
  return j;
}

// ---------------------------------------------------------------- subcommands

Report cmd_table(const std::string& group, std::optional<std::size_t> h) {
  auto g = load_group(group);
  Report r;
  r.body = header("table");
  if (h) g = index_two(g, *h).group;
  const auto& t = *chr::table_of(g);
  r.body["group"] = g->label();
  r.body["order"] = g->order();
  r.body["classes"] = g->class_count();
  r.body["degrees"] = t.degrees();
  bool ortho = chr::check_orthogonality(t);
  r.body["orthogonality"] = ortho;
  r.body["table"] = lines(chr::format_table(t));
  json subs = json::array();
  auto hs = grp::subgroups_of_index(g, 2);
  for (std::size_t i = 0; i < hs.size(); ++i)
    subs.push_back("H" + std::to_string(i) + ": order " + std::to_string(hs[i].order()) +
                   (hs[i].group->is_abelian() ? " abelian" : " nonabelian"));
  r.body["index2_subgroups"] = subs;
  r.pass = ortho;
  return r;
}

asai::AsaiSetup setup_of(const std::string& group, std::size_t h, std::size_t sigma) {
  auto g = load_group(group);
  auto hs = index_two(g, h);
  const auto& s = character(hs.group, sigma, "--sigma");
  if (s.degree() != 2) throw PreconditionError("--sigma must select a degree-2 character of H");
  return asai::make_setup(hs, s);
}

json identity_json(const asai::IdentityReport& rep) {
  json a = json::array();
  for (const auto& x : rep.results)
    a.push_back(x.name + ": " + (x.pass ? "pass" : "fail") + (x.normative ? "" : " (informational)") +
                (x.detail.empty() ? "" : " " + x.detail));
  return a;
}

Report cmd_asai(const std::string& group, std::size_t h, std::size_t sigma) {
  auto s = setup_of(group, h, sigma);
  Report r;
  r.body = header("asai");
  r.body["group"] = s.g->label();
  r.body["H"] = h;
  r.body["sigma"] = sigma;
  r.body["sigma_values"] = s.sigma.str();
  auto as = asai::asai_character(s);
  r.body["asai"] = as.str();
  r.body["decomposition"] = chr::format_decomposition(chr::decompose(as, *chr::table_of(s.g)));
  r.body["irreducible"] = asai::asai_is_irreducible(s);
  auto ids = asai::setup_identities(s);
  auto loc = asai::local_formulas(s);
  r.body["identities"] = identity_json(ids);
  r.body["local_formulas"] = identity_json(loc);
  r.pass = ids.failed() == 0 && loc.failed() == 0;
  return r;
}

Report cmd_cuspidal(const std::string& group, std::size_t h, std::size_t sigma) {
  auto s = setup_of(group, h, sigma);
  Report r;
  r.body = header("cuspidal");
  r.body["group"] = s.g->label();
  r.body["H"] = h;
  r.body["sigma"] = sigma;
  r.body["asai_irreducible"] = asai::asai_is_irreducible(s);
  auto ds = asai::dihedral_setups(s);
  r.body["dihedral"] = !ds.empty();
  json cases = json::array();
  for (const auto& d : ds) {
    json c;
    c["M_order"] = d.m.order();
    c["chi"] = d.chi.str();
    try {
      auto v = asai::cuspidality_dihedral(d);
      c["M_normal"] = v.m_normal;
      c["cuspidal"] = v.cuspidal;
      c["extension"] = v.extension ? v.extension->str() : "none";
      if (v.chi_ratio_law) c["chi_ratio_law"] = *v.chi_ratio_law;
      c["explanation"] = v.explanation;
      c["agrees"] = true;
    } catch (const ConsistencyError& e) {
      c["agrees"] = false;
      c["mismatch"] = e.what();
      r.pass = false;
    }
    cases.push_back(c);
  }
  r.body["cases"] = cases;
  return r;
}

Report cmd_classify(const std::string& group, std::size_t rho, std::size_t k) {
  auto g = load_group(group);
  auto sub = index_two(g, k);
  auto c = asai::classify_go4(character(g, rho, "--rho"), sub);
  Report r;
  r.body = header("classify");
  r.body["group"] = g->label();
  r.body["rho"] = rho;
  r.body["K"] = k;
  r.body["restriction"] = "X" + std::to_string(c.sigma) + " * X" + std::to_string(c.sigma2);
  json m = json::array();
  for (const auto& x : c.matches)
    m.push_back(asai::to_string(x.kind) + " " + std::to_string(x.first) + " " + std::to_string(x.second) + " " +
                x.witness);
  r.body["matches"] = m;
  r.body["twist_related"] = c.twist_related;
  r.body["both_selftwisted"] = c.both_selftwisted;
  r.pass = !c.matches.empty();
  return r;
}

Report cmd_monomialize(const std::string& group, std::size_t chi_index) {
  auto g = load_group(group);
  const auto& chi = character(g, chi_index, "--chi");
  auto m = ogo::monomialize_odd(chi);
  Report r;
  r.body = header("monomialize");
  r.body["group"] = g->label();
  r.body["chi"] = chi_index;
  r.body["subgroup_order"] = m.subgroup.order();
  r.body["lambda"] = m.lambda.str();
  r.body["path"] = m.path;
  r.body["quadratic"] = m.quadratic;
  bool ok = chr::induce(m.subgroup, m.lambda) == chi;
  r.body["induced_matches"] = ok;
  r.pass = ok;
  return r;
}

Report cmd_identities(const std::string& group, std::size_t corpus, std::size_t pairs, std::uint64_t seed) {
  std::vector<GroupPtr> groups;
  if (!group.empty())
    groups.push_back(load_group(group));
  else
    groups = grp::corpus_groups(corpus);
  std::map<std::string, std::array<std::size_t, 2>> tally;  // pass, fail
  auto add = [&](const asai::IdentityReport& rep) {
    for (const auto& x : rep.results) {
      if (!x.normative) continue;
      ++tally[x.name][x.pass ? 0 : 1];
    }
  };
  std::vector<asai::AsaiSetup> setups;
  for (const auto& g : groups)
    for (auto& s : asai::all_setups(g, true)) setups.push_back(std::move(s));
  std::vector<asai::IdentityReport> reps(setups.size() * 2);
  par::for_each_index(setups.size(), [&](std::size_t i) {
    reps[2 * i] = asai::setup_identities(setups[i]);
    reps[2 * i + 1] = asai::local_formulas(setups[i]);
  });
  for (const auto& rep : reps) add(rep);
  std::vector<std::pair<std::size_t, std::size_t>> deg2;  // (group, character)
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& t = *chr::table_of(groups[gi]);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t.irr[i].degree() == 2) deg2.emplace_back(gi, i);
  }
  std::mt19937_64 rng(seed);
  std::size_t drawn = 0;
  for (std::size_t k = 0; k < pairs && !deg2.empty(); ++k) {
    auto [gi, i] = deg2[rng() % deg2.size()];
    const auto& t = *chr::table_of(groups[gi]);
    std::vector<std::size_t> same;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t.irr[j].degree() == 2) same.push_back(j);
    auto j = same[rng() % same.size()];
    add(asai::pair_identities(t.irr[i], t.irr[j]));
    ++drawn;
  }
  Report r;
  r.body = header("identities");
  r.body["groups"] = groups.size();
  r.body["setups"] = setups.size();
  r.body["pairs"] = drawn;
  json t = json::object();
  for (const auto& [name, pf] : tally) {
    t[name] = std::to_string(pf[0]) + " pass, " + std::to_string(pf[1]) + " fail";
    if (pf[1]) r.pass = false;
  }
  r.body["tally"] = t;
  return r;
}

Report cmd_quartic_search(const std::string& field, const std::vector<std::uint64_t>& primes,
                          const nt::SearchOptions& opts, std::size_t samples) {
  if (primes.size() != 3) throw PreconditionError("--primes needs exactly three primes");
  auto e = nt::QuadField::make(parse_field(field));
  auto c = nt::search_quartic(e, {primes[0], primes[1], primes[2]}, opts);
  Report r;
  r.body = header("quartic-search");
  r.body["field"] = "d=" + std::to_string(e.d);
  r.body["primes"] = primes;
  r.body["budget"] = opts.budget;
  r.body["repair_height"] = opts.repair_height;
  r.body["coefficients"] = nt::epoly_str(c.coefficients);
  json res = json::array();
  for (std::size_t j = 0; j < 3; ++j)
    res.push_back("mod " + std::to_string(primes[j]) + ": " +
                  nt::poly_str(nt::residue_field(e, primes[j]), c.residues[j]));
  r.body["residues"] = res;
  r.body["discriminant"] = c.disc.str();
  r.body["attempts"] = c.attempts;
  r.body["repairs"] = c.repairs;
  auto flags = nt::verify_candidate(c);
  json f = json::array();
  const char* names[] = {"(i)", "(ii)", "(iii)", "(iv)", "(v)"};
  for (std::size_t i = 0; i < 5; ++i) {
    f.push_back(std::string(names[i]) + " " + (flags[i] ? "true" : "false") + " " + c.evidence[i]);
    r.pass = r.pass && flags[i];
  }
  r.body["conditions"] = f;
  if (samples > 0) {
    auto s = nt::frobenius_sampling(e, c.coefficients, samples);
    r.body["sampling"] = sampling_json(s, false);
    r.pass = r.pass && s.s4_consistent;
  }
  return r;
}

Report cmd_galois_id(const std::string& poly, const std::string& field, std::size_t samples, bool per_prime) {
  Report r;
  r.body = header("galois-id");
  r.body["poly"] = poly;
  if (!field.empty()) {
    auto e = nt::QuadField::make(parse_field(field));
    auto f = parse_epoly(e, poly);
    r.body["field"] = "d=" + std::to_string(e.d);
    auto s = nt::frobenius_sampling(e, f, samples ? samples : 500);
    r.body["sampling"] = sampling_json(s, per_prime);
    r.pass = true;  // sampling is a heuristic report, not a check
    return r;
  }
  auto f = nt::parse_zpoly(poly);
  auto d = lfn::galois_data(f);
  r.body["degree"] = f.size() - 1;
  r.body["discriminant"] = d.disc.get_str();
  r.body["group"] = d.group_name;
  r.body["order"] = d.group->order();
  if (samples > 0) r.body["sampling"] = sampling_json(nt::frobenius_sampling(f, samples), per_prime);
  return r;
}

Report cmd_dedekind(const std::string& poly, std::uint64_t bound, bool verbose) {
  auto f = nt::parse_zpoly(poly);
  auto d = lfn::galois_data(f);
  auto rep = lfn::verify_dedekind(d, bound);
  Report r;
  r.body = header("dedekind-check");
  r.body["poly"] = poly;
  r.body["group"] = d.group_name;
  r.body["bound"] = bound;
  r.body["checked"] = rep.lines.size();
  r.body["skipped_ramified"] = rep.skipped;
  if (rep.first_failure) r.body["first_failure"] = *rep.first_failure;
  json out = json::array();
  for (const auto& l : rep.lines)
    if (verbose || !l.ok) out.push_back(l.str());
  r.body["lines"] = out;
  r.pass = rep.all_ok();
  return r;
}

Report cmd_cover(const std::string& kind) {
  if (kind != "tilde" && kind != "hat") throw PreconditionError("cover expects tilde or hat");
  auto c = ogo::double_cover_S4(kind == "tilde" ? ogo::CoverKind::tilde : ogo::CoverKind::hat);
  Report r;
  r.body = header("cover");
  r.body["kind"] = kind;
  r.body["order"] = c.group->order();
  r.body["transposition_lift_order"] = c.transposition_lift_order;
  r.body["tau"] = c.tau.str();
  const auto& t = *chr::table_of(c.group);
  r.body["degrees"] = t.degrees();
  r.body["table"] = lines(chr::format_table(t));
  r.pass = chr::check_orthogonality(t);
  return r;
}

Report cmd_go4(const std::string& h_name) {
  auto h = load_group(h_name);
  const auto& th = *chr::table_of(h);
  auto fi = ogo::faithful_degree2(th);
  if (!fi) throw PreconditionError(h->label() + " has no faithful degree-2 character");
  auto ext = ogo::go4_extension(h, th.irr[*fi], grp::center(h));
  const auto& te = *chr::table_of(ext.total);
  Report r;
  r.body = header("go4");
  r.body["H"] = h->label();
  r.body["order"] = ext.total->order();
  r.body["asai4"] = ext.asai4.str();
  bool irr = chr::is_irreducible(ext.asai4);
  r.body["asai4_irreducible"] = irr;
  auto w = ogo::is_go_type(ext.asai4, te);
  r.body["go_witness"] = w ? "X" + std::to_string(*w) : "none";
  auto lift = ogo::go4_lift(ext);
  auto rho = chr::inflate(ext.asai4, lift.group, lift.projection);
  auto c = asai::classify_go4(rho, lift.index2);
  r.body["lift_order"] = lift.group->order();
  json m = json::array();
  for (const auto& x : c.matches) m.push_back(asai::to_string(x.kind) + " " + x.witness);
  r.body["classification"] = m;
  r.pass = irr && w.has_value() && c.has(asai::Go4Case::AsaiTwist);
  return r;
}

// ---------------------------------------------------------------- corpus

struct Golden {
  std::string file;
  std::function<Report()> make;
};

std::vector<Golden> golden_set() {
  std::vector<Golden> g;
  for (auto name : {"S3", "S4", "A4", "Q8", "SL(2,3)", "GL(2,3)"}) {
    std::string file = std::string("table_") + name + ".txt";
    std::replace(file.begin(), file.end(), '(', '_');
    std::replace(file.begin(), file.end(), ')', '_');
    std::replace(file.begin(), file.end(), ',', '_');
    g.push_back({file, [n = std::string(name)] { return cmd_table(n, std::nullopt); }});
  }
  g.push_back({"cover_tilde.txt", [] { return cmd_cover("tilde"); }});
  g.push_back({"cover_hat.txt", [] { return cmd_cover("hat"); }});
  g.push_back({"asai_GL23_H0_X4.txt", [] { return cmd_asai("GL(2,3)", 0, 4); }});
  g.push_back({"galois_x4-x-1.txt", [] { return cmd_galois_id("-1,-1,0,0,1", "", 0, false); }});
  g.push_back({"dedekind_x3-x-1.txt", [] { return cmd_dedekind("-1,-1,0,1", 1000, true); }});
  g.push_back({"quartic_search_Qi.txt", [] {
                 nt::SearchOptions o;
                 return cmd_quartic_search("d=-1", {3, 7, 11}, o, 0);
               }});
  return g;
}

std::string corpus_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ARTINFORGE_CORPUS")) return env;
  return ARTINFORGE_DEFAULT_CORPUS;
}

int cmd_corpus(const std::string& action, const std::string& dir_flag) {
  const auto dir = corpus_dir(dir_flag);
  g_seed = 1;  // goldens are always produced with the default seed
  if (action == "regenerate") {
    std::filesystem::create_directories(dir);
    for (const auto& g : golden_set()) {
      std::ofstream out(std::filesystem::path(dir) / g.file, std::ios::binary);
      out << to_text(g.make());
      std::cout << "wrote " << g.file << "\n";
    }
    return kPass;
  }
  if (action != "verify") throw PreconditionError("corpus expects regenerate or verify");
  int code = kPass;
  for (const auto& g : golden_set()) {
    std::ifstream in(std::filesystem::path(dir) / g.file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    bool same = in.good() || in.eof() ? buf.str() == to_text(g.make()) : false;
    if (!std::filesystem::exists(std::filesystem::path(dir) / g.file)) same = false;
    std::cout << (same ? "ok      " : "differs ") << g.file << "\n";
    if (!same) code = kCheckFailed;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"artinforge: exact character-theoretic and arithmetic checks"};
  app.require_subcommand(1);
  bool as_json = false;
  int threads = 1;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "Emit the report as JSON");
  app.add_option("--threads", threads, "Threads for the parallel loops")->check(CLI::Range(1, 1024));
  app.add_option("--seed", seed, "Seed for randomized steps");

  std::string group, poly, field, kind, action, dir;
  std::size_t h = 0, sigma = 0, rho = 0, k = 0, chi = 0, corpus = 24, pairs = 0, samples = 0;
  std::optional<std::size_t> h_opt;
  std::uint64_t bound = 10000;
  bool verbose = false;
  std::vector<std::uint64_t> primes{3, 7, 11};
  nt::SearchOptions search;

  auto* table = app.add_subcommand("table", "Character table of a group");
  table->add_option("--group", group, "Group name or file")->required();
  table->add_option("--H", h_opt, "Use the given index-2 subgroup instead");

  auto add_setup = [&](CLI::App* c) {
    c->add_option("--group", group, "Group name or file")->required();
    c->add_option("--H", h, "Index-2 subgroup (canonical order)")->required();
    c->add_option("--sigma", sigma, "Degree-2 character of H (table order)")->required();
  };
  auto* asai_cmd = app.add_subcommand("asai", "Asai character and identities of one setup");
  add_setup(asai_cmd);
  auto* cusp = app.add_subcommand("cuspidal", "Cuspidality predicate for dihedral setups");
  add_setup(cusp);

  auto* classify = app.add_subcommand("classify", "GO(4) classification of a degree-4 character");
  classify->add_option("--group", group, "Group name or file")->required();
  classify->add_option("--rho", rho, "Degree-4 character (table order)")->required();
  classify->add_option("--K", k, "Index-2 subgroup (canonical order)")->required();

  auto* mono = app.add_subcommand("monomialize", "Write an odd-degree character as induced");
  mono->add_option("--group", group, "Group name or file")->required();
  mono->add_option("--chi", chi, "Character (table order)")->required();

  auto* ids = app.add_subcommand("identities", "Identity suites over one group or the corpus");
  ids->add_option("--group", group, "Group name or file (default: corpus)");
  ids->add_option("--corpus", corpus, "Largest corpus order when no group is given");
  ids->add_option("--pairs", pairs, "Random degree-2 pairs for the tensor identities");

  auto* qs = app.add_subcommand("quartic-search", "Search a quartic over E with the five conditions");
  qs->add_option("--field", field, "d=<squarefree>")->required();
  qs->add_option("--primes", primes, "Three inert primes")->delimiter(',');
  qs->add_option("--budget", search.budget, "Attempt budget");
  qs->add_option("--height", search.repair_height, "Repair height H");
  qs->add_option("--repairs", search.repairs_per_base, "Repairs per residue triple");
  qs->add_option("--samples", samples, "Frobenius samples for the found polynomial (0: skip)");

  auto* gid = app.add_subcommand("galois-id", "Galois group of a polynomial");
  gid->add_option("--poly", poly, "c0,c1,...,cn (over E: a+b*w entries)")->required();
  gid->add_option("--field", field, "d=<squarefree> for polynomials over E");
  gid->add_option("--samples", samples, "Frobenius samples (0: skip over Q)");
  gid->add_flag("--verbose", verbose, "Per-prime cycle types");

  auto* ded = app.add_subcommand("dedekind-check", "Local Dedekind identities");
  ded->add_option("--poly", poly, "c0,c1,...,cn")->required();
  ded->add_option("--bound", bound, "Prime bound");
  ded->add_flag("--verbose", verbose, "Print every prime");

  auto* cover = app.add_subcommand("cover", "Double covers of S4");
  cover->add_option("kind", kind, "tilde or hat")->required();

  auto* go4 = app.add_subcommand("go4", "GO(4) extension over a group H");
  go4->add_option("--H", group, "Base group (default S4tilde)");

  auto* corp = app.add_subcommand("corpus", "Golden files");
  corp->add_option("action", action, "regenerate or verify")->required();
  corp->add_option("--dir", dir, "Golden directory (default $ARTINFORGE_CORPUS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  par::set_threads(threads);
  search.seed = seed;
  g_seed = seed;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (corp->parsed()) return cmd_corpus(action, dir);
    Report r;
    if (table->parsed()) r = cmd_table(group, h_opt);
    else if (asai_cmd->parsed()) r = cmd_asai(group, h, sigma);
    else if (cusp->parsed()) r = cmd_cuspidal(group, h, sigma);
    else if (classify->parsed()) r = cmd_classify(group, rho, k);
    else if (mono->parsed()) r = cmd_monomialize(group, chi);
    else if (ids->parsed()) r = cmd_identities(group, corpus, pairs, seed);
    else if (qs->parsed()) r = cmd_quartic_search(field, primes, search, samples);
    else if (gid->parsed()) r = cmd_galois_id(poly, field, samples, verbose);
    else if (ded->parsed()) r = cmd_dedekind(poly, bound, verbose);
    else if (cover->parsed()) r = cmd_cover(kind);
    else if (go4->parsed()) r = cmd_go4(group.empty() ? "S4tilde" : group);
    if (as_json) {
      json out = r.body;
      out["status"] = r.pass ? "pass" : "fail";
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << to_text(r);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "time: " << secs << " s\n";
    return r.pass ? kPass : kCheckFailed;
  } catch (const SizeLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const SearchFailure& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const PreconditionError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
