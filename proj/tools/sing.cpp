// Command-line front end: singular-locus ideals of hyperplane arrangements.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corpus.hpp"
#include "sing/arrangement.hpp"
#include "sing/hilbert.hpp"
#include "sing/liaison.hpp"
#include "sing/resolution.hpp"

using namespace sing;
using nlohmann::json;

namespace {

struct Globals {
  std::string field = "p:32003";
  std::uint64_t seed = 1;
  bool json = false;
  std::string order = "grevlex";
};

struct IdealChoice {
  std::string which = "jacobian";
  int power = 2;
  bool override_rules = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_graph_file(const std::string& path) { return std::filesystem::path(path).extension() == ".graph"; }

// .arr files load as they are; .graph files become graphic arrangements, cut down to
// P^3 by a generic section when there are more than four vertices.
Arrangement load_arrangement(const std::string& path, std::uint64_t seed) {
  if (!is_graph_file(path)) return Arrangement::parse(read_file(path));
  const auto A = graphic_arrangement(Graph::parse(read_file(path)));
  return A.nvars() > 4 ? generic_section(A, seed) : A;
}

template <class Fn>
auto with_field(const std::string& name, Fn&& fn) {
  if (name == "q" || name == "Q") return fn(RationalField{});
  if (name == "p") return fn(PrimeField{});
  if (name.rfind("p:", 0) == 0) {
    std::uint32_t p = 0;
    try {
      p = static_cast<std::uint32_t>(std::stoul(name.substr(2)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field '" + name + "'");
    }
    return fn(PrimeField(p));
  }
  throw std::invalid_argument("unknown field '" + name + "' (use q or p:<prime>)");
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s == "lex") return MonomialOrder::lex();
  throw std::invalid_argument("unknown order '" + s + "' (use grevlex or lex)");
}

std::vector<int> symbolic_exponents(const Arrangement& A, const IdealChoice& c) {
  std::vector<int> b;
  for (const auto& X : intersection_flats(A)) b.push_back(c.override_rules || X.multiplicity() >= 3 ? c.power : 1);
  return b;
}

template <class Field>
Ideal<Field> build_ideal(const Arrangement& A, const RingPtr<Field>& R, const IdealChoice& c, std::uint64_t seed) {
  if (c.which == "jacobian") return jacobian_ideal(A, R);
  if (c.which == "saturation") return saturate_irrelevant(jacobian_ideal(A, R), seed);
  if (c.which == "top") return top_comb(A, R);
  if (c.which == "radical") return radical_comb(A, R);
  if (c.which == "symbolic") return symbolic_intersection(A, symbolic_exponents(A, c), R, c.override_rules);
  throw std::invalid_argument("unknown ideal '" + c.which + "' (jacobian, saturation, top, radical, symbolic)");
}

std::string flat_string(const Arrangement& A, const Flat& X) {
  return "(" + X.s.to_string(A.names()) + ", " + X.t.to_string(A.names()) + ")";
}

std::string rao_string(const RaoTable& t) {
  if (t.empty()) return "0 (ACM)";
  std::string s;
  for (const auto& [deg, dim] : t) s += (s.empty() ? "" : ", ") + std::to_string(deg) + " -> " + std::to_string(dim);
  return "{" + s + "}";
}

json hilbert_json(const HilbertData& H) {
  std::vector<std::string> num, hp;
  for (const auto& c : H.numerator) num.push_back(c.get_str());
  for (const auto& c : H.polynomial) hp.push_back(c.get_str());
  return {{"polynomial", H.polynomial_string()}, {"coefficients", hp}, {"numerator", num},
          {"dimension", H.dim},               {"regularity_index", H.regularity_index}};
}

std::string hilbert_text(const HilbertData& H) {
  std::ostringstream os;
  os << "Hilbert polynomial: " << H.polynomial_string() << '\n';
  os << "Krull dimension: " << H.dim << '\n';
  os << "index of regularity: " << H.regularity_index << '\n';
  os << "values:";
  for (int s = 0; s <= H.regularity_index + 2; ++s) os << ' ' << H.value(s).get_str();
  os << '\n';
  return os.str();
}

// Accumulates --verify checks; text lines go to `out`, results to the report.
struct Checks {
  json list = json::array();
  std::ostringstream text;
  bool ok = true;
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    ok = ok && pass;
    list.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    text << (pass ? "ok       " : "MISMATCH ") << name << (detail.empty() ? "" : ": " + detail) << '\n';
  }
};

template <class Field>
bool is_saturated(const Ideal<Field>& I, std::uint64_t seed) {
  return ideal_equal(I, saturate_irrelevant(I, seed));
}

template <class Field>
Ideal<Field> comb_ideal(const Arrangement& A, const RingPtr<Field>& R, const std::string& which) {
  if (which == "top") return top_comb(A, R);
  if (which == "radical") return radical_comb(A, R);
  throw std::invalid_argument("liaison commands work with --ideal top or --ideal radical");
}

// Liaison addition of the curves of A and B (Z = F_B I_A + F_A I_B) and its checks.
template <class Field>
void verify_addition(const Arrangement& A, const Arrangement& B, const RingPtr<Field>& R, const std::string& which,
                     std::uint64_t seed, Checks& checks, json& report) {
  const auto hyp = arrangement_product_hypotheses(A, B);
  checks.add("product hypotheses", hyp.holds, std::to_string(hyp.witnesses.size()) + " witnesses");
  const auto IA = comb_ideal(A, R, which), IB = comb_ideal(B, R, which);
  const auto FA = defining_polynomial(A, *R), FB = defining_polynomial(B, *R);
  const auto step = liaison_addition_step(IA, FA, IB, FB);
  checks.add("Hilbert additivity", step.hilbert_additive());
  checks.add("output saturated", is_saturated(step.output, seed));
  checks.add("output equals ideal of the product", ideal_equal(step.output, comb_ideal(A + B, R, which)));
  const auto rao = rao_dimensions(step.output);
  const auto expected = add_rao(shift_rao(rao_dimensions(IA), step.d2), shift_rao(rao_dimensions(IB), step.d1));
  checks.add("Rao bookkeeping", rao == expected, "computed " + rao_string(rao) + ", expected " + rao_string(expected));
  report["rao"] = rao_json(rao);
  report["degree"] = curve_degree(step.output);
}

template <class Field>
void verify_bdl(const Arrangement& A, const LinearForm& L, const RingPtr<Field>& R, const std::string& which,
                std::uint64_t seed, Checks& checks, json& report) {
  const auto I = comb_ideal(A, R, which);
  const auto step = basic_double_link_step(I, defining_polynomial(A, *R), L.to_polynomial(*R));
  checks.add("Hilbert additivity", step.hilbert_additive());
  checks.add("output saturated", is_saturated(step.output, seed));
  const Arrangement AL = A + Arrangement(A.names(), {L});
  checks.add("output equals ideal of the product", ideal_equal(step.output, comb_ideal(AL, R, which)));
  const auto before = rao_dimensions(I), after = rao_dimensions(step.output);
  checks.add("Rao shift by one", after == shift_rao(before, 1),
             "before " + rao_string(before) + ", after " + rao_string(after));
  report["rao"] = rao_json(after);
  report["degree"] = curve_degree(step.output);
}

struct Output {
  json report;
  std::string text;
  bool ok = true;
};

template <class Field>
void verify_construction(const Construction& c, const RingPtr<Field>& R, const std::string& which, std::uint64_t seed,
                         Checks& checks) {
  Arrangement acc = c.parts.front();
  for (std::size_t k = 1; k < c.parts.size(); ++k) {
    json dummy;
    verify_addition(acc, c.parts[k], R, which, seed, checks, dummy);
    acc = acc + c.parts[k];
  }
  for (const auto& L : c.extra) {
    json dummy;
    verify_bdl(acc, L, R, which, seed, checks, dummy);
    acc = acc + Arrangement(acc.names(), {L});
  }
}

template <class Field>
Output run_construct(const Construction& c, const RingPtr<Field>& R, const std::string& which, bool verify,
                     std::uint64_t seed) {
  Output o;
  o.report["planes"] = c.arrangement.size();
  o.report["arrangement"] = c.arrangement.to_text();
  o.report["predicted_rao"] = rao_json(c.predicted_rao);
  std::ostringstream os;
  os << c.arrangement.to_text();
  os << "planes: " << c.arrangement.size() << '\n';
  os << "predicted Rao module: " << rao_string(c.predicted_rao) << '\n';
  if (which == "top") {
    o.report["predicted_degree"] = c.predicted_degree;
    os << "predicted degree: " << c.predicted_degree << '\n';
  }
  if (verify) {
    Checks checks;
    verify_construction(c, R, which, seed, checks);
    const auto I = comb_ideal(c.arrangement, R, which);
    const auto rao = rao_dimensions(I);
    checks.add("Rao module", rao == c.predicted_rao, "computed " + rao_string(rao));
    if (which == "top") {
      const long deg = curve_degree(I);
      checks.add("degree", deg == c.predicted_degree, "computed " + std::to_string(deg));
    }
    o.report["computed_rao"] = rao_json(rao);
    o.report["checks"] = checks.list;
    o.ok = checks.ok;
    os << checks.text.str();
  }
  o.text = os.str();
  return o;
}

std::string normalize(const std::string& s) {
  std::istringstream in(s);
  std::string w, out;
  while (in >> w) out += (out.empty() ? "" : " ") + w;
  return out;
}

template <class Field>
Output run_corpus(const std::string& dir, Field field, std::uint64_t seed, bool all) {
  Output o;
  o.report["entries"] = json::array();
  std::ostringstream os;
  for (const auto& e : corpus::entries()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto A = load_arrangement((std::filesystem::path(dir) / e.file).string(), seed);
    if (!all && !Field::kModular && is_graph_file(e.file)) {
      o.report["entries"].push_back({{"name", e.name}, {"skipped", true}});
      os << "SKIP " << e.name << " (generic sections carry large coefficients over Q; use --all)\n";
      continue;
    }
    const auto R = arrangement_ring(A, field);
    const std::string which =
        e.which == corpus::Which::jacobian ? "jacobian" : e.which == corpus::Which::top ? "top" : "radical";
    const auto I = build_ideal(A, R, IdealChoice{which}, seed);
    std::vector<std::string> problems;
    if (!e.total.empty()) {
      const auto B = betti_table(minimal_free_resolution(I));
      std::vector<std::string> rows;
      for (int j = 1; j < B.rows(); ++j) {
        const auto r = B.row(j);
        if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; })) continue;
        std::string line = std::to_string(j) + ":";
        for (int v : r) line += " " + (v == 0 ? std::string("-") : std::to_string(v));
        rows.push_back(line);
      }
      std::vector<std::string> want;
      for (const auto& r : e.rows) want.push_back(normalize(r));
      if (rows != want) problems.push_back("Betti rows differ");
      std::string tot;
      for (int v : B.totals()) tot += (tot.empty() ? "" : " ") + std::to_string(v);
      if (tot != e.total) problems.push_back("Tot " + tot + " (expected " + e.total + ")");
    }
    if (!e.hilbert.empty()) {
      const auto hp = hilbert(I).polynomial_string();
      if (hp != e.hilbert) problems.push_back("HP " + hp + " (expected " + e.hilbert + ")");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = problems.empty();
    o.ok = o.ok && pass;
    std::string detail;
    for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
    o.report["entries"].push_back({{"name", e.name}, {"pass", pass}, {"detail", detail}, {"seconds", secs}});
    os << (pass ? "PASS " : "FAIL ") << e.name << " (" << std::fixed << std::setprecision(2) << secs << "s)"
       << (detail.empty() ? "" : ": " + detail) << '\n';
  }
  o.text = os.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sing: singular loci of hyperplane arrangements"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "coefficient field: q or p:<prime> (prime > 20000)")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for random choices")->capture_default_str();
  app.add_flag("--json", g.json, "print a JSON report");
  app.add_option("--order", g.order, "monomial order for printed Groebner bases (grevlex, lex)")
      ->capture_default_str();
  app.fallthrough();

  std::string file, file2, plane, data_dir = "data";
  IdealChoice choice;
  std::string liaison_ideal = "top";
  bool want_betti = false, want_hilbert = false, want_cm = false, want_gb = false, verify = false, do_section = false, corpus_all = false;
  int r = 1, h = 0;

  auto add_ideal_opts = [&](CLI::App* c) {
    c->add_option("--ideal", choice.which, "jacobian, saturation, top, radical or symbolic")->capture_default_str();
    c->add_option("--power", choice.power, "exponent for symbolic intersections")->capture_default_str();
    c->add_flag("--override", choice.override_rules, "apply --power to every flat");
  };
  auto add_report_opts = [&](CLI::App* c) {
    c->add_flag("--betti", want_betti, "print the Betti table");
    c->add_flag("--hilbert", want_hilbert, "print Hilbert data");
    c->add_flag("--cm", want_cm, "report Cohen-Macaulayness");
    c->add_flag("--gb", want_gb, "print the reduced Groebner basis");
  };

  auto* lattice = app.add_subcommand("lattice", "codimension-two flats and their multiplicities");
  lattice->add_option("file", file)->required();
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"jacobian", "Jacobian ideal"},
           {"radical", "radical of the Jacobian ideal (intersection of flat primes)"},
           {"top", "top-dimensional part of the Jacobian ideal"},
           {"symbolic", "intersection of powers of the flat primes"}}) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file)->required();
    add_report_opts(c);
    if (name == "symbolic") {
      c->add_option("--power", choice.power, "exponent on flats with at least three planes")->capture_default_str();
      c->add_flag("--override", choice.override_rules, "use --power on every flat");
    }
  }
  auto* betti = app.add_subcommand("betti", "graded Betti table");
  betti->add_option("file", file)->required();
  add_ideal_opts(betti);
  auto* hilb = app.add_subcommand("hilbert", "Hilbert function and polynomial");
  hilb->add_option("file", file)->required();
  add_ideal_opts(hilb);
  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay verdicts for J, its saturation, top part and radical");
  cm->add_option("file", file)->required();
  auto* rao = app.add_subcommand("rao", "dimensions of the Hartshorne-Rao module");
  rao->add_option("file", file)->required();
  add_ideal_opts(rao);
  auto* hyp = app.add_subcommand("hypothesis", "does some plane contain two flats of multiplicity >= 3?");
  hyp->add_option("file", file)->required();
  auto* graphic = app.add_subcommand("graphic", "graphic arrangement of a graph");
  graphic->add_option("file", file)->required();
  graphic->add_flag("--section", do_section, "restrict to a general P^3");
  auto* tri = app.add_subcommand("triangles", "do two 3-cycles share an edge?");
  tri->add_option("file", file)->required();
  auto* section = app.add_subcommand("section", "restriction to a general P^3");
  section->add_option("file", file)->required();
  auto* ladd = app.add_subcommand("liaison-add", "liaison addition of the curves of two arrangements");
  ladd->add_option("first", file)->required();
  ladd->add_option("second", file2)->required();
  ladd->add_option("--ideal", liaison_ideal, "top or radical")->capture_default_str();
  ladd->add_flag("--verify", verify, "check additivity, saturation and Rao bookkeeping");
  auto* bdl = app.add_subcommand("bdl", "basic double link by one more plane");
  bdl->add_option("file", file)->required();
  bdl->add_option("--plane", plane, "the added plane (default: a general plane from --seed)");
  bdl->add_option("--ideal", liaison_ideal, "top or radical")->capture_default_str();
  bdl->add_flag("--verify", verify, "check additivity, saturation and the Rao shift");
  auto* clr = app.add_subcommand("construct-lr", "arrangement whose top curve has an r-dimensional Rao module");
  auto* clrr = app.add_subcommand("construct-lr-radical", "same, for the reduced curve");
  for (auto* c : {clr, clrr}) {
    c->set_help_flag("--help", "print this help message and exit");
    c->add_option("--r", r, "dimension of the Rao module")->capture_default_str();
    c->add_option("--h", h, "number of extra general planes")->capture_default_str();
    c->add_flag("--verify", verify, "recompute every prediction");
  }
  auto* corp = app.add_subcommand("corpus", "run the regression examples");
  corp->add_option("--data", data_dir, "directory holding the example files")->capture_default_str();
  corp->add_flag("--all", corpus_all, "over Q, also run the sectioned graphic arrangements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const auto t0 = std::chrono::steady_clock::now();
  json report{{"schema", 1}, {"field", g.field}, {"seed", g.seed}};
  Output out;
  try {
    auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    report["command"] = name;
    const auto order = parse_order(g.order);
    out = with_field(g.field, [&](auto field) -> Output {
      using Field = decltype(field);
      Output o;
      std::ostringstream os;
      if (name == "lattice") {
        const auto A = load_arrangement(file, g.seed);
        const auto flats = intersection_flats(A);
        std::map<int, int> by_e;
        long pairs = 0;
        json fl = json::array();
        for (const auto& X : flats) {
          ++by_e[X.multiplicity()];
          pairs += static_cast<long>(X.multiplicity()) * (X.multiplicity() - 1) / 2;
          std::vector<std::string> members;
          for (int m : X.members) members.push_back(A.form_string(m));
          fl.push_back({{"basis", {X.s.to_string(A.names()), X.t.to_string(A.names())}},
                        {"multiplicity", X.multiplicity()},
                        {"members", members}});
        }
        const long d = A.size();
        json counts = json::object();
        for (const auto& [e, n] : by_e) counts[std::to_string(e)] = n;
        o.report = {{"planes", d}, {"flats", fl}, {"counts", counts}, {"pair_count", pairs},
                    {"pair_count_ok", pairs == d * (d - 1) / 2}};
        os << "planes: " << d << "\nflats: " << flats.size() << '\n';
        for (const auto& [e, n] : by_e) os << "  multiplicity " << e << ": " << n << '\n';
        for (const auto& X : flats) {
          os << "  " << flat_string(A, X) << "  e=" << X.multiplicity() << ":";
          for (int m : X.members) os << ' ' << A.form_string(m);
          os << '\n';
        }
        const auto deg = combinatorial_degrees(A);
        os << "degree of the reduced curve: " << deg.reduced << "\ndegree of the top curve: " << deg.top << '\n';
        o.report["degree_reduced"] = deg.reduced;
        o.report["degree_top"] = deg.top;
      } else if (name == "jacobian" || name == "radical" || name == "top" || name == "symbolic") {
        const auto A = load_arrangement(file, g.seed);
        const auto R = arrangement_ring(A, field);
        IdealChoice c = choice;
        c.which = name;
        const auto I = build_ideal(A, R, c, g.seed);
        std::vector<std::string> gens;
        for (const auto& f : I.generators()) gens.push_back(R->to_string(f));
        o.report["generators"] = gens;
        if (!want_betti && !want_hilbert && !want_cm && !want_gb) {
          for (const auto& s : gens) os << s << '\n';
        }
        if (want_gb) {
          const auto& gb = I.groebner(order);
          std::vector<std::string> b;
          for (const auto& f : gb.polys) b.push_back(gb.ring->to_string(f));
          o.report["groebner_basis"] = b;
          for (const auto& s : b) os << s << '\n';
        }
        if (want_betti || want_cm) {
          const auto B = betti_table(minimal_free_resolution(I));
          if (want_betti) {
            o.report["betti"] = B.to_json();
            os << B.to_text();
          }
          if (want_cm) {
            const auto H = hilbert(I);
            const int codim = R->nvars() - H.dim, pd = B.columns() - 1;
            o.report["cm"] = codim == pd;
            o.report["codim"] = codim;
            o.report["projective_dimension"] = pd;
            os << "Cohen-Macaulay: " << (codim == pd ? "yes" : "no") << " (codim " << codim << ", pd " << pd << ")\n";
          }
        }
        if (want_hilbert) {
          const auto H = hilbert(I);
          o.report["hilbert"] = hilbert_json(H);
          os << hilbert_text(H);
        }
      } else if (name == "betti" || name == "hilbert" || name == "rao") {
        const auto A = load_arrangement(file, g.seed);
        const auto R = arrangement_ring(A, field);
        const auto I = build_ideal(A, R, choice, g.seed);
        o.report["ideal"] = choice.which;
        if (name == "betti") {
          const auto B = betti_table(minimal_free_resolution(I));
          o.report["betti"] = B.to_json();
          os << B.to_text();
        } else if (name == "hilbert") {
          const auto H = hilbert(I);
          o.report["hilbert"] = hilbert_json(H);
          os << hilbert_text(H);
        } else {
          const auto t = rao_dimensions(I);
          o.report["rao"] = rao_json(t);
          if (t.empty()) os << "Rao module is zero (ACM)\n";
          for (const auto& [deg, dim] : t) os << "degree " << deg << ": " << dim << '\n';
        }
      } else if (name == "cm") {
        const auto A = load_arrangement(file, g.seed);
        const auto R = arrangement_ring(A, field);
        const auto J = jacobian_ideal(A, R);
        const auto Jsat = saturate_irrelevant(J, g.seed);
        const auto top = top_comb(A, R), rad = radical_comb(A, R);
        const bool saturated = ideal_equal(J, Jsat), unmixed = ideal_equal(Jsat, top);
        o.report["saturated"] = saturated;
        o.report["unmixed"] = unmixed;
        os << "J saturated: " << (saturated ? "yes" : "no") << '\n';
        os << "J^sat equals its top part: " << (unmixed ? "yes" : "no") << '\n';
        for (const auto& [label, I] : std::vector<std::pair<std::string, const Ideal<Field>*>>{
                 {"jacobian", &J}, {"top", &top}, {"radical", &rad}}) {
          const auto d = dimensions(*I);
          const bool v = d.projective == d.codim;
          o.report["cm_" + label] = v;
          os << "R/" << label << ": " << (v ? "Cohen-Macaulay" : "not Cohen-Macaulay") << " (codim " << d.codim
             << ", pd " << d.projective << ")\n";
        }
      } else if (name == "hypothesis") {
        const auto A = load_arrangement(file, g.seed);
        const auto flats = intersection_flats(A);
        const auto res = hypothesis_check(A);
        json w = json::array();
        os << "holds: " << (res.holds ? "true" : "false") << '\n';
        for (const auto& x : res.witnesses) {
          w.push_back({{"plane", A.form_string(x.plane)},
                       {"flats", {flat_string(A, flats[static_cast<std::size_t>(x.flat1)]),
                                  flat_string(A, flats[static_cast<std::size_t>(x.flat2)])}}});
          os << "plane " << A.form_string(x.plane) << " contains " << flat_string(A, flats[static_cast<std::size_t>(x.flat1)])
             << " and " << flat_string(A, flats[static_cast<std::size_t>(x.flat2)]) << '\n';
        }
        o.report["holds"] = res.holds;
        o.report["witnesses"] = w;
      } else if (name == "graphic") {
        auto A = graphic_arrangement(Graph::parse(read_file(file)));
        if (do_section) A = generic_section(A, g.seed);
        o.report["arrangement"] = A.to_text();
        os << A.to_text();
      } else if (name == "triangles") {
        const auto G = Graph::parse(read_file(file));
        const auto res = triangle_condition(G);
        auto tri_str = [](const std::array<int, 3>& t) {
          return std::to_string(t[0] + 1) + "-" + std::to_string(t[1] + 1) + "-" + std::to_string(t[2] + 1);
        };
        json w = json::array();
        os << "triangles: " << res.triangles.size() << "\nholds: " << (res.holds ? "true" : "false") << '\n';
        for (const auto& x : res.witnesses) {
          const std::string edge = std::to_string(x.edge.first + 1) + " " + std::to_string(x.edge.second + 1);
          w.push_back({{"edge", edge}, {"cycles", {tri_str(x.cycle1), tri_str(x.cycle2)}}});
          os << "edge " << edge << " lies on " << tri_str(x.cycle1) << " and " << tri_str(x.cycle2) << '\n';
        }
        o.report["triangles"] = res.triangles.size();
        o.report["holds"] = res.holds;
        o.report["witnesses"] = w;
      } else if (name == "section") {
        const auto A = is_graph_file(file) ? graphic_arrangement(Graph::parse(read_file(file)))
                                           : Arrangement::parse(read_file(file));
        const auto B = generic_section(A, g.seed);
        o.report["arrangement"] = B.to_text();
        os << B.to_text();
      } else if (name == "liaison-add") {
        const auto A = load_arrangement(file, g.seed), B = load_arrangement(file2, g.seed);
        const auto R = arrangement_ring(A, field);
        const auto IA = comb_ideal(A, R, liaison_ideal), IB = comb_ideal(B, R, liaison_ideal);
        const auto Z = liaison_addition(IA, defining_polynomial(A, *R), IB, defining_polynomial(B, *R));
        std::vector<std::string> gens;
        for (const auto& f : Z.generators()) gens.push_back(R->to_string(f));
        o.report["generators"] = gens;
        os << "generators: " << gens.size() << '\n';
        if (verify) {
          Checks checks;
          verify_addition(A, B, R, liaison_ideal, g.seed, checks, o.report);
          o.report["checks"] = checks.list;
          o.ok = checks.ok;
          os << checks.text.str();
        }
        os << "Rao module: " << rao_string(rao_dimensions(Z)) << "\ndegree: " << curve_degree(Z) << '\n';
      } else if (name == "bdl") {
        const auto A = load_arrangement(file, g.seed);
        const auto R = arrangement_ring(A, field);
        std::mt19937_64 rng(g.seed);
        const auto L = plane.empty() ? detail::general_plane(A, rng) : LinearForm::parse(plane, A.names());
        const auto I = comb_ideal(A, R, liaison_ideal);
        const auto Z = basic_double_link(I, defining_polynomial(A, *R), L.to_polynomial(*R));
        o.report["plane"] = L.to_string(A.names());
        os << "plane: " << L.to_string(A.names()) << '\n';
        if (verify) {
          Checks checks;
          verify_bdl(A, L, R, liaison_ideal, g.seed, checks, o.report);
          o.report["checks"] = checks.list;
          o.ok = checks.ok;
          os << checks.text.str();
        }
        os << "Rao module: " << rao_string(rao_dimensions(Z)) << "\ndegree: " << curve_degree(Z) << '\n';
      } else if (name == "construct-lr" || name == "construct-lr-radical") {
        const bool top = name == "construct-lr";
        const auto c = top ? construct_Lr(r, h, g.seed) : construct_Lr_radical(r, h, g.seed);
        const auto R = arrangement_ring(c.arrangement, field);
        return run_construct(c, R, top ? "top" : "radical", verify, g.seed);
      } else if (name == "corpus") {
        return run_corpus(data_dir, field, g.seed, corpus_all);
      }
      o.text = os.str();
      return o;
    });
  } catch (const InternalLimit& e) {
    std::cerr << "internal limit: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  for (auto it = out.report.begin(); it != out.report.end(); ++it) report[it.key()] = it.value();
  report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report["ok"] = out.ok;
  if (g.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << out.text;
  }
  if (!out.ok) {
    std::cerr << "verification failed\n";
    return 1;
  }
  return 0;
}
