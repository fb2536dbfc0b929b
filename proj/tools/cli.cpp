#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "fibfull/cohomology.hpp"
#include "fibfull/degeneration.hpp"
#include "fibfull/error.hpp"
#include "fibfull/strata.hpp"
#include "input.hpp"

namespace fibfull::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

struct Common {
  bool json = false;
  std::string out_path;
  std::vector<long> window;
  std::string field;

  std::optional<Window> window_opt() const {
    if (window.empty()) return std::nullopt;
    Window w{window[0], window[1]};
    w.validate();
    return w;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit JSON");
  sub->add_option("--out", c.out_path, "Write the report to a file");
  sub->add_option("--window", c.window, "Degree window: lo hi")->expected(2);
  sub->add_option("--field", c.field, "Override the coefficient field: Q or a prime p");
}

InputFile load(const std::string& path, const Common& c) {
  InputFile f = read_input(path);
  if (!c.field.empty()) {
    if (c.field == "Q") {
      f.field = Field::rationals();
    } else {
      std::uint64_t p = 0;
      try {
        p = std::stoull(c.field);
      } catch (const std::exception&) {
        throw InputError("--field expects Q or a prime, got '" + c.field + "'");
      }
      f.field = Field::prime(p);
    }
    for (auto& block : f.blocks)
      for (auto& g : block) g = g.coerced(f.field);
  }
  return f;
}

Json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::vector<std::string> poly_strings(const std::vector<Poly>& gens, bool family) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.to_string(family));
  return out;
}

// Tails of zero series hold in every degree.
bool unbounded(long until) { return until > (1L << 39); }

Json signature_json(const CohomologySignature& s) {
  Json j;
  j["r"] = s.r;
  j["field"] = s.field;
  j["order"] = s.order;
  j["hash"] = s.hash;
  j["window"] = {s.window.lo, s.window.hi};
  j["P_h"] = s.P_h.to_string();
  Json h = Json::array();
  for (const auto& row : s.h) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(big(v));
    h.push_back(r);
  }
  j["h"] = h;
  Json tails = Json::array();
  for (std::size_t i = 0; i < s.tails.size(); ++i) {
    Json t{{"i", i}, {"poly", s.tails[i].to_string("nu")}, {"valid_until", nullptr}};
    if (!unbounded(s.tail_until[i])) t["valid_until"] = s.tail_until[i];
    tails.push_back(t);
  }
  j["tails"] = tails;
  Json raw = Json::array();
  for (const auto& v : s.hilbert_raw) raw.push_back(big(v));
  j["hilbert_function"] = raw;
  return j;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

void table_text(std::ostream& o, long lo, long hi, const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
  std::size_t w = 4;
  for (long nu = lo; nu <= hi; ++nu) w = std::max(w, std::to_string(nu).size() + 1);
  for (const auto& [_, r] : rows)
    for (const auto& v : r) w = std::max(w, v.size() + 1);
  o << pad("nu", 6);
  for (long nu = lo; nu <= hi; ++nu) o << pad(std::to_string(nu), w);
  o << "\n";
  for (const auto& [name, r] : rows) {
    o << pad(name, 6);
    for (const auto& v : r) o << pad(v, w);
    o << "\n";
  }
}

void signature_text(std::ostream& o, const CohomologySignature& s) {
  o << "P^" << s.r << " over " << s.field << ", hash " << s.hash << "\n";
  o << "P_h(m) = " << s.P_h.to_string() << "\n";
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  for (std::size_t i = 0; i < s.h.size(); ++i) {
    std::vector<std::string> r;
    for (const auto& v : s.h[i]) r.push_back(v.get_str());
    rows.emplace_back("h" + std::to_string(i), std::move(r));
  }
  table_text(o, s.window.lo, s.window.hi, rows);
  o << "tails:\n";
  for (std::size_t i = 0; i < s.tails.size(); ++i) {
    o << "  h" << i << "(nu) = " << s.tails[i].to_string("nu");
    if (unbounded(s.tail_until[i])) o << " for all nu\n";
    else o << " for nu <= " << s.tail_until[i] << "\n";
  }
}

std::string window_key(long nu) { return std::to_string(nu); }

// ---------------------------------------------------------------- commands

void cmd_table(const std::string& path, const Common& c, std::ostream& o) {
  Ideal I = load(path, c).ideal();
  auto s = sheaf_cohomology_table(I, c.window_opt());
  if (c.json) {
    o << Json{{"schema", kSchema}, {"command", "table"}, {"signature", signature_json(s)}}.dump(2) << "\n";
  } else {
    signature_text(o, s);
  }
}

void cmd_classify(const std::string& path, const Common& c, bool ag_only, std::ostream& o) {
  Ideal I = load(path, c).ideal();
  auto rep = acm_report(I);
  bool ag = rep.acm && rep.type == 1;
  if (c.json) {
    Json j{{"schema", kSchema}, {"command", ag_only ? "ag" : "acm"}, {"acm", rep.acm}, {"ag", ag},
           {"codim", rep.codim}, {"projective_dimension", rep.projective_dimension},
           {"type", rep.type}, {"nonzero_ext", rep.nonzero_ext}};
    j["signature"] = signature_json(sheaf_cohomology_table(I, c.window_opt()));
    o << j.dump(2) << "\n";
    return;
  }
  if (ag_only) {
    o << "AG: " << (ag ? "true" : "false") << "\n";
    o << "ACM: " << (rep.acm ? "true" : "false") << ", type " << rep.type << "\n";
  } else {
    o << "ACM: " << (rep.acm ? "true" : "false") << "\n";
    o << "projective dimension " << rep.projective_dimension << ", codimension " << rep.codim << "\n";
    o << "nonzero Ext indices:";
    for (long i : rep.nonzero_ext) o << " " << i;
    o << "\n";
  }
}

void cmd_compare(const std::string& a, const std::string& b, const Common& c, std::ostream& o) {
  InputFile fa = load(a, c), fb = load(b, c);
  if (!(fa.field == fb.field)) {
    throw InputError("field mismatch: " + a + " is over " + fa.field.name() + ", " + b + " over " + fb.field.name());
  }
  auto sa = sheaf_cohomology_table(fa.ideal(), c.window_opt());
  auto sb = sheaf_cohomology_table(fb.ideal(), c.window_opt());
  auto cmp = compare_signatures(sa, sb);
  if (c.json) {
    Json j{{"schema", kSchema}, {"command", "compare"}, {"same", cmp.same}};
    if (cmp.first) j["first_divergence"] = {{"i", cmp.first->i}, {"nu", cmp.first->nu}};
    j["signatures"] = {signature_json(sa), signature_json(sb)};
    o << j.dump(2) << "\n";
  } else if (cmp.same) {
    o << "SAME STRATUM\n";
  } else {
    o << "DIFFERENT (first divergence: i=" << cmp.first->i << ", nu=" << cmp.first->nu << ")\n";
  }
}

struct LexArgs {
  std::string partition;
  long r = 0;
  bool closed = false, engine = false, both = false;
};

void cmd_lex(const LexArgs& a, const Common& c, std::ostream& o) {
  IntegerPartition lambda = IntegerPartition::parse(a.partition);
  bool want_closed = a.closed || a.both || !a.engine;
  bool want_engine = a.engine || a.both;
  LexIdealData L = lex_ideal(lambda, a.r);
  if (want_closed && lambda.parts().size() == 1 && lambda.largest() == a.r + 1) {
    throw InputError("the closed form does not cover lambda = (r+1)");
  }
  std::optional<CohomologySignature> sig;
  Window w{-6, 6};
  if (want_engine) {
    sig = sheaf_cohomology_table(L.ideal, c.window_opt());
    w = sig->window;
  } else if (auto cw = c.window_opt()) {
    w = *cw;
  }
  std::vector<std::vector<mpz_class>> closed;
  if (want_closed) {
    for (long i = 0; i <= a.r; ++i) {
      std::vector<mpz_class> row;
      for (long nu = w.lo; nu <= w.hi; ++nu) row.push_back(lex_cohomology_closed_form(lambda, a.r, static_cast<std::size_t>(i), nu));
      closed.push_back(std::move(row));
    }
  }
  std::optional<std::pair<long, long>> mismatch;
  if (want_closed && want_engine) {
    for (long i = 0; i <= a.r && !mismatch; ++i)
      for (long nu = w.lo; nu <= w.hi && !mismatch; ++nu)
        if (closed[static_cast<std::size_t>(i)][static_cast<std::size_t>(nu - w.lo)] != sig->at(static_cast<std::size_t>(i), nu))
          mismatch = std::make_pair(i, nu);
  }
  auto gens = poly_strings(L.ideal.generators(), false);
  if (c.json) {
    Json j{{"schema", kSchema}, {"command", "lex"}, {"partition", lambda.to_string()}, {"r", a.r}, {"ideal", gens},
           {"window", {w.lo, w.hi}}};
    if (want_closed) {
      Json rows = Json::array();
      for (const auto& row : closed) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(big(v));
        rows.push_back(r);
      }
      j["closed_form"] = rows;
    }
    if (want_engine) j["engine"] = signature_json(*sig);
    if (want_closed && want_engine) j["agree"] = !mismatch.has_value();
    o << j.dump(2) << "\n";
  } else {
    o << "L(" << lambda.to_string() << ") in P^" << a.r << ": (";
    for (std::size_t k = 0; k < gens.size(); ++k) o << (k ? ", " : "") << gens[k];
    o << ")\n";
    if (want_closed) {
      o << "closed form:\n";
      std::vector<std::pair<std::string, std::vector<std::string>>> rows;
      for (std::size_t i = 0; i < closed.size(); ++i) {
        std::vector<std::string> r;
        for (const auto& v : closed[i]) r.push_back(v.get_str());
        rows.emplace_back("h" + std::to_string(i), std::move(r));
      }
      table_text(o, w.lo, w.hi, rows);
    }
    if (want_engine) {
      o << "engine:\n";
      signature_text(o, *sig);
    }
    if (want_closed && want_engine) o << (mismatch ? "closed form and engine DISAGREE\n" : "closed form and engine agree\n");
  }
  if (mismatch) {
    throw InternalError("lex closed form disagrees with the engine at i=" + std::to_string(mismatch->first) +
                        ", nu=" + std::to_string(mismatch->second));
  }
}

std::vector<Scalar> parse_fibers(const std::string& list, const Field& k) {
  std::vector<Scalar> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    mpq_class q;
    if (q.set_str(tok, 10) != 0) throw InputError("malformed fiber value '" + tok + "'");
    q.canonicalize();
    out.push_back(k.from_rational(q));
  }
  if (out.empty()) throw InputError("--fibers needs at least one value");
  return out;
}

Json local_table_json(const LocalCohTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.dims) rows.push_back(r);
  return rows;
}

struct DegenerateArgs {
  std::string order;
  std::string fibers = "0,1";
  bool check_squarefree = false;
};

// Returns true when the Conca-Varbaro check was falsified.
bool cmd_degenerate(const std::string& path, const DegenerateArgs& a, const Common& c, std::ostream& o) {
  InputFile f = load(path, c);
  Ideal I = f.ideal();
  MonomialOrder order = a.order.empty() ? f.monomial_order("lex") : parse_order(a.order, f.nx);
  FamilyIdeal F = homogenize_ideal(I, order);
  auto fibers = parse_fibers(a.fibers, I.field());
  Json j{{"schema", kSchema}, {"command", "degenerate"}, {"order", order.name()},
         {"weight", F.omega->values()}, {"family", poly_strings(F.ideal.generators(), true)}};
  std::ostringstream text;
  text << "order " << order.name() << "\nweight " << F.omega->to_string() << "\nfamily:\n";
  for (const auto& g : F.ideal.generators()) text << "  " << g.to_string(true) << "\n";

  std::optional<CohomologySignature> generic;
  Json fj = Json::array();
  for (const auto& alpha : fibers) {
    Ideal Z = specialize(F, alpha);
    auto gb = Z.groebner(MonomialOrder::grevlex());
    auto sig = sheaf_cohomology_table(Z, c.window_opt());
    std::string t = alpha.to_string();
    Json e{{"t", t}, {"ideal", poly_strings(gb, false)}, {"hash", sig.hash}, {"P_h", sig.P_h.to_string()}};
    text << "fiber t=" << t << ": (";
    for (std::size_t k = 0; k < gb.size(); ++k) text << (k ? ", " : "") << gb[k].to_string(false);
    text << ")\n";
    if (!alpha.is_zero()) {
      if (!generic) generic = sheaf_cohomology_table(I, c.window_opt());
      bool same = same_stratum(*generic, sig);
      e["same_stratum_as_input"] = same;
      text << "  same stratum as the input: " << (same ? "true" : "false") << "\n";
    }
    fj.push_back(e);
  }
  j["fibers"] = fj;

  bool falsified = false;
  if (a.check_squarefree) {
    auto cv = verify_conca_varbaro(I, order, c.window_opt());
    falsified = cv.falsified();
    j["initial_ideal"] = cv.initial.to_string();
    j["squarefree"] = cv.squarefree;
    j["equal"] = cv.tables_equal;
    if (cv.sheaf_equal) j["sheaf_equal"] = *cv.sheaf_equal;
    j["window"] = {cv.ideal_table.window.lo, cv.ideal_table.window.hi};
    j["local_cohomology"] = {{"ideal", local_table_json(cv.ideal_table)},
                             {"initial", local_table_json(cv.initial_table)}};
    text << "initial ideal " << cv.initial.to_string() << "\n";
    text << "squarefree=" << (cv.squarefree ? "true" : "false") << "\n";
    text << "equal=" << (cv.tables_equal ? "true" : "false") << "\n";
    if (cv.sheaf_equal) text << "sheaf tables equal=" << (*cv.sheaf_equal ? "true" : "false") << "\n";
    if (falsified) text << "FALSIFICATION: square-free initial ideal with different local cohomology\n";
  }
  if (c.json) {
    o << j.dump(2) << "\n";
  } else {
    o << text.str();
  }
  return falsified;
}

FamilyIdeal load_family(const std::string& path, const std::string& homogenize, const Common& c) {
  InputFile f = load(path, c);
  if (!homogenize.empty()) return homogenize_ideal(f.ideal(), parse_order(homogenize, f.nx));
  return f.family();
}

std::string locus_text(const Stratum& s) {
  if (s.generic) return s.excluded.is_constant() ? "all t" : "generic (" + s.excluded.to_string() + " != 0)";
  return s.locus.to_string() + " = 0";
}

void cmd_stratify(const std::string& path, const std::string& homogenize, const Common& c, std::ostream& o) {
  FamilyIdeal F = load_family(path, homogenize, c);
  Window w;
  if (auto cw = c.window_opt()) {
    w = *cw;
  } else {
    w = {0, std::max(0L, family_window(F).hi)};
  }
  auto rep = fitting_stratify(F, w);
  if (c.json) {
    Json strata = Json::array();
    for (const auto& s : rep.strata) {
      Json e;
      e["locus"] = s.generic ? "generic" : s.locus.to_string();
      if (s.generic) e["excluded"] = s.excluded.to_string();
      Json h = Json::object();
      for (const auto& [nu, v] : s.h) h[window_key(nu)] = v;
      e["h"] = h;
      strata.push_back(e);
    }
    Json inv = Json::object();
    for (const auto& [nu, fs] : rep.invariant_factors) {
      Json l = Json::array();
      for (const auto& d : fs) l.push_back(d.to_string());
      inv[window_key(nu)] = l;
    }
    Json j{{"schema", kSchema}, {"command", "stratify"}, {"window", {w.lo, w.hi}}, {"flat", rep.flat},
           {"strata", strata}, {"invariant_factors", inv}};
    o << j.dump(2) << "\n";
    return;
  }
  o << rep.strata.size() << (rep.strata.size() == 1 ? " stratum" : " strata") << " on nu in [" << w.lo << ", "
    << w.hi << "], flat: " << (rep.flat ? "true" : "false") << "\n";
  for (const auto& s : rep.strata) {
    o << "  " << locus_text(s) << ":";
    for (const auto& [nu, v] : s.h) o << " h(" << nu << ")=" << v;
    o << "\n";
  }
}

void cmd_fiberfull(const std::string& path, const std::string& homogenize, long q, const Common& c, std::ostream& o) {
  FamilyIdeal F = load_family(path, homogenize, c);
  auto rep = fiber_full_family_check(F, q, c.window_opt());
  if (c.json) {
    Json per = Json::object();
    for (std::size_t k = 0; k < rep.free_at_q.size(); ++k) per[std::to_string(k + 1)] = static_cast<bool>(rep.free_at_q[k]);
    Json obs = Json::array();
    for (const auto& ob : rep.obstructions) obs.push_back({{"q", ob.q}, {"i", ob.i}, {"mu", ob.mu}});
    Json j{{"schema", kSchema}, {"command", "fiberfull-check"}, {"flat", rep.flat},
           {"window", {rep.window.lo, rep.window.hi}}, {"free", per}, {"fiber_full", rep.fiber_full()},
           {"obstructions", obs}};
    o << j.dump(2) << "\n";
    return;
  }
  if (!rep.flat) o << "family is not flat over k[t]\n";
  for (std::size_t k = 0; k < rep.free_at_q.size(); ++k) {
    o << "q=" << k + 1 << ": " << (rep.free_at_q[k] ? "true" : "false") << "\n";
  }
  for (const auto& ob : rep.obstructions) o << "  not free: q=" << ob.q << " Ext^" << ob.i << " degree " << ob.mu << "\n";
  o << "fiber-full: " << (rep.fiber_full() ? "true" : "false") << "\n";
}

void cmd_betti(const std::string& path, const Common& c, std::ostream& o) {
  Ideal I = load(path, c).ideal();
  auto [minimal, betti] = minimize(free_resolution(I));
  if (c.json) {
    Json e = Json::array();
    for (const auto& [ij, v] : betti.entries()) e.push_back({ij.first, ij.second, v});
    Json j{{"schema", kSchema}, {"command", "betti"}, {"betti", e},
           {"projective_dimension", betti.projective_dimension()}, {"regularity", regularity(betti)}};
    o << j.dump(2) << "\n";
    return;
  }
  o << betti.to_text();
  o << "projective dimension " << betti.projective_dimension() << ", regularity " << regularity(betti) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology tables, fiber-full strata and Groebner degenerations"};
  app.name("fibfull");
  app.require_subcommand(1);
  Common c;
  std::string file, file2, homogenize;
  LexArgs lex;
  DegenerateArgs deg;
  long q = 3;

  auto* table = app.add_subcommand("table", "Sheaf cohomology table h_0..h_r");
  auto* acm = app.add_subcommand("acm", "Arithmetically Cohen-Macaulay test");
  auto* ag = app.add_subcommand("ag", "Arithmetically Gorenstein test");
  auto* compare = app.add_subcommand("compare", "Compare two cohomology signatures");
  auto* lexc = app.add_subcommand("lex", "Lexicographic ideal of a partition");
  auto* degen = app.add_subcommand("degenerate", "Groebner degeneration to the initial ideal");
  auto* strat = app.add_subcommand("stratify", "Fitting stratification of a family over k[t]");
  auto* ff = app.add_subcommand("fiberfull-check", "Freeness of Ext over k[t]/(t^q)");
  auto* betti = app.add_subcommand("betti", "Minimal graded Betti numbers");
  for (auto* s : {table, acm, ag, compare, lexc, degen, strat, ff, betti}) add_common(s, c);
  for (auto* s : {table, acm, ag, compare, degen, strat, ff, betti}) s->add_option("file", file, "Input file")->required();
  compare->add_option("other", file2, "Second input file")->required();
  lexc->add_option("--partition", lex.partition, "Partition, e.g. 2,1")->required();
  lexc->add_option("--r", lex.r, "Projective dimension r")->required();
  auto* mode_closed = lexc->add_flag("--closed-form", lex.closed, "Closed-form values only");
  auto* mode_engine = lexc->add_flag("--engine", lex.engine, "Engine table only");
  auto* mode_both = lexc->add_flag("--both", lex.both, "Both, checked against each other");
  mode_closed->excludes(mode_engine)->excludes(mode_both);
  mode_engine->excludes(mode_both);
  degen->add_option("--order", deg.order, "lex, grevlex or weight w0,..,wN");
  degen->add_option("--fibers", deg.fibers, "Comma-separated values of t");
  degen->add_flag("--check-squarefree", deg.check_squarefree, "Compare local cohomology with the initial ideal");
  for (auto* s : {strat, ff}) s->add_option("--homogenize", homogenize, "Build hom_w of the input for an order");
  ff->add_option("--q", q, "Largest q for k[t]/(t^q)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream buf;
  std::ostream& o = c.out_path.empty() ? out : buf;
  int status = 0;
  try {
    if (table->parsed()) cmd_table(file, c, o);
    else if (acm->parsed()) cmd_classify(file, c, false, o);
    else if (ag->parsed()) cmd_classify(file, c, true, o);
    else if (compare->parsed()) cmd_compare(file, file2, c, o);
    else if (lexc->parsed()) cmd_lex(lex, c, o);
    else if (degen->parsed()) {
      if (cmd_degenerate(file, deg, c, o)) {
        err << "fibfull: internal error: Conca-Varbaro equality falsified\n";
        status = 2;
      }
    } else if (strat->parsed()) cmd_stratify(file, homogenize, c, o);
    else if (ff->parsed()) cmd_fiberfull(file, homogenize, q, c, o);
    else if (betti->parsed()) cmd_betti(file, c, o);
  } catch (const InputError& e) {
    err << "fibfull: error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "fibfull: internal error: " << e.what() << "\n";
    status = 2;
  } catch (const std::exception& e) {
    err << "fibfull: internal error: " << e.what() << "\n";
    status = 2;
  }
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) {
      err << "fibfull: error: cannot write " << c.out_path << "\n";
      return 1;
    }
    f << buf.str();
  }
  return status;
}

}  // namespace fibfull::cli
