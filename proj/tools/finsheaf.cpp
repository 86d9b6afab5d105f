// finsheaf: command-line front end. Every check is emitted as one record,
// either a text line or a JSON line {theorem, instance, pass, counterexample?}.
// Exit status: 0 when every record passes, 1 when some check fails, 2 on
// input, cap or usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "finsheaf/alg/limits.hpp"
#include "finsheaf/catalog.hpp"
#include "finsheaf/compord/decompose.hpp"
#include "finsheaf/compord/spaces.hpp"
#include "finsheaf/gelfand/gelfand.hpp"
#include "finsheaf/order/domain.hpp"
#include "finsheaf/order/enumerate.hpp"
#include "finsheaf/order/io.hpp"
#include "finsheaf/sheaf/theorems.hpp"

using namespace finsheaf;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct caps_config {
  std::size_t lattice = 6;
  std::size_t points = 5;
  std::size_t carrier = 64;
  std::size_t ring = 60;
};

std::size_t env_cap(char const* var, std::size_t fallback) {
  char const* v = std::getenv(var);
  if (v == nullptr || *v == '\0') {
    return fallback;
  }
  std::size_t pos = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(v, &pos);
  } catch (std::logic_error const&) {
    pos = 0;
  }
  if (pos != std::string(v).size() || n == 0) {
    throw error("BadConfig", std::string(var) + " must be a positive integer, got '" + v + "'");
  }
  return n;
}

caps_config caps_from_env() {
  caps_config c;
  c.lattice = env_cap("FINSHEAF_MAX_LATTICE", c.lattice);
  c.points = env_cap("FINSHEAF_MAX_POINTS", c.points);
  c.carrier = env_cap("FINSHEAF_MAX_CARRIER", c.carrier);
  c.ring = env_cap("FINSHEAF_MAX_RING", c.ring);
  return c;
}

class reporter {
 public:
  reporter(std::ostream& os, std::string format, bool timing)
      : os_(os), format_(std::move(format)), timing_(timing) {}

  bool json_mode() const { return format_ == "json"; }
  bool dot_mode() const { return format_ == "dot"; }
  bool all_pass() const { return all_pass_; }
  std::ostream& raw() { return os_; }

  void emit(std::string const& theorem, std::string const& instance, bool pass,
            std::string const& counterexample = {}, json extra = json::object()) {
    all_pass_ = all_pass_ && pass;
    if (dot_mode()) {
      return;
    }
    if (timing_) {
      auto const dt = std::chrono::steady_clock::now() - t0_;
      extra["seconds"] = std::chrono::duration<double>(dt).count();
    }
    if (json_mode()) {
      json j;
      j["theorem"] = theorem;
      j["instance"] = instance;
      j["pass"] = pass;
      if (!pass && !counterexample.empty()) {
        j["counterexample"] = counterexample;
      }
      for (auto& [k, v] : extra.items()) {
        j[k] = v;
      }
      os_ << j.dump() << '\n';
    } else {
      os_ << (pass ? "PASS " : "FAIL ") << theorem << ' ' << instance;
      for (auto& [k, v] : extra.items()) {
        os_ << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      if (!pass && !counterexample.empty()) {
        os_ << " counterexample: " << counterexample;
      }
      os_ << '\n';
    }
    os_.flush();
  }

  // One record per item of a check report.
  void emit_report(std::string const& theorem, std::string const& instance,
                   check_report const& r) {
    for (auto const& it : r.items) {
      emit(theorem + "/" + it.name, instance, it.pass, it.witness);
    }
  }

 private:
  std::ostream& os_;
  std::string format_;
  bool timing_;
  bool all_pass_ = true;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

bool is_file(std::string const& s) { return fs::is_regular_file(s); }

std::string stem(std::string const& s) { return is_file(s) ? fs::path(s).stem().string() : s; }

order::lattice load_lattice(std::string const& s) {
  return is_file(s) ? order::read_lattice_file(s) : catalog::lattice_by_name(s);
}

alg::algebra_ref load_algebra(std::string const& s) {
  return is_file(s) ? alg::share(alg::read_algebra_file(s)) : catalog::algebra_by_name(s);
}

order::poset load_poset(std::string const& s) {
  if (is_file(s)) {
    return order::read_poset_file(s);
  }
  if (s.rfind("chain", 0) == 0) {
    return order::poset::chain(std::stoul(s.substr(5)));
  }
  if (s.rfind("antichain", 0) == 0) {
    return order::poset::from_relations(std::stoul(s.substr(9)), {});
  }
  throw error("UnknownPoset", "no poset file or built-in named '" + s + "'");
}

gelfand::ring load_ring(std::string const& s, caps_config const& caps) {
  gelfand::ring r = is_file(s) ? gelfand::ring(alg::share(alg::read_algebra_file(s)))
                               : gelfand::parse_ring_spec(s);
  if (r.size() > caps.ring) {
    throw cap_exceeded("ring " + s, r.size(), caps.ring);
  }
  return r;
}

json subset_json(subset s) {
  json a = json::array();
  for (auto x : members(s)) {
    a.push_back(x);
  }
  return a;
}

// ---------------------------------------------------------------------------

void check_lattice(reporter& out, std::string const& file) {
  auto p = order::read_poset_file(file);
  if (out.dot_mode()) {
    out.raw() << order::to_dot(p);
  }
  std::optional<order::lattice> l;
  std::string why;
  try {
    l = order::lattice::from_poset(p);
  } catch (order::lattice_error const& e) {
    why = e.what();
  }
  json extra{{"size", p.size()}};
  if (l) {
    extra["distributive"] = l->is_distributive();
    extra["continuous"] = order::is_continuous(*l);
  }
  out.emit("check-lattice", stem(file), l.has_value(), why, extra);
}

void check_algebra(reporter& out, std::string const& file, caps_config const& caps) {
  auto a = alg::read_algebra_file(file);
  json ops = json::array();
  for (std::size_t i = 0; i < a.sig().size(); ++i) {
    ops.push_back(a.sig()[i].name + "/" + std::to_string(a.sig()[i].arity));
  }
  alg::congruence_caps cc;
  cc.carrier = caps.carrier;
  auto cons = alg::all_congruences(a, cc);
  out.emit("check-algebra", stem(file), true, {},
           {{"size", a.size()}, {"operations", ops}, {"congruences", cons.size()}});
}

void con_lattice(reporter& out, alg::algebra_ref const& a, std::string const& name,
                 caps_config const& caps) {
  alg::congruence_caps cc;
  cc.carrier = caps.carrier;
  auto con = alg::congruence_lattice(*a, cc);
  std::vector<std::string> labels;
  for (auto const& c : con.cons) {
    labels.push_back(c.to_string());
  }
  if (out.dot_mode()) {
    out.raw() << order::to_dot(con.lat.order(), labels, "congruences");
  }
  bool permutable = true;
  std::string witness;
  for (auto const& t1 : con.cons) {
    for (auto const& t2 : con.cons) {
      if (permutable && !alg::commuting_equivalences_report(a, t1, t2).value()) {
        permutable = false;
        witness = t1.to_string() + " " + t2.to_string();
      }
    }
  }
  out.emit("con-lattice", name, true, {},
           {{"size", con.lat.size()},
            {"congruences", labels},
            {"distributive", con.lat.is_distributive()},
            {"permutable", permutable},
            {"non_commuting_pair", witness}});
}

// thm-gamma, cor-main and t-gen read different clauses of one run.
void verify_theorem(reporter& out, std::string const& which, std::vector<std::string> const& algebras,
                    std::vector<std::string> const& lattices, caps_config const& caps) {
  std::vector<std::string> clauses;
  if (which == "thm-gamma") {
    clauses = {"gamma_star_soft_and_directed", "sheaf_condition", "representation_condition",
               "soft_forms_agree"};
  } else if (which == "cor-main") {
    clauses = {"soft_reps_enumeration", "round_trip", "order_isomorphism"};
  } else {
    clauses = {"omega_side"};
  }
  sheaf::theorem_caps tc;
  tc.congruences.carrier = caps.carrier;
  for (auto const& an : algebras) {
    auto a = load_algebra(an);
    for (auto const& ln : lattices) {
      auto l = load_lattice(ln);
      if (l.size() > caps.lattice) {
        throw cap_exceeded("lattice " + ln, l.size(), caps.lattice);
      }
      auto r = sheaf::verify_main_theorems(a, l, tc);
      bool pass = true;
      std::string ce;
      for (auto const& c : clauses) {
        auto const* it = r.clauses.find(c);
        if (it == nullptr || !it->pass) {
          if (pass) {
            ce = c + (it ? " at " + it->witness : " missing");
          }
          pass = false;
        }
      }
      json extra{{"maps", r.maps}, {"k_sheaves", r.k_sheaves}, {"reps", r.reps}};
      if (which == "cor-main") {
        extra["order_pairs"] = r.order_pairs;
      }
      if (which == "thm-gamma") {
        extra["limit_form_gaps"] = r.limit_form_gaps;
      }
      out.emit(which, stem(an) + "@" + stem(ln), pass, ce, extra);
    }
  }
}

void verify_wilker(reporter& out, std::vector<order::lattice> const& ls,
                   std::vector<std::string> const& names) {
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto w = order::wilker_check(ls[i]);
    auto s = order::scott_filter_properties_check(ls[i]);
    auto c = order::finite_collapse_report(ls[i]);
    std::string ce = w.failure;
    for (auto const* r : {&s, &c}) {
      for (auto const& it : r->items) {
        if (!it.pass && ce.empty()) {
          ce = it.name + " " + it.witness;
        }
      }
    }
    out.emit("wilker", names[i], w.holds && s.all_pass() && c.all_pass(), ce,
             {{"size", ls[i].size()}, {"witnesses", w.witnesses.size()}});
  }
}

void verify_hm(reporter& out, std::vector<order::poset> const& ps, std::string const& label) {
  std::size_t bad = 0;
  std::string ce;
  for (auto const& p : ps) {
    auto r = compord::hofmann_mislove_check(compord::up_space(p));
    bool const dual = compord::complement_duality_check(p);
    if (!r.holds || !dual) {
      if (bad == 0) {
        ce = "covers";
        for (auto [a, b] : p.cover_pairs()) {
          ce += " " + std::to_string(a) + "<" + std::to_string(b);
        }
        ce += ": " + (r.holds ? std::string("complement duality") : r.failure);
      }
      ++bad;
    }
  }
  out.emit("hofmann-mislove", label, bad == 0, ce, {{"spaces", ps.size()}, {"failures", bad}});
}

void verify_commute_algebra(reporter& out, alg::algebra_ref const& a, std::string const& name,
                            caps_config const& caps) {
  alg::congruence_caps cc;
  cc.carrier = caps.carrier;
  auto cons = alg::all_congruences(*a, cc);
  std::size_t pairs = 0;
  std::size_t commuting = 0;
  std::string ce;
  bool ok = true;
  for (auto const& t1 : cons) {
    for (auto const& t2 : cons) {
      ++pairs;
      auto r = alg::commuting_equivalences_report(a, t1, t2);
      commuting += r.value() ? 1 : 0;
      if (!r.agree() && ok) {
        ok = false;
        ce = t1.to_string() + " " + t2.to_string() + " " + r.describe();
      }
    }
  }
  out.emit("commute-triple", name, ok, ce, {{"pairs", pairs}, {"commuting", commuting}});
}

void verify_commute_poset(reporter& out, order::poset const& x, std::string const& name) {
  std::size_t pairs = 0;
  std::size_t commuting = 0;
  std::string ce;
  bool ok = true;
  for (subset c1 = 0; c1 <= full_subset(x.size()); ++c1) {
    for (subset c2 = 0; c2 <= full_subset(x.size()); ++c2) {
      ++pairs;
      auto r = compord::closed_commute(x, c1, c2);
      commuting += r.commute ? 1 : 0;
      if (!r.pushout_agrees && ok) {
        ok = false;
        ce = format_subset(c1) + " " + format_subset(c2);
      }
    }
  }
  out.emit("commute-triple", name, ok, ce, {{"closed_pairs", pairs}, {"commuting", commuting}});
}

void compord_bijection(reporter& out, std::string const& xs, std::string const& ys) {
  auto x = load_poset(xs);
  auto y = load_poset(ys);
  auto r = compord::decomposition_bijection_check(x, y);
  if (out.dot_mode()) {
    for (auto const& q : r.decompositions) {
      out.raw() << compord::decomposition_dot(x, y, q);
    }
  }
  json qs = json::array();
  for (auto const& q : r.decompositions) {
    qs.push_back(q);
  }
  out.emit("compord-bijection", stem(xs) + "->" + stem(ys), r.bijection, r.witness,
           {{"functions", r.functions},
            {"interpolating", r.interpolating},
            {"frame_homs", r.frame_homs},
            {"commuting_frame_homs", r.commuting_frame_homs},
            {"decompositions", qs}});
}

void run_gelfand(reporter& out, std::string const& spec, caps_config const& caps) {
  auto r = load_ring(spec, caps);
  auto g = gelfand::is_gelfand(r);
  auto rep = gelfand::gelfand_representation(r);
  json ideals = json::array();
  for (auto j : rep.jrid.ideals) {
    ideals.push_back(subset_json(j));
  }
  json stalks = json::array();
  for (auto const& s : rep.stalks) {
    stalks.push_back({{"maximal", subset_json(s.maximal)},
                      {"o_m", subset_json(s.o_m)},
                      {"size", s.stalk_size},
                      {"local", s.local}});
  }
  json inclusion = json::object();
  for (auto const& it : rep.inclusion.items) {
    inclusion[it.name] = it.pass;
  }
  std::string const inst = is_file(spec) || r.name().empty() ? stem(spec) : r.name();
  out.emit("gelfand", inst, g.all() && g.agree(), g.witness,
           {{"size", r.size()},
            {"jrid_size", rep.jrid.lat.size()},
            {"jrid", ideals},
            {"stalks", stalks},
            {"inclusion", inclusion}});
  out.emit_report("gelfand", inst, rep.checks);
}

void run_pierce(reporter& out, std::string const& spec, caps_config const& caps) {
  auto r = load_ring(spec, caps);
  auto p = gelfand::pierce_decomposition(r);
  std::string const inst = is_file(spec) || r.name().empty() ? stem(spec) : r.name();
  out.emit("pierce", inst, p.pass(), {},
           {{"size", r.size()},
            {"idempotents", p.idempotents},
            {"base_size", p.e_ideals.lat.size()},
            {"factor_sizes", p.factor_sizes}});
  out.emit_report("pierce", inst, p.checks);
}

void generate_corpus(reporter& out, std::uint64_t seed, caps_config const& caps,
                     std::string const& dir) {
  catalog::corpus_caps cc;
  cc.lattice_size = caps.lattice;
  cc.points = caps.points;
  cc.ring_size = caps.ring;
  auto c = catalog::generate_corpus(seed, cc);

  json m;
  m["seed"] = seed;
  m["caps"] = {{"lattice", caps.lattice}, {"points", caps.points}, {"ring", caps.ring}};
  json counts = json::array();
  json files = json::array();
  for (std::size_t n = 1; n < c.lattices.size(); ++n) {
    counts.push_back(c.lattices[n].size());
    for (std::size_t i = 0; i < c.lattices[n].size(); ++i) {
      std::string const f = "lattices/L" + std::to_string(n) + "_" + std::to_string(i) + ".lat";
      files.push_back(f);
      if (!dir.empty()) {
        fs::create_directories(fs::path(dir) / "lattices");
        std::ofstream(fs::path(dir) / f) << order::write_lattice(c.lattices[n][i].order());
      }
    }
  }
  m["lattice_counts"] = counts;
  m["lattice_files"] = files;
  m["t0_spaces"] = c.t0_spaces;
  m["algebras"] = c.algebras;
  m["rings"] = c.rings;
  json sample = json::array();
  for (auto const& [a, l] : c.sample) {
    sample.push_back({a, l});
  }
  m["sample"] = sample;

  // Second count by pairwise isomorphism search, sizes where it is cheap.
  bool recount = true;
  std::string ce;
  for (std::size_t n = 1; n < c.lattices.size() && n <= 6; ++n) {
    auto const k = order::count_lattices_pairwise(n);
    if (k != c.lattices[n].size() && recount) {
      recount = false;
      ce = "size " + std::to_string(n) + ": canonical " + std::to_string(c.lattices[n].size()) +
           ", pairwise " + std::to_string(k);
    }
  }

  if (!dir.empty()) {
    std::ofstream(fs::path(dir) / "manifest.json") << m.dump(2) << '\n';
  } else if (out.json_mode()) {
    out.raw() << m.dump() << '\n';
  }
  out.emit("generate-corpus", "seed " + std::to_string(seed), recount, ce,
           {{"lattice_counts", counts}, {"t0_spaces", c.t0_spaces}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finsheaf: finite lattices, congruences, sheaf representations and rings"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  bool timing = false;
  std::optional<std::size_t> max_lattice, max_points, max_carrier, max_ring;
  app.add_option("--format,--report", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--out", out_path, "Output file (generate-corpus: directory)");
  app.add_option("--seed", seed, "Seed for sampled choices");
  app.add_flag("--timing", timing, "Add elapsed seconds to each record");
  app.add_option("--max-lattice", max_lattice, "Lattice size cap (FINSHEAF_MAX_LATTICE)");
  app.add_option("--max-points", max_points, "Point cap (FINSHEAF_MAX_POINTS)");
  app.add_option("--max-carrier", max_carrier, "Carrier cap (FINSHEAF_MAX_CARRIER)");
  app.add_option("--max-ring", max_ring, "Ring size cap (FINSHEAF_MAX_RING)");
  app.fallthrough();

  std::string file;
  auto* cl = app.add_subcommand("check-lattice", "Parse a poset file and check the lattice axioms");
  cl->add_option("file", file)->required();
  auto* ca = app.add_subcommand("check-algebra", "Parse an algebra file and list its congruences");
  ca->add_option("file", file)->required();

  std::string algebra_opt;
  auto* con = app.add_subcommand("con-lattice", "Congruence lattice of an algebra");
  con->add_option("file", file);
  con->add_option("--algebra", algebra_opt, "Built-in algebra name or file");

  std::string thm;
  std::string lattice_opt;
  std::string x_opt;
  std::string y_opt;
  std::optional<std::size_t> points_opt;
  auto* ver = app.add_subcommand("verify", "Exhaustive theorem checks");
  ver->add_option("theorem", thm)
      ->required()
      ->check(CLI::IsMember(
          {"thm-gamma", "cor-main", "t-gen", "wilker", "hofmann-mislove", "commute-triple"}));
  ver->add_option("--algebra", algebra_opt);
  ver->add_option("--lattice", lattice_opt);
  ver->add_option("--points", points_opt);
  ver->add_option("--x", x_opt, "Poset file or name");

  std::string what;
  auto* co = app.add_subcommand("compord", "Compact ordered spaces");
  co->add_option("what", what)->required()->check(CLI::IsMember({"bijection"}));
  co->add_option("--x", x_opt)->required();
  co->add_option("--y", y_opt)->required();

  std::string ring_opt;
  auto* ge = app.add_subcommand("gelfand", "Gelfand check and representation of a finite ring");
  ge->add_option("--ring", ring_opt)->required();
  auto* pi = app.add_subcommand("pierce", "Pierce representation of a finite ring");
  pi->add_option("--ring", ring_opt)->required();

  auto* gc = app.add_subcommand("generate-corpus", "Write the deterministic corpus manifest");

  CLI11_PARSE(app, argc, argv);

  std::ofstream file_out;
  std::ostream* os = &std::cout;
  if (!out_path.empty() && !gc->parsed()) {
    file_out.open(out_path);
    if (!file_out) {
      std::cerr << "error [IOError]: cannot write " << out_path << '\n';
      return 2;
    }
    os = &file_out;
  }
  reporter out(*os, format, timing);

  try {
    auto caps = caps_from_env();
    for (auto [opt, dst] : {std::pair{&max_lattice, &caps.lattice}, {&max_points, &caps.points},
                            {&max_carrier, &caps.carrier}, {&max_ring, &caps.ring}}) {
      if (*opt) {
        if (**opt == 0) {
          throw error("BadConfig", "caps must be positive");
        }
        *dst = **opt;
      }
    }

    if (cl->parsed()) {
      check_lattice(out, file);
    } else if (ca->parsed()) {
      check_algebra(out, file, caps);
    } else if (con->parsed()) {
      std::string const src = !file.empty() ? file : algebra_opt;
      if (src.empty()) {
        throw error("Usage", "con-lattice needs a file or --algebra");
      }
      con_lattice(out, load_algebra(src), stem(src), caps);
    } else if (ver->parsed()) {
      std::vector<std::string> algebras;
      std::vector<std::string> lattices;
      if (!algebra_opt.empty()) {
        algebras.push_back(algebra_opt);
      } else {
        for (auto const& [n, a] : catalog::base_algebras()) {
          algebras.push_back(n);
        }
      }
      if (!lattice_opt.empty()) {
        lattices.push_back(lattice_opt);
      } else {
        for (auto const& [n, l] : catalog::base_lattices()) {
          lattices.push_back(n);
        }
      }
      if (thm == "thm-gamma" || thm == "cor-main" || thm == "t-gen") {
        verify_theorem(out, thm, algebras, lattices, caps);
      } else if (thm == "wilker") {
        std::vector<order::lattice> ls;
        std::vector<std::string> names;
        if (!lattice_opt.empty()) {
          ls.push_back(load_lattice(lattice_opt));
          names.push_back(stem(lattice_opt));
        } else {
          for (std::size_t n = 1; n <= caps.lattice; ++n) {
            auto all = order::lattices_up_to_iso(n);
            for (std::size_t i = 0; i < all.size(); ++i) {
              ls.push_back(all[i]);
              names.push_back("L" + std::to_string(n) + "_" + std::to_string(i));
            }
          }
        }
        verify_wilker(out, ls, names);
      } else if (thm == "hofmann-mislove") {
        if (!x_opt.empty()) {
          verify_hm(out, {load_poset(x_opt)}, stem(x_opt));
        } else {
          std::size_t const pts = points_opt.value_or(caps.points);
          if (pts > caps.points) {
            throw cap_exceeded("points", pts, caps.points);
          }
          for (std::size_t n = 0; n <= pts; ++n) {
            verify_hm(out, order::labeled_posets(n), std::to_string(n) + " points");
          }
        }
      } else {
        if (!x_opt.empty()) {
          verify_commute_poset(out, load_poset(x_opt), stem(x_opt));
        } else if (points_opt) {
          if (*points_opt > caps.points) {
            throw cap_exceeded("points", *points_opt, caps.points);
          }
          for (std::size_t n = 0; n <= *points_opt; ++n) {
            auto ps = order::posets_up_to_iso(n);
            for (std::size_t i = 0; i < ps.size(); ++i) {
              verify_commute_poset(out, ps[i], "P" + std::to_string(n) + "_" + std::to_string(i));
            }
          }
        } else {
          for (auto const& an : algebras) {
            verify_commute_algebra(out, load_algebra(an), stem(an), caps);
          }
          if (algebra_opt.empty()) {
            for (auto const& g : alg::algebras::groups_up_to_8()) {
              verify_commute_algebra(out, alg::share(g), g.name(), caps);
            }
          }
        }
      }
    } else if (co->parsed()) {
      auto x = load_poset(x_opt);
      auto y = load_poset(y_opt);
      auto const pts = std::max(x.size(), y.size());
      if (pts > caps.points) {
        throw cap_exceeded("points", pts, caps.points);
      }
      compord_bijection(out, x_opt, y_opt);
    } else if (ge->parsed()) {
      run_gelfand(out, ring_opt, caps);
    } else if (pi->parsed()) {
      run_pierce(out, ring_opt, caps);
    } else if (gc->parsed()) {
      generate_corpus(out, seed, caps, out_path);
    }
  } catch (order::parse_error const& e) {
    std::cerr << "error [ParseError]: " << e.what() << '\n';
    return 2;
  } catch (error const& e) {
    std::cerr << "error [" << e.kind() << "]: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return out.all_pass() ? 0 : 1;
}
