#include "kdual/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kdual/io.hpp"
#include "kdual/modelcheck.hpp"
#include "kdual/report.hpp"
#include "kdual/sweedler.hpp"

namespace kdual {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string field;
  int weight_cap = 4;
  std::string window;
  uint64_t seed = 0;
  std::string out;
  std::string probe = "P2";
  std::vector<std::string> only;
  bool timing = true;
  std::string other;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::optional<DegreeRange> parse_window(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("window must be lo:hi");
  try {
    size_t a = 0, b = 0;
    int lo = std::stoi(s.substr(0, colon), &a), hi = std::stoi(s.substr(colon + 1), &b);
    if (a != colon || b != s.size() - colon - 1 || lo > hi) throw UsageError("window must be lo:hi");
    return DegreeRange{lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("window must be lo:hi");
  }
}

json homology_json(const std::map<int, size_t>& h) {
  json j = json::object();
  for (const auto& [n, d] : h) j[std::to_string(n)] = d;
  return j;
}

template <class Fn>
void guarded(Report& r, const std::string& name, Fn fn) {
  try {
    fn();
  } catch (const CharacteristicError& e) {
    r.add(name, Status::Skip, e.what());
  } catch (const Unsupported& e) {
    r.add(name, Status::Skip, e.what());
  } catch (const InsufficientTruncation& e) {
    r.add(name, Status::Skip, e.what());
  } catch (const PreconditionError& e) {
    r.add(name, Status::Skip, e.what());
  } catch (const Error& e) {
    r.add(name, Status::Fail, e.what());
  }
}

class Session {
 public:
  Session(const std::string& command, const Options& o)
      : o_(o),
        field_(o.field.empty() ? std::optional<Field>() : std::optional<Field>(Field::parse(o.field))),
        objects_(load()),
        window_(parse_window(o.window)),
        report_(command, objects_.field.to_string(), o.seed, o.weight_cap, window_) {
    if (o.weight_cap < 1) throw UsageError("weight cap must be positive");
  }

  Report& report() { return report_; }
  const Field& field() const { return objects_.field; }
  const Options& options() const { return o_; }
  std::optional<DegreeRange> window() const { return window_; }

  bool selected(const std::string& name) const {
    return o_.only.empty() || std::find(o_.only.begin(), o_.only.end(), name) != o_.only.end();
  }

  std::vector<const NamedObject*> of_kind(ObjectKind k) const {
    std::vector<const NamedObject*> out;
    for (const auto& x : objects_.objects)
      if (x.kind == k && selected(x.name)) out.push_back(&x);
    return out;
  }
  std::vector<NamedCoalgebra> coalgebras(bool conilpotent_only) const {
    std::vector<NamedCoalgebra> out;
    for (const auto* x : of_kind(ObjectKind::Coalgebra)) {
      const auto& c = std::get<DgCoalgebra>(x->value);
      if (!conilpotent_only || coradical_filtration(c).conilpotent) out.push_back({x->name, c});
    }
    return out;
  }
  std::vector<NamedAlgebra> algebras() const {
    std::vector<NamedAlgebra> out;
    for (const auto* x : of_kind(ObjectKind::Algebra)) out.push_back({x->name, std::get<DgAlgebra>(x->value)});
    return out;
  }
  std::vector<NamedLie> lies() const {
    std::vector<NamedLie> out;
    for (const auto* x : of_kind(ObjectKind::Lie)) out.push_back({x->name, std::get<DgLieAlgebra>(x->value)});
    return out;
  }
  const ObjectSet& objects() const { return objects_; }

  // Objects that failed to load are reported as failures.
  void report_load_errors() {
    for (const auto& e : objects_.errors)
      report_.add("load/" + e.name, Status::Fail, e.kind + " at " + e.location + ": " + e.message,
                  {{"location", e.location}, {"error", e.kind}});
  }

 private:
  ObjectSet load() const {
    if (o_.input.empty()) return corpus_objects(field_ ? *field_ : Field::rationals());
    return load_objects(o_.input, field_);
  }

  Options o_;
  std::optional<Field> field_;
  ObjectSet objects_;
  std::optional<DegreeRange> window_;
  Report report_;
};

int cap_for(const DgCoalgebra& c) {
  auto r = coradical_filtration(c);
  return static_cast<int>(std::max<size_t>(r.nilpotency, 1));
}

void cmd_validate(Session& s) {
  Report& r = s.report();
  s.report_load_errors();
  for (const auto& o : s.objects().objects) {
    if (!s.selected(o.name)) continue;
    std::string name = "validate/" + o.name;
    guarded(r, name, [&] {
      switch (o.kind) {
        case ObjectKind::Algebra:
          r.add_certificate(name, validate_algebra(std::get<DgAlgebra>(o.value)), {{"dim", o.complex().dim()}});
          break;
        case ObjectKind::Coalgebra: {
          const auto& c = std::get<DgCoalgebra>(o.value);
          auto conil = coradical_filtration(c);
          json data{{"dim", c.dim()}, {"conilpotent", conil.conilpotent}};
          if (conil.conilpotent) data["nilpotency"] = conil.nilpotency;
          Certificate cert = validate_coalgebra(c);
          if (o.filtration) {
            Certificate adm = check_admissible(c, *o.filtration);
            for (auto& ch : adm.checks) {
              ch.name = "filtration_" + ch.name;
              cert.checks.push_back(ch);
            }
          }
          r.add_certificate(name, cert, data);
          break;
        }
        case ObjectKind::Lie:
          r.add_certificate(name, validate_lie(std::get<DgLieAlgebra>(o.value)), {{"dim", o.complex().dim()}});
          break;
        case ObjectKind::Complex: {
          Certificate cert;
          auto& sq = cert.add("d_squared");
          if (!o.complex().d_squared_zero()) sq.fail("d^2 != 0");
          r.add_certificate(name, cert, {{"dim", o.complex().dim()}});
          break;
        }
        case ObjectKind::Morphism: {
          const auto& m = std::get<MorphismObject>(o.value);
          const NamedObject* src = s.objects().find(m.source);
          const NamedObject* tgt = s.objects().find(m.target);
          Certificate cert;
          if (src->kind != tgt->kind) {
            cert.add("kinds").fail(kind_name(src->kind) + " -> " + kind_name(tgt->kind));
          } else if (src->kind == ObjectKind::Algebra) {
            cert = validate_alg_morphism(m.map, std::get<DgAlgebra>(src->value), std::get<DgAlgebra>(tgt->value));
          } else if (src->kind == ObjectKind::Coalgebra) {
            cert = validate_coalg_morphism(m.map, std::get<DgCoalgebra>(src->value), std::get<DgCoalgebra>(tgt->value));
          } else if (src->kind == ObjectKind::Lie) {
            cert = validate_lie_morphism(m.map, std::get<DgLieAlgebra>(src->value), std::get<DgLieAlgebra>(tgt->value));
          } else {
            auto& ch = cert.add("chain_map");
            if (!is_chain_map(m.map, src->complex(), tgt->complex())) ch.fail(m.source + " -> " + m.target);
          }
          r.add_certificate(name, cert, {{"degree", m.map.degree()}, {"rank", m.map.rank()}});
          break;
        }
      }
    });
  }
}

void cmd_homology(Session& s) {
  Report& r = s.report();
  for (const auto& o : s.objects().objects) {
    if (o.kind == ObjectKind::Morphism || !s.selected(o.name)) continue;
    std::string name = "homology/" + o.name;
    guarded(r, name, [&] {
      const Complex& cx = o.complex();
      if (!cx.d_squared_zero()) {
        r.add(name, Status::Fail, "d^2 != 0");
        return;
      }
      DegreeRange w = s.window() ? *s.window() : full_window(cx);
      r.add(name, Status::Pass, {}, {{"homology", homology_json(homology(cx, w))}, {"window", {w.lo, w.hi}}});
    });
  }
}

void cmd_bar(Session& s) {
  Report& r = s.report();
  int cap = s.options().weight_cap;
  for (const auto& a : s.algebras()) {
    std::string name = "bar/" + a.name;
    guarded(r, name, [&] {
      BarCoalgebra b = bar(a.algebra, cap);
      Certificate cert = validate_coalgebra(b.coalgebra);
      r.add_certificate(name, cert, {{"dim", b.coalgebra.dim()}});
    });
  }
  for (const auto& g : s.lies()) {
    std::string name = "bar_lie/" + g.name;
    guarded(r, name, [&] {
      BarCoalgebra b = bar_lie(g.lie, cap);
      Certificate cert = validate_coalgebra(b.coalgebra);
      r.add_certificate(name, cert, {{"dim", b.coalgebra.dim()}});
    });
  }
}

void cmd_cobar(Session& s) {
  Report& r = s.report();
  int cap = s.options().weight_cap;
  for (const auto& c : s.coalgebras(false)) {
    std::string name = "cobar/" + c.name;
    guarded(r, name, [&] {
      FreeDgAlgebra o = cobar(c.coalgebra, cap);
      Certificate cert = validate_algebra(o.algebra());
      r.add_certificate(name, cert, {{"dim", o.space()->dim()}, {"generators", o.generators()->dim()}});
    });
    if (!is_cocommutative(c.coalgebra)) continue;
    std::string lname = "cobar_lie/" + c.name;
    guarded(r, lname, [&] {
      FreeLie o = cobar_lie(c.coalgebra, cap);
      Certificate cert = validate_lie(o.lie());
      r.add_certificate(lname, cert, {{"dim", o.lie().dim()}});
    });
  }
}

void cmd_convolve(Session& s) {
  Report& r = s.report();
  auto cs = s.coalgebras(false);
  for (const auto& c : cs)
    for (const auto& a : s.algebras()) {
      std::string name = "convolution/" + c.name + "/" + a.name;
      guarded(r, name, [&] {
        auto conv = convolution_algebra(c.coalgebra, a.algebra);
        r.add_certificate(name, validate_algebra(conv.algebra), {{"dim", conv.algebra.dim()}});
      });
    }
  for (const auto& c : cs) {
    if (!is_cocommutative(c.coalgebra)) continue;
    for (const auto& g : s.lies()) {
      std::string name = "convolution_lie/" + c.name + "/" + g.name;
      guarded(r, name, [&] {
        auto conv = convolution_lie(c.coalgebra, g.lie);
        r.add_certificate(name, validate_lie(conv.lie), {{"dim", conv.lie.dim()}});
      });
    }
  }
}

void cmd_twisting(Session& s) {
  Report& r = s.report();
  auto cs = s.coalgebras(false);
  for (const auto& c : cs)
    for (const auto& a : s.algebras()) {
      std::string name = "twisting/" + c.name + "/" + a.name;
      guarded(r, name, [&] {
        auto conv = convolution_algebra(c.coalgebra, a.algebra);
        auto taus = twisting_cochains(conv);
        r.add(name, Status::Pass, {}, {{"count", taus.size()}});
      });
    }
  for (const auto& c : cs) {
    if (!is_cocommutative(c.coalgebra)) continue;
    for (const auto& g : s.lies()) {
      std::string name = "twisting_lie/" + c.name + "/" + g.name;
      guarded(r, name, [&] {
        auto conv = convolution_lie(c.coalgebra, g.lie);
        auto taus = lie_twisting_cochains(conv);
        r.add(name, Status::Pass, {}, {{"count", taus.size()}});
      });
    }
  }
}

void cmd_adjunction(Session& s) {
  Report& r = s.report();
  for (const auto& c : s.coalgebras(true))
    for (const auto& a : s.algebras()) {
      std::string name = "adjunction/" + c.name + "/" + a.name;
      guarded(r, name, [&] {
        auto rep = adjunction_report(c.coalgebra, a.algebra);
        json data{{"cap", rep.cap},
                  {"alg_maps", rep.alg_maps},
                  {"twisting", rep.twisting},
                  {"coalg_maps", rep.coalg_maps},
                  {"equivalence", rep.equivalence},
                  {"round_trips", certificate_json(rep.round_trips)}};
        bool ok = rep.counts_agree() && rep.equivalence && rep.round_trips.passed();
        r.add(name, ok ? Status::Pass : Status::Fail, ok ? "" : "counts or round trips disagree", data);
      });
    }
}

void cmd_duality(Session& s) {
  Report& r = s.report();
  DegreeRange w = s.window() ? *s.window() : DegreeRange{1, 7};
  DegreeRange uw = s.window() ? *s.window() : DegreeRange{1, 3};
  int cap = s.options().weight_cap;
  auto rep = verify_duality(s.coalgebras(true), s.algebras(), cap, cap, w, uw);
  for (const auto& it : rep.items) {
    json data = json::object();
    for (const auto& [k, v] : it.data) data[k] = v;
    Status st = it.skipped ? Status::Skip : it.passed ? Status::Pass : Status::Fail;
    r.add(it.name, st, it.reason, data);
  }
}

void cmd_sweedler(Session& s) {
  Report& r = s.report();
  const Field& f = s.field();
  int cap = s.options().weight_cap;
  auto cs = s.coalgebras(true);
  auto as = s.algebras();
  for (const auto& c : cs) {
    std::string name = "cobar_tensoring/" + c.name;
    guarded(r, name, [&] {
      auto iso = identify_cobar_as_tensoring(c.coalgebra, std::max(cap, 2));
      r.add_certificate(name, iso.certificate, {{"dim", iso.omega.space()->dim()}});
    });
    if (!is_cocommutative(c.coalgebra)) continue;
    std::string lname = "cobar_tensoring_lie/" + c.name;
    guarded(r, lname, [&] {
      auto iso = identify_lie_cobar_as_tensoring(c.coalgebra, std::max(cap, 2));
      r.add_certificate(lname, iso.certificate, {{"dim", iso.omega.lie().dim()}});
    });
  }
  for (const auto& a : as) {
    std::string name = "bar_enrichment/" + a.name;
    guarded(r, name, [&] {
      auto iso = identify_bar_as_enrichment(a.algebra, cap);
      r.add_certificate(name, iso.certificate, {{"dim", iso.bar.coalgebra.dim()}});
    });
  }
  for (const auto& g : s.lies()) {
    std::string name = "bar_enrichment_lie/" + g.name;
    guarded(r, name, [&] {
      auto iso = identify_lie_bar_as_enrichment(g.lie, cap);
      r.add_certificate(name, iso.certificate, {{"dim", iso.bar.coalgebra.dim()}});
    });
  }
  const NamedObject* probe = s.objects().find(s.options().probe);
  if (!probe || probe->kind != ObjectKind::Coalgebra) {
    r.add("counts", Status::Skip, "probe coalgebra " + s.options().probe + " not found");
    return;
  }
  const auto& p = std::get<DgCoalgebra>(probe->value);
  if (f.is_rational()) {
    r.add("counts", Status::Skip, "counting needs a prime field");
    return;
  }
  int n = cap_for(p);
  FreeDgAlgebra mc = mc_algebra(f, std::max(n, 2));
  for (const auto& b : as) {
    std::string name = "counts/tensoring/" + b.name;
    guarded(r, name, [&] {
      auto k = tensoring_counts(p, mc, b.algebra);
      auto e = enrichment_free(mc, b.algebra, n);
      size_t enr = coalgebra_maps_to_enrichment(p, e).size();
      bool ok = k.round_trips && k.measurings == k.from_tensoring && k.measurings == k.to_convolution &&
                k.measurings == enr;
      r.add(name, ok ? Status::Pass : Status::Fail, ok ? "" : "counts disagree",
            {{"measurings", k.measurings},
             {"from_tensoring", k.from_tensoring},
             {"to_convolution", k.to_convolution},
             {"to_enrichment", enr},
             {"round_trips", k.round_trips}});
    });
  }
  for (const auto& a : as)
    for (const auto& b : as) {
      std::string name = "counts/enrichment/" + a.name + "/" + b.name;
      guarded(r, name, [&] {
        size_t meas = enumerate_measurings(p, a.algebra, b.algebra).size();
        auto e = enrichment_general(a.algebra, b.algebra, n);
        size_t enr = coalgebra_maps_to_enrichment(p, e).size();
        bool ok = meas == enr;
        r.add(name, ok ? Status::Pass : Status::Fail, ok ? "" : "counts disagree",
              {{"measurings", meas}, {"to_enrichment", enr}, {"dim", e.sub.coalgebra.dim()}});
      });
    }
  for (const auto& c : cs)
    for (const auto& d : cs) {
      std::string name = "counts/internal_hom/" + c.name + "/" + d.name;
      guarded(r, name, [&] {
        int w = std::max({n, cap_for(c.coalgebra), cap_for(d.coalgebra)});
        auto h = internal_hom_conil(c.coalgebra, d.coalgebra, w);
        size_t lhs = coalgebra_maps(tensor_coalgebra(p, c.coalgebra), d.coalgebra).size();
        size_t rhs = coalgebra_maps_to_internal_hom(p, h).size();
        // Dimension for each truncation 1..w, null below the nilpotency of D;
        // no stabilisation is claimed.
        json profile = json::array();
        for (int k = 1; k < w; ++k) {
          try {
            profile.push_back(internal_hom_conil(c.coalgebra, d.coalgebra, k).sub.coalgebra.dim());
          } catch (const InsufficientTruncation&) {
            profile.push_back(nullptr);
          }
        }
        profile.push_back(h.sub.coalgebra.dim());
        bool ok = lhs == rhs;
        r.add(name, ok ? Status::Pass : Status::Fail, ok ? "" : "counts disagree",
              {{"from_tensor", lhs},
               {"to_internal_hom", rhs},
               {"dim", h.sub.coalgebra.dim()},
               {"cap", w},
               {"profile", profile}});
      });
    }
}

void cmd_coherence(Session& s) {
  Report& r = s.report();
  auto cs = s.coalgebras(true);
  FreeDgAlgebra mc = mc_algebra(s.field(), 2);
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i; j < cs.size(); ++j)
      for (size_t k = j; k < cs.size(); ++k) {
        std::string name = "coherence/" + cs[i].name + "/" + cs[j].name + "/" + cs[k].name;
        guarded(r, name, [&] {
          r.add_certificate(name, associator_and_coherence(cs[i].coalgebra, cs[j].coalgebra, cs[k].coalgebra, mc));
        });
      }
}

void suite(Report& r, const std::string& name, size_t ok, size_t total, json extra = json::object()) {
  extra["passed"] = ok;
  extra["total"] = total;
  r.add(name, ok == total && total > 0 ? Status::Pass : Status::Fail,
        ok == total ? "" : std::to_string(total - ok) + " of " + std::to_string(total) + " samples failed", extra);
}

void cmd_modelprops(Session& s) {
  Report& r = s.report();
  const Field& f = s.field();
  RandomCorpus rc = random_corpus(f, s.options().seed);
  size_t n = rc.injections.size();
  {
    size_t ok = 0, weq = 0;
    for (size_t k = 0; k < n; ++k) {
      const auto& a = rc.injections[k];
      const auto& b = rc.injections[(k * 7 + 3) % n];
      ok += pushout_product(a.map, a.source, a.target, b.map, b.source, b.target).injective;
    }
    suite(r, "pushout_product/injective", ok, n);
    DgCoalgebra zero = zero_coalgebra(f);
    for (size_t k = 0; k < n; ++k) {
      const auto& a = rc.injections[k];
      DgCoalgebra acyc = acyclic_coalgebra(f, static_cast<int>(k % 4));
      GradedMap j(f, zero.space(), acyc.space(), 0, {});
      auto rep = pushout_product(a.map, a.source, a.target, j, zero, acyc);
      weq += rep.injective && rep.weq.quasi_iso;
    }
    suite(r, "pushout_product/acyclic", weq, n);
  }
  {
    size_t ok = 0;
    for (size_t k = 0; k < rc.filtered_weqs.size(); ++k) {
      const auto& w = rc.filtered_weqs[k];
      const auto& e = rc.coalgebras[k % rc.coalgebras.size()];
      ok += tensor_preserves_fqi(w.map, w.source, w.source_filtration, w.target, w.target_filtration, e).holds();
    }
    suite(r, "tensor_preserves_fqi", ok, rc.filtered_weqs.size());
  }
  {
    size_t ok = 0, total = std::min(rc.injections.size(), rc.surjections.size());
    for (size_t k = 0; k < total; ++k) {
      const auto& i = rc.injections[k];
      const auto& j = rc.surjections[k];
      ok += pullback_product(i.map, i.source, i.target, j.map, j.source, j.target).surjective;
    }
    suite(r, "pullback_product/surjective", ok, total);
  }
  {
    size_t ok = 0;
    for (size_t k = 0; k < rc.quasi_isos.size(); ++k) {
      const auto& q = rc.quasi_isos[k];
      const auto& c = rc.coalgebras[k % rc.coalgebras.size()];
      auto src = convolution_algebra(c, q.source), tgt = convolution_algebra(c, q.target);
      GradedMap m = convolution_postcompose(q.map, src, tgt);
      ok += is_quasi_iso(m, src.algebra.cx, tgt.algebra.cx, full_window(src.algebra.cx, tgt.algebra.cx)).quasi_iso;
    }
    suite(r, "convolution_postcompose/quasi_iso", ok, rc.quasi_isos.size());
  }
  {
    size_t ok = 0, m = rc.coalgebras.size();
    for (size_t k = 0; k < m; ++k) {
      const auto& c = rc.coalgebras[k];
      const auto& d = rc.coalgebras[(k + 1) % m];
      auto nc = coradical_filtration(c), ncd = coradical_filtration(tensor_coalgebra(c, d));
      ok += ncd.conilpotent && ncd.nilpotency <= nc.nilpotency;
    }
    suite(r, "nilpotency/tensor", ok, m);
  }
  if (!f.is_rational()) {
    size_t ok = 0;
    for (const auto& c : rc.coalgebras) {
      auto at = atoms(c);
      ok += at.size() == 1 && at.front().empty();
    }
    suite(r, "atoms/conilpotent", ok, rc.coalgebras.size());
  } else {
    r.add("atoms/conilpotent", Status::Skip, "atom enumeration needs a prime field");
  }
  r.add("corpus", Status::Pass, {},
        {{"coalgebras", rc.coalgebras.size()},
         {"algebras", rc.algebras.size()},
         {"injections", rc.injections.size()},
         {"surjections", rc.surjections.size()},
         {"quasi_isos", rc.quasi_isos.size()},
         {"filtered_weqs", rc.filtered_weqs.size()},
         {"rejected", rc.rejected}});
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON");
  }
}

void add_common(CLI::App* sub, Options& o, bool input) {
  if (input) sub->add_option("input", o.input, "object file (default: built-in corpus)");
  sub->add_option("--field", o.field, "Q or Fp:<p>");
  sub->add_option("--weight-cap", o.weight_cap, "weight truncation W");
  sub->add_option("--window", o.window, "homological window lo:hi");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--out", o.out, "write the report to this path");
  sub->add_option("--object", o.only, "restrict to the named objects");
  sub->add_flag("!--no-timing", o.timing, "omit the timing section");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of bar/cobar duality and related constructions", "kdual"};
  app.require_subcommand(1);
  Options o;
  using Command = void (*)(Session&);
  const std::vector<std::pair<std::string, Command>> commands = {
      {"validate", cmd_validate},     {"homology", cmd_homology}, {"bar", cmd_bar},
      {"cobar", cmd_cobar},           {"convolve", cmd_convolve}, {"twisting", cmd_twisting},
      {"adjunction", cmd_adjunction}, {"duality", cmd_duality},   {"sweedler", cmd_sweedler},
      {"coherence", cmd_coherence},   {"modelprops", cmd_modelprops}};
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, o, name != "modelprops");
    if (name == "sweedler") sub->add_option("--probe", o.probe, "probe coalgebra for the counts");
  }
  auto* diff = app.add_subcommand("diff", "structural difference of two reports, ignoring timing");
  diff->add_option("first", o.input)->required();
  diff->add_option("second", o.other)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "kdual: " << e.what() << "\n";
    return 2;
  }

  try {
    if (diff->parsed()) {
      auto lines = report_diff(read_json_file(o.input), read_json_file(o.other));
      for (const auto& l : lines) out << l << "\n";
      return lines.empty() ? 0 : 1;
    }
    for (const auto& [name, fn] : commands) {
      if (!app.got_subcommand(name)) continue;
      auto start = std::chrono::steady_clock::now();
      Session s(name, o);
      if (name != "validate" && !s.objects().errors.empty()) {
        const auto& e = s.objects().errors.front();
        err << "kdual: " << e.name << ": " << e.kind << " at " << e.location << ": " << e.message << "\n";
        return 2;
      }
      fn(s);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::string text = dump_report(s.report().to_json(o.timing ? std::optional<double>(ms) : std::nullopt));
      if (o.out.empty()) {
        out << text;
      } else {
        std::ofstream f(o.out);
        if (!f) throw UsageError("cannot write " + o.out);
        f << text;
      }
      return s.report().exit_code();
    }
  } catch (const UsageError& e) {
    err << "kdual: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "kdual: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "kdual: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace kdual
