// lff: harmonic analysis and frame verification on GF(q)((t)).
//
// Subcommands:
//   bounds          restricted frame bounds -> JSON report
//   compare         affine vs quasi-affine bounds plus the max form gap
//   coaffine-decay  shell-average decay table -> CSV
//   check           named verification suites, exit 0 iff all pass
//   gen             write a generator file
//
// Exit codes: 0 success, 1 numeric failure (a machine-readable record goes
// to stdout), 2 usage errors. Reports are deterministic for a fixed
// argv+seed apart from the elapsed_ms field.

#include <iostream>

#include <CLI11.hpp>

#include "lff/checks.hpp"
#include "lff/io.hpp"

namespace {

struct FieldOpts {
  int q = 0;
  int p = 0, c = 0;
  std::vector<int> modulus;

  lff::FieldParamsPtr make() const {
    if (q > 0) {
      if (p > 0 || c > 0)
        throw CLI::ValidationError("--q", "use either --q or --p/--c, not both");
      if (!lff::detail::is_prime(q))
        throw CLI::ValidationError(
            "--q", "q must be prime; for a prime power pass --p and --c explicitly");
      if (!modulus.empty()) return lff::make_field(q, 1, modulus);
      return lff::make_field_q(q);
    }
    if (p <= 0 || c <= 0)
      throw CLI::ValidationError("field", "supply --q (prime) or --p and --c");
    if (!modulus.empty()) return lff::make_field(p, c, modulus);
    return lff::make_field(p, c);
  }
};

void add_field_opts(CLI::App* cmd, FieldOpts& f) {
  cmd->add_option("--q", f.q, "residue field size (prime; shorthand for --p q --c 1)");
  cmd->add_option("--p", f.p, "residue characteristic");
  cmd->add_option("--c", f.c, "extension degree over GF(p)");
  cmd->add_option("--modulus", f.modulus,
                  "modulus polynomial coefficients, constant term first");
}

lff::SystemKind parse_kind(const std::string& s) {
  if (s == "affine") return lff::SystemKind::affine;
  if (s == "quasiAffine") return lff::SystemKind::quasiAffine;
  if (s == "coAffine") return lff::SystemKind::coAffine;
  throw CLI::ValidationError("--system", "expected affine|quasiAffine|coAffine");
}

std::vector<lff::StepFunction> resolve_generators(const std::string& source,
                                                  const lff::FieldParamsPtr& fp) {
  if (source == "haar") return lff::haar_generators(fp);
  auto gens = lff::load_generators(source);
  if (!(*gens[0].params() == *fp))
    throw lff::ValidationError("generator file field parameters disagree with the requested field");
  return gens;
}

lff::WeightTable parse_weights(const std::string& spec) {
  if (spec.rfind("const:", 0) == 0) {
    const double v = std::stod(spec.substr(6));
    return lff::WeightTable(lff::Complex{v, 0.0});
  }
  return lff::load_weights(spec);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    lff::atomic_write(out_path, content);
}

int run_suites(const std::string& suite, int q) {
  using namespace lff;
  CheckList results;
  auto append = [&](CheckList more) {
    for (auto& r : more) results.push_back(std::move(r));
  };

  if (suite == "un-props") {
    append(check_translation_lattice(make_field_q(2), 1 << 12));
    append(check_translation_lattice(make_field_q(3), detail::ipow(3, 7)));
  } else if (suite == "characters") {
    for (int qq : {2, 3, 4})
      append(check_characters(qq == 4 ? make_field(2, 2) : make_field_q(qq)));
  } else if (suite == "fourier") {
    for (int qq : {2, 3}) append(check_fourier(make_field_q(qq)));
  } else if (suite == "lemma32") {
    append(check_lemma32(make_field_q(2), haar_generators(make_field_q(2)), "q=2 haar", 5,
                         8801));
    append(check_lemma32(make_field_q(2), {perturbed_generator_q2(make_field_q(2))},
                         "q=2 perturbed", 5, 8802));
    append(check_lemma32(make_field_q(3), haar_generators(make_field_q(3)), "q=3 haar", 5,
                         8803));
    append(check_lemma32(make_field_q(3), simple_generators_q3(make_field_q(3)),
                         "q=3 perturbed", 5, 8804));
  } else if (suite == "lemma33") {
    append(check_lemma33(make_field_q(2)));
    append(check_lemma33(make_field_q(3)));
  } else if (suite == "duality") {
    append(check_duality(make_field_q(2)));
  } else if (suite == "invariance") {
    for (int qq : {2, 3}) append(check_invariance(make_field_q(qq)));
  } else if (suite == "haar-tight") {
    if (q > 0) {
      append(check_haar_tight(q == 4 ? make_field(2, 2) : make_field_q(q)));
    } else {
      for (int qq : {2, 3, 4})
        append(check_haar_tight(qq == 4 ? make_field(2, 2) : make_field_q(qq)));
    }
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }

  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (!r.pass) {
      lff::Json rec;
      rec["suite"] = suite;
      rec["check"] = r.name;
      rec["detail"] = r.detail;
      std::cout << rec.dump() << "\n";
      all = false;
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic analysis and frame verification on GF(q)((t))"};
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "restricted frame bounds as a JSON report");
  FieldOpts bf;
  add_field_opts(bounds, bf);
  std::string b_system = "affine", b_gens = "haar", b_weights = "const:1", b_out;
  int b_M = 1, b_N = 2;
  bounds->add_option("--system", b_system, "affine|quasiAffine|coAffine");
  bounds->add_option("--generators", b_gens, "builtin `haar` or a generator file path");
  bounds->add_option("--support", b_M, "test space support level M");
  bounds->add_option("--resolution", b_N, "test space resolution level N");
  bounds->add_option("--weights", b_weights, "co-affine weights, const:<value>");
  bounds->add_option("--out", b_out, "output path (stdout when omitted)");

  // compare
  auto* compare = app.add_subcommand(
      "compare", "affine vs quasi-affine bounds on one configuration, plus the form gap");
  FieldOpts cf;
  add_field_opts(compare, cf);
  std::string c_gens = "haar", c_out;
  int c_M = 1, c_N = 2, c_samples = 4;
  std::uint64_t c_seed = 1;
  compare->add_option("--generators", c_gens, "builtin `haar` or a generator file path");
  compare->add_option("--support", c_M, "test space support level M");
  compare->add_option("--resolution", c_N, "test space resolution level N");
  compare->add_option("--samples", c_samples, "sampled f,g pairs for the form gap");
  compare->add_option("--seed", c_seed, "sampling seed");
  compare->add_option("--out", c_out, "output path (stdout when omitted)");

  // coaffine-decay
  auto* decay = app.add_subcommand("coaffine-decay",
                                   "shell-average decay table witnessing the absence "
                                   "of co-affine frames (CSV)");
  FieldOpts df;
  add_field_opts(decay, df);
  std::string d_gens = "haar", d_weights = "const:1", d_out;
  int d_mmax = 4;
  decay->add_option("--generators", d_gens, "builtin `haar` or a generator file path");
  decay->add_option("--m-max", d_mmax, "largest shell exponent");
  decay->add_option("--weights", d_weights, "co-affine weights, const:<value>");
  decay->add_option("--out", d_out, "output path (stdout when omitted)");

  // check
  auto* check = app.add_subcommand("check", "run a named verification suite");
  std::string suite;
  int k_q = 0;
  check
      ->add_option("--suite", suite,
                   "un-props|characters|fourier|lemma32|lemma33|duality|invariance|haar-tight")
      ->required();
  check->add_option("--q", k_q, "restrict to one residue field size where applicable");

  // gen
  auto* gen = app.add_subcommand("gen", "write a generator file");
  FieldOpts gf;
  add_field_opts(gen, gf);
  std::string g_family = "haar", g_out;
  gen->add_option("--family", g_family, "generator family (haar)");
  gen->add_option("--out", g_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed()) {
      const auto fp = bf.make();
      const auto kind = parse_kind(b_system);
      lff::AffineSystemSpec spec(resolve_generators(b_gens, fp), kind,
                                 parse_weights(b_weights));
      const auto rep = lff::restricted_frame_bounds(spec, b_M, b_N);
      emit(lff::bounds_report_to_json(rep).dump(2) + "\n", b_out);
      return 0;
    }
    if (compare->parsed()) {
      const auto fp = cf.make();
      const auto gens = resolve_generators(c_gens, fp);
      const auto ra =
          lff::restricted_frame_bounds(lff::AffineSystemSpec(gens, lff::SystemKind::affine),
                                       c_M, c_N);
      const auto rq = lff::restricted_frame_bounds(
          lff::AffineSystemSpec(gens, lff::SystemKind::quasiAffine), c_M, c_N);
      double gap = 0.0;
      for (int s = 0; s < c_samples; ++s) {
        const auto f = lff::random_mean_zero(fp, c_M, c_N, c_seed + 2 * s);
        const auto g = lff::random_mean_zero(fp, c_M, c_N, c_seed + 2 * s + 1);
        const auto K = lff::form_value(lff::FormKind::K, gens, gens, f, g);
        const auto Kt = lff::form_value(lff::FormKind::Ktilde, gens, gens, f, g);
        gap = std::max(gap, std::abs(K - Kt));
      }
      lff::Json j;
      j["affine"] = lff::bounds_report_to_json(ra);
      j["quasiAffine"] = lff::bounds_report_to_json(rq);
      j["max_form_gap"] = gap;
      j["samples"] = c_samples;
      j["seed"] = c_seed;
      emit(j.dump(2) + "\n", c_out);
      return 0;
    }
    if (decay->parsed()) {
      const auto fp = df.make();
      lff::AffineSystemSpec spec(resolve_generators(d_gens, fp), lff::SystemKind::coAffine,
                                 parse_weights(d_weights));
      const auto rows = lff::coaffine_decay_table(spec, d_mmax);
      emit(lff::decay_table_to_csv(rows), d_out);
      return 0;
    }
    if (check->parsed()) return run_suites(suite, k_q);
    if (gen->parsed()) {
      if (g_family != "haar") throw CLI::ValidationError("--family", "only `haar` is built in");
      lff::save_generators(g_out, lff::haar_generators(gf.make()));
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const lff::ValidationError& e) {
    lff::Json rec;
    rec["error"] = "validation";
    rec["detail"] = e.what();
    std::cout << rec.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    lff::Json rec;
    rec["error"] = "failure";
    rec["detail"] = e.what();
    std::cout << rec.dump() << "\n";
    return 1;
  }
  return 2;
}
