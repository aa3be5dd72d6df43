// qframe: file-driven analyses of quaternionic frame instances plus a
// seeded randomized verification harness.  Exit codes: 0 = ran and
// internally consistent, 1 = usage or input error, 2 = provably equivalent
// conditions disagreed (a library bug signal).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qframes/douglas.hpp"
#include "qframes/duality.hpp"
#include "qframes/errors.hpp"
#include "qframes/frames.hpp"
#include "qframes/random.hpp"
#include "qframes/report.hpp"
#include "qframes/serialization.hpp"
#include "qframes/spectral.hpp"
#include "qframes/superspace.hpp"
#include "qframes/theorems.hpp"

namespace {

using namespace qframes;

struct Ctx {
  std::string path;
  std::string out;
  double tol = 1e-9;
  std::uint64_t seed = 20260815u;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

void print_report(const AnalysisReport& rep) {
  std::cout << "command  " << rep.command << '\n';
  if (!rep.digest.empty()) std::cout << "input    " << rep.digest << '\n';
  std::cout << "seed     " << rep.seed;
  if (rep.trials > 0) std::cout << "   trials " << rep.trials;
  std::cout << '\n';
  if (!rep.verdicts.empty()) std::cout << "verdicts\n";
  for (const auto& [name, ok] : rep.verdicts) {
    std::cout << "  " << std::left << std::setw(34) << name
              << (ok ? "pass" : "FAIL") << '\n';
  }
  if (!rep.numerics.empty()) std::cout << "numerics\n";
  for (const auto& [name, value] : rep.numerics) {
    std::cout << "  " << std::left << std::setw(34) << name
              << std::setprecision(12) << value << '\n';
  }
  for (const auto& [name, w] : rep.witnesses) {
    std::cout << "witness  " << name << '\n';
    for (const Quaternion& q : w) {
      std::cout << "  [" << q.a0 << ", " << q.a1 << ", " << q.a2 << ", "
                << q.a3 << "]\n";
    }
  }
  std::cout << "wall_ms  " << rep.wall_ms << '\n';
}

int finish(AnalysisReport& rep, const Ctx& ctx, bool consistent) {
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - ctx.t0)
                    .count();
  print_report(rep);
  if (!ctx.out.empty()) {
    std::ofstream f(ctx.out, std::ios::binary);
    if (!f) {
      std::cerr << "qframe: cannot write " << ctx.out << '\n';
      return 1;
    }
    f << report_to_json(rep);
  }
  if (!consistent) {
    std::cerr << "qframe: equivalent conditions disagree; report follows\n"
              << report_to_json(rep);
    return 2;
  }
  return 0;
}

AnalysisReport start(const char* cmd, const Ctx& ctx) {
  AnalysisReport rep;
  rep.command = cmd;
  rep.seed = ctx.seed;
  return rep;
}

Instance load_with_digest(const Ctx& ctx, AnalysisReport& rep) {
  const std::string text = read_file(ctx.path);
  rep.digest = fnv1a64_hex(text);
  return parse_instance(text);
}

int cmd_analyze(const Ctx& ctx) {
  AnalysisReport rep = start("analyze", ctx);
  Instance inst = load_with_digest(ctx, rep);
  FrameFamily fam = to_family(inst);
  OperatorBundle b = build_bundle(fam);
  FrameBounds fb = frame_bounds(fam);
  MinimalityReport mr = minimality(fam);

  // the three renderings of the frame energy must agree on sampled vectors
  SplitMix64 rng(ctx.seed);
  double worst = 0.0;
  for (int t = 0; t < 64; ++t) {
    EnergyTriple e = frame_energy(fam, random_unit_qvector(rng, fam.dim));
    worst = std::max({worst, std::fabs(e.direct_sum - e.quadratic_form),
                      std::fabs(e.direct_sum - e.analysis_norm_sq)});
  }
  const bool energy_ok = worst <= 1e-10 * (1.0 + opnorm(b.frame_op));

  std::cout << "class    " << to_string(fb.cls) << '\n';
  rep.verdict("frame", fb.cls == Classification::Frame ||
                           fb.cls == Classification::Parseval);
  rep.verdict("parseval", fb.cls == Classification::Parseval);
  rep.verdict("minimal", mr.minimal);
  rep.verdict("energy_identity", energy_ok);
  rep.numeric("A", fb.lower);
  rep.numeric("B", fb.upper);
  rep.numeric("energy_residual", worst);
  rep.numeric("synthesis_rank", mr.synthesis_rank);
  if (!mr.minimal) {
    QMatrix ker = nullspace(b.preframe);
    if (ker.cols() > 0) {
      rep.witness("synthesis_kernel", ker.column(0).entries());
    }
  }
  return finish(rep, ctx, energy_ok);
}

int cmd_kcheck(const Ctx& ctx) {
  AnalysisReport rep = start("kcheck", ctx);
  Instance inst = load_with_digest(ctx, rep);
  FrameFamily fam = to_family(inst);
  if (!inst.k) throw ParseError("kcheck: instance needs a K matrix");
  KFrameOptions opts;
  opts.tol = ctx.tol;
  opts.seed = ctx.seed;
  KFrameReport kr = kframe_check(fam, *inst.k, opts);

  rep.verdict("lower_bound", kr.lower_bound);
  rep.verdict("range_inclusion", kr.range);
  rep.verdict("majorization", kr.majorized);
  rep.verdict("factorization", kr.factorization);
  rep.verdict("conditions_agree", kr.conditions_agree);
  rep.verdict("k_frame", kr.is_kframe);
  rep.numeric("A", kr.bounds.lower);
  rep.numeric("B", kr.bounds.upper);
  rep.numeric("c_opt", kr.c_opt);
  rep.numeric("sampled_min_ratio", kr.sampled_min_ratio);
  rep.numeric("range_residual", kr.range_residual);
  rep.numeric("kernel_residual", kr.kernel_residual);
  rep.numeric("certificate_eigenvalue", kr.certificate_eigenvalue);
  rep.numeric("factorization_residual", kr.factorization_residual);

  if (!kr.is_kframe) {
    // a synthesis cokernel direction that K fails to annihilate
    OperatorBundle b = build_bundle(fam);
    QMatrix coker = nullspace(adjoint(b.synthesis_whitened));
    QMatrix ka = adjoint(*inst.k);
    int best = -1;
    double best_energy = -1.0;
    for (int c = 0; c < coker.cols(); ++c) {
      const double e = (ka * coker.column(c)).norm_sq();
      if (e > best_energy) {
        best_energy = e;
        best = c;
      }
    }
    if (best >= 0) {
      rep.witness("unreached_direction", coker.column(best).entries());
    }
  }
  return finish(rep, ctx, kr.conditions_agree);
}

int cmd_douglas(const Ctx& ctx) {
  AnalysisReport rep = start("douglas", ctx);
  Instance inst = load_with_digest(ctx, rep);
  if (!inst.l || !inst.m) throw ParseError("douglas: instance needs L and M");
  DouglasReport dr = douglas_equivalence_report(*inst.l, *inst.m, ctx.tol);
  const bool agree = dr.range_included == dr.majorized &&
                     dr.majorized == dr.factorizable;

  rep.verdict("range_inclusion", dr.range_included);
  rep.verdict("majorization", dr.majorized);
  rep.verdict("factorization", dr.factorizable);
  rep.verdict("conditions_agree", agree);
  rep.numeric("c_min", dr.c_min);
  rep.numeric("range_residual", dr.range_residual);
  rep.numeric("certificate_eigenvalue", dr.certificate_eigenvalue);
  rep.numeric("factor_residual", dr.factor_residual);
  rep.numeric("factor_norm", dr.factor_norm);

  if (!dr.range_included) {
    QMatrix coker = nullspace(adjoint(*inst.m));
    QMatrix la = adjoint(*inst.l);
    int best = -1;
    double best_energy = -1.0;
    for (int c = 0; c < coker.cols(); ++c) {
      const double e = (la * coker.column(c)).norm_sq();
      if (e > best_energy) {
        best_energy = e;
        best = c;
      }
    }
    if (best >= 0) {
      rep.witness("escape_direction", coker.column(best).entries());
    }
  }
  return finish(rep, ctx, agree);
}

int cmd_super(const Ctx& ctx) {
  AnalysisReport rep = start("super", ctx);
  Instance inst = load_with_digest(ctx, rep);
  SuperFrame sf = to_super(inst);
  if (!inst.k1 || !inst.k2) {
    throw ParseError("super: instance needs K1 and K2");
  }
  bool consistent = true;

  SuperBundleReport sb = super_bundle(sf);
  rep.verdict("decomposition", sb.max_residual <= 1e-10);
  rep.numeric("decomposition_residual", sb.max_residual);
  consistent = consistent && sb.max_residual <= 1e-10;

  BesselSumReport bs = bessel_sum_equivalence(sf);
  rep.verdict("bessel_sandwich", bs.upper_ok && bs.lower_ok);
  rep.numeric("B", bs.b_sum);
  rep.numeric("B1", bs.b1);
  rep.numeric("B2", bs.b2);
  consistent = consistent && bs.upper_ok && bs.lower_ok;

  bool identical = sf.f1.dim == sf.f2.dim &&
                   sf.f1.vectors.size() == sf.f2.vectors.size();
  for (std::size_t i = 0; identical && i < sf.f1.vectors.size(); ++i) {
    identical = close(sf.f1.vectors[i], sf.f2.vectors[i], 0.0);
  }

  if (identical) {
    ObstructionReport obr =
        identical_pair_obstruction(sf.f1, *inst.k1, *inst.k2, ctx.tol);
    rep.verdict("k_frame", obr.is_kframe);
    rep.verdict("obstruction_equivalence",
                obr.is_kframe == obr.theorem_verdict);
    rep.numeric("witness_energy", obr.witness_energy);
    rep.numeric("witness_k_norm_sq", obr.witness_k_norm_sq);
    if (!obr.is_kframe) {
      std::vector<Quaternion> w = obr.witness.entries();
      for (const Quaternion& q : obr.witness.entries()) w.push_back(-q);
      rep.witness("obstruction_witness", w);
    }
    consistent = consistent && obr.is_kframe == obr.theorem_verdict;
    return finish(rep, ctx, consistent);
  }

  SuperOperator k = SuperOperator::direct_sum(*inst.k1, *inst.k2);
  KFrameOptions opts;
  opts.tol = ctx.tol;
  opts.seed = ctx.seed;
  KFrameReport kr = kframe_check(sf.combined(), k.mat, opts);
  rep.verdict("k_frame", kr.is_kframe);
  rep.verdict("conditions_agree", kr.conditions_agree);
  rep.numeric("A", kr.bounds.lower);
  rep.numeric("c_opt", kr.c_opt);
  consistent = consistent && kr.conditions_agree;

  try {
    SufficiencyReport suf = k1k2_sufficiency(sf, *inst.k1, *inst.k2, ctx.tol);
    rep.verdict("sufficiency_applicable", suf.applicable);
    if (suf.applicable) {
      rep.verdict("sufficiency", suf.verdict);
      rep.numeric("claimed_lower", suf.claimed_lower);
      rep.numeric("combined_c_opt", suf.combined_c_opt);
      consistent = consistent && suf.verdict;
    }
    rep.numeric("cross12_norm", suf.cross12_norm);
    rep.numeric("cross21_norm", suf.cross21_norm);
  } catch (const PreconditionError&) {
    // a component fails its own K-frame check; the sufficiency statement
    // says nothing here
    rep.verdict("sufficiency_preconditions", false);
  }

  if (kr.is_kframe) {
    NecessityReport nec = k1k2_necessity(sf, *inst.k1, *inst.k2, ctx.tol);
    rep.verdict("necessity", nec.verdict);
    consistent = consistent && nec.verdict;

    SuperMinimalityReport smin = super_minimality(sf, k, ctx.tol);
    rep.verdict("minimal", smin.minimal);
    rep.verdict("closure_condition", smin.closure_condition);
    rep.verdict("closure_implication", smin.implication_ok);
    rep.numeric("stacked_rank", smin.stacked_rank);
    consistent = consistent && smin.implication_ok;
  }
  return finish(rep, ctx, consistent);
}

int cmd_dual(const Ctx& ctx) {
  AnalysisReport rep = start("dual", ctx);
  Instance inst = load_with_digest(ctx, rep);
  const bool super_shape = inst.dims.has_value() || inst.g1.has_value();

  if (!super_shape) {
    FrameFamily fam = to_family(inst);
    if (!inst.k || !inst.g) {
      throw ParseError("dual: plain instance needs K and G");
    }
    DualMapping d(fam.space, *inst.g);
    KDualCheck chk = is_kdual(fam, *inst.k, d, ctx.tol);
    rep.verdict("k_dual", chk.ok);
    rep.numeric("residual", chk.residual);
    rep.numeric("dual_opnorm", dual_opnorm(d));
    bool consistent = true;
    KFrameOptions opts;
    opts.tol = ctx.tol;
    opts.seed = ctx.seed;
    if (kframe_check(fam, *inst.k, opts).is_kframe) {
      DualMapping minimal = kdual_via_douglas(fam, *inst.k, ctx.tol);
      KDualCheck mchk = is_kdual(fam, *inst.k, minimal, ctx.tol);
      rep.verdict("douglas_dual", mchk.ok);
      rep.numeric("douglas_residual", mchk.residual);
      rep.numeric("douglas_opnorm", dual_opnorm(minimal));
      consistent = consistent && mchk.ok;
    }
    return finish(rep, ctx, consistent);
  }

  SuperFrame sf = to_super(inst);
  if (!inst.k1 || !inst.k2 || !inst.g1 || !inst.g2) {
    throw ParseError("dual: super instance needs K1, K2, G1, G2");
  }
  DualMapping g1(sf.f1.space, *inst.g1);
  DualMapping g2(sf.f2.space, *inst.g2);
  bool consistent = true;
  try {
    CrossAnnihilationReport ca =
        cross_annihilation_equivalence(sf, *inst.k1, *inst.k2, g1, g2,
                                       ctx.tol);
    rep.verdict("merged_dual", ca.merged);
    rep.verdict("cross_annihilation", ca.annihilation);
    rep.verdict("equivalence_agrees", ca.equivalence_agrees);
    rep.numeric("merged_residual", ca.merged_residual);
    rep.numeric("t1g2_norm", ca.t1g2_norm);
    rep.numeric("t2g1_norm", ca.t2g1_norm);
    consistent = consistent && ca.equivalence_agrees;
    if (ca.merged) {
      SplitDualReport split =
          split_super_dual(sf, *inst.k1, *inst.k2, g1, g2, ctx.tol);
      rep.verdict("splits", split.verdict);
      rep.numeric("split_residual1", split.part1.residual);
      rep.numeric("split_residual2", split.part2.residual);
      consistent = consistent && split.verdict;
    }
  } catch (const PreconditionError&) {
    // G1, G2 are not component duals; the merge statement does not apply
    rep.verdict("component_dual_premise", false);
  }
  return finish(rep, ctx, consistent);
}

int cmd_proptest(const Ctx& ctx, int trials, int max_dim,
                 const std::string& theorem) {
  AnalysisReport rep = start("proptest", ctx);
  std::vector<std::string> selected;
  if (theorem == "all") {
    selected = theorem_names();
  } else {
    const std::vector<std::string>& names = theorem_names();
    if (std::find(names.begin(), names.end(), theorem) == names.end()) {
      std::cerr << "qframe: unknown theorem '" << theorem << "'; known:";
      for (const std::string& n : names) std::cerr << ' ' << n;
      std::cerr << " all\n";
      return 1;
    }
    selected.push_back(theorem);
  }

  std::ostringstream canon;
  canon << "proptest seed=" << ctx.seed << " trials=" << trials
        << " max-dim=" << max_dim << " tol=" << ctx.tol
        << " theorem=" << theorem;
  rep.digest = fnv1a64_hex(canon.str());
  rep.trials = trials;

  bool all_ok = true;
  for (const std::string& name : selected) {
    TheoremResult r = run_theorem(name, ctx.seed, trials, max_dim, ctx.tol);
    rep.verdict(name, !r.has_failure);
    rep.numeric(name + "_passes", r.passes);
    if (r.has_failure) {
      all_ok = false;
      rep.numeric(name + "_failure_seed_hi",
                  static_cast<double>(r.first_failure_seed >> 32));
      rep.numeric(name + "_failure_seed_lo",
                  static_cast<double>(r.first_failure_seed & 0xffffffffull));
      std::cout << name << ": first failure at derived seed "
                << r.first_failure_seed
                << (r.note.empty() ? std::string()
                                   : " (" + r.note + ")")
                << '\n';
    }
  }
  return finish(rep, ctx, all_ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic frame analysis toolkit"};
  app.require_subcommand(1);

  Ctx ctx;
  int trials = 100;
  int max_dim = 5;
  std::string theorem = "all";

  auto add_common = [&ctx](CLI::App* sub, bool with_file) {
    sub->add_option("--tol", ctx.tol, "comparison tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", ctx.seed, "master seed");
    sub->add_option("--out", ctx.out, "write the JSON report here");
    if (with_file) {
      sub->add_option("file", ctx.path, "instance file (.qframe.json)")
          ->required()
          ->check(CLI::ExistingFile);
    }
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "frame bounds, classification, minimality");
  add_common(analyze, true);
  CLI::App* kcheck =
      app.add_subcommand("kcheck", "four-way K-frame agreement");
  add_common(kcheck, true);
  CLI::App* douglas =
      app.add_subcommand("douglas", "range/majorization/factorization");
  add_common(douglas, true);
  CLI::App* super =
      app.add_subcommand("super", "direct-sum frame analyses");
  add_common(super, true);
  CLI::App* dual = app.add_subcommand("dual", "K-dual verification");
  add_common(dual, true);
  CLI::App* prop =
      app.add_subcommand("proptest", "randomized theorem verification");
  add_common(prop, false);
  prop->add_option("--trials", trials, "instances per theorem")
      ->check(CLI::PositiveNumber);
  prop->add_option("--max-dim", max_dim, "largest component dimension")
      ->check(CLI::PositiveNumber);
  prop->add_option("--theorem", theorem, "suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(ctx);
    if (kcheck->parsed()) return cmd_kcheck(ctx);
    if (douglas->parsed()) return cmd_douglas(ctx);
    if (super->parsed()) return cmd_super(ctx);
    if (dual->parsed()) return cmd_dual(ctx);
    if (prop->parsed()) return cmd_proptest(ctx, trials, max_dim, theorem);
  } catch (const qframes::Error& e) {
    std::cerr << "qframe: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
