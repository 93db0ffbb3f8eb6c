#include "cluspat/driver.hpp"

#include <functional>

#include "cluspat/initial_seed.hpp"
#include "cluspat/principal_ext.hpp"
#include "cluspat/randgen.hpp"
#include "cluspat/semifield.hpp"
#include "cluspat/separation.hpp"

namespace cluspat {

namespace {

void check_initial_seed_transforms(CaseOutcome& out, const ExchangeMatrix& b, const Walk& walk,
                                   const PatternNode& node, const PatternNode& node_neg,
                                   WalkCache& cache) {
  const IntMatrix h_b_t0 = h_matrix(node);
  const IntMatrix h_negb_t0 = h_matrix(node_neg);
  for (int k = 1; k <= b.rank(); ++k) {
    RootSwap swap = make_root_swap(b, k);
    Walk rerooted = walk.prepended(k);
    PatternNode at_t1 = walk_node(swap.b1, rerooted, &cache);
    PatternNode at_t1_neg = walk_node(swap.b1.negated(), rerooted, &cache);
    const IntMatrix h_b1_t1 = h_matrix(at_t1);
    const IntMatrix h_negb1_t1 = h_matrix(at_t1_neg);
    std::string where = " (walk " + walk.to_text() + ", k=" + std::to_string(k) + ")";

    for (int eps : {1, -1}) {
      if (initial_mutate_c(node.c, node.b.matrix(), swap, eps, h_b_t0, h_b1_t1) != at_t1.c)
        out.fail("initial-seed C transform (eps=" + std::to_string(eps) + ") != re-rooted C" +
                 where);
      if (initial_mutate_g(node.g, swap, eps, h_b_t0, h_b1_t1) != at_t1.g)
        out.fail("initial-seed G transform (eps=" + std::to_string(eps) + ") != re-rooted G" +
                 where);
      if (initial_mutate_c_via_g(node.c, node.g, node.b.matrix(), swap, eps) != at_t1.c)
        out.fail("initial-seed C-via-G transform (eps=" + std::to_string(eps) + ") mismatch" +
                 where);
      if (initial_mutate_g_via_g(node.g, swap, eps) != at_t1.g)
        out.fail("initial-seed G-via-G transform (eps=" + std::to_string(eps) + ") mismatch" +
                 where);
    }
    try {
      if (initial_mutate_fmat(node.f, swap, +1, node.g, node_neg.g, h_b_t0, h_negb_t0) != at_t1.f)
        out.fail("initial-seed F-matrix transform (eps=+1) != re-rooted F" + where);
      if (initial_mutate_fmat(node.f, swap, -1, node.g, node_neg.g, h_b1_t1, h_negb1_t1) !=
          at_t1.f)
        out.fail("initial-seed F-matrix transform (eps=-1) != re-rooted F" + where);
      // The G-based unreduced route, valid under sign-coherence.
      int n = b.rank();
      for (int eps : {1, -1}) {
        IntMatrix eb = eps > 0 ? swap.b0.matrix() : -swap.b0.matrix();
        IntMatrix g_pos = eps > 0 ? node.g : -node.g;
        IntMatrix g_neg_scaled = eps > 0 ? -node_neg.g : node_neg.g;
        IntMatrix via_g = (j_matrix(n, k) + row_restrict(positive_part(eb), k)) * node.f +
                          row_restrict(positive_part(g_neg_scaled), k) +
                          row_restrict(positive_part(g_pos), k);
        if (via_g != at_t1.f)
          out.fail("initial-seed F-matrix G-route (eps=" + std::to_string(eps) +
                   ") != re-rooted F" + where);
      }
      if (initial_c_signed(node.c, node.g, swap) != at_t1.c)
        out.fail("reduced initial-seed C transform mismatch" + where);
      if (initial_g_signed(node.g, swap) != at_t1.g)
        out.fail("reduced initial-seed G transform mismatch" + where);
      if (initial_fmat_signed(node.f, node.g, node_neg.g, swap) != at_t1.f)
        out.fail("reduced initial-seed F-matrix transform mismatch" + where);
      for (int j = 1; j <= b.rank(); ++j)
        if (initial_mutate_fpoly(node, swap, j) != at_t1.fpolys[j - 1])
          out.fail("initial-seed F-polynomial transform mismatch at j=" + std::to_string(j) +
                   where);
    } catch (const Error& err) {
      out.fail(std::string(err.what()) + where);
    }
  }
}

void check_principal_coefficients(CaseOutcome& out, const ExchangeMatrix& b, const Walk& walk,
                                  const PatternNode& node) {
  SemifieldPtr p = Semifield::tropical(y_vars(b.rank()));
  Seed seed = initial_seed_over(b, p);
  for (int l : walk.labels) seed = mutate_seed_direct(seed, l);  // NonLaurent throws
  std::vector<SemifieldElement> y0 = standard_assignment(p);
  for (int j = 1; j <= b.rank(); ++j) {
    SeparatedVariable separated = cluster_variable_separated(node, j, p, y0);
    if (!separated.equals(seed.xs[j - 1]))
      out.fail("separation formula disagrees with direct mutation at x_" + std::to_string(j) +
               " (walk " + walk.to_text() + ")");
    SemifieldElement coeff = coefficient_separated(node, j, p, y0);
    if (!sf_equal(coeff, seed.ys[j - 1]))
      out.fail("separation formula disagrees with direct mutation at y_" + std::to_string(j) +
               " (walk " + walk.to_text() + ")");
    // Principal specialization: the coefficient is the C-column monomial.
    std::vector<BigInt> c_col(b.rank());
    for (int i = 0; i < b.rank(); ++i) c_col[i] = node.c(i, j - 1);
    if (!sf_equal(coeff, sf_monomial(p, std::move(c_col))))
      out.fail("principal coefficient is not the C-column monomial at y_" + std::to_string(j) +
               " (walk " + walk.to_text() + ")");
  }
}

}  // namespace

CaseOutcome verify_identities(const ExchangeMatrix& b, const Walk& walk) {
  CaseOutcome out;
  for (int j = 0; j < b.rank(); ++j) {
    bool all_zero = true;
    for (int i = 0; i < b.rank(); ++i) all_zero = all_zero && b.matrix()(i, j) == 0;
    out.zero_column = out.zero_column || all_zero;
  }
  for (const auto& d : b.symmetrizer()) out.nontrivial_symmetrizer |= d != 1;

  WalkCache cache;
  try {
    // Every final-seed recursion variant, invariant, and the -B relations.
    PatternNode node = walk_node(b, walk, nullptr, VerifyLevel::checked);
    PatternNode node_neg = walk_node(b.negated(), walk, &cache);

    // Full seed step is involutive.
    for (int k = 1; k <= b.rank(); ++k) {
      PatternNode back = walk_node(b, walk.appended(k).appended(k), &cache);
      if (!seed_data_equal(back, node))
        out.fail("full-seed involution fails in direction " + std::to_string(k) + " (walk " +
                 walk.to_text() + ")");
    }

    check_initial_seed_transforms(out, b, walk, node, node_neg, cache);

    IdentityReport cg = duality_cg(b, walk, &cache);
    for (auto& f : cg.failures) out.fail(std::move(f));
    IdentityReport ff = duality_f(b, walk, &cache);
    for (auto& f : ff.failures) out.fail(std::move(f));

    IdentityReport blocks = extended_pattern_blocks(b, walk, &cache);
    for (auto& f : blocks.failures) out.fail(std::move(f));

    check_principal_coefficients(out, b, walk, node);
  } catch (const Error& err) {
    out.fail(err.what());
  }
  return out;
}

nlohmann::json cmd_mutate(const MutateConfig& config) {
  ExchangeMatrix b(config.matrix);
  config.walk.validate(b.rank());
  PatternNode node = walk_node(b, config.walk, nullptr, config.level);
  nlohmann::json out;
  out["node"] = node_to_json(node);
  out["checked"] = config.level == VerifyLevel::checked;
  if (config.semifield.has_value()) {
    SemifieldPtr p;
    switch (*config.semifield) {
      case SemifieldKind::tropical: p = Semifield::tropical(y_vars(b.rank())); break;
      case SemifieldKind::tropical_inverted:
        p = Semifield::tropical_inverted(y_vars(b.rank()));
        break;
      case SemifieldKind::universal: p = Semifield::universal(y_vars(b.rank())); break;
      case SemifieldKind::one_element: p = Semifield::one_element(); break;
    }
    std::vector<SemifieldElement> y0 =
        p->kind() == SemifieldKind::one_element
            ? std::vector<SemifieldElement>(b.rank(), sf_one(p))
            : standard_assignment(p);
    nlohmann::json xs = nlohmann::json::array();
    nlohmann::json ys = nlohmann::json::array();
    for (int j = 1; j <= b.rank(); ++j) {
      xs.push_back(cluster_variable_separated(node, j, p, y0).to_text());
      ys.push_back(coefficient_separated(node, j, p, y0).to_text());
    }
    out["cluster_variables"] = std::move(xs);
    out["coefficients"] = std::move(ys);
  }
  nlohmann::json warnings = nlohmann::json::array();
  if (config.walk.has_immediate_repeat())
    warnings.push_back("walk repeats a label consecutively; those two steps cancel");
  out["warnings"] = std::move(warnings);
  return out;
}

nlohmann::json cmd_check_duality(const DualityConfig& config) {
  ExchangeMatrix b(config.matrix);
  int n = b.rank();
  nlohmann::json checks = nlohmann::json::array();
  int failures = 0;
  WalkCache cache;

  // All label sequences without immediate repeats, i.e. all distinct tree
  // vertices within the radius.
  std::vector<Walk> walks{Walk{}};
  std::function<void(const Walk&)> expand = [&](const Walk& w) {
    if (static_cast<int>(w.length()) >= config.max_walk_len) return;
    for (int l = 1; l <= n; ++l) {
      if (!w.labels.empty() && w.labels.back() == l) continue;
      Walk next = w.appended(l);
      walks.push_back(next);
      expand(next);
    }
  };
  expand(Walk{});

  for (const Walk& w : walks) {
    PatternNode node = walk_node(b, w, &cache);
    PatternNode node_neg = walk_node(b.negated(), w, &cache);
    CaseOutcome outcome;
    IdentityReport cg = duality_cg(b, w, &cache);
    for (auto& f : cg.failures) outcome.fail(std::move(f));
    IdentityReport ff = duality_f(b, w, &cache);
    for (auto& f : ff.failures) outcome.fail(std::move(f));
    check_initial_seed_transforms(outcome, b, w, node, node_neg, cache);
    nlohmann::json entry;
    entry["walk"] = w.labels;
    entry["pass"] = outcome.pass;
    entry["failures"] = outcome.failures;
    if (!outcome.pass) ++failures;
    checks.push_back(std::move(entry));
  }

  nlohmann::json out;
  out["B"] = matrix_to_json(b.matrix());
  out["max_walk_len"] = config.max_walk_len;
  out["checks"] = std::move(checks);
  out["pass"] = failures == 0;
  out["failed_walks"] = failures;
  return out;
}

nlohmann::json cmd_extend(const ExtendConfig& config) {
  ExchangeMatrix b(config.matrix);
  ExtendedMatrix ext = extend(b);
  nlohmann::json out;
  out["B"] = matrix_to_json(b.matrix());
  out["B_bar"] = matrix_to_json(ext.full.matrix());
  out["D"] = nlohmann::json::array();
  for (const auto& d : ext.full.symmetrizer()) out["D"].push_back(d.get_si());
  out["pass"] = true;
  if (config.walk.has_value()) {
    IdentityReport report = extended_pattern_blocks(b, *config.walk);
    out["walk"] = config.walk->labels;
    out["B_bar_t"] = matrix_to_json(extended_exchange_at(b, *config.walk));
    out["block_identities_pass"] = report.ok;
    out["failures"] = report.failures;
    out["pass"] = report.ok;
  }
  return out;
}

nlohmann::json cmd_tables_a2() {
  ExchangeMatrix b(IntMatrix{{0, 1}, {-1, 0}});
  const std::vector<int> edge_labels{2, 1, 2, 1, 2};
  SemifieldPtr qsf = Semifield::universal(y_vars(2));

  nlohmann::json table1 = nlohmann::json::array();
  nlohmann::json table2 = nlohmann::json::array();
  nlohmann::json table3 = nlohmann::json::array();
  nlohmann::json table4 = nlohmann::json::array();

  Seed seed = initial_seed_over(b, qsf);
  Walk walk;
  WalkCache cache;
  for (int t = 0; t <= 5; ++t) {
    if (t > 0) {
      seed = mutate_seed_direct(seed, edge_labels[t - 1]);
      walk = walk.appended(edge_labels[t - 1]);
    }
    PatternNode node = walk_node(b, walk, &cache);

    nlohmann::json row1;
    row1["t"] = t;
    row1["Y"] = nlohmann::json::array();
    row1["X"] = nlohmann::json::array();
    for (int j = 0; j < 2; ++j) {
      row1["Y"].push_back(seed.ys[j].to_text());
      row1["X"].push_back(seed.xs[j].to_text());
    }
    table1.push_back(std::move(row1));

    nlohmann::json row2;
    row2["t"] = t;
    row2["C"] = matrix_to_json(node.c);
    row2["G"] = matrix_to_json(node.g);
    row2["F"] = matrix_to_json(node.f);
    table2.push_back(std::move(row2));

    // Re-rooted data: initial matrix B_t^T at vertex t, walked back to t0.
    ExchangeMatrix bt = ExchangeMatrix(node.b.matrix().transposed());
    Walk back = walk.reversed();
    Seed seed_back = initial_seed_over(bt, qsf);
    for (int l : back.labels) seed_back = mutate_seed_direct(seed_back, l);
    PatternNode node_back = walk_node(bt, back, &cache);

    nlohmann::json row3;
    row3["t"] = t;
    row3["Y"] = nlohmann::json::array();
    row3["X"] = nlohmann::json::array();
    for (int j = 0; j < 2; ++j) {
      row3["Y"].push_back(seed_back.ys[j].to_text());
      row3["X"].push_back(seed_back.xs[j].to_text());
    }
    table3.push_back(std::move(row3));

    nlohmann::json row4;
    row4["t"] = t;
    row4["C"] = matrix_to_json(node_back.c);
    row4["G"] = matrix_to_json(node_back.g);
    row4["F"] = matrix_to_json(node_back.f);
    table4.push_back(std::move(row4));
  }

  nlohmann::json out;
  out["B"] = matrix_to_json(b.matrix());
  out["edge_labels"] = edge_labels;
  out["table1"] = std::move(table1);
  out["table2"] = std::move(table2);
  out["table3"] = std::move(table3);
  out["table4"] = std::move(table4);
  return out;
}

std::vector<std::pair<ExchangeMatrix, Walk>> sample_suite_cases(const SuiteConfig& config) {
  if (config.cases < 0 || config.rank_min < 1 || config.rank_max < config.rank_min)
    throw InvalidArgument("random-suite: bad configuration");
  RandomSource rng(config.seed);
  std::vector<std::pair<ExchangeMatrix, Walk>> cases;
  cases.reserve(config.cases);
  for (int index = 0; index < config.cases; ++index) {
    int rank = rng.uniform_int(config.rank_min, config.rank_max);
    bool want_zero_column = rank > 1 && rng.chance_percent(config.zero_column_percent);
    bool want_scaling = rng.chance_percent(config.scale_percent);
    ExchangeMatrix b =
        random_exchange_matrix(rng, rank, config.max_entry, want_zero_column, want_scaling);
    Walk walk = random_feasible_walk(rng, b, config.max_walk_len, config.support_cap);
    cases.emplace_back(std::move(b), std::move(walk));
  }
  return cases;
}

nlohmann::json cmd_random_suite(const SuiteConfig& config) {
  std::vector<std::pair<ExchangeMatrix, Walk>> sampled = sample_suite_cases(config);
  nlohmann::json cases = nlohmann::json::array();
  int passed = 0, zero_column_cases = 0, nontrivial_d_cases = 0;

  for (int index = 0; index < config.cases; ++index) {
    const ExchangeMatrix& b = sampled[index].first;
    const Walk& walk = sampled[index].second;
    int rank = b.rank();

    CaseOutcome outcome = verify_identities(b, walk);
    passed += outcome.pass ? 1 : 0;
    zero_column_cases += outcome.zero_column ? 1 : 0;
    nontrivial_d_cases += outcome.nontrivial_symmetrizer ? 1 : 0;

    nlohmann::json entry;
    entry["index"] = index;
    entry["rank"] = rank;
    entry["B"] = matrix_to_json(b.matrix());
    nlohmann::json dd = nlohmann::json::array();
    for (const auto& d : b.symmetrizer()) dd.push_back(d.get_si());
    entry["D"] = std::move(dd);
    entry["walk"] = walk.labels;
    entry["pass"] = outcome.pass;
    entry["zero_column"] = outcome.zero_column;
    entry["nontrivial_symmetrizer"] = outcome.nontrivial_symmetrizer;
    if (!outcome.pass) {
      entry["failures"] = outcome.failures;
      // Minimal reproducer for the failing instance.
      entry["reproducer"] = {{"B", matrix_to_json(b.matrix())},
                             {"walk", walk.to_text()},
                             {"seed", config.seed},
                             {"case", index}};
    }
    cases.push_back(std::move(entry));
  }

  nlohmann::json out;
  out["config"] = {{"cases", config.cases},
                   {"rank_min", config.rank_min},
                   {"rank_max", config.rank_max},
                   {"max_entry", config.max_entry},
                   {"max_walk_len", config.max_walk_len},
                   {"seed", config.seed},
                   {"zero_column_percent", config.zero_column_percent},
                   {"scale_percent", config.scale_percent},
                   {"support_cap", config.support_cap}};
  out["cases"] = std::move(cases);
  out["summary"] = {{"total", config.cases},
                    {"passed", passed},
                    {"failed", config.cases - passed},
                    {"zero_column_cases", zero_column_cases},
                    {"nontrivial_symmetrizer_cases", nontrivial_d_cases}};
  out["pass"] = passed == config.cases;
  return out;
}

bool report_passed(const nlohmann::json& report) {
  return report.contains("pass") && report["pass"].is_boolean() && report["pass"].get<bool>();
}

}  // namespace cluspat
