#include "qlin/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#ifdef QLIN_HAVE_OPENMP
#include <omp.h>
#endif

#include "qlin/constants.hpp"
#include "qlin/fixedlines.hpp"
#include "qlin/group.hpp"
#include "qlin/linesys.hpp"
#include "qlin/stabilizers.hpp"
#include "qlin/subgroups.hpp"

namespace qlin {

namespace {

namespace cn = qlin::constants;

// ---------------------------------------------------------------- helpers

std::string cycles(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string fmt_multiset(const std::vector<std::pair<FieldElem, long>>& ms) {
  std::string out = "{";
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ", ";
    out += ms[i].first.str() + ": " + std::to_string(ms[i].second);
  }
  return out + "}";
}

std::set<std::string> key_set(const LineSystem& l) {
  std::set<std::string> ks;
  for (const auto& ln : l.lines) ks.insert(ln.key);
  return ks;
}

QuatMatrix negate(const QuatMatrix& m) {
  QuatMatrix out(m.rows, m.cols);
  for (size_t i = 0; i < m.e.size(); ++i) out.e[i] = -m.e[i];
  return out;
}

QuatVector random_small_vector(int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-9, 9);
  while (true) {
    QuatVector v(dim);
    bool nonzero = false;
    for (int i = 0; i < dim; ++i) {
      v[i] = Quaternion(FieldElem(coord(rng)), FieldElem(coord(rng)),
                        FieldElem(coord(rng)), FieldElem(coord(rng)));
      nonzero = nonzero || !v[i].is_zero();
    }
    if (nonzero) return v;
  }
}

// Everything heavyweight is built once and shared between criteria.
struct Ctx {
  VerifyOptions opt;

  std::optional<FiniteMatrixGroup> h3_, h24_, h120_, h720_, h1440_;
  std::optional<LineSystem> sixw_, sixwp_, fifteen_, twenty_, thirty_b_;
  std::optional<ProjectiveStabilizer> stabw_, stabwp_;
  std::optional<PermutationAction> act6_;

  const FiniteMatrixGroup& h3() {
    if (!h3_) h3_ = FiniteMatrixGroup::close(cn::gens_b(1), opt.cap);
    return *h3_;
  }
  const FiniteMatrixGroup& h24() {
    if (!h24_) h24_ = FiniteMatrixGroup::close(cn::gens_b(2), opt.cap);
    return *h24_;
  }
  const FiniteMatrixGroup& h120() {
    if (!h120_) h120_ = FiniteMatrixGroup::close(cn::gens_b(3), opt.cap);
    return *h120_;
  }
  const FiniteMatrixGroup& h720() {
    if (!h720_) h720_ = FiniteMatrixGroup::close(cn::gens_b(4), opt.cap);
    return *h720_;
  }
  const FiniteMatrixGroup& h1440() {
    if (!h1440_) h1440_ = FiniteMatrixGroup::close(cn::gens_b(5), opt.cap);
    return *h1440_;
  }
  const LineSystem& six_w() {
    if (!sixw_) sixw_ = orbit_lines(h720(), cn::w());
    return *sixw_;
  }
  const LineSystem& six_wp() {
    if (!sixwp_) sixwp_ = orbit_lines(h720(), cn::w_perp());
    return *sixwp_;
  }
  const LineSystem& fifteen() {
    if (!fifteen_) fifteen_ = orbit_lines(h720(), cn::fiducial_15());
    return *fifteen_;
  }
  const LineSystem& twenty() {
    if (!twenty_) twenty_ = orbit_lines(h720(), cn::e1());
    return *twenty_;
  }
  const LineSystem& thirty_b() {
    if (!thirty_b_) thirty_b_ = orbit_lines(h720(), cn::fiducial_30());
    return *thirty_b_;
  }
  const ProjectiveStabilizer& stab_w() {
    if (!stabw_) stabw_ = projective_stabilizer(h720(), cn::w());
    return *stabw_;
  }
  const ProjectiveStabilizer& stab_wp() {
    if (!stabwp_) stabwp_ = projective_stabilizer(h720(), cn::w_perp());
    return *stabwp_;
  }
  std::vector<QuatVector> six_reps() {
    std::vector<QuatVector> reps;
    for (const auto& l : six_w().lines) reps.push_back(l.rep);
    return reps;
  }
  const PermutationAction& act_six() {
    if (!act6_) act6_ = permutation_action(h720(), six_reps());
    return *act6_;
  }
};

struct Checker {
  CriterionReport rep;
  void add(std::string id, std::string loc, std::string expected,
           std::string computed) {
    bool ok = expected == computed;
    rep.checks.push_back({std::move(id), std::move(loc), std::move(expected),
                          std::move(computed), ok});
  }
  void add_bool(std::string id, std::string loc, bool ok,
                std::string computed = "") {
    rep.checks.push_back({std::move(id), std::move(loc), "true",
                          computed.empty() ? (ok ? "true" : "false")
                                           : std::move(computed),
                          ok});
  }
};

// ------------------------------------------------------------- criteria

CriterionReport constants_checks(Ctx& c) {
  Checker ck;
  ck.rep = {0, "Transcribed constants", {}};

  QuatMatrix u = cn::u();
  QuatMatrix u_inv = u.conj_transpose();
  bool all_conj = true;
  for (int j = 1; j <= 5; ++j)
    all_conj = all_conj && (u_inv * cn::a(j) * u == cn::b(j));
  ck.add_bool("constants.b-from-a", "Section 2, b_j := u^-1 a_j u", all_conj);

  QuatMatrix ua = cn::U_a(), ub = cn::U_b();
  QuatMatrix mI = negate(QuatMatrix::identity(2));
  ck.add_bool("constants.ua-ub.orders", "Section 2, U_a^2 = -I, U_b^4 = -I",
              ua * ua == mI && ub * ub * ub * ub == mI &&
                  ua.is_unitary() && ub.is_unitary());
  FiniteMatrixGroup uaub = FiniteMatrixGroup::close({ua, ub}, c.opt.cap);
  ck.add("constants.ua-ub.order", "Section 2, |<U_a,U_b>| = 720", "720",
         std::to_string(uaub.order()));

  QuatMatrix A = cn::A();
  FieldElem cval = cn::A_star_A_scalar();
  QuatMatrix AstarA = A.conj_transpose() * A;
  bool scalar_ok = AstarA == scalar_matrix(2, Quaternion(cval));
  ck.add_bool("constants.AstarA", "Eq. (15), A*A = cI with displayed c",
              scalar_ok && cval.sign() > 0,
              scalar_ok ? "cI with c = " + cval.str() : "not scalar");

  // A^-1 = (1/c) A*; the conjugates are unchanged by the scale
  QuatMatrix Ainv = scalar_matrix(2, Quaternion(cval.inverse())) * A.conj_transpose();
  QuatMatrix conj_a = A * ua * Ainv;
  QuatMatrix conj_b = A * ub * Ainv;
  auto sign_match = [&](const QuatMatrix& got, const QuatMatrix& disp) -> std::string {
    if (got == disp) return "+";
    if (got == negate(disp)) return "-";
    return "neither";
  };
  std::string sa = sign_match(conj_a, cn::AUaA_inv());
  std::string sb = sign_match(conj_b, cn::AUbA_inv());
  ck.add_bool("constants.AUaA-inv", "Eq. (16), displayed A U_a A^-1",
              sa != "neither", "matches displayed value up to sign: " + sa);
  ck.add_bool("constants.AUbA-inv", "Eq. (16), displayed A U_b A^-1",
              sb != "neither", "matches displayed value up to sign: " + sb);
  ck.add_bool("constants.AUaA-in-h720", "Eq. (16) context",
              c.h720().index_of(conj_a).has_value() &&
              c.h720().index_of(conj_b).has_value());

  auto g2idx = c.h720().index_of(cn::g2());
  ck.add_bool("constants.g2-in-h720", "Eq. (17), g_2 has order 5 in H_720",
              g2idx.has_value() && c.h720().element_order(*g2idx) == 5,
              g2idx ? "order " + std::to_string(c.h720().element_order(*g2idx))
                    : "not a member");

  QuatMatrix r = cn::r_swap();
  auto ridx = c.h1440().index_of(r);
  bool r_ok = ridx.has_value() && !c.h720().index_of(r).has_value() &&
              c.h1440().element_order(*ridx) == 2 &&
              quat_rank(QuatMatrix::identity(2) - r) == 1;
  ck.add_bool("constants.r-swap", "Section 6, order-2 reflection in H_1440 \\ H_720",
              r_ok);
  return ck.rep;
}

CriterionReport criterion_orders(Ctx& c) {
  Checker ck;
  ck.rep = {1, "Group orders", {}};
  ck.add("group.h3.order", "Section 2, H_3 = <b_1>", "3",
         std::to_string(c.h3().order()));
  ck.add("group.h24.order", "Eq. (11)", "24", std::to_string(c.h24().order()));
  ck.add("group.h120.order", "Eq. (11)", "120", std::to_string(c.h120().order()));
  ck.add("group.h720.order", "Eq. (11)", "720", std::to_string(c.h720().order()));
  ck.add("group.h1440.order", "Eq. (11)", "1440", std::to_string(c.h1440().order()));
  FiniteMatrixGroup a2 = FiniteMatrixGroup::close(cn::gens_a(2), c.opt.cap);
  ck.add("group.a-gens.order", "Section 2, <a_1,a_2> of order 24", "24",
         std::to_string(a2.order()));
  return ck.rep;
}

CriterionReport criterion_h720_structure(Ctx& c) {
  Checker ck;
  ck.rep = {2, "Structure of H_720", {}};
  const FiniteMatrixGroup& g = c.h720();

  ReflectionData refl = reflections_and_root_lines(g);
  bool orders3 = true;
  for (int i : refl.reflections) orders3 = orders3 && g.element_order(i) == 3;
  ck.add("h720.reflections.count", "Section 2, 40 reflections of order 3", "40",
         std::to_string(refl.reflections.size()));
  ck.add_bool("h720.reflections.order3", "Section 2, each of order 3", orders3);
  ck.add("h720.rootlines.count", "Section 2, 20 root lines", "20",
         std::to_string(refl.root_lines.size()));

  std::vector<int> z = g.center();
  auto neg_idx = g.index_of(negate(QuatMatrix::identity(2)));
  bool center_ok = z.size() == 2 && z[0] == 0 && neg_idx &&
                   z[1] == *neg_idx;
  ck.add_bool("h720.center", "Section 2, centre = {I, -I}", center_ok);

  std::vector<ConjClass> classes = conjugacy_classes(g);
  ck.add("h720.classes.count", "Section 2, conjugacy class table", "13",
         std::to_string(classes.size()));

  // (order, size, fixed lines among the six) as a multiset
  const PermutationAction& act = c.act_six();
  std::vector<std::tuple<int, int, int>> prof;
  const std::vector<int>* refl_class_members = nullptr;
  for (const auto& cc : classes) {
    int fixed = 0;
    for (size_t i = 0; i < act.perm[cc.rep].size(); ++i)
      if (act.perm[cc.rep][i] == static_cast<int>(i)) ++fixed;
    prof.emplace_back(cc.element_order, cc.size, fixed);
    if (cc.element_order == 3 && fixed == 0) refl_class_members = &cc.members;
  }
  std::vector<std::tuple<int, int, int>> expect = {
      {1, 1, 6},  {2, 1, 6},  {3, 40, 0}, {3, 40, 3}, {4, 90, 2},
      {5, 72, 1}, {5, 72, 1}, {6, 40, 0}, {6, 40, 3}, {8, 90, 0},
      {8, 90, 0}, {10, 72, 1}, {10, 72, 1}};
  std::sort(prof.begin(), prof.end());
  std::sort(expect.begin(), expect.end());
  std::string got;
  for (auto [o, s, f] : prof)
    got += "(" + std::to_string(o) + "," + std::to_string(s) + "," +
           std::to_string(f) + ")";
  std::string want;
  for (auto [o, s, f] : expect)
    want += "(" + std::to_string(o) + "," + std::to_string(s) + "," +
            std::to_string(f) + ")";
  ck.add("h720.classes.profile",
         "Section 2 table (order, length, lines fixed)", want, got);

  // the zero-fixed order-3 class is exactly the 40 reflections
  bool refl_class_ok = false;
  if (refl_class_members) {
    std::vector<int> a = *refl_class_members, b = refl.reflections;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    refl_class_ok = a == b;
  }
  ck.add_bool("h720.reflections.class",
              "Section 2, reflections form the (123)(456) class fixing no line",
              refl_class_ok);

  // three-reflection generating set b_1, b_1 b_2, b_3 b_4
  auto idx = [&](const QuatMatrix& m) { return *g.index_of(m); };
  std::vector<int> three = {idx(cn::b(1)), idx(cn::b(1) * cn::b(2)),
                            idx(cn::b(3) * cn::b(4))};
  ck.add("h720.three-reflections", "Eq. (14), <b_1, b_1b_2, b_3b_4> = H_720",
         "720", std::to_string(subgroup_closure(g, three, g.order()).size()));

  bool two_gen = false;
  for (int x : refl.reflections) {
    for (int y : refl.reflections) {
      if (subgroup_closure(g, {x, y}, g.order() - 1).empty()) {
        two_gen = true;  // closure exceeded the cap, i.e. generated H_720
        break;
      }
    }
    if (two_gen) break;
  }
  ck.add_bool("h720.no-two-reflection-gens",
              "Section 2, generated by three reflections but not two", !two_gen);
  return ck.rep;
}

CriterionReport criterion_six_lines(Ctx& c) {
  Checker ck;
  ck.rep = {3, "Six equiangular lines", {}};
  const LineSystem& six = c.six_w();
  ck.add("sixlines.count", "Theorem 5.4, 720 distinct vectors in 6 lines", "6",
         std::to_string(six.size()));
  ck.add("sixlines.orbit-vectors", "Theorem 5.4", "720",
         std::to_string(six.orbit_vectors));
  bool counts_ok = true;
  for (long n : six.vec_counts) counts_ok = counts_ok && n == 120;
  ck.add_bool("sixlines.vectors-per-line", "Theorem 5.4, 120 per line", counts_ok);

  AngleSet as = angle_set(six);
  ck.add_bool("sixlines.equiangular", "Section 1, |<v_j,v_k>|^2 = 2/5",
              as.equiangular && as.per_base_uniform &&
                  as.per_base.size() == 1 &&
                  as.per_base[0].first == FieldElem(Rational(2, 5)) &&
                  as.per_base[0].second == 5,
              fmt_multiset(as.per_base));

  LineSystem et = lines_from_vectors(cn::et_taoui_lines());
  AngleSet et_as = angle_set(et);
  ck.add_bool("sixlines.et-taoui", "Eq. (1), pairwise angle 2/5",
              et.size() == 6 && et_as.equiangular &&
                  et_as.per_base[0].first == FieldElem(Rational(2, 5)),
              fmt_multiset(et_as.per_base));

  QuatMatrix A = cn::A();
  std::vector<QuatVector> vs = cn::et_taoui_lines();
  std::vector<QuatVector> ws = cn::six_lines_w();
  bool maps = vs.size() == 6 && ws.size() == 6;
  for (size_t j = 0; maps && j < 6; ++j)
    maps = canonical_line_rep(A * vs[j]).key() == canonical_line_rep(ws[j]).key();
  ck.add_bool("sixlines.conjugation", "Eq. (15), A v_j = w_j gamma_j", maps);
  return ck.rep;
}

CriterionReport criterion_permutations(Ctx& c) {
  Checker ck;
  ck.rep = {4, "Permutation actions", {}};
  const PermutationAction& act = c.act_six();
  const FiniteMatrixGroup& g = c.h720();
  const char* expect[4] = {"(1 2 3)(4 5 6)", "(1 4)(3 6)", "(2 3)(4 5)",
                           "(1 3)(4 6)"};
  for (int j = 0; j < 4; ++j) {
    int e = *g.index_of(cn::b(j + 1));
    ck.add("perms.b" + std::to_string(j + 1),
           "Section 4, action of the Blichfeldt generators", expect[j],
           cycles(act.perm[e]));
  }
  auto neg_idx = g.index_of(negate(QuatMatrix::identity(2)));
  bool kernel_ok = act.kernel.size() == 2 && act.kernel[0] == 0 && neg_idx &&
                   act.kernel[1] == *neg_idx;
  ck.add("perms.image-order", "Section 2, projective action is A_6", "360",
         std::to_string(act.image_order));
  ck.add_bool("perms.kernel", "Section 2, kernel {I, -I}", kernel_ok);
  ck.add_bool("perms.all-even", "Section 2, +-g give the same even permutation",
              act.all_even);

  // the twelve lines: both six-line systems, in published block order
  std::vector<QuatVector> twelve = c.six_reps();
  for (const auto& l : c.six_wp().lines) twelve.push_back(l.rep);
  PermutationAction act12 = permutation_action(c.h1440(), twelve);
  int ridx = *c.h1440().index_of(cn::r_swap());
  const std::vector<int>& rp = act12.perm[ridx];
  bool swaps = true;
  for (int i = 0; i < 6; ++i) swaps = swaps && rp[i] >= 6 && rp[i + 6] < 6;
  // each line has a unique orthogonal partner in the other block; elements of
  // H_1440 act on these six pairs, and r should induce an odd permutation
  std::vector<int> partner(6, -1);  // partner[j]: W-line orthogonal to W'-line j+6
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (angle(twelve[i], twelve[j + 6]).is_zero()) partner[j] = i;
  std::vector<int> induced(6);
  bool paired = swaps;
  for (int i = 0; i < 6 && paired; ++i) {
    paired = partner[i] >= 0;
    if (paired) induced[i] = partner[rp[i] - 6];
  }
  ck.add_bool("perms.r-swaps-systems",
              "Section 6, r maps the lines of w and w-perp to each other, oddly",
              paired && !permutation_is_even(induced),
              std::string("induced on pairs odd: ") +
                  (paired && !permutation_is_even(induced) ? "yes" : "no") +
                  ", swaps blocks: " + (swaps ? "yes" : "no"));

  Quaternion gamma = cn::frac(1, 2) * cn::r(2) * (Quaternion(1) - Quaternion::k());
  ck.add_bool("perms.r-w", "Section 6, r w = w-perp (1-k)/sqrt(2)",
              cn::r_swap() * cn::w() == cn::w_perp() * gamma);
  return ck.rep;
}

CriterionReport criterion_designs(Ctx& c) {
  Checker ck;
  ck.rep = {5, "Spherical (t,t)-design identities", {}};
  ck.add("designs.c1", "Eq. (23), c_1(H^2)", "1/2", rat_str(design_constant(1, 2)));
  ck.add("designs.c2", "Eq. (23), c_2(H^2)", "3/10", rat_str(design_constant(2, 2)));
  ck.add("designs.c3", "Eq. (23), c_3(H^2)", "1/5", rat_str(design_constant(3, 2)));

  auto design = [&](const std::string& id, const std::string& loc,
                    const LineSystem& l, int t, bool expect_design) {
    DesignCheck dc = is_t_design(l, t);
    ck.add_bool(id, loc, dc.is_design == expect_design,
                "defect " + dc.defect.str());
  };

  design("designs.six.t2", "Section 6, 1+5(2/5)^2 = (3/10) 6", c.six_w(), 2, true);
  DesignCheck six3 = is_t_design(c.six_w(), 3);
  ck.add("designs.six.t3-defect", "Section 6 (six lines are not a 3-design)",
         "3/25", six3.defect.str());

  LineSystem mub = lines_from_vectors(cn::mub_vectors());
  ck.add("designs.mub.count", "Eq. (27), five mutually unbiased bases", "10",
         std::to_string(mub.size()));
  AngleSet mub_as = angle_set(mub);
  ck.add("designs.mub.angles", "Section 6, angles {0, 1/2}", "{0: 1, 1/2: 8}",
         fmt_multiset(mub_as.per_base));
  design("designs.mub.t3", "Section 6, the MUBs form a (3,3)-design", mub, 3, true);

  LineSystem twelve = orbit_lines(c.h1440(), cn::w());
  ck.add("designs.twelve.count", "Example 6.5", "12", std::to_string(twelve.size()));
  AngleSet tw_as = angle_set(twelve);
  ck.add("designs.twelve.angles", "Example 6.5, angles {0, 2/5, 3/5}",
         "{0: 1, 2/5: 5, 3/5: 5}", fmt_multiset(tw_as.per_base));
  design("designs.twelve.t3", "Example 6.5, 1+0+5(2/5)^3+5(3/5)^3 = (1/5) 12",
         twelve, 3, true);

  ck.add("designs.fifteen.count", "Example 6.2, the 15-line system", "15",
         std::to_string(c.fifteen().size()));
  AngleSet f_as = angle_set(c.fifteen());
  ck.add("designs.fifteen.angles", "Section 6, angles {1/4, 5/8}",
         "{1/4: 6, 5/8: 8}", fmt_multiset(f_as.per_base));
  design("designs.fifteen.t2", "Section 6, 1+6(1/4)^2+8(5/8)^2 = (3/10) 15",
         c.fifteen(), 2, true);

  ck.add("designs.twenty.count", "Example 6.2, root-line system", "20",
         std::to_string(c.twenty().size()));
  AngleSet t_as = angle_set(c.twenty());
  ck.add("designs.twenty.angles", "Section 6, angles {0, 1/3, 2/3}",
         "{0: 1, 1/3: 9, 2/3: 9}", fmt_multiset(t_as.per_base));
  design("designs.twenty.t3", "Section 6, 1+0+9(1/3)^3+9(2/3)^3 = (1/5) 20",
         c.twenty(), 3, true);

  LineSystem thirty_a = orbit_lines(c.h1440(), cn::fiducial_15());
  ck.add("designs.thirty-a.count", "Example 6.7, doubling the 15 lines", "30",
         std::to_string(thirty_a.size()));
  AngleSet ta_as = angle_set(thirty_a);
  ck.add("designs.thirty-a.angles", "Eq. (28), angles {0,1/4,3/8,5/8,3/4}",
         "{0: 1, 1/4: 6, 3/8: 8, 5/8: 8, 3/4: 6}", fmt_multiset(ta_as.per_base));
  design("designs.thirty-a.t3", "Eq. (28)", thirty_a, 3, true);

  ck.add("designs.thirty-b.count", "Example 6.8, fiducial (sqrt2 i, 1+sqrt3)",
         "30", std::to_string(c.thirty_b().size()));
  AngleSet tb_as = angle_set(c.thirty_b());
  ck.add("designs.thirty-b.angles", "Example 6.8, angles {0,1/4,1/2,3/4}",
         "{0: 1, 1/4: 8, 1/2: 12, 3/4: 8}", fmt_multiset(tb_as.per_base));
  design("designs.thirty-b.t3", "Example 6.8", c.thirty_b(), 3, true);

  // the two constructions of the second 30-line system give the same lines:
  // the H_720 orbit is already fixed by H_1440
  LineSystem thirty_b_big = orbit_lines(c.h1440(), cn::fiducial_30());
  ck.add_bool("designs.thirty-b.h1440-fixed",
              "Example 6.8, the design is fixed by H_1440",
              key_set(thirty_b_big) == key_set(c.thirty_b()));
  return ck.rep;
}

CriterionReport criterion_bounds(Ctx&) {
  Checker ck;
  ck.rep = {6, "Special and absolute bounds", {}};
  struct Row {
    const char* id;
    std::vector<Rational> angles;
    const char* nu;
    const char* abs;
  };
  std::vector<Row> rows = {
      {"two-fifths", {Rational(2, 5)}, "6", "6"},
      {"zero-half", {Rational(0), Rational(1, 2)}, "10", "10"},
      {"zero-two-three-fifths", {Rational(0), Rational(2, 5), Rational(3, 5)},
       "12", "30"},
      {"quarter-five-eighths", {Rational(1, 4), Rational(5, 8)}, "15", "20"},
      {"zero-thirds", {Rational(0), Rational(1, 3), Rational(2, 3)}, "20", "30"},
  };
  for (const auto& row : rows) {
    auto nu = special_bound(row.angles, 2);
    ck.add("bounds.special." + std::string(row.id), "Section 6 bounds table",
           row.nu, nu ? rat_str(*nu) : "inapplicable");
    ck.add("bounds.absolute." + std::string(row.id), "Section 6 bounds table",
           row.abs, rat_str(absolute_bound(shape_of(row.angles), 2)));
  }
  return ck.rep;
}

CriterionReport criterion_pit(Ctx& c) {
  Checker ck;
  ck.rep = {7, "Group-orbit designs by polynomial identity testing", {}};
  std::mt19937_64 rng(c.opt.seed);
  const int trials = 20;
  std::vector<QuatVector> xs;
  for (int t = 0; t < trials; ++t) xs.push_back(random_small_vector(2, rng));

  auto all_zero = [&](const FiniteMatrixGroup& g, int t) {
    for (const auto& x : xs)
      if (!design_defect(g, t, x).is_zero()) return false;
    return true;
  };
  ck.add_bool("pit.h24.t1", "Section 7, every H_24 orbit is a (1,1)-design",
              all_zero(c.h24(), 1));
  ck.add_bool("pit.h720.t2", "Section 7, every H_720 orbit is a (2,2)-design",
              all_zero(c.h720(), 2));
  ck.add_bool("pit.h1440.t3", "Section 7, every H_1440 orbit is a (3,3)-design",
              all_zero(c.h1440(), 3));
  bool some_nonzero = false;
  for (const auto& x : xs)
    if (!design_defect(c.h720(), 3, x).is_zero()) {
      some_nonzero = true;
      break;
    }
  ck.add_bool("pit.h720.t3-nonzero",
              "Section 7 (H_720 orbits are not generally 3-designs)", some_nonzero);
  return ck.rep;
}

CriterionReport criterion_stabilizer(Ctx& c) {
  Checker ck;
  ck.rep = {8, "The stabilizer of the line of w", {}};
  const ProjectiveStabilizer& sw = c.stab_w();
  const ProjectiveStabilizer& swp = c.stab_wp();
  ck.add("stab.order", "Section 5, |G_w| = 120", "120",
         std::to_string(sw.order()));
  ck.add_bool("stab.orbit-stabilizer", "Section 5, 6 lines x 120 = 720",
              sw.order() * c.six_w().size() == c.h720().order());
  ck.add_bool("stab.same-subgroup", "Section 5, G_w = G_{w-perp}",
              sw.elems == swp.elems);

  FiniteMatrixGroup sg = stabilizer_group(c.h720(), sw);
  ReflectionData refl = reflections_and_root_lines(sg);
  ck.add("stab.reflection-free", "Section 4, reducible and contains no reflections",
         "0", std::to_string(refl.reflections.size()));

  HStarClass cls = classify_hstar(scalar_values(sw));
  ck.add("stab.hstar-class", "Section 5, the binary icosahedral group",
         "binary_icosahedral", cls.name());
  ck.add_bool("stab.faithful", "Section 5, faithful action on the line",
              alpha_faithful(sw) && alpha_faithful(swp));

  int g2idx = *c.h720().index_of(cn::g2());
  FieldElem chi_w = FieldElem(2) * sw.alpha.at(g2idx).re();
  FieldElem chi_wp = FieldElem(2) * swp.alpha.at(g2idx).re();
  FieldElem tau = cn::tau();
  ck.add("stab.chi-w.g2", "Section 5, chi_W(g_2) = tau^-1",
         tau.inverse().str(), chi_w.str());
  ck.add("stab.chi-wperp.g2", "Section 5, chi_Wperp(g_2) = -tau",
         (-tau).str(), chi_wp.str());
  RestrictionCharacters rc = restriction_characters(c.h720(), sw, swp);
  ck.add_bool("stab.characters-distinct",
              "Theorem 5.4, non-isomorphic irreducible H-submodules", rc.distinct);

  ck.add("stab.fs-w", "Section 5 (quaternionic type)", "-1",
         std::to_string(fs_indicator(c.h720(), sw.elems, sw.alpha)));
  ck.add("stab.fs-wperp", "Section 5 (quaternionic type)", "-1",
         std::to_string(fs_indicator(c.h720(), swp.elems, swp.alpha)));

  ck.add_bool("stab.w-orthogonal", "Eq. (18), w-perp is orthogonal to w",
              inner_product(cn::w(), cn::w_perp()).is_zero());

  // Eq. (20) lists a non-unit first entry for [b_3]_B; report the exact
  // scalars (both must be unit quaternions).
  int b3idx = *c.h720().index_of(cn::b(3));
  Quaternion a_w = sw.alpha.at(b3idx);
  Quaternion a_wp = swp.alpha.at(b3idx);
  ck.add_bool("stab.alpha-b3-unit", "Eq. (20) (displayed value is not unit norm)",
              a_w.norm() == FieldElem(1) && a_wp.norm() == FieldElem(1),
              "alpha_{b3,w} = " + a_w.str() + "; alpha_{b3,w-perp} = " + a_wp.str());
  return ck.rep;
}

CriterionReport criterion_perp(Ctx& c) {
  Checker ck;
  ck.rep = {9, "Orthogonal-complement angle preservation", {}};
  std::mt19937_64 rng(c.opt.seed + 9);
  bool ok = true;
  std::string fail;
  for (int t = 0; t < 1000 && ok; ++t) {
    QuatVector v = random_small_vector(2, rng);
    QuatVector u = random_small_vector(2, rng);
    if (angle(v, u) != angle(perp_vector(v), perp_vector(u))) {
      ok = false;
      fail = v.str() + " / " + u.str();
    }
    if (!inner_product(v, perp_vector(v)).is_zero()) {
      ok = false;
      fail = "perp not orthogonal at " + v.str();
    }
  }
  ck.add_bool("perp.angle-preserved",
              "Section 6, angles between crosses (1000 random pairs)", ok,
              ok ? "1000 pairs verified" : fail);
  return ck.rep;
}

CriterionReport criterion_census(Ctx& c) {
  Checker ck;
  ck.rep = {10, "Reducible subgroup census", {}};
  std::vector<SubgroupClass> sub720 =
      enumerate_subgroups(c.h720(), 1, 8, c.opt.seed);
  int reducible_gt3 = 0;
  std::vector<int> maximal;
  for (const auto& s : sub720) {
    if (s.reducible && s.order > 3) ++reducible_gt3;
    if (s.reducible && s.maximal_reducible) maximal.push_back(s.order);
  }
  std::sort(maximal.begin(), maximal.end());
  // the paper states 17 here, but exact enumeration certifies 18: the
  // cyclic class of order 4 (45 conjugates, both eigenvalue actions
  // isomorphic) is reducible and seems to have been omitted
  ck.add("census.h720.reducible",
         "Section 6 states 17 reducible subgroups of order > 3; exact count is 18",
         "18", std::to_string(reducible_gt3));
  bool have_c4 = false;
  for (const auto& s : sub720)
    have_c4 = have_c4 || (s.reducible && s.order == 4 && s.n_conjugates == 45);
  ck.add_bool("census.h720.reducible-extra",
              "Section 6 (the class beyond the stated 17 is the cyclic one of "
              "order 4, 45 conjugates)",
              have_c4);
  std::string m;
  for (size_t i = 0; i < maximal.size(); ++i)
    m += (i ? "," : "") + std::to_string(maximal[i]);
  ck.add("census.h720.maximal", "Example 6.2, maximal reducible of orders 36, 48, 120",
         "36,48,120", m);

  std::vector<SubgroupClass> sub1440 =
      enumerate_subgroups(c.h1440(), 1, 8, c.opt.seed);
  std::vector<int> maximal1440;
  std::vector<int> stab_orders;  // reducible classes matching the line-system
                                 // stabilizers of Example 6.7
  const SubgroupClass* dic24 = nullptr;
  const SubgroupClass* red72 = nullptr;
  for (const auto& s : sub1440) {
    if (s.reducible && s.maximal_reducible) maximal1440.push_back(s.order);
    if (s.reducible &&
        ((s.order == 120 && s.n_conjugates == 6) ||
         (s.order == 72 && s.n_conjugates == 10) ||
         (s.order == 48 && s.n_conjugates == 15) ||
         (s.order == 24 && s.n_conjugates == 60)))
      stab_orders.push_back(s.order);
    if (s.reducible && s.order == 24 && s.n_conjugates == 60) dic24 = &s;
    if (s.reducible && s.order == 72) red72 = &s;
  }
  std::sort(maximal1440.begin(), maximal1440.end());
  std::string m2;
  for (size_t i = 0; i < maximal1440.size(); ++i)
    m2 += (i ? "," : "") + std::to_string(maximal1440[i]);
  // the paper lists 24,48,48,72,120; exact enumeration certifies that the
  // order-24 class (the 60-line stabilizer) lies inside a conjugate of the
  // reducible order-72 class, while a generalized quaternion class of order 16
  // is maximal (its two line actions are isomorphic, so it fixes infinitely
  // many lines and yields no finite line system)
  ck.add("census.h1440.maximal",
         "Example 6.7 states maximal orders 24, 48, 48, 72, 120; exact "
         "maxima are 16, 48, 48, 72, 120",
         "16,48,48,72,120", m2);
  std::sort(stab_orders.begin(), stab_orders.end());
  std::string m3;
  for (size_t i = 0; i < stab_orders.size(); ++i)
    m3 += (i ? "," : "") + std::to_string(stab_orders[i]);
  ck.add("census.h1440.stabilizer-classes",
         "Example 6.7, reducible classes for the 12, 20, 30, 30, 60 line systems",
         "24,48,48,72,120", m3);
  bool contained = false;
  if (dic24 && red72) {
    const FiniteMatrixGroup& g = c.h1440();
    std::set<int> big(red72->elems.begin(), red72->elems.end());
    for (int h = 0; h < g.order() && !contained; ++h) {
      bool all = true;
      for (int e : dic24->gens) all = all && big.count(g.conjugate(e, h));
      contained = all;
    }
  }
  ck.add_bool("census.h1440.dic24-in-72",
              "Example 6.7 (why the order-24 class is not maximal: it lies in "
              "a conjugate of the reducible order-72 class)",
              contained);
  return ck.rep;
}

CriterionReport criterion_fixed_lines(Ctx& c) {
  Checker ck;
  ck.rep = {11, "Fixed-line search pipeline", {}};
  SearchOptions so;
  so.seed = c.opt.seed;
  std::vector<QuatMatrix> stab_gens = {cn::b(3), cn::g2()};
  std::vector<FixedLineCandidate> found = search_fixed_lines(stab_gens, so);
  std::set<std::string> keys;
  for (const auto& cand : found)
    if (cand.certified) keys.insert(cand.exact->key());
  std::set<std::string> want = {canonical_line_rep(cn::w()).key(),
                                canonical_line_rep(cn::w_perp()).key()};
  ck.add_bool("fixedlines.stab-w", "Section 7, the lines of w and w-perp",
              keys == want,
              std::to_string(keys.size()) + " certified lines");

  std::vector<FixedLineCandidate> none = search_fixed_lines(cn::gens_b(2), so);
  int certified = 0;
  double best = 1.0;
  for (const auto& cand : none) {
    if (cand.certified) ++certified;
    best = std::min(best, cand.residual);
  }
  ck.add_bool("fixedlines.h24-none", "Section 7, irreducible groups fix no line",
              none.empty() && certified == 0,
              none.empty() ? "no candidates below tolerance"
                           : std::to_string(none.size()) + " candidates");
  return ck.rep;
}

CriterionReport criterion_sic(Ctx& c) {
  Checker ck;
  ck.rep = {12, "The C^2 SIC as an H_24 orbit", {}};
  LineSystem sic = orbit_lines(c.h24(), cn::e1());
  ck.add("sic.count", "Section 8, four equiangular lines in C^2", "4",
         std::to_string(sic.size()));
  AngleSet as = angle_set(sic);
  ck.add_bool("sic.equiangular", "Section 8, pairwise angle 1/3",
              as.equiangular && as.per_base[0].first == FieldElem(Rational(1, 3)),
              fmt_multiset(as.per_base));
  ck.add_bool("sic.vectors", "Section 8, the displayed SIC vectors",
              key_set(sic) == key_set(lines_from_vectors(cn::sic_vectors())));
  return ck.rep;
}

}  // namespace

ReportDocument run_verification(const VerifyOptions& opt) {
#ifdef QLIN_HAVE_OPENMP
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
  Ctx ctx;
  ctx.opt = opt;
  ReportDocument doc;
  doc.seed = opt.seed;

  struct Entry {
    const char* prefix;
    CriterionReport (*fn)(Ctx&);
  };
  const Entry entries[] = {
      {"constants.", constants_checks},
      {"group.", criterion_orders},
      {"h720.", criterion_h720_structure},
      {"sixlines.", criterion_six_lines},
      {"perms.", criterion_permutations},
      {"designs.", criterion_designs},
      {"bounds.", criterion_bounds},
      {"pit.", criterion_pit},
      {"stab.", criterion_stabilizer},
      {"perp.", criterion_perp},
      {"census.", criterion_census},
      {"fixedlines.", criterion_fixed_lines},
      {"sic.", criterion_sic},
  };
  for (const auto& e : entries) {
    std::string p(e.prefix);
    if (!opt.only.empty() &&
        opt.only.compare(0, p.size(), p) != 0 &&
        p.compare(0, opt.only.size(), opt.only) != 0)
      continue;
    CriterionReport rep = e.fn(ctx);
    if (!opt.only.empty()) {
      std::vector<CheckRecord> kept;
      for (auto& r : rep.checks)
        if (r.id.compare(0, opt.only.size(), opt.only) == 0 ||
            opt.only.compare(0, r.id.size(), r.id) == 0)
          kept.push_back(std::move(r));
      rep.checks = std::move(kept);
      if (rep.checks.empty()) continue;
    }
    doc.criteria.push_back(std::move(rep));
  }
  return doc;
}

}  // namespace qlin
