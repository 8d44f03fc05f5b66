#include "ifam/composers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ifam/properties.hpp"
#include "ifam/transversal.hpp"

namespace ifam {

namespace {

std::string label_set_text(const std::vector<Label>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

// Closedness gate shared by the attach-style composers. Property-check
// errors (non-uniform, non-intersecting, full cover number) all mean the
// family cannot serve as the closed base, so they surface as NotCif.
PropertyVerdict gate_cif(const SetFamily& f, const char* role) {
  PropertyVerdict v;
  try {
    v = is_cif(f);
  } catch (const Error& e) {
    if (e.code() == Err::CharacterizationMismatch) throw;
    throw Error(Err::NotCif, std::string(role) + ": " + e.what());
  }
  if (!v.holds) {
    std::string w = v.witness.empty() ? "" : ", witness " + label_set_text(v.witness.front());
    throw Error(Err::NotCif, std::string(role) + " is not closed" + w);
  }
  return v;
}

void gate_mif(const SetFamily& a, const std::string& role) {
  PropertyVerdict v;
  try {
    v = is_mif(a);
  } catch (const Error& e) {
    throw Error(Err::NotMif, role + ": " + e.what());
  }
  if (!v.holds) throw Error(Err::NotMif, role + " is not maximal (" + v.detail + ")");
}

// Prefix `f`'s labels when they collide with any family in `others`;
// a second collision after prefixing is refused rather than patched again.
SetFamily make_fresh(const SetFamily& f, const std::string& prefix,
                     const std::vector<const SetFamily*>& others) {
  bool collides = false;
  for (const SetFamily* g : others)
    if (universes_overlap(f, *g)) { collides = true; break; }
  if (!collides) return f;
  SetFamily renamed = prefix_labels(f, prefix);
  for (const SetFamily* g : others)
    if (universes_overlap(renamed, *g))
      throw Error(Err::InvalidParams,
                  "cannot make universes disjoint: prefix \"" + prefix + "\" still collides");
  return renamed;
}

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > std::numeric_limits<unsigned long long>::max() / a)
    throw Error(Err::InvalidParams, "bound arithmetic overflows 64 bits");
  return a * b;
}

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
  if (b > std::numeric_limits<unsigned long long>::max() - a)
    throw Error(Err::InvalidParams, "bound arithmetic overflows 64 bits");
  return a + b;
}

unsigned long long checked_pow(unsigned long long base, std::size_t exp) {
  unsigned long long out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// C(2t, t) / 2 with saturation; the cap only ever shrinks the allowed class
// count, so saturating keeps large t permissive rather than wrong.
unsigned long long half_central_binomial(std::size_t t) {
  unsigned long long num = 1;
  for (std::size_t i = 1; i <= t; ++i) {
    if (num > std::numeric_limits<unsigned long long>::max() / (t + i))
      return std::numeric_limits<unsigned long long>::max();
    num = num * (t + i) / i; // exact at every step: C(t+i, i)
  }
  return num / 2;
}

void validate_partition(const std::vector<std::vector<std::size_t>>& classes,
                        std::size_t m) {
  if (classes.empty()) throw Error(Err::BadPartition, "no classes given");
  std::vector<bool> seen(m, false);
  std::size_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty())
      throw Error(Err::BadPartition, "class " + std::to_string(i) + " is empty");
    for (std::size_t idx : classes[i]) {
      if (idx >= m)
        throw Error(Err::BadPartition, "index " + std::to_string(idx) +
                                           " outside the " + std::to_string(m) +
                                           " minimum blocking sets");
      if (seen[idx])
        throw Error(Err::BadPartition,
                    "index " + std::to_string(idx) + " appears in two classes");
      seen[idx] = true;
      ++total;
    }
  }
  if (total != m)
    throw Error(Err::BadPartition, "classes cover " + std::to_string(total) + " of " +
                                       std::to_string(m) + " minimum blocking sets");
}

void verify_maximal(CompositionReport& rep) {
  PropertyVerdict v = is_mif(rep.result);
  if (!v.holds)
    throw Error(Err::VerificationFailed, "recomputation refutes the claim: " + v.detail);
  rep.verified = true;
  rep.checklist.emplace_back("result maximal by exhaustive recomputation", true);
}

} // namespace

CompositionReport embed(const SetFamily& cif, const SetFamily& mif, bool verify) {
  CompositionReport rep;
  gate_cif(cif, "base family");
  rep.checklist.emplace_back("base family closed", true);
  const std::size_t k = *cif.uniform_k();
  TransversalReport ft = transversals(cif);
  const std::size_t t = ft.tau;

  gate_mif(mif, "attached family");
  rep.checklist.emplace_back("attached family maximal", true);
  if (*mif.uniform_k() != k - t)
    throw Error(Err::SizeMismatch, "attached block size " + std::to_string(*mif.uniform_k()) +
                                       " != k - tau = " + std::to_string(k - t));
  rep.checklist.emplace_back("attached block size = k - tau", true);

  SetFamily a = make_fresh(mif, "A:", {&cif});
  rep.checklist.emplace_back("universes disjoint", true);

  rep.result = union_families(cif, join(a, ft.transversals));
  rep.checklist.emplace_back("block count = |F| + |A|*|F^T|",
                             rep.result.size() == cif.size() + a.size() * ft.transversals.size());
  rep.claimed_uk = k;
  rep.claimed_tau = k;
  rep.claim = "MIF(" + std::to_string(k) + ")";
  if (verify) verify_maximal(rep);
  return rep;
}

CompositionReport embed_partitioned(const SetFamily& cif,
                                    const std::vector<std::vector<std::size_t>>& classes,
                                    const std::vector<SetFamily>& mifs, bool verify) {
  CompositionReport rep;
  gate_cif(cif, "base family");
  rep.checklist.emplace_back("base family closed", true);
  const std::size_t k = *cif.uniform_k();
  TransversalReport ft = transversals(cif);
  const std::size_t t = ft.tau;
  const std::size_t m = ft.transversals.size();

  const std::size_t n = classes.size();
  unsigned long long cap = half_central_binomial(t);
  if (n > cap)
    throw Error(Err::TooManyClasses, std::to_string(n) + " classes exceed the cap " +
                                         std::to_string(cap) + " for tau = " +
                                         std::to_string(t));
  rep.checklist.emplace_back("class count within cap", true);
  validate_partition(classes, m);
  rep.checklist.emplace_back("classes partition the minimum blocking sets", true);

  // Every member of a class must meet every minimum blocking set outside it.
  std::vector<std::size_t> owner(m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t idx : classes[i]) owner[idx] = i;
  const auto& tb = ft.transversals.blocks();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (owner[x] != owner[y] && !tb[x].intersects(tb[y]))
        throw Error(Err::ConditionCFailed,
                    "minimum blocking set " + label_set_text(ft.transversals.block_labels(x)) +
                        " misses " + label_set_text(ft.transversals.block_labels(y)) +
                        " outside its class");
  rep.checklist.emplace_back("each class member meets everything outside its class", true);

  if (mifs.size() != n)
    throw Error(Err::InvalidParams, "need one attached family per class: " +
                                        std::to_string(mifs.size()) + " given, " +
                                        std::to_string(n) + " classes");
  std::vector<SetFamily> attached;
  attached.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    gate_mif(mifs[i], "attached family " + std::to_string(i));
    if (*mifs[i].uniform_k() != k - t)
      throw Error(Err::SizeMismatch, "attached family " + std::to_string(i) + " block size " +
                                         std::to_string(*mifs[i].uniform_k()) +
                                         " != k - tau = " + std::to_string(k - t));
    std::vector<const SetFamily*> others{&cif};
    for (const SetFamily& prev : attached) others.push_back(&prev);
    for (std::size_t j = i + 1; j < n; ++j) others.push_back(&mifs[j]);
    attached.push_back(make_fresh(mifs[i], "A" + std::to_string(i) + ":", others));
  }
  rep.checklist.emplace_back("attached families maximal, sized k - tau, on fresh universes",
                             true);

  rep.result = cif;
  for (std::size_t i = 0; i < n; ++i)
    rep.result = union_families(rep.result, join(attached[i], subfamily(ft.transversals, classes[i])));
  std::size_t expected = cif.size();
  for (std::size_t i = 0; i < n; ++i) expected += attached[i].size() * classes[i].size();
  rep.checklist.emplace_back("block count = |F| + sum |A_i|*|C_i|",
                             rep.result.size() == expected);
  rep.claimed_uk = k;
  rep.claimed_tau = k;
  rep.claim = "MIF(" + std::to_string(k) + ")";
  if (verify) verify_maximal(rep);
  return rep;
}

CompositionReport embed_affine(const SetFamily& cif,
                               const std::vector<std::vector<std::size_t>>& classes,
                               const AffinePlane& plane, bool verify) {
  CompositionReport rep;
  gate_cif(cif, "base family");
  rep.checklist.emplace_back("base family closed", true);
  const std::size_t k = *cif.uniform_k();
  TransversalReport ft = transversals(cif);
  const std::size_t t = ft.tau;
  const std::size_t m = ft.transversals.size();
  const std::size_t n = plane.order;

  if (t != k - n)
    throw Error(Err::TauMismatch, "plane order " + std::to_string(n) + " requires tau = k - n = " +
                                      std::to_string(k - n) + ", found " + std::to_string(t));
  rep.checklist.emplace_back("plane order = k - tau", true);
  if (classes.size() != n + 1)
    throw Error(Err::BadPartition, "need exactly n + 1 = " + std::to_string(n + 1) +
                                       " classes, got " + std::to_string(classes.size()));
  validate_partition(classes, m);
  rep.checklist.emplace_back("classes partition the minimum blocking sets", true);

  const auto& tb = ft.transversals.blocks();
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t a = 0; a < classes[i].size(); ++a)
      for (std::size_t b = a + 1; b < classes[i].size(); ++b)
        if (!tb[classes[i][a]].intersects(tb[classes[i][b]]))
          throw Error(Err::ConditionAFailed,
                      "class " + std::to_string(i) + " contains the disjoint pair " +
                          label_set_text(ft.transversals.block_labels(classes[i][a])) + " " +
                          label_set_text(ft.transversals.block_labels(classes[i][b])));
  rep.checklist.emplace_back("each class is intersecting", true);

  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j) continue;
      for (std::size_t x : classes[i]) {
        bool partner = false;
        for (std::size_t y : classes[j])
          if (!tb[x].intersects(tb[y])) { partner = true; break; }
        if (!partner)
          throw Error(Err::ConditionBFailed,
                      label_set_text(ft.transversals.block_labels(x)) + " in class " +
                          std::to_string(i) + " has no disjoint partner in class " +
                          std::to_string(j));
      }
    }
  rep.checklist.emplace_back("every member has a disjoint partner in every other class", true);

  SetFamily lines = make_fresh(plane.lines, "P:", {&cif});
  rep.checklist.emplace_back("plane points fresh", true);

  rep.result = cif;
  for (std::size_t i = 0; i <= n; ++i)
    rep.result = union_families(
        rep.result, join(subfamily(lines, plane.classes[i]), subfamily(ft.transversals, classes[i])));
  rep.checklist.emplace_back("block count = |F| + n*|F^T|",
                             rep.result.size() == cif.size() + n * m);
  rep.claimed_uk = k;
  rep.claimed_tau = k;
  rep.claim = "MIF(" + std::to_string(k) + ")";
  if (verify) verify_maximal(rep);
  return rep;
}

CompositionReport product(const SetFamily& mif, const std::vector<SetFamily>& factors,
                          bool require_cif, bool verify) {
  CompositionReport rep;
  gate_mif(mif, "pattern family");
  rep.checklist.emplace_back("pattern family maximal", true);
  const std::size_t l = *mif.uniform_k();
  if (factors.size() != mif.point_count())
    throw Error(Err::InvalidParams, "need one factor per pattern point: " +
                                        std::to_string(factors.size()) + " given, " +
                                        std::to_string(mif.point_count()) + " points");

  std::size_t k = 0, t = 0;
  std::vector<TransversalReport> duals;
  duals.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto uk = factors[i].uniform_k();
    if (!uk)
      throw Error(Err::NonUniformFactors, "factor " + std::to_string(i) + " is not uniform");
    duals.push_back(transversals(factors[i]));
    if (i == 0) {
      k = *uk;
      t = duals[0].tau;
    } else if (*uk != k || duals[i].tau != t) {
      throw Error(Err::NonUniformFactors,
                  "factor " + std::to_string(i) + " has (k, tau) = (" + std::to_string(*uk) +
                      ", " + std::to_string(duals[i].tau) + "), expected (" +
                      std::to_string(k) + ", " + std::to_string(t) + ")");
    }
  }
  rep.checklist.emplace_back("factors uniform with common block size and cover number", true);

  // Fresh pairwise-disjoint universes.
  bool overlap = false;
  for (std::size_t i = 0; i < factors.size() && !overlap; ++i)
    for (std::size_t j = i + 1; j < factors.size() && !overlap; ++j)
      if (universes_overlap(factors[i], factors[j])) overlap = true;
  std::vector<SetFamily> fresh;
  std::vector<SetFamily> fresh_duals;
  fresh.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (overlap) {
      std::string prefix = "F" + std::to_string(i) + ":";
      fresh.push_back(prefix_labels(factors[i], prefix));
      fresh_duals.push_back(prefix_labels(duals[i].transversals, prefix));
    } else {
      fresh.push_back(factors[i]);
      fresh_duals.push_back(duals[i].transversals);
    }
  }
  for (std::size_t i = 0; i < fresh.size(); ++i)
    for (std::size_t j = i + 1; j < fresh.size(); ++j)
      if (universes_overlap(fresh[i], fresh[j]))
        throw Error(Err::InvalidParams, "cannot make factor universes disjoint");
  rep.checklist.emplace_back("factor universes pairwise disjoint", true);

  // Closedness of every factor upgrades the claim from part (a) to part (b).
  bool closed_factors = true;
  std::string closed_note;
  for (std::size_t i = 0; i < factors.size() && closed_factors; ++i) {
    PropertyVerdict v;
    try {
      v = is_cif(factors[i]);
    } catch (const Error& e) {
      if (e.code() == Err::CharacterizationMismatch) throw;
      closed_factors = false;
      closed_note = "factor " + std::to_string(i) + ": " + e.what();
      break;
    }
    if (!v.holds) {
      closed_factors = false;
      closed_note = "factor " + std::to_string(i) + " is not closed";
      break;
    }
    std::size_t dual_tau = tau(duals[i].transversals);
    if (dual_tau != k) {
      if (require_cif)
        throw Error(Err::DualTauMismatch, "factor " + std::to_string(i) +
                                              " has dual cover number " + std::to_string(dual_tau) +
                                              ", need " + std::to_string(k));
      closed_factors = false;
      closed_note = "factor " + std::to_string(i) + " dual cover number " +
                    std::to_string(dual_tau) + " != " + std::to_string(k);
    }
  }
  if (require_cif && !closed_factors) throw Error(Err::NotCif, closed_note);
  rep.checklist.emplace_back("factors closed with maximal duals", closed_factors);

  // Assemble: one factor block per pattern-block point, all combinations.
  auto assemble = [&](const std::vector<SetFamily>& parts) {
    std::vector<std::vector<Label>> blocks;
    for (std::size_t bi = 0; bi < mif.size(); ++bi) {
      std::vector<std::size_t> pts = mif.block_members(bi);
      std::vector<std::size_t> pick(pts.size(), 0);
      while (true) {
        std::vector<Label> block;
        for (std::size_t pi = 0; pi < pts.size(); ++pi) {
          auto part = parts[pts[pi]].block_labels(pick[pi]);
          block.insert(block.end(), part.begin(), part.end());
        }
        blocks.push_back(std::move(block));
        std::size_t i = 0;
        for (; i < pts.size(); ++i) {
          if (++pick[i] < parts[pts[i]].size()) break;
          pick[i] = 0;
        }
        if (i == pts.size()) break;
      }
    }
    return family_from_label_blocks(blocks);
  };
  rep.result = assemble(fresh);
  SetFamily dual_claim = assemble(fresh_duals);

  rep.claimed_uk = k * l;
  rep.claimed_tau = t * l;
  rep.claim = closed_factors
                  ? "CIF(" + std::to_string(k * l) + "," + std::to_string(t * l) + ")"
                  : "uniform(" + std::to_string(k * l) + "," + std::to_string(t * l) + ")";

  if (verify) {
    if (rep.result.uniform_k() != std::optional<std::size_t>(k * l))
      throw Error(Err::VerificationFailed, "result is not uniform of the claimed size");
    TransversalReport rt = transversals(rep.result);
    if (rt.tau != t * l)
      throw Error(Err::VerificationFailed, "recomputed cover number " + std::to_string(rt.tau) +
                                               " != claimed " + std::to_string(t * l));
    if (!(rt.transversals == dual_claim))
      throw Error(Err::VerificationFailed,
                  "recomputed minimum blocking sets differ from the composed ones");
    rep.checklist.emplace_back("cover number and minimum blocking sets recomputed", true);
    if (closed_factors) {
      PropertyVerdict v = is_cif(rep.result);
      if (!v.holds) throw Error(Err::VerificationFailed, "result is not closed");
      rep.checklist.emplace_back("result closed by exhaustive sweep", true);
    }
    rep.verified = true;
  }
  return rep;
}

CompositionReport extend(const SetFamily& f, const SetFamily& g, bool verify) {
  CompositionReport rep;
  auto ukf = f.uniform_k();
  auto ukg = g.uniform_k();
  if (!ukf || !ukg) throw Error(Err::NotUniform, "both inputs must be uniform");
  TransversalReport ftr = transversals(f);
  TransversalReport gtr = transversals(g);
  const std::size_t k = *ukf, tf = ftr.tau, tg = gtr.tau;
  if (*ukg != k + tg)
    throw Error(Err::ShapeMismatch, "outer block size " + std::to_string(*ukg) +
                                        " != inner size + outer cover number = " +
                                        std::to_string(k + tg));
  rep.checklist.emplace_back("outer block size = inner size + outer cover number", true);

  std::size_t gdual_tau = tau(gtr.transversals);
  if (gdual_tau <= tf + tg)
    throw Error(Err::DualTauTooSmall, "outer dual cover number " + std::to_string(gdual_tau) +
                                          " must exceed " + std::to_string(tf + tg));
  rep.checklist.emplace_back("outer dual cover number exceeds the claimed one", true);

  SetFamily f2 = make_fresh(f, "F:", {&g});
  TransversalReport f2tr = universes_overlap(f, g) ? transversals(f2) : ftr;
  rep.checklist.emplace_back("universes disjoint", true);

  rep.result = union_families(g, join(f2, gtr.transversals));
  rep.checklist.emplace_back("block count = |G| + |F|*|G^T|",
                             rep.result.size() == g.size() + f2.size() * gtr.transversals.size());
  SetFamily dual_claim = join(f2tr.transversals, gtr.transversals);

  bool closed_inputs = true;
  for (const SetFamily* fam : {&f, &g}) {
    PropertyVerdict v;
    try {
      v = is_cif(*fam);
    } catch (const Error& e) {
      if (e.code() == Err::CharacterizationMismatch) throw;
      closed_inputs = false;
      break;
    }
    if (!v.holds) { closed_inputs = false; break; }
  }
  rep.checklist.emplace_back("both inputs closed", closed_inputs);

  rep.claimed_uk = k + tg;
  rep.claimed_tau = tf + tg;
  rep.claim = closed_inputs
                  ? "CIF(" + std::to_string(k + tg) + "," + std::to_string(tf + tg) + ")"
                  : "uniform(" + std::to_string(k + tg) + "," + std::to_string(tf + tg) + ")";

  if (verify) {
    TransversalReport rt = transversals(rep.result);
    if (rt.tau != tf + tg)
      throw Error(Err::VerificationFailed, "recomputed cover number " + std::to_string(rt.tau) +
                                               " != claimed " + std::to_string(tf + tg));
    if (!(rt.transversals == dual_claim))
      throw Error(Err::VerificationFailed,
                  "recomputed minimum blocking sets differ from the composed ones");
    rep.checklist.emplace_back("cover number and minimum blocking sets recomputed", true);
    if (closed_inputs) {
      PropertyVerdict v = is_cif(rep.result);
      if (!v.holds) throw Error(Err::VerificationFailed, "result is not closed");
      rep.checklist.emplace_back("result closed by exhaustive sweep", true);
    }
    rep.verified = true;
  }
  return rep;
}

std::pair<SetFamily, SetFamily> decompose_at(const SetFamily& x, const Label& alpha) {
  gate_mif(x, "family to split");
  if (!x.index_of(alpha))
    throw Error(Err::IndexOutOfRange, "point \"" + alpha + "\" not in the universe");
  const std::size_t p = *x.index_of(alpha);

  std::vector<std::vector<Label>> without, stripped;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.blocks()[i].test(p)) {
      without.push_back(x.block_labels(i));
    } else {
      std::vector<Label> b;
      for (const Label& l : x.block_labels(i))
        if (l != alpha) b.push_back(l);
      stripped.push_back(std::move(b));
    }
  }
  if (without.empty())
    throw Error(Err::InvalidParams,
                "every block contains \"" + alpha + "\"; nothing remains after splitting");

  SetFamily f = family_from_label_blocks(without);
  SetFamily d = family_from_label_blocks(stripped);

  TransversalReport ft = transversals(f);
  if (!(ft.transversals == d))
    throw Error(Err::ReconstructionMismatch,
                "stripped blocks are not the minimum blocking sets of the remainder");
  SetFamily rebuilt = union_families(f, join(family_from_label_blocks({{alpha}}), d));
  if (!(rebuilt == x))
    throw Error(Err::ReconstructionMismatch, "reassembly does not reproduce the input");
  return {f, d};
}

BoundTable lower_bound(std::size_t k, std::size_t t, unsigned long long base) {
  if (t < 1 || k < t + 1 || base < 1)
    throw Error(Err::InvalidParams, "need 1 <= t < k and base >= 1");
  BoundTable b;
  b.k = k;
  b.t = t;
  b.base = base;
  b.reduced_order = k - t;
  if (t % 2 == 1) {
    const std::size_t r = (t + 1) / 2;
    b.r = r;
    b.branch = "odd";
    b.stem = checked_mul(2 * r - 1, checked_pow(k - r + 1, r - 1));
    b.factor = checked_pow(k - r + 1, 2 * r - 1);
  } else {
    const std::size_t r = t / 2;
    b.r = r;
    b.branch = "even";
    b.stem = checked_mul(2 * r, checked_pow(k - r, r - 1));
    b.factor = checked_mul(checked_pow(k - r, r), checked_pow(k - r + 1, r));
  }
  b.bound = checked_add(b.stem, checked_mul(b.factor, base));
  return b;
}

unsigned long long corollary_bound(std::size_t k) {
  if (k < 1) throw Error(Err::InvalidParams, "need k >= 1");
  if (k % 2 == 0) return checked_pow(k / 2 + 1, k - 1);
  return checked_mul(checked_pow((k + 1) / 2, (k - 1) / 2), checked_pow((k + 3) / 2, (k - 1) / 2));
}

const char* to_string(PartitionMode mode) {
  return mode == PartitionMode::pointset ? "pointset" : "affine";
}

namespace {

// Restricted-growth enumeration of all partitions of m items into exactly n
// nonempty classes, pruning with the per-mode pairwise constraints.
struct PartitionSearch {
  std::size_t m = 0, n = 0;
  PartitionMode mode{};
  std::vector<std::vector<bool>> disjoint;
  std::vector<std::size_t> assign;
  std::vector<std::vector<std::vector<std::size_t>>> found;

  bool compatible(std::size_t j, std::size_t c) const {
    for (std::size_t l = 0; l < j; ++l) {
      if (!disjoint[l][j]) continue;
      // pointset: a disjoint pair split across classes breaks the meet-all
      // requirement; affine: a disjoint pair inside one class breaks the
      // intersecting requirement.
      if (mode == PartitionMode::pointset ? (assign[l] != c) : (assign[l] == c)) return false;
    }
    return true;
  }

  bool affine_complete() const {
    for (std::size_t ci = 0; ci < n; ++ci)
      for (std::size_t cj = 0; cj < n; ++cj) {
        if (ci == cj) continue;
        for (std::size_t x = 0; x < m; ++x) {
          if (assign[x] != ci) continue;
          bool partner = false;
          for (std::size_t y = 0; y < m && !partner; ++y)
            if (assign[y] == cj && disjoint[x][y]) partner = true;
          if (!partner) return false;
        }
      }
    return true;
  }

  void rgs(std::size_t j, std::size_t used) {
    if (used + (m - j) < n) return; // cannot reach n nonempty classes
    if (j == m) {
      if (used != n) return;
      if (mode == PartitionMode::affine && !affine_complete()) return;
      std::vector<std::vector<std::size_t>> classes(n);
      for (std::size_t x = 0; x < m; ++x) classes[assign[x]].push_back(x);
      found.push_back(std::move(classes));
      return;
    }
    const std::size_t cap = std::min(used + 1, n);
    for (std::size_t c = 0; c < cap; ++c) {
      if (!compatible(j, c)) continue;
      assign[j] = c;
      rgs(j + 1, std::max(used, c + 1));
    }
  }
};

} // namespace

PartitionSearchResult search_partitions(const SetFamily& cif, std::size_t n,
                                        PartitionMode mode, std::uint64_t budget) {
  gate_cif(cif, "base family");
  TransversalReport ft = transversals(cif);
  const std::size_t m = ft.transversals.size();
  if (n < 1 || n > m)
    throw Error(Err::InvalidParams, "class count " + std::to_string(n) + " outside 1.." +
                                        std::to_string(m));
  // budget guard on the raw assignment space n^m
  long double space = std::pow(static_cast<long double>(n), static_cast<long double>(m));
  if (space > static_cast<long double>(budget))
    throw Error(Err::BudgetExceeded, "assignment space " + std::to_string(n) + "^" +
                                         std::to_string(m) + " exceeds the budget " +
                                         std::to_string(budget));

  PartitionSearch search;
  search.m = m;
  search.n = n;
  search.mode = mode;
  search.assign.assign(m, 0);
  search.disjoint.assign(m, std::vector<bool>(m, false));
  const auto& tb = ft.transversals.blocks();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      search.disjoint[i][j] = i != j && !tb[i].intersects(tb[j]);
  search.rgs(0, 0);

  PartitionSearchResult out;
  out.mode = mode;
  out.n_classes = n;
  out.transversals = ft.transversals;
  out.partitions = std::move(search.found);
  return out;
}

} // namespace ifam
