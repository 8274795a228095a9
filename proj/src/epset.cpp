#include "odplab/epset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace odplab {

namespace {

constexpr std::uint64_t kMaxPeriod = 1u << 20;

std::uint64_t period_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t l = std::lcm(a, b);
  if (l > kMaxPeriod)
    throw StructuralError("epset: combined period " + std::to_string(l) +
                          " exceeds limit " + std::to_string(kMaxPeriod));
  return l;
}

}  // namespace

EPSet::EPSet() : p_(1), tail_(1, false) {}

EPSet EPSet::make(std::uint32_t period, std::vector<bool> prefix,
                  std::vector<bool> tail) {
  if (period == 0 || period > kMaxPeriod)
    throw StructuralError("epset: period must be in [1, " +
                          std::to_string(kMaxPeriod) + "]");
  if (tail.size() != period)
    throw StructuralError("epset: tail must list one bit per residue");
  EPSet s;
  s.p_ = period;
  s.prefix_ = std::move(prefix);
  s.tail_ = std::move(tail);
  s.canonicalize();
  return s;
}

EPSet EPSet::empty() { return EPSet(); }

EPSet EPSet::naturals() {
  return make(1, {}, {true});
}

EPSet EPSet::from_elements(const std::vector<std::uint64_t>& elems) {
  std::uint64_t top = 0;
  for (std::uint64_t e : elems) top = std::max(top, e + 1);
  if (top > kMaxPeriod)
    throw StructuralError("epset: element too large");
  std::vector<bool> prefix(top, false);
  for (std::uint64_t e : elems) prefix[e] = true;
  return make(1, std::move(prefix), {false});
}

EPSet EPSet::singleton(std::uint64_t n) { return from_elements({n}); }

EPSet EPSet::range_below(std::uint64_t b) {
  if (b > kMaxPeriod) throw StructuralError("epset: range bound too large");
  return make(1, std::vector<bool>(b, true), {false});
}

EPSet EPSet::residues(std::uint32_t period,
                      const std::vector<std::uint32_t>& residues) {
  if (period == 0 || period > kMaxPeriod)
    throw StructuralError("epset: period must be positive");
  std::vector<bool> tail(period, false);
  for (std::uint32_t r : residues) {
    if (r >= period)
      throw StructuralError("epset: residue " + std::to_string(r) +
                            " outside period " + std::to_string(period));
    tail[r] = true;
  }
  return make(period, {}, std::move(tail));
}

void EPSet::canonicalize() {
  // Minimal period first: the eventual part repeats with any divisor d of
  // the period whose residue table collapses, and the least eventual period
  // always divides the current one.
  for (std::uint32_t d = 1; d < p_; ++d) {
    if (p_ % d != 0) continue;
    bool collapses = true;
    for (std::uint32_t r = d; r < p_ && collapses; ++r)
      collapses = (tail_[r] == tail_[r % d]);
    if (collapses) {
      tail_.resize(d);
      p_ = d;
      break;
    }
  }
  // Then minimal threshold: drop trailing prefix bits that already agree
  // with the tail pattern.
  while (!prefix_.empty() &&
         prefix_.back() == tail_[(prefix_.size() - 1) % p_])
    prefix_.pop_back();
}

bool EPSet::member(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return tail_[n % p_];
}

std::vector<bool> EPSet::truncate(std::uint64_t n) const {
  std::vector<bool> out(n);
  for (std::uint64_t i = 0; i < n; ++i) out[i] = member(i);
  return out;
}

bool EPSet::is_finite() const {
  return std::none_of(tail_.begin(), tail_.end(), [](bool b) { return b; });
}

bool EPSet::is_empty() const {
  if (!is_finite()) return false;
  return std::none_of(prefix_.begin(), prefix_.end(),
                      [](bool b) { return b; });
}

std::optional<std::uint64_t> EPSet::first_element() const {
  for (std::uint64_t n = 0; n < prefix_.size(); ++n)
    if (prefix_[n]) return n;
  std::uint64_t t = prefix_.size();
  std::optional<std::uint64_t> best;
  for (std::uint32_t r = 0; r < p_; ++r) {
    if (!tail_[r]) continue;
    std::uint64_t n = t + (r + p_ - t % p_) % p_;
    if (!best || n < *best) best = n;
  }
  return best;
}

std::vector<std::uint64_t> EPSet::elements() const {
  if (!is_finite())
    throw std::logic_error("epset: elements() on an infinite set");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < prefix_.size(); ++n)
    if (prefix_[n]) out.push_back(n);
  return out;
}

std::uint64_t EPSet::mask_below(unsigned b) const {
  if (b > 64) throw std::invalid_argument("epset: mask bound over 64");
  std::uint64_t m = 0;
  for (unsigned n = 0; n < b; ++n)
    if (member(n)) m |= std::uint64_t{1} << n;
  return m;
}

namespace {

template <class Op>
EPSet pointwise(const EPSet& a, const EPSet& b, Op op) {
  std::uint64_t p = period_lcm(a.period(), b.period());
  std::uint64_t t = std::max(a.threshold(), b.threshold());
  std::vector<bool> prefix(t), tail(p);
  for (std::uint64_t n = 0; n < t; ++n)
    prefix[n] = op(a.member(n), b.member(n));
  // Beyond the common threshold both operands read their tails, and every
  // n >= t with n = r (mod p) reads residue r mod the operand's period.
  for (std::uint64_t r = 0; r < p; ++r)
    tail[r] = op(a.tail_bits()[r % a.period()], b.tail_bits()[r % b.period()]);
  return EPSet::make((std::uint32_t)p, std::move(prefix), std::move(tail));
}

}  // namespace

EPSet complement(const EPSet& a) {
  std::vector<bool> prefix = a.prefix_bits(), tail = a.tail_bits();
  prefix.flip();
  tail.flip();
  return EPSet::make(a.period(), std::move(prefix), std::move(tail));
}

EPSet union_of(const EPSet& a, const EPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x || y; });
}

EPSet intersect(const EPSet& a, const EPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && y; });
}

EPSet symdiff(const EPSet& a, const EPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x != y; });
}

EPSet minus_below(const EPSet& a, std::uint64_t b) {
  return intersect(a, complement(EPSet::range_below(b)));
}

bool EPSet::operator==(const EPSet& o) const {
  return p_ == o.p_ && prefix_ == o.prefix_ && tail_ == o.tail_;
}

bool is_subset(const EPSet& a, const EPSet& b) {
  return intersect(a, complement(b)).is_empty();
}

std::string EPSet::literal() const {
  std::ostringstream os;
  os << "ep(p=" << p_ << "; prefix=0b";
  for (bool b : prefix_) os << (b ? '1' : '0');
  os << "; tail={";
  bool first = true;
  for (std::uint32_t r = 0; r < p_; ++r) {
    if (!tail_[r]) continue;
    if (!first) os << ',';
    os << r;
    first = false;
  }
  os << "})";
  return os.str();
}

EPSet ep_A1() { return EPSet::residues(2, {0}); }
EPSet ep_A2() { return EPSet::residues(6, {0, 3}); }
EPSet ep_A3() { return symdiff(ep_A1(), ep_A2()); }

EPSet ep_N(int i) {
  if (i < 0 || i > 5) throw std::invalid_argument("residue class index");
  return EPSet::residues(6, {(std::uint32_t)i});
}

int CosetFamily::empty_index() const {
  for (int i = 0; i < (int)base.size(); ++i)
    if (base[i].is_empty()) return i;
  throw StructuralError("family: base lacks the empty set");
}

int CosetFamily::nat_index() const {
  for (int i = 0; i < (int)base.size(); ++i)
    if (base[i] == EPSet::naturals()) return i;
  throw StructuralError("family: base lacks the full set");
}

int CosetFamily::perp_index(int i) const {
  EPSet c = complement(base.at(i));
  for (int j = 0; j < (int)base.size(); ++j)
    if (base[j] == c) return j;
  throw StructuralError("family: base not closed under complement");
}

void check_family(const CosetFamily& fam) {
  const auto& g = fam.base;
  if (g.empty()) throw StructuralError("family: empty base");
  fam.empty_index();
  fam.nat_index();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) {
      if (g[i] == g[j])
        throw StructuralError("family: duplicate base sets at " +
                              std::to_string(i) + "," + std::to_string(j));
      EPSet d = symdiff(g[i], g[j]);
      if (std::find(g.begin(), g.end(), d) == g.end())
        throw StructuralError("family: base not symdiff-closed at " +
                              std::to_string(i) + "," + std::to_string(j));
    }
  for (size_t i = 0; i < g.size(); ++i)
    if (!g[i].is_empty() && g[i].is_finite())
      throw StructuralError("family: nonzero base set " + std::to_string(i) +
                            " is finite");
}

namespace {

std::vector<EPSet> standard_base() {
  EPSet a1 = ep_A1(), a2 = ep_A2(), a3 = ep_A3();
  return {EPSet::empty(), a1,             a2,
          a3,             complement(a1), complement(a2),
          complement(a3), EPSet::naturals()};
}

}  // namespace

CosetFamily build_r_family() {
  CosetFamily fam;
  fam.name = "R";
  fam.base = standard_base();
  fam.support = EPSet::naturals();
  check_family(fam);
  return fam;
}

CosetFamily build_t_family() {
  CosetFamily fam;
  fam.name = "T";
  fam.base = standard_base();
  EPSet a1 = ep_A1(), a2 = ep_A2(), a3 = ep_A3();
  fam.support = union_of(intersect(a1, complement(a2)), intersect(a2, a3));
  check_family(fam);
  return fam;
}

EPSet member_value(const CosetFamily& fam, const FamilyMember& m) {
  return symdiff(fam.base.at(m.base_index), m.exceptions);
}

std::optional<FamilyMember> family_contains(const CosetFamily& fam,
                                            const EPSet& x) {
  // At most one base set works: distinct base sets differ on an infinite
  // set, so x can be a finite perturbation of only one of them.
  for (int i = 0; i < (int)fam.base.size(); ++i) {
    EPSet f = symdiff(x, fam.base[i]);
    if (f.is_finite() && is_subset(f, fam.support))
      return FamilyMember{i, std::move(f)};
  }
  return std::nullopt;
}

std::optional<FamilyMember> nonzero_lower_bound_witness(const CosetFamily& fam,
                                                        const EPSet& s) {
  // Route one: a singleton {u} with u in the support is itself a member.
  EPSet in_support = intersect(fam.support, s);
  if (auto u = in_support.first_element())
    return FamilyMember{fam.empty_index(), EPSet::singleton(*u)};
  // Route two: D symdiff (D minus s) = D intersect s for a base set D whose
  // part outside s is finite and supported. Any other member below s would
  // hand route one a point, since its exception set meets the support.
  for (int i = 0; i < (int)fam.base.size(); ++i) {
    const EPSet& d = fam.base[i];
    if (d.is_empty()) continue;
    EPSet excess = intersect(d, complement(s));
    if (!excess.is_finite() || !is_subset(excess, fam.support)) continue;
    if (intersect(d, s).is_empty()) continue;
    return FamilyMember{i, std::move(excess)};
  }
  return std::nullopt;
}

bool has_nonzero_lower_bound(const CosetFamily& fam, const EPSet& s) {
  return nonzero_lower_bound_witness(fam, s).has_value();
}

bool meets_zero(const CosetFamily& fam, const EPSet& a, const EPSet& b) {
  if (!family_contains(fam, a) || !family_contains(fam, b))
    throw std::invalid_argument("meets_zero: arguments must belong to the family");
  return !has_nonzero_lower_bound(fam, intersect(a, b));
}

bool fragment_has_lower_bound(const CosetFamily& fam, const EPSet& s,
                              unsigned bound) {
  if (bound == 0 || bound > 63)
    throw std::invalid_argument("fragment oracle: bound must be in [1, 63]");
  std::uint64_t wmask =
      intersect(fam.support, EPSet::range_below(bound)).mask_below(bound);
  if (std::popcount(wmask) > 20)
    throw BudgetExceeded("fragment oracle: too many supported points below " +
                         std::to_string(bound));
  std::uint64_t sn = s.mask_below(bound);
  for (const EPSet& d : fam.base) {
    EPSet far = minus_below(d, bound);
    if (!is_subset(far, s)) continue;
    bool far_nonempty = !far.is_empty();
    std::uint64_t dn = d.mask_below(bound);
    // All exception sets, largest submask of the supported window first.
    for (std::uint64_t f = wmask;; f = (f - 1) & wmask) {
      std::uint64_t near = dn ^ f;
      if ((near & ~sn) == 0 && (near != 0 || far_nonempty)) return true;
      if (f == 0) break;
    }
  }
  return false;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "PROVEN";
    case Verdict::Refuted: return "REFUTED";
    default: return "UNDECIDED";
  }
}

RCheckResult class_R_check(const CosetFamily& fam) {
  RCheckResult res;
  // Refutation scan over base pairs.
  for (const EPSet& a : fam.base)
    for (const EPSet& b : fam.base) {
      if (!meets_zero(fam, a, b)) continue;
      if (is_subset(a, complement(b))) continue;
      res.verdict = Verdict::Refuted;
      res.witness = {a, b};
      return res;
    }
  // Proof condition. With a cofinite support, take members a, b with
  // meets_zero and any point u in a intersect b: u cannot be supported
  // (else {u} bounds them), so a intersect b lives in the finite
  // unsupported region plus the exceptional points; writing a, b over base
  // sets D1, D2, the intersection D1 intersect D2 is then finite, hence by
  // hypothesis supported, hence a intersect b is empty after all -- and
  // disjoint members with finite supported differences satisfy
  // a inside complement(b) whenever the complement adjustment is again a
  // member, which symdiff closure grants.
  if (!complement(fam.support).is_finite()) return res;  // Undecided
  for (size_t i = 0; i < fam.base.size(); ++i)
    for (size_t j = i + 1; j < fam.base.size(); ++j) {
      EPSet common = intersect(fam.base[i], fam.base[j]);
      if (!common.is_finite()) continue;
      if (!is_subset(common, fam.support)) return res;  // Undecided
    }
  res.verdict = Verdict::Proven;
  return res;
}

namespace {

/// Everything about one ordered base pair (d1, d2) needed to decide, at a
/// glance, whether some fragment pair over it violates the class law. For
/// exception sets drawn from W = support below the bound, writing
/// a = D1 symdiff F1 and b = D2 symdiff F2 with x = W-part of a,
/// y = W-part of b: a meets b in z = x intersect y inside W, in the fixed
/// near residue I0 = (D1 intersect D2) below the bound outside W, and in
/// the fixed far part of D1 intersect D2. Any z point is a supported
/// singleton lower bound, so pairs with meets_zero force z empty -- and
/// with z empty every quantity below is independent of F1, F2.
struct BlockContext {
  const CosetFamily& fam;
  unsigned bound;
  std::uint64_t wmask;                 // support below the bound
  std::vector<std::uint64_t> near;     // base[i] below the bound
  std::vector<EPSet> far;              // base[i] from the bound on

  explicit BlockContext(const CosetFamily& f, unsigned b)
      : fam(f), bound(b), wmask(intersect(f.support,
                                          EPSet::range_below(b))
                                    .mask_below(b)) {
    for (const EPSet& d : f.base) {
      near.push_back(d.mask_below(b));
      far.push_back(minus_below(d, b));
    }
  }

  /// meets_zero and nonemptiness for the pair at z = empty.
  struct Block {
    bool nonempty = false;    // a intersect b nonzero
    bool meets_zero = false;  // no nonzero member below a intersect b
  };

  Block eval(int d1, int d2) const {
    Block blk;
    EPSet far_common = intersect(far[d1], far[d2]);
    std::uint64_t i0 = (near[d1] & near[d2]) & ~wmask;
    blk.nonempty = (i0 != 0) || !far_common.is_empty();
    // Singleton route: a supported point of the intersection. Near points
    // sit outside W by construction of I0, so only the far part counts.
    if (!intersect(fam.support, far_common).is_empty()) return blk;
    // Base-set route: D minus (a intersect b) finite and supported while D
    // still meets the intersection.
    for (int d = 0; d < (int)fam.base.size(); ++d) {
      if (fam.base[d].is_empty()) continue;
      EPSet far_diff = intersect(far[d], complement(far_common));
      if (!far_diff.is_finite() || !is_subset(far_diff, fam.support))
        continue;
      if ((near[d] & ~i0 & ~wmask) != 0) continue;  // unsupported near excess
      bool meets = ((near[d] & i0) != 0) ||
                   !intersect(far[d], far_common).is_empty();
      if (meets) return blk;
    }
    blk.meets_zero = true;
    return blk;
  }
};

}  // namespace

std::optional<std::pair<FamilyMember, FamilyMember>> class_witness_search(
    const CosetFamily& fam, unsigned bound, FamilyClass cls,
    const SearchOptions& opts) {
  if (bound == 0 || bound > 63)
    throw std::invalid_argument("witness search: bound must be in [1, 63]");
  BlockContext ctx(fam, bound);
  unsigned w = (unsigned)std::popcount(ctx.wmask);
  if (w > opts.fragment_cap)
    throw BudgetExceeded("witness search: fragment holds " +
                         std::to_string(w) + " supported points below " +
                         std::to_string(bound) + ", cap is " +
                         std::to_string(opts.fragment_cap));

  const int n = (int)fam.base.size();
  std::vector<std::vector<BlockContext::Block>> blk(
      n, std::vector<BlockContext::Block>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) blk[i][j] = ctx.eval(i, j);

  auto from_mask = [](std::uint64_t m) {
    std::vector<std::uint64_t> elems;
    for (int b = 0; b < 64; ++b)
      if (m >> b & 1) elems.push_back((std::uint64_t)b);
    return EPSet::from_elements(elems);
  };

  // The fragment enumerates members as (base index, exception mask) with
  // masks ascending, pairs in lexicographic nesting order. A violating pair
  // needs z = x intersect y empty (and for T also x empty), which pins the
  // first witness per block:
  //   R: smallest F1 is empty, so x = D1 and W, and the smallest F2 removes
  //      exactly x from y, so F2 = D2, W and x;
  //   T: smallest F1 empties x, so F1 = D1 and W, and F2 = empty works.
  for (int d1 = 0; d1 < n; ++d1)
    for (int d2 = 0; d2 < n; ++d2) {
      const BlockContext::Block& b12 = blk[d1][d2];
      if (!b12.meets_zero || !b12.nonempty) continue;
      if (cls == FamilyClass::R) {
        std::uint64_t x = ctx.near[d1] & ctx.wmask;
        std::uint64_t f2 = ctx.near[d2] & ctx.wmask & x;
        return std::make_pair(FamilyMember{d1, EPSet::empty()},
                              FamilyMember{d2, from_mask(f2)});
      }
      // T additionally requires meets_zero against the complement, whose
      // base row is the complement's; x must be empty so both intersections
      // stay clear of W.
      const BlockContext::Block& b12c = blk[d1][fam.perp_index(d2)];
      if (!b12c.meets_zero) continue;
      std::uint64_t f1 = ctx.near[d1] & ctx.wmask;
      return std::make_pair(FamilyMember{d1, from_mask(f1)},
                            FamilyMember{d2, EPSet::empty()});
    }
  return std::nullopt;
}

}  // namespace odplab
