#include "ringlab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "ringlab/errors.hpp"

namespace ringlab {

std::string TheoremReport::status() const {
  if (failure_count > 0) return "refuted";
  if (hypothesis_satisfied == 0) return "vacuous";
  return "verified";
}

Workspace::Workspace(Catalog catalog, unsigned jobs) : catalog_(std::move(catalog)), jobs_(jobs) {
  if (jobs_ == 0) jobs_ = std::max(1u, std::thread::hardware_concurrency());
  analyses_.reserve(catalog_.entries.size());
  for (const auto& e : catalog_.entries) analyses_.push_back(std::make_unique<RingAnalysis>(e.ring()));
}

bool is_arithmetical(const RingPtr& ring) {
  for (const auto& m : maximal_ideals(*ring)) {
    const auto loc = localize(ring, MultiplicativeSet::complement_of_prime(ring, m));
    if (!is_chained(*loc.ring)) return false;
  }
  return true;
}

namespace {

constexpr auto kOneAbs = Predicate::OneAbsorbingDeltaPrimary;
constexpr auto kDeltaPrimary = Predicate::DeltaPrimary;
constexpr auto kSemiprimary = Predicate::DeltaSemiprimary;

struct Partial {
  std::size_t instances = 0;
  std::size_t hypothesis = 0;
  std::size_t failures = 0;
  std::vector<Failure> recorded;
  std::vector<std::string> notes;
};

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::string> element_names(const FiniteRing& ring, const std::vector<Element>& els) {
  std::vector<std::string> out;
  for (auto e : els) out.push_back(ring.name(e));
  return out;
}

void record(Partial& p, const FiniteRing& ring, const Ideal& ideal, const std::string& delta,
            const std::vector<Element>& elements, std::string detail) {
  ++p.failures;
  if (p.recorded.size() >= TheoremReport::kMaxRecordedFailures) return;
  p.recorded.push_back(
      Failure{ring.label(), ideal.member_list(), ideal.to_string(), delta, element_names(ring, elements), std::move(detail)});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Shorthand for the per-entry sweeps.
struct Ctx {
  const Workspace& ws;
  std::size_t index;
  const CatalogEntry& entry;
  const RingAnalysis& A;
  const IdealLattice& L;
  const FiniteRing& R;
  Partial& out;

  Ctx(const Workspace& w, std::size_t i, Partial& p)
      : ws(w), index(i), entry(w.entry(i)), A(w.analysis(i)), L(A.lattice()), R(A.ring()), out(p) {}

  bool abs1(std::size_t i, const ExpansionFunction& d) const { return A.holds(kOneAbs, i, d.at(i)); }
  bool dprim(std::size_t i, const ExpansionFunction& d) const { return A.holds(kDeltaPrimary, i, d.at(i)); }
  const Verdict& v(Predicate p, std::size_t i, const ExpansionFunction& d) const { return A.verdict(p, i, d.at(i)); }

  void fail(std::size_t ideal, const ExpansionFunction& d, const std::vector<Element>& els, std::string detail) {
    record(out, R, L[ideal], d.label(), els, std::move(detail));
  }
  void fail(std::size_t ideal, const std::string& d, const std::vector<Element>& els, std::string detail) {
    record(out, R, L[ideal], d, els, std::move(detail));
  }

  std::optional<std::size_t> parent_entry() const {
    if (!entry.built->left) return std::nullopt;
    return ws.catalog().find(entry.built->left->provenance());
  }
  std::size_t maximal() const { return A.maximal().front(); }
};

// ---------------------------------------------------------------------------

void t_def_eq(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      const bool elementwise = c.abs1(i, d);
      const auto& idealwise = c.A.idealwise(i, d.at(i));
      if (elementwise) ++c.out.hypothesis;
      if (elementwise != idealwise.holds) {
        std::string detail = "elementwise=" + yes_no(elementwise) + " idealwise=" + yes_no(idealwise.holds);
        if (!idealwise.holds)
          detail += " ideals " + c.L[idealwise.ideals[0]].to_string() + "," + c.L[idealwise.ideals[1]].to_string() + "," +
                    c.L[idealwise.ideals[2]].to_string();
        c.fail(i, d, c.v(kOneAbs, i, d).witness, detail);
      }
    }
}

void t_chain(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      const auto& f = c.A.ideal_facts(i);
      const bool prime = f.prime.holds, abs_prime = f.one_absorbing_prime.holds;
      const bool dp = c.dprim(i, d), abs = c.abs1(i, d);
      if (prime || abs_prime || dp) ++c.out.hypothesis;
      if (prime && !abs_prime) c.fail(i, d, f.one_absorbing_prime.witness, "prime but not 1-absorbing prime");
      if (abs_prime && !abs) c.fail(i, d, c.v(kOneAbs, i, d).witness, "1-absorbing prime but not 1-absorbing δ-primary");
      if (dp && !abs) c.fail(i, d, c.v(kOneAbs, i, d).witness, "δ-primary but not 1-absorbing δ-primary");
    }
}

void t_mono(Ctx& c) {
  const auto& ds = c.entry.expansions;
  for (const auto& d : ds)
    for (const auto& g : ds) {
      if (&d == &g) continue;
      for (auto i : c.L.proper()) {
        ++c.out.instances;
        if (!c.L.contains(g.at(i), d.at(i)) || !c.abs1(i, d)) continue;
        ++c.out.hypothesis;
        if (!c.abs1(i, g)) c.fail(i, d.label() + " ⊆ " + g.label(), c.v(kOneAbs, i, g).witness, "not 1-absorbing γ-primary");
      }
    }
}

void t_2abs(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      if (!c.abs1(i, d)) continue;
      ++c.out.hypothesis;
      const auto& v = c.v(Predicate::TwoAbsorbingDeltaPrimary, i, d);
      if (!v.holds) c.fail(i, d, v.witness, "not 2-absorbing δ-primary");
    }
}

void t_semi(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      if (c.L.radical(d.at(i)) != d.at(i) || !c.abs1(i, d)) continue;
      ++c.out.hypothesis;
      const auto& v = c.v(kSemiprimary, i, d);
      if (!v.holds) c.fail(i, d, v.witness, "not δ-semiprimary");
    }
}

void t_local(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      if (!c.abs1(i, d) || c.dprim(i, d)) continue;
      ++c.out.hypothesis;
      if (!c.A.is_local()) c.fail(i, d, c.v(kDeltaPrimary, i, d).witness, "ring is not local");
    }
}

void t_xm(Ctx& c) {
  if (!c.A.is_local()) return;
  const auto M = c.maximal();
  for (const auto& d : c.entry.expansions)
    for (std::uint32_t x = 0; x < c.R.order(); ++x) {
      if (x == c.R.zero().index) continue;
      const auto px = c.L.principal(x);
      if (px == c.L.whole_index() || !c.L.is_prime(px)) continue;
      ++c.out.instances;
      const auto xm = *c.L.find(scale(Element{x}, c.L[M]).members());
      const auto dxm = d.at(xm);
      if (!(c.L.contains(M, dxm) && dxm != M && c.L[dxm].contains(Element{x}))) continue;
      ++c.out.hypothesis;
      if (!c.abs1(xm, d)) c.fail(xm, d, c.v(kOneAbs, xm, d).witness, "xM is not 1-absorbing δ-primary");
      if (c.dprim(xm, d)) c.fail(xm, d, {Element{x}}, "xM is δ-primary");
    }
}

void t_colon(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      const bool abs = c.abs1(i, d);
      std::map<std::size_t, std::uint32_t> colons;
      for (auto dd : c.R.nonunit_list()) {
        if (c.L[i].contains(Element{dd})) continue;
        ++c.out.instances;
        if (!abs) continue;
        ++c.out.hypothesis;
        colons.emplace(*c.L.find(c.L.colon(i, dd)), dd);
      }
      for (auto [k, dd] : colons) {
        const auto& v = c.v(kDeltaPrimary, k, d);
        if (!v.holds) {
          auto els = v.witness;
          els.insert(els.begin(), Element{dd});
          c.fail(i, d, els, "(I:d) is not δ-primary for d=" + c.R.name(Element{dd}));
        }
      }
    }
}

void t_m2(Ctx& c) {
  std::optional<std::size_t> m2;
  if (c.A.is_local()) m2 = c.L.product(c.maximal(), c.maximal());
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      if (!c.abs1(i, d)) continue;
      ++c.out.hypothesis;
      const auto& semi = c.v(kSemiprimary, i, d);
      if (!semi.holds && !(m2 && c.L.contains(i, *m2))) c.fail(i, d, semi.witness, "neither δ-semiprimary nor M² ⊆ I");
    }
}

void biconditional(Ctx& c, const ExpansionFunction& d, std::size_t i, const char* what) {
  const bool abs = c.abs1(i, d), dp = c.dprim(i, d);
  if (abs != dp)
    c.fail(i, d, abs ? c.v(kDeltaPrimary, i, d).witness : c.v(kOneAbs, i, d).witness,
           std::string(what) + ": 1abs=" + yes_no(abs) + " δ-primary=" + yes_no(dp));
}

void t_chained(Ctx& c) {
  const bool chained = is_chained(c.R);
  const std::size_t m2 = c.L.product(c.A.jacobson(), c.A.jacobson());
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      if (!chained || i == m2) continue;
      ++c.out.hypothesis;
      biconditional(c, d, i, "chained ring");
    }
}

void t_arith(Ctx& c) {
  const bool arith = is_arithmetical(c.entry.ring());
  const std::size_t m2 = c.L.product(c.A.jacobson(), c.A.jacobson());
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      if (!arith || i == m2) continue;
      ++c.out.hypothesis;
      biconditional(c, d, i, "arithmetical ring");
    }
}

void t_pmax(Ctx& c) {
  bool applies = false;
  std::size_t M = 0;
  if (c.A.is_local()) {
    M = c.maximal();
    for (std::uint32_t g = 0; g < c.R.order() && !applies; ++g) applies = c.L.principal(g) == M;
  }
  const std::size_t m2 = applies ? c.L.product(M, M) : 0;
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      if (!applies) continue;
      ++c.out.hypothesis;
      const bool abs = c.abs1(i, d), dp = c.dprim(i, d), m2_in = c.L.contains(i, m2);
      if (abs != (dp || m2_in))
        c.fail(i, d, c.v(kOneAbs, i, d).witness,
               "1abs=" + yes_no(abs) + " δ-primary=" + yes_no(dp) + " M²⊆I=" + yes_no(m2_in));
      if (c.L.contains(d.at(i), c.L.radical(i))) biconditional(c, d, i, "√I ⊆ δ(I)");
    }
}

void t_sqrt(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      const auto r = c.L.radical(i);
      if (c.L.radical(d.at(i)) != d.at(r) || !c.abs1(i, d)) continue;
      ++c.out.hypothesis;
      const auto& v = c.v(kDeltaPrimary, r, d);
      if (!v.holds) c.fail(i, d, v.witness, "√I is not δ-primary");
    }
}

void t_idem(Ctx& c) {
  for (const auto& d : c.entry.expansions)
    for (auto i : c.L.proper()) {
      ++c.out.instances;
      const auto D = d.at(i);
      if (D == c.L.whole_index() || d.at(D) != D) continue;
      ++c.out.hypothesis;
      const bool abs = c.abs1(D, d);
      const auto& prime1 = c.A.ideal_facts(D).one_absorbing_prime;
      if (abs != prime1.holds)
        c.fail(D, d, prime1.witness, "δ(I) 1abs δ-primary=" + yes_no(abs) + " 1abs prime=" + yes_no(prime1.holds));
    }
}

void t_inter(Ctx& c) {
  for (const auto& d : c.entry.expansions) {
    const bool preserving = is_intersection_preserving(d).holds;
    const auto& P = c.L.proper();
    for (std::size_t a = 0; a < P.size(); ++a)
      for (std::size_t b = a + 1; b < P.size(); ++b) {
        ++c.out.instances;
        const auto i = P[a], j = P[b];
        if (!preserving || d.at(i) != d.at(j) || !c.abs1(i, d) || !c.abs1(j, d)) continue;
        ++c.out.hypothesis;
        const auto k = c.L.intersection(i, j);
        if (!c.abs1(k, d))
          c.fail(k, d, c.v(kOneAbs, k, d).witness, "intersection of " + c.L[i].to_string() + " and " + c.L[j].to_string());
      }
  }
}

std::vector<std::size_t> principal_proper(const IdealLattice& L) {
  std::vector<std::size_t> out;
  for (std::uint32_t g = 0; g < L.ring().order(); ++g) {
    const auto k = L.principal(g);
    if (k != L.whole_index()) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// First proper ideal in the list failing the predicate, if any.
std::optional<std::size_t> first_failing(const std::vector<std::size_t>& ideals, const std::function<bool(std::size_t)>& ok) {
  for (auto i : ideals)
    if (!ok(i)) return i;
  return std::nullopt;
}

void t_princ(Ctx& c) {
  const auto principal = principal_proper(c.L);
  for (const auto& d : c.entry.expansions) {
    ++c.out.instances;
    auto ok = [&](std::size_t i) { return c.abs1(i, d); };
    const auto bad_principal = first_failing(principal, ok);
    const auto bad_any = first_failing(c.L.proper(), ok);
    if (!bad_principal || !bad_any) ++c.out.hypothesis;
    if (bad_principal.has_value() != bad_any.has_value())
      c.fail(*bad_any, d, c.v(kOneAbs, *bad_any, d).witness, "principal ideals all 1abs but this ideal is not");
  }
}

bool jac_square_zero(const RingAnalysis& A) {
  const auto& L = A.lattice();
  return L.product(A.jacobson(), A.jacobson()) == L.zero_index();
}

void t_char(Ctx& c) {
  const auto principal = principal_proper(c.L);
  const bool iii = c.A.is_local() && jac_square_zero(c.A);
  for (const auto& d : c.entry.expansions) {
    ++c.out.instances;
    if (!satisfies_star(d) || !preserves_jacobson(d) || !commutes_with_scaling(d)) continue;
    ++c.out.hypothesis;
    auto ok = [&](std::size_t i) { return c.abs1(i, d); };
    const bool i1 = !first_failing(principal, ok), i2 = !first_failing(c.L.proper(), ok);
    if (i1 != i2 || i2 != iii)
      c.fail(c.L.zero_index(), d, {}, "(i)=" + yes_no(i1) + " (ii)=" + yes_no(i2) + " (iii)=" + yes_no(iii));
  }
}

void t_char_cor(Ctx& c) {
  ++c.out.instances;
  ++c.out.hypothesis;
  const auto principal = principal_proper(c.L);
  auto ok = [&](std::size_t i) { return c.A.ideal_facts(i).one_absorbing_prime.holds; };
  const bool i1 = !first_failing(c.L.proper(), ok), i2 = !first_failing(principal, ok);
  const bool iii = c.A.is_local() && jac_square_zero(c.A);
  if (i1 != i2 || i2 != iii)
    c.fail(c.L.zero_index(), "none", {}, "(i)=" + yes_no(i1) + " (ii)=" + yes_no(i2) + " (iii)=" + yes_no(iii));
}

void t_spec(Ctx& c) {
  if (!c.A.is_local()) return;
  const auto M = c.maximal();
  std::vector<std::size_t> spec;
  for (auto i : c.L.proper())
    if (c.L.is_prime(i)) spec.push_back(i);
  for (const auto& d : c.entry.expansions) {
    ++c.out.instances;
    const auto d0 = d.at(c.L.zero_index());
    const bool one = spec == std::vector<std::size_t>{d0};
    std::vector<std::size_t> two{d0, M};
    std::sort(two.begin(), two.end());
    two.erase(std::unique(two.begin(), two.end()), two.end());
    const bool other = spec == two && c.L.product(d0, M) == c.L.zero_index();
    if (!(one || other)) continue;
    bool prime_expansion = true;
    for (auto i : c.L.proper())
      if (c.abs1(i, d) && !c.L.is_prime(d.at(i))) prime_expansion = false;
    if (!prime_expansion) continue;
    ++c.out.hypothesis;
    for (auto i : c.L.proper())
      if (!c.abs1(i, d)) c.fail(i, d, c.v(kOneAbs, i, d).witness, "proper ideal not 1abs δ-primary");
  }
}

// f: parent -> entry ring given by a lattice pullback table.
struct HomData {
  const RingAnalysis* domain;
  const RingAnalysis* codomain;
  std::vector<std::size_t> pullback;  // codomain ideal -> domain ideal
  std::optional<std::vector<std::size_t>> image;  // domain ideal -> codomain ideal, when surjective
  std::optional<std::size_t> kernel;
  bool nonunit_preserving;
  std::string name;
};

void check_hom(Ctx& c, const HomData& h, const std::vector<ExpansionFunction>& deltas,
               const std::vector<ExpansionFunction>& gammas, bool only_equal_tables) {
  const auto& LD = h.domain->lattice();
  const auto& LS = h.codomain->lattice();
  for (const auto& d : deltas)
    for (const auto& g : gammas) {
      if (only_equal_tables && &d != &g) continue;
      ++c.out.instances;
      if (!h.nonunit_preserving) continue;
      bool dg = true;
      for (std::size_t j = 0; j < LS.size() && dg; ++j) dg = d.at(h.pullback[j]) == h.pullback[g.at(j)];
      if (!dg) continue;
      ++c.out.hypothesis;
      const std::string label = h.name + " δ=" + d.label() + " γ=" + g.label();
      for (auto j : LS.proper()) {
        if (!h.codomain->holds(kOneAbs, j, g.at(j))) continue;
        const auto pre = h.pullback[j];
        if (!h.domain->holds(kOneAbs, pre, d.at(pre)))
          record(c.out, h.domain->ring(), LD[pre], label, h.domain->verdict(kOneAbs, pre, d.at(pre)).witness,
                 "preimage of 1abs γ-primary ideal is not 1abs δ-primary");
      }
      if (!h.image) continue;
      for (auto i : LD.proper()) {
        if (!LD.contains(i, *h.kernel)) continue;
        const auto fi = (*h.image)[i];
        const bool lhs = h.domain->holds(kOneAbs, i, d.at(i));
        const bool rhs = h.codomain->holds(kOneAbs, fi, g.at(fi));
        if (lhs != rhs)
          record(c.out, h.domain->ring(), LD[i], label, {},
                 "I 1abs δ-primary=" + yes_no(lhs) + " f(I) 1abs γ-primary=" + yes_no(rhs));
      }
    }
}

void t_hom(Ctx& c) {
  HomData id{&c.A, &c.A, {}, {}, c.L.zero_index(), true, "id:" + c.R.label()};
  for (std::size_t j = 0; j < c.L.size(); ++j) id.pullback.push_back(j);
  id.image = id.pullback;
  check_hom(c, id, c.entry.expansions, c.entry.expansions, true);

  const QuotientRing* q = nullptr;
  if (c.entry.built->quotient) q = &*c.entry.built->quotient;
  if (c.entry.built->localization) q = &c.entry.built->localization->quotient;
  if (!q) return;
  const auto parent = c.parent_entry();
  if (!parent) return;
  const auto& PA = c.ws.analysis(*parent);
  HomData h{&PA, &c.A, {}, std::vector<std::size_t>{}, *PA.lattice().find(q->ideal), q->nonunit_preserving,
            "proj:" + PA.ring().label() + "->" + c.R.label()};
  for (std::size_t j = 0; j < c.L.size(); ++j) h.pullback.push_back(q->lift_ideal(j));
  for (std::size_t i = 0; i < PA.lattice().size(); ++i) h.image->push_back(q->push_ideal(i));
  check_hom(c, h, c.ws.entry(*parent).expansions, c.entry.expansions, false);
}

void t_quot(Ctx& c) {
  if (!c.entry.built->quotient) return;
  const auto& q = *c.entry.built->quotient;
  const auto parent = c.parent_entry();
  if (!parent) return;
  const auto& PA = c.ws.analysis(*parent);
  const auto& PL = PA.lattice();
  const auto base = *PL.find(q.ideal);
  for (const auto& d : c.ws.entry(*parent).expansions) {
    const auto bar = induced_quotient(d, q);
    for (auto j : PL.proper()) {
      if (!PL.contains(j, base)) continue;
      ++c.out.instances;
      if (!q.nonunit_preserving) continue;
      ++c.out.hypothesis;
      const auto jq = q.push_ideal(j);
      const bool lhs = PA.holds(kOneAbs, j, d.at(j));
      const bool rhs = c.A.holds(kOneAbs, jq, bar.at(jq));
      if (lhs != rhs)
        record(c.out, PA.ring(), PL[j], d.label(), {}, "J 1abs=" + yes_no(lhs) + " J/I 1abs=" + yes_no(rhs));
    }
  }
}

void t_loc(Ctx& c) {
  if (!c.entry.built->localization) return;
  const auto& loc = *c.entry.built->localization;
  const auto parent = c.parent_entry();
  if (!parent) return;
  const auto& PA = c.ws.analysis(*parent);
  const auto& PL = PA.lattice();
  std::size_t incompatible = 0;
  for (const auto& d : c.ws.entry(*parent).expansions) {
    const auto induced = induced_localization(d, loc);
    for (auto i : PL.proper()) {
      ++c.out.instances;
      if (!loc.disjoint(i)) continue;
      if (std::find(induced.compatible.begin(), induced.compatible.end(), i) == induced.compatible.end()) {
        ++incompatible;
        continue;
      }
      if (!PA.holds(kOneAbs, i, d.at(i))) continue;
      ++c.out.hypothesis;
      const auto e = loc.extend(i);
      if (!c.A.holds(kOneAbs, e, induced.delta.at(e)))
        record(c.out, PA.ring(), PL[i], d.label(), c.A.verdict(kOneAbs, e, induced.delta.at(e)).witness,
               "S⁻¹I is not 1abs δ_S-primary in " + c.R.label());
    }
  }
  if (incompatible > 0)
    c.out.notes.push_back(c.R.label() + ": " + std::to_string(incompatible) +
                          " (δ, I) pairs skipped where δ_S(S⁻¹I) ≠ S⁻¹δ(I)");
}

void t_prod(Ctx& c) {
  if (!c.entry.built->product) return;
  const auto& P = *c.entry.built->product;
  const auto li = c.ws.catalog().find(c.entry.built->left->provenance());
  const auto ri = c.ws.catalog().find(c.entry.built->right->provenance());
  if (!li || !ri) return;
  const auto& A1 = c.ws.analysis(*li);
  const auto& A2 = c.ws.analysis(*ri);
  const auto w1 = A1.lattice().whole_index(), w2 = A2.lattice().whole_index();
  for (const auto& d1 : c.ws.entry(*li).expansions)
    for (const auto& d2 : c.ws.entry(*ri).expansions) {
      const auto d = induced_product(d1, d2, P);
      for (auto k : c.L.proper()) {
        ++c.out.instances;
        const auto [i1, i2] = P.components(k);
        const bool s1 = c.abs1(k, d), s2 = c.dprim(k, d);
        const bool s3 = (i2 == w2 && A1.holds(kDeltaPrimary, i1, d1.at(i1))) ||
                        (i1 == w1 && A2.holds(kDeltaPrimary, i2, d2.at(i2))) ||
                        (i1 != w1 && i2 != w2 && d1.at(i1) == w1 && d2.at(i2) == w2);
        if (s1) ++c.out.hypothesis;
        if (s1 != s2 || s2 != s3)
          c.fail(k, d, c.v(kOneAbs, k, d).witness,
                 "(1)=" + yes_no(s1) + " (2)=" + yes_no(s2) + " (3)=" + yes_no(s3));
      }
    }
}

void t_triv(Ctx& c, bool corollary) {
  if (!c.entry.built->trivial) return;
  const auto& T = *c.entry.built->trivial;
  const auto base = c.parent_entry();
  if (!base) return;
  const auto& BA = c.ws.analysis(*base);
  const auto& BL = BA.lattice();
  const auto& module = *T.module;
  const ElementSet E = ElementSet::full(module.order());

  std::map<std::vector<std::uint32_t>, ElementSet> bad_c;  // F -> {c : (F:c) ≠ F}
  auto colon_bad = [&](const ElementSet& F) -> const ElementSet& {
    auto key = F.to_vector();
    auto it = bad_c.find(key);
    if (it != bad_c.end()) return it->second;
    ElementSet bad(BA.ring().order());
    for (std::uint32_t a = 0; a < BA.ring().order(); ++a)
      if (!(module_colon(module, F, Element{a}) == F)) bad.insert(a);
    return bad_c.emplace(std::move(key), std::move(bad)).first->second;
  };

  std::size_t excluded = 0;
  std::vector<std::pair<std::size_t, std::optional<std::pair<std::size_t, ElementSet>>>> forms;
  for (auto k : c.L.proper()) {
    auto f = T.decompose(k);
    if (!f) ++excluded;
    forms.emplace_back(k, std::move(f));
  }

  for (const auto& d : c.ws.entry(*base).expansions) {
    const auto dt = induced_trivial_extension(d, T);
    if (corollary) {
      for (auto i : BL.proper()) {
        ++c.out.instances;
        ++c.out.hypothesis;
        const auto k = T.pair_ideal(i, E);
        const bool lhs = c.abs1(k, dt), rhs = BA.holds(kOneAbs, i, d.at(i));
        if (lhs != rhs) c.fail(k, dt, c.v(kOneAbs, k, dt).witness, "I⋉E 1abs=" + yes_no(lhs) + " I 1abs=" + yes_no(rhs));
      }
      continue;
    }
    for (const auto& [k, form] : forms) {
      if (!form) continue;
      ++c.out.instances;
      const auto i = form->first;
      const bool lhs = c.abs1(k, dt), rhs = BA.holds(kOneAbs, i, d.at(i));
      const bool colon_ok = colon_bad(form->second).is_subset_of(BL[i].members());
      if (lhs || colon_ok) ++c.out.hypothesis;
      if (lhs && !rhs) c.fail(k, dt, BA.verdict(kOneAbs, i, d.at(i)).witness, "I⋉F 1abs but I is not");
      if (colon_ok && lhs != rhs) c.fail(k, dt, c.v(kOneAbs, k, dt).witness, "(F:c)=F but I⋉F 1abs=" + yes_no(lhs));
    }
  }
  if (!corollary && excluded > 0)
    c.out.notes.push_back(c.R.label() + ": " + std::to_string(excluded) + " proper ideals not of the form I⋉F excluded");
}

// ---------------------------------------------------------------------------
// Catalog-independent example checks.

void prod_example(const Workspace&, Partial& out) {
  const auto z4 = make_zn(4), z9 = make_zn(9);
  auto sqrt_plus_two = [](const RingPtr& r) {
    const auto& L = r->lattice();
    const auto two = L.principal(r->from_integer(2).index);
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < L.size(); ++i) t.push_back(L.sum(L.radical(i), two));
    return ExpansionFunction::from_table(r, std::move(t), "sqrt+(2)");
  };
  const auto d1 = sqrt_plus_two(z4), d2 = sqrt_plus_two(z9);
  const auto P = make_product(z4, z9);
  const auto d = induced_product(d1, d2, P);
  const auto& L1 = z4->lattice();
  const auto& L2 = z9->lattice();
  const auto& L = P.ring->lattice();
  const auto i1 = P.ideal_index(L1.zero_index(), L2.whole_index());
  const auto i2 = P.ideal_index(L1.whole_index(), L2.zero_index());
  const auto k = L.intersection(i1, i2);
  RingAnalysis A(P.ring);
  const bool a1 = A.holds(kOneAbs, i1, d.at(i1)), a2 = A.holds(kOneAbs, i2, d.at(i2));
  const auto& ak = A.verdict(kOneAbs, k, d.at(k));
  out.instances = 1;
  if (a1 && a2) out.hypothesis = 1;
  out.notes.push_back("Z4xZ9 with δ=√I+(2) componentwise: δ(I1)=" + L[d.at(i1)].to_string() + ", δ(I2)=" +
                      L[d.at(i2)].to_string() + "; I1=" + L[i1].to_string() + " 1abs=" + yes_no(a1) + ", I2=" +
                      L[i2].to_string() + " 1abs=" + yes_no(a2) + ", I1∩I2=" + L[k].to_string() +
                      " 1abs=" + yes_no(ak.holds));
  if (!a1 || !a2 || ak.holds || d.at(i1) == d.at(i2) || d.at(i2) != L.whole_index())
    record(out, *P.ring, L[k], d.label(), ak.witness, "example not reproduced");
}

void prod_note(const Workspace& ws, Partial& out) {
  const auto e = ws.catalog().find("Z2xZ2");
  if (!e) return;
  const auto& A = ws.analysis(*e);
  const auto& v = A.verdict(kOneAbs, A.lattice().zero_index(), A.lattice().zero_index());
  std::string w;
  for (auto x : v.witness) w += (w.empty() ? "" : ",") + A.ring().name(x);
  out.notes.push_back("Z2xZ2, (0)x(0), δ=id×id: 1abs=" + yes_no(v.holds) + " witness " + w);
}

void char_note(const Workspace&, Partial& out) {
  const auto z8 = make_zn(8);
  const auto& L = z8->lattice();
  RingAnalysis A(z8);
  for (const auto& d : {make_radical(z8), make_constant_ring(z8)}) {
    bool all = true;
    for (auto i : L.proper()) all = all && A.holds(kOneAbs, i, d.at(i));
    const auto scaling = commutes_with_scaling(d);
    std::string note = "Z8 δ=" + d.label() + ": every proper ideal 1abs=" + yes_no(all) +
                       ", (*)=" + yes_no(satisfies_star(d).holds) + ", δ(Jac)=Jac=" + yes_no(preserves_jacobson(d).holds) +
                       ", scaling=" + yes_no(scaling.holds);
    if (!scaling.holds) note += " (first failure x=" + z8->name(*scaling.element) + ", I=" + L[*scaling.ideal].to_string() + ")";
    note += ", Jac²=" + L[L.product(A.jacobson(), A.jacobson())].to_string();
    out.notes.push_back(note);
  }
}

void loc_example(const Workspace&, Partial& out) {
  const auto z36 = make_zn(36);
  const auto& L = z36->lattice();
  const auto delta = make_plus_fixed(z36, L[L.principal(3)]);
  const auto i = L.principal(6);
  const auto loc = localize(z36, MultiplicativeSet::complement_of_prime(z36, L[L.principal(2)]));
  const auto induced = induced_localization(delta, loc);
  RingAnalysis A(z36), B(loc.ring);
  const auto& before = A.verdict(kOneAbs, i, delta.at(i));
  const auto e = loc.extend(i);
  const bool after = B.holds(kOneAbs, e, induced.delta.at(e));
  std::string w;
  for (auto x : before.witness) w += (w.empty() ? "" : ",") + z36->name(x);
  out.notes.push_back("Z36 δ=plus:(3), I=(6), S=R∖(2): I 1abs=" + yes_no(before.holds) + " (witness " + w + "); S⁻¹I=" +
                      loc.ring->lattice()[e].to_string() + " in " + loc.ring->label() + " 1abs=" + yes_no(after));
  if (before.holds || !after) record(out, *z36, L[i], delta.label(), before.witness, "localization example not reproduced");
}

void xm_note(const Workspace&, Partial& out) {
  if (out.hypothesis == 0)
    out.notes.push_back("witness search: no (ring, δ, x) satisfies the hypotheses among " +
                        std::to_string(out.instances) + " nonzero prime-element candidates");
  else
    out.notes.push_back("witness search: " + std::to_string(out.hypothesis) + " instances satisfy the hypotheses");
}

using EntryFn = void (*)(Ctx&);
using GlobalFn = void (*)(const Workspace&, Partial&);

struct Theorem {
  const char* id;
  EntryFn per_entry;
  GlobalFn global;
};

const std::vector<Theorem>& theorems() {
  static const std::vector<Theorem> list = {
      {"T-DEF-EQ", t_def_eq, nullptr},
      {"T-CHAIN", t_chain, nullptr},
      {"T-MONO", t_mono, nullptr},
      {"T-2ABS", t_2abs, nullptr},
      {"T-SEMI", t_semi, nullptr},
      {"T-LOCAL", t_local, nullptr},
      {"T-XM", t_xm, xm_note},
      {"T-COLON", t_colon, nullptr},
      {"T-M2", t_m2, nullptr},
      {"T-CHAINED", t_chained, nullptr},
      {"T-ARITH", t_arith, nullptr},
      {"T-PMAX", t_pmax, nullptr},
      {"T-SQRT", t_sqrt, nullptr},
      {"T-IDEM", t_idem, nullptr},
      {"T-INTER", t_inter, nullptr},
      {"T-PRINC", t_princ, nullptr},
      {"T-CHAR", t_char, char_note},
      {"T-CHAR-COR", t_char_cor, nullptr},
      {"T-SPEC", t_spec, nullptr},
      {"T-HOM", t_hom, nullptr},
      {"T-QUOT", t_quot, nullptr},
      {"T-LOC", t_loc, loc_example},
      {"T-PROD", t_prod, prod_note},
      {"T-PROD-EX", nullptr, prod_example},
      {"T-TRIV", [](Ctx& c) { t_triv(c, false); }, nullptr},
      {"T-TRIV-COR", [](Ctx& c) { t_triv(c, true); }, nullptr},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& t : theorems()) v.emplace_back(t.id);
    return v;
  }();
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

TheoremReport verify(const std::string& theorem_id, const Workspace& workspace) {
  const auto& list = theorems();
  auto it = std::find_if(list.begin(), list.end(), [&](const Theorem& t) { return theorem_id == t.id; });
  if (it == list.end()) throw PreconditionError("unknown theorem id '" + theorem_id + "'");

  const auto start = std::chrono::steady_clock::now();
  Partial total;
  if (it->per_entry) {
    std::vector<Partial> parts(workspace.size());
    parallel_for(workspace.size(), workspace.jobs(), [&](std::size_t i) {
      Ctx ctx(workspace, i, parts[i]);
      it->per_entry(ctx);
    });
    for (auto& p : parts) {
      total.instances += p.instances;
      total.hypothesis += p.hypothesis;
      total.failures += p.failures;
      for (auto& f : p.recorded)
        if (total.recorded.size() < TheoremReport::kMaxRecordedFailures) total.recorded.push_back(std::move(f));
      for (auto& n : p.notes) total.notes.push_back(std::move(n));
    }
  }
  if (it->global) it->global(workspace, total);

  TheoremReport r;
  r.theorem_id = theorem_id;
  r.instances_checked = total.instances;
  r.hypothesis_satisfied = total.hypothesis;
  r.failure_count = total.failures;
  r.conclusion_failures = std::move(total.recorded);
  r.notes = std::move(total.notes);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SearchHit> search(const Query& query, const Workspace& workspace) {
  std::vector<std::vector<SearchHit>> parts(workspace.size());
  const bool with_delta = query.depends_on_delta();
  parallel_for(workspace.size(), workspace.jobs(), [&](std::size_t e) {
    const auto& A = workspace.analysis(e);
    const auto& deltas = workspace.entry(e).expansions;
    for (auto i : A.lattice().proper()) {
      if (!with_delta) {
        if (query.evaluate([&](Predicate p) { return A.holds(p, i, i); })) parts[e].push_back({e, i, std::nullopt});
        continue;
      }
      for (std::size_t k = 0; k < deltas.size(); ++k) {
        const auto d = deltas[k].at(i);
        if (query.evaluate([&](Predicate p) { return A.holds(p, i, d); })) parts[e].push_back({e, i, k});
      }
    }
  });
  std::vector<SearchHit> hits;
  for (auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
  return hits;
}

}  // namespace ringlab
