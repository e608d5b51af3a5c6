"""Exact identity suites shared by ``cvect selftest`` and the acceptance tests.

Every check returns a :class:`CheckResult` counting the cases examined and
recording the failing ones.  All comparisons are exact.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

from cvect.buttin import (
    SleClass,
    buttin_bracket,
    d3xi,
    delta,
    delta_inv,
    le_field,
    sle_classify,
    xi123,
)
from cvect.exceptional.basis import euler, f_element, g0, g_minus1
from cvect.exceptional.embeddings import a_field, alpha_field, i1_field, i2_field, lift
from cvect.exceptional.membership import in_cvect, membership
from cvect.exceptional.pairs import (
    GluedPair,
    decompose,
    pair_degree_images,
    phi_auto,
    regrade,
    sle_zero_basis,
)
from cvect.exceptional.table import a_apply, bracket_pair, bracket_pair_oracle, mixed_bracket, mixed_bracket_oracle
from cvect.linalg import EchelonBasis
from cvect.prolong import Relation, STANDARD_INPUTS, dimension_table, prolong_to, subspace_compare
from cvect.sampling import monomials, random_bihomogeneous
from cvect.superpoly import CHART_33, CHART_43, SuperPoly, mul
from cvect.superfield import SuperField, commutator, commutator_oracle

MAX_REPORTED = 5


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    info: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures and self.cases > 0

    def record(self, passed: bool, label: Callable[[], str] | str) -> None:
        self.cases += 1
        if not passed:
            self.failures.append(label() if callable(label) else label)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.info})" if self.info else ""
        line = f"{status} {self.name}: {self.cases - len(self.failures)}/{self.cases}{extra}"
        for f in self.failures[:MAX_REPORTED]:
            line += f"\n    {f}"
        return line


def _sign(p: int) -> int:
    return -1 if p else 1


def _homogeneous(rng: random.Random, parity: int | None = None, **kw) -> SuperPoly:
    while True:
        f = random_bihomogeneous(rng, **kw)
        if parity is None or f.parity == parity:
            return f


def _br(f, g):
    return buttin_bracket(f, g, keep_constant=True)


# -- 1. prolongation -------------------------------------------------------------

def check_prolongation(max_degree: int = 1) -> CheckResult:
    res = CheckResult("prolongation dimensions")
    tables = {}
    for name in ("vect03", "cvect03"):
        tables[name] = dimension_table(prolong_to(STANDARD_INPUTS[name](), max_degree))
    expected = {"vect03": {-1: (4, 3), 0: (12, 12)}, "cvect03": {-1: (4, 3), 0: (13, 12)}}
    for name, exp in expected.items():
        got = {d: (e, o) for d, e, o in tables[name]}
        for d, dims in exp.items():
            res.record(got[d] == dims, f"{name} g_{d}: got {got[d]}, expected {dims}")
    res.info = "; ".join(f"{n} " + " ".join(f"g{d}=({e}|{o})" for d, e, o in t) for n, t in tables.items())
    return res


# -- 2. membership ground truth ---------------------------------------------------

def check_membership_ground_truth() -> CheckResult:
    res = CheckResult("membership ground truth")
    for name, D in list(g_minus1().items()) + list(g0().items()):
        rep = membership(D, "vect")
        res.record(rep.ok, lambda: f"{name} violates {rep.violations}")
    rep = membership(euler(), "vect")
    res.record(rep.failed() == ["eq7"], lambda: f"d fails {rep.failed()}, expected only eq7")
    res.record(membership(euler(), "cvect").ok, "d must pass eq1..eq6")
    rep = membership(f_element(), "cvect")
    res.record(rep.ok, lambda: f"F violates {rep.violations}")
    return res


# -- 3. completeness of realized pairs ----------------------------------------------

def check_completeness(max_degree: int = 3) -> CheckResult:
    res = CheckResult("realized pairs span cvect components")
    comps = prolong_to(STANDARD_INPUTS["cvect03"](), max_degree, check_closure=False)
    dims = []
    for c in comps:
        i1s, i2s = pair_degree_images(c.degree)
        cmp = subspace_compare(i1s + i2s, list(c.basis))
        dims.append(f"g{c.degree}:{cmp.dim_b}")
        res.record(cmp.relation is Relation.EQUAL,
                   lambda: f"degree {c.degree}: {cmp.relation.value} ({cmp.dim_a} vs {cmp.dim_b})")
        bad = [D for D in c.basis if not in_cvect(D)]
        res.record(not bad, lambda: f"degree {c.degree}: {len(bad)} basis fields violate eq1..eq6")
    res.info = " ".join(dims)
    return res


def check_i1_onto_vect(max_degree: int = 3) -> CheckResult:
    """The image of ``i1`` equals the vect(0|3)_* prolongation degree by degree."""
    res = CheckResult("i1 image equals vect(0|3)_*")
    for c in prolong_to(STANDARD_INPUTS["vect03"](), max_degree, check_closure=False):
        i1s, _ = pair_degree_images(c.degree)
        cmp = subspace_compare(i1s, list(c.basis))
        res.record(cmp.relation is Relation.EQUAL, lambda: f"degree {c.degree}: {cmp.relation.value}")
    return res


# -- 4. homomorphism identities ---------------------------------------------------

def check_le_homomorphism(n: int = 200, seed: int = 1) -> CheckResult:
    res = CheckResult("Le_{f,g} = [Le_f, Le_g]")
    rng = random.Random(seed)
    for _ in range(n):
        f, g = random_bihomogeneous(rng), random_bihomogeneous(rng)
        ok = le_field(_br(f, g)) == commutator_oracle(le_field(f), le_field(g))
        res.record(ok, lambda: f"f={f}, g={g}")
    return res


def i2_identity_failures(f: SuperPoly, g: SuperPoly) -> list[str]:
    """Which of the five component identities of the i2 homomorphism fail for ``(f, g)``."""
    pf, pg = f.parity, g.parity
    sf, sfg = _sign(pf), _sign(pf & pg)
    F, G = lift(f), lift(g)
    fg = _br(f, g)
    out = []
    if le_field(lift(fg)) != commutator(le_field(F), le_field(G)):
        out.append("(Le)")
    Af, Ag = a_field(f), a_field(g)
    rhs = (commutator(le_field(F), Ag) + commutator(Af, le_field(G))
           - (lift(delta(f)) * Ag + (lift(delta(g)) * Af).scale(sfg)).scale(sf))
    if a_field(fg) != rhs:
        out.append("(A_bracket)")
    rhs = (lift(d3xi(f)) * Ag + (lift(d3xi(g)) * Af).scale(sfg)).scale(sf)
    if commutator(Af, Ag) != rhs:
        out.append("([A,A])")
    if delta(fg) != _br(delta(f), g) - _br(f, delta(g)).scale(sf):
        out.append("(Delta)")
    rhs = (_br(d3xi(f), g) - _br(f, d3xi(g)).scale(sf)
           - (a_apply(f, delta(g)) + a_apply(g, delta(f)).scale(sfg)).scale(sf)
           + mul(delta(f), d3xi(g)) - mul(d3xi(f), delta(g)))
    if d3xi(fg) != rhs:
        out.append("(D3)")
    if i2_field(fg) != commutator(i2_field(f), i2_field(g)):
        out.append("(i2)")
    return out


def check_i2_identities(n: int = 200, seed: int = 2) -> CheckResult:
    res = CheckResult("i2 homomorphism identities")
    rng = random.Random(seed)
    for _ in range(n):
        f, g = random_bihomogeneous(rng), random_bihomogeneous(rng)
        bad = i2_identity_failures(f, g)
        res.record(not bad, lambda: f"f={f}, g={g}: {bad}")
    return res


def check_i1_homomorphism(n: int = 200, seed: int = 3) -> CheckResult:
    res = CheckResult("i1{f,g} = [i1 f, i1 g]")
    rng = random.Random(seed)
    for _ in range(n):
        f, g = random_bihomogeneous(rng), random_bihomogeneous(rng)
        ok = i1_field(_br(f, g)) == commutator(i1_field(f), i1_field(g))
        res.record(ok, lambda: f"f={f}, g={g}")
    return res


def check_commutator_oracle(n: int = 100, seed: int = 4) -> CheckResult:
    res = CheckResult("fast commutator = composition oracle")
    rng = random.Random(seed)
    for _ in range(n):
        A = realize_random(rng)
        B = realize_random(rng)
        res.record(commutator(A, B) == commutator_oracle(A, B), lambda: f"A={A}, B={B}")
    return res


# -- lemmas ---------------------------------------------------------------------------

def alpha_as_pair(g: SuperPoly) -> GluedPair:
    """Expression of ``alpha_g`` through the two embeddings, by odd degree of ``g``."""
    out = GluedPair.zero()
    for k, part in g.odd_degree_parts().items():
        if k == 1:
            out = out + GluedPair(-mul(delta(part), xi123()), 0 * part)
        elif k == 2:
            out = out + GluedPair(part, 0 * part)
        elif k == 3:
            t = delta_inv(d3xi(part))
            out = out + GluedPair(-t, t)
    return out


def i1_split(h: SuperPoly) -> tuple[SuperPoly, SuperPoly]:
    """``(a, b)`` with ``i1 h = i2 a + alpha_b``, by odd degree of ``h``."""
    a = SuperPoly.zero(CHART_33)
    b = SuperPoly.zero(CHART_33)
    for k, part in h.odd_degree_parts().items():
        if k == 0:
            a = a + delta(mul(part, xi123()))
        elif k == 1:
            a = a + part
            b = b + mul(delta(part), xi123())
        elif k == 2:
            b = b + part
        else:
            b = b + delta_inv(d3xi(part))
    return a, b


def check_lemma_alpha(n: int = 40, seed: int = 5) -> CheckResult:
    res = CheckResult("alpha_g through i1 and i2")
    rng = random.Random(seed)
    for k in range(4):
        for _ in range(n // 4):
            g = random_bihomogeneous(rng, deg_xi=k)
            res.record(alpha_field(g) == alpha_as_pair(g).realize(), lambda: f"g={g}")
    return res


def check_lemma_i1_split(n: int = 40, seed: int = 6) -> CheckResult:
    res = CheckResult("i1 h = i2 a(h) + alpha_b(h)")
    rng = random.Random(seed)
    for k in range(4):
        for _ in range(n // 4):
            h = random_bihomogeneous(rng, deg_xi=k)
            a, b = i1_split(h)
            res.record(i1_field(h) == i2_field(a) + alpha_field(b), lambda: f"h={h}")
    return res


def check_lemma_i2_alpha(n: int = 60, seed: int = 7) -> CheckResult:
    res = CheckResult("[i2 f, alpha_g] = i2 F + alpha_G")
    rng = random.Random(seed)
    for _ in range(n):
        f, g = random_bihomogeneous(rng), random_bihomogeneous(rng)
        s = _sign((f.parity ^ 1) & (g.parity ^ 1))
        F = mul(f, d3xi(g)) - a_apply(g, f).scale(s)
        G = -mul(f, delta(g))
        ok = commutator(i2_field(f), alpha_field(g)) == i2_field(F) + alpha_field(G)
        res.record(ok, lambda: f"f={f}, g={g}")
    return res


# -- 5. table -------------------------------------------------------------------------

def check_table(samples: int = 20, seed: int = 8, max_deg_u: int = 3) -> CheckResult:
    res = CheckResult("mixed-bracket table vs oracle")
    rng = random.Random(seed)
    for df, dh in itertools.product(range(4), repeat=2):
        for _ in range(samples):
            f = random_bihomogeneous(rng, max_deg_u=max_deg_u, deg_xi=df)
            h = random_bihomogeneous(rng, max_deg_u=max_deg_u, deg_xi=dh)
            ok = mixed_bracket(f, h) == mixed_bracket_oracle(f, h)
            res.record(ok, lambda: f"cell ({df},{dh}): f={f}, h={h}")
    return res


# -- 6. regrading and phi -------------------------------------------------------------

def sle_zero_basis_polys(max_deg_u: int = 3) -> list[SuperPoly]:
    out = []
    for du in range(max_deg_u + 1):
        for dx in range(4):
            if du + dx == 0:
                continue
            for row in sle_zero_basis(du, dx).echelon():
                out.append(SuperPoly(CHART_33, row))
    return out


def check_regrade_square(max_deg_u: int = 3) -> CheckResult:
    res = CheckResult("R^2 f = (-1)^{p(f)+1} f on sle°(3)")
    for f in sle_zero_basis_polys(max_deg_u):
        ok = regrade(regrade(f)) == f.scale(-_sign(f.parity))
        res.record(ok, lambda: f"f={f}")
    return res


def random_pair(rng: random.Random, max_deg_u: int = 2) -> GluedPair:
    """A random pair of definite parity, each slot bihomogeneous or zero."""
    p = rng.randint(0, 1)
    slots = []
    for _ in range(2):
        if rng.random() < 0.15:
            slots.append(SuperPoly.zero(CHART_33))
        else:
            slots.append(_homogeneous(rng, p, max_deg_u=max_deg_u))
    return GluedPair(*slots)


def pair_parity(p: GluedPair) -> int:
    return (p.f.parity if p.f else p.g.parity) ^ 1


def realize_random(rng: random.Random) -> SuperField:
    return random_pair(rng).realize()


def check_phi_automorphism(n: int = 100, seed: int = 9) -> CheckResult:
    res = CheckResult("phi is a bracket automorphism")
    rng = random.Random(seed)
    for _ in range(n):
        p, q = random_pair(rng), random_pair(rng)
        ok = phi_auto(bracket_pair(p, q)) == bracket_pair(phi_auto(p), phi_auto(q))
        res.record(ok, lambda: f"p={p}, q={q}")
    return res


def check_pair_bracket_oracle(n: int = 100, seed: int = 10) -> CheckResult:
    res = CheckResult("pair bracket vs realized commutator")
    rng = random.Random(seed)
    for _ in range(n):
        p, q = random_pair(rng), random_pair(rng)
        res.record(bracket_pair(p, q) == bracket_pair_oracle(p, q), lambda: f"p={p}, q={q}")
    return res


# -- 7. vect criterion -------------------------------------------------------------------

def check_vect_criterion(max_deg_u: int = 3) -> CheckResult:
    res = CheckResult("i2 f in vect iff Delta f = 0 and D3 f = 0")
    both = [0, 0]
    for du in range(max_deg_u + 1):
        for dx in range(4):
            if du + dx == 0:
                continue
            for m in monomials(CHART_33, du, dx):
                f = SuperPoly(CHART_33, {m: 1})
                expected = sle_classify(f) is SleClass.SLE_DEGREE
                got = membership(i2_field(f), "vect").ok
                both[expected] += 1
                res.record(got == expected, lambda: f"f={f}: membership {got}, classifier {expected}")
    res.info = f"{both[1]} in, {both[0]} out"
    return res


# -- 8. generation from F ------------------------------------------------------------------

def generated_components(generators: list[SuperField], max_degree: int) -> dict[int, EchelonBasis]:
    """Graded spans of the subalgebra generated by homogeneous fields, truncated above ``max_degree``."""
    spans: dict[int, EchelonBasis] = {}
    elems: dict[int, list[SuperField]] = {}

    def add(D: SuperField) -> bool:
        d = D.degree
        if d > max_degree:
            return False
        if spans.setdefault(d, EchelonBasis()).add(D.to_vector()):
            elems.setdefault(d, []).append(D)
            return True
        return False

    queue = [D for D in generators if add(D)]
    while queue:
        new = []
        for A in queue:
            for d in sorted(elems):
                if A.degree + d > max_degree:
                    continue
                for B in list(elems[d]):
                    C = commutator(A, B)
                    if C and add(C):
                        new.append(C)
        queue = new
    return spans


def check_generation(max_degree: int = 2) -> CheckResult:
    """Subalgebra generated by ``{F}`` and ``g_-1``, read literally."""
    res = CheckResult("{F} and g_-1 generate g_0 + C d")
    F = f_element()
    for i in (1, 2, 3):
        X = SuperField.basis(CHART_43, f"x{i}")
        res.record(commutator(X, F) == -g0()[f"d_eta{i}"], f"[d_x{i}, F] != -d_eta{i}")
        Xu = SuperField.basis(CHART_43, f"u{i}")
        res.record(not commutator(Xu, F), f"[d_u{i}, F] != 0")
    f_y = commutator(SuperField.basis(CHART_43, "y"), F)
    target = EchelonBasis(D.to_vector() for D in list(g0().values()) + [euler()])
    in_g0 = EchelonBasis(D.to_vector() for D in g0().values())
    res.record(not in_g0.contains(f_y.to_vector()) and target.contains(f_y.to_vector()),
               "[d_y, F] must lie in g_0 + C d but not in g_0")
    spans = generated_components(list(g_minus1().values()) + [F], max_degree)
    zero = spans.get(0, EchelonBasis())
    res.record(zero.rank == 25, f"degree-0 rank {zero.rank}, expected 25")
    res.record(all(target.contains(r) for r in zero.rows.values()), "generated degree 0 leaves g_0 + C d")
    res.info = "generated ranks " + " ".join(f"deg{d}:{spans[d].rank}" for d in sorted(spans))
    return res


def ideal_components(seed: SuperField, comps, max_degree: int) -> dict[int, EchelonBasis]:
    """Graded spans of the ideal generated by ``seed`` inside the truncated components ``comps``."""
    spans: dict[int, EchelonBasis] = {}
    by_degree = {c.degree: c.basis for c in comps}

    def add(D: SuperField) -> bool:
        return spans.setdefault(D.degree, EchelonBasis()).add(D.to_vector())

    queue = [seed] if add(seed) else []
    while queue:
        new = []
        for A in queue:
            for d, basis in by_degree.items():
                if A.degree + d > max_degree:
                    continue
                for B in basis:
                    C = commutator(B, A)
                    if C and add(C):
                        new.append(C)
        queue = new
    return spans


def check_ideal_of_f(max_degree: int = 1) -> CheckResult:
    """The ideal generated by ``F`` fills every computed component (the simplicity mechanism)."""
    res = CheckResult("ideal generated by F fills cvect")
    comps = prolong_to(STANDARD_INPUTS["cvect03"](), max_degree, check_closure=False)
    spans = ideal_components(f_element(), comps, max_degree)
    for c in comps:
        got = spans.get(c.degree, EchelonBasis()).rank
        res.record(got == len(c.basis), f"degree {c.degree}: ideal rank {got}, component {len(c.basis)}")
    res.info = " ".join(f"deg{d}:{spans[d].rank}" for d in sorted(spans))
    return res


# -- 9. intersection of the images -----------------------------------------------------------

def check_intersection(max_degree: int = 2) -> CheckResult:
    res = CheckResult("dim(i1 image cap i2 image) = dim sle°")
    dims = []
    for k in range(-1, max_degree + 1):
        i1s, i2s = pair_degree_images(k)
        cmp = subspace_compare(i1s, i2s)
        total = k + 2
        expected = sum(sle_zero_basis(total - dx, dx).rank for dx in range(4) if total - dx >= 0)
        dims.append(f"d{k}:{cmp.dim_intersection}")
        res.record(cmp.dim_intersection == expected,
                   lambda: f"degree {k}: intersection {cmp.dim_intersection}, sle° {expected}")
    res.info = " ".join(dims)
    return res


# -- 10. Jacobi -------------------------------------------------------------------------------

def random_field(rng: random.Random, parity: int, max_deg: int = 2, n_terms: int = 3) -> SuperField:
    """Random parity-homogeneous field on the (4|3) chart with polynomial coefficients."""
    chart = CHART_43
    while True:
        comps: dict[str, SuperPoly] = {}
        for _ in range(n_terms):
            name = rng.choice(chart.names)
            want = parity ^ chart.var(name).parity
            de = rng.randint(0, max_deg)
            dx = rng.choice([d for d in range(4) if d % 2 == want])
            pool = monomials(chart, de, dx)
            m = rng.choice(pool)
            c = rng.choice([-2, -1, 1, 2, 3])
            comps[name] = comps.get(name, SuperPoly.zero(chart)) + SuperPoly(chart, {m: c})
        D = SuperField(chart, comps)
        if D:
            return D


def jacobi_defect(a, b, c, pa: int, pb: int, br) -> object:
    """``[a,[b,c]] - [[a,b],c] - (-1)^{pa pb} [b,[a,c]]``."""
    return br(a, br(b, c)) - br(br(a, b), c) - br(b, br(a, c)).scale(_sign(pa & pb))


def check_jacobi_fields(n: int = 200, seed: int = 11) -> CheckResult:
    res = CheckResult("graded Jacobi on fields")
    rng = random.Random(seed)
    for _ in range(n):
        ps = [rng.randint(0, 1) for _ in range(3)]
        a, b, c = (random_field(rng, p) for p in ps)
        res.record(not jacobi_defect(a, b, c, ps[0], ps[1], commutator), lambda: f"{a}; {b}; {c}")
    return res


def check_jacobi_pairs(n: int = 100, seed: int = 12) -> CheckResult:
    res = CheckResult("graded Jacobi on glued pairs")
    rng = random.Random(seed)
    for _ in range(n):
        a, b, c = (random_pair(rng, max_deg_u=2) for _ in range(3))
        d = jacobi_defect(a, b, c, pair_parity(a), pair_parity(b), bracket_pair)
        res.record(d.is_zero(), lambda: f"{a}; {b}; {c}")
    return res


def check_membership_closure(n: int = 60, seed: int = 13) -> CheckResult:
    res = CheckResult("cvect closed under the bracket")
    rng = random.Random(seed)
    for _ in range(n):
        A, B = realize_random(rng), realize_random(rng)
        res.record(in_cvect(A) and in_cvect(B) and in_cvect(commutator(A, B)), lambda: f"A={A}, B={B}")
    return res


def check_decompose_roundtrip(n: int = 60, seed: int = 14) -> CheckResult:
    res = CheckResult("decompose(realize p) realizes p")
    rng = random.Random(seed)
    for _ in range(n):
        p = random_pair(rng, max_deg_u=3)
        q = decompose(p.realize())
        res.record(q.realize() == p.realize() and q.same_slots(q.canonical()), lambda: f"p={p}")
    return res


# -- registry ------------------------------------------------------------------------------------

SUITES: dict[str, Callable[[], CheckResult]] = {
    "prolongation": check_prolongation,
    "membership": check_membership_ground_truth,
    "completeness": check_completeness,
    "i1_onto_vect": check_i1_onto_vect,
    "le_homomorphism": check_le_homomorphism,
    "i2_identities": check_i2_identities,
    "i1_homomorphism": check_i1_homomorphism,
    "commutator_oracle": check_commutator_oracle,
    "lemma_alpha": check_lemma_alpha,
    "lemma_i1_split": check_lemma_i1_split,
    "lemma_i2_alpha": check_lemma_i2_alpha,
    "table": check_table,
    "regrade_square": check_regrade_square,
    "phi_automorphism": check_phi_automorphism,
    "pair_bracket": check_pair_bracket_oracle,
    "vect_criterion": check_vect_criterion,
    "generation": check_generation,
    "ideal_of_f": check_ideal_of_f,
    "intersection": check_intersection,
    "jacobi_fields": check_jacobi_fields,
    "jacobi_pairs": check_jacobi_pairs,
    "closure": check_membership_closure,
    "decompose": check_decompose_roundtrip,
}


def run_all(names=None) -> list[CheckResult]:
    return [SUITES[n]() for n in (names or SUITES)]
