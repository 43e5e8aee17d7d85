"""Verification suites, one per acceptance criterion.

Every suite takes the same keyword parameters (see ``SuiteParams``); ``n`` and
``field`` restrict or override the built-in defaults where the suite allows it.
All randomness is derived from ``seed`` through string-tagged generators.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb
from typing import Callable

from . import commutator as cm
from .diamond import badline_dependence, diamond_conditions, expected_badline_drop, in_bad_union, is_diamond
from .errors import DomainError, SearchExhausted
from .fields import GF, QQ, Field
from .image import (
    check_n2_vanishing,
    jacobian_rank,
    n4_scalar_square,
    n6_image_equation,
    n6_quartic,
)
from .linalg import DenseMatrix, determinant, pfaffian, rank
from .mc import SampleConfig, mc_codim_estimate
from .monad import (
    PencilTensor,
    build_resolution,
    determinant_form,
    discriminant,
    is_jumping_line,
    pencil_eval,
    pencil_with_jumping_line,
    random_pencil,
    rank_h0f,
    splitting_h0,
    z_matrix,
)
from .report import Report
from .symplectic import (
    J_times,
    Partition,
    is_skew_hamiltonian,
    normal_form_skewham,
    partitions,
    random_skew,
    random_symmetric,
    standard_J,
)


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteParams:
    n: int | None = None
    r: int | None = None
    field: Field | None = None
    seed: int = 0
    samples: int | None = None
    workers: int = 1

    def ns(self, default: tuple[int, ...], allowed: Callable[[int], bool] = lambda n: True) -> tuple[int, ...]:
        if self.n is None:
            return default
        if self.n < 2 or self.n % 2 or not allowed(self.n):
            raise UsageError(f"n={self.n} is not valid for this suite")
        return (self.n,)

    def rng(self, *tag) -> random.Random:
        return random.Random(":".join(map(str, (self.seed,) + tag)))


def _F(p: SuiteParams) -> Field:
    return p.field or QQ


def _regular_normal_form(n: int, rng: random.Random, F: Field, d: Partition | None = None):
    """A random partition of n/2 (unless given) with distinct random eigenvalues."""
    if d is None:
        d = rng.choice(list(partitions(n // 2)))
    pool = range(F.characteristic) if F.characteristic else range(-50, 51)
    lams = rng.sample(pool, len(d.parts))
    W, B = normal_form_skewham(d, lams, F)
    return d, W, B


# -- 1 ------------------------------------------------------------------------------

def suite_n2(p: SuiteParams, rep: Report):
    samples = p.samples or 1000
    fields = [p.field] if p.field else [QQ, GF(101)]
    rep.params.update(n="2", samples=str(samples))
    for F in fields:
        rep.add(f"phi vanishes for n=2 over {F.name}", check_n2_vanishing(samples, p.seed, F), samples=samples)


# -- 2 ------------------------------------------------------------------------------

def suite_phi_identities(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 500
    for n in p.ns((4, 6, 8)):
        rng = p.rng("phi-identities", n, F)
        sym_fail = bracket_fail = 0
        for _ in range(samples):
            A = random_skew(n, rng, F)
            B = random_skew(n, rng, F)
            S = cm.phi(A, B)
            sym_fail += not S.is_symmetric()
            bracket_fail += S != -J_times(cm.commutator(J_times(A), J_times(B)))
        rep.add(f"phi symmetric n={n}", sym_fail == 0, samples=samples, failures=sym_fail)
        rep.add(f"phi = -J[JA,JB] n={n}", bracket_fail == 0, samples=samples, failures=bracket_fail)


# -- 3 ------------------------------------------------------------------------------

def suite_centralizer(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 50
    for n in p.ns((4, 6, 8, 10)):
        rng = p.rng("centralizer", n, F)
        dims, bad_span = set(), 0
        for _ in range(samples):
            _, W, B = _regular_normal_form(n, rng, F)
            dims.add(cm.centralizer_dim(B))
            basis = cm.centralizer_basis(B)
            Phi = cm.phiB_matrix(B)
            in_kernel = all(not any(Phi @ cm.skew_coords(A)) for A in basis)
            independent = rank(DenseMatrix([cm.skew_coords(A) for A in basis], F)) == n // 2
            bad_span += not (in_kernel and independent and is_skew_hamiltonian(W))
        rep.add(f"centralizer dim = n/2 n={n}", dims == {n // 2}, samples=samples,
                observed=",".join(map(str, sorted(dims))))
        rep.add(f"centralizer basis spans the kernel n={n}", bad_span == 0, samples=samples, failures=bad_span)


# -- 4 ------------------------------------------------------------------------------

def _rank_law_instance(n: int, i: int, rng: random.Random, F: Field, seed: int):
    """Cycle through generic pencils, (A, J, B) of prescribed phi-rank, and (A, Q, A)."""
    kind = i % 3
    if kind == 0:
        while True:
            f = PencilTensor(*(random_skew(n, rng, F) for _ in range(3)))
            if determinant(f.Q) != 0:
                return f, None
    if kind == 1:
        # ranks the kernel-forcing construction reaches reliably
        targets = [n] if n == 4 else [n, n - 1, n - 2]
        r = targets[(i // 3) % len(targets)]
        A, B = cm.construct_rank_pair(n, r, seed * 1000 + i, F)
        return PencilTensor(A, standard_J(n, F), B), (A, B)
    A = random_skew(n, rng, F)
    while True:
        Q = random_skew(n, rng, F)
        if determinant(Q) != 0:
            return PencilTensor(A, Q, A), None


def suite_rank_law(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 200
    for n in p.ns((4, 6, 8)):
        rng = p.rng("rank-law", n, F)
        fails = phi_fails = 0
        seen = set()
        for i in range(samples):
            f, pair = _rank_law_instance(n, i, rng, F, p.seed)
            h = rank_h0f(f)
            seen.add(h - 2 * n)
            fails += h != 2 * n + rank(z_matrix(f))
            if pair is not None:
                phi_fails += h != 2 * n + rank(cm.phi(*pair))
        rep.add(f"rank H0(f) = 2n + rank Z n={n}", fails == 0, samples=samples, failures=fails,
                ranks_seen=",".join(map(str, sorted(seen))))
        rep.add(f"rank H0(A,J,B) = 2n + rank phi(A,B) n={n}", phi_fails == 0, failures=phi_fails)


# -- 5, 6 ---------------------------------------------------------------------------

def suite_diamond(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 200
    for n in p.ns((4, 6, 8, 10)):
        rng = p.rng("diamond", n, F)
        for d in partitions(n // 2):
            _, _, B = _regular_normal_form(n, rng, F, d)
            fails = sum(not is_diamond(cm.phi(random_skew(n, rng, F), B), d) for _ in range(samples))
            rep.add(f"phi(A, B_d) is diamond n={n} d={d}", fails == 0, samples=samples, failures=fails)
            C = DenseMatrix(diamond_conditions(d), F)
            annihilated = (C @ cm.phiB_matrix(B)).is_zero()
            rep.add(f"{C.nrows} diamond functionals vanish on the image n={n} d={d}",
                    annihilated and C.nrows == 3 * n // 2, functionals=C.nrows)


def suite_image_codim(p: SuiteParams, rep: Report):
    F = _F(p)
    for n in p.ns((4, 6, 8, 10)):
        rng = p.rng("image-codim", n, F)
        expected = comb(n + 1, 2) - 3 * n // 2
        for d in partitions(n // 2):
            _, _, B = _regular_normal_form(n, rng, F, d)
            got = rank(cm.phiB_matrix(B))
            rep.add(f"dim im phi^B = C(n+1,2) - 3n/2 n={n} d={d}", got == expected, rank=got, expected=expected)


# -- 7, 8, 9 ------------------------------------------------------------------------

def suite_image_n4(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 500
    rep.params.update(n="4")
    rng = p.rng("image-n4", F)
    fails = sum(not n4_scalar_square(cm.phi(random_skew(4, rng, F), random_skew(4, rng, F)))[0]
                for _ in range(samples))
    rep.add("(J phi(A,B))^2 is scalar", fails == 0, samples=samples, failures=fails)
    S = random_symmetric(4, rng, F, bound=9)
    ok, _ = n4_scalar_square(S)
    rep.add("random symmetric matrix fails the law", not ok, entries=" ".join(map(str, S.rows[0])))


def suite_image_n6(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 500
    rep.params.update(n="6")
    rng = p.rng("image-n6", F)
    plus = minus = 0
    for _ in range(samples):
        S = cm.phi(random_skew(6, rng, F), random_skew(6, rng, F))
        plus += n6_quartic(S) != 0
        minus += n6_image_equation(S) != 0
    rep.add("gamma4^2 + 4 gamma2 vanishes on the image", plus == 0, samples=samples, nonzero=plus)
    I6 = DenseMatrix.identity(6, F)
    rep.add("gamma4^2 + 4 gamma2 at the identity is 21", n6_quartic(I6) == F(21), value=n6_quartic(I6))
    rep.add("gamma4^2 - 4 gamma2 vanishes on the image", minus == 0, samples=samples, nonzero=minus)


JACOBIAN_RANKS = {4: 7, 6: 20, 8: 36, 10: 55}


def suite_dominance(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 50
    for n in p.ns((4, 6, 8, 10)):
        rng = p.rng("dominance", n, F)
        ranks = {jacobian_rank(random_skew(n, rng, F), random_skew(n, rng, F)) for _ in range(samples)}
        expected = JACOBIAN_RANKS.get(n, comb(n + 1, 2))
        rep.add(f"jacobian rank n={n}", ranks == {expected}, samples=samples,
                observed=",".join(map(str, sorted(ranks))), expected=expected)


# -- 10 -----------------------------------------------------------------------------

def suite_corank_codim(p: SuiteParams, rep: Report):
    F = p.field if p.field and p.field.characteristic else GF(101)
    pairs = 10
    samples = p.samples or 100_000
    rep.params.update(p=str(F.characteristic), mc_samples=str(samples))
    for n in p.ns((8, 10), allowed=lambda n: n >= 4):
        r = p.r if p.r is not None else n - 1
        if not 2 <= r <= n:
            raise UsageError(f"r={r} out of range for n={n}")
        expected = comb(n - r + 1, 2)
        certified = 0
        try:
            for k in range(pairs):
                A, B = cm.find_rank_pair(n, r, p.seed * 1000 + k, F)
                certified += cm.local_codim_certificate(A, B, r)
            found = pairs
        except SearchExhausted:
            found = k
        rep.add(f"rejection-sampled rank-{r} pairs certified n={n}", certified == pairs,
                found=found, certified=certified, codim=expected)
        try:
            A, B = cm.construct_rank_pair(n, r, p.seed, QQ)
            exact_ok = cm.local_codim_certificate(A, B, r)
        except SearchExhausted:
            exact_ok = False
        rep.add(f"constructed rank-{r} pair over Q certified n={n}", exact_ok)
        est = mc_codim_estimate(SampleConfig(n, r, F.characteristic, samples, p.seed), workers=p.workers)
        rep.add(f"Monte-Carlo codim n={n} r={r}", est.codim == expected, hits=est.hits,
                fraction=est.fraction, log_ratio=f"{est.log_ratio:.4f}", codim=est.codim, expected=expected)


# -- 11 -----------------------------------------------------------------------------

BADLINE_CASES = ((8, (2, 2)), (8, (1, 1, 1, 1)), (10, (2, 2, 1)))


def suite_bad_lines(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 100
    cases = [c for c in BADLINE_CASES if p.n is None or c[0] == p.n]
    if not cases:
        raise UsageError(f"no bad-line cases for n={p.n}")
    for n, parts in cases:
        d = Partition(parts)
        rng = p.rng("bad-lines", n, parts, F)
        basis_mismatch = []
        for k in range(n):
            L = [int(i == k) for i in range(n)]
            dep, drop = badline_dependence(d, L, F)
            if dep != in_bad_union(d, L) or drop != expected_badline_drop(d, L):
                basis_mismatch.append(f"e{k + 1}:drop={drop}")
        rep.add(f"basis lines follow the bad-union criterion n={n} d={d}", not basis_mismatch,
                mismatches=" ".join(basis_mismatch) or "none")
        rand_mismatch = 0
        for _ in range(samples):
            L = [0] * n
            while not any(L):
                L = [F(F.random(rng, 9)) for _ in range(n)]
            dep, drop = badline_dependence(d, L, F)
            rand_mismatch += dep != in_bad_union(d, L) or drop != expected_badline_drop(d, L)
        rep.add(f"random lines follow the bad-union criterion n={n} d={d}", rand_mismatch == 0,
                samples=samples, mismatches=rand_mismatch)
        drop_fail = []
        for i, (start, size) in enumerate(d.blocks()):
            a, b = start, d.offsets[i + 1] - 1 + d.half
            for mu, lam in ((1, 0), (0, 1), (rng.randint(1, 9), rng.randint(1, 9))):
                L = [0] * n
                L[a], L[b] = mu, lam
                _, drop = badline_dependence(d, L, F)
                if drop != (2 if size == 1 else 3):
                    drop_fail.append(f"block{i + 1}({mu},{lam}):drop={drop}")
        rep.add(f"bad lines drop 2 (1x1 block) or 3 n={n} d={d}", not drop_fail,
                mismatches=" ".join(drop_fail) or "none")


# -- 12, 13 -------------------------------------------------------------------------

def suite_monad(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 20
    for n in p.ns((4, 6)):
        built = coeff_fail = rank_fail = 0
        i = 0
        while built < samples:
            f = random_pencil(n, p.seed * 10_000 + i, F)
            i += 1
            if rank_h0f(f) != 3 * n:
                continue
            res = build_resolution(f, seed=p.seed)
            built += 1
            coeff_fail += any(not C.is_zero() for C in res.product_coefficients().values())
            rng = p.rng("monad-fibers", n, i, F)
            for _ in range(10):
                x = [F(F.random(rng, 20)) for _ in range(3)]
                if not any(x):
                    continue
                rank_fail += rank(res.alpha_at(x)) != n or rank(res.beta_at(x)) != n
        rep.add(f"beta alpha = 0 coefficientwise n={n}", coeff_fail == 0, instances=built, failures=coeff_fail)
        rep.add(f"fiber ranks are n n={n}", rank_fail == 0, instances=built, failures=rank_fail)
        A, B = cm.construct_rank_pair(n, n, p.seed, F)
        f = PencilTensor(A, standard_J(n, F), B)
        res = build_resolution(f, seed=p.seed)
        rep.add(f"resolution of (A, J, B) with rank phi = n, n={n}",
                all(C.is_zero() for C in res.product_coefficients().values()))


def suite_discriminant(p: SuiteParams, rep: Report):
    F = _F(p)
    samples = p.samples or 50
    for n in p.ns((2, 4, 6)):
        rng = p.rng("discriminant", n, F)
        f = random_pencil(n, p.seed, F)
        D = discriminant(f)
        rep.add(f"discriminant degree n/2 n={n}", D.degree == n // 2 and not D.is_zero(), degree=D.degree)
        pts = [tuple(F(F.random(rng, 30)) for _ in range(3)) for _ in range(samples)]
        bad = sum(D(z) != pfaffian(pencil_eval(f, z)) for z in pts)
        rep.add(f"discriminant = Pf(f(z)) n={n}", bad == 0, samples=samples, failures=bad)
        rep.add(f"discriminant^2 = det form n={n}", D * D == determinant_form(f))
        # planted jumping lines and generic non-jumping points
        jump_fail = 0
        for k in range(5):
            z = (F(rng.randint(1, 9)), F(F.random(rng, 9)), F(F.random(rng, 9)))
            g = pencil_with_jumping_line(n, z, p.seed * 100 + k, F)
            h = splitting_h0(g, z)
            jump_fail += not (is_jumping_line(g, z) and discriminant(g)(z) == 0 and h > 0 and h % 2 == 0)
            w = next(w for w in pts if any(w) and D(w) != 0)
            jump_fail += is_jumping_line(f, w) or splitting_h0(f, w) != 0
        A = random_skew(n, rng, F)
        g = PencilTensor(A, standard_J(n, F), A)
        jump_fail += not is_jumping_line(g, (1, 0, -1)) or splitting_h0(g, (1, 0, -1)) != n
        rep.add(f"jumping lines match the zero set of the discriminant n={n}", jump_fail == 0, failures=jump_fail)


# -- 14 -----------------------------------------------------------------------------

def suite_dimension(p: SuiteParams, rep: Report):
    top = p.n or 12
    fails = 0
    for n in range(2, top + 1):
        for r in range(2, n + 1):
            try:
                fails += cm.moduli_dimension(r, n) != (r - 2) * n - comb(r, 2)
            except AssertionError:
                fails += 1
    rep.add(f"moduli dimension identity for 2 <= r <= n <= {top}", fails == 0, failures=fails)


SUITES: dict[str, Callable[[SuiteParams, Report], None]] = {
    "n2": suite_n2,
    "phi-identities": suite_phi_identities,
    "centralizer": suite_centralizer,
    "rank-law": suite_rank_law,
    "diamond": suite_diamond,
    "image-codim": suite_image_codim,
    "image-n4": suite_image_n4,
    "image-n6": suite_image_n6,
    "dominance": suite_dominance,
    "corank-codim": suite_corank_codim,
    "bad-lines": suite_bad_lines,
    "monad": suite_monad,
    "discriminant": suite_discriminant,
    "dimension": suite_dimension,
}


def run_suite(name: str, **params) -> Report:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    p = SuiteParams(**params)
    shown = {k: v for k, v in params.items() if v is not None and k not in ("seed", "workers")}
    if "field" in shown:
        shown["field"] = shown["field"].name
    rep = Report(name, shown, seed=p.seed)
    t0 = time.perf_counter()
    try:
        SUITES[name](p, rep)
    except (DomainError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        rep.add("suite raised", False, error=f"{type(exc).__name__}: {exc}")
    rep.elapsed = time.perf_counter() - t0
    return rep
