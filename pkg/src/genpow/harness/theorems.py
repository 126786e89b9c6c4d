"""
Randomized verifiers, one per statement about exponentials, logarithms and
generalized powers.

Each verifier runs ``trials`` independent trials.  Trial ``i`` works in
dimension ``dims[i % len(dims)]`` with its own generator seeded by
``trial_seed(seed, i)``, makes one or more checks, and is tallied as a
pass, a skip (an instance fell in an ambiguous tolerance band) or a
failure.  Instances are constructed so that the hypotheses of the
statement hold exactly up to rounding: commuting operators share an
eigenbasis, and ``B`` in the commutant of ``A`` is assembled block by block
on the eigenspaces of ``A``.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Dict, Sequence

import numpy as np

from ..errors import GenPowError
from ..gpower import gpow, norm_equality_check
from ..linalg import (
    DEFAULT_TOL,
    CMatrix,
    Tolerances,
    commutator_residual,
    commutes,
    fro,
    hermitian_eigendecompose,
    is_hermitian,
    loewner_leq,
    operator_norm,
)
from ..matfun import RECIPROCAL, apply_spectral, exp_spectral, log_spectral
from .generate import (
    commuting_family,
    complex_gaussian,
    eigenspace_sizes,
    from_basis,
    random_hermitian,
    random_pd,
    random_unitary,
    rng_for,
    scale_to_norm,
    trial_seed,
)
from .report import FAIL, Checks, TheoremReport

log = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "DEFAULT_DIMS",
    "HEINZ_ALPHAS",
    "verify_wermuth",
    "verify_log_product",
    "verify_norm_equality",
    "verify_identities",
    "verify_adjoint_transfer",
    "verify_two_pi_criterion",
    "verify_heinz",
    "verify_heinz_noncommuting_probe",
    "REGISTRY",
    "GATING",
]

DEFAULT_SEED = 0xC0FFEE
DEFAULT_TRIALS = 200
DEFAULT_DIMS = (2, 3, 4, 5, 6)
HEINZ_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)

# relative residual limits for the identity-type checks
LOG_REL = 1e-8
ADJOINT_REL = 1e-8
IDENTITY_REL = 1e-7
NORMAL_REL = 1e-7


def _rel(lhs: CMatrix, rhs: CMatrix) -> float:
    return fro(lhs - rhs) / max(1.0, fro(rhs))


def _herm_residual(m: CMatrix) -> float:
    return fro(m - m.conj().T) / max(1.0, fro(m))


def _loewner_shortfall(lo: CMatrix, hi: CMatrix, tol: Tolerances) -> float:
    """How far ``hi - lo`` is from PSD, relative to its size; 0 if it is PSD."""
    d = hi - lo
    d = 0.5 * (d + d.conj().T)
    lam = hermitian_eigendecompose(d, tol).eigenvalues[0]
    return max(0.0, -lam) / max(1.0, fro(d))


def _run(
    theorem_id: str,
    trial: Callable[[np.random.Generator, int, Tolerances, Checks, int], None],
    trials: int,
    dims: Sequence[int],
    seed: int,
    tol: Tolerances,
    gating: bool = True,
) -> TheoremReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    dims = tuple(dims)
    if not dims:
        raise ValueError("dims must not be empty")
    report = TheoremReport(theorem_id, gating=gating)
    for i in range(trials):
        ts = trial_seed(seed, i)
        checks = Checks()
        try:
            trial(rng_for(ts), dims[i % len(dims)], tol, checks, i)
        except GenPowError as exc:
            checks.failed.append(f"raised {type(exc).__name__}: {exc}")
        if checks.outcome == FAIL:
            log.log(
                logging.WARNING if gating else logging.INFO,
                "%s trial %d (seed %d): %s",
                theorem_id, i, ts, "; ".join(checks.failed),
            )
        report.record(checks.outcome, checks.worst, ts)
    return report


def _commutant_member(rng, v: CMatrix, sizes: Sequence[int], block_kind: str) -> CMatrix:
    """A matrix commuting with ``V diag(blocks of equal eigenvalues) V*``.

    Every operator commuting with such an ``A`` is block diagonal in the
    basis ``V`` with one block per eigenspace, so this samples the whole
    commutant, including non-normal members.
    """
    n = v.shape[0]
    inner = np.zeros((n, n), dtype=np.complex128)
    start = 0
    for k in sizes:
        g = complex_gaussian(rng, k) / math.sqrt(k)
        if block_kind == "hermitian":
            block = g + g.conj().T
        elif block_kind == "skew":
            block = g - g.conj().T
        elif block_kind == "normal":
            z = rng.standard_normal(k) + 1j * rng.standard_normal(k)
            block = from_basis(random_unitary(rng, k), z / math.sqrt(2.0))
        else:
            block = g
        inner[start:start + k, start:start + k] = block
        start += k
    return v @ inner @ v.conj().T


def _degenerate_pd(rng, n: int, lo: float = 0.5, hi: float = 4.0):
    """PD matrix whose eigenspaces have random dimensions, plus its basis and block sizes."""
    sizes = eigenspace_sizes(rng, n)
    values = np.repeat(rng.uniform(lo, hi, len(sizes)), sizes)
    v = random_unitary(rng, n)
    return from_basis(v, values), v, sizes


# -- exponentials commute iff the exponents do ------------------------------

def _wermuth_trial(rng, n, tol, checks, i):
    a, b = commuting_family(rng, n, 2, -2.0, 2.0)
    ea, eb = exp_spectral(a, tol), exp_spectral(b, tol)
    checks.close("forward: e^A e^B = e^B e^A", commutator_residual(ea, eb), tol.tol_commute)

    # backward: start from commuting positive exponentials, recover the exponents
    p, q = commuting_family(rng, n, 2, 0.1, 10.0)
    if not commutes(p, q, tol):
        checks.skip("backward premise")
    else:
        la, lb = log_spectral(p, tol), log_spectral(q, tol)
        checks.close("backward: AB = BA", commutator_residual(la, lb), tol.tol_commute)

    h1 = scale_to_norm(random_hermitian(rng, n), rng.uniform(0.5, 2.0))
    h2 = scale_to_norm(random_hermitian(rng, n), rng.uniform(0.5, 2.0))
    if commutator_residual(h1, h2) <= 10 * tol.tol_commute:
        checks.skip("negative: pair commutes")
    else:
        r = commutator_residual(exp_spectral(h1, tol), exp_spectral(h2, tol))
        checks.separated("negative: e^A e^B != e^B e^A", r, tol.tol_commute, 10 * tol.tol_commute)


def verify_wermuth(trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL):
    """Self-adjoint ``A, B``: ``AB = BA`` iff ``e^A e^B = e^B e^A``."""
    return _run("wermuth", _wermuth_trial, trials, dims, seed, tol)


# -- log of a product ---------------------------------------------------------

def _log_product_trial(rng, n, tol, checks, i):
    a, b = commuting_family(rng, n, 2, 0.1, 10.0)
    la, lb = log_spectral(a, tol), log_spectral(b, tol)
    lab = log_spectral(a @ b, tol)
    checks.close(
        "log(AB) = log A + log B",
        fro(lab - la - lb) / max(1.0, fro(la) + fro(lb)),
        LOG_REL,
    )
    inv = apply_spectral(RECIPROCAL, a, tol)
    checks.close("log(A^-1) = -log A", fro(log_spectral(inv, tol) + la) / max(1.0, fro(la)), LOG_REL)


def verify_log_product(trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL):
    """Commuting PD ``A, B``: ``log(AB) = log A + log B``; ``log(A^-1) = -log A``."""
    return _run("log-product", _log_product_trial, trials, dims, seed, tol)


# -- norm of a generalized power ----------------------------------------------

def _norm_equality_trial(rng, n, tol, checks, i):
    a = random_pd(rng, n)
    b = complex_gaussian(rng, n)
    res = norm_equality_check(a, b, tol)
    checks.holds("||A^B|| <= e^||B log A||", res.bound_holds, max(0.0, res.lhs / res.rhs - 1.0))

    # equality needs B log A >= 0: commuting, B >= 0 and A >= I
    v = random_unitary(rng, n)
    a = from_basis(v, rng.uniform(1.0, 10.0, n))
    b = from_basis(v, rng.uniform(0.0, 3.0, n))
    res = norm_equality_check(a, b, tol)
    checks.close("||A^B|| = e^||B log A||", abs(res.lhs - res.rhs) / res.rhs, 1e-8)


def verify_norm_equality(trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL):
    """``||A^B|| <= e^{||B log A||}`` always; equality when ``B log A >= 0``."""
    return _run("norm-equality", _norm_equality_trial, trials, dims, seed, tol)


# -- algebraic identities -----------------------------------------------------

def _identities_trial(rng, n, tol, checks, i):
    eye = np.eye(n)
    a = random_pd(rng, n, 0.5, 4.0)
    g = complex_gaussian(rng, n)
    checks.close("I^B = I", _rel(gpow(eye, g, tol).value, eye), IDENTITY_REL)
    checks.close("A^0 = I", _rel(gpow(a, np.zeros((n, n)), tol).value, eye), IDENTITY_REL)
    checks.close("A^I = A", _rel(gpow(a, eye, tol).value, a), IDENTITY_REL)

    # (AB)^C = A^C B^C for pairwise commuting A, B, C
    v = random_unitary(rng, n)
    a = from_basis(v, rng.uniform(0.5, 4.0, n))
    b = from_basis(v, rng.uniform(0.5, 4.0, n))
    c = from_basis(v, rng.uniform(-1.5, 1.5, n) + 1j * rng.uniform(-2.0, 2.0, n))
    lhs = gpow(a @ b, c, tol).value
    rhs = gpow(a, c, tol).value @ gpow(b, c, tol).value
    checks.close("(AB)^C = A^C B^C", _rel(lhs, rhs), IDENTITY_REL)

    # A^B A^C = A^{B+C} for pairwise commuting A, B, C
    e = from_basis(v, rng.uniform(-1.5, 1.5, n) + 1j * rng.uniform(-2.0, 2.0, n))
    lhs = gpow(a, e, tol).value @ gpow(a, c, tol).value
    checks.close("A^B A^C = A^{B+C}", _rel(lhs, gpow(a, e + c, tol).value), IDENTITY_REL)

    # (A^B)^C = A^{CB}: only when A^B is PD, i.e. B Hermitian and commuting with A
    h = from_basis(v, rng.uniform(-1.5, 1.5, n))
    g = complex_gaussian(rng, n) / math.sqrt(n)
    lhs = gpow(gpow(a, h, tol).value, g, tol).value
    checks.close("(A^B)^C = A^{CB}", _rel(lhs, gpow(a, g @ h, tol).value), IDENTITY_REL)

    # A^T B^T = B^T A^T for commuting PD A, B and T commuting with both
    t = from_basis(v, rng.uniform(-1.5, 1.5, n) + 1j * rng.uniform(-2.0, 2.0, n))
    at, bt = gpow(a, t, tol).value, gpow(b, t, tol).value
    checks.close(
        "A^T B^T = B^T A^T",
        fro(at @ bt - bt @ at) / max(1.0, fro(at) * fro(bt)),
        IDENTITY_REL,
    )


def verify_identities(trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL):
    """Exponent laws for generalized powers under commutation hypotheses."""
    return _run("identities", _identities_trial, trials, dims, seed, tol)


# -- adjoints -----------------------------------------------------------------

def _adjoint_trial(rng, n, tol, checks, i):
    a, v, sizes = _degenerate_pd(rng, n)

    b = _commutant_member(rng, v, sizes, "general")
    value = gpow(a, b, tol).value
    rhs = gpow(a, b.conj().T, tol).value
    checks.close("(A^B)* = A^{B*}", _rel(value.conj().T, rhs), ADJOINT_REL)

    b = _commutant_member(rng, v, sizes, "hermitian")
    value = gpow(a, b, tol).value
    checks.holds("B = B* => A^B = (A^B)*", is_hermitian(value, tol), _herm_residual(value))

    b = _commutant_member(rng, v, sizes, "normal")
    value = gpow(a, b, tol).value
    gap = value.conj().T @ value - value @ value.conj().T
    checks.close("B normal => A^B normal", fro(gap) / max(1.0, fro(value) ** 2), NORMAL_REL)

    b = _commutant_member(rng, v, sizes, "skew")
    value = gpow(a, b, tol).value
    checks.close("B* = -B => A^B unitary", fro(value.conj().T @ value - np.eye(n)), NORMAL_REL)


def verify_adjoint_transfer(trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL):
    """``AB = BA``: ``(A^B)* = A^{B*}``; normal and skew ``B`` give normal and unitary powers."""
    return _run("adjoint", _adjoint_trial, trials, dims, seed, tol)


# -- the 2 pi criterion -------------------------------------------------------

TWO_PI_MARGIN = 0.95


def _two_pi_trial(rng, n, tol, checks, i):
    # contrapositive: AB != BA and ||B log A|| < 2 pi force A^B non-Hermitian
    a = random_pd(rng, n)
    la = log_spectral(a, tol)
    b = random_hermitian(rng, n)
    size = operator_norm(b @ la, tol)
    b = b * (2 * math.pi * TWO_PI_MARGIN * rng.uniform(0.1, 1.0) / size)
    if commutator_residual(a, b) <= 10 * tol.tol_commute:
        checks.skip("contrapositive: pair commutes")
    else:
        value = gpow(a, b, tol).value
        checks.separated("A^B not Hermitian", _herm_residual(value), tol.tol_herm, 10 * tol.tol_herm)

    a, b = commuting_family(rng, n, 2, 0.1, 10.0)
    b = b - (np.trace(b).real / n) * np.eye(n)
    size = operator_norm(b @ log_spectral(a, tol), tol)
    if size > 0:
        b = b * (2 * math.pi * TWO_PI_MARGIN * rng.uniform(0.1, 1.0) / size)
    value = gpow(a, b, tol).value
    checks.holds("commuting: A^B Hermitian", is_hermitian(value, tol), _herm_residual(value))
    checks.holds("commuting: AB = BA", commutes(a, b, tol), commutator_residual(a, b))


def verify_two_pi_criterion(trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL):
    """Hermitian ``B``, Hermitian ``A^B`` and ``||B log A|| < 2 pi`` imply ``AB = BA``."""
    return _run("two-pi", _two_pi_trial, trials, dims, seed, tol)


# -- Heinz-type monotonicity ---------------------------------------------------

def _commuting_heinz_triple(rng, n):
    v = random_unitary(rng, n)
    a = rng.uniform(0.1, 5.0, n)
    return from_basis(v, a), from_basis(v, a + rng.uniform(0.0, 3.0, n)), from_basis(v, rng.uniform(0.0, 2.0, n))


def _noncommuting_ordered_pair(rng, n):
    a = random_pd(rng, n, 0.1, 5.0)
    return a, a + from_basis(random_unitary(rng, n), rng.uniform(0.0, 3.0, n))


def _check_power_order(checks, label, a, b, t, tol):
    at, bt = gpow(a, t, tol).value, gpow(b, t, tol).value
    checks.holds(label, loewner_leq(at, bt, tol), _loewner_shortfall(at, bt, tol))


def _heinz_trial(rng, n, tol, checks, i):
    a, b, t = _commuting_heinz_triple(rng, n)
    _check_power_order(checks, "commuting: A^T <= B^T", a, b, t, tol)

    alpha = HEINZ_ALPHAS[i % len(HEINZ_ALPHAS)]
    t = alpha * np.eye(n)
    _check_power_order(checks, f"commuting: A^{alpha} <= B^{alpha}", a, b, t, tol)
    a, b = _noncommuting_ordered_pair(rng, n)
    _check_power_order(checks, f"classical: A^{alpha} <= B^{alpha}", a, b, t, tol)


def verify_heinz(trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL):
    """``0 <= A <= B`` and ``T >= 0`` pairwise commuting imply ``A^T <= B^T``."""
    return _run("heinz", _heinz_trial, trials, dims, seed, tol)


PROBE_CHANNELS = ("classical", "commuting", "square", "general")


def _probe_holds(a, b, t, tol):
    """Whether ``B^T - A^T`` is Hermitian PSD, with the reason when not."""
    at, bt = gpow(a, t, tol).value, gpow(b, t, tol).value
    d = bt - at
    if not is_hermitian(d, tol):
        return False, "B^T - A^T is not self-adjoint", _herm_residual(d)
    shortfall = _loewner_shortfall(at, bt, tol)
    if shortfall > tol.tol_psd:
        return False, "B^T - A^T has a negative eigenvalue", shortfall
    return True, "", shortfall


def _make_probe_trial(channels):
    def trial(rng, n, tol, checks, i):
        channel = channels[i % len(channels)]
        if channel == "commuting":
            a, b, t = _commuting_heinz_triple(rng, n)
        else:
            a, b = _noncommuting_ordered_pair(rng, n)
            if channel == "classical":
                t = rng.uniform(0.0, 1.0) * np.eye(n)
            elif channel == "square":
                t = 2.0 * np.eye(n)
            else:
                t = random_pd(rng, n, 0.0, 2.0)
        ok, why, residual = _probe_holds(a, b, t, tol)
        if not ok:
            level = logging.INFO if channel in ("square", "general") else logging.ERROR
            log.log(level, "heinz-probe [%s] trial %d: %s", channel, i, why)
        checks.holds(f"[{channel}] A^T <= B^T", ok, residual)

    return trial


def verify_heinz_noncommuting_probe(
    trials=DEFAULT_TRIALS, dims=DEFAULT_DIMS, seed=DEFAULT_SEED, tol=DEFAULT_TOL, channels=PROBE_CHANNELS
):
    """Exploratory: does ``A^T <= B^T`` survive without commutativity?

    Trials rotate through ``channels``:

    ``classical``
        non-commuting ``A <= B`` with ``T = alpha I``, ``alpha`` in [0, 1];
        must hold (classical Heinz inequality).
    ``commuting``
        pairwise commuting triple; must hold.
    ``square``
        non-commuting ``A <= B`` with ``T = 2 I``; may fail.
    ``general``
        non-commuting ``A <= B`` with a random PSD ``T`` commuting with
        neither; usually fails because ``A^T`` is not even self-adjoint.

    The report is informational (``gating=False``): its failure count is
    the number of instances where the inequality did not hold.
    """
    unknown = set(channels) - set(PROBE_CHANNELS)
    if unknown:
        raise ValueError(f"unknown probe channels: {sorted(unknown)}")
    return _run("heinz-probe", _make_probe_trial(tuple(channels)), trials, dims, seed, tol, gating=False)


REGISTRY: Dict[str, Callable[..., TheoremReport]] = {
    "wermuth": verify_wermuth,
    "log-product": verify_log_product,
    "norm-equality": verify_norm_equality,
    "identities": verify_identities,
    "adjoint": verify_adjoint_transfer,
    "two-pi": verify_two_pi_criterion,
    "heinz": verify_heinz,
    "heinz-probe": verify_heinz_noncommuting_probe,
}

GATING = tuple(k for k in REGISTRY if k != "heinz-probe")
