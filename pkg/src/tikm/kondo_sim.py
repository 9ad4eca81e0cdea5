"""Exact diagonalization of two spin-1/2 impurities exchange-coupled to a finite chain.

Model realized on an open nearest-neighbor chain of ``sites`` orbitals:

    H = -t sum_{i,s} (c+_{i,s} c_{i+1,s} + h.c.)
        + jk * (S_A . s(x_A) + S_B . s(x_B))
        + idirect * S_A . S_B

where s(x) is the on-site conduction-electron spin density and the exchange
terms are expanded as S^z s^z + (S+ s- + S- s+)/2.  ``jk > 0`` is
antiferromagnetic (the physically screening sign).  The Hamiltonian is real
and conserves the electron number and the total S^z (impurities plus
electrons), so all work happens inside one symmetry sector.

Encoding conventions (fixed so tests can be bit-exact):

* fermion orbitals are site-major with spin-up before spin-down,
  orbital(site, spin) = 2*site + spin with spin 0 = up, 1 = down;
* orbital 0 is the least significant bit of the occupation pattern, and
  fermionic signs count occupied lower orbitals;
* impurity spins live outside the fermion space as two extra bits
  (bit set = up, impurity A is the higher bit); a full basis state is
  (impurity_bits << 2L) | occupation, and sector bases are sorted by that
  code for binary-search lookup.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable

import numpy as np
import scipy.sparse as sparse
from scipy.linalg import eigh_tridiagonal

from . import measures, qmat, werner
from .errors import (
    DegenerateGroundError,
    EmptySectorError,
    NoBracketError,
    NonMonotoneError,
    NotConvergedError,
    TikmError,
)

#: Largest chain the package will diagonalize (half-filled sector dimension
#: stays around 2.5e5, affordable for fully reorthogonalized Lanczos).
MAX_SITES = 10

#: Sector dimension at and below which the dense eigensolver is used.
DENSE_CUTOFF = 512

#: Hard cap for an explicitly requested dense solve (memory guard).
DENSE_MAX = 6000

#: Two Ritz/eigen values closer than this are treated as a degenerate ground state.
DEGENERACY_ATOL = 1e-9

#: Energy margin by which the low-S^z sector must win for a singlet verdict.
SINGLET_MARGIN = 1e-9


@dataclass(frozen=True)
class ChainModel:
    """Two impurities on an open chain, in a fixed electron-number sector.

    ``xa``/``xb`` default to the two central sites (reflection symmetric,
    which is what makes the impurity pair state rotation invariant); they may
    coincide, which couples both impurities to one shared site.  ``nup`` and
    ``ndn`` default to half filling for even chains.
    """

    sites: int
    hopping: float = 1.0
    jk: float = 0.0
    idirect: float = 0.0
    xa: int | None = None
    xb: int | None = None
    nup: int | None = None
    ndn: int | None = None

    def __post_init__(self) -> None:
        L = self.sites
        if not 1 <= L <= MAX_SITES:
            raise ValueError(f"sites must be in [1, {MAX_SITES}], got {L!r}")
        if self.hopping < 0.0:
            raise ValueError(f"hopping must be >= 0, got {self.hopping!r}")
        if self.jk < 0.0:
            raise ValueError(f"jk must be >= 0 (antiferromagnetic), got {self.jk!r}")
        if self.xa is None or self.xb is None:
            if self.xa is not None or self.xb is not None:
                raise ValueError("give both xa and xb or neither")
            if L == 1:
                xa, xb = 0, 0
            elif L % 2 == 0:
                xa, xb = L // 2 - 1, L // 2
            else:
                xa, xb = (L - 3) // 2, (L + 1) // 2
            object.__setattr__(self, "xa", xa)
            object.__setattr__(self, "xb", xb)
        if not 0 <= self.xa <= self.xb < L:
            raise ValueError(f"need 0 <= xa <= xb < sites, got xa={self.xa}, xb={self.xb}")
        if self.nup is None:
            object.__setattr__(self, "nup", L // 2)
        if self.ndn is None:
            object.__setattr__(self, "ndn", L // 2)
        if not (0 <= self.nup <= L and 0 <= self.ndn <= L):
            raise ValueError(f"electron counts must be in [0, {L}] per spin, got nup={self.nup}, ndn={self.ndn}")

    @property
    def nelec(self) -> int:
        return self.nup + self.ndn

    def default_sz2(self) -> int:
        """Twice the total S^z of the natural sector: electron polarization, impurities balanced."""
        return self.nup - self.ndn


@dataclass(frozen=True)
class SectorBasis:
    """All basis states of one (electron number, total S^z) sector, sorted by code."""

    sites: int
    nelec: int
    sz2: int
    codes: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.codes)

    @property
    def n_orbitals(self) -> int:
        return 2 * self.sites

    def index_of(self, code: int) -> int:
        i = int(np.searchsorted(self.codes, code))
        if i >= len(self.codes) or self.codes[i] != code:
            raise KeyError(f"code {code} not in sector")
        return i

    def decode(self, code: int) -> tuple[int, int, int]:
        """(impurity A up?, impurity B up?, fermion occupation bits)."""
        occ = int(code) & ((1 << self.n_orbitals) - 1)
        imp = int(code) >> self.n_orbitals
        return (imp >> 1) & 1, imp & 1, occ


def _sz2_of(sz_total: float) -> int:
    sz2 = int(round(2.0 * float(sz_total)))
    if abs(2.0 * float(sz_total) - sz2) > 1e-9:
        raise ValueError(f"sz_total must be integer or half-integer, got {sz_total!r}")
    return sz2


def build_basis(model: ChainModel, sz_total: float | None = None) -> SectorBasis:
    """Enumerate the sector with the model's electron number and given total S^z.

    The enumeration is exhaustive and duplicate free: for each impurity
    configuration the electron up/down split is fixed by the S^z balance and
    occupations are generated site-combinatorially.
    """
    sz2 = model.default_sz2() if sz_total is None else _sz2_of(sz_total)
    L = model.sites
    ne = model.nelec
    n_orb = 2 * L
    if (ne - sz2) % 2 != 0:
        raise EmptySectorError(f"no states: {ne} electrons plus two impurities cannot reach 2*S^z = {sz2}")
    codes: list[int] = []
    for imp in range(4):
        imp_sz2 = 2 * int(imp).bit_count() - 2
        e_sz2 = sz2 - imp_sz2
        if (ne + e_sz2) % 2:
            continue
        nu = (ne + e_sz2) // 2
        nd = ne - nu
        if not (0 <= nu <= L and 0 <= nd <= L):
            continue
        imp_part = imp << n_orb
        for up_sites in combinations(range(L), nu):
            up_occ = 0
            for s in up_sites:
                up_occ |= 1 << (2 * s)
            for dn_sites in combinations(range(L), nd):
                occ = up_occ
                for s in dn_sites:
                    occ |= 1 << (2 * s + 1)
                codes.append(imp_part | occ)
    if not codes:
        raise EmptySectorError(f"no states with {ne} electrons and 2*S^z = {sz2} on {L} sites")
    codes.sort()
    return SectorBasis(sites=L, nelec=ne, sz2=sz2, codes=np.array(codes, dtype=np.int64))


def _sign_below(occ: int, p: int) -> float:
    return -1.0 if (occ & ((1 << p) - 1)).bit_count() & 1 else 1.0


def _hop(occ: int, p_to: int, p_from: int) -> tuple[int, float] | None:
    """Apply c+_{p_to} c_{p_from}; None if blocked by occupation."""
    if not (occ >> p_from) & 1:
        return None
    sign = _sign_below(occ, p_from)
    occ1 = occ ^ (1 << p_from)
    if (occ1 >> p_to) & 1:
        return None
    return occ1 | (1 << p_to), sign * _sign_below(occ1, p_to)


def build_hamiltonian(model: ChainModel, basis: SectorBasis) -> sparse.csr_matrix:
    """Assemble the sector Hamiltonian as a real symmetric CSR matrix.

    Every generated target state is looked up in the sector; a missing target
    would mean a term leaks out of the symmetry sector and raises immediately.
    """
    L = model.sites
    n_orb = 2 * L
    occ_mask = (1 << n_orb) - 1
    t = model.hopping
    jk = model.jk
    idir = model.idirect
    codes = basis.codes
    index = {int(c): i for i, c in enumerate(codes)}

    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []

    def emit(i: int, target_code: int, value: float) -> None:
        j = index.get(target_code)
        if j is None:
            raise TikmError(f"term leaves the symmetry sector (state code {target_code})")
        rows.append(j)
        cols.append(i)
        vals.append(value)

    for i, code in enumerate(codes):
        code = int(code)
        occ = code & occ_mask
        imp = code >> n_orb
        a_up = (imp >> 1) & 1
        b_up = imp & 1
        diag = 0.0

        if t != 0.0:
            for s in range(L - 1):
                for spin in (0, 1):
                    p = 2 * s + spin
                    q = 2 * (s + 1) + spin
                    for p_to, p_from in ((p, q), (q, p)):
                        res = _hop(occ, p_to, p_from)
                        if res is not None:
                            occ2, sign = res
                            emit(i, (imp << n_orb) | occ2, -t * sign)

        if jk != 0.0:
            for x, up_bit, imp_flip in ((model.xa, a_up, 2), (model.xb, b_up, 1)):
                orb_u, orb_d = 2 * x, 2 * x + 1
                n_u = (occ >> orb_u) & 1
                n_d = (occ >> orb_d) & 1
                s_imp = 0.5 if up_bit else -0.5
                diag += jk * s_imp * 0.5 * (n_u - n_d)
                if up_bit:
                    # S- s+ : impurity down, electron down -> up
                    res = _hop(occ, orb_u, orb_d)
                    if res is not None:
                        occ2, sign = res
                        emit(i, ((imp ^ imp_flip) << n_orb) | occ2, 0.5 * jk * sign)
                else:
                    # S+ s- : impurity up, electron up -> down
                    res = _hop(occ, orb_d, orb_u)
                    if res is not None:
                        occ2, sign = res
                        emit(i, ((imp ^ imp_flip) << n_orb) | occ2, 0.5 * jk * sign)

        if idir != 0.0:
            diag += idir * (0.5 if a_up else -0.5) * (0.5 if b_up else -0.5)
            if a_up != b_up:
                # (S+_A S-_B + S-_A S+_B)/2 swaps the two impurity spins
                emit(i, ((imp ^ 3) << n_orb) | occ, 0.5 * idir)

        if diag != 0.0:
            rows.append(i)
            cols.append(i)
            vals.append(diag)

    h = sparse.coo_matrix(
        (np.array(vals, dtype=np.float64), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=(basis.dim, basis.dim),
    ).tocsr()
    h.sum_duplicates()
    return h


@dataclass
class GroundStateResult:
    """Lowest eigenpair of one sector, with solver diagnostics."""

    energy: float
    amplitudes: np.ndarray
    converged: bool
    iterations: int
    residual_norm: float
    degenerate: bool
    gap: float
    method: str


def _dense_ground(h: sparse.csr_matrix) -> GroundStateResult:
    if h.shape[0] > DENSE_MAX:
        raise ValueError(
            f"dense solve refused for dimension {h.shape[0]} (> {DENSE_MAX}); use the Lanczos path"
        )
    spec = qmat.hermitian_eig(h.toarray().astype(complex))
    energy = float(spec.values[0])
    psi = np.ascontiguousarray(spec.vectors[:, 0].real)
    psi /= np.linalg.norm(psi)
    gap = float(spec.values[1] - spec.values[0]) if len(spec.values) > 1 else float("inf")
    residual = float(np.linalg.norm(h @ psi - energy * psi))
    return GroundStateResult(
        energy=energy,
        amplitudes=psi,
        converged=True,
        iterations=0,
        residual_norm=residual,
        degenerate=gap < DEGENERACY_ATOL,
        gap=gap,
        method="dense",
    )


def _lanczos_block(h, v0, max_steps, ritz_tol):
    """One fully reorthogonalized Lanczos pass from v0.

    Returns (theta0, theta1, ritz_vector, steps, exhausted).
    """
    dim = v0.shape[0]
    m = min(max_steps, dim)
    V = np.empty((m, dim))
    alphas = np.empty(m)
    betas = np.empty(m)
    V[0] = v0
    k_used = 0
    theta_prev = np.inf
    exhausted = False
    for k in range(m):
        w = h @ V[k]
        alphas[k] = float(V[k] @ w)
        w -= alphas[k] * V[k]
        if k > 0:
            w -= betas[k - 1] * V[k - 1]
        # two Gram-Schmidt passes against the whole block keep orthogonality
        # at working precision even for tightly clustered spectra
        for _ in range(2):
            w -= V[: k + 1].T @ (V[: k + 1] @ w)
        beta = float(np.linalg.norm(w))
        k_used = k + 1
        if beta < 1e-13 * max(1.0, abs(alphas[k])):
            exhausted = True
            break
        if k + 1 < m:
            V[k + 1] = w / beta
            betas[k] = beta
        if k >= 4 and k % 5 == 0:
            theta = eigh_tridiagonal(alphas[: k + 1], betas[:k], eigvals_only=True, select="i", select_range=(0, 0))[0]
            if abs(theta - theta_prev) < ritz_tol:
                break
            theta_prev = theta
    n = k_used
    if n == 1:
        theta0, theta1 = alphas[0], np.inf
        y0 = np.array([1.0])
    else:
        upper = min(1, n - 1)
        evals, evecs = eigh_tridiagonal(alphas[:n], betas[: n - 1], select="i", select_range=(0, upper))
        theta0 = float(evals[0])
        theta1 = float(evals[1]) if len(evals) > 1 else np.inf
        y0 = evecs[:, 0]
    ritz = V[:n].T @ y0
    ritz /= np.linalg.norm(ritz)
    return theta0, theta1, ritz, n, exhausted


def _lanczos_ground(h, seed, ritz_tol, residual_rtol, max_krylov, max_restarts):
    dim = h.shape[0]
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    iterations = 0
    theta0 = theta1 = np.inf
    residual = np.inf
    for _ in range(max_restarts):
        theta0, theta1, v, steps, exhausted = _lanczos_block(h, v, max_krylov, ritz_tol)
        iterations += steps
        residual = float(np.linalg.norm(h @ v - theta0 * v))
        scale = max(1.0, abs(theta0))
        if residual <= residual_rtol * scale or exhausted:
            break
    scale = max(1.0, abs(theta0))
    if residual > 1e-8 * scale:
        raise NotConvergedError(
            f"Lanczos stalled at residual {residual:.3e} after {iterations} iterations",
            iterations=iterations,
            residual=residual,
        )
    gap = theta1 - theta0
    return GroundStateResult(
        energy=theta0,
        amplitudes=v,
        converged=True,
        iterations=iterations,
        residual_norm=residual,
        degenerate=gap < DEGENERACY_ATOL,
        gap=gap,
        method="lanczos",
    )


def ground_state(
    h: sparse.csr_matrix,
    method: str = "auto",
    seed: int = 7,
    ritz_tol: float = 1e-12,
    residual_rtol: float = 1e-12,
    max_krylov: int = 400,
    max_restarts: int = 40,
    dense_cutoff: int = DENSE_CUTOFF,
) -> GroundStateResult:
    """Lowest eigenpair of a sector Hamiltonian.

    ``method`` is "auto" (dense at or below ``dense_cutoff``, else Lanczos),
    "dense", or "lanczos".  The Lanczos path restarts fully reorthogonalized
    blocks from a fixed-seed start vector until the explicit residual
    ||H psi - E psi|| drops to ``residual_rtol * max(1, |E|)``, and raises
    NotConvergedError if it cannot reach 1e-8 * max(1, |E|).  A gap below
    1e-9 between the two lowest (Ritz) values marks the result degenerate.
    """
    dim = h.shape[0]
    if dim == 0:
        raise EmptySectorError("empty Hamiltonian")
    if method not in ("auto", "dense", "lanczos"):
        raise ValueError(f"unknown method {method!r}")
    if method == "dense" or (method == "auto" and dim <= dense_cutoff):
        return _dense_ground(h)
    return _lanczos_ground(h, seed, ritz_tol, residual_rtol, max_krylov, max_restarts)


def sector_ground_energy(model: ChainModel, sz_total: float, **gs_opts) -> float:
    basis = build_basis(model, sz_total)
    return ground_state(build_hamiltonian(model, basis), **gs_opts).energy


def singlet_check(model: ChainModel, **gs_opts) -> bool:
    """True iff the ground state has no partner in the next S^z sector.

    Compares the ground energies of the natural sector and the sector with
    S^z raised by one; a multiplet with S >= 1 (or >= 3/2 for odd electron
    count) appears degenerately in both, a singlet (or Kramers doublet) does
    not.
    """
    sz2 = model.default_sz2()
    e_low = sector_ground_energy(model, sz2 / 2.0, **gs_opts)
    e_high = sector_ground_energy(model, (sz2 + 2) / 2.0, **gs_opts)
    return e_low < e_high - SINGLET_MARGIN


#: Impurity configuration bits -> index in the {uu, ud, du, dd} product basis.
_IMP_TO_BASIS = (3, 2, 1, 0)


def impurity_rdm(g: GroundStateResult, basis: SectorBasis) -> np.ndarray:
    """4x4 reduced density matrix of the impurity pair.

    Sums |amplitude|^2 outer products over electron configurations; no
    fermionic signs arise because the impurity bits sit outside the fermion
    space.  The result is Hermitized, trace normalized and validated.  Raises
    DegenerateGroundError if the solver marked the state non-unique.
    """
    if g.degenerate:
        raise DegenerateGroundError(
            f"ground state is degenerate within the sector (gap {g.gap:.3e}); the reduced state is ill-defined"
        )
    if len(g.amplitudes) != basis.dim:
        raise ValueError("state vector does not match basis dimension")
    n_orb = basis.n_orbitals
    occ = basis.codes & ((1 << n_orb) - 1)
    imp = basis.codes >> n_orb
    uniq, inverse = np.unique(occ, return_inverse=True)
    m = np.zeros((len(uniq), 4), dtype=complex)
    cols = np.array(_IMP_TO_BASIS, dtype=np.int64)[imp]
    m[inverse, cols] = g.amplitudes
    rho = m.T @ m.conj()
    rho = 0.5 * (rho + rho.conj().T)
    rho /= rho.trace().real
    return qmat.check_density_matrix(rho, name="impurity rdm")


@dataclass
class SweepPoint:
    """Analysis record for one grid value of a parameter sweep."""

    value: float
    energy: float | None = None
    f_s: float | None = None
    singlet: bool | None = None
    degenerate: bool = False
    werner_residual: float | None = None
    report: werner.EntanglementReport | None = None
    error: str | None = None


_SWEEP_PARAMS = ("jk", "idirect", "separation")


def model_at(model: ChainModel, param: str, value: float) -> ChainModel:
    """Model with one swept parameter replaced; ``separation`` recenters the impurities."""
    if param in ("jk", "idirect"):
        return replace(model, **{param: float(value)})
    if param == "separation":
        d = int(round(value))
        if abs(value - d) > 1e-9 or d < 0:
            raise ValueError(f"separation must be a nonnegative integer, got {value!r}")
        if (model.sites - 1 - d) % 2 or d > model.sites - 1:
            raise ValueError(f"separation {d} cannot be centered on {model.sites} sites")
        xa = (model.sites - 1 - d) // 2
        return replace(model, xa=xa, xb=xa + d)
    raise ValueError(f"param must be one of {_SWEEP_PARAMS}, got {param!r}")


def _analyze_point(model: ChainModel, param: str, value: float, gs_opts: dict) -> SweepPoint:
    try:
        m = model_at(model, param, value)
        basis = build_basis(m)
        g = ground_state(build_hamiltonian(m, basis), **gs_opts)
        e_high = sector_ground_energy(m, (m.default_sz2() + 2) / 2.0, **gs_opts)
        singlet = g.energy < e_high - SINGLET_MARGIN
        rho = impurity_rdm(g, basis)
        f_s = measures.spin_correlation(rho)
        return SweepPoint(
            value=float(value),
            energy=g.energy,
            f_s=f_s,
            singlet=singlet,
            degenerate=not singlet,
            werner_residual=measures.werner_residual(rho),
            report=werner.classify(werner.from_correlation(f_s)),
        )
    except (TikmError, ValueError) as exc:
        return SweepPoint(value=float(value), error=f"{type(exc).__name__}: {exc}")


def sweep(
    model: ChainModel,
    param: str,
    grid: Iterable[float],
    max_workers: int | None = None,
    **gs_opts,
) -> list[SweepPoint]:
    """Analyze the ground state along a parameter grid.

    Each grid point is an independent pure computation; points are evaluated
    (possibly concurrently, capped by ``max_workers``) and returned in input
    order.  Points whose ground state is degenerate within its sector, or
    that fail for any other reason, come back with ``error`` set instead of
    aborting the sweep.  A ground multiplet that merely extends across S^z
    sectors (e.g. a ferromagnetically locked triplet, where every member
    shares f_s = +1/4) is reported with ``degenerate=True``.
    """
    if param not in _SWEEP_PARAMS:
        raise ValueError(f"param must be one of {_SWEEP_PARAMS}, got {param!r}")
    values = [float(v) for v in grid]
    if max_workers is None:
        env = os.environ.get("KE_THREADS", "")
        max_workers = int(env) if env.isdigit() and int(env) > 0 else (os.cpu_count() or 1)
    if max_workers <= 1 or len(values) <= 1:
        return [_analyze_point(model, param, v, gs_opts) for v in values]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda v: _analyze_point(model, param, v, gs_opts), values))


def point_correlation(model: ChainModel, param: str, value: float, **gs_opts) -> float:
    """f_s of the (unique) sector ground state at one parameter value."""
    m = model_at(model, param, value)
    basis = build_basis(m)
    g = ground_state(build_hamiltonian(m, basis), **gs_opts)
    return measures.spin_correlation(impurity_rdm(g, basis))


def find_crossing(
    model: ChainModel,
    param: str,
    lo: float,
    hi: float,
    target_fs: float = -0.25,
    tol: float = 1e-6,
    pre_points: int = 9,
    **gs_opts,
) -> float:
    """Bisect for the parameter value where f_s crosses ``target_fs``.

    Monotonicity of f_s is checked on a coarse pre-grid (NonMonotoneError
    lists the offending points) and the endpoints must straddle the target
    (NoBracketError otherwise).  Bisection narrows the parameter bracket
    below ``tol``; the bracket always contains the crossing, so the returned
    midpoint is within ``tol`` of it.  Endpoint order does not matter.
    """
    lo, hi = float(lo), float(hi)
    if lo > hi:
        lo, hi = hi, lo
    if lo == hi:
        raise NoBracketError(f"empty interval [{lo}, {hi}]")
    if pre_points < 2:
        raise ValueError(f"pre_points must be >= 2, got {pre_points}")
    xs = np.linspace(lo, hi, pre_points)
    fs = [point_correlation(model, param, x, **gs_opts) for x in xs]
    direction = np.sign(fs[-1] - fs[0])
    offending = [
        (float(xs[k]), fs[k], float(xs[k + 1]), fs[k + 1])
        for k in range(len(xs) - 1)
        if direction * (fs[k + 1] - fs[k]) < -1e-12
    ]
    if direction == 0.0 or offending:
        raise NonMonotoneError(
            f"f_s is not monotone in {param} on [{lo}, {hi}]",
            points=offending or [(lo, fs[0], hi, fs[-1])],
        )
    f_lo, f_hi = fs[0] - target_fs, fs[-1] - target_fs
    if f_lo * f_hi > 0.0:
        raise NoBracketError(
            f"f_s does not cross {target_fs} on [{lo}, {hi}] (endpoints {fs[0]:.6f}, {fs[-1]:.6f})"
        )
    a, b, f_a = lo, hi, f_lo
    while b - a >= tol:
        mid = 0.5 * (a + b)
        f_mid = point_correlation(model, param, mid, **gs_opts) - target_fs
        if abs(f_mid) < 1e-12:
            return mid
        if (f_mid > 0.0) == (f_a > 0.0):
            a, f_a = mid, f_mid
        else:
            b = mid
    return 0.5 * (a + b)


_MODEL_FILE_KEYS = {
    "sites": int,
    "hopping": float,
    "jk": float,
    "idirect": float,
    "xa": int,
    "xb": int,
    "nup": int,
    "ndn": int,
}


def parse_model_file(path: str) -> dict:
    """Read ``key = value`` pairs (one per line, '#' comments) describing a model."""
    out: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
            key, _, value = (s.strip() for s in line.partition("="))
            if key not in _MODEL_FILE_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = _MODEL_FILE_KEYS[key](value)
    return out


def load_model(path: str) -> ChainModel:
    return ChainModel(**parse_model_file(path))
