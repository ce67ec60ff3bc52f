"""Indivisibility witnesses built from the structural physical approximation.

Construction: take the on-boundary SPA state sigma_tilde of a snapshot map,
let tau be the eigenvector of its (unique) minimum eigenvalue, and set

    W = nu * (id (x) N)(|tau><tau|).

W is the observable measured on the shared maximally entangled input in the
lab. Because the generator's jump operators are Hermitian, the snapshot map is
self-adjoint under the Hilbert-Schmidt pairing (the adjoint identity below),
so that expectation equals nu * <tau| C |tau> with C the Choi state of the
dynamics being probed. Evaluation against Choi states therefore goes through
the projector form, which is manifestly nonnegative on every positive
semidefinite (divisible-snapshot) Choi state and negative on the Choi state
the witness was built from whenever that state has a negative eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .choi import ChoiState
from .errors import DegenerateMinimum, DimensionMismatch, NonHermitianJump
from .kernel import TOL_HERM, dag, eig_hermitian, frozen, is_hermitian, projector
from .lindblad import SmallTimeMap, extend_and_apply
from .spa import optimal_decomposition

MARKOVIAN_CONSISTENT = "markovian_consistent"
NON_MARKOVIAN_DETECTED = "non_markovian_detected"


@dataclass(frozen=True)
class WitnessOperator:
    """Witness matrix with the (nu, omega, tau) provenance used to build it.

    matrix is Hermitian and reconstructible as
    nu * extend_and_apply(source_map, |tau><tau|).
    """

    matrix: np.ndarray
    nu: float
    omega: float
    tau: np.ndarray
    source_map: SmallTimeMap


def adjoint_identity_residual(
    G: np.ndarray,
    alpha: np.ndarray,
    rho: np.ndarray,
    gamma: float,
    tol_herm: float = TOL_HERM,
) -> float:
    """Two-sided check of the adjoint identity for a Hermitian jump G.

    With N(rho) = rho + gamma*(G rho G^dag - {G^dag G, rho}/2) extended as
    id (x) N, returns |Tr[|a><a| (id(x)N)(rho)] - Tr[(id(x)N)(|a><a|) rho]|.
    Both sides are computed independently; the result should be at roundoff
    level. Raises NonHermitianJump when G fails the Hermiticity check, since
    the identity is only asserted under that hypothesis.
    """
    G = np.asarray(G, dtype=complex)
    if not is_hermitian(G, tol_herm):
        raise NonHermitianJump("adjoint identity requires a Hermitian jump operator")
    rho = np.asarray(rho, dtype=complex)
    alpha = np.asarray(alpha, dtype=complex)
    n = rho.shape[0]
    k = G.shape[0]
    if n % k != 0 or alpha.shape != (n,):
        raise DimensionMismatch(f"incompatible shapes: G {G.shape}, alpha {alpha.shape}, rho {rho.shape}")
    E = np.kron(np.eye(n // k), G)
    K = np.kron(np.eye(n // k), dag(G) @ G)

    def ext(X):
        return X + gamma * (E @ X @ dag(E) - 0.5 * (K @ X + X @ K))

    P = projector(alpha)
    lhs = np.trace(P @ ext(rho))
    rhs = np.trace(ext(P) @ rho)
    return float(abs(lhs - rhs))


def adjoint_identity_max_residual(draws: int = 100, seed: int = 0) -> float:
    """Max adjoint-identity residual over a seeded randomized suite.

    Each draw uses a random Hermitian 2x2 jump, a random unit 4-vector, a
    random 4x4 density matrix and a coefficient in [-1, 1].
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        A = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        G = (A + dag(A)) / 2
        alpha = rng.normal(size=4) + 1j * rng.normal(size=4)
        alpha /= np.linalg.norm(alpha)
        B = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = B @ dag(B)
        rho /= np.trace(rho).real
        gamma = rng.uniform(-1.0, 1.0)
        worst = max(worst, adjoint_identity_residual(G, alpha, rho, gamma))
    return worst


def build_witness(
    m: SmallTimeMap,
    sigma: np.ndarray | None = None,
    degeneracy_tol: float = 1e-12,
) -> WitnessOperator:
    """Witness operator for the snapshot map m.

    sigma is the bipartite input state fed to the SPA decomposition; the
    default (None) is the canonical maximally entangled projector, for which
    sigma_tilde coincides with the on-boundary SPA Choi state. Raises
    DegenerateMinimum when the two lowest eigenvalues of sigma_tilde are
    within degeneracy_tol, because the minimizing eigenvector is then not
    well defined.
    """
    dec = optimal_decomposition(m)
    if sigma is None:
        sigma_tilde = dec.spa_choi.matrix
    else:
        sigma = np.asarray(sigma, dtype=complex)
        n = m.dim**2
        if sigma.shape != (n, n):
            raise DimensionMismatch(f"sigma shape {sigma.shape}, expected {(n, n)}")
        sigma_tilde = dec.omega * np.eye(n) / n + dec.nu * extend_and_apply(m, sigma)
    spec = eig_hermitian(sigma_tilde)
    if spec.eigenvalues[1] - spec.eigenvalues[0] < degeneracy_tol:
        raise DegenerateMinimum(
            f"minimum eigenvalue of the SPA state is degenerate at t={m.t:g} "
            f"(gap {spec.eigenvalues[1] - spec.eigenvalues[0]:.3g})"
        )
    tau = spec.eigenvectors[:, 0]
    matrix = dec.nu * extend_and_apply(m, projector(tau))
    return WitnessOperator(
        matrix=frozen(matrix),
        nu=dec.nu,
        omega=dec.omega,
        tau=frozen(tau),
        source_map=m,
    )


def evaluate(W: WitnessOperator, choi: ChoiState) -> float:
    """Witness value on a Choi state: nu * <tau| C |tau>.

    This is the expectation of the stored observable on the maximally
    entangled input under the probed dynamics (the adjoint identity moves the
    map from the witness side to the state side). On the Choi state of the
    witness's own source map it equals nu * lambda_min(C), i.e.
    lambda_min(sigma_tilde) - omega/4 for qubits.
    """
    if choi.matrix.shape[0] != W.tau.shape[0]:
        raise DimensionMismatch(
            f"witness dimension {W.tau.shape[0]} vs Choi dimension {choi.matrix.shape[0]}"
        )
    return float(np.real(W.nu * np.vdot(W.tau, choi.matrix @ W.tau)))


def classify_by_witness(W: WitnessOperator, choi: ChoiState, tolerance: float = 1e-9) -> str:
    """NON_MARKOVIAN_DETECTED when the witness value drops below -tolerance."""
    return NON_MARKOVIAN_DETECTED if evaluate(W, choi) < -tolerance else MARKOVIAN_CONSISTENT


def _complex_pairs(arr: np.ndarray):
    if arr.ndim == 1:
        return [[z.real, z.imag] for z in arr]
    return [[[z.real, z.imag] for z in row] for row in arr]


def witness_to_dict(W: WitnessOperator) -> dict:
    """JSON-exportable form: matrix and tau as [re, im] pairs plus provenance."""
    return {
        "matrix": _complex_pairs(W.matrix),
        "nu": W.nu,
        "omega": W.omega,
        "tau": _complex_pairs(W.tau),
        "source_map": {
            "t": W.source_map.t,
            "epsilon": W.source_map.epsilon,
            "generator": W.source_map.generator.label,
        },
    }
