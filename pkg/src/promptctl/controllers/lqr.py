"""Discrete-time linear-quadratic regulator.

The state-feedback gain comes from the fixed point of the discrete
algebraic Riccati recursion

    P <- Q + A'PA - A'PB (R + B'PB)^-1 B'PA,       P0 = Q,

iterated until the max-norm change drops below a tolerance, after which

    K = (R + B'PB)^-1 B'PA      and      u = -K x.

On success the closed loop A - BK has spectral radius < 1.  The plant model
(A, B) must be supplied by the caller; nothing here identifies it online.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..errors import IllConditionedError, NonStabilizableError


def _as_matrix(value, name: str) -> np.ndarray:
    m = np.array(value, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"{name} must be a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} must be finite")
    return m


@dataclass(frozen=True)
class LqrParams:
    """State map A, input map B, weights Q and R, and the solved gain K."""

    a: np.ndarray
    b: np.ndarray
    q: np.ndarray
    r: np.ndarray
    k: np.ndarray | None = None

    def __post_init__(self):
        a = _as_matrix(self.a, "a")
        b = _as_matrix(self.b, "b")
        q = _as_matrix(self.q, "q")
        r = _as_matrix(self.r, "r")
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError(f"a must be square, got {a.shape}")
        if b.shape[0] != n:
            raise ValueError(f"b must have {n} rows, got {b.shape}")
        m = b.shape[1]
        if q.shape != (n, n):
            raise ValueError(f"q must be {n}x{n}, got {q.shape}")
        if r.shape != (m, m):
            raise ValueError(f"r must be {m}x{m}, got {r.shape}")
        for name, mat in (("q", q), ("r", r)):
            if not np.allclose(mat, mat.T, atol=1e-10):
                raise ValueError(f"{name} must be symmetric")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @property
    def n_states(self) -> int:
        return self.a.shape[0]

    @property
    def n_inputs(self) -> int:
        return self.b.shape[1]


def lqr_gain(params: LqrParams, tol: float = 1e-12, max_iter: int = 10_000) -> np.ndarray:
    """Solve the Riccati fixed point by iteration and return the gain K.

    Raises :class:`NonStabilizableError` if the iteration does not settle
    within ``max_iter`` steps and :class:`IllConditionedError` if the inner
    inversion of (R + B'PB) is singular.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")

    a, b, q, r = params.a, params.b, params.q, params.r
    p = q.copy()
    for _ in range(max_iter):
        btpb = r + b.T @ p @ b
        btpa = b.T @ p @ a
        try:
            gain = np.linalg.solve(btpb, btpa)
        except np.linalg.LinAlgError as exc:
            raise IllConditionedError(f"R + B'PB is singular: {exc}") from exc
        p_next = q + a.T @ p @ a - a.T @ p @ b @ gain
        p_next = 0.5 * (p_next + p_next.T)
        if not np.all(np.isfinite(p_next)):
            raise IllConditionedError("Riccati iterate diverged to non-finite values")
        if np.max(np.abs(p_next - p)) < tol:
            p = p_next
            break
        p = p_next
    else:
        raise NonStabilizableError(
            f"Riccati iteration did not converge within {max_iter} steps"
        )

    try:
        k = np.linalg.solve(r + b.T @ p @ b, b.T @ p @ a)
    except np.linalg.LinAlgError as exc:
        raise IllConditionedError(f"R + B'PB is singular: {exc}") from exc

    closed_loop = a - b @ k
    radius = np.max(np.abs(np.linalg.eigvals(closed_loop)))
    if radius >= 1.0:
        raise NonStabilizableError(
            f"closed loop is not a contraction (spectral radius {radius:.6f})"
        )
    return k


def lqr_step(params: LqrParams, x: np.ndarray) -> np.ndarray:
    """State feedback u = -K x.  Requires a solved gain."""
    if params.k is None:
        raise ValueError("gain not computed; call lqr_gain first")
    x = np.asarray(x, dtype=np.float64)
    k = np.asarray(params.k, dtype=np.float64)
    if x.shape != (k.shape[1],):
        raise ValueError(f"state has shape {x.shape}, gain expects ({k.shape[1]},)")
    return -(k @ x)


def lqr_cost(
    trajectory: list[tuple[np.ndarray, np.ndarray]],
    q: np.ndarray,
    r: np.ndarray,
) -> float:
    """Finite-horizon quadratic cost sum of x'Qx + u'Ru over a trajectory."""
    if not trajectory:
        raise ValueError("trajectory must contain at least one (x, u) pair")
    q = np.asarray(q, dtype=np.float64)
    r = np.asarray(r, dtype=np.float64)
    total = 0.0
    for x, u in trajectory:
        x = np.asarray(x, dtype=np.float64).reshape(-1)
        u = np.asarray(u, dtype=np.float64).reshape(-1)
        if x.shape[0] != q.shape[0] or u.shape[0] != r.shape[0]:
            raise ValueError(
                f"trajectory entry sized ({x.shape[0]}, {u.shape[0]}) does not match "
                f"weights sized ({q.shape[0]}, {r.shape[0]})"
            )
        total += float(x @ q @ x + u @ r @ u)
    return total


class LqrController:
    """Loop-facing wrapper: regulates the deviation x = y - r = -e.

    With ``u = -K x`` and ``x = -error`` the applied control is ``K @ error``.
    The gain is solved at construction time if not already present.
    """

    def __init__(self, params: LqrParams, tol: float = 1e-12, max_iter: int = 10_000):
        if params.k is None:
            params = replace(params, k=lqr_gain(params, tol=tol, max_iter=max_iter))
        self.params = params

    def step(self, error: np.ndarray, dt: float = 1.0) -> np.ndarray:
        del dt  # static feedback, no sample-time dependence
        return lqr_step(self.params, -np.asarray(error, dtype=np.float64))

    def reset(self) -> None:
        pass  # no internal state
