"""Per-step solves of template inference: 2x2 systems mod q and the simplest CRT lift."""

from arrayldpc.core.arithmetic import crt_lift, mod_inverse
from arrayldpc.core.interfaces import InvalidParameterError
from arrayldpc.models.rational import ModRational


def solve_column_pair(alpha_r: int, alpha_next: int, gamma: int, delta: int, q: int) -> tuple[int, int]:
    """Unique (x, y) with x + gamma*y = alpha_r and x + delta*y = alpha_next (mod q).

    Raises:
        InvalidParameterError: If gamma == delta (singular system)
    """
    if (gamma - delta) % q == 0:
        raise InvalidParameterError(f"singular system: rows {gamma} and {delta} coincide mod {q}")
    y = mod_inverse(delta - gamma, q) * (alpha_next - alpha_r) % q
    x = (alpha_r - gamma * y) % q
    return x, y


def simplest_crt_solution(v1: int, q1: int, v2: int, q2: int, multiplier_bound: int) -> ModRational:
    """Simplest rational u/k with u/k = v1 (mod q1) and u/k = v2 (mod q2).

    For each k in 1..multiplier_bound the lift u_k of (k*v1, k*v2) is scored by
    max(k, min(u_k, q1*q2 - u_k)); the lowest score wins, ties going to the smaller k.
    The numerator is u_k or u_k - q1*q2, whichever is smaller in absolute value.
    """
    if multiplier_bound < 1:
        raise InvalidParameterError(f"multiplier bound must be >= 1, got {multiplier_bound}")
    n = q1 * q2
    best: tuple[int, int, int] | None = None  # (score, k, numerator)
    for k in range(1, multiplier_bound + 1):
        u = crt_lift(k * v1 % q1, q1, k * v2 % q2, q2)
        numerator = u if u <= n - u else u - n
        score = max(k, abs(numerator))
        if best is None or score < best[0]:
            best = (score, k, numerator)
    assert best is not None
    return ModRational(num=best[2], den=best[1])
