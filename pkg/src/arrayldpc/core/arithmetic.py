"""Integer, modular and rational-mod-q arithmetic.

All functions are pure and operate on Python integers, which are unbounded, so the
q1*q2 products of the CRT lift never overflow.
"""

from sympy import isprime

from arrayldpc.core.interfaces import (
    EvaluationUndefinedError,
    InvalidParameterError,
    NonInvertibleError,
    UndefinedInputError,
)
from arrayldpc.models.rational import ModRational


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid.

    Returns:
        (g, kappa, eta) with g = gcd(a, b) > 0 and kappa*a + eta*b = g

    Raises:
        UndefinedInputError: If a = b = 0
    """
    if a == 0 and b == 0:
        raise UndefinedInputError("ext_gcd(0, 0) is undefined")
    if b == 0:
        return (abs(a), 1 if a > 0 else -1, 0)
    g, x1, y1 = ext_gcd(b, a % b)
    return (g, y1, x1 - (a // b) * y1)


def mod_inverse(a: int, q: int) -> int:
    """Inverse of a modulo q, in [0, q).

    Raises:
        NonInvertibleError: If a shares a factor with q (a = 0 mod q for prime q)
    """
    if q < 2:
        raise InvalidParameterError(f"modulus must be at least 2, got {q}")
    if a % q == 0:
        raise NonInvertibleError(f"{a} is not invertible modulo {q}")
    g, kappa, _ = ext_gcd(a % q, q)
    if g != 1:
        raise NonInvertibleError(f"{a} is not invertible modulo {q} (gcd {g})")
    return kappa % q


def eval_rational(r: ModRational, q: int) -> int:
    """Residue of num * den^-1 modulo q.

    Raises:
        EvaluationUndefinedError: If q divides the denominator
    """
    if r.den % q == 0:
        raise EvaluationUndefinedError(f"{r} is undefined modulo {q}")
    if r.den == 1:
        return r.num % q
    return (r.num % q) * mod_inverse(r.den, q) % q


def crt_lift(v1: int, q1: int, v2: int, q2: int) -> int:
    """Unique u in [0, q1*q2) with u = v1 (mod q1) and u = v2 (mod q2).

    Computed as v1 + q1*kappa*(v2 - v1) mod q1*q2 where kappa*q1 + eta*q2 = 1.

    Raises:
        InvalidParameterError: If the moduli are equal or not coprime
    """
    if q1 == q2:
        raise InvalidParameterError(f"CRT moduli must be distinct, got {q1} twice")
    g, kappa, _ = ext_gcd(q1, q2)
    if g != 1:
        raise InvalidParameterError(f"CRT moduli {q1} and {q2} are not coprime")
    n = q1 * q2
    return (v1 + q1 * kappa * (v2 - v1)) % n


def is_odd_prime(q: int) -> bool:
    return q > 2 and bool(isprime(q))


def require_odd_prime(q: int, what: str = "q") -> None:
    """Raise InvalidParameterError unless q is an odd prime."""
    if not is_odd_prime(q):
        raise InvalidParameterError(f"{what} must be an odd prime, got {q}")
