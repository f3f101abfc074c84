import os

from .errors import TooLarge

ENUMERATION_MAX = 20  # 2^(n+1) group elements
PAIR_SCAN_MAX = 10  # 4^n ordered exponent pairs
MATRIX_SCAN_MAX = 4  # 2^(n*n) matrices

_ENV = "SIGNEDALG_MAX_N"


def limit(default: int) -> int:
    raw = os.environ.get(_ENV)
    if not raw:
        return default
    try:
        return max(default, int(raw))
    except ValueError:
        return default


def check(n: int, default: int, what: str) -> None:
    bound = limit(default)
    if n > bound:
        raise TooLarge(f"{what}: n={n} exceeds bound {bound} (raise with {_ENV})")
