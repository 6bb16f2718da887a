"""Reference data transcribed for cross-checks: the anti-dominant table and the
pairing chains used to prove indecomposability."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

__all__ = ["ARROW_ROOTS", "TABLE2", "TABLE2_KMAX", "TABLE2_NMAX", "ProofChain", "PROOF_CHAINS"]

# arrow colour -> f(k, n) - f(k, n+1)
ARROW_ROOTS = {"gray": "d+e1", "magenta": "d+e2", "cyan": "d-e3"}

TABLE2_KMAX = 3
TABLE2_NMAX = 8

# per k: (symbol as printed, colour of the symbol, colour of the arrow to the next row)
TABLE2: dict[int, list[tuple[str, str, str]]] = {
    0: [
        ("[-1/2|-1/2,-1/2,1]", "red", "magenta"),
        ("[-3/2|0,-3/2,3/2]", "blue", "cyan"),
        ("[-5/2|-1/2,-2,5/2]", "black", "cyan"),
        ("[-7/2|-1,-5/2,7/2]", "black", "cyan"),
        ("[-9/2|-3/2,-3,9/2]", "black", "cyan"),
        ("[-11/2|-2,-7/2,11/2]", "black", "cyan"),
        ("[-13/2|-5/2,-4,13/2]", "black", "cyan"),
        ("[-15/2|-3,-9/2,15/2]", "black", "cyan"),
        ("[-17/2|-7/2,-5,17/2]", "black", "cyan"),
    ],
    1: [
        ("[-1/2|-1/2,-2,5/2]", "black", "gray"),
        ("[-3/2|-3/2,-3/2,3]", "red", "magenta"),
        ("[-5/2|-1,-5/2,7/2]", "black", "magenta"),
        ("[-7/2|-1/2,-7/2,4]", "black", "magenta"),
        ("[-9/2|0,-9/2,9/2]", "blue", "cyan"),
        ("[-11/2|-1/2,-5,11/2]", "black", "cyan"),
        ("[-13/2|-1,-11/2,13/2]", "black", "cyan"),
        ("[-15/2|-3/2,-6,15/2]", "black", "cyan"),
        ("[-17/2|-2,-13/2,17/2]", "black", "cyan"),
    ],
    2: [
        ("[-1/2|-1/2,-7/2,4]", "black", "gray"),
        ("[-3/2|-3/2,-3,9/2]", "black", "gray"),
        ("[-5/2|-5/2,-5/2,5]", "red", "magenta"),
        ("[-7/2|-2,-7/2,11/2]", "black", "magenta"),
        ("[-9/2|-3/2,-9/2,6]", "black", "magenta"),
        ("[-11/2|-1,-11/2,13/2]", "black", "magenta"),
        ("[-13/2|-1/2,-13/2,7]", "black", "magenta"),
        ("[-15/2|0,-15/2,15/2]", "blue", "cyan"),
        ("[-17/2|-1/2,-8,17/2]", "black", "cyan"),
    ],
    3: [
        ("[-1/2|-1/2,-5,11/2]", "black", "gray"),
        ("[-3/2|-3/2,-9/2,6]", "black", "gray"),
        ("[-5/2|-5/2,-4,13/2]", "black", "gray"),
        ("[-7/2|-7/2,-7/2,7]", "red", "magenta"),
        ("[-9/2|-3,-9/2,15/2]", "black", "magenta"),
        ("[-11/2|-5/2,-11/2,8]", "black", "magenta"),
        ("[-13/2|-2,-13/2,17/2]", "black", "magenta"),
        ("[-15/2|-3/2,-15/2,9]", "black", "magenta"),
        ("[-17/2|-1,-17/2,19/2]", "black", "magenta"),
    ],
}


@dataclass(frozen=True)
class ProofChain:
    """``(f_src^s, beta) = (f_src^s - beta, gamma) = 0`` and ``f_src^s - beta - gamma = f_dst^t``.

    Layers are expressions in ``k``.  ``printed`` keeps a target that was
    written differently where it was stated; the arithmetic decides.
    """

    case: str
    ks: tuple[int, ...]
    src: str
    sigma: str
    beta: str
    gamma: str
    dst: str
    target: str
    printed: Optional[str] = None


_K = (1, 2, 3)

PROOF_CHAINS: tuple[ProofChain, ...] = (
    ProofChain("4.1(4)", _K, "k-1", "12", "d-e2", "d-e3", "k+1", "12"),
    ProofChain("4.1(4)", _K, "k-1", "212", "d+e3", "d+e2", "k+1", "212"),
    ProofChain("4.1(4)", _K, "k-1", "1212", "d+e3", "d+e1", "k+1", "1212",
               printed="f_2^1212"),
    ProofChain("4.1(4)", _K, "k-1", "21212", "d-e2", "d-e1", "k+1", "21212",
               printed="f_2^21212"),
    ProofChain("4.1(5)", _K, "3k", "21", "d-e1", "d+e2", "3k+2", "21"),
    ProofChain("4.1(5)", _K, "3k", "121", "d-e2", "d+e1", "3k+2", "121",
               printed="f_{3k+2}^21"),
    ProofChain("4.1(5)", _K, "3k", "2121", "d+e3", "d-e1", "3k+2", "2121",
               printed="f_2^2121"),
    ProofChain("4.1(5)", _K, "3k", "12121", "d+e3", "d-e2", "3k+2", "12121",
               printed="f_2^12121"),
    ProofChain("4.2", (0,), "0", "2", "d-e1", "d+e2", "2", "21"),
    ProofChain("4.2", (0,), "0", "12", "d-e2", "d+e1", "2", "121"),
    ProofChain("4.2", (0,), "0", "212", "d+e3", "d-e1", "2", "2121"),
    ProofChain("4.2", (0,), "0", "1212", "d+e3", "d-e2", "2", "12121"),
)
