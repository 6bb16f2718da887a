"""Verma-flag characters and translation by the adjoint module."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Mapping

from .blocks import Atypical, AtypicalLabel, BlockId, classify, label, typical_tilting_char
from .rootdata import adjoint_weights
from .symbols import Symbol, atypicality, to_symbol

__all__ = [
    "VermaChar", "tensor_adjoint", "project_block", "translate", "seed_tilting_char",
    "Unknown",
]


class Unknown(Exception):
    """A character the available data does not determine."""


class VermaChar(Counter):
    """Multiset ``Symbol -> multiplicity`` of Verma modules in a flag."""

    def __init__(self, data: Mapping[Symbol, int] | Iterable[Symbol] | None = None):
        super().__init__()
        if data is not None:
            self.update(data)
        self._prune()

    def _prune(self) -> None:
        for key in [k for k, v in self.items() if v == 0]:
            del self[key]
        if any(v < 0 for v in self.values()):
            raise ValueError("negative multiplicity in a Verma flag")

    def __add__(self, other: Counter) -> VermaChar:
        out = VermaChar(self)
        out.update(other)
        return out

    def diff(self, other: Mapping[Symbol, int]) -> dict[Symbol, int]:
        """Symbol-level signed difference ``self - other`` (zero entries omitted)."""
        keys = set(self) | set(other)
        return {s: self.get(s, 0) - other.get(s, 0)
                for s in sorted(keys) if self.get(s, 0) != other.get(s, 0)}

    def length(self) -> int:
        return sum(self.values())

    def sorted_items(self) -> list[tuple[Symbol, int]]:
        return sorted(self.items())

    def __repr__(self) -> str:
        inner = ", ".join(f"{s}: {m}" for s, m in self.sorted_items())
        return f"VermaChar({{{inner}}})"


_ADJ = [(to_symbol(w), m) for w, m in sorted(adjoint_weights().items())]


def tensor_adjoint(c: Mapping[Symbol, int]) -> VermaChar:
    """``ch(M_lam (x) V) = sum_mu mult_V(mu) ch M_{lam+mu}`` summed over the flag."""
    out: Counter = Counter()
    for lam, m in c.items():
        for mu, mv in _ADJ:
            out[lam + mu] += m * mv
    return VermaChar(out)


def project_block(c: Mapping[Symbol, int], b: BlockId) -> VermaChar:
    return VermaChar({s: m for s, m in c.items() if classify(s) == b})


def translate(seed: Mapping[Symbol, int], b: BlockId) -> VermaChar:
    """The translation functor: tensor with the adjoint module, then project to ``b``."""
    return project_block(tensor_adjoint(seed), b)


TiltingStore = Callable[[AtypicalLabel], Mapping[Symbol, int]]


def seed_tilting_char(g: Symbol, store: TiltingStore | None = None) -> VermaChar:
    """Tilting character of an initial module ``T_g``.

    Typical ``g`` use the Weyl-group formula; atypical ``g`` are looked up in
    ``store`` (which raises :class:`Unknown` when the label is not derived).
    """
    if not atypicality(g):
        return VermaChar(typical_tilting_char(g))
    if store is None:
        raise Unknown(f"seed {g} is atypical and no tilting store was given")
    return VermaChar(store(label(g)))


def block_of_k(k: int) -> Atypical:
    return Atypical(k)
