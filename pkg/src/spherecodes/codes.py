"""Binary codes and their sphere embeddings.

The interesting configurations in R^14..R^16 come from the
Nordstrom-Robinson code: a nonlinear binary (16, 256, 6) code obtained
here as the Gray image of the length-8 extended cyclic code over Z/4Z
generated by x^3 + 2x^2 + x + 3.  Shortening once or twice and mapping
bits to cube vertices yields the 128-point and 64-point codes.
"""

from __future__ import annotations

import numpy as np

from .energy import PointConfig
from .errors import EmptyShortening


class BinaryCode:
    """A set of distinct binary words of one length.

    Words are stored as a lexicographically sorted (M, length) array of
    0/1 bytes, so equal codes compare equal entry by entry.
    min_distance is the exact minimum pairwise Hamming distance
    (0 for codes with fewer than two words).
    """

    __slots__ = ("words", "min_distance")

    def __init__(self, words: np.ndarray):
        w = np.array(words, dtype=np.uint8)
        if w.ndim != 2:
            raise ValueError(f"words must be a 2-d bit array, got shape {w.shape}")
        if not np.all((w == 0) | (w == 1)):
            raise ValueError("words must contain only bits")
        w = np.unique(w, axis=0)
        if w.shape[0] != np.asarray(words).shape[0]:
            raise ValueError("duplicate words")
        w.flags.writeable = False
        self.words = w
        self.min_distance = self._min_distance()

    def _min_distance(self) -> int:
        w = self.words.astype(np.int16)
        if w.shape[0] < 2:
            return 0
        best = w.shape[1] + 1
        for i in range(w.shape[0] - 1):
            d = np.abs(w[i + 1 :] - w[i]).sum(axis=1)
            best = min(best, int(d.min()))
        return best

    @property
    def length(self) -> int:
        return int(self.words.shape[1])

    @property
    def size(self) -> int:
        return int(self.words.shape[0])

    def __repr__(self) -> str:
        return f"BinaryCode(length={self.length}, size={self.size}, min_distance={self.min_distance})"


def _octacode_words() -> np.ndarray:
    """All 256 words of the extended cyclic code over Z/4Z of length 8.

    Codewords of the length-7 cyclic code generated by
    g(x) = x^3 + 2x^2 + x + 3 (all m(x) g(x) mod x^7 - 1 with deg m < 4),
    extended by an eighth coordinate making the total sum zero mod 4.
    """
    g = np.zeros(7, dtype=np.int64)
    g[[0, 1, 2, 3]] = [3, 1, 2, 1]
    words = np.empty((256, 8), dtype=np.int64)
    idx = 0
    for m0 in range(4):
        for m1 in range(4):
            for m2 in range(4):
                for m3 in range(4):
                    c = np.zeros(7, dtype=np.int64)
                    for shift, coeff in enumerate((m0, m1, m2, m3)):
                        c += coeff * np.roll(g, shift)
                    c %= 4
                    words[idx, :7] = c
                    words[idx, 7] = (-c.sum()) % 4
                    idx += 1
    return words


_GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


def build_nordstrom_robinson() -> BinaryCode:
    """The binary (16, 256, 6) code, as the Gray image of the octacode."""
    quaternary = _octacode_words()
    bits = np.empty((256, 16), dtype=np.uint8)
    for symbol, (hi, lo) in _GRAY.items():
        mask = quaternary == symbol
        bits[:, 0::2][mask] = hi
        bits[:, 1::2][mask] = lo
    return BinaryCode(bits)


def shorten(code: BinaryCode, coordinate: int, value: int) -> BinaryCode:
    """Keep words with the given bit at the coordinate; drop that column."""
    if not 0 <= coordinate < code.length:
        raise ValueError(f"coordinate {coordinate} out of range for length {code.length}")
    if value not in (0, 1):
        raise ValueError(f"value must be a bit, got {value!r}")
    mask = code.words[:, coordinate] == value
    if not np.any(mask):
        raise EmptyShortening(f"no words have bit {value} at coordinate {coordinate}")
    kept = np.delete(code.words[mask], coordinate, axis=1)
    return BinaryCode(kept)


def cube_embed(code: BinaryCode) -> PointConfig:
    """Map words to vertices of the rescaled cube: bit 0 -> +1/sqrt(L), 1 -> -1/sqrt(L).

    Squared Euclidean distances are exactly 4 * (Hamming distance) / L.
    """
    if code.size == 0:
        raise ValueError("cannot embed an empty code")
    signs = 1.0 - 2.0 * code.words.astype(float)
    return PointConfig(signs / np.sqrt(code.length))
