"""Binary Huffman codes with deterministic tie-breaking."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import log2
from typing import Mapping


def entropy_bits(probs) -> float:
    return -sum(float(p) * log2(float(p)) for p in probs if p)


@dataclass(frozen=True)
class Codebook:
    code: dict          # symbol -> codeword ('0'/'1' string)
    probs: dict         # symbol -> Fraction

    @property
    def expected_length(self) -> Fraction:
        return sum((p * len(self.code[s]) for s, p in self.probs.items()), Fraction(0))

    @property
    def entropy(self) -> float:
        return entropy_bits(self.probs.values())

    def kraft_sum(self) -> Fraction:
        return sum((Fraction(1, 2 ** len(w)) for w in self.code.values()), Fraction(0))

    def is_prefix_free(self) -> bool:
        words = sorted(self.code.values())
        return all(not b.startswith(a) for a, b in zip(words, words[1:]))

    def encode(self, symbol) -> str:
        return self.code[symbol]

    def decode_prefix(self, bits: str):
        """Decode the codeword at the start of ``bits``; returns (symbol, used)."""
        inv = self.__dict__.get("_inverse")
        if inv is None:
            inv = {w: s for s, w in self.code.items()}
            object.__setattr__(self, "_inverse", inv)
        for k in range(1, len(bits) + 1):
            if bits[:k] in inv:
                return inv[bits[:k]], k
        raise ValueError("no codeword at the start of the bit string")


def huffman_codebook(dist: Mapping) -> Codebook:
    """Optimal prefix-free binary code for ``{symbol: probability}``.

    Ties are broken by creation order (leaves in the mapping's iteration
    order first), so the output is deterministic. A single-symbol alphabet
    gets the one-bit codeword ``"0"``.
    """
    probs = {s: Fraction(p) for s, p in dist.items()}
    if not probs:
        raise ValueError("empty distribution")
    if any(p <= 0 for p in probs.values()) or sum(probs.values()) != 1:
        raise ValueError("probabilities must be positive and sum to 1")
    symbols = list(probs)
    if len(symbols) == 1:
        return Codebook({symbols[0]: "0"}, probs)
    # heap of (weight, order, node); node is a leaf index or (left, right)
    heap = [(probs[s], k, k) for k, s in enumerate(symbols)]
    heapq.heapify(heap)
    counter = len(symbols)
    while len(heap) > 1:
        w0, _, n0 = heapq.heappop(heap)
        w1, _, n1 = heapq.heappop(heap)
        heapq.heappush(heap, (w0 + w1, counter, (n0, n1)))
        counter += 1
    code = {}
    stack = [(heap[0][2], "")]
    while stack:
        node, prefix = stack.pop()
        if isinstance(node, tuple):
            stack.append((node[1], prefix + "1"))
            stack.append((node[0], prefix + "0"))
        else:
            code[symbols[node]] = prefix
    return Codebook(code, probs)
