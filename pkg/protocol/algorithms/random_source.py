"""Per-player random arm draws"""
from typing import Sequence, Union

import numpy as np


class UniformArmSampler:
    """
    Uniform draws in 0..K-1 from one player's own substream.

    Draws are fetched from numpy in batches; the sequence only depends on
    the seed and on the number of draws made so far.
    """

    def __init__(self, seed: Union[int, Sequence[int]], K: int, batch_size: int = 1024):
        self.K = K
        self._rng = np.random.default_rng(seed)
        self._batch_size = batch_size
        self._buffer = []
        self._pos = 0

    def draw(self) -> int:
        if self._pos >= len(self._buffer):
            self._buffer = self._rng.integers(0, self.K, size=self._batch_size).tolist()
            self._pos = 0
        arm = self._buffer[self._pos]
        self._pos += 1
        return arm
