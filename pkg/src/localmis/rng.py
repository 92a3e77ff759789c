"""Counter-based random streams keyed by (seed, trial path, iteration, node).

Every uniform consumed anywhere in the package is addressed by an explicit
key, so a full run is a pure function of (graph, algorithm, profile, root
seed) and trials can be split or parallelised without sharing state.  The
generator is Philox, keyed through ``numpy.random.SeedSequence``, whose
output is platform-stable.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RngStream"]

_MASK64 = (1 << 64) - 1


class RngStream:
    """Root seed plus a path of spawn indices; immutable and cheap to pass."""

    __slots__ = ("seed", "path")

    def __init__(self, seed: int, path: tuple[int, ...] = ()):
        self.seed = int(seed) & _MASK64
        self.path = tuple(int(p) for p in path)

    def child(self, index: int) -> "RngStream":
        """Independent substream, e.g. one per trial."""
        return RngStream(self.seed, self.path + (int(index),))

    def _generator(self, iteration: int, draw: int) -> np.random.Generator:
        ss = np.random.SeedSequence([self.seed, *self.path, int(iteration), int(draw)])
        return np.random.Generator(np.random.Philox(ss))

    def uniforms(self, iteration: int, n: int, draw: int = 0) -> np.ndarray:
        """One uniform in [0, 1) per node for the given iteration."""
        return self._generator(iteration, draw).random(n)

    def uniform_matrix(
        self, iteration: int, rows: int, cols: int, draw: int = 0
    ) -> np.ndarray:
        """(rows, cols) uniforms; used for batched Monte-Carlo trials."""
        return self._generator(iteration, draw).random((rows, cols))

    def ranks(
        self, iteration: int, n: int, alive: np.ndarray | None = None
    ) -> np.ndarray:
        """Per-node ranks with ties among alive nodes resolved by resampling.

        Ties have probability ~2^-53 per pair; the resampling loop exists so
        rank comparisons across the package can treat ranks as distinct.
        """
        r = self.uniforms(iteration, n)
        draw = 1
        while True:
            vals = r[alive] if alive is not None else r
            uniq, counts = np.unique(vals, return_counts=True)
            if not np.any(counts > 1):
                return r
            dup_vals = uniq[counts > 1]
            sel = np.isin(r, dup_vals)
            if alive is not None:
                sel &= alive
            r[sel] = self.uniforms(iteration, n, draw=draw)[sel]
            draw += 1

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, path={self.path})"


def as_stream(rng: "RngStream | int") -> RngStream:
    """Accept either a stream or a bare integer seed."""
    return rng if isinstance(rng, RngStream) else RngStream(rng)
