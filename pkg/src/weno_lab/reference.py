"""Fine-grid WENO-JS reference solutions with an on-disk cache.

Each cache file holds the field CSV (``x,<fields>``, 17 significant digits) followed by one footer
line ``# checksum <16 hex digits>``: an 8-byte BLAKE2b digest of everything
above it.  Writers take an exclusive lock and publish by atomic rename, so
readers never see a partial file.
"""

import hashlib
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from filelock import FileLock

from .errors import CacheCorruption, ConfigError
from .io import FMT_EXACT, field_csv_text
from .kernels import SchemeParams

log = logging.getLogger(__name__)

FOOTER = "# checksum "


def cache_root(cache_dir=None):
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get("WENO_LAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "weno_lab"


def _digest(body):
    return hashlib.blake2b(body, digest_size=8).hexdigest()


@dataclass(frozen=True)
class ReferenceSolution:
    """Cell-centre samples of a reference run; ``fields`` has shape ``(k, n)``."""

    x: np.ndarray
    names: tuple
    fields: np.ndarray

    def sample(self, xc):
        """Values at the nearest reference centre to each point of ``xc``.

        A point exactly halfway between two centres (which happens whenever
        the fine grid is an even multiple of the coarse one) gets the mean of
        both neighbours.
        """
        xc = np.asarray(xc, dtype=float)
        x = self.x
        dx = x[1] - x[0]
        s = (xc - x[0]) / dx
        lo = np.clip(np.floor(s).astype(int), 0, len(x) - 1)
        hi = np.clip(lo + 1, 0, len(x) - 1)
        frac = s - lo
        tie = np.abs(frac - 0.5) < 1e-9
        pick = np.where(frac > 0.5, hi, lo)
        out = self.fields[:, pick]
        if np.any(tie):
            out[:, tie] = 0.5 * (self.fields[:, lo[tie]] + self.fields[:, hi[tie]])
        return out


def encode(ref):
    body = field_csv_text(ref.x, dict(zip(ref.names, ref.fields)), FMT_EXACT).encode()
    return body + f"{FOOTER}{_digest(body)}\n".encode()


def decode(blob, path="<memory>"):
    text = blob.decode()
    body, sep, footer = text.rpartition(FOOTER)
    if not sep:
        raise CacheCorruption(f"{path}: missing checksum footer")
    if footer.strip() != _digest(body.encode()):
        raise CacheCorruption(f"{path}: checksum mismatch")
    lines = body.splitlines()
    names = tuple(lines[0].split(",")[1:])
    try:
        data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
    except ValueError as exc:
        raise CacheCorruption(f"{path}: unreadable row ({exc})") from None
    return ReferenceSolution(data[:, 0], names, data[:, 1:].T.copy())


def cache_path(spec, fine_n, t_end, cache_dir=None):
    return cache_root(cache_dir) / f"{spec.name}_N{int(fine_n)}_t{float(t_end)!r}.csv"


def compute_reference(spec, fine_n, t_end):
    """Run WENO-JS at ``fine_n`` cells (no caching)."""
    from .harness import RunConfig, run_simulation

    res = run_simulation(RunConfig(spec.name, SchemeParams.for_variant("js"), n=int(fine_n),
                                   t_end=t_end), diagnostics=False)
    if spec.is_euler:
        rho, u, p = res.primitive()
        return ReferenceSolution(res.grid.x, ("rho", "u", "p"), np.array([rho, u, p]))
    return ReferenceSolution(res.grid.x, ("u",), res.u[None, :].copy())


def reference_solution(spec, fine_n=None, t_end=None, cache_dir=None, coarse_n=None):
    """Cached fine-grid WENO-JS solution of a 1D problem.

    Keyed by ``(problem, fine_n, t_end)``.  A corrupted cache file raises
    :class:`CacheCorruption`; delete it to regenerate.
    """
    if spec.ndim != 1:
        raise ConfigError("reference solutions are one-dimensional")
    fine_n = int(fine_n or spec.reference_n or 2000)
    t_end = spec.t_end if t_end is None else float(t_end)
    if coarse_n is not None and fine_n < 10 * coarse_n:
        raise ConfigError(f"reference grid {fine_n} is not 10x finer than {coarse_n}")
    path = cache_path(spec, fine_n, t_end, cache_dir)
    if path.exists():
        return decode(path.read_bytes(), path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(str(path) + ".lock"):
            if path.exists():  # another writer finished first
                return decode(path.read_bytes(), path)
            log.info("computing %s reference at N=%d, t=%g", spec.name, fine_n, t_end)
            ref = compute_reference(spec, fine_n, t_end)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
            with os.fdopen(fd, "wb") as fh:
                fh.write(encode(ref))
            os.chmod(tmp, 0o644)
            os.replace(tmp, path)
    except CacheCorruption:
        raise
    except OSError as exc:
        raise OSError(f"reference cache {path}: {exc.strerror or exc}") from exc
    return decode(path.read_bytes(), path)
